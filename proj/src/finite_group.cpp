#include "hsto/finite_group.hpp"

#include <algorithm>

#include "hsto/errors.hpp"

namespace hsto {

FiniteGroupTable::FiniteGroupTable(std::size_t order, std::vector<std::uint32_t> table, std::string name)
    : order_(order), table_(std::move(table)), name_(std::move(name)) {
    if (order_ == 0 || table_.size() != order_ * order_) throw PreconditionError(name_ + ": table has wrong size");
    for (auto v : table_)
        if (v >= order_) throw PreconditionError(name_ + ": table not closed");

    bool found = false;
    for (std::uint32_t e = 0; e < order_ && !found; ++e) {
        bool ok = true;
        for (std::uint32_t a = 0; a < order_ && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
        if (ok) { identity_ = e; found = true; }
    }
    if (!found) throw PreconditionError(name_ + ": no identity");

    inverse_.assign(order_, 0);
    for (std::uint32_t a = 0; a < order_; ++a) {
        std::uint32_t b = 0;
        while (b < order_ && mul(a, b) != identity_) ++b;
        if (b == order_ || mul(b, a) != identity_) throw PreconditionError(name_ + ": element without inverse");
        inverse_[a] = b;
    }

    if (order_ <= 256)
        for (std::uint32_t a = 0; a < order_; ++a)
            for (std::uint32_t b = 0; b < order_; ++b)
                for (std::uint32_t c = 0; c < order_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw PreconditionError(name_ + ": not associative");
}

FiniteGroupTable FiniteGroupTable::trivial() { return FiniteGroupTable(1, {0}, "1"); }

FiniteGroupTable FiniteGroupTable::z2_power(unsigned l) {
    std::size_t n = std::size_t{1} << l;
    std::vector<std::uint32_t> t(n * n);
    for (std::uint32_t a = 0; a < n; ++a)
        for (std::uint32_t b = 0; b < n; ++b) t[a * n + b] = a ^ b;
    return FiniteGroupTable(n, std::move(t), l == 1 ? "Z/2" : "(Z/2)^" + std::to_string(l));
}

FiniteGroupTable FiniteGroupTable::dihedral(unsigned n) {
    const std::uint32_t m = 2 * n + 1;
    const std::size_t ord = 2 * m;
    std::vector<std::uint32_t> t(ord * ord);
    for (std::uint32_t x = 0; x < ord; ++x)
        for (std::uint32_t y = 0; y < ord; ++y) {
            std::uint32_t i = x % m, j = x / m, a = y % m, b = y / m;
            // r^i s^j r^a s^b = r^{i +- a} s^{j+b}
            std::uint32_t ri = j ? (i + m - a) % m : (i + a) % m;
            t[x * ord + y] = ri + m * ((j + b) % 2);
        }
    return FiniteGroupTable(ord, std::move(t), "D" + std::to_string(ord));
}

FiniteGroupTable FiniteGroupTable::direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b) {
    const std::size_t na = a.order(), nb = b.order(), n = na * nb;
    std::vector<std::uint32_t> t(n * n);
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            t[x * n + y] = a.mul(x % na, y % na) + static_cast<std::uint32_t>(na) * b.mul(x / na, y / na);
    return FiniteGroupTable(n, std::move(t), a.name() + " x " + b.name());
}

std::uint32_t FiniteGroupTable::element_order(std::uint32_t a) const {
    std::uint32_t k = 1;
    for (std::uint32_t x = a; x != identity_; x = mul(x, a)) ++k;
    return k;
}

std::vector<std::uint32_t> FiniteGroupTable::generated_subgroup(const std::vector<std::uint32_t>& gens) const {
    std::vector<bool> in(order_, false);
    std::vector<std::uint32_t> elems{identity_};
    in[identity_] = true;
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (auto g : gens) {
            auto y = mul(elems[i], g);
            if (!in[y]) { in[y] = true; elems.push_back(y); }
        }
    std::sort(elems.begin(), elems.end());
    return elems;
}

bool FiniteGroupTable::is_subgroup(const std::vector<std::uint32_t>& elems) const {
    std::vector<bool> in(order_, false);
    for (auto e : elems) {
        if (e >= order_) return false;
        in[e] = true;
    }
    if (!in[identity_]) return false;
    for (auto a : elems)
        for (auto b : elems)
            if (!in[mul(a, b)]) return false;
    return true;
}

FiniteAction::FiniteAction(FiniteGroupTable group, std::size_t set_size, std::vector<std::uint32_t> act)
    : group_(std::move(group)), set_size_(set_size), act_(std::move(act)) {
    const std::size_t n = group_.order();
    if (act_.size() != n * set_size_) throw PreconditionError("action table has wrong size");
    for (std::uint32_t x = 0; x < set_size_; ++x)
        if (apply(group_.identity(), x) != x) throw PreconditionError("identity does not act trivially");
    for (std::uint32_t g = 0; g < n; ++g)
        for (std::uint32_t h = 0; h < n; ++h)
            for (std::uint32_t x = 0; x < set_size_; ++x)
                if (apply(group_.mul(g, h), x) != apply(g, apply(h, x)))
                    throw PreconditionError("action is not compatible with the product");
}

std::vector<Orbit> action_orbits(const FiniteAction& action) {
    std::vector<Orbit> out;
    std::vector<bool> seen(action.set_size(), false);
    const auto& g = action.group();
    for (std::uint32_t x = 0; x < action.set_size(); ++x) {
        if (seen[x]) continue;
        Orbit o;
        o.representative = x;
        for (std::uint32_t h = 0; h < g.order(); ++h) {
            auto y = action.apply(h, x);
            if (!seen[y]) { seen[y] = true; ++o.size; }
            if (y == x) o.stabilizer.push_back(h);
        }
        out.push_back(std::move(o));
    }
    return out;
}

namespace {

std::size_t ipow(std::size_t b, std::size_t e) {
    std::size_t r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<std::uint32_t> decode(std::size_t x, std::size_t base, std::size_t len) {
    std::vector<std::uint32_t> d(len);
    for (std::size_t i = 0; i < len; ++i) {
        d[i] = static_cast<std::uint32_t>(x % base);
        x /= base;
    }
    return d;
}

std::uint32_t encode(const std::vector<std::uint32_t>& d, std::size_t base) {
    std::size_t x = 0;
    for (std::size_t i = d.size(); i-- > 0;) x = x * base + d[i];
    return static_cast<std::uint32_t>(x);
}

} // namespace

FiniteAction string_action(const FiniteGroupTable& g, std::size_t k) {
    const std::size_t n = g.order(), nv = std::size_t{1} << k;
    auto gamma = FiniteGroupTable::direct_product(FiniteGroupTable::direct_product(FiniteGroupTable::z2_power(static_cast<unsigned>(k)), g), g);
    const std::size_t points = ipow(n, nv);
    std::vector<std::uint32_t> act(gamma.order() * points);
    for (std::uint32_t e = 0; e < gamma.order(); ++e) {
        std::uint32_t u = static_cast<std::uint32_t>(e % nv);
        std::uint32_t gp = static_cast<std::uint32_t>((e / nv) % n);
        std::uint32_t gq = static_cast<std::uint32_t>(e / (nv * n));
        for (std::uint32_t x = 0; x < points; ++x) {
            auto f = decode(x, n, nv);
            std::vector<std::uint32_t> out(nv);
            for (std::uint32_t v = 0; v < nv; ++v) out[v] = g.mul(g.mul(gp, f[u ^ v]), g.inverse(gq));
            act[e * points + x] = encode(out, n);
        }
    }
    return FiniteAction(std::move(gamma), points, std::move(act));
}

FiniteAction coset_string_action(const FiniteGroupTable& g, std::size_t k) {
    const std::size_t n = g.order(), nv = std::size_t{1} << k;
    auto gamma = FiniteGroupTable::direct_product(FiniteGroupTable::z2_power(static_cast<unsigned>(k)), g);
    const std::size_t points = ipow(n, nv - 1);
    std::vector<std::uint32_t> act(gamma.order() * points);
    for (std::uint32_t e = 0; e < gamma.order(); ++e) {
        std::uint32_t u = static_cast<std::uint32_t>(e % nv);
        std::uint32_t gp = static_cast<std::uint32_t>(e / nv);
        for (std::uint32_t x = 0; x < points; ++x) {
            auto tail = decode(x, n, nv - 1);
            std::vector<std::uint32_t> f(nv);
            f[0] = g.identity();
            for (std::size_t v = 1; v < nv; ++v) f[v] = tail[v - 1];
            std::vector<std::uint32_t> moved(nv);
            for (std::uint32_t v = 0; v < nv; ++v) moved[v] = g.mul(gp, f[u ^ v]);
            // renormalize so the value at 0 is e
            std::uint32_t fix = g.inverse(moved[0]);
            std::vector<std::uint32_t> t(nv - 1);
            for (std::size_t v = 1; v < nv; ++v) t[v - 1] = g.mul(moved[v], fix);
            act[e * points + x] = encode(t, n);
        }
    }
    return FiniteAction(std::move(gamma), points, std::move(act));
}

} // namespace hsto
