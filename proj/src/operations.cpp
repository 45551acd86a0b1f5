#include "hsto/operations.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hsto/errors.hpp"

namespace hsto {

namespace {

using Kind = GroupDescriptor::Kind;

std::uint64_t a_count_rec(std::vector<std::uint32_t>& rows, const std::vector<std::uint32_t>& e, std::size_t col) {
    const std::size_t k = rows.size();
    if (col == e.size())
        return std::all_of(rows.begin(), rows.end(), [](std::uint32_t r) { return r == 0; }) ? 1 : 0;
    std::vector<std::uint32_t> bits;
    for (std::uint32_t b = 0; b < 32; ++b)
        if ((e[col] >> b) & 1u) bits.push_back(std::uint32_t{1} << b);
    if (bits.size() < k) return 0;
    // assign each bit of e[col] to a row, every row nonempty
    std::uint64_t total = 0;
    std::vector<std::uint32_t> cell(k, 0);
    auto rec = [&](auto&& self, std::size_t bi) -> void {
        if (bi == bits.size()) {
            for (std::size_t r = 0; r < k; ++r)
                if (cell[r] == 0 || cell[r] > rows[r]) return;
            for (std::size_t r = 0; r < k; ++r) rows[r] -= cell[r];
            total += a_count_rec(rows, e, col + 1);
            for (std::size_t r = 0; r < k; ++r) rows[r] += cell[r];
            return;
        }
        for (std::size_t r = 0; r < k; ++r) {
            cell[r] += bits[bi];
            self(self, bi + 1);
            cell[r] -= bits[bi];
        }
    };
    rec(rec, 0);
    return total;
}

void check_supported(const GroupDescriptor& g, std::size_t k) {
    for (const auto& f : g.factors()) {
        if (f.kind() == Kind::Torus && k >= 3)
            throw UnsupportedError("no closed form available for " + f.to_string() + " with k = " + std::to_string(k));
        if (f.kind() == Kind::SU2 && k >= 2)
            throw UnsupportedError("no closed form available for su2 with k = " + std::to_string(k));
    }
}

// Atomic factors for the product rule: T^l splits into circles.
std::vector<GroupDescriptor> atoms(const GroupDescriptor& g) {
    std::vector<GroupDescriptor> out;
    for (const auto& f : g.factors()) {
        if (f.kind() == Kind::Torus)
            for (unsigned i = 0; i < f.param(); ++i) out.push_back(GroupDescriptor::torus(1));
        else
            out.push_back(f);
    }
    return out;
}

std::size_t slot_count(const GroupDescriptor& f) { return f.slots().size(); }

// m * b in a divided power algebra; appends nothing when the coefficient is even.
void push_product(const DPMonomial& m, const DPMonomial& b, std::vector<DPMonomial>& out) {
    DPMonomial p;
    if (dp_multiply_monomials(m, b, p)) out.push_back(std::move(p));
}

void alpha_z2_power(unsigned l, const DPMonomial& a, const DPMonomial& b, std::vector<DPMonomial>& out) {
    const std::size_t k = a.size();
    std::uint32_t total = std::accumulate(a.begin(), a.end(), std::uint32_t{0});
    if (l == 0) {
        if (total == 0) out.push_back(b);
        return;
    }
    if (std::any_of(a.begin(), a.end(), [](std::uint32_t n) { return n == 0; })) return;
    std::vector<std::uint32_t> e(l, 0);
    auto rec = [&](auto&& self, std::size_t d, std::uint32_t left) -> void {
        if (d + 1 == l) {
            if (left < k) return;
            e[d] = left;
            if (a_count(a, e, CountMode::Parity)) push_product(e, b, out);
            return;
        }
        for (std::uint32_t v = static_cast<std::uint32_t>(k); v + k * (l - d - 1) <= left; ++v) {
            e[d] = v;
            self(self, d + 1, left - v);
        }
    };
    rec(rec, 0, total);
}

void alpha_atomic(const GroupDescriptor& f, const DPMonomial& a, const DPMonomial& b, std::vector<DPMonomial>& out) {
    const std::size_t k = a.size();
    if (k == 0) {
        out.push_back(b);
        return;
    }
    switch (f.kind()) {
    case Kind::Z2Power:
        if (f.param() != 1) {
            alpha_z2_power(f.param(), a, b, out);
            return;
        }
        [[fallthrough]];
    case Kind::Dihedral: {
        std::vector<std::uint64_t> parts(a.begin(), a.end());
        if (std::any_of(a.begin(), a.end(), [](std::uint32_t n) { return n == 0; })) return;
        if (!multinomial_parity(parts)) return;
        push_product({std::accumulate(a.begin(), a.end(), std::uint32_t{0})}, b, out);
        return;
    }
    case Kind::Torus: {
        std::uint32_t top = 0;
        if (k == 1) {
            top = a[0] + 1;
        } else {
            // k == 2
            if (binom_parity(a[0] + a[1] + 2, a[0] + 1)) return;
            top = a[0] + a[1] + 3;
        }
        if (top & 1u) return;
        push_product({top / 2}, b, out);
        return;
    }
    case Kind::SU2: {
        DPClass lifted = DPClass::monomial(v_generators(1), {a[0] + 3});
        for (auto m : su2_act(lifted, su2_unit(b[0])).ms) out.push_back({m});
        return;
    }
    case Kind::Product: break;
    }
    throw PreconditionError("alpha_atomic: unexpected group");
}

// Left-nested product rule over fs[0..r).
void alpha_multi(const std::vector<GroupDescriptor>& fs, const std::vector<std::size_t>& offsets, std::size_t r,
                 const DPMonomial& a, const DPMonomial& b, std::vector<DPMonomial>& out) {
    if (r == 1) {
        alpha_atomic(fs[0], a, b, out);
        return;
    }
    const std::size_t split = offsets[r - 1];
    DPMonomial b_pre(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(split));
    DPMonomial b_last(b.begin() + static_cast<std::ptrdiff_t>(split), b.begin() + static_cast<std::ptrdiff_t>(offsets[r]));
    std::vector<DPMonomial> left, right;
    for (const auto& [a1, a2] : dp_coproduct(a)) {
        left.clear();
        alpha_multi(fs, offsets, r - 1, a1, b_pre, left);
        if (left.empty()) continue;
        right.clear();
        alpha_atomic(fs[r - 1], a2, b_last, right);
        for (const auto& x : left)
            for (const auto& y : right) {
                DPMonomial t = x;
                t.insert(t.end(), y.begin(), y.end());
                out.push_back(std::move(t));
            }
    }
}

void check_alpha_inputs(const GroupDescriptor& g, std::size_t k, const DPClass& a, const CoefficientClass& b) {
    if (a.generators().size() != k) throw PreconditionError("alpha: class must live over k generators");
    for (const auto& gen : a.generators().all())
        if (gen.degree != 1) throw PreconditionError("alpha: generators of H_*(BV_k) have degree 1");
    if (!(b.group() == g)) throw PreconditionError("alpha: coefficient class lives over " + b.group().to_string());
}

} // namespace

std::uint64_t a_count(const std::vector<std::uint32_t>& n, const std::vector<std::uint32_t>& e, CountMode mode) {
    std::uint64_t rs = std::accumulate(n.begin(), n.end(), std::uint64_t{0});
    std::uint64_t cs = std::accumulate(e.begin(), e.end(), std::uint64_t{0});
    if (rs != cs) return 0;
    std::vector<std::uint32_t> rows = n;
    std::uint64_t c = a_count_rec(rows, e, 0);
    return mode == CountMode::Parity ? (c & 1u) : c;
}

GeneratorSet v_generators(std::size_t k) { return GeneratorSet::standard("x", k, 1); }

CoefficientClass alpha(const GroupDescriptor& g, std::size_t k, const DPClass& a, const CoefficientClass& b) {
    check_alpha_inputs(g, k, a, b);
    check_supported(g, k);
    auto fs = atoms(g);
    std::vector<std::size_t> offsets{0};
    for (const auto& f : fs) offsets.push_back(offsets.back() + slot_count(f));
    std::vector<DPMonomial> out;
    for (const auto& am : a.terms())
        for (const auto& bm : b.terms()) alpha_multi(fs, offsets, fs.size(), am, bm, out);
    return CoefficientClass(g, std::move(out));
}

CoefficientClass alpha_z2_brute(unsigned l, std::size_t k, const DPClass& a, const CoefficientClass& b) {
    auto g = GroupDescriptor::z2_power(l);
    check_alpha_inputs(g, k, a, b);
    const std::size_t cells = l * k;
    if (cells >= 24) throw PreconditionError("alpha_z2_brute: too many linear maps");
    DPClass bd = b.as_dp();
    DPClass acc(g.slots());
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cells); ++mask) {
        F2Matrix km(l, k);
        for (std::size_t c = 0; c < cells; ++c)
            if ((mask >> c) & 1u) km.set(c / k, c % k);
        acc += dp_multiply(linear_push(km, a, g.slots()), bd);
    }
    return CoefficientClass::from_dp(g, acc);
}

CoefficientClass phi_sigma(const GroupDescriptor& g, std::uint64_t n, const SymClass& a, const CoefficientClass& b) {
    if (n == 0) throw PreconditionError("phi_sigma: n must be positive");
    if (!(b.group() == g)) throw PreconditionError("phi_sigma: coefficient class lives over " + b.group().to_string());
    for (const auto& t : a.terms())
        if (term_weight(t) != n)
            throw PreconditionError("phi_sigma: term of weight " + std::to_string(term_weight(t)) +
                                    " in H_*(B Sigma_" + std::to_string(n) + ")");
    if (g.is_finite() && g.order() % 2 == 1)
        throw UnsupportedError("phi_sigma: finite group of odd order " + std::to_string(g.order()));
    CoefficientClass out(g);
    if ((n & (n - 1)) != 0) return out;
    std::size_t k = 0;
    while ((std::uint64_t{1} << k) < n) ++k;
    auto xs = v_generators(k);
    for (const auto& t : a.terms()) {
        if (term_is_decomposable(t)) continue;
        out += alpha(g, k, DPClass::monomial(xs, iota_preimage(t.front())), b);
    }
    return out;
}

CoefficientClass composite_op(const GroupDescriptor& g, const std::vector<OpFactor>& factors, const CoefficientClass& b) {
    CoefficientClass cur = b;
    for (auto it = factors.rbegin(); it != factors.rend(); ++it) {
        cur = phi_sigma(g, it->n, it->a, cur);
        if (cur.is_zero()) break;
    }
    return cur;
}

std::uint64_t total_rank_shift(const std::vector<OpFactor>& factors) {
    std::uint64_t s = 0;
    for (const auto& f : factors) {
        if (f.n == 0) throw PreconditionError("factor with n = 0");
        s += f.n - 1;
    }
    return s;
}

int default_degree_bound(const GroupDescriptor& g, std::size_t k, const DPClass& a) {
    int da = std::max(a.degree(), 0);
    return da + g.dim() * (1 << k) + 8;
}

WitnessResult nontrivial_witness(const GroupDescriptor& g, std::size_t k, const DPClass& a, std::optional<int> degree_bound) {
    check_supported(g, k);
    WitnessResult res;
    res.degree_bound = degree_bound ? *degree_bound : default_degree_bound(g, k, a);
    if (a.is_zero()) {
        res.certified_trivial = true;
        return res;
    }

    auto found = [&](CoefficientClass b) {
        res.output = alpha(g, k, a, b);
        res.witness = std::move(b);
        return res;
    };

    // closed-form detectors for single monomials
    if (a.terms().size() == 1 && k >= 1) {
        const auto& m = a.terms().front();
        const auto kind = g.kind();
        std::optional<bool> nonzero;
        CoefficientClass unit = CoefficientClass::one(g);
        if ((kind == Kind::Z2Power && g.param() == 1) || kind == Kind::Dihedral) {
            std::vector<std::uint64_t> parts(m.begin(), m.end());
            nonzero = std::all_of(m.begin(), m.end(), [](std::uint32_t x) { return x > 0; }) && multinomial_parity(parts);
        } else if (kind == Kind::SU2 && k == 1) {
            nonzero = m[0] % 4 == 1;
        } else if (kind == Kind::Torus && g.param() == 1 && k == 1) {
            nonzero = m[0] % 2 == 1;
        } else if (kind == Kind::Torus && g.param() == 1 && k == 2) {
            nonzero = !binom_parity(m[0] + m[1] + 2, m[0] + 1) && (m[0] + m[1] + 3) % 2 == 0;
        }
        if (nonzero) {
            res.fast_path = true;
            if (*nonzero) return found(unit);
            res.certified_trivial = true;
            return res;
        }
    }

    for (int d = 0; d <= res.degree_bound; ++d)
        for (auto& b : coefficient_basis(g, d))
            if (!alpha(g, k, a, b).is_zero()) return found(std::move(b));
    return res;
}

} // namespace hsto
