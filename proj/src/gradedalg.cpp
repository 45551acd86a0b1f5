#include "hsto/gradedalg.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

#include "hsto/errors.hpp"

namespace hsto {

GeneratorSet::GeneratorSet(std::vector<Generator> gens) : gens_(std::move(gens)) {
    std::unordered_set<std::string> seen;
    for (const auto& g : gens_) {
        if (g.name.empty()) throw PreconditionError("generator with empty name");
        if (!seen.insert(g.name).second) throw PreconditionError("duplicate generator name: " + g.name);
        if (g.degree < 1) throw PreconditionError("generator degree must be positive: " + g.name);
    }
}

GeneratorSet GeneratorSet::standard(const std::string& prefix, std::size_t n, int degree, bool bare_single) {
    std::vector<Generator> gens;
    for (std::size_t i = 1; i <= n; ++i)
        gens.push_back({(bare_single && n == 1) ? prefix : prefix + std::to_string(i), degree});
    return GeneratorSet(std::move(gens));
}

int GeneratorSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].name == name) return static_cast<int>(i);
    return -1;
}

int monomial_degree(const GeneratorSet& gens, const DPMonomial& m) {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += gens[i].degree * static_cast<int>(m[i]);
    return d;
}

void canonicalize_terms(std::vector<DPMonomial>& terms) {
    std::sort(terms.begin(), terms.end());
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms.size();) {
        std::size_t j = i;
        while (j < terms.size() && terms[j] == terms[i]) ++j;
        if ((j - i) & 1) {
            if (out != i) terms[out] = std::move(terms[i]);
            ++out;
        }
        i = j;
    }
    terms.resize(out);
}

DPClass::DPClass(GeneratorSet gens, std::vector<DPMonomial> terms)
    : gens_(std::move(gens)), terms_(std::move(terms)) {
    for (const auto& t : terms_)
        if (t.size() != gens_.size()) throw PreconditionError("monomial length does not match generator set");
    canonicalize_terms(terms_);
}

DPClass DPClass::one(const GeneratorSet& gens) {
    return DPClass(gens, {DPMonomial(gens.size(), 0)});
}

DPClass DPClass::monomial(const GeneratorSet& gens, DPMonomial m) {
    return DPClass(gens, {std::move(m)});
}

bool DPClass::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = monomial_degree(gens_, terms_.front());
    return std::all_of(terms_.begin(), terms_.end(),
                       [&](const DPMonomial& m) { return monomial_degree(gens_, m) == d; });
}

int DPClass::degree() const {
    if (terms_.empty()) return -1;
    if (!is_homogeneous()) throw PreconditionError("class is not homogeneous");
    return monomial_degree(gens_, terms_.front());
}

DPClass& DPClass::operator+=(const DPClass& o) {
    if (!(o.gens_ == gens_)) throw PreconditionError("sum of classes over different generators");
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    canonicalize_terms(terms_);
    return *this;
}

std::string DPClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first_term = true;
    for (const auto& m : terms_) {
        if (!first_term) os << " + ";
        first_term = false;
        bool any = false;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (any) os << ' ';
            os << gens_[i].name << "^[" << m[i] << ']';
            any = true;
        }
        if (!any) os << '1';
    }
    return os.str();
}

bool dp_multiply_monomials(const DPMonomial& a, const DPMonomial& b, DPMonomial& out) {
    out.resize(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        std::uint64_t s = std::uint64_t{a[i]} + b[i];
        if (!binom_parity(s, b[i])) return false;
        out[i] = static_cast<std::uint32_t>(s);
    }
    return true;
}

DPClass dp_multiply(const DPClass& a, const DPClass& b) {
    if (!(a.generators() == b.generators())) throw PreconditionError("product of classes over different generators");
    std::vector<DPMonomial> raw;
    DPMonomial m;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            if (dp_multiply_monomials(x, y, m)) raw.push_back(m);
    return DPClass(a.generators(), std::move(raw));
}

std::vector<std::pair<DPMonomial, DPMonomial>> dp_coproduct(const DPMonomial& m) {
    std::vector<std::pair<DPMonomial, DPMonomial>> out;
    DPMonomial left(m.size(), 0);
    // odometer over 0 <= left_i <= m_i
    while (true) {
        DPMonomial right(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) right[i] = m[i] - left[i];
        out.emplace_back(left, std::move(right));
        std::size_t i = 0;
        while (i < m.size() && left[i] == m[i]) left[i++] = 0;
        if (i == m.size()) break;
        ++left[i];
    }
    return out;
}

namespace {

// (t_{i_1} + ... + t_{i_r})^[n] as a list of monomials (all with coefficient 1).
void expand_sum_power(const std::vector<std::size_t>& idx, std::uint32_t n, std::size_t l,
                      std::vector<DPMonomial>& out) {
    out.clear();
    if (idx.empty()) {
        if (n == 0) out.emplace_back(l, 0);
        return;
    }
    DPMonomial cur(l, 0);
    auto rec = [&](auto&& self, std::size_t pos, std::uint32_t left) -> void {
        if (pos + 1 == idx.size()) {
            cur[idx[pos]] = left;
            out.push_back(cur);
            cur[idx[pos]] = 0;
            return;
        }
        for (std::uint32_t c = 0; c <= left; ++c) {
            cur[idx[pos]] = c;
            self(self, pos + 1, left - c);
        }
        cur[idx[pos]] = 0;
    };
    rec(rec, 0, n);
}

} // namespace

DPClass linear_push(const F2Matrix& k, const DPClass& a, const GeneratorSet& target) {
    const std::size_t l = k.rows();
    if (k.cols() != a.generators().size()) throw PreconditionError("linear_push: matrix columns must match source generators");
    if (target.size() != l) throw PreconditionError("linear_push: matrix rows must match target generators");
    for (std::size_t j = 0; j < a.generators().size(); ++j)
        if (a.generators()[j].degree != 1) throw PreconditionError("linear_push: source generators must have degree 1");
    for (std::size_t i = 0; i < l; ++i)
        if (target[i].degree != 1) throw PreconditionError("linear_push: target generators must have degree 1");

    std::vector<std::vector<std::size_t>> support(k.cols());
    for (std::size_t j = 0; j < k.cols(); ++j)
        for (std::size_t i = 0; i < l; ++i)
            if (k.get(i, j)) support[j].push_back(i);

    std::vector<DPMonomial> result;
    std::vector<DPMonomial> piece, acc, next;
    DPMonomial prod;
    for (const auto& m : a.terms()) {
        acc.assign(1, DPMonomial(l, 0));
        for (std::size_t j = 0; j < m.size() && !acc.empty(); ++j) {
            if (m[j] == 0) continue;
            expand_sum_power(support[j], m[j], l, piece);
            next.clear();
            for (const auto& x : acc)
                for (const auto& y : piece)
                    if (dp_multiply_monomials(x, y, prod)) next.push_back(prod);
            canonicalize_terms(next);
            acc.swap(next);
        }
        result.insert(result.end(), acc.begin(), acc.end());
    }
    return DPClass(target, std::move(result));
}

DPClass linear_push(const F2Matrix& k, const DPClass& a) {
    return linear_push(k, a, GeneratorSet::standard("t", k.rows(), 1));
}

DPClass beta_push(const DPClass& a, const GeneratorSet& target) {
    if (target.size() != a.generators().size()) throw PreconditionError("beta_push: generator count mismatch");
    std::vector<DPMonomial> out;
    for (const auto& m : a.terms()) {
        if (std::any_of(m.begin(), m.end(), [](std::uint32_t e) { return e & 1; })) continue;
        DPMonomial h(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) h[i] = m[i] / 2;
        out.push_back(std::move(h));
    }
    return DPClass(target, std::move(out));
}

DPClass beta_push(const DPClass& a) {
    return beta_push(a, GeneratorSet::standard("y", a.generators().size(), 2, true));
}

std::vector<DPMonomial> monomials_of_degree(const GeneratorSet& gens, int d) {
    std::vector<DPMonomial> out;
    if (d < 0) return out;
    DPMonomial cur(gens.size(), 0);
    auto rec = [&](auto&& self, std::size_t pos, int left) -> void {
        if (pos == gens.size()) {
            if (left == 0) out.push_back(cur);
            return;
        }
        int deg = gens[pos].degree;
        for (int e = 0; e * deg <= left; ++e) {
            cur[pos] = static_cast<std::uint32_t>(e);
            self(self, pos + 1, left - e * deg);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, d);
    return out;
}

SU2Class su2_unit(std::uint32_t m) { return SU2Class{{m}}; }

SU2Class su2_act(const DPClass& a, const SU2Class& b) {
    if (a.generators().size() != 1 || a.generators()[0].degree != 1)
        throw PreconditionError("su2_act: acting class must live in H_*(BV_1)");
    std::vector<DPMonomial> raw;
    DPMonomial prod;
    for (const auto& x : a.terms())
        for (auto m : b.ms)
            if (dp_multiply_monomials(x, DPMonomial{4 * m}, prod) && prod[0] % 4 == 0)
                raw.push_back(prod);
    canonicalize_terms(raw);
    SU2Class out;
    for (const auto& r : raw) out.ms.push_back(r[0] / 4);
    return out;
}

} // namespace hsto
