#include "hsto/symhomology.hpp"

#include <algorithm>
#include <sstream>

#include "hsto/errors.hpp"

namespace hsto {

int EMonomial::degree() const {
    int d = 0;
    for (std::size_t j = 0; j < chain.size(); ++j) d += static_cast<int>(chain[j]) << j;
    return d;
}

bool EMonomial::is_valid() const {
    for (std::size_t j = 0; j < chain.size(); ++j) {
        if (chain[j] == 0) return false;
        if (j > 0 && chain[j] < chain[j - 1]) return false;
    }
    return true;
}

EWord EWord::from_chain(const EMonomial& g) {
    if (!g.is_valid()) throw PreconditionError("chain must be positive and weakly increasing");
    EWord w;
    for (std::size_t j = 0; j < g.chain.size(); ++j) w.subscripts.push_back(g.chain[j] << j);
    return w;
}

EWord EWord::from_subscripts(std::vector<std::uint32_t> s) {
    std::sort(s.begin(), s.end());
    return EWord{std::move(s)};
}

int EWord::degree() const {
    int d = 0;
    for (auto s : subscripts) d += static_cast<int>(s);
    return d;
}

bool EWord::is_generator() const {
    std::uint32_t prev = 0;
    for (std::size_t j = 0; j < subscripts.size(); ++j) {
        std::uint32_t s = subscripts[j];
        std::uint32_t unit = std::uint32_t{1} << j;
        if (s == 0 || s % unit != 0) return false;
        if (s / unit < prev) return false;
        prev = s / unit;
    }
    return true;
}

EMonomial EWord::chain() const {
    if (!is_generator()) throw PreconditionError("o-word " + to_string() + " is not a polynomial generator");
    EMonomial g;
    for (std::size_t j = 0; j < subscripts.size(); ++j) g.chain.push_back(subscripts[j] >> j);
    return g;
}

std::string EWord::to_string() const {
    if (subscripts.empty()) return "[1]";
    std::ostringstream os;
    for (std::size_t j = 0; j < subscripts.size(); ++j) {
        if (j) os << " o ";
        os << 'E' << subscripts[j];
    }
    return os.str();
}

std::uint64_t term_weight(const SymTerm& t) {
    std::uint64_t w = 0;
    for (const auto& f : t) w += f.weight();
    return w;
}

int term_degree(const SymTerm& t) {
    int d = 0;
    for (const auto& f : t) d += f.degree();
    return d;
}

bool term_is_decomposable(const SymTerm& t) { return t.size() >= 2; }

SymClass::SymClass(std::vector<SymTerm> terms) : terms_(std::move(terms)) {
    for (auto& t : terms_) std::sort(t.begin(), t.end());
    std::sort(terms_.begin(), terms_.end());
    std::vector<SymTerm> kept;
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i;
        while (j < terms_.size() && terms_[j] == terms_[i]) ++j;
        if ((j - i) & 1) kept.push_back(terms_[i]);
        i = j;
    }
    terms_ = std::move(kept);
}

SymClass SymClass::generator(const EMonomial& g) { return SymClass({SymTerm{EWord::from_chain(g)}}); }
SymClass SymClass::word(const EWord& w) { return SymClass({SymTerm{w}}); }

bool SymClass::in_polynomial_basis() const {
    for (const auto& t : terms_)
        for (const auto& f : t)
            if (!f.is_generator()) return false;
    return true;
}

std::uint64_t SymClass::weight() const {
    if (terms_.empty()) return 0;
    std::uint64_t w = term_weight(terms_.front());
    for (const auto& t : terms_)
        if (term_weight(t) != w) throw PreconditionError("class mixes weights");
    return w;
}

int SymClass::degree() const {
    if (terms_.empty()) return -1;
    int d = term_degree(terms_.front());
    for (const auto& t : terms_)
        if (term_degree(t) != d) throw PreconditionError("class mixes degrees");
    return d;
}

SymClass& SymClass::operator+=(const SymClass& o) {
    auto all = terms_;
    all.insert(all.end(), o.terms_.begin(), o.terms_.end());
    *this = SymClass(std::move(all));
    return *this;
}

std::string SymClass::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (i) os << " + ";
        if (terms_[i].empty()) os << "1";
        for (std::size_t j = 0; j < terms_[i].size(); ++j) {
            if (j) os << " * ";
            bool paren = terms_[i].size() > 1 && terms_[i][j].length() > 1;
            os << (paren ? "(" : "") << terms_[i][j].to_string() << (paren ? ")" : "");
        }
    }
    return os.str();
}

SymClass juxtapose(const SymClass& a, const SymClass& b) {
    std::vector<SymTerm> out;
    for (const auto& x : a.terms())
        for (const auto& y : b.terms()) {
            SymTerm t = x;
            t.insert(t.end(), y.begin(), y.end());
            out.push_back(std::move(t));
        }
    return SymClass(std::move(out));
}

bool is_admissible(const std::vector<std::uint32_t>& s) {
    for (std::size_t j = 0; j + 1 < s.size(); ++j)
        if (s[j] > 2 * s[j + 1]) return false;
    return true;
}

std::int64_t excess(const std::vector<std::uint32_t>& s) {
    if (s.empty()) return 0;
    std::int64_t e = s[0];
    for (std::size_t j = 1; j < s.size(); ++j) e -= s[j];
    return e;
}

EMonomial dl_to_chain(const std::vector<std::uint32_t>& s) {
    if (s.empty()) return {};
    if (!is_admissible(s)) throw PreconditionError("sequence is not admissible");
    if (excess(s) <= 0) throw PreconditionError("sequence has non-positive excess");
    EMonomial g;
    std::int64_t tail = 0;
    std::vector<std::int64_t> rev;
    for (std::size_t t = s.size(); t-- > 0;) {
        rev.push_back(static_cast<std::int64_t>(s[t]) - tail);
        tail += s[t];
    }
    for (auto it = rev.rbegin(); it != rev.rend(); ++it) {
        if (*it <= 0) throw PreconditionError("sequence does not correspond to a generator");
        g.chain.push_back(static_cast<std::uint32_t>(*it));
    }
    if (!g.is_valid()) throw PreconditionError("sequence does not correspond to a generator");
    return g;
}

std::vector<std::uint32_t> chain_to_dl(const EMonomial& g) {
    if (!g.is_valid()) throw PreconditionError("chain must be positive and weakly increasing");
    std::vector<std::uint32_t> s(g.chain.size());
    std::uint64_t tail = 0;
    for (std::size_t t = g.chain.size(); t-- > 0;) {
        s[t] = static_cast<std::uint32_t>(g.chain[t] + tail);
        tail += s[t];
    }
    return s;
}

std::vector<EMonomial> chains_of_degree(int d, std::size_t k) {
    std::vector<EMonomial> out;
    if (d < 0) return out;
    if (k == 0) {
        if (d == 0) out.push_back({});
        return out;
    }
    EMonomial cur;
    cur.chain.assign(k, 0);
    auto rec = [&](auto&& self, std::size_t j, std::uint32_t lo, int left) -> void {
        if (j == k) {
            if (left == 0) out.push_back(cur);
            return;
        }
        // remaining positions j..k-1 need at least lo * (2^j + ... + 2^{k-1})
        for (std::uint32_t i = lo;; ++i) {
            std::int64_t need = static_cast<std::int64_t>(i) * ((std::int64_t{1} << k) - (std::int64_t{1} << j));
            if (need > left) break;
            cur.chain[j] = i;
            self(self, j + 1, i, left - (static_cast<int>(i) << j));
        }
    };
    rec(rec, 0, 1, d);
    return out;
}

std::size_t count_basis(int d, std::uint64_t weight) {
    if (weight == 0 || (weight & (weight - 1)) != 0) return 0;
    std::size_t k = 0;
    while ((std::uint64_t{1} << k) < weight) ++k;
    return chains_of_degree(d, k).size();
}

std::size_t count_admissible(int d, std::size_t k) {
    if (d < 0) return 0;
    if (k == 0) return d == 0 ? 1 : 0;
    std::size_t count = 0;
    std::vector<std::uint32_t> s(k, 0);
    auto rec = [&](auto&& self, std::size_t j, int left) -> void {
        if (j == k) {
            if (left == 0 && is_admissible(s) && excess(s) > 0) ++count;
            return;
        }
        for (int v = 0; v <= left; ++v) {
            s[j] = static_cast<std::uint32_t>(v);
            self(self, j + 1, left - v);
        }
    };
    rec(rec, 0, d);
    return count;
}

EWord iota_push(const DPMonomial& m) { return EWord::from_subscripts(m); }

DPMonomial iota_preimage(const EWord& w) { return w.subscripts; }

} // namespace hsto
