#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hsto/gradedalg.hpp"

namespace hsto {

// A weakly increasing sequence i_1 <= ... <= i_k of positive integers, naming the
// polynomial generator E_{i_1} o E_{2 i_2} o ... o E_{2^{k-1} i_k} of H_*(B Sigma_{2^k}).
// The empty chain is [1], the point class of weight 1.
struct EMonomial {
    std::vector<std::uint32_t> chain;

    std::uint64_t weight() const { return std::uint64_t{1} << chain.size(); }
    int degree() const;
    bool is_valid() const;
    auto operator<=>(const EMonomial&) const = default;
};

// A o-word E_{s_1} o ... o E_{s_k}, subscripts sorted ascending, s_j >= 0.
// Weight 2^k, degree sum s_j. E_0 is the point class of weight 2.
struct EWord {
    std::vector<std::uint32_t> subscripts;

    static EWord unit() { return {}; }
    static EWord from_chain(const EMonomial& g);
    static EWord from_subscripts(std::vector<std::uint32_t> s);

    std::size_t length() const { return subscripts.size(); }
    std::uint64_t weight() const { return std::uint64_t{1} << subscripts.size(); }
    int degree() const;
    // True iff the word is one of the polynomial generators.
    bool is_generator() const;
    // Throws PreconditionError for words that are not generators.
    EMonomial chain() const;
    std::string to_string() const;
    auto operator<=>(const EWord&) const = default;
};

// Juxtaposition monomial: sorted multiset of words. Empty = ring unit (weight 0).
using SymTerm = std::vector<EWord>;

std::uint64_t term_weight(const SymTerm& t);
int term_degree(const SymTerm& t);
// At least two factors.
bool term_is_decomposable(const SymTerm& t);

class SymClass {
public:
    SymClass() = default;
    explicit SymClass(std::vector<SymTerm> terms);
    static SymClass generator(const EMonomial& g);
    static SymClass word(const EWord& w);

    const std::vector<SymTerm>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    // Every factor of every term is a polynomial generator.
    bool in_polynomial_basis() const;
    // Common weight of all terms; throws if mixed; 0 for the zero class.
    std::uint64_t weight() const;
    int degree() const;

    SymClass& operator+=(const SymClass& o);
    friend SymClass operator+(SymClass a, const SymClass& b) { return a += b; }
    friend bool operator==(const SymClass&, const SymClass&) = default;
    std::string to_string() const;

private:
    std::vector<SymTerm> terms_;
};

// Juxtaposition product (the product induced by Sigma_n x Sigma_m -> Sigma_{n+m}).
SymClass juxtapose(const SymClass& a, const SymClass& b);

// Dyer-Lashof sequences (s_1, ..., s_k) acting on [1].
bool is_admissible(const std::vector<std::uint32_t>& s);
std::int64_t excess(const std::vector<std::uint32_t>& s);
EMonomial dl_to_chain(const std::vector<std::uint32_t>& s);
std::vector<std::uint32_t> chain_to_dl(const EMonomial& g);

// Generators of weight 2^k and degree d, in lexicographic order of chains.
std::vector<EMonomial> chains_of_degree(int d, std::size_t k);
// Number of polynomial generators in degree d and the given weight (0 unless weight is 2^k).
std::size_t count_basis(int d, std::uint64_t weight);
// Number of admissible sequences of length k, degree d, positive excess.
std::size_t count_admissible(int d, std::size_t k);

// x_1^[n_1] ... x_k^[n_k] -> E_{n_1} o ... o E_{n_k}.
EWord iota_push(const DPMonomial& m);
// The monomial x_1^[s_1] ... x_k^[s_k] hitting the word.
DPMonomial iota_preimage(const EWord& w);

} // namespace hsto
