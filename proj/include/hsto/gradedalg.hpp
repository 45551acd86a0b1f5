#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hsto/f2core.hpp"

namespace hsto {

struct Generator {
    std::string name;
    int degree = 1;
    friend bool operator==(const Generator&, const Generator&) = default;
};

// Ordered list of divided power generators. Position i is exponent slot i of a monomial.
class GeneratorSet {
public:
    GeneratorSet() = default;
    explicit GeneratorSet(std::vector<Generator> gens);
    // prefix1..prefixN, or just prefix when n == 1 and bare_single is set.
    static GeneratorSet standard(const std::string& prefix, std::size_t n, int degree, bool bare_single = false);

    std::size_t size() const { return gens_.size(); }
    const Generator& operator[](std::size_t i) const { return gens_[i]; }
    const std::vector<Generator>& all() const { return gens_; }
    // -1 if absent.
    int index_of(const std::string& name) const;

    friend bool operator==(const GeneratorSet&, const GeneratorSet&) = default;

private:
    std::vector<Generator> gens_;
};

// Exponent vector, one entry per generator.
using DPMonomial = std::vector<std::uint32_t>;

int monomial_degree(const GeneratorSet& gens, const DPMonomial& m);

// Sorts and cancels repeated monomials in pairs.
void canonicalize_terms(std::vector<DPMonomial>& terms);

// An F2 combination of divided power monomials.
class DPClass {
public:
    DPClass() = default;
    explicit DPClass(GeneratorSet gens) : gens_(std::move(gens)) {}
    DPClass(GeneratorSet gens, std::vector<DPMonomial> terms);

    static DPClass one(const GeneratorSet& gens);
    static DPClass monomial(const GeneratorSet& gens, DPMonomial m);

    const GeneratorSet& generators() const { return gens_; }
    const std::vector<DPMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_homogeneous() const;
    // Degree of a homogeneous nonzero class; -1 for zero.
    int degree() const;

    DPClass& operator+=(const DPClass& o);
    friend DPClass operator+(DPClass a, const DPClass& b) { return a += b; }
    friend bool operator==(const DPClass&, const DPClass&) = default;

    std::string to_string() const;

private:
    GeneratorSet gens_;
    std::vector<DPMonomial> terms_;
};

// Product of two monomials; false when the coefficient prod C(n_i + m_i, m_i) is even.
bool dp_multiply_monomials(const DPMonomial& a, const DPMonomial& b, DPMonomial& out);
DPClass dp_multiply(const DPClass& a, const DPClass& b);

// x^[n] -> sum_i x^[i] (x) x^[n-i], generator by generator.
std::vector<std::pair<DPMonomial, DPMonomial>> dp_coproduct(const DPMonomial& m);

// Ring map induced by the linear map V_k -> V_l whose j-th column is the image of x_j.
DPClass linear_push(const F2Matrix& k, const DPClass& a, const GeneratorSet& target);
DPClass linear_push(const F2Matrix& k, const DPClass& a);

// x^[2m] -> y^[m], odd exponents -> 0. One degree-2 target generator per source generator.
DPClass beta_push(const DPClass& a, const GeneratorSet& target);
DPClass beta_push(const DPClass& a);

// Monomials of total degree d, lexicographic in the exponent vector.
std::vector<DPMonomial> monomials_of_degree(const GeneratorSet& gens, int d);

// Homology of BSU(2) as a module over H_*(BV_1): basis u_m in degree 4m.
struct SU2Class {
    std::vector<std::uint32_t> ms; // sorted, distinct
    bool is_zero() const { return ms.empty(); }
    friend bool operator==(const SU2Class&, const SU2Class&) = default;
};

SU2Class su2_unit(std::uint32_t m);
// Lift u_m to x^[4m], multiply, keep exponents divisible by 4.
SU2Class su2_act(const DPClass& a, const SU2Class& b);

} // namespace hsto
