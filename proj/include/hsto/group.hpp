#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsto/gradedalg.hpp"

namespace hsto {

// Compact Lie groups with known mod-2 homology handled by the operations.
class GroupDescriptor {
public:
    enum class Kind { Z2Power, Dihedral, Torus, SU2, Product };

    // (Z/2)^l; l = 0 is the trivial group.
    static GroupDescriptor z2_power(unsigned l);
    // Dihedral group of order 4n + 2; n = 0 is Z/2.
    static GroupDescriptor dihedral(unsigned n);
    static GroupDescriptor torus(unsigned l);
    static GroupDescriptor su2();
    // Nested products are flattened; a single factor is returned as is.
    static GroupDescriptor product(const std::vector<GroupDescriptor>& factors);

    Kind kind() const { return kind_; }
    unsigned param() const { return param_; }
    // Factors of a product, or {*this}.
    std::vector<GroupDescriptor> factors() const;

    int dim() const;
    bool is_finite() const { return dim() == 0; }
    // Order of a finite group.
    std::uint64_t order() const;
    bool is_abelian() const;
    bool is_elementary_abelian_2() const;
    bool positive_dim_or_even_order() const;

    // Exponent slots of the coefficient homology H_*(BG; F2): names and degrees.
    // SU(2) has one slot of degree 4; exponent m stands for u_m.
    GeneratorSet slots() const;

    std::string to_string() const;
    friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;

private:
    Kind kind_ = Kind::Z2Power;
    unsigned param_ = 1;
    std::vector<GroupDescriptor> factors_;
};

// Grammar: z2^L | z2 | d<4n+2> | t^L | t | su2 | (G1)x(G2)x...
GroupDescriptor parse_group(const std::string& text);

// An element of H_*(BG; F2) in the canonical monomial basis.
class CoefficientClass {
public:
    CoefficientClass() = default;
    explicit CoefficientClass(GroupDescriptor g);
    CoefficientClass(GroupDescriptor g, std::vector<DPMonomial> terms);

    static CoefficientClass one(const GroupDescriptor& g);
    static CoefficientClass monomial(const GroupDescriptor& g, DPMonomial m);
    // Wraps a class whose generators match the slots of g in count and degree.
    static CoefficientClass from_dp(const GroupDescriptor& g, const DPClass& c);
    static CoefficientClass from_su2(const SU2Class& c);

    const GroupDescriptor& group() const { return group_; }
    const std::vector<DPMonomial>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int degree() const;
    DPClass as_dp() const;
    SU2Class as_su2() const;

    CoefficientClass& operator+=(const CoefficientClass& o);
    friend CoefficientClass operator+(CoefficientClass a, const CoefficientClass& b) { return a += b; }
    friend bool operator==(const CoefficientClass&, const CoefficientClass&) = default;
    std::string to_string() const;

private:
    GroupDescriptor group_;
    std::vector<DPMonomial> terms_;
};

// Canonical basis of H_d(BG; F2), lexicographic in the exponent vector.
std::vector<CoefficientClass> coefficient_basis(const GroupDescriptor& g, int d);

} // namespace hsto
