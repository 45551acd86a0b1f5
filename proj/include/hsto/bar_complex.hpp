#pragma once

#include <cstdint>
#include <vector>

#include "hsto/f2core.hpp"
#include "hsto/finite_group.hpp"

namespace hsto {

// Homology of a finite chain complex of F2 vector spaces. boundary[n] : C_n -> C_{n-1}
// (boundary[0] is the zero map to nothing). Degrees 0..top-1 are computed, where
// top = boundary.size() - 1 so that d_{n+1} is available for every reported degree.
struct ChainComplexF2 {
    std::vector<std::size_t> dims;
    std::vector<F2Matrix> boundary;

    bool squares_to_zero() const;
};

struct HomologyF2 {
    std::vector<std::size_t> dims;
    // Cycles whose classes form a basis, per degree.
    std::vector<std::vector<F2Vector>> representatives;
    // Image of d_{n+1} as columns, per degree.
    std::vector<std::vector<F2Vector>> boundaries;

    // Coordinates of the class of cycle z in the representative basis.
    F2Vector coordinates(std::size_t degree, const F2Vector& z) const;
};

HomologyF2 homology(const ChainComplexF2& c);

// Normalized bar complex of Gamma with coefficients induced up from a subgroup H:
// basis [c | g_1 | ... | g_n], c a right coset H gamma, g_i != e. Computes
// H_*(BH) (Shapiro). With H = Gamma this is the bar complex of B Gamma.
class CosetBarComplex {
public:
    CosetBarComplex(const FiniteGroupTable& gamma, std::vector<std::uint32_t> subgroup, std::size_t max_degree);

    const ChainComplexF2& complex() const { return complex_; }
    std::size_t cosets() const { return coset_reps_.size(); }
    std::size_t index(std::uint32_t coset, const std::vector<std::uint32_t>& gs) const;
    // Coset of H containing gamma.
    std::uint32_t coset_of(std::uint32_t gamma) const { return coset_of_[gamma]; }

private:
    const FiniteGroupTable& gamma_;
    std::vector<std::uint32_t> coset_of_, coset_reps_;
    std::vector<std::uint32_t> to_nonid_, from_nonid_;
    ChainComplexF2 complex_;
};

// Mod-2 homology dimensions of BG in degrees 0..max_degree via the normalized bar complex.
std::vector<std::size_t> bar_homology(const FiniteGroupTable& g, std::size_t max_degree);

// Transfer H_n(B Gamma) -> H_n(BH) in degree n, as a matrix from the bar-complex homology
// basis of Gamma to the basis of the coset model of H. Coset representatives are the
// smallest element of each coset.
F2Matrix transfer_map(const FiniteGroupTable& gamma, const std::vector<std::uint32_t>& subgroup, std::size_t degree);
// Map induced by the inclusion H -> Gamma in the same bases.
F2Matrix induced_map(const FiniteGroupTable& gamma, const std::vector<std::uint32_t>& subgroup, std::size_t degree);

} // namespace hsto
