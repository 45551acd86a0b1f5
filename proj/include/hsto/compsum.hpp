#pragma once

#include <vector>

#include "hsto/f2core.hpp"
#include "hsto/finite_group.hpp"
#include "hsto/group.hpp"

namespace hsto {

// Independent evaluation of the operation for a finite group G whose Sylow 2-subgroup
// has order 2 (Z/2 and the dihedral groups of order 4n+2), by summing over orbits of
// V_k x G x G on maps V_k -> G. H_*(BG) is identified with H_*(BZ/2) through the
// quotient G -> G / O(G) = Z/2.
class CompsumOracle {
public:
    struct OrbitInfo {
        Orbit orbit;
        std::vector<std::uint32_t> image;  // projection of the stabilizer to V_k x G
        std::size_t image_index = 0;
        bool survives = false;             // odd index
        F2Matrix push;                     // 1 x (k+1), homology map V_k x Z/2 -> Z/2 of a survivor
    };

    CompsumOracle(const FiniteGroupTable& g, std::size_t k);

    const FiniteGroupTable& group() const { return g_; }
    std::size_t k() const { return k_; }
    const std::vector<OrbitInfo>& orbits() const { return orbits_; }
    std::size_t surviving_count() const;

    // a over x1..xk, b over one degree-1 generator; result over one degree-1 generator.
    DPClass evaluate(const DPClass& a, const DPClass& b) const;

    // Chain-level check that the transfer to the stabilizer image of every discarded
    // orbit vanishes in degrees 1..max_degree.
    bool discarded_transfers_vanish(std::size_t max_degree) const;

private:
    FiniteGroupTable g_;
    FiniteGroupTable vg_;  // V_k x G
    std::size_t k_;
    std::vector<std::uint8_t> sign_;
    std::vector<OrbitInfo> orbits_;
};

// compsum evaluation for G = Z/2 (Z2Power(1)) or a dihedral group; b must live over
// the matching descriptor and every input degree is bounded by max_degree.
CoefficientClass compsum_alpha(const FiniteGroupTable& g, const GroupDescriptor& desc, std::size_t k,
                               const DPClass& a, const CoefficientClass& b, int max_degree);

} // namespace hsto
