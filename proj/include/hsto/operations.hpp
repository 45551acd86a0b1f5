#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hsto/group.hpp"
#include "hsto/symhomology.hpp"

namespace hsto {

enum class CountMode { Exact, Parity };

// Number of k x l matrices with positive entries, row sums n, column sums e and
// pairwise bit-disjoint entries in every column. Parity mode returns the count mod 2.
std::uint64_t a_count(const std::vector<std::uint32_t>& n, const std::vector<std::uint32_t>& e,
                      CountMode mode = CountMode::Exact);

// Generators x1..xk of H_*(BV_k).
GeneratorSet v_generators(std::size_t k);

// The operation H_*(BV_k) (x) H_*(BG) -> H_*(BG), raising degree by dim(G)(2^k - 1).
// Throws UnsupportedError for T^l with k >= 3 and SU(2) with k >= 2.
CoefficientClass alpha(const GroupDescriptor& g, std::size_t k, const DPClass& a, const CoefficientClass& b);

// (Z/2)^l by summing linear_push over all l x k matrices.
CoefficientClass alpha_z2_brute(unsigned l, std::size_t k, const DPClass& a, const CoefficientClass& b);

// Evaluates the class a in H_*(B Sigma_n) on b. Decomposable terms act by zero,
// a word acts through its preimage under iota.
CoefficientClass phi_sigma(const GroupDescriptor& g, std::uint64_t n, const SymClass& a, const CoefficientClass& b);

struct OpFactor {
    std::uint64_t n = 1;
    SymClass a;
};

// Composite of the phi_sigma operations, rightmost factor applied first.
CoefficientClass composite_op(const GroupDescriptor& g, const std::vector<OpFactor>& factors, const CoefficientClass& b);

// sum (n_i - 1)
std::uint64_t total_rank_shift(const std::vector<OpFactor>& factors);

struct WitnessResult {
    std::optional<CoefficientClass> witness;   // b with alpha(a (x) b) != 0
    std::optional<CoefficientClass> output;    // alpha(a (x) witness)
    bool certified_trivial = false;            // alpha(a (x) -) vanishes in every degree
    bool fast_path = false;
    int degree_bound = 0;
};

int default_degree_bound(const GroupDescriptor& g, std::size_t k, const DPClass& a);
WitnessResult nontrivial_witness(const GroupDescriptor& g, std::size_t k, const DPClass& a,
                                 std::optional<int> degree_bound = std::nullopt);

} // namespace hsto
