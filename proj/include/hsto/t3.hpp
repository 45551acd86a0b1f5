#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hsto/bar_complex.hpp"

namespace hsto {

// Divided power resolution of F2 over F2[V_m]: basis X^[k] [g], k a multi-index with
// |k| = p in degree p, g in V_m, and d X^[k] = sum_i t_i X^[k - e_i], t_i = 1 + x_i.
ChainComplexF2 divided_power_resolution(std::size_t m, std::size_t max_degree);
// H_*(BV_m) computed from the resolution tensored down to F2.
std::vector<std::size_t> elementary_abelian_homology(std::size_t m, std::size_t max_degree);

// Cellular chains of the 3-torus with the V_2 action used for the circle operation
// with two inputs, and the chain-level identity behind its closed form.
struct T3Report {
    std::uint32_t n1 = 0, n2 = 0;
    bool d_squared_zero = false;       // on F, on the cell complex, and on the total complex
    bool top_class_cycle = false;      // t1 t2 e_cube and X^[n1,n2] (x) t1 t2 e_cube are cycles
    bool boundary_identity = false;    // d(c1 + c2 + c3) equals the stated sum
    std::vector<std::size_t> cell_homology;  // of the underlying F2 complex, expect 1 3 3 1
    bool ok() const;
    std::string summary() const;
};

T3Report t3_verify(std::uint32_t n1, std::uint32_t n2);

} // namespace hsto
