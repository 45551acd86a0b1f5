#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hsto {

// Finite group given by its multiplication table; elements are 0..order-1.
class FiniteGroupTable {
public:
    // Validates closure, identity, inverses and (for order <= 256) associativity.
    FiniteGroupTable(std::size_t order, std::vector<std::uint32_t> table, std::string name);

    static FiniteGroupTable trivial();
    // (Z/2)^l, elements are bitmasks, product is xor.
    static FiniteGroupTable z2_power(unsigned l);
    // <r, s | r^{2n+1} = s^2 = e, s r = r^{-1} s>; r^i s^j has index i + (2n+1) j.
    static FiniteGroupTable dihedral(unsigned n);
    // (a, b) has index a + |A| b.
    static FiniteGroupTable direct_product(const FiniteGroupTable& a, const FiniteGroupTable& b);

    std::size_t order() const { return order_; }
    const std::string& name() const { return name_; }
    std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return table_[a * order_ + b]; }
    std::uint32_t identity() const { return identity_; }
    std::uint32_t inverse(std::uint32_t a) const { return inverse_[a]; }
    std::uint32_t element_order(std::uint32_t a) const;
    // Smallest subgroup containing gens.
    std::vector<std::uint32_t> generated_subgroup(const std::vector<std::uint32_t>& gens) const;
    bool is_subgroup(const std::vector<std::uint32_t>& elems) const;

private:
    std::size_t order_;
    std::vector<std::uint32_t> table_;
    std::vector<std::uint32_t> inverse_;
    std::uint32_t identity_ = 0;
    std::string name_;
};

// Left action of a finite group on {0, ..., set_size - 1}.
class FiniteAction {
public:
    // act[g * set_size + x] = g . x; validates the action axioms.
    FiniteAction(FiniteGroupTable group, std::size_t set_size, std::vector<std::uint32_t> act);

    const FiniteGroupTable& group() const { return group_; }
    std::size_t set_size() const { return set_size_; }
    std::uint32_t apply(std::uint32_t g, std::uint32_t x) const { return act_[g * set_size_ + x]; }

private:
    FiniteGroupTable group_;
    std::size_t set_size_;
    std::vector<std::uint32_t> act_;
};

struct Orbit {
    std::uint32_t representative = 0;  // smallest point of the orbit
    std::size_t size = 0;
    std::vector<std::uint32_t> stabilizer;
};

std::vector<Orbit> action_orbits(const FiniteAction& action);

// V_k x G x G acting on maps V_k -> G by (u, g, h) . (g_v) = (g g_{u+v} h^{-1}).
// Group elements are u + 2^k (g + |G| h); a map (g_v) is sum_v g_v |G|^v.
FiniteAction string_action(const FiniteGroupTable& g, std::size_t k);

// V_k x G acting on maps V_k -> G modulo right multiplication by constants,
// (u, g) . [g_v] = [g g_{u+v}]. Points are maps normalized to g_0 = e, encoded by
// sum_{v >= 1} g_v |G|^{v-1}.
FiniteAction coset_string_action(const FiniteGroupTable& g, std::size_t k);

} // namespace hsto
