#include "hsto/compsum.hpp"

#include <algorithm>

#include "hsto/bar_complex.hpp"
#include "hsto/errors.hpp"

namespace hsto {

CompsumOracle::CompsumOracle(const FiniteGroupTable& g, std::size_t k)
    : g_(g), vg_(FiniteGroupTable::direct_product(FiniteGroupTable::z2_power(static_cast<unsigned>(k)), g)), k_(k) {
    const std::size_t n = g.order(), nv = std::size_t{1} << k;
    if (n % 2 != 0 || (n / 2) % 2 != 1) throw PreconditionError("CompsumOracle: Sylow 2-subgroup of G must have order 2");

    // even-order elements map to the generator of Z/2
    sign_.resize(n);
    for (std::uint32_t x = 0; x < n; ++x) sign_[x] = g.element_order(x) % 2 == 0;
    for (std::uint32_t x = 0; x < n; ++x)
        for (std::uint32_t y = 0; y < n; ++y)
            if (sign_[g.mul(x, y)] != (sign_[x] ^ sign_[y])) throw PreconditionError("CompsumOracle: no sign homomorphism");

    auto action = string_action(g, k);
    for (auto& o : action_orbits(action)) {
        OrbitInfo info;
        // (u, gp, gq) = u + nv (gp + n gq); projection drops gq
        std::vector<std::int64_t> lift(vg_.order(), -1);
        for (auto s : o.stabilizer) {
            std::uint32_t p = static_cast<std::uint32_t>(s % (nv * n));
            if (lift[p] != -1) throw PreconditionError("CompsumOracle: stabilizer projection is not injective");
            lift[p] = s / static_cast<std::int64_t>(nv * n);
            info.image.push_back(p);
        }
        std::sort(info.image.begin(), info.image.end());
        info.image_index = vg_.order() / info.image.size();
        info.survives = info.image_index % 2 == 1;
        if (info.survives) {
            // a Sylow 2-subgroup V_k x <t> of the image carries the homology
            info.push = F2Matrix(1, k + 1);
            for (std::size_t j = 0; j < k; ++j) {
                std::uint32_t p = static_cast<std::uint32_t>((std::size_t{1} << j) + nv * g.identity());
                if (lift[p] == -1) throw PreconditionError("CompsumOracle: image misses V_k");
                info.push.set(0, j, sign_[static_cast<std::uint32_t>(lift[p])]);
            }
            bool found = false;
            for (std::uint32_t t = 0; t < n && !found; ++t) {
                if (!sign_[t]) continue;
                std::uint32_t p = static_cast<std::uint32_t>(nv * t);
                if (lift[p] == -1) continue;
                info.push.set(0, k, sign_[static_cast<std::uint32_t>(lift[p])]);
                found = true;
            }
            if (!found) throw PreconditionError("CompsumOracle: odd-index image without an involution of G");
        }
        info.orbit = std::move(o);
        orbits_.push_back(std::move(info));
    }
}

std::size_t CompsumOracle::surviving_count() const {
    return static_cast<std::size_t>(std::count_if(orbits_.begin(), orbits_.end(), [](const OrbitInfo& o) { return o.survives; }));
}

DPClass CompsumOracle::evaluate(const DPClass& a, const DPClass& b) const {
    if (a.generators().size() != k_ || b.generators().size() != 1)
        throw PreconditionError("CompsumOracle: a must live over k generators and b over one");
    // cross product a x b in H_*(B(V_k x Z/2))
    auto src = GeneratorSet::standard("x", k_ + 1, 1);
    std::vector<DPMonomial> cross;
    for (const auto& am : a.terms())
        for (const auto& bm : b.terms()) {
            DPMonomial m = am;
            m.push_back(bm[0]);
            cross.push_back(std::move(m));
        }
    DPClass ab(src, std::move(cross));
    auto target = GeneratorSet::standard("x", 1, 1, true);
    DPClass out(target);
    for (const auto& o : orbits_)
        if (o.survives) out += linear_push(o.push, ab, target);
    return out;
}

bool CompsumOracle::discarded_transfers_vanish(std::size_t max_degree) const {
    for (const auto& o : orbits_) {
        if (o.survives) continue;
        for (std::size_t d = 1; d <= max_degree; ++d)
            if (!transfer_map(vg_, o.image, d).is_zero()) return false;
    }
    return true;
}

CoefficientClass compsum_alpha(const FiniteGroupTable& g, const GroupDescriptor& desc, std::size_t k,
                               const DPClass& a, const CoefficientClass& b, int max_degree) {
    using K = GroupDescriptor::Kind;
    bool ok = (desc.kind() == K::Z2Power && desc.param() == 1) || desc.kind() == K::Dihedral;
    if (!ok || !desc.is_finite() || desc.order() != g.order())
        throw PreconditionError("compsum_alpha: descriptor does not match the group table");
    if (!(b.group() == desc)) throw PreconditionError("compsum_alpha: coefficient class over the wrong group");
    if (a.degree() > max_degree || b.degree() > max_degree) throw PreconditionError("compsum_alpha: input degree above bound");
    CompsumOracle oracle(g, k);
    return CoefficientClass::from_dp(desc, oracle.evaluate(a, b.as_dp()));
}

} // namespace hsto
