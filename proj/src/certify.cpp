#include "hsto/certify.hpp"

#include <algorithm>
#include <map>

#include "hsto/errors.hpp"

namespace hsto {

const char* const kShiftConventionNote =
    "operation degree shift taken as dim(G)*N with N = sum(n_i - 1), which is what the definition of the "
    "operations and additivity of Euler characteristics give; the factorization statements through Hol(F_N), "
    "Aut(F_N) and Aff_N quote dim(G)*(N-1); the two agree for finite G";

namespace {

const std::map<Target, std::pair<std::string, std::string>>& names() {
    static const std::map<Target, std::pair<std::string, std::string>> m{
        {Target::HolOrdinary, {"HolOrdinary", "hol"}},
        {Target::AutTwisted, {"AutTwisted", "aut-twisted"}},
        {Target::HolUnstable, {"HolUnstable", "hol-unstable"}},
        {Target::AffZ, {"AffZ", "aff-z"}},
        {Target::AffF2, {"AffF2", "aff-f2"}},
        {Target::AffZUnstable, {"AffZUnstable", "aff-z-unstable"}},
        {Target::AffF2Unstable, {"AffF2Unstable", "aff-f2-unstable"}},
    };
    return m;
}

bool needs_positive_degree(Target t) {
    return t == Target::AutTwisted || t == Target::HolUnstable || t == Target::AffZUnstable ||
           t == Target::AffF2Unstable;
}

int sum_degrees(const std::vector<OpFactor>& factors) {
    int d = 0;
    for (const auto& f : factors) {
        if (f.a.is_zero()) throw PreconditionError("factor class is zero");
        d += f.a.degree();
    }
    return d;
}

Stability stability_for(Target t, const std::vector<OpFactor>& factors, int u) {
    Stability s;
    switch (t) {
    case Target::HolOrdinary:
        s.stable = true;
        s.not_in_stabilization_image = u > 0;
        s.stable_image = stable_image(factors, u);
        break;
    case Target::AutTwisted:
        // H_k(Aut(F_n); F2^n) = 0 for n > 2k + 3
        s.unstable = true;
        s.vanishing_bound = VanishingBound{u - 1, static_cast<std::uint64_t>(2 * (u - 1) + 3)};
        break;
    case Target::HolUnstable:
    case Target::AffZUnstable:
    case Target::AffF2Unstable:
        // image of the twisted class, which dies for n > 2(u - 1) + 3
        s.unstable = true;
        s.not_in_stabilization_image = t == Target::HolUnstable;
        s.vanishing_bound = VanishingBound{u, static_cast<std::uint64_t>(2 * (u - 1) + 3)};
        break;
    case Target::AffF2:
        // stable value H_*(BGL(F2)) = F2, reached for n >= 2u + 1
        if (u > 0) {
            s.unstable = true;
            s.vanishing_bound = VanishingBound{u, static_cast<std::uint64_t>(2 * u)};
        } else {
            s.stable = true;
        }
        break;
    case Target::AffZ: break;
    }
    return s;
}

} // namespace

const std::vector<Target>& all_targets() {
    static const std::vector<Target> ts{Target::HolOrdinary, Target::AutTwisted, Target::HolUnstable, Target::AffZ,
                                        Target::AffF2, Target::AffZUnstable, Target::AffF2Unstable};
    return ts;
}

std::string target_name(Target t) { return names().at(t).first; }

Target parse_target(const std::string& s) {
    for (const auto& [t, n] : names())
        if (s == n.first || s == n.second) return t;
    throw PreconditionError("unknown target: " + s);
}

StableImage stable_image(const std::vector<OpFactor>& factors, int k) {
    StableImage si;
    si.product = SymClass({SymTerm{}});
    for (const auto& f : factors) {
        if (!f.a.is_zero() && f.a.weight() != f.n) throw PreconditionError("factor weight does not match n");
        si.product = juxtapose(si.product, f.a);
        si.weight += f.n;
    }
    const std::int64_t need = 2 * static_cast<std::int64_t>(k) + 2 - static_cast<std::int64_t>(si.weight);
    si.offset = need > 0 ? static_cast<std::uint64_t>(need) : 0;
    return si;
}

void check_target_hypothesis(Target t, const GroupDescriptor& g) {
    const std::string gs = g.to_string();
    switch (t) {
    case Target::HolOrdinary: return;
    case Target::AutTwisted:
    case Target::HolUnstable:
        if (!g.positive_dim_or_even_order())
            throw HypothesisError(target_name(t) + " needs a positive-dimensional or even-order group, got " + gs);
        return;
    case Target::AffZ:
        if (!g.is_abelian()) throw HypothesisError("AffZ needs an abelian group, got " + gs);
        return;
    case Target::AffF2:
        if (!g.is_elementary_abelian_2()) throw HypothesisError("AffF2 needs an elementary abelian 2-group, got " + gs);
        return;
    case Target::AffZUnstable:
        if (!g.is_abelian() || !g.positive_dim_or_even_order())
            throw HypothesisError("AffZUnstable needs an abelian group of positive dimension or even order, got " + gs);
        return;
    case Target::AffF2Unstable:
        if (!g.is_elementary_abelian_2() || !g.positive_dim_or_even_order())
            throw HypothesisError("AffF2Unstable needs a nontrivial elementary abelian 2-group, got " + gs);
        return;
    }
}

int default_composite_bound(const GroupDescriptor& g, const std::vector<OpFactor>& factors) {
    int d = 0;
    std::uint64_t weight = 0;
    for (const auto& f : factors) {
        d += std::max(f.a.degree(), 0);
        weight += f.n;
    }
    return d + g.dim() * static_cast<int>(weight) + 8;
}

std::variant<Certificate, CertifyFailure> build_certificate(Target t, const GroupDescriptor& g,
                                                            const std::vector<OpFactor>& factors,
                                                            std::optional<int> degree_bound) {
    if (factors.empty()) throw PreconditionError("certificate needs at least one factor");
    check_target_hypothesis(t, g);
    const std::uint64_t N = total_rank_shift(factors);
    const int u = sum_degrees(factors);
    if (needs_positive_degree(t) && u <= 0)
        throw PreconditionError(target_name(t) + " needs a class of positive degree");
    const int degree = t == Target::AutTwisted ? u - 1 : u;
    const int bound = degree_bound ? *degree_bound : default_composite_bound(g, factors);

    for (int d = 0; d <= bound; ++d)
        for (auto& b : coefficient_basis(g, d)) {
            auto out = composite_op(g, factors, b);
            if (out.is_zero()) continue;
            Certificate c;
            c.target = t;
            c.group = g;
            c.factors = factors;
            c.N = N;
            c.degree = degree;
            c.witness = std::move(b);
            c.output = std::move(out);
            c.stability = stability_for(t, factors, u);
            c.shift_convention_note = kShiftConventionNote;
            return c;
        }
    return CertifyFailure{t, N, degree, bound, "no coefficient class up to degree " + std::to_string(bound) +
                                                   " is moved by the composite operation"};
}

bool revalidate(const Certificate& c) {
    try {
        check_target_hypothesis(c.target, c.group);
        if (c.N != total_rank_shift(c.factors)) return false;
        const int u = sum_degrees(c.factors);
        if (c.degree != (c.target == Target::AutTwisted ? u - 1 : u)) return false;
        auto out = composite_op(c.group, c.factors, c.witness);
        if (out.is_zero() || !(out == c.output)) return false;
        // output degree = |b| + sum |a_i| + dim(G) N
        return out.degree() == c.witness.degree() + u + c.group.dim() * static_cast<int>(c.N);
    } catch (const std::exception&) {
        return false;
    }
}

FamilyBundle example_family(const std::vector<std::uint32_t>& u, const std::vector<std::size_t>& f, std::size_t r) {
    if (u.empty()) throw PreconditionError("example_family: u is empty");
    if (f.size() != u.size()) throw PreconditionError("example_family: f must have one value per entry of u");
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) throw PreconditionError("example_family: u entries must be positive");
        for (std::size_t j = i + 1; j < u.size(); ++j)
            if (u[i] & u[j])
                throw PreconditionError("example_family: u[" + std::to_string(i) + "] = " + std::to_string(u[i]) +
                                        " and u[" + std::to_string(j) + "] = " + std::to_string(u[j]) +
                                        " share a binary digit");
    }
    std::vector<std::vector<std::uint32_t>> fibers(r);
    for (auto v : f) {
        if (v < 1 || v > r) throw PreconditionError("example_family: f value " + std::to_string(v) + " outside 1.." + std::to_string(r));
    }
    for (std::size_t j = 0; j < f.size(); ++j) fibers[f[j] - 1].push_back(u[j]);
    for (std::size_t i = 0; i < r; ++i)
        if (fibers[i].empty()) throw PreconditionError("example_family: f is not surjective, nothing maps to " + std::to_string(i + 1));

    FamilyBundle fb;
    fb.u = u;
    fb.f = f;
    fb.r = r;
    for (auto& fiber : fibers) {
        std::uint64_t n = std::uint64_t{1} << fiber.size();
        fb.factors.push_back({n, SymClass::word(EWord::from_subscripts(fiber))});
    }
    fb.N = total_rank_shift(fb.factors);
    const auto z2 = GroupDescriptor::z2_power(1);
    for (auto t : all_targets()) {
        auto res = build_certificate(t, z2, fb.factors);
        if (auto* failure = std::get_if<CertifyFailure>(&res))
            throw PreconditionError("example_family: " + target_name(t) + " failed: " + failure->reason);
        fb.certificates.push_back(std::get<Certificate>(std::move(res)));
    }
    return fb;
}

} // namespace hsto
