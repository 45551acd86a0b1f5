#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "hsto/operations.hpp"

namespace hsto {

enum class Target { HolOrdinary, AutTwisted, HolUnstable, AffZ, AffF2, AffZUnstable, AffF2Unstable };

const std::vector<Target>& all_targets();
std::string target_name(Target t);
// Accepts the enum names and the short CLI spellings (hol, aut-twisted, hol-unstable,
// aff-z, aff-f2, aff-z-unstable, aff-f2-unstable).
Target parse_target(const std::string& s);

extern const char* const kShiftConventionNote;

struct StableImage {
    SymClass product;            // juxtaposition product of the factors, weight N + r
    std::uint64_t weight = 0;    // N + r
    std::uint64_t offset = 0;    // minimal L with N + r + L > 2k + 1
};

// Minimal L >= 0 with N + r + L > 2k + 1, together with the juxtaposition product.
StableImage stable_image(const std::vector<OpFactor>& factors, int k);

struct VanishingBound {
    int degree = 0;
    std::uint64_t rank_threshold = 0;  // the class dies in every rank n > rank_threshold
};

struct Stability {
    bool stable = false;
    bool unstable = false;
    bool not_in_stabilization_image = false;
    std::optional<StableImage> stable_image;
    std::optional<VanishingBound> vanishing_bound;
};

struct Certificate {
    Target target = Target::HolOrdinary;
    GroupDescriptor group;
    std::vector<OpFactor> factors;
    std::uint64_t N = 0;
    int degree = 0;
    CoefficientClass witness;   // b
    CoefficientClass output;    // composite_op(G, factors, b), nonzero
    Stability stability;
    std::string shift_convention_note;
};

struct CertifyFailure {
    Target target = Target::HolOrdinary;
    std::uint64_t N = 0;
    int degree = 0;
    int degree_bound = 0;
    std::string reason;
};

// Throws HypothesisError if G does not satisfy the hypothesis of the target.
void check_target_hypothesis(Target t, const GroupDescriptor& g);

int default_composite_bound(const GroupDescriptor& g, const std::vector<OpFactor>& factors);

std::variant<Certificate, CertifyFailure> build_certificate(Target t, const GroupDescriptor& g,
                                                            const std::vector<OpFactor>& factors,
                                                            std::optional<int> degree_bound = std::nullopt);

// Recomputes the witness evaluation and the bookkeeping fields.
bool revalidate(const Certificate& c);

struct FamilyBundle {
    std::vector<std::uint32_t> u;
    std::vector<std::size_t> f;      // values in 1..r
    std::size_t r = 0;
    std::vector<OpFactor> factors;
    std::uint64_t N = 0;
    std::vector<Certificate> certificates;  // one per target, over G = Z/2
};

// u pairwise bit-disjoint positive integers, f : {1..k} -> {1..r} surjective.
FamilyBundle example_family(const std::vector<std::uint32_t>& u, const std::vector<std::size_t>& f, std::size_t r);

} // namespace hsto
