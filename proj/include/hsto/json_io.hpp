#pragma once

#include <json.hpp>

#include "hsto/certify.hpp"
#include "hsto/t3.hpp"

namespace hsto {

using json = nlohmann::json;

// {"generators":[{"name":"x1","degree":1},...],"terms":[{"x1":3,"x2":1},...]}
json dp_to_json(const DPClass& c);
DPClass dp_from_json(const json& j);

// DPClass encoding plus "group"; generator names must be the slots of the group.
json coefficient_to_json(const CoefficientClass& c);
CoefficientClass coefficient_from_json(const json& j, const GroupDescriptor& g);

// [{"gens":[[1,2],[3]]}, ...]; factors that are not generators go under "words"
// as subscript lists, e.g. {"gens":[],"words":[[3,4]]}.
json sym_to_json(const SymClass& c);
SymClass sym_from_json(const json& j);

json factors_to_json(const std::vector<OpFactor>& fs);
std::vector<OpFactor> factors_from_json(const json& j);

json certificate_to_json(const Certificate& c);
json failure_to_json(const CertifyFailure& f);
json bundle_to_json(const FamilyBundle& b);
json witness_to_json(const WitnessResult& w);
json t3_to_json(const T3Report& r);

} // namespace hsto
