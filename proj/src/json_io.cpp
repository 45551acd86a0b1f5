#include "hsto/json_io.hpp"

#include "hsto/errors.hpp"

namespace hsto {

namespace {

json terms_to_json(const GeneratorSet& gens, const std::vector<DPMonomial>& terms) {
    json out = json::array();
    for (const auto& m : terms) {
        json t = json::object();
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) t[gens[i].name] = m[i];
        out.push_back(std::move(t));
    }
    return out;
}

std::vector<DPMonomial> terms_from_json(const GeneratorSet& gens, const json& terms) {
    if (!terms.is_array()) throw PreconditionError("\"terms\" must be an array");
    std::vector<DPMonomial> out;
    for (const auto& t : terms) {
        if (!t.is_object()) throw PreconditionError("each term must be an object of exponents");
        DPMonomial m(gens.size(), 0);
        for (const auto& [name, e] : t.items()) {
            int idx = gens.index_of(name);
            if (idx < 0) throw PreconditionError("unknown generator in term: " + name);
            if (!e.is_number_unsigned()) throw PreconditionError("exponent of " + name + " must be a non-negative integer");
            m[static_cast<std::size_t>(idx)] = e.get<std::uint32_t>();
        }
        out.push_back(std::move(m));
    }
    return out;
}

json gens_to_json(const GeneratorSet& gens) {
    json out = json::array();
    for (const auto& g : gens.all()) out.push_back({{"name", g.name}, {"degree", g.degree}});
    return out;
}

GeneratorSet gens_from_json(const json& j) {
    if (!j.is_array()) throw PreconditionError("\"generators\" must be an array");
    std::vector<Generator> gens;
    for (const auto& g : j) gens.push_back({g.at("name").get<std::string>(), g.at("degree").get<int>()});
    return GeneratorSet(std::move(gens));
}

json word_subscripts(const EWord& w) { return w.subscripts; }

json stability_to_json(const Stability& s) {
    json j{{"stable", s.stable}, {"unstable", s.unstable}, {"not_in_stabilization_image", s.not_in_stabilization_image}};
    if (s.stable_image)
        j["stable_image"] = {{"class", sym_to_json(s.stable_image->product)},
                             {"weight", s.stable_image->weight},
                             {"L", s.stable_image->offset}};
    else
        j["stable_image"] = nullptr;
    if (s.vanishing_bound)
        j["vanishing_bound"] = {{"degree", s.vanishing_bound->degree}, {"rank_threshold", s.vanishing_bound->rank_threshold}};
    else
        j["vanishing_bound"] = nullptr;
    return j;
}

} // namespace

json dp_to_json(const DPClass& c) {
    return {{"generators", gens_to_json(c.generators())}, {"terms", terms_to_json(c.generators(), c.terms())}};
}

DPClass dp_from_json(const json& j) {
    try {
        auto gens = gens_from_json(j.at("generators"));
        for (const auto& g : gens.all())
            if (g.degree != 1 && g.degree != 2) throw PreconditionError("generator degree must be 1 or 2: " + g.name);
        return DPClass(gens, terms_from_json(gens, j.at("terms")));
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("bad class document: ") + e.what());
    }
}

json coefficient_to_json(const CoefficientClass& c) {
    auto slots = c.group().slots();
    return {{"group", c.group().to_string()}, {"generators", gens_to_json(slots)}, {"terms", terms_to_json(slots, c.terms())}};
}

CoefficientClass coefficient_from_json(const json& j, const GroupDescriptor& g) {
    try {
        if (j.contains("group") && !(parse_group(j.at("group").get<std::string>()) == g))
            throw PreconditionError("coefficient class is over " + j.at("group").get<std::string>() + ", expected " + g.to_string());
        return CoefficientClass(g, terms_from_json(g.slots(), j.at("terms")));
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("bad coefficient document: ") + e.what());
    }
}

json sym_to_json(const SymClass& c) {
    json out = json::array();
    for (const auto& t : c.terms()) {
        json gens = json::array(), words = json::array();
        for (const auto& w : t) {
            if (w.is_generator()) gens.push_back(w.chain().chain);
            else words.push_back(word_subscripts(w));
        }
        json term{{"gens", gens}};
        if (!words.empty()) term["words"] = words;
        out.push_back(std::move(term));
    }
    return out;
}

SymClass sym_from_json(const json& j) {
    try {
        if (!j.is_array()) throw PreconditionError("symmetric group class must be an array of terms");
        std::vector<SymTerm> terms;
        for (const auto& t : j) {
            SymTerm term;
            for (const auto& g : t.at("gens")) term.push_back(EWord::from_chain(EMonomial{g.get<std::vector<std::uint32_t>>()}));
            if (t.contains("words"))
                for (const auto& w : t.at("words")) term.push_back(EWord::from_subscripts(w.get<std::vector<std::uint32_t>>()));
            terms.push_back(std::move(term));
        }
        return SymClass(std::move(terms));
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("bad symmetric group class: ") + e.what());
    }
}

json factors_to_json(const std::vector<OpFactor>& fs) {
    json out = json::array();
    for (const auto& f : fs) out.push_back({{"n", f.n}, {"a", sym_to_json(f.a)}});
    return out;
}

std::vector<OpFactor> factors_from_json(const json& j) {
    try {
        std::vector<OpFactor> out;
        for (const auto& f : j) out.push_back({f.at("n").get<std::uint64_t>(), sym_from_json(f.at("a"))});
        return out;
    } catch (const json::exception& e) {
        throw PreconditionError(std::string("bad factor list: ") + e.what());
    }
}

json certificate_to_json(const Certificate& c) {
    return {
        {"version", "v1"},
        {"target", target_name(c.target)},
        {"N", c.N},
        {"degree", c.degree},
        {"witness",
         {{"group", c.group.to_string()},
          {"factors", factors_to_json(c.factors)},
          {"b", coefficient_to_json(c.witness)},
          {"output", coefficient_to_json(c.output)}}},
        {"stability", stability_to_json(c.stability)},
        {"shift_convention_note", c.shift_convention_note},
    };
}

json failure_to_json(const CertifyFailure& f) {
    return {{"version", "v1"}, {"target", target_name(f.target)}, {"N", f.N}, {"degree", f.degree},
            {"degree_bound", f.degree_bound}, {"failure", f.reason}};
}

json bundle_to_json(const FamilyBundle& b) {
    json certs = json::array();
    for (const auto& c : b.certificates) certs.push_back(certificate_to_json(c));
    return {{"u", b.u}, {"f", b.f}, {"r", b.r}, {"N", b.N}, {"factors", factors_to_json(b.factors)}, {"certificates", certs}};
}

json witness_to_json(const WitnessResult& w) {
    json j{{"certified_trivial", w.certified_trivial}, {"fast_path", w.fast_path}, {"degree_bound", w.degree_bound}};
    j["witness"] = w.witness ? coefficient_to_json(*w.witness) : json(nullptr);
    j["output"] = w.output ? coefficient_to_json(*w.output) : json(nullptr);
    return j;
}

json t3_to_json(const T3Report& r) {
    return {{"n1", r.n1}, {"n2", r.n2}, {"d_squared_zero", r.d_squared_zero}, {"top_class_cycle", r.top_class_cycle},
            {"boundary_identity", r.boundary_identity}, {"cell_homology", r.cell_homology}, {"pass", r.ok()}};
}

} // namespace hsto
