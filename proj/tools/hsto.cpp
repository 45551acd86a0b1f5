// Command line front end for the hsto library.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "hsto/bar_complex.hpp"
#include "hsto/compsum.hpp"
#include "hsto/errors.hpp"
#include "hsto/json_io.hpp"

using namespace hsto;
using hsto::json;

namespace {

constexpr int kNonzero = 0, kZero = 1, kError = 2;

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    if (s.empty()) out.emplace_back();
    return out;
}

std::vector<std::uint32_t> parse_uints(const std::string& s) {
    std::vector<std::uint32_t> out;
    if (s.empty()) return out;
    for (const auto& p : split(s, ',')) {
        if (p.empty() || p.find_first_not_of("0123456789") != std::string::npos)
            throw PreconditionError("expected a comma separated list of non-negative integers, got '" + s + "'");
        out.push_back(static_cast<std::uint32_t>(std::stoul(p)));
    }
    return out;
}

// "1,2+3,0": sum of exponent vectors of length n; "1" alone is the unit when n == 0.
std::vector<DPMonomial> parse_monomials(const std::string& s, std::size_t n) {
    std::vector<DPMonomial> out;
    if (s == "0") {
        if (n != 1) return out;
    }
    for (const auto& t : split(s, '+')) {
        if (n == 0 && (t.empty() || t == "1")) {
            out.emplace_back();
            continue;
        }
        auto m = parse_uints(t);
        if (m.size() != n) throw PreconditionError("term '" + t + "' needs " + std::to_string(n) + " exponents");
        out.push_back(std::move(m));
    }
    return out;
}

// Terms joined by '+', factors by '*'; a factor is [1], c:<chain> or w:<subscripts>.
SymClass parse_sym(const std::string& s) {
    std::vector<SymTerm> terms;
    for (const auto& t : split(s, '+')) {
        SymTerm term;
        for (const auto& f : split(t, '*')) {
            if (f == "[1]") term.push_back(EWord::unit());
            else if (f.rfind("c:", 0) == 0) term.push_back(EWord::from_chain(EMonomial{parse_uints(f.substr(2))}));
            else if (f.rfind("w:", 0) == 0) term.push_back(EWord::from_subscripts(parse_uints(f.substr(2))));
            else throw PreconditionError("bad factor '" + f + "', expected [1], c:<chain> or w:<subscripts>");
        }
        terms.push_back(std::move(term));
    }
    return SymClass(std::move(terms));
}

// "n:<class>"
OpFactor parse_factor(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw PreconditionError("factor '" + s + "' must look like n:<class>");
    return {std::stoull(s.substr(0, colon)), parse_sym(s.substr(colon + 1))};
}

struct Globals {
    bool as_json = false;
    int degree_bound = -1;
    std::string group;
    std::string in_path;
    json doc = json::object();

    void load() {
        if (in_path.empty()) return;
        std::ifstream f(in_path);
        if (!f) throw PreconditionError("cannot read " + in_path);
        try {
            doc = json::parse(f);
        } catch (const json::exception& e) {
            throw PreconditionError("bad JSON in " + in_path + ": " + e.what());
        }
    }
    GroupDescriptor grp() const {
        if (!group.empty()) return parse_group(group);
        if (doc.contains("group")) return parse_group(doc["group"].get<std::string>());
        throw PreconditionError("--group is required");
    }
    std::optional<int> bound() const {
        if (degree_bound >= 0) return degree_bound;
        if (doc.contains("degree_bound")) return doc["degree_bound"].get<int>();
        return std::nullopt;
    }
};

template <class T>
T pick(const CLI::Option* opt, const T& value, const json& doc, const char* key, std::optional<T> fallback = std::nullopt) {
    if (opt->count() > 0) return value;
    if (doc.contains(key)) return doc[key].get<T>();
    if (fallback) return *fallback;
    throw PreconditionError(std::string("missing --") + key);
}

DPClass read_dp(const CLI::Option* opt, const std::string& text, const json& doc, std::size_t k) {
    if (opt->count() > 0) return DPClass(v_generators(k), parse_monomials(text, k));
    if (doc.contains("a")) return dp_from_json(doc["a"]);
    throw PreconditionError("missing --a");
}

CoefficientClass read_b(const CLI::Option* opt, const std::string& text, const json& doc, const GroupDescriptor& g) {
    if (opt->count() > 0) return CoefficientClass(g, parse_monomials(text, g.slots().size()));
    if (doc.contains("b")) return coefficient_from_json(doc["b"], g);
    return CoefficientClass::one(g);
}

std::vector<OpFactor> read_factors(const CLI::Option* opt, const std::vector<std::string>& texts, const json& doc) {
    if (opt->count() > 0) {
        std::vector<OpFactor> out;
        for (const auto& t : texts) out.push_back(parse_factor(t));
        return out;
    }
    if (doc.contains("factors")) return factors_from_json(doc["factors"]);
    throw PreconditionError("missing --factor");
}

int emit_class(const Globals& g, const CoefficientClass& c) {
    if (g.as_json) std::cout << coefficient_to_json(c).dump() << '\n';
    else std::cout << c.to_string() << '\n';
    return c.is_zero() ? kZero : kNonzero;
}

void oracle_line(const Globals& g, const std::string& check, const json& params, bool pass) {
    if (g.as_json) std::cout << json{{"check", check}, {"params", params}, {"pass", pass}}.dump() << '\n';
    else std::cout << (pass ? "PASS " : "FAIL ") << check << ' ' << params.dump() << '\n';
}

bool run_oracle_checks(const Globals& g) {
    bool all = true;
    auto report = [&](const std::string& check, const json& params, bool pass) {
        oracle_line(g, check, params, pass);
        all = all && pass;
    };
    const auto z2 = FiniteGroupTable::z2_power(1);
    const auto d6 = FiniteGroupTable::dihedral(1);
    const auto z2d = GroupDescriptor::z2_power(1);
    const auto d6d = GroupDescriptor::dihedral(1);

    for (std::size_t k = 1; k <= 2; ++k) {
        CompsumOracle o(z2, k);
        report("orbit_census", {{"group", "Z/2"}, {"k", k}}, o.surviving_count() == (std::size_t{1} << k));
        bool same = true;
        for (int d = 0; d <= 6; ++d)
            for (auto& m : monomials_of_degree(v_generators(k), d))
                for (std::uint32_t bd = 0; bd <= 4; ++bd) {
                    auto a = DPClass::monomial(v_generators(k), m);
                    auto b = CoefficientClass::monomial(z2d, {bd});
                    same = same && alpha(z2d, k, a, b) == CoefficientClass::from_dp(z2d, o.evaluate(a, b.as_dp()));
                }
        report("compsum_vs_closed_form", {{"group", "Z/2"}, {"k", k}, {"max_degree", 6}}, same);
    }
    {
        CompsumOracle o(d6, 1);
        report("orbit_census", {{"group", "D6"}, {"k", 1}}, o.surviving_count() == 2);
        bool same = true;
        for (std::uint32_t n = 0; n <= 4; ++n)
            for (std::uint32_t bd = 0; bd <= 4; ++bd) {
                auto a = DPClass::monomial(v_generators(1), {n});
                auto b = CoefficientClass::monomial(d6d, {bd});
                same = same && alpha(d6d, 1, a, b) == CoefficientClass::from_dp(d6d, o.evaluate(a, b.as_dp()));
            }
        report("compsum_vs_closed_form", {{"group", "D6"}, {"k", 1}, {"max_degree", 4}}, same);
        report("discarded_transfers_vanish", {{"group", "D6"}, {"k", 1}, {"max_degree", 2}}, o.discarded_transfers_vanish(2));
    }
    report("bar_homology", {{"group", "Z/2"}}, bar_homology(z2, 4) == std::vector<std::size_t>{1, 1, 1, 1, 1});
    report("bar_homology", {{"group", "V2"}}, bar_homology(FiniteGroupTable::z2_power(2), 4) == std::vector<std::size_t>{1, 2, 3, 4, 5});
    report("bar_homology", {{"group", "D6"}}, bar_homology(d6, 3) == std::vector<std::size_t>{1, 1, 1, 1});
    {
        auto v2 = FiniteGroupTable::z2_power(2);
        bool zero = true;
        for (std::size_t d = 1; d <= 4; ++d) zero = zero && transfer_map(v2, {0, 3}, d).is_zero();
        report("diagonal_transfer_zero", {{"degrees", "1..4"}}, zero);
    }
    bool t3 = true;
    for (std::uint32_t a = 0; a <= 3; ++a)
        for (std::uint32_t b = 0; b <= 3; ++b) t3 = t3 && t3_verify(a, b).ok();
    report("t3_verify", {{"n1_max", 3}, {"n2_max", 3}}, t3);
    return all;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Operations on the mod 2 homology of classifying spaces, with witness and certificate search"};
    app.require_subcommand(1);
    Globals g;
    app.add_flag("--json", g.as_json, "machine readable output");
    app.add_option("--degree-bound", g.degree_bound, "search bound for witnesses");
    app.add_option("--group", g.group, "group: z2^L | d<4n+2> | t^L | su2 | (G1)x(G2)");
    app.add_option("--in", g.in_path, "JSON file supplying inputs");

    std::size_t k = 0;
    std::uint64_t n = 1;
    std::string a_text, b_text, target_text, u_text, f_text, rows_text, cols_text;
    std::vector<std::string> factor_texts;
    std::size_t r = 0;
    std::uint32_t n1 = 0, n2 = 0;
    bool parity = false;

    auto* c_alpha = app.add_subcommand("alpha", "evaluate alpha^G_k(a (x) b)");
    auto* c_phi = app.add_subcommand("phi", "evaluate the operation of a class in H_*(B Sigma_n) on b");
    auto* c_compose = app.add_subcommand("compose", "evaluate a composite of operations on b");
    auto* c_acount = app.add_subcommand("acount", "count matrices with given row and column sums");
    auto* c_witness = app.add_subcommand("witness", "find b with alpha^G_k(a (x) b) != 0");
    auto* c_certify = app.add_subcommand("certify", "build a nonvanishing certificate");
    auto* c_family = app.add_subcommand("family", "certificate bundle for bit-disjoint u and a surjection f");
    auto* c_stable = app.add_subcommand("stable-image", "juxtaposition product and stabilization offset");
    auto* c_oracle = app.add_subcommand("oracle-check", "run the independent oracle checks");
    auto* c_t3 = app.add_subcommand("t3-verify", "verify the torus chain identity");
    for (auto* s : app.get_subcommands({})) s->fallthrough();

    auto* o_k_alpha = c_alpha->add_option("-k", k, "rank of V_k");
    auto* o_a_alpha = c_alpha->add_option("--a", a_text, "class in H_*(BV_k), e.g. 1,2+3,0");
    auto* o_b_alpha = c_alpha->add_option("--b", b_text, "coefficient class, exponent vectors over the group's slots");

    auto* o_n_phi = c_phi->add_option("-n", n, "symmetric group degree");
    auto* o_a_phi = c_phi->add_option("--a", a_text, "class in H_*(B Sigma_n), e.g. c:1,1 or w:3,4 or c:1*c:1");
    auto* o_b_phi = c_phi->add_option("--b", b_text, "coefficient class");

    auto* o_f_compose = c_compose->add_option("--factor", factor_texts, "n:<class>, leftmost applied last");
    auto* o_b_compose = c_compose->add_option("--b", b_text, "coefficient class");

    auto* o_rows = c_acount->add_option("--rows", rows_text, "row sums n");
    auto* o_cols = c_acount->add_option("--cols", cols_text, "column sums e");
    c_acount->add_flag("--parity", parity, "count mod 2");

    auto* o_k_witness = c_witness->add_option("-k", k, "rank of V_k");
    auto* o_a_witness = c_witness->add_option("--a", a_text, "class in H_*(BV_k)");

    auto* o_target = c_certify->add_option("--target", target_text, "hol | aut-twisted | hol-unstable | aff-z | aff-f2 | aff-z-unstable | aff-f2-unstable");
    auto* o_f_certify = c_certify->add_option("--factor", factor_texts, "n:<class>");

    auto* o_u = c_family->add_option("--u", u_text, "bit-disjoint positive integers, e.g. 1,2");
    auto* o_f = c_family->add_option("--f", f_text, "values of f in 1..r, one per entry of u");
    auto* o_r = c_family->add_option("--r", r, "size of the target of f (default: largest value of f)");

    auto* o_f_stable = c_stable->add_option("--factor", factor_texts, "n:<class>");
    auto* o_k_stable = c_stable->add_option("-k", k, "homology degree");

    auto* o_n1 = c_t3->add_option("--n1", n1);
    auto* o_n2 = c_t3->add_option("--n2", n2);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kError;
    }

    try {
        g.load();
        const json& doc = g.doc;
        if (c_alpha->parsed()) {
            auto grp = g.grp();
            k = pick<std::size_t>(o_k_alpha, k, doc, "k");
            auto a = read_dp(o_a_alpha, a_text, doc, k);
            auto b = read_b(o_b_alpha, b_text, doc, grp);
            return emit_class(g, alpha(grp, k, a, b));
        }
        if (c_phi->parsed()) {
            auto grp = g.grp();
            n = pick<std::uint64_t>(o_n_phi, n, doc, "n");
            SymClass a = o_a_phi->count() ? parse_sym(a_text) : doc.contains("a") ? sym_from_json(doc["a"]) : throw PreconditionError("missing --a");
            return emit_class(g, phi_sigma(grp, n, a, read_b(o_b_phi, b_text, doc, grp)));
        }
        if (c_compose->parsed()) {
            auto grp = g.grp();
            auto fs = read_factors(o_f_compose, factor_texts, doc);
            return emit_class(g, composite_op(grp, fs, read_b(o_b_compose, b_text, doc, grp)));
        }
        if (c_acount->parsed()) {
            auto rows = o_rows->count() ? parse_uints(rows_text) : doc.at("rows").get<std::vector<std::uint32_t>>();
            auto cols = o_cols->count() ? parse_uints(cols_text) : doc.at("cols").get<std::vector<std::uint32_t>>();
            auto c = a_count(rows, cols, parity ? CountMode::Parity : CountMode::Exact);
            if (g.as_json) std::cout << json{{"rows", rows}, {"cols", cols}, {"parity", parity}, {"count", c}}.dump() << '\n';
            else std::cout << c << '\n';
            return c ? kNonzero : kZero;
        }
        if (c_witness->parsed()) {
            auto grp = g.grp();
            k = pick<std::size_t>(o_k_witness, k, doc, "k");
            auto w = nontrivial_witness(grp, k, read_dp(o_a_witness, a_text, doc, k), g.bound());
            if (g.as_json) std::cout << witness_to_json(w).dump() << '\n';
            else if (w.witness) std::cout << "witness b = " << w.witness->to_string() << " -> " << w.output->to_string() << '\n';
            else std::cout << (w.certified_trivial ? "absent (certified trivial)" : "absent up to degree " + std::to_string(w.degree_bound)) << '\n';
            return w.witness ? kNonzero : kZero;
        }
        if (c_certify->parsed()) {
            auto grp = g.grp();
            auto t = parse_target(pick<std::string>(o_target, target_text, doc, "target"));
            auto res = build_certificate(t, grp, read_factors(o_f_certify, factor_texts, doc), g.bound());
            if (auto* c = std::get_if<Certificate>(&res)) {
                if (g.as_json) std::cout << certificate_to_json(*c).dump(2) << '\n';
                else std::cout << target_name(t) << ": nonzero class in degree " << c->degree << ", N = " << c->N
                               << ", witness b = " << c->witness.to_string() << " -> " << c->output.to_string() << '\n';
                return kNonzero;
            }
            const auto& f = std::get<CertifyFailure>(res);
            if (g.as_json) std::cout << failure_to_json(f).dump(2) << '\n';
            else std::cout << target_name(t) << ": " << f.reason << '\n';
            return kZero;
        }
        if (c_family->parsed()) {
            auto u = o_u->count() ? parse_uints(u_text) : doc.at("u").get<std::vector<std::uint32_t>>();
            std::vector<std::size_t> f;
            if (o_f->count()) for (auto v : parse_uints(f_text)) f.push_back(v);
            else f = doc.at("f").get<std::vector<std::size_t>>();
            std::size_t rr = o_r->count() ? r : doc.contains("r") ? doc["r"].get<std::size_t>() : f.empty() ? 0 : *std::max_element(f.begin(), f.end());
            auto b = example_family(u, f, rr);
            if (g.as_json) std::cout << bundle_to_json(b).dump(2) << '\n';
            else for (const auto& c : b.certificates)
                std::cout << target_name(c.target) << ": degree " << c.degree << ", N = " << c.N << ", output " << c.output.to_string() << '\n';
            return kNonzero;
        }
        if (c_stable->parsed()) {
            auto fs = read_factors(o_f_stable, factor_texts, doc);
            k = pick<std::size_t>(o_k_stable, k, doc, "k");
            auto si = stable_image(fs, static_cast<int>(k));
            if (g.as_json) std::cout << json{{"class", sym_to_json(si.product)}, {"weight", si.weight}, {"L", si.offset}}.dump() << '\n';
            else std::cout << si.product.to_string() << " in weight " << si.weight << ", L = " << si.offset << '\n';
            return si.product.is_zero() ? kZero : kNonzero;
        }
        if (c_oracle->parsed()) return run_oracle_checks(g) ? kNonzero : kZero;
        if (c_t3->parsed()) {
            n1 = pick<std::uint32_t>(o_n1, n1, doc, "n1", 0u);
            n2 = pick<std::uint32_t>(o_n2, n2, doc, "n2", 0u);
            auto rep = t3_verify(n1, n2);
            if (g.as_json) std::cout << t3_to_json(rep).dump() << '\n';
            else std::cout << (rep.ok() ? "PASS " : "FAIL ") << rep.summary() << '\n';
            return rep.ok() ? kNonzero : kZero;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
