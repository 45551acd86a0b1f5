#include "hsto/group.hpp"

#include <cctype>

#include "hsto/errors.hpp"

namespace hsto {

GroupDescriptor GroupDescriptor::z2_power(unsigned l) {
    GroupDescriptor g;
    g.kind_ = Kind::Z2Power;
    g.param_ = l;
    return g;
}

GroupDescriptor GroupDescriptor::dihedral(unsigned n) {
    GroupDescriptor g;
    g.kind_ = Kind::Dihedral;
    g.param_ = n;
    return g;
}

GroupDescriptor GroupDescriptor::torus(unsigned l) {
    if (l == 0) throw PreconditionError("torus rank must be positive");
    GroupDescriptor g;
    g.kind_ = Kind::Torus;
    g.param_ = l;
    return g;
}

GroupDescriptor GroupDescriptor::su2() {
    GroupDescriptor g;
    g.kind_ = Kind::SU2;
    g.param_ = 0;
    return g;
}

GroupDescriptor GroupDescriptor::product(const std::vector<GroupDescriptor>& factors) {
    std::vector<GroupDescriptor> flat;
    for (const auto& f : factors) {
        auto sub = f.factors();
        flat.insert(flat.end(), sub.begin(), sub.end());
    }
    if (flat.empty()) throw PreconditionError("empty product");
    if (flat.size() == 1) return flat.front();
    GroupDescriptor g;
    g.kind_ = Kind::Product;
    g.param_ = 0;
    g.factors_ = std::move(flat);
    return g;
}

std::vector<GroupDescriptor> GroupDescriptor::factors() const {
    if (kind_ == Kind::Product) return factors_;
    return {*this};
}

int GroupDescriptor::dim() const {
    switch (kind_) {
    case Kind::Z2Power:
    case Kind::Dihedral: return 0;
    case Kind::Torus: return static_cast<int>(param_);
    case Kind::SU2: return 3;
    case Kind::Product: {
        int d = 0;
        for (const auto& f : factors_) d += f.dim();
        return d;
    }
    }
    return 0;
}

std::uint64_t GroupDescriptor::order() const {
    if (!is_finite()) throw PreconditionError(to_string() + " is not finite");
    switch (kind_) {
    case Kind::Z2Power: return std::uint64_t{1} << param_;
    case Kind::Dihedral: return 4 * std::uint64_t{param_} + 2;
    case Kind::Product: {
        std::uint64_t o = 1;
        for (const auto& f : factors_) o *= f.order();
        return o;
    }
    default: return 0;
    }
}

bool GroupDescriptor::is_abelian() const {
    switch (kind_) {
    case Kind::Z2Power:
    case Kind::Torus: return true;
    case Kind::Dihedral: return param_ == 0;
    case Kind::SU2: return false;
    case Kind::Product:
        for (const auto& f : factors_)
            if (!f.is_abelian()) return false;
        return true;
    }
    return false;
}

bool GroupDescriptor::is_elementary_abelian_2() const {
    switch (kind_) {
    case Kind::Z2Power: return true;
    case Kind::Dihedral: return param_ == 0;
    case Kind::Product:
        for (const auto& f : factors_)
            if (!f.is_elementary_abelian_2()) return false;
        return true;
    default: return false;
    }
}

bool GroupDescriptor::positive_dim_or_even_order() const {
    return dim() > 0 || order() % 2 == 0;
}

namespace {

GeneratorSet atomic_slots(const GroupDescriptor& g) {
    using K = GroupDescriptor::Kind;
    switch (g.kind()) {
    case K::Z2Power: return g.param() == 1 ? GeneratorSet::standard("x", 1, 1, true)
                                            : GeneratorSet::standard("t", g.param(), 1);
    case K::Dihedral: return GeneratorSet::standard("x", 1, 1, true);
    case K::Torus: return GeneratorSet::standard("y", g.param(), 2, true);
    case K::SU2: return GeneratorSet::standard("u", 1, 4, true);
    default: throw PreconditionError("not an atomic group");
    }
}

} // namespace

GeneratorSet GroupDescriptor::slots() const {
    if (kind_ != Kind::Product) return atomic_slots(*this);
    std::vector<Generator> gens;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        auto s = atomic_slots(factors_[i]);
        for (const auto& g : s.all()) gens.push_back({"g" + std::to_string(i + 1) + "." + g.name, g.degree});
    }
    return GeneratorSet(std::move(gens));
}

std::string GroupDescriptor::to_string() const {
    switch (kind_) {
    case Kind::Z2Power: return param_ == 1 ? "z2" : "z2^" + std::to_string(param_);
    case Kind::Dihedral: return "d" + std::to_string(4 * param_ + 2);
    case Kind::Torus: return param_ == 1 ? "t" : "t^" + std::to_string(param_);
    case Kind::SU2: return "su2";
    case Kind::Product: {
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i) s += "x";
            s += "(" + factors_[i].to_string() + ")";
        }
        return s;
    }
    }
    return {};
}

namespace {

struct GroupParser {
    const std::string& s;
    std::size_t pos = 0;

    [[noreturn]] void fail(const std::string& why) const {
        throw PreconditionError("bad group '" + s + "' at " + std::to_string(pos) + ": " + why);
    }
    bool eat(char c) {
        if (pos < s.size() && s[pos] == c) { ++pos; return true; }
        return false;
    }
    bool eat(const std::string& word) {
        if (s.compare(pos, word.size(), word) == 0) { pos += word.size(); return true; }
        return false;
    }
    unsigned number() {
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected a number");
        return static_cast<unsigned>(std::stoul(s.substr(start, pos - start)));
    }
    GroupDescriptor atom() {
        if (eat('(')) {
            auto g = product();
            if (!eat(')')) fail("expected ')'");
            return g;
        }
        if (eat("su2")) return GroupDescriptor::su2();
        if (eat("z2")) return GroupDescriptor::z2_power(eat('^') ? number() : 1);
        if (eat('d')) {
            unsigned order = number();
            if (order < 2 || (order - 2) % 4 != 0) fail("dihedral order must be 4n+2");
            return GroupDescriptor::dihedral((order - 2) / 4);
        }
        if (eat('t')) return GroupDescriptor::torus(eat('^') ? number() : 1);
        fail("unknown group");
    }
    GroupDescriptor product() {
        std::vector<GroupDescriptor> fs{atom()};
        while (eat('x')) fs.push_back(atom());
        return GroupDescriptor::product(fs);
    }
};

} // namespace

GroupDescriptor parse_group(const std::string& text) {
    std::string compact;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) compact += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    GroupParser p{compact};
    auto g = p.product();
    if (p.pos != compact.size()) p.fail("trailing input");
    return g;
}

CoefficientClass::CoefficientClass(GroupDescriptor g) : group_(std::move(g)) {}

CoefficientClass::CoefficientClass(GroupDescriptor g, std::vector<DPMonomial> terms)
    : group_(std::move(g)), terms_(std::move(terms)) {
    std::size_t n = group_.slots().size();
    for (const auto& t : terms_)
        if (t.size() != n) throw PreconditionError("coefficient monomial length does not match " + group_.to_string());
    canonicalize_terms(terms_);
}

CoefficientClass CoefficientClass::one(const GroupDescriptor& g) {
    return CoefficientClass(g, {DPMonomial(g.slots().size(), 0)});
}

CoefficientClass CoefficientClass::monomial(const GroupDescriptor& g, DPMonomial m) {
    return CoefficientClass(g, {std::move(m)});
}

CoefficientClass CoefficientClass::from_dp(const GroupDescriptor& g, const DPClass& c) {
    auto slots = g.slots();
    if (slots.size() != c.generators().size()) throw PreconditionError("class does not match slots of " + g.to_string());
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i].degree != c.generators()[i].degree)
            throw PreconditionError("generator degrees do not match slots of " + g.to_string());
    return CoefficientClass(g, c.terms());
}

CoefficientClass CoefficientClass::from_su2(const SU2Class& c) {
    std::vector<DPMonomial> terms;
    for (auto m : c.ms) terms.push_back({m});
    return CoefficientClass(GroupDescriptor::su2(), std::move(terms));
}

int CoefficientClass::degree() const {
    if (terms_.empty()) return -1;
    auto slots = group_.slots();
    int d = monomial_degree(slots, terms_.front());
    for (const auto& t : terms_)
        if (monomial_degree(slots, t) != d) throw PreconditionError("coefficient class is not homogeneous");
    return d;
}

DPClass CoefficientClass::as_dp() const {
    return DPClass(group_.slots(), terms_);
}

SU2Class CoefficientClass::as_su2() const {
    if (group_.kind() != GroupDescriptor::Kind::SU2) throw PreconditionError("not an SU(2) class");
    SU2Class c;
    for (const auto& t : terms_) c.ms.push_back(t[0]);
    return c;
}

CoefficientClass& CoefficientClass::operator+=(const CoefficientClass& o) {
    if (!(o.group_ == group_)) throw PreconditionError("sum of coefficient classes over different groups");
    terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
    canonicalize_terms(terms_);
    return *this;
}

std::string CoefficientClass::to_string() const {
    if (group_.kind() == GroupDescriptor::Kind::SU2) {
        if (terms_.empty()) return "0";
        std::string s;
        for (std::size_t i = 0; i < terms_.size(); ++i) {
            if (i) s += " + ";
            s += "u" + std::to_string(terms_[i][0]);
        }
        return s;
    }
    return as_dp().to_string();
}

std::vector<CoefficientClass> coefficient_basis(const GroupDescriptor& g, int d) {
    std::vector<CoefficientClass> out;
    for (auto& m : monomials_of_degree(g.slots(), d)) out.push_back(CoefficientClass::monomial(g, std::move(m)));
    return out;
}

} // namespace hsto
