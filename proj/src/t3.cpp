#include "hsto/t3.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "hsto/errors.hpp"

namespace hsto {

namespace {

// Multi-indices of length m and total p, lexicographic.
std::vector<std::vector<std::uint32_t>> compositions(std::size_t m, std::size_t p) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur(m, 0);
    auto rec = [&](auto&& self, std::size_t i, std::size_t left) -> void {
        if (i + 1 == m) {
            cur[i] = static_cast<std::uint32_t>(left);
            out.push_back(cur);
            return;
        }
        for (std::size_t v = 0; v <= left; ++v) {
            cur[i] = static_cast<std::uint32_t>(v);
            self(self, i + 1, left - v);
        }
    };
    if (m == 0) {
        if (p == 0) out.emplace_back();
        return out;
    }
    rec(rec, 0, p);
    return out;
}

} // namespace

ChainComplexF2 divided_power_resolution(std::size_t m, std::size_t max_degree) {
    const std::size_t ng = std::size_t{1} << m;
    std::vector<std::map<std::vector<std::uint32_t>, std::size_t>> index(max_degree + 2);
    ChainComplexF2 c;
    for (std::size_t p = 0; p <= max_degree + 1; ++p) {
        auto ks = compositions(m, p);
        for (std::size_t i = 0; i < ks.size(); ++i) index[p][ks[i]] = i;
        c.dims.push_back(ks.size() * ng);
    }
    c.boundary.emplace_back(0, c.dims[0]);
    for (std::size_t p = 1; p <= max_degree + 1; ++p) {
        F2Matrix d(c.dims[p - 1], c.dims[p]);
        for (const auto& [k, ki] : index[p])
            for (std::size_t g = 0; g < ng; ++g) {
                std::size_t col = ki * ng + g;
                for (std::size_t i = 0; i < m; ++i) {
                    if (k[i] == 0) continue;
                    auto lower = k;
                    --lower[i];
                    std::size_t base = index[p - 1].at(lower) * ng;
                    d.flip(base + g, col);
                    d.flip(base + (g ^ (std::size_t{1} << i)), col);
                }
            }
        c.boundary.push_back(std::move(d));
    }
    return c;
}

std::vector<std::size_t> elementary_abelian_homology(std::size_t m, std::size_t max_degree) {
    auto f = divided_power_resolution(m, max_degree);
    const std::size_t ng = std::size_t{1} << m;
    // F (x)_{F2[V_m]} F2 sends [g] to 1
    ChainComplexF2 q;
    for (auto d : f.dims) q.dims.push_back(d / ng);
    q.boundary.emplace_back(0, q.dims[0]);
    for (std::size_t p = 1; p < f.boundary.size(); ++p) {
        const auto& d = f.boundary[p];
        F2Matrix m2(q.dims[p - 1], q.dims[p]);
        for (std::size_t col = 0; col < q.dims[p]; ++col)
            for (std::size_t row = 0; row < d.rows(); ++row)
                if (d.get(row, col * ng)) m2.flip(row / ng, col);
        q.boundary.push_back(std::move(m2));
    }
    return homology(q).dims;
}

namespace {

enum Cell : std::uint8_t {
    Cube,
    Top, Front, Right,
    E1, E1p, E2, E2p, E3, E3p,
    V1, VEta, VTheta, VZeta,
    CellCount
};

int cell_dim(Cell c) {
    if (c == Cube) return 3;
    if (c <= Right) return 2;
    if (c <= E3p) return 1;
    return 0;
}

// Stabilizer generator as a V_2 mask; 0 for free cells, 4 for fixed vertices.
std::uint8_t stabilizer(Cell c) {
    switch (c) {
    case E1: case E1p: return 1;
    case E2: case E2p: return 2;
    case E3: case E3p: return 3;
    case V1: case VEta: case VTheta: case VZeta: return 4;
    default: return 0;
    }
}

std::uint8_t canonical(Cell c, std::uint8_t g) {
    std::uint8_t s = stabilizer(c);
    if (s == 4) return 0;
    if (s == 0) return g;
    return std::min<std::uint8_t>(g, g ^ s);
}

struct Gen {
    std::uint32_t k1, k2;
    Cell cell;
    std::uint8_t g;
    auto operator<=>(const Gen&) const = default;
};

using Chain = std::set<Gen>;

void toggle(Chain& c, Gen x) {
    x.g = canonical(x.cell, x.g);
    auto [it, fresh] = c.insert(x);
    if (!fresh) c.erase(it);
}

void add_into(Chain& dst, const Chain& src) {
    for (const auto& x : src) toggle(dst, x);
}

// (group element, cell) pairs of the cellular boundary of the cell at the identity.
std::vector<std::pair<std::uint8_t, Cell>> cell_boundary(Cell c) {
    switch (c) {
    case Cube: return {{0, Top}, {3, Top}, {0, Front}, {2, Front}, {0, Right}, {1, Right}};
    case Top: return {{2, E1}, {0, E1p}, {1, E2}, {1, E2p}};
    case Front: return {{2, E1}, {2, E1p}, {1, E3}, {1, E3p}};
    case Right: return {{1, E2}, {0, E2p}, {1, E3}, {0, E3p}};
    case E1: return {{0, V1}, {0, VEta}};
    case E1p: return {{0, VTheta}, {0, VZeta}};
    case E2: return {{0, V1}, {0, VTheta}};
    case E2p: return {{0, VEta}, {0, VZeta}};
    case E3: return {{0, V1}, {0, VZeta}};
    case E3p: return {{0, VEta}, {0, VTheta}};
    default: return {};
    }
}

// Boundary in the total complex of F (x)_{V_2} C.
Chain d(const Chain& in) {
    Chain out;
    for (const auto& x : in) {
        for (std::uint8_t i = 0; i < 2; ++i) {
            std::uint32_t ki = i == 0 ? x.k1 : x.k2;
            if (ki == 0) continue;
            Gen lower = x;
            (i == 0 ? lower.k1 : lower.k2) -= 1;
            toggle(out, lower);
            lower.g = static_cast<std::uint8_t>(x.g ^ (i + 1));
            toggle(out, lower);
        }
        for (auto [h, c] : cell_boundary(x.cell)) toggle(out, {x.k1, x.k2, c, static_cast<std::uint8_t>(x.g ^ h)});
    }
    return out;
}

// Cell boundary only (k ignored), for the complex C itself.
Chain d_cell(const Chain& in) {
    Chain out;
    for (const auto& x : in)
        for (auto [h, c] : cell_boundary(x.cell)) toggle(out, {x.k1, x.k2, c, static_cast<std::uint8_t>(x.g ^ h)});
    return out;
}

Chain single(std::uint32_t k1, std::uint32_t k2, Cell c, std::uint8_t g = 0) {
    Chain ch;
    toggle(ch, {k1, k2, c, g});
    return ch;
}

// t = sum of [g] over a subset of group elements.
Chain act(const Chain& in, std::initializer_list<std::uint8_t> elems) {
    Chain out;
    for (const auto& x : in)
        for (auto h : elems) toggle(out, {x.k1, x.k2, x.cell, static_cast<std::uint8_t>(x.g ^ h)});
    return out;
}

std::vector<Gen> cell_basis(int dim) {
    std::vector<Gen> out;
    for (std::uint8_t c = 0; c < CellCount; ++c) {
        if (cell_dim(static_cast<Cell>(c)) != dim) continue;
        std::set<std::uint8_t> gs;
        for (std::uint8_t g = 0; g < 4; ++g) gs.insert(canonical(static_cast<Cell>(c), g));
        for (auto g : gs) out.push_back({0, 0, static_cast<Cell>(c), g});
    }
    return out;
}

} // namespace

bool T3Report::ok() const {
    return d_squared_zero && top_class_cycle && boundary_identity &&
           cell_homology == std::vector<std::size_t>{1, 3, 3, 1};
}

std::string T3Report::summary() const {
    std::ostringstream os;
    os << "n1=" << n1 << " n2=" << n2 << " d^2=0:" << d_squared_zero << " top-cycle:" << top_class_cycle
       << " identity:" << boundary_identity << " H(C)=(";
    for (std::size_t i = 0; i < cell_homology.size(); ++i) os << (i ? "," : "") << cell_homology[i];
    os << ")";
    return os.str();
}

T3Report t3_verify(std::uint32_t n1, std::uint32_t n2) {
    T3Report r;
    r.n1 = n1;
    r.n2 = n2;

    // (i) d^2 = 0
    bool sq = divided_power_resolution(2, n1 + n2 + 5).squares_to_zero();
    for (int dim = 0; dim <= 3 && sq; ++dim)
        for (const auto& x : cell_basis(dim))
            if (!d_cell(d_cell(single(0, 0, x.cell, x.g))).empty()) sq = false;
    const std::uint32_t bound = n1 + n2 + 5;
    for (std::uint32_t k1 = 0; k1 <= bound && sq; ++k1)
        for (std::uint32_t k2 = 0; k1 + k2 <= bound && sq; ++k2)
            for (int dim = 0; dim <= 3 && sq; ++dim)
                for (const auto& x : cell_basis(dim))
                    if (!d(d(single(k1, k2, x.cell, x.g))).empty()) sq = false;
    r.d_squared_zero = sq;

    // (ii) t1 t2 e_cube = sum_g [g] e_cube
    Chain top = act(single(0, 0, Cube), {0, 1, 2, 3});
    Chain top_tot = act(single(n1, n2, Cube), {0, 1, 2, 3});
    r.top_class_cycle = d_cell(top).empty() && d(top_tot).empty();

    // (iii) d(c1 + c2 + c3) = X^[n1,n2] (x) t1 t2 e_cube + sum_{i=0}^{n1+1} X^[i, n1+n2+3-i] (x) (all vertices)
    const std::uint32_t s = n1 + n2 + 3;
    Chain c;
    add_into(c, act(single(n1 + 1, n2, Cube), {0, 2}));
    Chain faces = single(n1 + 2, n2, Top);
    add_into(faces, single(n1 + 2, n2, Right));
    add_into(c, act(faces, {0, 2}));
    add_into(c, single(n1 + 2, n2 + 1, E1));
    add_into(c, single(n1 + 2, n2 + 1, E1p));
    for (std::uint32_t i = 0; i <= n1 + 2; ++i) {
        add_into(c, single(i, s - i, E3));
        add_into(c, single(i, s - i, E3p));
    }
    Chain expected = top_tot;
    for (std::uint32_t i = 0; i <= n1 + 1; ++i)
        for (Cell v : {V1, VEta, VTheta, VZeta}) toggle(expected, {i, s - i, v, 0});
    r.boundary_identity = d(c) == expected;

    // (iv) homology of C as an F2 complex
    ChainComplexF2 cc;
    std::vector<std::vector<Gen>> basis;
    for (int dim = 0; dim <= 3; ++dim) {
        basis.push_back(cell_basis(dim));
        cc.dims.push_back(basis.back().size());
    }
    cc.dims.push_back(0);
    cc.boundary.emplace_back(0, cc.dims[0]);
    for (int dim = 1; dim <= 3; ++dim) {
        F2Matrix m(cc.dims[dim - 1], cc.dims[dim]);
        const auto& lower = basis[dim - 1];
        for (std::size_t j = 0; j < basis[dim].size(); ++j)
            for (const auto& y : d_cell(single(0, 0, basis[dim][j].cell, basis[dim][j].g))) {
                auto it = std::find(lower.begin(), lower.end(), y);
                m.flip(static_cast<std::size_t>(it - lower.begin()), j);
            }
        cc.boundary.push_back(std::move(m));
    }
    cc.boundary.emplace_back(cc.dims[3], 0);
    r.cell_homology = homology(cc).dims;
    return r;
}

} // namespace hsto
