#include "hsto/bar_complex.hpp"

#include <algorithm>

#include "hsto/errors.hpp"

namespace hsto {

bool ChainComplexF2::squares_to_zero() const {
    for (std::size_t n = 2; n < boundary.size(); ++n)
        if (!(boundary[n - 1] * boundary[n]).is_zero()) return false;
    return true;
}

F2Vector HomologyF2::coordinates(std::size_t degree, const F2Vector& z) const {
    const auto& reps = representatives[degree];
    std::vector<F2Vector> cols = reps;
    cols.insert(cols.end(), boundaries[degree].begin(), boundaries[degree].end());
    auto x = solve(from_columns(cols, z.size()), z);
    if (!x) throw PreconditionError("coordinates: vector is not a cycle");
    F2Vector c(reps.size());
    for (std::size_t i = 0; i < reps.size(); ++i) c.set(i, x->get(i));
    return c;
}

HomologyF2 homology(const ChainComplexF2& c) {
    if (c.boundary.size() < 2) throw PreconditionError("homology: need at least d_1");
    const std::size_t top = c.boundary.size() - 1;
    HomologyF2 h;
    for (std::size_t n = 0; n < top; ++n) {
        const std::size_t dim = c.dims[n];
        std::vector<F2Vector> kernel;
        if (n == 0) {
            for (std::size_t i = 0; i < dim; ++i) {
                F2Vector v(dim);
                v.set(i);
                kernel.push_back(std::move(v));
            }
        } else {
            kernel = rank_kernel(c.boundary[n]).kernel;
        }
        const auto& dn1 = c.boundary[n + 1];
        F2Span span(dim);
        std::vector<F2Vector> image;
        for (std::size_t j = 0; j < dn1.cols(); ++j) {
            auto col = dn1.column(j);
            if (span.add(col)) image.push_back(std::move(col));
        }
        std::vector<F2Vector> reps;
        for (auto& z : kernel)
            if (span.add(z)) reps.push_back(std::move(z));
        h.dims.push_back(reps.size());
        h.representatives.push_back(std::move(reps));
        h.boundaries.push_back(std::move(image));
    }
    return h;
}

CosetBarComplex::CosetBarComplex(const FiniteGroupTable& gamma, std::vector<std::uint32_t> subgroup, std::size_t max_degree)
    : gamma_(gamma) {
    std::sort(subgroup.begin(), subgroup.end());
    if (!gamma.is_subgroup(subgroup)) throw PreconditionError("CosetBarComplex: not a subgroup");
    const std::size_t n = gamma.order();
    coset_of_.assign(n, UINT32_MAX);
    for (std::uint32_t g = 0; g < n; ++g) {
        if (coset_of_[g] != UINT32_MAX) continue;
        auto id = static_cast<std::uint32_t>(coset_reps_.size());
        coset_reps_.push_back(g);  // smallest element of H g, since g ascends
        for (auto h : subgroup) coset_of_[gamma.mul(h, g)] = id;
    }
    to_nonid_.assign(n, UINT32_MAX);
    for (std::uint32_t g = 0; g < n; ++g)
        if (g != gamma.identity()) {
            to_nonid_[g] = static_cast<std::uint32_t>(from_nonid_.size());
            from_nonid_.push_back(g);
        }

    const std::size_t nc = coset_reps_.size(), base = n - 1;
    auto& cx = complex_;
    std::size_t dim = nc;
    for (std::size_t d = 0; d <= max_degree + 1; ++d) {
        cx.dims.push_back(dim);
        dim *= base;
    }
    cx.boundary.emplace_back(0, cx.dims[0]);
    for (std::size_t d = 1; d <= max_degree + 1; ++d) {
        F2Matrix m(cx.dims[d - 1], cx.dims[d]);
        std::vector<std::uint32_t> gs(d), face;
        for (std::size_t col = 0; col < cx.dims[d]; ++col) {
            std::size_t x = col;
            std::uint32_t c = static_cast<std::uint32_t>(x % nc);
            x /= nc;
            for (std::size_t i = 0; i < d; ++i) {
                gs[i] = from_nonid_[x % base];
                x /= base;
            }
            // d_0: [c g_1 | g_2 | ...]
            face.assign(gs.begin() + 1, gs.end());
            m.flip(index(coset_of_[gamma.mul(coset_reps_[c], gs[0])], face), col);
            for (std::size_t i = 0; i + 1 < d; ++i) {
                std::uint32_t p = gamma.mul(gs[i], gs[i + 1]);
                if (p == gamma.identity()) continue;
                face.clear();
                face.insert(face.end(), gs.begin(), gs.begin() + static_cast<std::ptrdiff_t>(i));
                face.push_back(p);
                face.insert(face.end(), gs.begin() + static_cast<std::ptrdiff_t>(i + 2), gs.end());
                m.flip(index(c, face), col);
            }
            face.assign(gs.begin(), gs.end() - 1);
            m.flip(index(c, face), col);
        }
        cx.boundary.push_back(std::move(m));
    }
}

std::size_t CosetBarComplex::index(std::uint32_t coset, const std::vector<std::uint32_t>& gs) const {
    const std::size_t base = gamma_.order() - 1;
    std::size_t x = 0;
    for (std::size_t i = gs.size(); i-- > 0;) x = x * base + to_nonid_[gs[i]];
    return coset + coset_reps_.size() * x;
}

std::vector<std::size_t> bar_homology(const FiniteGroupTable& g, std::size_t max_degree) {
    std::vector<std::uint32_t> all(g.order());
    for (std::uint32_t i = 0; i < g.order(); ++i) all[i] = i;
    CosetBarComplex bar(g, all, max_degree);
    return homology(bar.complex()).dims;
}

namespace {

std::vector<std::uint32_t> whole(const FiniteGroupTable& g) {
    std::vector<std::uint32_t> all(g.order());
    for (std::uint32_t i = 0; i < g.order(); ++i) all[i] = i;
    return all;
}

} // namespace

F2Matrix transfer_map(const FiniteGroupTable& gamma, const std::vector<std::uint32_t>& subgroup, std::size_t degree) {
    CosetBarComplex big(gamma, whole(gamma), degree);
    CosetBarComplex small(gamma, subgroup, degree);
    auto hb = homology(big.complex());
    auto hs = homology(small.complex());
    const std::size_t nc = small.cosets();
    F2Matrix out(hs.dims[degree], hb.dims[degree]);
    for (std::size_t j = 0; j < hb.dims[degree]; ++j) {
        const auto& z = hb.representatives[degree][j];
        F2Vector t(small.complex().dims[degree]);
        // [g_1 | ... | g_n] -> sum over cosets c of [c | g_1 | ... | g_n]
        for (std::size_t i = 0; i < z.size(); ++i)
            if (z.get(i))
                for (std::size_t c = 0; c < nc; ++c) t.flip(c + nc * i);
        out.set_column(j, hs.coordinates(degree, t));
    }
    return out;
}

F2Matrix induced_map(const FiniteGroupTable& gamma, const std::vector<std::uint32_t>& subgroup, std::size_t degree) {
    CosetBarComplex big(gamma, whole(gamma), degree);
    CosetBarComplex small(gamma, subgroup, degree);
    auto hb = homology(big.complex());
    auto hs = homology(small.complex());
    const std::size_t nc = small.cosets();
    F2Matrix out(hb.dims[degree], hs.dims[degree]);
    for (std::size_t j = 0; j < hs.dims[degree]; ++j) {
        const auto& z = hs.representatives[degree][j];
        F2Vector p(big.complex().dims[degree]);
        for (std::size_t i = 0; i < z.size(); ++i)
            if (z.get(i)) p.flip(i / nc);
        out.set_column(j, hb.coordinates(degree, p));
    }
    return out;
}

} // namespace hsto
