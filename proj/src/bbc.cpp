#include "ncs/bbc.hpp"

#include <algorithm>

namespace ncs {

const char* to_string(BbcViolation v) {
    switch (v) {
        case BbcViolation::ApexMissing: return "APEX_MISSING";
        case BbcViolation::BNotInBoundary: return "B_NOT_IN_BOUNDARY";
        case BbcViolation::NotPure: return "NOT_PURE";
        case BbcViolation::WrongVertexRange: return "WRONG_VERTEX_RANGE";
    }
    return "?";
}

namespace {
[[noreturn]] void fail(BbcViolation v, int i, const std::string& detail) {
    throw BbcError(v, i, std::string(to_string(v)) + "(" + std::to_string(i) + "): " + detail);
}
}  // namespace

BBCSequence BBCSequence::validate(std::vector<SimplicialComplex> balls, int d, int n) {
    if (d < 3) throw Error("BBCSequence: d must be >= 3");
    if (n <= d) throw Error("BBCSequence: n must exceed d");
    if (static_cast<int>(balls.size()) != n - d)
        throw Error("BBCSequence: expected " + std::to_string(n - d) + " balls, got " +
                    std::to_string(balls.size()));
    for (int i = d; i <= n - 1; ++i) {
        const SimplicialComplex& t = balls[static_cast<std::size_t>(i - d)];
        if (t.n_vertices() != i)
            fail(BbcViolation::WrongVertexRange, i,
                 "T_" + std::to_string(i) + " must live on " + std::to_string(i) +
                     " vertices, has " + std::to_string(t.n_vertices()));
        if (!t.is_pure() || *t.pure_dim() != d - 1)
            fail(BbcViolation::NotPure, i,
                 "T_" + std::to_string(i) + " must be pure of dimension " +
                     std::to_string(d - 1));
        std::uint64_t apex = std::uint64_t{1} << (i - 1);
        for (auto f : t.facets())
            if (!(f & apex))
                fail(BbcViolation::ApexMissing, i,
                     "facet without apex vertex " + std::to_string(i - 1));
        if (i > d) {
            const SimplicialComplex& prev = balls[static_cast<std::size_t>(i - d - 1)];
            SimplicialComplex prev_boundary = boundary_complex(prev);
            for (auto f : t.facets()) {
                std::uint64_t b = f & ~apex;
                if (!prev_boundary.is_facet(b))
                    fail(BbcViolation::BNotInBoundary, i,
                         "B_" + std::to_string(i - 1) +
                             " face not in the boundary of T_" + std::to_string(i - 1));
            }
        }
    }
    return BBCSequence(std::move(balls), d, n);
}

const SimplicialComplex& BBCSequence::ball(int i) const {
    if (i < d_ || i > n_ - 1) throw Error("BBCSequence::ball: index out of range");
    return balls_[static_cast<std::size_t>(i - d_)];
}

SimplicialComplex BBCSequence::derived_b(int i) const {
    const SimplicialComplex& t = ball(i + 1);
    std::uint64_t apex = std::uint64_t{1} << i;
    std::vector<std::uint64_t> faces;
    faces.reserve(t.facets().size());
    for (auto f : t.facets()) faces.push_back(f & ~apex);
    return SimplicialComplex(i, std::move(faces));
}

BBCSequence bbc_from_cyclic(int d, int n) {
    if (d < 3 || n <= d) throw Error("bbc_from_cyclic: requires n > d >= 3");
    std::vector<SimplicialComplex> balls;
    balls.reserve(static_cast<std::size_t>(n - d));
    for (int i = d; i <= n - 1; ++i)
        balls.push_back(pulling_triangulation_cyclic(d - 1, i));
    try {
        return BBCSequence::validate(std::move(balls), d, n);
    } catch (const BbcError& e) {
        throw std::logic_error(std::string("bbc_from_cyclic: pulling chain failed "
                                           "validation: ") + e.what());
    }
}

CubicalComplex build_inductive(const BBCSequence& seq) {
    int d = seq.d(), n = seq.n();
    CubicalComplex sphere = CubicalComplex::cube_boundary(d + 1);
    for (int k = d + 2; k <= n; ++k) {
        CubicalComplex lifted = mirror_complex(seq.ball(k - 1));
        for (const auto& f : lifted.facets())
            if (!sphere.contains_facet(f))
                throw std::logic_error("build_inductive: mirror(T_" +
                                       std::to_string(k - 1) +
                                       ") is not a subcomplex of S_" +
                                       std::to_string(k - 1));
        std::vector<SignVector> rest;
        std::set_difference(sphere.facets().begin(), sphere.facets().end(),
                            lifted.facets().begin(), lifted.facets().end(),
                            std::back_inserter(rest));
        CubicalComplex dropped(k - 1, std::move(rest));
        sphere = fissure(sphere, lifted, dropped);
    }
    return sphere;
}

namespace {

// All sign assignments of `support` appended to the fixed tail bits.
void emit_signings(int n, std::uint64_t support, std::uint64_t fixed_support,
                   std::uint64_t fixed_signs, std::vector<SignVector>& out) {
    int bits[64];
    int m = 0;
    for (std::uint64_t s = support; s != 0; s &= s - 1)
        bits[m++] = std::countr_zero(s);
    for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << m); ++assign) {
        std::uint64_t signs = fixed_signs;
        for (int j = 0; j < m; ++j)
            if (assign & (std::uint64_t{1} << j)) signs |= std::uint64_t{1} << bits[j];
        out.emplace_back(n, support | fixed_support, signs);
    }
}

}  // namespace

CubicalComplex build_direct(const BBCSequence& seq) {
    int d = seq.d(), n = seq.n();
    if (!(n > d && d > 2)) throw Error("build_direct: requires n > d > 2");
    std::vector<SignVector> facets;

    // type 0: last entry zero, prefix over a boundary facet of T_{n-1}
    {
        SimplicialComplex bd = boundary_complex(seq.ball(n - 1));
        for (auto face : bd.facets()) {
            std::uint64_t support = ~face & low_mask(n - 1);
            emit_signings(n, support, 0, 0, facets);
        }
    }

    // type 0 < t < n-d: (prefix, 0, sigma, -1, ..., -1)
    for (int t = 1; t <= n - d - 1; ++t) {
        int m = n - t - 1;  // prefix length
        SimplicialComplex bd = boundary_complex(seq.ball(m));
        const SimplicialComplex& next_ball = seq.ball(n - t);
        for (auto face : bd.facets()) {
            // sigma says whether the prefix face extended by vertex m
            // (the apex of T_{n-t}) is a facet of T_{n-t}
            bool inside = next_ball.is_facet(face | (std::uint64_t{1} << m));
            std::uint64_t fixed_support = 0, fixed_signs = 0;
            fixed_support |= std::uint64_t{1} << (n - t);  // sigma slot
            if (inside) fixed_signs |= std::uint64_t{1} << (n - t);
            for (int p = n - t + 1; p < n; ++p)
                fixed_support |= std::uint64_t{1} << p;  // trailing -1s
            std::uint64_t support = ~face & low_mask(m);
            emit_signings(n, support, fixed_support, fixed_signs, facets);
        }
    }

    // type n-d: (0,...,0, sigma, -1,...,-1)
    {
        std::uint64_t fixed_support = 0;
        for (int p = d; p < n; ++p) fixed_support |= std::uint64_t{1} << p;
        std::uint64_t minus_tail_signs = 0;  // all -1
        facets.emplace_back(n, fixed_support,
                            minus_tail_signs | (std::uint64_t{1} << d));  // sigma = +1
        facets.emplace_back(n, fixed_support, minus_tail_signs);          // sigma = -1
    }

    return CubicalComplex(n, std::move(facets));
}

int facet_type(const SignVector& facet, int d) {
    if (facet.dim() != d)
        throw Error("facet_type: expected exactly " + std::to_string(d) + " zeros");
    int n = facet.ambient_dim();
    int t = 0;
    while (t < n && facet.entry(n - 1 - t) != 0) ++t;
    return t;
}

std::vector<std::int64_t> facet_type_counts(const CubicalComplex& sphere, int d) {
    int n = sphere.ambient_dim();
    std::vector<std::int64_t> counts(static_cast<std::size_t>(n - d) + 1, 0);
    for (const auto& f : sphere.facets())
        ++counts[static_cast<std::size_t>(facet_type(f, d))];
    return counts;
}

}  // namespace ncs
