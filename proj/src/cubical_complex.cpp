#include "ncs/cubical_complex.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace ncs {

namespace {

struct FaceKey {
    std::uint64_t support;
    std::uint64_t signs;
    friend bool operator==(const FaceKey&, const FaceKey&) = default;
};

struct FaceKeyHash {
    std::size_t operator()(const FaceKey& k) const {
        std::uint64_t h = k.support * 0x9e3779b97f4a7c15ULL;
        h ^= k.signs + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

FaceKey key_of(const SignVector& f) { return {f.support(), f.signs()}; }

// Visits every subface of f exactly once (3^dim visits).
template <typename Fn>
void for_each_subface(const SignVector& f, Fn&& fn) {
    std::uint64_t zeros = f.zero_set();
    std::uint64_t chosen = 0;
    while (true) {
        int bits[64];
        int m = 0;
        for (std::uint64_t c = chosen; c != 0; c &= c - 1)
            bits[m++] = std::countr_zero(c);
        for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << m); ++assign) {
            std::uint64_t extra = 0;
            for (int j = 0; j < m; ++j)
                if (assign & (std::uint64_t{1} << j)) extra |= std::uint64_t{1} << bits[j];
            fn(FaceKey{f.support() | chosen, f.signs() | extra});
        }
        if (chosen == zeros) break;
        chosen = (chosen - zeros) & zeros;  // next submask of zeros
    }
}

}  // namespace

CubicalComplex::CubicalComplex(int ambient_dim, std::vector<SignVector> facets)
    : n_(ambient_dim), facets_(std::move(facets)) {
    if (n_ < 1 || n_ > 64)
        throw Error("CubicalComplex: ambient dimension must be in [1,64]");
    for (const auto& f : facets_)
        if (f.ambient_dim() != n_)
            throw Error("CubicalComplex: facet ambient mismatch");
    std::sort(facets_.begin(), facets_.end());
    facets_.erase(std::unique(facets_.begin(), facets_.end()), facets_.end());
    if (facets_.empty()) return;
    int d = facets_.front().dim();
    bool pure = std::all_of(facets_.begin(), facets_.end(),
                            [&](const SignVector& f) { return f.dim() == d; });
    if (pure) {
        pure_dim_ = d;  // distinct faces of equal dimension are incomparable
        return;
    }
    for (const auto& f : facets_)
        for (const auto& g : facets_)
            if (!(f == g) && is_subface(f, g))
                throw Error("CubicalComplex: facet " + f.to_string() +
                            " is a subface of " + g.to_string());
}

CubicalComplex CubicalComplex::cube_boundary(int n) {
    std::vector<SignVector> facets;
    facets.reserve(2 * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        std::uint64_t bit = std::uint64_t{1} << i;
        facets.emplace_back(n, bit, bit);
        facets.emplace_back(n, bit, 0);
    }
    return CubicalComplex(n, std::move(facets));
}

bool CubicalComplex::contains_facet(const SignVector& f) const {
    return std::binary_search(facets_.begin(), facets_.end(), f);
}

bool CubicalComplex::contains_face(const SignVector& f) const {
    for (const auto& g : facets_)
        if (is_subface(f, g)) return true;
    return false;
}

CubicalComplex mirror_complex(const SimplicialComplex& complex) {
    int n = complex.n_vertices();
    std::vector<SignVector> facets;
    for (auto face : complex.facets()) {
        std::uint64_t support = ~face & low_mask(n);  // nonzeros at non-members
        int bits[64];
        int m = 0;
        for (std::uint64_t s = support; s != 0; s &= s - 1)
            bits[m++] = std::countr_zero(s);
        for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << m); ++assign) {
            std::uint64_t signs = 0;
            for (int j = 0; j < m; ++j)
                if (assign & (std::uint64_t{1} << j)) signs |= std::uint64_t{1} << bits[j];
            facets.emplace_back(n, support, signs);
        }
    }
    return CubicalComplex(n, std::move(facets));
}

CubicalComplex fissure(const CubicalComplex& whole, const CubicalComplex& part1,
                       const CubicalComplex& part2, FissureOptions options) {
    int n = whole.ambient_dim();
    if (part1.ambient_dim() != n || part2.ambient_dim() != n)
        throw Error("fissure: ambient dimension mismatch");
    if (!whole.is_pure()) throw Error("fissure: complex is not pure");
    if (whole.empty()) throw Error("fissure: empty complex");
    int d = *whole.pure_dim();

    for (const auto& f : part1.facets())
        if (!whole.contains_facet(f))
            throw Error("fissure: part1 facet " + f.to_string() + " not in complex");
    for (const auto& f : part2.facets())
        if (!whole.contains_facet(f))
            throw Error("fissure: part2 facet " + f.to_string() + " not in complex");

    if (options.strict) {
        std::vector<SignVector> inter;
        std::set_intersection(part1.facets().begin(), part1.facets().end(),
                              part2.facets().begin(), part2.facets().end(),
                              std::back_inserter(inter));
        if (!inter.empty()) throw Error("fissure: parts are not facet-disjoint");
        if (part1.facets().size() + part2.facets().size() != whole.facets().size())
            throw Error("fissure: parts do not cover the complex");
    }
    if (part1.empty() || part2.empty())
        warn("fissure: degenerate split (one side has no facets)");

    auto ridge_set = [&](const CubicalComplex& part) {
        std::unordered_set<FaceKey, FaceKeyHash> ridges;
        for (const auto& f : part.facets())
            for (std::uint64_t z = f.zero_set(); z != 0; z &= z - 1) {
                std::uint64_t bit = z & -z;
                ridges.insert({f.support() | bit, f.signs() | bit});
                ridges.insert({f.support() | bit, f.signs()});
            }
        return ridges;
    };
    auto r1 = ridge_set(part1);
    auto r2 = ridge_set(part2);

    std::vector<SignVector> out;
    out.reserve(part1.facets().size() + part2.facets().size() + r1.size());
    for (const auto& f : part1.facets()) out.push_back(f.append(+1));
    for (const auto& f : part2.facets()) out.push_back(f.append(-1));
    for (const auto& r : r1)
        if (r2.count(r)) out.push_back(SignVector(n, r.support, r.signs).append(0));
    for (const auto& f : out)
        if (f.dim() != d) throw Error("fissure: internal dimension error");
    return CubicalComplex(n + 1, std::move(out));
}

FVector f_vector_cubical(const CubicalComplex& complex) {
    std::unordered_set<FaceKey, FaceKeyHash> seen;
    int top = 0;
    for (const auto& f : complex.facets()) {
        top = std::max(top, f.dim());
        for_each_subface(f, [&](FaceKey k) { seen.insert(k); });
    }
    std::vector<std::int64_t> counts(static_cast<std::size_t>(top) + 1, 0);
    int n = complex.ambient_dim();
    for (const auto& k : seen)
        ++counts[static_cast<std::size_t>(n - popcount64(k.support))];
    return FVector(std::move(counts));
}

std::vector<SignVector> k_faces_cubical(const CubicalComplex& complex, int k) {
    std::unordered_set<FaceKey, FaceKeyHash> seen;
    for (const auto& f : complex.facets()) {
        if (k > f.dim()) continue;
        for (const auto& s : subfaces(f, k)) seen.insert(key_of(s));
    }
    std::vector<SignVector> out;
    out.reserve(seen.size());
    for (const auto& key : seen)
        out.emplace_back(complex.ambient_dim(), key.support, key.signs);
    std::sort(out.begin(), out.end());
    return out;
}

bool is_cubically_k_neighborly(const CubicalComplex& complex, int k) {
    if (k < 1) throw Error("is_cubically_k_neighborly: k must be >= 1");
    int n = complex.ambient_dim();
    if (k - 1 > n) return false;
    // distinct (k-1)-faces are always a subset of the cube's; equality is
    // a count check
    auto faces = k_faces_cubical(complex, k - 1);
    return static_cast<std::int64_t>(faces.size()) == cube_face_count(n, k - 1);
}

CubicalComplex boundary_cubical(const CubicalComplex& complex) {
    if (!complex.is_pure()) throw Error("boundary_cubical: complex is not pure");
    std::unordered_map<FaceKey, int, FaceKeyHash> ridge_count;
    for (const auto& f : complex.facets())
        for (std::uint64_t z = f.zero_set(); z != 0; z &= z - 1) {
            std::uint64_t bit = z & -z;
            ++ridge_count[{f.support() | bit, f.signs() | bit}];
            ++ridge_count[{f.support() | bit, f.signs()}];
        }
    std::vector<SignVector> boundary;
    for (const auto& [key, count] : ridge_count)
        if (count == 1)
            boundary.emplace_back(complex.ambient_dim(), key.support, key.signs);
    return CubicalComplex(complex.ambient_dim(), std::move(boundary));
}

}  // namespace ncs
