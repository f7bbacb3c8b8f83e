#include "ncs/simplicial_complex.hpp"

#include <algorithm>
#include <unordered_map>
#include <unordered_set>

namespace ncs {

SimplicialComplex::SimplicialComplex(int n_vertices, std::vector<std::uint64_t> faces)
    : n_(n_vertices) {
    if (n_ < 1 || n_ > 64)
        throw Error("SimplicialComplex: vertex count must be in [1,64]");
    std::uint64_t full = low_mask(n_);
    for (auto f : faces) {
        if (f & ~full) throw Error("SimplicialComplex: face exceeds vertex range");
        if (f == 0) throw Error("SimplicialComplex: empty face not allowed as facet");
    }
    std::sort(faces.begin(), faces.end());
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
    // Drop dominated faces; table-style inputs are facet lists, so this
    // normally removes nothing.
    std::size_t dropped = 0;
    for (auto f : faces) {
        bool dominated = false;
        for (auto g : faces) {
            if (g != f && (f & g) == f) {
                dominated = true;
                break;
            }
        }
        if (dominated) ++dropped;
        else facets_.push_back(f);
    }
    if (dropped)
        warn("SimplicialComplex: dropped " + std::to_string(dropped) +
             " dominated face(s)");
    if (facets_.empty()) throw Error("SimplicialComplex: no facets");
    int k = popcount64(facets_.front());
    bool pure = std::all_of(facets_.begin(), facets_.end(),
                            [&](std::uint64_t f) { return popcount64(f) == k; });
    if (pure) pure_dim_ = k - 1;
}

SimplicialComplex SimplicialComplex::simplex(int d) {
    return SimplicialComplex(d, {low_mask(d)});
}

bool SimplicialComplex::is_facet(std::uint64_t face) const {
    return std::binary_search(facets_.begin(), facets_.end(), face);
}

bool SimplicialComplex::contains_face(std::uint64_t face) const {
    for (auto f : facets_)
        if ((face & f) == face) return true;
    return false;
}

std::uint64_t SimplicialComplex::used_vertices() const {
    std::uint64_t u = 0;
    for (auto f : facets_) u |= f;
    return u;
}

FVector f_vector_simplicial(const SimplicialComplex& complex) {
    std::unordered_set<std::uint64_t> seen;
    int top = 0;
    for (auto f : complex.facets()) {
        top = std::max(top, popcount64(f) - 1);
        // enumerate all non-empty subsets of the facet
        std::uint64_t sub = f;
        while (true) {
            seen.insert(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    seen.erase(0);
    std::vector<std::int64_t> counts(static_cast<std::size_t>(top) + 1, 0);
    for (auto face : seen) ++counts[static_cast<std::size_t>(popcount64(face) - 1)];
    return FVector(std::move(counts));
}

std::vector<std::uint64_t> k_faces_simplicial(const SimplicialComplex& complex, int k) {
    std::unordered_set<std::uint64_t> seen;
    for (auto f : complex.facets())
        for_each_submask_of_size(f, k + 1, [&](std::uint64_t s) { seen.insert(s); });
    std::vector<std::uint64_t> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end());
    return out;
}

SimplicialComplex boundary_complex(const SimplicialComplex& complex) {
    if (!complex.is_pure())
        throw Error("boundary_complex: complex is not pure");
    std::unordered_map<std::uint64_t, int> ridge_count;
    for (auto f : complex.facets())
        for (std::uint64_t v = f; v != 0; v &= v - 1)
            ++ridge_count[f & ~(v & -v)];
    std::vector<std::uint64_t> boundary;
    for (auto& [ridge, count] : ridge_count)
        if (count == 1) boundary.push_back(ridge);
    if (boundary.empty())
        throw Error("boundary_complex: boundary is empty (closed complex)");
    return SimplicialComplex(complex.n_vertices(), std::move(boundary));
}

SimplicialComplex cone(const SimplicialComplex& complex, int v) {
    if (v < 0 || v >= 64) throw Error("cone: vertex out of range");
    std::uint64_t bit = std::uint64_t{1} << v;
    if (complex.used_vertices() & bit)
        throw Error("cone: vertex " + std::to_string(v) + " already present");
    std::vector<std::uint64_t> facets;
    facets.reserve(complex.facets().size());
    for (auto f : complex.facets()) facets.push_back(f | bit);
    int n = std::max(complex.n_vertices(), v + 1);
    return SimplicialComplex(n, std::move(facets));
}

bool is_simplicially_k_neighborly(const SimplicialComplex& complex, int k) {
    if (k < 1) throw Error("is_simplicially_k_neighborly: k must be >= 1");
    int n = complex.n_vertices();
    if (k > n) return false;
    bool ok = true;
    for_each_submask_of_size(low_mask(n), k, [&](std::uint64_t subset) {
        if (ok && !complex.contains_face(subset)) ok = false;
    });
    return ok;
}

bool gale_even(std::uint64_t ones, int n) {
    // Check zero runs between consecutive set bits.
    int prev = -1;
    for (int i = 0; i < n; ++i) {
        if (!(ones & (std::uint64_t{1} << i))) continue;
        if (prev >= 0 && ((i - prev - 1) & 1)) return false;
        prev = i;
    }
    return true;
}

SimplicialComplex gale_facets_cyclic(int d, int n) {
    if (d < 1 || n < d + 1)
        throw Error("gale_facets_cyclic: requires n >= d+1 >= 2");
    if (n > 64) throw Error("gale_facets_cyclic: n exceeds 64");
    std::vector<std::uint64_t> facets;
    // zeros mark the members of the facet
    for_each_submask_of_size(low_mask(n), d, [&](std::uint64_t members) {
        std::uint64_t ones = ~members & low_mask(n);
        if (gale_even(ones, n)) facets.push_back(members);
    });
    return SimplicialComplex(n, std::move(facets));
}

SimplicialComplex pulling_triangulation_cyclic(int d_poly, int i) {
    if (d_poly < 1 || i < d_poly + 1)
        throw Error("pulling_triangulation_cyclic: requires i >= d_poly+1 >= 2");
    if (i > 64) throw Error("pulling_triangulation_cyclic: i exceeds 64");
    std::uint64_t apex = std::uint64_t{1} << (i - 1);
    std::vector<std::uint64_t> facets;
    for_each_submask_of_size(low_mask(i), d_poly + 1, [&](std::uint64_t members) {
        if (!(members & apex)) return;
        std::uint64_t ones = ~members & low_mask(i);
        // prefix of the complement word must be Gale-even
        if (!gale_even(ones, i - 1)) return;
        if (ones == 0) {
            facets.push_back(members);  // the full simplex at i = d_poly+1
            return;
        }
        // trailing zero run of the complement word must have odd length
        int last_one = 63 - std::countl_zero(ones);
        if ((i - 1 - last_one) & 1) facets.push_back(members);
    });
    return SimplicialComplex(i, std::move(facets));
}

}  // namespace ncs
