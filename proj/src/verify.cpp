#include "ncs/verify.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace ncs {

std::int64_t euler_characteristic(const FVector& fv) { return fv.euler(); }

namespace {

struct FaceKey {
    std::uint64_t support;
    std::uint64_t signs;
    friend bool operator==(const FaceKey&, const FaceKey&) = default;
    friend auto operator<=>(const FaceKey&, const FaceKey&) = default;
};

struct FaceKeyHash {
    std::size_t operator()(const FaceKey& k) const {
        std::uint64_t h = k.support * 0x9e3779b97f4a7c15ULL;
        h ^= k.signs + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

// Connectivity of the facet graph given ridge -> incident facet indices.
template <typename RidgeMap>
bool dual_graph_connected(std::size_t facet_count, const RidgeMap& ridges) {
    if (facet_count == 0) return false;
    std::vector<std::vector<int>> adj(facet_count);
    for (const auto& [ridge, incident] : ridges) {
        for (std::size_t a = 0; a + 1 < incident.size(); ++a)
            for (std::size_t b = a + 1; b < incident.size(); ++b) {
                adj[static_cast<std::size_t>(incident[a])].push_back(incident[b]);
                adj[static_cast<std::size_t>(incident[b])].push_back(incident[a]);
            }
    }
    std::vector<char> seen(facet_count, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    std::size_t visited = 1;
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        for (int g : adj[static_cast<std::size_t>(f)])
            if (!seen[static_cast<std::size_t>(g)]) {
                seen[static_cast<std::size_t>(g)] = 1;
                ++visited;
                stack.push_back(g);
            }
    }
    return visited == facet_count;
}

}  // namespace

PseudomanifoldResult closed_pseudomanifold_check(const SimplicialComplex& complex) {
    if (!complex.is_pure())
        throw Error("closed_pseudomanifold_check: complex is not pure");
    std::unordered_map<std::uint64_t, std::vector<int>> ridges;
    const auto& facets = complex.facets();
    for (std::size_t idx = 0; idx < facets.size(); ++idx)
        for (std::uint64_t v = facets[idx]; v != 0; v &= v - 1)
            ridges[facets[idx] & ~(v & -v)].push_back(static_cast<int>(idx));
    bool closed = std::all_of(ridges.begin(), ridges.end(),
                              [](const auto& kv) { return kv.second.size() == 2; });
    return {closed, dual_graph_connected(facets.size(), ridges)};
}

PseudomanifoldResult closed_pseudomanifold_check(const CubicalComplex& complex) {
    if (!complex.is_pure())
        throw Error("closed_pseudomanifold_check: complex is not pure");
    std::unordered_map<FaceKey, std::vector<int>, FaceKeyHash> ridges;
    const auto& facets = complex.facets();
    for (std::size_t idx = 0; idx < facets.size(); ++idx) {
        const auto& f = facets[idx];
        for (std::uint64_t z = f.zero_set(); z != 0; z &= z - 1) {
            std::uint64_t bit = z & -z;
            ridges[{f.support() | bit, f.signs() | bit}].push_back(static_cast<int>(idx));
            ridges[{f.support() | bit, f.signs()}].push_back(static_cast<int>(idx));
        }
    }
    bool closed = std::all_of(ridges.begin(), ridges.end(),
                              [](const auto& kv) { return kv.second.size() == 2; });
    return {closed, dual_graph_connected(facets.size(), ridges)};
}

SimplicialComplex vertex_link(const CubicalComplex& complex, const SignVector& v) {
    if (!v.is_vertex()) throw Error("vertex_link: v is not a vertex");
    std::vector<std::uint64_t> faces;
    for (const auto& f : complex.facets())
        if (is_subface(v, f)) faces.push_back(f.zero_set());
    if (faces.empty()) throw Error("vertex_link: vertex not in complex");
    return SimplicialComplex(complex.ambient_dim(), std::move(faces));
}

SimplicialComplex edge_figure(const CubicalComplex& complex, const SignVector& e) {
    if (e.dim() != 1) throw Error("edge_figure: e is not an edge");
    std::vector<std::uint64_t> faces;
    for (const auto& f : complex.facets())
        if (is_subface(e, f)) faces.push_back(f.zero_set() & ~e.zero_set());
    if (faces.empty()) throw Error("edge_figure: edge not in complex");
    return SimplicialComplex(complex.ambient_dim(), std::move(faces));
}

namespace {

// Rank of a GF(2) matrix given by columns (each a set of row indices),
// via dense bitset elimination keyed on the lowest set row.
class Gf2RankAccumulator {
  public:
    explicit Gf2RankAccumulator(std::size_t n_rows)
        : words_((n_rows + 63) / 64) {}

    void add_column(const std::vector<std::uint32_t>& rows) {
        std::vector<std::uint64_t> col(words_, 0);
        for (auto r : rows) col[r >> 6] |= std::uint64_t{1} << (r & 63);
        while (true) {
            int pivot = lowest_bit(col);
            if (pivot < 0) return;  // reduced to zero
            auto it = pivots_.find(pivot);
            if (it == pivots_.end()) {
                pivots_.emplace(pivot, std::move(col));
                ++rank_;
                return;
            }
            const auto& other = it->second;
            for (std::size_t w = 0; w < words_; ++w) col[w] ^= other[w];
        }
    }

    std::int64_t rank() const { return rank_; }

  private:
    static int lowest_bit(const std::vector<std::uint64_t>& col) {
        for (std::size_t w = 0; w < col.size(); ++w)
            if (col[w]) return static_cast<int>(w * 64 + std::countr_zero(col[w]));
        return -1;
    }

    std::size_t words_;
    std::unordered_map<int, std::vector<std::uint64_t>> pivots_;
    std::int64_t rank_ = 0;
};

// Shared skeleton of both z2_betti overloads: faces_by_dim[k] lists the
// k-faces, boundary(k, face) yields the (k-1)-faces.
template <typename Face, typename Hash, typename BoundaryFn>
std::vector<std::int64_t> betti_from_faces(
    const std::vector<std::vector<Face>>& faces_by_dim, BoundaryFn&& boundary) {
    int top = static_cast<int>(faces_by_dim.size()) - 1;
    std::vector<std::unordered_map<Face, std::uint32_t, Hash>> index(faces_by_dim.size());
    for (std::size_t k = 0; k < faces_by_dim.size(); ++k)
        for (std::size_t i = 0; i < faces_by_dim[k].size(); ++i)
            index[k].emplace(faces_by_dim[k][i], static_cast<std::uint32_t>(i));

    std::vector<std::int64_t> ranks(static_cast<std::size_t>(top) + 2, 0);
    for (int k = 1; k <= top; ++k) {
        Gf2RankAccumulator acc(faces_by_dim[static_cast<std::size_t>(k - 1)].size());
        std::vector<std::uint32_t> rows;
        for (const auto& face : faces_by_dim[static_cast<std::size_t>(k)]) {
            rows.clear();
            boundary(k, face, [&](const Face& sub) {
                rows.push_back(index[static_cast<std::size_t>(k - 1)].at(sub));
            });
            acc.add_column(rows);
        }
        ranks[static_cast<std::size_t>(k)] = acc.rank();
    }

    std::vector<std::int64_t> betti(static_cast<std::size_t>(top) + 1, 0);
    for (int k = 0; k <= top; ++k)
        betti[static_cast<std::size_t>(k)] =
            static_cast<std::int64_t>(faces_by_dim[static_cast<std::size_t>(k)].size()) -
            ranks[static_cast<std::size_t>(k)] - ranks[static_cast<std::size_t>(k + 1)];
    return betti;
}

}  // namespace

std::vector<std::int64_t> z2_betti(const CubicalComplex& complex, std::size_t cap) {
    std::unordered_set<FaceKey, FaceKeyHash> seen;
    int top = 0;
    for (const auto& f : complex.facets()) {
        top = std::max(top, f.dim());
        for (int k = 0; k <= f.dim(); ++k)
            for (const auto& s : subfaces(f, k)) {
                seen.insert({s.support(), s.signs()});
                if (seen.size() > cap)
                    throw SizeCapError("z2_betti: face count exceeds cap of " +
                                       std::to_string(cap));
            }
    }
    int n = complex.ambient_dim();
    std::vector<std::vector<FaceKey>> faces(static_cast<std::size_t>(top) + 1);
    for (const auto& key : seen)
        faces[static_cast<std::size_t>(n - popcount64(key.support))].push_back(key);
    for (auto& level : faces) std::sort(level.begin(), level.end());

    return betti_from_faces<FaceKey, FaceKeyHash>(
        faces, [&](int, const FaceKey& face, auto&& emit) {
            // boundary of a cubical k-face: both specializations of each zero
            std::uint64_t zeros = ~face.support & low_mask(n);
            for (std::uint64_t z = zeros; z != 0; z &= z - 1) {
                std::uint64_t bit = z & -z;
                emit(FaceKey{face.support | bit, face.signs | bit});
                emit(FaceKey{face.support | bit, face.signs});
            }
        });
}

std::vector<std::int64_t> z2_betti(const SimplicialComplex& complex, std::size_t cap) {
    std::unordered_set<std::uint64_t> seen;
    int top = 0;
    for (auto f : complex.facets()) {
        top = std::max(top, popcount64(f) - 1);
        std::uint64_t sub = f;
        while (true) {
            if (sub != 0) {
                seen.insert(sub);
                if (seen.size() > cap)
                    throw SizeCapError("z2_betti: face count exceeds cap of " +
                                       std::to_string(cap));
            }
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::vector<std::vector<std::uint64_t>> faces(static_cast<std::size_t>(top) + 1);
    for (auto face : seen)
        faces[static_cast<std::size_t>(popcount64(face) - 1)].push_back(face);
    for (auto& level : faces) std::sort(level.begin(), level.end());

    return betti_from_faces<std::uint64_t, std::hash<std::uint64_t>>(
        faces, [&](int, std::uint64_t face, auto&& emit) {
            for (std::uint64_t v = face; v != 0; v &= v - 1)
                emit(face & ~(v & -v));
        });
}

namespace {

// Iterated refinement of vertex colors on the vertex-facet incidence of
// two complexes at once; colors are comparable across the pair.
struct IsoInstance {
    std::vector<std::uint64_t> facets;
    std::vector<int> vertices;            // used vertex labels
    std::vector<std::vector<int>> vfacets;  // per vertex: incident facet indices
};

IsoInstance make_instance(const SimplicialComplex& c) {
    IsoInstance inst;
    inst.facets = c.facets();
    std::uint64_t used = c.used_vertices();
    for (std::uint64_t u = used; u != 0; u &= u - 1)
        inst.vertices.push_back(std::countr_zero(u));
    inst.vfacets.resize(inst.vertices.size());
    for (std::size_t vi = 0; vi < inst.vertices.size(); ++vi)
        for (std::size_t fi = 0; fi < inst.facets.size(); ++fi)
            if (inst.facets[fi] & (std::uint64_t{1} << inst.vertices[vi]))
                inst.vfacets[vi].push_back(static_cast<int>(fi));
    return inst;
}

std::vector<int> refine_colors(const IsoInstance& a, const IsoInstance& b) {
    std::size_t na = a.vertices.size(), nb = b.vertices.size();
    std::vector<int> color(na + nb, 0);
    auto vertex_pos_a = [&](int label) {
        return static_cast<std::size_t>(
            std::lower_bound(a.vertices.begin(), a.vertices.end(), label) -
            a.vertices.begin());
    };
    auto vertex_pos_b = [&](int label) {
        return static_cast<std::size_t>(
            std::lower_bound(b.vertices.begin(), b.vertices.end(), label) -
            b.vertices.begin());
    };
    for (int round = 0; round < 16; ++round) {
        // signature: own color plus the multiset, over incident facets, of
        // the sorted color lists of the facet's vertices
        std::map<std::vector<int>, int> palette;
        std::vector<int> next(na + nb);
        auto signature = [&](const IsoInstance& inst, std::size_t vi, std::size_t offset,
                             auto&& pos_of) {
            std::vector<int> sig{color[offset + vi]};
            std::vector<std::vector<int>> per_facet;
            for (int fi : inst.vfacets[vi]) {
                std::vector<int> fc;
                for (std::uint64_t m = inst.facets[static_cast<std::size_t>(fi)]; m != 0;
                     m &= m - 1)
                    fc.push_back(color[offset + pos_of(std::countr_zero(m))]);
                std::sort(fc.begin(), fc.end());
                per_facet.push_back(std::move(fc));
            }
            std::sort(per_facet.begin(), per_facet.end());
            for (auto& fc : per_facet) {
                sig.push_back(-1);
                sig.insert(sig.end(), fc.begin(), fc.end());
            }
            return sig;
        };
        for (std::size_t vi = 0; vi < na; ++vi) {
            auto sig = signature(a, vi, 0, vertex_pos_a);
            auto [it, _] = palette.emplace(std::move(sig), static_cast<int>(palette.size()));
            next[vi] = it->second;
        }
        for (std::size_t vi = 0; vi < nb; ++vi) {
            auto sig = signature(b, vi, na, vertex_pos_b);
            auto [it, _] = palette.emplace(std::move(sig), static_cast<int>(palette.size()));
            next[na + vi] = it->second;
        }
        if (next == color) break;
        color = std::move(next);
    }
    return color;
}

struct IsoSearch {
    const IsoInstance& a;
    const IsoInstance& b;
    const std::vector<int>& color;  // a's colors then b's colors
    std::uint64_t budget;
    std::vector<int> image;      // a-vertex position -> b vertex label, -1 unset
    std::vector<char> used_b;    // b vertex position taken
    std::unordered_set<std::uint64_t> b_facets;

    bool search(std::size_t vi) {
        if (budget-- == 0)
            throw BudgetExceededError("complexes_isomorphic: node budget exhausted");
        if (vi == a.vertices.size()) return check_full();
        std::size_t na = a.vertices.size();
        for (std::size_t wi = 0; wi < b.vertices.size(); ++wi) {
            if (used_b[wi] || color[na + wi] != color[vi]) continue;
            image[vi] = b.vertices[wi];
            used_b[wi] = 1;
            if (consistent(vi) && search(vi + 1)) return true;
            used_b[wi] = 0;
            image[vi] = -1;
        }
        return false;
    }

    // every fully-mapped facet of a must land on a facet of b
    bool consistent(std::size_t vi) {
        for (int fi : a.vfacets[vi]) {
            std::uint64_t f = a.facets[static_cast<std::size_t>(fi)];
            std::uint64_t mapped = 0;
            bool full = true;
            for (std::uint64_t m = f; m != 0; m &= m - 1) {
                std::size_t pos = static_cast<std::size_t>(
                    std::lower_bound(a.vertices.begin(), a.vertices.end(),
                                     std::countr_zero(m)) -
                    a.vertices.begin());
                if (image[pos] < 0) {
                    full = false;
                    break;
                }
                mapped |= std::uint64_t{1} << image[pos];
            }
            if (full && !b_facets.count(mapped)) return false;
        }
        return true;
    }

    bool check_full() {
        std::unordered_set<std::uint64_t> mapped;
        for (std::size_t fi = 0; fi < a.facets.size(); ++fi) {
            std::uint64_t out = 0;
            for (std::uint64_t m = a.facets[fi]; m != 0; m &= m - 1) {
                std::size_t pos = static_cast<std::size_t>(
                    std::lower_bound(a.vertices.begin(), a.vertices.end(),
                                     std::countr_zero(m)) -
                    a.vertices.begin());
                out |= std::uint64_t{1} << image[pos];
            }
            if (!b_facets.count(out)) return false;
            mapped.insert(out);
        }
        return mapped.size() == b_facets.size();
    }
};

}  // namespace

bool complexes_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                          IsoOptions options) {
    IsoInstance ia = make_instance(a), ib = make_instance(b);
    if (static_cast<int>(ia.vertices.size()) > options.max_vertices ||
        static_cast<int>(ib.vertices.size()) > options.max_vertices)
        throw BudgetExceededError("complexes_isomorphic: vertex cap of " +
                                  std::to_string(options.max_vertices) + " exceeded");
    if (ia.vertices.size() != ib.vertices.size()) return false;
    if (ia.facets.size() != ib.facets.size()) return false;
    auto sizes = [](const IsoInstance& inst) {
        std::vector<int> s;
        for (auto f : inst.facets) s.push_back(popcount64(f));
        std::sort(s.begin(), s.end());
        return s;
    };
    if (sizes(ia) != sizes(ib)) return false;

    std::vector<int> color = refine_colors(ia, ib);
    // color class sizes must agree between the two sides
    std::map<int, int> ca, cb;
    for (std::size_t vi = 0; vi < ia.vertices.size(); ++vi) ++ca[color[vi]];
    for (std::size_t wi = 0; wi < ib.vertices.size(); ++wi)
        ++cb[color[ia.vertices.size() + wi]];
    if (ca != cb) return false;

    IsoSearch search{ia, ib, color, options.node_budget,
                     std::vector<int>(ia.vertices.size(), -1),
                     std::vector<char>(ib.vertices.size(), 0),
                     {ib.facets.begin(), ib.facets.end()}};
    return search.search(0);
}

VerificationReport verify_complex(const CubicalComplex& complex, bool homology,
                                  std::size_t cap) {
    VerificationReport report;
    report.f_vector = f_vector_cubical(complex);
    report.euler = report.f_vector.euler();
    report.is_pure = complex.is_pure();
    if (report.is_pure) {
        auto pm = closed_pseudomanifold_check(complex);
        report.is_closed_pseudomanifold = pm.closed;
        report.is_strongly_connected = pm.strongly_connected;
    } else {
        report.notes.push_back("complex not pure; pseudomanifold check skipped");
    }
    int k = 1;
    while (k <= complex.ambient_dim() && is_cubically_k_neighborly(complex, k)) ++k;
    report.neighborliness = k - 1;
    if (homology) {
        report.betti_z2 = z2_betti(complex, cap);
        std::int64_t alt = 0;
        int sign = 1;
        for (auto bnum : *report.betti_z2) {
            alt += sign * bnum;
            sign = -sign;
        }
        if (alt != report.euler)
            report.notes.push_back("betti alternating sum disagrees with euler");
    }
    return report;
}

VerificationReport verify_complex(const SimplicialComplex& complex, bool homology,
                                  std::size_t cap) {
    VerificationReport report;
    report.f_vector = f_vector_simplicial(complex);
    report.euler = report.f_vector.euler();
    report.is_pure = complex.is_pure();
    if (report.is_pure) {
        auto pm = closed_pseudomanifold_check(complex);
        report.is_closed_pseudomanifold = pm.closed;
        report.is_strongly_connected = pm.strongly_connected;
    } else {
        report.notes.push_back("complex not pure; pseudomanifold check skipped");
    }
    int k = 1;
    while (k <= complex.n_vertices() && is_simplicially_k_neighborly(complex, k)) ++k;
    report.neighborliness = k - 1;
    if (homology) {
        report.betti_z2 = z2_betti(complex, cap);
        std::int64_t alt = 0;
        int sign = 1;
        for (auto bnum : *report.betti_z2) {
            alt += sign * bnum;
            sign = -sign;
        }
        if (alt != report.euler)
            report.notes.push_back("betti alternating sum disagrees with euler");
    }
    return report;
}

}  // namespace ncs
