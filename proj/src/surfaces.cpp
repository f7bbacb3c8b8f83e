#include "ncs/surfaces.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <unordered_map>

#include "ncs/bbc.hpp"

namespace ncs {

namespace {

std::uint64_t edge_key(int a, int b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
}

}  // namespace

bool QuadMesh::is_closed_surface() const {
    if (quads.empty()) return false;
    std::unordered_map<std::uint64_t, int> edge_count;
    for (const auto& q : quads) {
        for (int c = 0; c < 4; ++c) {
            int a = q[static_cast<std::size_t>(c)];
            int b = q[static_cast<std::size_t>((c + 1) % 4)];
            if (a == b || a < 0 || b < 0 || a >= n_vertices || b >= n_vertices)
                return false;
            ++edge_count[edge_key(a, b)];
        }
    }
    for (const auto& [key, count] : edge_count)
        if (count != 2) return false;

    // vertex links: the corner edges around each vertex must form one cycle
    std::vector<std::map<int, int>> link_degree(static_cast<std::size_t>(n_vertices));
    std::vector<std::vector<std::pair<int, int>>> link_edges(
        static_cast<std::size_t>(n_vertices));
    for (const auto& q : quads)
        for (int c = 0; c < 4; ++c) {
            int v = q[static_cast<std::size_t>(c)];
            int prev = q[static_cast<std::size_t>((c + 3) % 4)];
            int next = q[static_cast<std::size_t>((c + 1) % 4)];
            link_edges[static_cast<std::size_t>(v)].emplace_back(prev, next);
            ++link_degree[static_cast<std::size_t>(v)][prev];
            ++link_degree[static_cast<std::size_t>(v)][next];
        }
    for (int v = 0; v < n_vertices; ++v) {
        const auto& degree = link_degree[static_cast<std::size_t>(v)];
        if (degree.empty()) return false;
        for (const auto& [w, deg] : degree)
            if (deg != 2) return false;
        // connected: walk the corner edges
        std::map<int, std::vector<int>> adj;
        for (const auto& [a, b] : link_edges[static_cast<std::size_t>(v)]) {
            adj[a].push_back(b);
            adj[b].push_back(a);
        }
        std::vector<int> stack{adj.begin()->first};
        std::map<int, char> seen{{stack[0], 1}};
        while (!stack.empty()) {
            int w = stack.back();
            stack.pop_back();
            for (int x : adj[w])
                if (!seen.count(x)) {
                    seen[x] = 1;
                    stack.push_back(x);
                }
        }
        if (seen.size() != degree.size()) return false;
    }
    return true;
}

bool QuadMesh::orientable() const {
    if (!is_closed_surface()) throw Error("QuadMesh: not a closed surface");
    // edge -> (quad index, listed traversal goes low label -> high label)
    std::unordered_map<std::uint64_t, std::vector<std::pair<int, bool>>> edge_uses;
    for (std::size_t qi = 0; qi < quads.size(); ++qi)
        for (int c = 0; c < 4; ++c) {
            int a = quads[qi][static_cast<std::size_t>(c)];
            int b = quads[qi][static_cast<std::size_t>((c + 1) % 4)];
            edge_uses[edge_key(a, b)].emplace_back(static_cast<int>(qi), a < b);
        }
    // The two quads at an edge must traverse it oppositely; with flips
    // f1, f2 in {0,1} that reads (dir1 ^ f1) != (dir2 ^ f2).
    std::vector<std::vector<std::pair<int, int>>> constraints(quads.size());
    for (const auto& [key, uses] : edge_uses) {
        const auto& [q1, dir1] = uses[0];
        const auto& [q2, dir2] = uses[1];
        int relation = (dir1 == dir2) ? 1 : 0;  // 1: exactly one side flips
        if (q1 == q2) {
            if (relation == 1) return false;  // quad glued to itself head-to-head
            continue;
        }
        constraints[static_cast<std::size_t>(q1)].emplace_back(q2, relation);
        constraints[static_cast<std::size_t>(q2)].emplace_back(q1, relation);
    }
    std::vector<int> flip(quads.size(), -1);
    std::vector<int> stack;
    for (std::size_t start = 0; start < quads.size(); ++start) {
        if (flip[start] != -1) continue;
        flip[start] = 0;
        stack.push_back(static_cast<int>(start));
        while (!stack.empty()) {
            int qi = stack.back();
            stack.pop_back();
            for (const auto& [other, relation] : constraints[static_cast<std::size_t>(qi)]) {
                int want = flip[static_cast<std::size_t>(qi)] ^ relation;
                if (flip[static_cast<std::size_t>(other)] == -1) {
                    flip[static_cast<std::size_t>(other)] = want;
                    stack.push_back(other);
                } else if (flip[static_cast<std::size_t>(other)] != want) {
                    return false;
                }
            }
        }
    }
    return true;
}

QuadSurface::QuadSurface(CubicalComplex underlying, int q)
    : underlying_(std::move(underlying)), q_(q) {
    if (!underlying_.is_pure() || *underlying_.pure_dim() != 2)
        throw Error("QuadSurface: complex is not pure of dimension 2");
    QuadMesh mesh = to_quad_mesh();
    if (!mesh.is_closed_surface())
        throw Error("QuadSurface: edge or vertex-link invariant fails");
    // equivelar: every vertex has degree q
    std::vector<int> degree(static_cast<std::size_t>(mesh.n_vertices), 0);
    for (const auto& quad : mesh.quads)
        for (int c = 0; c < 4; ++c) ++degree[static_cast<std::size_t>(quad[static_cast<std::size_t>(c)])];
    for (int deg : degree)
        if (deg != q_) throw Error("QuadSurface: vertex degree differs from q");
}

std::vector<std::uint64_t> QuadSurface::vertex_codes() const {
    std::vector<std::uint64_t> codes;
    for (const auto& f : underlying_.facets())
        for (const auto& v : subfaces(f, 0)) codes.push_back(v.signs());
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    return codes;
}

QuadMesh QuadSurface::to_quad_mesh() const {
    auto codes = vertex_codes();
    auto code_index = [&](std::uint64_t code) {
        return static_cast<int>(std::lower_bound(codes.begin(), codes.end(), code) -
                                codes.begin());
    };
    QuadMesh mesh;
    mesh.n_vertices = static_cast<int>(codes.size());
    for (const auto& f : underlying_.facets()) {
        std::uint64_t zeros = f.zero_set();
        std::uint64_t a = zeros & -zeros;
        std::uint64_t b = zeros & ~a;
        std::uint64_t base = f.signs();
        // Gray-code cycle around the quad: (--), (+-), (++), (-+)
        mesh.quads.push_back({code_index(base), code_index(base | a),
                              code_index(base | a | b), code_index(base | b)});
    }
    return mesh;
}

QuadSurface equivelar_m4q(int q) {
    if (q < 3) throw Error("equivelar_m4q: requires q >= 3");
    if (q > 62) throw Error("equivelar_m4q: q too large for mask arithmetic");
    std::vector<std::uint64_t> polygon;
    for (int i = 0; i < q; ++i) {
        std::uint64_t edge =
            (std::uint64_t{1} << i) | (std::uint64_t{1} << ((i + 1) % q));
        polygon.push_back(edge);
    }
    SimplicialComplex boundary(q, std::move(polygon));
    return QuadSurface(mirror_complex(boundary), q);
}

std::int64_t genus_closed_form(int q) {
    if (q < 3) throw Error("genus_closed_form: requires q >= 3");
    if (q > 60) throw Error("genus_closed_form: overflow");
    return 1 + ((std::int64_t{1} << (q - 3)) * (q - 4));
}

std::int64_t genus_from_euler(std::int64_t euler) {
    std::int64_t numerator = 2 - euler;
    if (numerator % 2 != 0 || numerator < 0)
        throw Error("genus_from_euler: euler characteristic is not of an "
                    "orientable closed surface");
    return numerator / 2;
}

bool orientability(const QuadSurface& surface) {
    return surface.to_quad_mesh().orientable();
}

bool embeds_in_sphere(const QuadSurface& surface, int q) {
    if (q < 4)
        throw Error("embeds_in_sphere: the cubical 3-sphere needs q >= 4");
    CubicalComplex sphere = build_inductive(bbc_from_cyclic(3, q));
    if (sphere.ambient_dim() != surface.underlying().ambient_dim()) return false;
    auto faces = k_faces_cubical(sphere, 2);
    for (const auto& quad : surface.underlying().facets())
        if (!std::binary_search(faces.begin(), faces.end(), quad)) return false;
    return true;
}

std::string off_export(const QuadSurface& surface) {
    auto codes = surface.vertex_codes();
    QuadMesh mesh = surface.to_quad_mesh();
    std::size_t n_edges = mesh.quads.size() * 2;  // closed quad surface: E = 2F
    std::ostringstream os;
    os << "OFF\n" << codes.size() << ' ' << mesh.quads.size() << ' ' << n_edges << '\n';
    int q = surface.q();
    for (auto code : codes) {
        for (int i = 0; i < q; ++i)
            os << ((code & (std::uint64_t{1} << i)) ? 1 : -1) << (i + 1 < q ? ' ' : '\n');
    }
    for (const auto& quad : mesh.quads)
        os << 4 << ' ' << quad[0] << ' ' << quad[1] << ' ' << quad[2] << ' ' << quad[3]
           << '\n';
    return os.str();
}

}  // namespace ncs
