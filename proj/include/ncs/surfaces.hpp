#ifndef NCS_SURFACES_HPP
#define NCS_SURFACES_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ncs/cubical_complex.hpp"

namespace ncs {

/**
 * A closed quad mesh given by vertex quadruples in cyclic order.  The
 * engine behind the surface checks; vertices are plain indices, so
 * non-cube fixtures (torus and Klein-bottle identifications) fit too.
 */
struct QuadMesh {
    int n_vertices = 0;
    std::vector<std::array<int, 4>> quads;

    // Every edge in exactly two quads, every vertex link a single cycle.
    bool is_closed_surface() const;

    // Consistent orientation of all quads (opposite traversal across each
    // shared edge).  Throws Error if not a closed surface.
    bool orientable() const;
};

/**
 * A polyhedral surface inside a cube: a pure 2-dimensional cubical
 * complex whose edges lie in exactly two quads and whose vertex links
 * are single q-cycles.  Validated at construction.
 */
class QuadSurface {
  public:
    QuadSurface(CubicalComplex underlying, int q);

    const CubicalComplex& underlying() const { return underlying_; }
    int q() const { return q_; }

    // Compact-index mesh; vertex i corresponds to the i-th cube vertex of
    // the surface in sign-mask order.
    QuadMesh to_quad_mesh() const;

    // Cube-vertex sign masks in the same order as the mesh indices.
    std::vector<std::uint64_t> vertex_codes() const;

  private:
    CubicalComplex underlying_;
    int q_;
};

// Mirror complex of the boundary of the q-gon: all sign vectors with two
// cyclically adjacent zeros; f = (2^q, q 2^(q-1), q 2^(q-2)).  Requires
// q >= 3.
QuadSurface equivelar_m4q(int q);

// 1 + 2^(q-3) (q-4), exact; 0 at q=3 (the cube boundary sphere).
std::int64_t genus_closed_form(int q);

// Genus from the Euler characteristic of an orientable closed surface.
std::int64_t genus_from_euler(std::int64_t euler);

bool orientability(const QuadSurface& surface);

// Builds the cubical 3-sphere over the pulling triangulations of the
// 3-,...,(q-1)-gons and tests that every quad of the surface is a face
// of it.  Requires q >= 4 for the sphere to exist.
bool embeds_in_sphere(const QuadSurface& surface, int q);

// OFF text: vertex lines are the q cube coordinates in {-1,+1}, face
// lines are 4 vertex indices in cyclic order.
std::string off_export(const QuadSurface& surface);

}  // namespace ncs

#endif  // NCS_SURFACES_HPP
