#ifndef NCS_SIMPLICIAL_COMPLEX_HPP
#define NCS_SIMPLICIAL_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ncs/common.hpp"
#include "ncs/f_vector.hpp"
#include "ncs/sign_vector.hpp"

namespace ncs {

/**
 * A simplicial complex given by its inclusion-maximal faces over the
 * labeled vertex set {0,...,n-1}.  Faces are n-bit masks.  Dominated
 * input faces are dropped with a warning; facets are kept sorted by
 * mask, so equal complexes compare equal memberwise.
 */
class SimplicialComplex {
  public:
    SimplicialComplex(int n_vertices, std::vector<std::uint64_t> faces);

    // The full (d-1)-simplex: one facet {0,...,d-1} on d vertices.
    static SimplicialComplex simplex(int d);

    int n_vertices() const { return n_; }
    const std::vector<std::uint64_t>& facets() const { return facets_; }
    std::optional<int> pure_dim() const { return pure_dim_; }
    bool is_pure() const { return pure_dim_.has_value(); }

    bool is_facet(std::uint64_t face) const;
    // True iff `face` is contained in some facet.
    bool contains_face(std::uint64_t face) const;

    // Vertices that actually appear in at least one facet.
    std::uint64_t used_vertices() const;

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

  private:
    int n_;
    std::vector<std::uint64_t> facets_;
    std::optional<int> pure_dim_;
};

// Exact face counts by dimension via closure enumeration.
FVector f_vector_simplicial(const SimplicialComplex& complex);

// All distinct faces with exactly k+1 vertices (the k-faces).
std::vector<std::uint64_t> k_faces_simplicial(const SimplicialComplex& complex, int k);

// Complex generated by the ridges lying in exactly one facet.
// Throws Error on non-pure input.
SimplicialComplex boundary_complex(const SimplicialComplex& complex);

// Facets become F u {v}.  Throws Error if v already appears in a face.
SimplicialComplex cone(const SimplicialComplex& complex, int v);

// True iff every k-subset of the vertex set is a face.
bool is_simplicially_k_neighborly(const SimplicialComplex& complex, int k);

// Facets of the cyclic d-polytope on n vertices, complement-encoded:
// 0/1 vectors with d zeros and an even number of zeros between any two
// 1-entries.  Requires n >= d+1 >= 2.
SimplicialComplex gale_facets_cyclic(int d, int n);

// Pulling triangulation of the cyclic d_poly-polytope on i vertices with
// respect to its last vertex: facets contain vertex i, their (i-1)-prefix
// is Gale-even, and the complement word ends with an odd number of zeros
// (vacuous for the one all-zero word at i = d_poly+1).
// Requires i >= d_poly+1, d_poly >= 1.
SimplicialComplex pulling_triangulation_cyclic(int d_poly, int i);

// Gale evenness of a complement-encoded word: between any two set bits
// of `ones` there is an even number of clear bits (within n coordinates).
bool gale_even(std::uint64_t ones, int n);

}  // namespace ncs

#endif  // NCS_SIMPLICIAL_COMPLEX_HPP
