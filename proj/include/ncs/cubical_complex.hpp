#ifndef NCS_CUBICAL_COMPLEX_HPP
#define NCS_CUBICAL_COMPLEX_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ncs/common.hpp"
#include "ncs/f_vector.hpp"
#include "ncs/sign_vector.hpp"
#include "ncs/simplicial_complex.hpp"

namespace ncs {

/**
 * A subcomplex of the n-cube given by its facet sign vectors.  Facets are
 * kept sorted; no facet may be a proper subface of another.  The empty
 * complex (no facets) is allowed so that boundaries of closed complexes
 * have a value.
 */
class CubicalComplex {
  public:
    CubicalComplex(int ambient_dim, std::vector<SignVector> facets);

    // Boundary of the n-cube: the 2n sign vectors with one nonzero entry.
    static CubicalComplex cube_boundary(int n);

    int ambient_dim() const { return n_; }
    const std::vector<SignVector>& facets() const { return facets_; }
    std::optional<int> pure_dim() const { return pure_dim_; }
    bool is_pure() const { return pure_dim_.has_value(); }
    bool empty() const { return facets_.empty(); }

    bool contains_facet(const SignVector& f) const;
    // True iff f is a subface of some facet.
    bool contains_face(const SignVector& f) const;

    friend bool operator==(const CubicalComplex&, const CubicalComplex&) = default;

  private:
    int n_;
    std::vector<SignVector> facets_;
    std::optional<int> pure_dim_;
};

// Facets are all sign vectors whose absolute value is the complement
// encoding of a facet of the simplicial complex: each facet on k vertices
// contributes 2^(n-k) sign assignments.  Throws on empty input or n > 64.
CubicalComplex mirror_complex(const SimplicialComplex& complex);

struct FissureOptions {
    bool strict = true;  // enforce facet-disjointness and C1 u C2 = C
};

// Lifts C1 to the new top coordinate +1, drops C2 to -1 and joins them by
// a prism over their shared ridges: facets are (f,+1) for f in C1, (f,-1)
// for f in C2 and (r,0) for every common (d-1)-face of the two closures.
// The result is a subcomplex of the (n+1)-cube.
CubicalComplex fissure(const CubicalComplex& whole, const CubicalComplex& part1,
                       const CubicalComplex& part2, FissureOptions options = {});

// Exact face counts via closure enumeration (O(|facets| * 3^d) face visits).
FVector f_vector_cubical(const CubicalComplex& complex);

// All distinct k-faces, sorted.
std::vector<SignVector> k_faces_cubical(const CubicalComplex& complex, int k);

// True iff the (k-1)-faces are exactly all sign vectors with k-1 zeros,
// i.e. the complex has the (k-1)-skeleton of its ambient cube.
bool is_cubically_k_neighborly(const CubicalComplex& complex, int k);

// Complex generated by the (d-1)-faces lying in exactly one facet; empty
// for a closed complex.  Throws Error on non-pure input.
CubicalComplex boundary_cubical(const CubicalComplex& complex);

}  // namespace ncs

#endif  // NCS_CUBICAL_COMPLEX_HPP
