#ifndef NCS_VERIFY_HPP
#define NCS_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ncs/cubical_complex.hpp"
#include "ncs/f_vector.hpp"
#include "ncs/simplicial_complex.hpp"

namespace ncs {

// Alternating sum of the face counts.
std::int64_t euler_characteristic(const FVector& fv);

struct PseudomanifoldResult {
    bool closed;              // every ridge lies in exactly two facets
    bool strongly_connected;  // the facet-ridge graph is connected
};

// Throws Error on non-pure input.
PseudomanifoldResult closed_pseudomanifold_check(const SimplicialComplex& complex);
PseudomanifoldResult closed_pseudomanifold_check(const CubicalComplex& complex);

// Simplicial complex on the coordinate labels: facets are the zero sets
// of the facets containing the vertex v.  Throws if v is not a vertex of
// the complex.
SimplicialComplex vertex_link(const CubicalComplex& complex, const SignVector& v);

// Simplicial complex on the coordinate labels: facets are the zero sets
// of the facets containing the edge e, with e's own zero coordinate
// removed.  Throws if e is not an edge of the complex.
SimplicialComplex edge_figure(const CubicalComplex& complex, const SignVector& e);

inline constexpr std::size_t kDefaultHomologyCap = std::size_t{1} << 20;

// Betti numbers over the two-element field, computed from boundary-matrix
// ranks by bitset Gaussian elimination.  Throws SizeCapError when the
// total face count exceeds the cap.
std::vector<std::int64_t> z2_betti(const CubicalComplex& complex,
                                   std::size_t cap = kDefaultHomologyCap);
std::vector<std::int64_t> z2_betti(const SimplicialComplex& complex,
                                   std::size_t cap = kDefaultHomologyCap);

struct IsoOptions {
    int max_vertices = 16;
    std::uint64_t node_budget = 1'000'000;
};

// True iff some bijection of the used vertices maps the facet set of a
// onto the facet set of b.  Degree-refinement plus backtracking; throws
// BudgetExceededError when the node budget or vertex cap is exceeded
// (an overrun is not a "false").
bool complexes_isomorphic(const SimplicialComplex& a, const SimplicialComplex& b,
                          IsoOptions options = {});

struct VerificationReport {
    FVector f_vector;
    std::int64_t euler = 0;
    bool is_pure = false;
    bool is_closed_pseudomanifold = false;
    bool is_strongly_connected = false;
    std::optional<std::vector<std::int64_t>> betti_z2;
    int neighborliness = 0;  // largest k passing
    std::vector<std::string> notes;
};

VerificationReport verify_complex(const CubicalComplex& complex, bool homology,
                                  std::size_t cap = kDefaultHomologyCap);
VerificationReport verify_complex(const SimplicialComplex& complex, bool homology,
                                  std::size_t cap = kDefaultHomologyCap);

}  // namespace ncs

#endif  // NCS_VERIFY_HPP
