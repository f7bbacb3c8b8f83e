#ifndef NCS_NCP_HPP
#define NCS_NCP_HPP

#include <cstdint>

#include "ncs/cubical_complex.hpp"
#include "ncs/sign_vector.hpp"

namespace ncs {

/// Parameters of a neighborly cubical (d+1)-polytope boundary on the
/// n-cube's vertices; requires n > d >= 3.
struct NcpParams {
    int n;
    int d;
};

// Facets of the neighborly cubical polytope boundary by the Cubical Gale
// Evenness Condition: sign vectors with d zeros classified by the number
// t of leading nonzero entries.  Type 0 facets start with a zero and are
// Gale-even in absolute value; types 0 < t < n-d carry an alternating
// prefix, a parity-determined sign and a Gale-even tail; type n-d is the
// alternating prefix followed by a free sign and zeros.
CubicalComplex cge_facets(NcpParams params);

// Reverses the coordinate order and flips every even position:
// out_j = (-1)^(j+1) * in_(n+1-j) in 1-based terms.  An involution for
// odd n; composes to the global sign flip for even n.
SignVector phi_map(const SignVector& alpha);

// Facet count of a neighborly simplicial (d-2)-sphere on i vertices for
// odd d: 2i/(2i-d+1) * C(i-(d-1)/2, i+1-d), evaluated exactly.
std::int64_t s_neighborly_sphere_facets(int i, int d);

// Facet count of the neighborly cubical d-sphere on 2^n vertices for odd
// d: 2(d+1) + sum over k of s(k-1, d-2) * 2^(k-d).
std::int64_t ncp_facet_count(int n, int d);

}  // namespace ncs

#endif  // NCS_NCP_HPP
