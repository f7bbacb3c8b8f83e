#ifndef NCS_BBC_HPP
#define NCS_BBC_HPP

#include <vector>

#include "ncs/common.hpp"
#include "ncs/cubical_complex.hpp"
#include "ncs/simplicial_complex.hpp"

namespace ncs {

enum class BbcViolation {
    ApexMissing,     // some facet of T_i lacks the apex vertex i-1
    BNotInBoundary,  // B_{i-1} is not contained in the boundary of T_{i-1}
    NotPure,         // T_i is not pure of dimension d-1
    WrongVertexRange // T_i does not live on the vertex set {0,...,i-1}
};

struct BbcError : Error {
    BbcError(BbcViolation v, int index, const std::string& what)
        : Error(what), violation(v), index(index) {}
    BbcViolation violation;
    int index;  // the i of the offending ball T_i
};

const char* to_string(BbcViolation v);

/**
 * A validated chain of simplicial (d-1)-balls T_d,...,T_{n-1}, where T_i
 * lives on the vertices {0,...,i-1}, is the cone over B_{i-1} with apex
 * i-1, and B_{i-1} lies in the boundary of T_{i-1}.  T_d is the full
 * (d-1)-simplex.  Construct via validate().
 */
class BBCSequence {
  public:
    // Validates the chain; throws BbcError naming the first violated
    // condition and its index.
    static BBCSequence validate(std::vector<SimplicialComplex> balls, int d, int n);

    int d() const { return d_; }
    int n() const { return n_; }

    // T_i for i in [d, n-1].
    const SimplicialComplex& ball(int i) const;

    // B_i = facets of T_{i+1} with the apex removed, for i in [d, n-2].
    SimplicialComplex derived_b(int i) const;

    const std::vector<SimplicialComplex>& balls() const { return balls_; }

  private:
    BBCSequence(std::vector<SimplicialComplex> balls, int d, int n)
        : d_(d), n_(n), balls_(std::move(balls)) {}
    int d_;
    int n_;
    std::vector<SimplicialComplex> balls_;
};

// The pulling-triangulation chain of cyclic (d-1)-polytopes on d,...,n-1
// vertices.  Requires n > d >= 3.
BBCSequence bbc_from_cyclic(int d, int n);

// Starts from the boundary of the (d+1)-cube and fissures once per ball:
// S_k = fissure(S_{k-1}, mirror(T_{k-1}), complement).  Returns S_n.
CubicalComplex build_inductive(const BBCSequence& seq);

// Emits the same sphere facet by facet, typed by the number of trailing
// nonzero entries: type 0 facets project to the boundary of T_{n-1}, type
// t in (0, n-d) carry a membership sign for T_{n-t}, and type n-d is the
// pair (0,...,0,s,-1,...,-1).
CubicalComplex build_direct(const BBCSequence& seq);

// Number of trailing nonzero entries; throws unless the vector has
// exactly d zeros.
int facet_type(const SignVector& facet, int d);

// Facet counts of build_direct grouped by type, index = t.
std::vector<std::int64_t> facet_type_counts(const CubicalComplex& sphere, int d);

}  // namespace ncs

#endif  // NCS_BBC_HPP
