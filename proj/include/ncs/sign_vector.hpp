#ifndef NCS_SIGN_VECTOR_HPP
#define NCS_SIGN_VECTOR_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ncs/common.hpp"

namespace ncs {

/**
 * A non-empty face of the n-cube as a vector in {-1,0,+1}^n.
 *
 * Packed into two n-bit masks: `support` bit i is set iff entry i is
 * nonzero, `signs` bit i is set iff entry i equals +1.  Sign bits at
 * unsupported positions are normalized to zero, so equality of faces is
 * equality of the mask pair.  Bit 0 is coordinate 1 of the text form
 * (index 1 renders leftmost).  The dimension of the face is the number
 * of zero entries.  Requires 1 <= n <= 64.
 */
class SignVector {
  public:
    SignVector(int ambient_dim, std::uint64_t support, std::uint64_t signs);

    // The all-zero vector: the whole n-cube as a face of itself.
    static SignVector top_face(int ambient_dim);

    // Parses "0+-..." (ASCII '+', '-', '0' only); throws Error otherwise.
    static SignVector parse(std::string_view text);

    int ambient_dim() const { return n_; }
    std::uint64_t support() const { return support_; }
    std::uint64_t signs() const { return signs_; }

    // Number of zero entries.
    int dim() const { return n_ - popcount64(support_); }

    bool is_vertex() const { return dim() == 0; }

    // Entry at 0-based coordinate i: -1, 0 or +1.
    int entry(int i) const {
        std::uint64_t bit = std::uint64_t{1} << i;
        if (!(support_ & bit)) return 0;
        return (signs_ & bit) ? +1 : -1;
    }

    std::uint64_t zero_set() const { return ~support_ & low_mask(n_); }

    std::string to_string() const;

    // Appends one coordinate (-1, 0 or +1) at the end; ambient grows by one.
    SignVector append(int sign) const;

    // The first m coordinates as a face of the m-cube.
    SignVector prefix(int m) const;

    friend bool operator==(const SignVector&, const SignVector&) = default;
    friend auto operator<=>(const SignVector& a, const SignVector& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) return c;
        if (auto c = a.support_ <=> b.support_; c != 0) return c;
        return a.signs_ <=> b.signs_;
    }

  private:
    int n_;
    std::uint64_t support_;
    std::uint64_t signs_;
};

// Number of zero entries of f.
int dim_of(const SignVector& f);

// True iff g is a face of f: g agrees with f at every nonzero entry of f.
// Throws Error on ambient mismatch.
bool is_subface(const SignVector& g, const SignVector& f);

// All k-faces of f; cardinality C(dim f, k) * 2^(dim f - k).
// Throws Error unless 0 <= k <= dim(f).  Output is sorted.
std::vector<SignVector> subfaces(const SignVector& f, int k);

// Entry-wise product with eps in {-1,+1}^n (a vertex of the same cube).
// Zeros stay zeros.  Throws Error on length mismatch or non-vertex eps.
SignVector sign_flip(const SignVector& f, const SignVector& eps);

/**
 * A subset of {0,...,n-1}, used both as a simplicial face and as the
 * operand of the complement encoding ("zeros mark members").
 */
struct VertexSet {
    int ambient;
    std::uint64_t members;

    VertexSet(int ambient_dim, std::uint64_t member_mask);

    int size() const { return popcount64(members); }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

// Characteristic 0/1 vector of the complement: char j (leftmost = index 1)
// is '0' iff j-1 is a member.
std::string complement_encode(const VertexSet& s);
VertexSet complement_decode(std::string_view text);

// Mask form of the same encoding: bit i set iff i is NOT a member.
inline std::uint64_t complement_mask(const VertexSet& s) {
    return ~s.members & low_mask(s.ambient);
}

}  // namespace ncs

#endif  // NCS_SIGN_VECTOR_HPP
