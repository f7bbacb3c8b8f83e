#ifndef NCS_F_VECTOR_HPP
#define NCS_F_VECTOR_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "ncs/common.hpp"

namespace ncs {

/// Face counts by dimension, (f_0, f_1, ..., f_d).
class FVector {
  public:
    FVector() = default;
    explicit FVector(std::vector<std::int64_t> counts) : counts_(std::move(counts)) {
        for (auto c : counts_)
            if (c < 0) throw Error("FVector: negative count");
    }
    FVector(std::initializer_list<std::int64_t> counts)
        : FVector(std::vector<std::int64_t>(counts)) {}

    const std::vector<std::int64_t>& counts() const { return counts_; }
    std::int64_t operator[](std::size_t i) const { return counts_[i]; }
    std::size_t size() const { return counts_.size(); }
    int top_dim() const { return static_cast<int>(counts_.size()) - 1; }

    // Alternating sum f_0 - f_1 + f_2 - ...
    std::int64_t euler() const {
        std::int64_t chi = 0;
        int sign = 1;
        for (auto c : counts_) {
            chi += sign * c;
            sign = -sign;
        }
        return chi;
    }

    // Largest k such that f_{k-1} equals the (k-1)-face count of the n-cube,
    // C(n,k-1) * 2^(n-k+1); a count-level neighborliness bound.
    int cubical_neighborliness_bound(int n) const;

    // Same with the simplex count C(n,k).
    int simplicial_neighborliness_bound(int n) const;

    std::string to_string() const;  // "(a, b, c)"

    friend bool operator==(const FVector&, const FVector&) = default;

  private:
    std::vector<std::int64_t> counts_;
};

// Number of k-faces of the n-cube.
inline std::int64_t cube_face_count(int n, int k) {
    return static_cast<std::int64_t>(binomial(n, k)) << (n - k);
}

}  // namespace ncs

#endif  // NCS_F_VECTOR_HPP
