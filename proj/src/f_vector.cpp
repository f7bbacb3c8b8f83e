#include "ncs/f_vector.hpp"

#include <sstream>

namespace ncs {

int FVector::cubical_neighborliness_bound(int n) const {
    int k = 0;
    while (k < static_cast<int>(counts_.size()) &&
           counts_[static_cast<std::size_t>(k)] == cube_face_count(n, k))
        ++k;
    return k;  // largest k with the full (k-1)-skeleton count
}

int FVector::simplicial_neighborliness_bound(int n) const {
    int k = 0;
    while (k < static_cast<int>(counts_.size()) &&
           counts_[static_cast<std::size_t>(k)] ==
               static_cast<std::int64_t>(binomial(n, k + 1)))
        ++k;
    return k;
}

std::string FVector::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i) os << ", ";
        os << counts_[i];
    }
    os << ')';
    return os.str();
}

}  // namespace ncs
