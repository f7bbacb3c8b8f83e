#ifndef NCS_COMMON_HPP
#define NCS_COMMON_HPP

#include <bit>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace ncs {

// Base class for all errors thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Thrown when a bounded search (e.g. isomorphism backtracking) exhausts
// its node budget.  A budget overrun is not a negative answer.
struct BudgetExceededError : Error {
    using Error::Error;
};

// Thrown when an enumeration would exceed the configured size cap.
struct SizeCapError : Error {
    using Error::Error;
};

// Non-fatal diagnostics (dropped dominated faces, degenerate fissures, ...)
// go through here.  Defaults to stderr; set to nullptr to silence.
void set_warning_stream(std::ostream* os);
void warn(const std::string& message);

// Exact binomial coefficient; throws on overflow of uint64.
std::uint64_t binomial(int n, int k);

// Visits every k-element submask of `universe` (bits outside `universe`
// are never set).  Deterministic ascending order.
void for_each_submask_of_size(std::uint64_t universe, int k,
                              const std::function<void(std::uint64_t)>& fn);

inline int popcount64(std::uint64_t x) { return std::popcount(x); }

inline std::uint64_t low_mask(int n) {
    return n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
}

}  // namespace ncs

#endif  // NCS_COMMON_HPP
