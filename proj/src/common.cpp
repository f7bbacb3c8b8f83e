#include "ncs/common.hpp"

#include <iostream>
#include <limits>

namespace ncs {

namespace {
std::ostream* g_warning_stream = &std::cerr;
}

void set_warning_stream(std::ostream* os) { g_warning_stream = os; }

void warn(const std::string& message) {
    if (g_warning_stream) *g_warning_stream << "warning: " << message << '\n';
}

std::uint64_t binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    std::uint64_t result = 1;
    for (int j = 1; j <= k; ++j) {
        // result * (n-k+j) / j is integral at every step
        std::uint64_t num = static_cast<std::uint64_t>(n - k + j);
        if (result > std::numeric_limits<std::uint64_t>::max() / num)
            throw Error("binomial: overflow");
        result = result * num / static_cast<std::uint64_t>(j);
    }
    return result;
}

void for_each_submask_of_size(std::uint64_t universe, int k,
                              const std::function<void(std::uint64_t)>& fn) {
    int bits[64];
    int m = 0;
    for (std::uint64_t u = universe; u != 0; u &= u - 1) bits[m++] = std::countr_zero(u);
    if (k < 0 || k > m) return;
    if (k == 0) {
        fn(0);
        return;
    }
    // Gosper-style iteration over k-subsets of the m positions.
    std::uint64_t subset = (std::uint64_t{1} << k) - 1;
    std::uint64_t limit = (m >= 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << m);
    while (subset < limit) {
        std::uint64_t mask = 0;
        for (std::uint64_t s = subset; s != 0; s &= s - 1)
            mask |= std::uint64_t{1} << bits[std::countr_zero(s)];
        fn(mask);
        std::uint64_t c = subset & -subset;
        std::uint64_t r = subset + c;
        if (r >= limit || r == 0) break;
        subset = (((r ^ subset) >> 2) / c) | r;
    }
}

}  // namespace ncs
