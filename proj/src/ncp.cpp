#include "ncs/ncp.hpp"

#include <vector>

#include "ncs/simplicial_complex.hpp"

namespace ncs {

namespace {

// All sign assignments on `free_support`, merged with fixed bits.
void emit_signings(int n, std::uint64_t free_support, std::uint64_t fixed_support,
                   std::uint64_t fixed_signs, std::vector<SignVector>& out) {
    int bits[64];
    int m = 0;
    for (std::uint64_t s = free_support; s != 0; s &= s - 1)
        bits[m++] = std::countr_zero(s);
    for (std::uint64_t assign = 0; assign < (std::uint64_t{1} << m); ++assign) {
        std::uint64_t signs = fixed_signs;
        for (int j = 0; j < m; ++j)
            if (assign & (std::uint64_t{1} << j)) signs |= std::uint64_t{1} << bits[j];
        out.emplace_back(n, free_support | fixed_support, signs);
    }
}

// Sign bits of the alternating prefix -1,+1,-1,... on 0-based
// positions 0..len-1 (positive entries at odd positions).
std::uint64_t alternating_signs(int len) {
    std::uint64_t signs = 0;
    for (int p = 1; p < len; p += 2) signs |= std::uint64_t{1} << p;
    return signs;
}

}  // namespace

CubicalComplex cge_facets(NcpParams params) {
    int n = params.n, d = params.d;
    if (!(n > d && d >= 3)) throw Error("cge_facets: requires n > d >= 3");
    if (n > 64) throw Error("cge_facets: n exceeds 64");
    std::vector<SignVector> facets;

    // type 0: first entry zero, |alpha| Gale-even
    for_each_submask_of_size(low_mask(n), d, [&](std::uint64_t zeros) {
        if (!(zeros & 1)) return;  // position 0 must be a zero
        std::uint64_t support = ~zeros & low_mask(n);
        if (!gale_even(support, n)) return;
        emit_signings(n, support, 0, 0, facets);
    });

    // type 0 < t < n-d: alternating prefix, sigma, zero, Gale-even tail
    for (int t = 1; t <= n - d - 1; ++t) {
        int tail_len = n - t - 1;  // positions t+1 .. n-1
        std::uint64_t prefix_support = low_mask(t);          // positions 0..t-1
        std::uint64_t prefix_signs = alternating_signs(t - 1);  // sigma slot at t-1
        for_each_submask_of_size(low_mask(tail_len), d - 1, [&](std::uint64_t tail_zeros) {
            std::uint64_t tail_support_local = ~tail_zeros & low_mask(tail_len);
            if (!gale_even(tail_support_local, tail_len)) return;
            int leading_zeros = 0;
            while (leading_zeros < tail_len &&
                   (tail_zeros & (std::uint64_t{1} << leading_zeros)))
                ++leading_zeros;
            // sigma = (-1)^(t+1) for an even run, (-1)^t for an odd run
            int sigma = ((leading_zeros & 1) == 0) ? ((t % 2 == 0) ? -1 : +1)
                                                   : ((t % 2 == 0) ? +1 : -1);
            std::uint64_t fixed_support = prefix_support;
            std::uint64_t fixed_signs = prefix_signs;
            if (sigma > 0) fixed_signs |= std::uint64_t{1} << (t - 1);
            std::uint64_t tail_support = tail_support_local << (t + 1);
            emit_signings(n, tail_support, fixed_support, fixed_signs, facets);
        });
    }

    // type n-d: alternating prefix, free sigma, all zeros behind
    {
        int t = n - d;
        std::uint64_t support = low_mask(t);
        std::uint64_t signs = alternating_signs(t - 1);
        facets.emplace_back(n, support, signs | (std::uint64_t{1} << (t - 1)));
        facets.emplace_back(n, support, signs);
    }

    return CubicalComplex(n, std::move(facets));
}

SignVector phi_map(const SignVector& alpha) {
    int n = alpha.ambient_dim();
    std::uint64_t support = 0, signs = 0;
    for (int p = 0; p < n; ++p) {
        int e = alpha.entry(n - 1 - p);
        if (e == 0) continue;
        if (p & 1) e = -e;  // flip even coordinates (1-based)
        support |= std::uint64_t{1} << p;
        if (e > 0) signs |= std::uint64_t{1} << p;
    }
    return SignVector(n, support, signs);
}

std::int64_t s_neighborly_sphere_facets(int i, int d) {
    if (d % 2 == 0) throw Error("s_neighborly_sphere_facets: d must be odd");
    if (d < 3 || i < d) throw Error("s_neighborly_sphere_facets: requires i >= d >= 3");
    std::uint64_t binom = binomial(i - (d - 1) / 2, i + 1 - d);
    unsigned __int128 numerator = static_cast<unsigned __int128>(2 * i) * binom;
    std::uint64_t denominator = static_cast<std::uint64_t>(2 * i - d + 1);
    if (numerator % denominator != 0)
        throw std::logic_error("s_neighborly_sphere_facets: non-integral value");
    unsigned __int128 result = numerator / denominator;
    if (result > static_cast<unsigned __int128>(INT64_MAX))
        throw Error("s_neighborly_sphere_facets: overflow");
    return static_cast<std::int64_t>(result);
}

std::int64_t ncp_facet_count(int n, int d) {
    if (d % 2 == 0) throw Error("ncp_facet_count: d must be odd");
    if (!(n > d && d > 2)) throw Error("ncp_facet_count: requires n > d > 2");
    std::int64_t total = 2 * (d + 1);
    for (int k = d + 2; k <= n; ++k) {
        std::int64_t s = s_neighborly_sphere_facets(k - 1, d);
        if (k - d >= 63) throw Error("ncp_facet_count: overflow");
        total += s << (k - d);
    }
    return total;
}

}  // namespace ncs
