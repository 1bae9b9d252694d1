#pragma once

#include <cmath>
#include <cstdint>
#include <random>

// deterministic randomness. mt19937_64 output is pinned by the C++ standard,
// and the transforms below avoid std::*_distribution (whose sequences are
// implementation-defined), so fixed-seed results are bit-identical across
// toolchains. each path gets its own generator seeded from (seed, stream id),
// which makes results independent of how work is split across workers.

namespace cva::rng {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::mt19937_64 stream_rng(std::uint64_t seed, std::uint64_t stream) {
    return std::mt19937_64(splitmix64(seed ^ splitmix64(stream)));
}

// uniform on (0, 1), never returning either endpoint
inline double uniform01(std::mt19937_64& gen) {
    return static_cast<double>(gen() >> 11) * 0x1.0p-53 + 0x1.0p-54;
}

// inverse standard-normal cdf (Acklam's rational approximation,
// |relative error| < 1.2e-9 on (0,1))
inline double normal_inv_cdf(double p) {
    static constexpr double a[6] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                    -2.759285104469687e+02, 1.383577518672690e+02,
                                    -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[5] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                    -1.556989798598866e+02, 6.680131188771972e+01,
                                    -1.328068155288572e+01};
    static constexpr double c[6] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                    -2.400758277161838e+00, -2.549732539343734e+00,
                                    4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[4] = {7.784695709041462e-03, 3.224671290700398e-01,
                                    2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - p_low) {
        const double q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    const double q = p - 0.5;
    const double r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

inline double normal(std::mt19937_64& gen) { return normal_inv_cdf(uniform01(gen)); }

// Poisson by inversion of the cdf; exact, intended for small means
inline int poisson(std::mt19937_64& gen, double mean) {
    const double u = uniform01(gen);
    double p = std::exp(-mean);
    double cum = p;
    int k = 0;
    while (u > cum) {
        ++k;
        p *= mean / k;
        cum += p;
        if (k > 1000000) break;  // unreachable for sane means; guards fp trouble
    }
    return k;
}

}  // namespace cva::rng
