#pragma once

// Deterministic RNG (xoshiro256**). The verify suites promise byte-identical
// reports for a given seed, so no libstdc++ distributions here.

#include <cstdint>

#include "linalg.hpp"

namespace spingauge {

class Rng {
public:
    explicit Rng(uint64_t seed = 0)
    {
        // splitmix64 expansion of the seed
        uint64_t x = seed;
        for (auto& word : s_) {
            x += 0x9e3779b97f4a7c15ull;
            uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
            z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
            word = z ^ (z >> 31);
        }
    }

    uint64_t next()
    {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // uniform in [0,1)
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    cplx complex_uniform(double amp) { return cplx(uniform(-amp, amp), uniform(-amp, amp)); }

    CMat state(int m, double amp = 1.0)
    {
        CMat psi(4, m);
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < m; ++j) psi(i, j) = complex_uniform(amp);
        return psi;
    }

    template <typename T, int R, int C>
    Mat<T, R, C> matrix(double amp)
    {
        Mat<T, R, C> m;
        for (auto& x : m.v) {
            if constexpr (std::is_same_v<T, cplx>)
                x = complex_uniform(amp);
            else
                x = uniform(-amp, amp);
        }
        return m;
    }

    // Random tetrad with entries in [-amp, amp], |det| kept away from zero
    // and orientation fixed positive (det O' > 0).
    Mat4r tetrad_matrix(double amp = 2.0, double min_det = 0.1)
    {
        for (;;) {
            Mat4r o = matrix<double, 4, 4>(amp);
            const double d = determinant(o);
            if (std::abs(d) < min_det) continue;
            if (d < 0)
                for (int a = 0; a < 4; ++a) o(a, 0) = -o(a, 0);
            return o;
        }
    }

    std::array<double, 3> unit3()
    {
        for (;;) {
            std::array<double, 3> r{uniform(-1, 1), uniform(-1, 1), uniform(-1, 1)};
            const double n2 = r[0] * r[0] + r[1] * r[1] + r[2] * r[2];
            if (n2 < 1e-6 || n2 > 1.0) continue;
            const double n = std::sqrt(n2);
            return {r[0] / n, r[1] / n, r[2] / n};
        }
    }

private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }
    uint64_t s_[4];
};

} // namespace spingauge
