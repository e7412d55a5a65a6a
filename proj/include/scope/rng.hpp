#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

namespace scope {

// Seedable deterministic RNG. mt19937_64 output is fixed by the standard,
// but std::*_distribution is not, so the distributions here are hand-rolled
// to make trajectories bit-identical across standard libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    // splitmix64 finalizer; used to derive independent per-trial streams
    // from (master seed, stream index).
    static std::uint64_t mix(std::uint64_t z) {
        z += 0x9e3779b97f4a7c15ULL;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    static std::uint64_t derive(std::uint64_t master, std::uint64_t stream) {
        return mix(mix(master) ^ mix(stream + 0x632be59bd9b4e019ULL));
    }

    std::uint64_t next_u64() { return gen_(); }

    // Uniform on [0,1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // Gaussian via Box-Muller; draws two uniforms per call.
    double normal(double mean, double sd) {
        const double u1 = 1.0 - uniform(); // (0,1], keeps log finite
        const double u2 = uniform();
        const double r = std::sqrt(-2.0 * std::log(u1));
        return mean + sd * r * std::cos(2.0 * std::numbers::pi * u2);
    }

    // Uniform integer on [0,n) without modulo bias.
    std::uint64_t below(std::uint64_t n) {
        if (n == 0)
            throw std::invalid_argument("Rng::below: n must be positive");
        const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
        std::uint64_t raw;
        do {
            raw = gen_();
        } while (raw >= limit);
        return raw % n;
    }

    // k distinct indices from [0,n), uniform without replacement
    // (partial Fisher-Yates; result order is the sampling order).
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k) {
        if (k > n)
            throw std::invalid_argument("sample_without_replacement: k > n");
        std::vector<std::size_t> idx(n);
        for (std::size_t i = 0; i < n; ++i) idx[i] = i;
        for (std::size_t i = 0; i < k; ++i) {
            const std::size_t j = i + static_cast<std::size_t>(below(n - i));
            std::swap(idx[i], idx[j]);
        }
        idx.resize(k);
        return idx;
    }

private:
    std::mt19937_64 gen_;
};

} // namespace scope
