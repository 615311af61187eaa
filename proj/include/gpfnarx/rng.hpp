/*
 * Copyright 2026 The gpfnarx Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef GPFNARX_RNG_HPP
#define GPFNARX_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace gpfnarx {

/// splitmix64 step, used to derive independent seed streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

/// Deterministic RNG. mt19937_64 is fully specified by the standard and the
/// variate transforms below are spelled out explicitly, so identical seeds
/// give identical streams across compilers and platforms (std::*_distribution
/// would not guarantee that).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    /// Uniform double in [0, 1), 53-bit resolution.
    double uniform() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform double in (lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller (first branch only; stateless).
    double gaussian() {
        double u1 = 1.0 - uniform(); // (0, 1]
        double u2 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
    }

    /// Uniform index in [0, n). Modulo bias is < n / 2^64, irrelevant here.
    std::size_t index(std::size_t n) { return static_cast<std::size_t>(engine_() % n); }

    /// First m entries of a Fisher-Yates shuffle of 0..n-1 (sampling without
    /// replacement, uniform over ordered m-subsets).
    std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t m) {
        std::vector<std::size_t> idx(n);
        std::iota(idx.begin(), idx.end(), std::size_t{0});
        for (std::size_t i = 0; i < m; ++i) {
            std::size_t j = i + index(n - i);
            std::swap(idx[i], idx[j]);
        }
        idx.resize(m);
        return idx;
    }

    /// Derived stream for independent sub-tasks.
    Rng derive(std::uint64_t stream) const { return derived(seed_, stream); }

    static Rng derived(std::uint64_t seed, std::uint64_t stream) {
        std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
        return Rng(splitmix64(s));
    }

private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
};

} // namespace gpfnarx

#endif // GPFNARX_RNG_HPP
