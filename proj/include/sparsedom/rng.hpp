#pragma once

#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace sparsedom {

// std::mt19937_64's output sequence is fixed by the standard; the distribution
// helpers in <random> are not, so the reductions below are done by hand.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish draw in [0, bound). bound must be positive.
    std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }

    /// Fisher-Yates permutation of 0..n-1.
    std::vector<std::uint32_t> permutation(std::size_t n) {
        std::vector<std::uint32_t> p(n);
        std::iota(p.begin(), p.end(), 0u);
        for (std::size_t i = n; i > 1; --i) {
            std::size_t j = below(i);
            std::swap(p[i - 1], p[j]);
        }
        return p;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace sparsedom
