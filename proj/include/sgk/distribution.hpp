#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace sgk {

/// Per-level graphlet counts indexed by catalog ordinal.
struct CountVector {
    int level = 0;
    std::vector<std::uint64_t> counts;

    [[nodiscard]] std::uint64_t total() const {
        return std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
    }

    friend bool operator==(const CountVector&, const CountVector&) = default;
};

/// Probability vector over one catalog level, indexed by ordinal.
struct Distribution {
    int level = 0;
    std::vector<double> probs;

    [[nodiscard]] double sum() const { return std::accumulate(probs.begin(), probs.end(), 0.0); }

    friend bool operator==(const Distribution&, const Distribution&) = default;
};

/// probs[i] = c_i / sum(c). Throws EstimationError on a zero total.
[[nodiscard]] Distribution mle(const CountVector& counts);

/// Throws ArgumentError unless probs are non-negative and sum to 1 within tol.
void validate(const Distribution& dist, double tol = 1e-9);

} // namespace sgk
