#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "sgk/catalog.hpp"
#include "sgk/distribution.hpp"
#include "sgk/graph.hpp"

namespace sgk {

/// expand grows a connected set from a uniform start vertex by adding a
/// uniform vertex of the set's neighborhood; it favors dense regions.
/// reject draws uniform k-subsets and keeps the connected ones, which is
/// unbiased but slow on sparse graphs.
enum class SampleMethod { Expand, Reject };

[[nodiscard]] std::string_view to_string(SampleMethod method);
[[nodiscard]] SampleMethod parse_sample_method(std::string_view name);

/// Total attempts allowed per requested sample before giving up.
constexpr std::size_t kAttemptsPerSample = 100;

/// Counts every connected induced k-subgraph exactly once (ESU extension
/// enumeration). Requires 2 <= k <= catalog.max_level().
[[nodiscard]] CountVector enumerate_connected_subgraphs(const Graph& g, int k, const GraphletCatalog& catalog);

/// Draws n_samples connected induced k-subgraphs with replacement.
/// Deterministic in (seed, method). Throws SamplingError when the attempt
/// budget runs out.
[[nodiscard]] CountVector sample_connected_subgraphs(const Graph& g, int k, std::size_t n_samples, std::uint64_t seed,
                                                     SampleMethod method, const GraphletCatalog& catalog);

struct RankFrequency {
    std::size_t rank = 0;
    int ordinal = 0;
    std::uint64_t frequency = 0;

    friend bool operator==(const RankFrequency&, const RankFrequency&) = default;
};

/// Non-zero graphlets by descending frequency, ties by ascending ordinal.
[[nodiscard]] std::vector<RankFrequency> powerlaw_table(const CountVector& counts);

/// Least-squares slope of log(frequency) against log(rank). Needs two rows.
[[nodiscard]] double loglog_slope(const std::vector<RankFrequency>& table);

/// Where count vectors come from: exhaustive enumeration or sampling.
struct CountSource {
    bool exhaustive = false;
    std::size_t samples = 10000;
    std::uint64_t seed = 0;
    SampleMethod method = SampleMethod::Expand;
};

/// Seed of graph `index` at level k for a collection-level run.
[[nodiscard]] std::uint64_t graph_seed(std::uint64_t base_seed, int k, std::size_t index);

/// Counts every graph of a collection in parallel. A graph with no connected
/// k-subgraph at all yields an all-zero vector instead of an error.
[[nodiscard]] std::vector<CountVector> count_collection(const std::vector<Graph>& graphs, int k,
                                                        const CountSource& source, const GraphletCatalog& catalog,
                                                        unsigned workers);

} // namespace sgk
