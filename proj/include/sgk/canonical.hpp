#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "sgk/graph.hpp"

namespace sgk {

/// Adjacency of a graph on at most 8 vertices, one neighbor mask per vertex.
struct SmallGraph {
    int n = 0;
    std::array<std::uint8_t, kMaxPackedVertices> adj{};

    [[nodiscard]] static SmallGraph from_graph(const Graph& g);
    [[nodiscard]] static SmallGraph from_bits(int n, std::uint32_t bits);
    [[nodiscard]] std::uint32_t bits() const;

    void add_edge(int u, int v) {
        adj[static_cast<std::size_t>(u)] |= static_cast<std::uint8_t>(1U << v);
        adj[static_cast<std::size_t>(v)] |= static_cast<std::uint8_t>(1U << u);
    }
};

/// Isomorphism-invariant identity of a small graph: the lexicographically
/// smallest packed adjacency code over all vertex orderings.
struct CanonicalCode {
    std::uint8_t num_vertices = 0;
    std::uint32_t bits = 0;

    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;

    /// "<k>:<lowercase hex>", e.g. "3:7" for the triangle.
    [[nodiscard]] std::string to_string() const;
    [[nodiscard]] static CanonicalCode parse(std::string_view token);
};

/// Requires 2 <= n <= 8. Results are memoized per thread.
[[nodiscard]] CanonicalCode canonical_form(const Graph& g);
[[nodiscard]] CanonicalCode canonical_form(const SmallGraph& g);

/// Same result without consulting the memo table.
[[nodiscard]] CanonicalCode canonical_form_uncached(const SmallGraph& g);

[[nodiscard]] bool are_isomorphic(const Graph& a, const Graph& b);

} // namespace sgk
