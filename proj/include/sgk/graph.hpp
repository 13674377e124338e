#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sgk {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;

/// Undirected simple graph with sorted adjacency lists. Immutable once built.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on n vertices. Duplicate and reversed edges collapse;
    /// self-loops and out-of-range endpoints throw FormatError.
    Graph(std::size_t n, std::span<const Edge> edges);

    [[nodiscard]] std::size_t num_vertices() const { return adjacency_.size(); }
    [[nodiscard]] std::size_t num_edges() const { return num_edges_; }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const {
        return adjacency_[static_cast<std::size_t>(v)];
    }

    [[nodiscard]] std::size_t degree(Vertex v) const {
        return adjacency_[static_cast<std::size_t>(v)].size();
    }

    [[nodiscard]] bool has_edge(Vertex u, Vertex v) const;

    /// Edges as (u, v) with u < v, in ascending order.
    [[nodiscard]] std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t num_edges_ = 0;
};

struct GraphCollection {
    std::string name;
    std::vector<Graph> graphs;
    std::vector<int> labels;

    [[nodiscard]] std::size_t size() const { return graphs.size(); }
};

// Tiny graphs (at most 8 vertices) pack into an upper-triangular bit code:
// pairs (i, j), i < j, in row-major order with pair (0, 1) as the most
// significant bit.
constexpr int kMaxPackedVertices = 8;

[[nodiscard]] int pair_count(int n);
[[nodiscard]] std::uint32_t pack_adjacency(const Graph& g);
[[nodiscard]] Graph unpack_adjacency(int n, std::uint32_t bits);

/// Induced subgraph on `vertices`; vertex i of the result is vertices[i].
/// Throws ArgumentError on duplicates or out-of-range vertices.
[[nodiscard]] Graph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// True iff a single traversal reaches every vertex. Requires n >= 1.
[[nodiscard]] bool is_connected(const Graph& g);

/// Parses the minimal "n m" + m x "u v" edge-list format.
[[nodiscard]] Graph parse_edge_list(std::string_view text);
[[nodiscard]] std::string to_edge_list(const Graph& g);

/// Reads a TU benchmark directory: <DS>_A.txt, <DS>_graph_indicator.txt and
/// <DS>_graph_labels.txt. Node and edge label files are ignored.
[[nodiscard]] GraphCollection parse_tu_dataset(const std::filesystem::path& directory,
                                               const std::string& dataset_name);

/// Same as parse_tu_dataset but the graph label file is optional; graphs get
/// label 0 when it is absent. Used by the counting-only commands.
[[nodiscard]] GraphCollection parse_tu_graphs(const std::filesystem::path& directory,
                                              const std::string& dataset_name);

} // namespace sgk
