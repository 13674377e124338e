#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "sgk/canonical.hpp"
#include "sgk/distribution.hpp"

namespace sgk {

constexpr int kMinLevel = 2;
constexpr int kMaxLevel = 8;

/// Known numbers of connected graphs on k unlabeled vertices, k = 0..8.
constexpr std::size_t kConnectedGraphCounts[] = {0, 1, 1, 2, 6, 21, 112, 853, 11117};

/// All connected graphlets of sizes 2..max_level. Ordinals within a level
/// follow ascending canonical code.
class GraphletCatalog {
public:
    GraphletCatalog() = default;

    /// levels[k] lists the codes of level k; entries below level 2 are ignored.
    /// Codes are sorted and checked for duplicates and wrong sizes.
    explicit GraphletCatalog(std::vector<std::vector<CanonicalCode>> levels);

    [[nodiscard]] int max_level() const { return static_cast<int>(levels_.size()) - 1; }
    [[nodiscard]] bool has_level(int k) const { return k >= kMinLevel && k <= max_level(); }
    [[nodiscard]] std::span<const CanonicalCode> level(int k) const;
    [[nodiscard]] std::size_t level_size(int k) const { return level(k).size(); }
    [[nodiscard]] std::optional<int> ordinal(CanonicalCode code) const;

    /// Throws ArgumentError when the code is not in the catalog.
    [[nodiscard]] int require_ordinal(CanonicalCode code) const;

    friend bool operator==(const GraphletCatalog& a, const GraphletCatalog& b) {
        return a.levels_ == b.levels_;
    }

private:
    std::vector<std::vector<CanonicalCode>> levels_;
    std::unordered_map<std::uint64_t, int> index_;
};

struct ChildLink {
    int child = 0;
    int multiplicity = 0;
    double weight = 0.0;

    friend bool operator==(const ChildLink&, const ChildLink&) = default;
};

struct ParentLink {
    int parent = 0;
    int multiplicity = 0;
    double weight = 0.0;

    friend bool operator==(const ParentLink&, const ParentLink&) = default;
};

/// Raw multiplicity s_ij between parent (level, parent) and child (level+1, child).
struct DagEntry {
    int level = 0;
    int parent = 0;
    int child = 0;
    int multiplicity = 0;
};

/// Delete-one-vertex DAG between consecutive catalog levels. Parent g_i at
/// level k links to child g_j at level k+1 when deleting one vertex of g_j
/// leaves a connected graph isomorphic to g_i; s_ij counts such vertices and
/// w_ij = s_ij / sum over children of s_ij'.
class GraphletDag {
public:
    GraphletDag() = default;

    /// Weights are derived from the multiplicities.
    GraphletDag(const GraphletCatalog& catalog, std::span<const DagEntry> entries);

    [[nodiscard]] int min_level() const { return kMinLevel; }
    [[nodiscard]] int max_level() const { return max_level_; }

    /// Edges from graphlet `ordinal` at `level` to level + 1.
    [[nodiscard]] std::span<const ChildLink> children(int level, int ordinal) const;

    /// Edges into graphlet `ordinal` at `level` from level - 1.
    [[nodiscard]] std::span<const ParentLink> parents(int level, int ordinal) const;

    [[nodiscard]] std::size_t level_size(int level) const;

    /// All edges, ordered by (level, parent, child).
    [[nodiscard]] std::vector<DagEntry> entries() const;

    friend bool operator==(const GraphletDag&, const GraphletDag&) = default;

private:
    int max_level_ = 0;
    // children_[k][i], parents_[k][j], indexed by level.
    std::vector<std::vector<std::vector<ChildLink>>> children_;
    std::vector<std::vector<std::vector<ParentLink>>> parents_;
};

/// k_max in 3..8. Levels are grown by attaching one vertex to every
/// non-empty neighbor subset of each graphlet one level down.
[[nodiscard]] GraphletCatalog build_catalog(int k_max);

[[nodiscard]] GraphletDag build_dag(const GraphletCatalog& catalog);

/// Level k -> level k+1: P0(g_j) = sum over parents of w_ij P(g_i).
[[nodiscard]] Distribution push_forward(const Distribution& dist, const GraphletDag& dag);

enum class BaseMode { ParentMle, Recursive };

/// Base distribution over level counts.level + 1. ParentMle pushes the MLE of
/// `counts` one step; Recursive pushes the level-2 point mass up every level.
[[nodiscard]] Distribution base_distribution(const CountVector& counts, const GraphletDag& dag,
                                             BaseMode mode = BaseMode::ParentMle);

void save_catalog(const GraphletCatalog& catalog, const GraphletDag& dag,
                  const std::filesystem::path& path);

[[nodiscard]] std::pair<GraphletCatalog, GraphletDag> load_catalog(const std::filesystem::path& path);

/// Loads `<dir>/catalog-k<k_max>.txt`, building and saving it first if absent.
[[nodiscard]] std::pair<GraphletCatalog, GraphletDag> cached_catalog(const std::filesystem::path& dir,
                                                                     int k_max);

} // namespace sgk
