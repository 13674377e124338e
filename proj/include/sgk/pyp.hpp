#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "sgk/catalog.hpp"
#include "sgk/distribution.hpp"
#include "sgk/rng.hpp"

namespace sgk {

struct PypConfig {
    double discount = 0.5;
    double strength = 1.0;
    int sweeps = 100;
    int burn_in = 50;
    int average_last = 10;
    /// Level of the explicit MLE base; restaurants span base_level+1 .. k.
    int base_level = kMinLevel;
};

/// Chinese-restaurant state of one level. Tables are grouped by label; each
/// table remembers the parent-level label that produced it.
class Restaurant {
public:
    struct Table {
        int customers = 0;
        int parent = 0;
    };

    Restaurant(int level, std::size_t num_labels, double discount, double strength);

    [[nodiscard]] int level() const { return level_; }
    [[nodiscard]] double discount() const { return discount_; }
    [[nodiscard]] double strength() const { return strength_; }
    [[nodiscard]] long long customers() const { return customers_; }
    [[nodiscard]] long long tables() const { return tables_; }
    [[nodiscard]] std::size_t num_labels() const { return by_label_.size(); }
    [[nodiscard]] long long label_customers(int label) const { return label_customers_[static_cast<std::size_t>(label)]; }
    [[nodiscard]] long long label_tables(int label) const {
        return static_cast<long long>(by_label_[static_cast<std::size_t>(label)].size());
    }
    [[nodiscard]] const std::vector<Table>& tables_of(int label) const {
        return by_label_[static_cast<std::size_t>(label)];
    }

    void join(int label, std::size_t table);
    void open(int label, int parent);
    /// Removes one customer; returns true when the table emptied and was dropped.
    bool leave(int label, std::size_t table);

private:
    int level_;
    double discount_;
    double strength_;
    std::vector<std::vector<Table>> by_label_;
    std::vector<long long> label_customers_;
    long long customers_ = 0;
    long long tables_ = 0;
};

/// Hierarchy of restaurants over consecutive graphlet levels. A new table at
/// level m is labeled by first drawing a level m-1 graphlet g_i (a customer
/// seated one level down, or a draw from the explicit base at the lowest
/// level) and then a child g_j with probability w_ij.
class HpypChain {
public:
    HpypChain(const GraphletDag& dag, Distribution base, int top_level, const PypConfig& config, std::uint64_t seed);

    [[nodiscard]] int base_level() const { return base_.level; }
    [[nodiscard]] int top_level() const { return top_level_; }
    [[nodiscard]] const Restaurant& restaurant(int level) const;
    [[nodiscard]] const Distribution& base() const { return base_; }

    void reseed(std::uint64_t seed) { rng_ = Rng(seed); }

    /// Seats one customer at `level`. Without `observed` this is a generative
    /// draw; with it the customer is restricted to tables labeled `observed`
    /// or a new table labeled `observed`. Returns the label.
    int insert_customer(int level, std::optional<int> observed = std::nullopt);

    /// Removes one directly inserted customer at `level`, choosing a table
    /// with probability proportional to its customer count (restricted to
    /// `observed` when given). An emptied table also removes the parent-level
    /// customer that labeled it. Returns the label.
    int delete_customer(int level, std::optional<int> observed = std::nullopt);

    /// P(g_j) = [sum over tables labeled g_j of (c - d)] / (theta + n)
    ///        + (theta + d t) / (theta + n) * P0(g_j),
    /// with P0 the push-forward of the level below.
    [[nodiscard]] Distribution predictive_distribution(int level) const;
    [[nodiscard]] double predictive(int level, int label) const;

    /// Push-forward of the level below onto `label` at `level`.
    [[nodiscard]] double pushed(int level, int label) const;

    /// Customers inserted through insert_customer at `level` with `label`.
    [[nodiscard]] long long direct_customers(int level, int label) const;

    /// Customers at each level equal direct insertions plus tables opened one
    /// level up with that parent label.
    [[nodiscard]] bool consistent() const;

private:
    Restaurant& at(int level);
    void check_level(int level) const;
    void check_label(int level, int label) const;
    int seat(int level, std::optional<int> observed);
    int draw_parent(int level);
    void unseat(int level, int label, std::size_t table);
    std::size_t pick_table_by_customers(const Restaurant& r, int label);

    const GraphletDag* dag_;
    Distribution base_;
    int top_level_;
    std::vector<Restaurant> restaurants_;  // index = level - base_level - 1
    std::vector<std::vector<long long>> direct_;
    Rng rng_;
    // Predictive values memoized until the seating changes.
    mutable std::vector<std::vector<double>> memo_;
    mutable std::vector<std::vector<std::uint64_t>> memo_stamp_;
    std::uint64_t generation_ = 1;
};

/// Seats one customer per observation, then runs `config.sweeps` passes that
/// delete and reinsert each observation. Returns the predictive at the top
/// level averaged over the last `config.average_last` passes (the initial
/// seating when sweeps = 0).
Distribution gibbs_fit(HpypChain& chain, const CountVector& counts, const PypConfig& config, std::uint64_t seed);

/// Builds the chain for `counts` (base from `lower` when base_level is
/// counts.level - 1, else the level-2 point mass) and fits it.
[[nodiscard]] Distribution pyp_smooth(const CountVector& counts, const CountVector* lower, const GraphletDag& dag,
                                      const PypConfig& config, std::uint64_t seed);

} // namespace sgk
