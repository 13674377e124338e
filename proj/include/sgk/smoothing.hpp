#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sgk/catalog.hpp"
#include "sgk/distribution.hpp"

namespace sgk {

enum class SmoothingMethod { Mle, Laplace, Kn, Skn, Pyp };

[[nodiscard]] std::string_view to_string(SmoothingMethod method);
[[nodiscard]] SmoothingMethod parse_smoothing_method(std::string_view name);
[[nodiscard]] std::string_view to_string(BaseMode mode);
[[nodiscard]] BaseMode parse_base_mode(std::string_view name);

struct SmoothingConfig {
    SmoothingMethod method = SmoothingMethod::Mle;
    double discount = 0.0;
    BaseMode base_mode = BaseMode::ParentMle;
    bool renormalize = true;
};

/// (c_i + 1) / (N + M) with M the level size. A zero total gives the uniform
/// distribution.
[[nodiscard]] Distribution laplace(const CountVector& counts);

/// Kneser-Ney interpolation with an explicit base:
///   max(c_i - d, 0) / N + T * (d / N) * base_i,   T = |{j : c_j > d}|.
/// The raw vector sums to 1 only when d is below every positive count;
/// `renormalize` rescales it to sum 1; when no count exceeds d the
/// renormalized result is the base.
[[nodiscard]] Distribution kneser_ney(const CountVector& counts, const Distribution& base, double discount,
                                      bool renormalize = true);

/// Kneser-Ney at level k+1 whose base is the DAG push-forward of the level-k
/// counts (`lower`). Uses config.discount, config.base_mode, config.renormalize.
[[nodiscard]] Distribution structural_kneser_ney(const CountVector& counts, const CountVector& lower,
                                                 const GraphletDag& dag, const SmoothingConfig& config);

/// Discount values swept when tuning Kneser-Ney: 0.01 .. 10000.
[[nodiscard]] std::vector<double> discount_grid();

/// One row of a sparse vector file: "<graph idx> <level> <ordinal>:<value> ...".
struct SparseRow {
    std::size_t graph = 0;
    int level = 0;
    std::vector<double> values;
};

/// Count rows print integers, smoothed rows print 17 significant digits.
[[nodiscard]] std::string format_count_row(std::size_t graph, const CountVector& counts);
[[nodiscard]] std::string format_vector_row(std::size_t graph, const Distribution& dist);

/// Parses a file of rows; `level_sizes[level]` gives the dense length.
[[nodiscard]] std::vector<SparseRow> parse_sparse_rows(std::string_view text, std::span<const std::size_t> level_sizes);

[[nodiscard]] CountVector to_counts(const SparseRow& row);

} // namespace sgk
