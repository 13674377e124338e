#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "sgk/catalog.hpp"
#include "sgk/graph.hpp"
#include "sgk/pyp.hpp"
#include "sgk/sampling.hpp"
#include "sgk/smoothing.hpp"

namespace sgk {

struct FeatureConfig {
    int k = 5;
    CountSource source;
    SmoothingConfig smoothing;
    PypConfig pyp;
};

/// True when the method also needs counts one level down.
[[nodiscard]] bool needs_lower_level(const SmoothingConfig& smoothing, const PypConfig& pyp, int k);

/// Smoothed feature vector from precomputed counts. An all-zero count vector
/// (no connected k-subgraph in the graph) maps to the all-zero vector.
/// `lower` may be null unless needs_lower_level().
[[nodiscard]] Distribution smooth_counts(const CountVector& counts, const CountVector* lower,
                                         const SmoothingConfig& smoothing, const PypConfig& pyp,
                                         const GraphletDag& dag, std::uint64_t seed);

/// Counts `g` (at k, and k-1 when needed) and smooths. `index` selects the
/// graph's random stream.
[[nodiscard]] Distribution feature_vector(const Graph& g, const FeatureConfig& config, const GraphletCatalog& catalog,
                                          const GraphletDag& dag, std::size_t index = 0);

/// Dense symmetric matrix with run metadata.
struct KernelMatrix {
    std::size_t n = 0;
    std::vector<double> values;
    std::string meta;

    [[nodiscard]] double operator()(std::size_t i, std::size_t j) const { return values[i * n + j]; }
    double& operator()(std::size_t i, std::size_t j) { return values[i * n + j]; }

    [[nodiscard]] KernelMatrix submatrix(std::span<const std::size_t> rows, std::span<const std::size_t> cols) const;
};

/// values[a][b] = <features[a], features[b]>.
[[nodiscard]] KernelMatrix gram_matrix(const std::vector<std::vector<double>>& features, unsigned workers = 1);

/// Count vectors of a collection at k and, when requested, at k - 1.
struct CollectionCounts {
    std::vector<CountVector> upper;
    std::vector<CountVector> lower;  // empty unless requested
};

[[nodiscard]] CollectionCounts collection_counts(const GraphCollection& collection, int k, const CountSource& source,
                                                 bool with_lower, const GraphletCatalog& catalog, unsigned workers);

/// Smooths every graph's counts; graph i uses random stream i of `seed`.
[[nodiscard]] std::vector<std::vector<double>> smooth_collection(const CollectionCounts& counts,
                                                                 const SmoothingConfig& smoothing,
                                                                 const PypConfig& pyp, const GraphletDag& dag,
                                                                 std::uint64_t seed, unsigned workers);

/// Feature vectors for a whole collection, counted and smoothed in parallel.
[[nodiscard]] std::vector<std::vector<double>> collection_features(const GraphCollection& collection,
                                                                   const FeatureConfig& config,
                                                                   const GraphletCatalog& catalog,
                                                                   const GraphletDag& dag, unsigned workers);

[[nodiscard]] KernelMatrix gram_matrix(const GraphCollection& collection, const FeatureConfig& config,
                                       const GraphletCatalog& catalog, const GraphletDag& dag, unsigned workers);

struct SvmOptions {
    double tolerance = 1e-3;
    std::size_t max_epochs = 10000;
};

/// Binary C-SVM trained on a precomputed kernel; labels are +1 / -1.
struct SvmModel {
    std::vector<double> alpha;
    std::vector<int> y;
    double bias = 0.0;
    double C = 1.0;
    std::vector<std::size_t> support;
    std::size_t iterations = 0;
    bool converged = false;

    /// Sum over training points of alpha_i y_i K(i, x) + bias; `kernel_row`
    /// holds K between x and every training point.
    [[nodiscard]] double decision(std::span<const double> kernel_row) const;
};

/// SMO with second-order working-set selection on the C-SVM dual. Stops when
/// the maximal KKT violation drops below options.tolerance.
[[nodiscard]] SvmModel svm_train(const KernelMatrix& gram, std::span<const int> labels, double C,
                                 const SvmOptions& options = {});

/// 1/2 a'Qa - e'a with Q_ij = y_i y_j K_ij (the minimized form).
[[nodiscard]] double dual_objective(const KernelMatrix& gram, std::span<const int> labels,
                                    std::span<const double> alpha);

/// Arbitrary integer labels; two classes use one binary machine, more use
/// one-vs-rest with the largest decision value.
class Classifier {
public:
    static Classifier train(const KernelMatrix& gram, std::span<const int> labels, double C,
                            const SvmOptions& options = {});

    [[nodiscard]] int predict(std::span<const double> kernel_row) const;
    [[nodiscard]] const std::vector<int>& classes() const { return classes_; }
    [[nodiscard]] const std::vector<SvmModel>& machines() const { return machines_; }

private:
    std::vector<int> classes_;
    std::vector<SvmModel> machines_;
};

struct EvalReport {
    std::vector<double> fold_accuracies;  // percent
    double mean = 0.0;
    double std = 0.0;  // sample standard deviation over folds
    std::string config;
};

/// Stratified assignment of items to folds, shuffled by `seed`.
[[nodiscard]] std::vector<int> stratified_folds(std::span<const int> labels, int folds, std::uint64_t seed);

/// k-fold CV on a precomputed Gram matrix: train on folds-1 folds, test on one.
[[nodiscard]] EvalReport cross_validate(const KernelMatrix& gram, std::span<const int> labels, int folds,
                                        std::uint64_t seed, double C, const SvmOptions& options = {});

[[nodiscard]] EvalReport cross_validate(const GraphCollection& collection, const FeatureConfig& config,
                                        const GraphletCatalog& catalog, const GraphletDag& dag, int folds,
                                        std::uint64_t seed, double C, unsigned workers);

/// Two-sided Welch unpaired t-test.
[[nodiscard]] double t_test(std::span<const double> a, std::span<const double> b);

/// One line per graph: "<label> 0:<row+1> 1:<v1> ... n:<vn>", 17 significant digits.
void export_precomputed_kernel(const KernelMatrix& gram, std::span<const int> labels,
                               const std::filesystem::path& path);

struct LabeledKernel {
    KernelMatrix gram;
    std::vector<int> labels;
};

[[nodiscard]] LabeledKernel import_precomputed_kernel(const std::filesystem::path& path);

/// "RESULT dataset=<> k=<> method=<> d=<> mean=<> std=<>".
[[nodiscard]] std::string result_line(const std::string& dataset, int k, const std::string& method, double discount,
                                      const EvalReport& report);

} // namespace sgk
