#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "superclust/corpus.hpp"
#include "superclust/kmeans.hpp"
#include "superclust/louvain.hpp"
#include "superclust/scoring.hpp"
#include "superclust/similarity.hpp"
#include "superclust/spectral.hpp"

namespace superclust {

inline constexpr const char* kVersion = "superclust 0.1.0";

enum class Method { kmeans, louvain, spectral };

std::string method_name(Method m);
Method method_from_name(const std::string& name);

struct MethodSpec {
    Method method = Method::louvain;
    std::size_t k = 4;   // kmeans cluster count
    std::size_t n = 4;   // spectral cluster count ("n" in the figures)
    std::size_t egn = 6; // retained eigenvectors

    std::string name() const { return method_name(method); }
    std::string params_string() const; // "k=4", "", "n=4,egn=6"
};

enum class InputKind { corpus, matrix };

struct RunConfig {
    std::string input;
    InputKind input_kind = InputKind::corpus;
    std::optional<std::string> labels_path;   // required for matrix input
    std::optional<std::string> taxonomy_path; // optional label names
    std::optional<ThresholdConfig> threshold = ThresholdConfig{}; // nullopt = disabled
    bool clamp_negative = true;
    std::vector<MethodSpec> methods;
    std::size_t trials = 1;
    std::uint64_t seed = 42;
    std::size_t workers = 0; // 0 = hardware concurrency
    std::string output_dir;
    LogBase log_base = LogBase::natural;
    std::optional<std::string> baseline_method; // default: louvain when present
    std::optional<std::string> dump_spectrum;
    // k-means engine tuning shared by the kmeans and spectral methods
    std::size_t kmeans_max_iter = 300;
    double kmeans_tol = 1e-6;
    std::size_t kmeans_restarts = 10;

    void validate() const;
};

struct TrialResult {
    MethodSpec spec;
    std::size_t method_index = 0;
    std::size_t trial = 0;
    std::uint64_t derived_seed = 0;
    ClusterAssignment assignment; // post-alignment
    ScorePair scores;
    double duration_seconds = 0.0;
    std::string error; // nonempty when the trial failed

    bool failed() const { return !error.empty(); }
};

/// Loaded pipeline input: the raw similarity matrix plus per-node labels.
struct PipelineInput {
    SimilarityMatrix similarity;
    std::vector<int> labels;
    Taxonomy taxonomy;
    std::vector<std::string> warnings;
};

PipelineInput load_input(const RunConfig& cfg);

/// Runs one method once: dispatches to the engine, aligns the output to the
/// reference assignment (when given), and scores it. Engine errors are
/// reported in TrialResult::error with method context.
TrialResult run_method(const SimilarityMatrix& s, const std::vector<int>& labels,
                       std::size_t num_labels, const MethodSpec& spec, std::uint64_t seed,
                       const RunConfig& cfg, const ClusterAssignment* reference = nullptr,
                       const EigenDecomposition* cached_eig = nullptr);

/// All (method, trial) runs with seeds stable_mix(cfg.seed, method index,
/// trial), ordered by (method, trial). Trials execute concurrently up to
/// cfg.workers; results are deterministic for a fixed config.
std::vector<TrialResult> run_trials(const SimilarityMatrix& s, const std::vector<int>& labels,
                                    std::size_t num_labels, const RunConfig& cfg);

struct MethodStats {
    std::string method;
    std::string params;
    double entropy_mean = 0.0, entropy_median = 0.0, entropy_min = 0.0;
    double balanced_mean = 0.0, balanced_median = 0.0, balanced_min = 0.0;
    std::size_t trials = 0, failures = 0;
};

struct Report {
    std::string version;
    std::vector<MethodStats> stats;          // one per configured method
    std::size_t baseline_result_index = 0;   // into the results vector
    SuperTacticMap super_tactics;
    ClusterAssignment final_assignment;      // majority-vote finalization
    std::vector<std::string> super_tactic_groups; // per-cluster label-name lists
};

/// Picks the baseline trial: best trial of the baseline method by
/// entropy_sum, ties toward lower balanced_score, then lower trial index.
/// Pure function of the result set (order-invariant).
std::size_t select_baseline(const std::vector<TrialResult>& results, const RunConfig& cfg);

/// Writes scores.csv, per-method proportion grids, per-trial assignment
/// CSVs, labels.csv, and report.json into output_dir. Fails before touching
/// any file when results are empty.
Report emit_report(const std::vector<TrialResult>& results, const std::vector<int>& labels,
                   const Taxonomy& taxonomy, const RunConfig& cfg,
                   const std::string& output_dir);

/// Recomputes every stored score from the assignment files of a results
/// directory and compares exactly. Returns the mismatch descriptions.
std::vector<std::string> verify_results_dir(const std::string& dir);

/// Rebuilds report.json and the grid CSVs from a results directory.
void regenerate_report(const std::string& dir);

} // namespace superclust
