#pragma once

#include <span>
#include <string>
#include <vector>

#include "superclust/corpus.hpp"
#include "superclust/kmeans.hpp"
#include "superclust/matrix.hpp"

namespace superclust {

/// Sub-cluster (taxonomy label) x cluster counts and row-normalized
/// proportions P(sub_j)_i.
struct ContingencyTable {
    Matrix counts;      // T x C, integral values
    Matrix proportions; // T x C, rows sum to 1

    std::size_t num_labels() const { return counts.rows(); }
    std::size_t num_clusters() const { return counts.cols(); }
};

enum class LogBase { natural, two, ten };
double log_base_factor(LogBase base); // 1/ln(b), 1 for natural

struct ScorePair {
    double entropy_sum = 0.0;
    double balanced_score = 0.0;
};

/// counts[j][i] = #{nodes with label j+1 in cluster i}. Every label in
/// 1..num_labels must occur at least once.
ContingencyTable contingency(const std::vector<int>& labels, std::size_t num_labels,
                             const ClusterAssignment& assignment);
/// num_labels inferred as max(labels).
ContingencyTable contingency(const std::vector<int>& labels, const ClusterAssignment& assignment);

/// Shannon entropy -sum p_i log p_i of one proportion row, with 0 log 0 = 0.
double subcluster_entropy(std::span<const double> proportions_row,
                          LogBase base = LogBase::natural);

/// Sum of the per-label entropies over all rows of the table.
double entropy_sum(const ContingencyTable& table, LogBase base = LogBase::natural);

/// Population standard deviation of the cluster-size counts; clusters with
/// no members count as size 0.
double balanced_score(const ClusterAssignment& assignment);

ScorePair score_assignment(const std::vector<int>& labels, std::size_t num_labels,
                           const ClusterAssignment& assignment,
                           LogBase base = LogBase::natural);

/// Relabeling of a candidate assignment onto a reference assignment,
/// chosen to maximize total overlap.
struct AlignmentMap {
    std::vector<int> map;                 // candidate id -> aligned id
    std::vector<int> unmatched_candidate; // candidate ids beyond min(C_ref, C_cand)
    std::vector<int> unmatched_reference; // reference ids left unpaired
};

/// Exhaustive over permutations when the cluster counts are equal and <= 8;
/// otherwise greedy maximum-overlap in (overlap desc, ref id, cand id) order.
/// Ties prefer the identity-preserving permutation.
AlignmentMap align_clusters(const ClusterAssignment& reference,
                            const ClusterAssignment& candidate);

ClusterAssignment apply_alignment(const ClusterAssignment& candidate, const AlignmentMap& map);

/// Total map taxonomy label -> cluster id, from row plurality.
struct SuperTacticMap {
    std::vector<int> cluster_of_label; // index j -> cluster of label j+1
    std::vector<int> tied_labels;      // labels whose row argmax was tied

    int cluster_for(int label) const {
        return cluster_of_label.at(static_cast<std::size_t>(label - 1));
    }
    int num_clusters() const;
};

/// label j -> argmax_i counts[j][i]; ties break toward the lower cluster id
/// and are flagged.
SuperTacticMap majority_vote_supertactics(const ContingencyTable& table);

/// Reassigns every node to the cluster holding its label's plurality. The
/// result has entropy_sum exactly 0 by construction.
ClusterAssignment finalize_assignment(const std::vector<int>& labels, const SuperTacticMap& map);

/// Proportion-grid export: label,name,p_0..p_{C-1},entropy,max_cluster.
void save_proportion_grid_csv(const ContingencyTable& table, const Taxonomy& taxonomy,
                              const std::string& path, LogBase base = LogBase::natural);

} // namespace superclust
