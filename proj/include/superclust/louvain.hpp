#pragma once

#include <cstdint>
#include <vector>

#include "superclust/similarity.hpp"

namespace superclust {

/// Per-node community ids, consecutive 0..num_communities-1 after compaction.
struct Partition {
    std::vector<int> community;
    int num_communities = 0;
};

/// Q = (1/2m) sum_ij [S_ij - k_i k_j / 2m] delta(c_i, c_j), in [-1/2, 1].
/// Throws std::invalid_argument when total_weight(S) is zero.
double modularity(const SimilarityMatrix& s, const Partition& p);

/// Collapses each community into a super-node. Edge weight between
/// super-nodes is the sum of inter-community weights; the diagonal stores
/// twice the intra-community weight, so degrees and total weight are
/// conserved exactly.
SimilarityMatrix aggregate_graph(const SimilarityMatrix& s, const Partition& p);

/// Incremental modularity bookkeeping for one graph level. A node is taken
/// out of its community with remove_node, candidate gains are queried with
/// insertion_gain, and the chosen move is committed with insert_node.
class LouvainState {
public:
    explicit LouvainState(const SimilarityMatrix& s);
    LouvainState(const SimilarityMatrix& s, Partition initial);

    int community_of(std::size_t node) const { return community_[node]; }
    int num_communities() const { return static_cast<int>(community_weight_.size()); }

    /// Takes the node out of its community (standard phase-1 bookkeeping).
    void remove_node(std::size_t node);

    /// dQ for inserting the (removed) node into target_community, equal to
    /// modularity(after) - modularity(before-with-node-as-singleton).
    double insertion_gain(std::size_t node, int target_community) const;

    void insert_node(std::size_t node, int target_community);

    /// Current modularity from the cached community sums.
    double quality() const;

    /// Weight between the node and a community, excluding the node itself.
    double weight_to_community(std::size_t node, int community) const;

    Partition partition() const; // compacted ids

private:
    const SimilarityMatrix* graph_;
    double total_weight_ = 0.0; // m
    std::vector<double> node_degree_;
    std::vector<int> community_;
    std::vector<double> community_total_;  // sum of member degrees per community
    std::vector<double> community_inside_; // sum over ordered member pairs, diagonal included
    std::vector<double> community_weight_; // scratch sized by community count
};

struct LouvainResult {
    Partition partition;  // over the original nodes
    double modularity = 0.0;
    /// Q recorded after every phase-1 pass and every aggregation; the
    /// sequence is non-decreasing.
    std::vector<double> quality_trace;
    std::size_t levels = 0;
};

/// Two-phase Louvain on the weighted graph. Node visit order is a seeded
/// random permutation, reshuffled each pass; moves need strictly positive
/// gain; phases repeat until modularity stops improving. The community count
/// is an output, not a parameter.
LouvainResult louvain(const SimilarityMatrix& s, std::uint64_t seed);

} // namespace superclust
