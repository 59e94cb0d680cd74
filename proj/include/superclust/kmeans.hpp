#pragma once

#include <cstdint>
#include <vector>

#include "superclust/matrix.hpp"

namespace superclust {

struct KMeansConfig {
    std::size_t k = 0;
    std::size_t max_iter = 300;
    double tol = 1e-6;       // relative objective-change convergence threshold
    std::uint64_t seed = 0;
    std::size_t restarts = 10; // independent initializations, best objective kept
};

/// Per-node cluster labels; the common output shape of all three methods.
/// objective is method specific: for k-means the total cosine similarity of
/// points to their centroids (maximized), for Louvain the modularity.
struct ClusterAssignment {
    std::vector<int> labels;
    std::size_t k = 0;
    double objective = 0.0;
    std::size_t zero_rows = 0; // rows with zero norm, assigned cluster 0 and flagged
};

/// K-means under angular distance. Rows are unit-normalized internally;
/// initialization samples k distinct rows (Forgy); assignment maximizes the
/// cosine to the centroid; centroids are normalized means of member unit
/// vectors. Deterministic given (points, cfg).
ClusterAssignment spherical_kmeans(const Matrix& points, const KMeansConfig& cfg);

/// sum_i cos(point_i, centroid_labels[i]); centroid rows must be unit norm.
double kmeans_objective(const Matrix& points, const std::vector<int>& labels,
                        const Matrix& centroids);

} // namespace superclust
