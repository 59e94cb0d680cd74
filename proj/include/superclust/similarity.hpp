#pragma once

#include <span>
#include <string>

#include "superclust/corpus.hpp"
#include "superclust/matrix.hpp"

namespace superclust {

/// Symmetric edge-weight matrix of the document graph. Level-0 matrices have
/// a zero diagonal; aggregated graphs store twice the self-loop weight on the
/// diagonal so that degree(i) stays a plain row sum and degrees are conserved
/// across aggregation.
class SimilarityMatrix {
public:
    SimilarityMatrix() = default;
    explicit SimilarityMatrix(Matrix values);

    std::size_t size() const { return values_.rows(); }
    double at(std::size_t i, std::size_t j) const { return values_(i, j); }
    void set(std::size_t i, std::size_t j, double w);

    /// k_i: sum of the weights of the edges attached to node i.
    double degree(std::size_t i) const;
    /// m: sum of all edge weights, each undirected edge counted once.
    double total_weight() const;

    const Matrix& values() const { return values_; }

private:
    Matrix values_;
};

/// Low/high similarity cutoff transform. Entries below lo become lo_value,
/// entries above hi become hi_value, everything else passes through.
struct ThresholdConfig {
    double lo = 0.25;
    double lo_value = 0.0;
    double hi = 0.85;
    double hi_value = 0.5;

    void validate() const; // throws std::invalid_argument on bad config
};

double cosine_similarity(std::span<const double> u, std::span<const double> v);

/// S_ij = cos(record_i, record_j) for i != j, S_ii = 0. With clamp_negative
/// (default) negative cosines are set to 0 so S is a valid weighted graph.
SimilarityMatrix build_similarity_matrix(const Corpus& corpus, bool clamp_negative = true);

SimilarityMatrix apply_thresholds(const SimilarityMatrix& s, const ThresholdConfig& cfg);

/// CSV import/export: n rows x n columns, no header. The loader verifies
/// symmetry within 1e-9, symmetrizes exactly, and zeroes the diagonal.
SimilarityMatrix load_similarity_csv(const std::string& path);
void save_similarity_csv(const SimilarityMatrix& s, const std::string& path);

} // namespace superclust
