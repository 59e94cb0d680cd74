#pragma once

#include <string>
#include <vector>

#include "superclust/kmeans.hpp"
#include "superclust/matrix.hpp"
#include "superclust/similarity.hpp"

namespace superclust {

/// Full symmetric eigendecomposition, eigenvalues ascending, eigenvectors in
/// matching columns. Column signs are fixed so the largest-magnitude entry of
/// each eigenvector is positive.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    Matrix eigenvectors; // n x n, column i pairs with eigenvalues[i]
};

/// L = D - S with D_ii = degree(S, i). Row sums of L are zero.
Matrix laplacian(const SimilarityMatrix& s);

/// Householder tridiagonalization followed by implicit-shift QL. Throws if
/// the input is asymmetric beyond 1e-9 or an eigenvalue fails to converge.
EigenDecomposition symmetric_eig(const Matrix& sym);

/// Number of eigenvalues within tol of zero (graph component count for a
/// Laplacian spectrum).
int zero_eigenvalue_multiplicity(const std::vector<double>& eigenvalues, double tol = 1e-9);

/// n x egn matrix whose columns are the eigenvectors of the Laplacian for
/// eigenvalues lambda_2..lambda_{egn+1}; exactly one smallest eigenvalue is
/// excluded. Row i embeds node i.
Matrix spectral_embed(const SimilarityMatrix& s, std::size_t egn);
Matrix spectral_embed(const EigenDecomposition& eig, std::size_t egn);

struct SpectralConfig {
    std::size_t n_clusters = 0;
    std::size_t egn = 0;      // retained eigenvectors
    KMeansConfig kmeans;      // embedding-stage clustering (kmeans.k is ignored)
};

/// Spherical k-means on the rows of the spectral embedding.
ClusterAssignment spectral_cluster(const SimilarityMatrix& s, const SpectralConfig& cfg);
ClusterAssignment spectral_cluster(const EigenDecomposition& eig, const SpectralConfig& cfg);

/// CSV dump for inspection: one row per eigenpair, "eigenvalue,v_0,...,v_{n-1}".
void dump_spectrum_csv(const EigenDecomposition& eig, const std::string& path);

} // namespace superclust
