#pragma once

#include <vector>

#include "oversmooth/graph.hpp"
#include "oversmooth/matrix.hpp"

namespace oversmooth {

/// S with S[i][j] = a~_ij / sqrt((d_i+1)(d_j+1)), one self-loop added per
/// node. Symmetric by construction, every eigenvalue in (-1, 1].
DenseMatrix normalized_adjacency(const Graph& g);

/// L = D~ - A~. The added self-loops cancel, so this equals D - A of the
/// raw graph; rows sum to zero.
DenseMatrix unnormalized_laplacian(const Graph& g);

struct EigenDecomposition {
  std::vector<double> eigenvalues;  // ascending
  DenseMatrix eigenvectors;         // orthonormal, column i pairs with eigenvalues[i]
  int sweeps = 0;
};

/// Cyclic Jacobi on a symmetric matrix (checked, 1e-12 per entry). Rotates
/// until the largest off-diagonal magnitude is at most 1e-12 * ||m||_F;
/// throws std::runtime_error if 100 sweeps do not get there. Sign convention:
/// the first nonzero component of each eigenvector is positive.
EigenDecomposition eig_sym(const DenseMatrix& m);

/// Largest magnitude among the eigenvalues below the eigenvalue-1 block.
/// The block size is pinned to the connected-component count rather than to
/// floating-point clustering; returns 0 when every eigenvalue is in the block.
double second_eigenvalue(const EigenDecomposition& eig, int component_count);

struct SpectralDecomposition {
  std::vector<double> eigenvalues;
  DenseMatrix eigenvectors;
  int multiplicity_m = 0;       // eigenvalue-1 multiplicity = component count
  double second_eigenvalue = 0; // the lambda of the smoothing rate
};

/// Full decomposition of S for a graph, with the graph-aware quantities filled.
SpectralDecomposition decompose_normalized_adjacency(const Graph& g);

/// Smallest nonzero eigenvalue of L (algebraic connectivity of G~). Connected
/// graphs with at least 2 nodes only.
double fiedler_value(const Graph& g);

struct LimitProjector {
  DenseMatrix pi;     // N x N projector S^k converges to
  DenseMatrix basis;  // N x M orthonormal, per-component sqrt(d_i+1) columns
};

/// The limit of S^k, generalized per connected component; reduces to the
/// single rank-1 projector when the graph is connected.
LimitProjector limit_projector(const Graph& g);

struct PowerStep {
  int k = 0;
  double residual = 0.0;        // ||S^k - Pi||_F
  double spectral_bound = 0.0;  // sqrt(N - M) * lambda^k
};

/// Residuals of S^k against the limit projector for k = 1..k_max, computed
/// by iterated multiplication, each paired with its spectral bound.
std::vector<PowerStep> power_convergence(const Graph& g, int k_max);

}  // namespace oversmooth
