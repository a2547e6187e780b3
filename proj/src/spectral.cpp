#include "oversmooth/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace oversmooth {

DenseMatrix normalized_adjacency(const Graph& g) {
  const int n = g.node_count();
  DenseMatrix s(n, n);
  for (int i = 0; i < n; ++i) {
    const double di = static_cast<double>(g.degree(i) + 1);
    s(i, i) = 1.0 / std::sqrt(di * di);
    for (int j : g.neighbors(i)) {
      if (j < i) continue;
      const double dj = static_cast<double>(g.degree(j) + 1);
      const double value = 1.0 / std::sqrt(di * dj);
      s(i, j) = value;
      s(j, i) = value;
    }
  }
  return s;
}

DenseMatrix unnormalized_laplacian(const Graph& g) {
  const int n = g.node_count();
  DenseMatrix l(n, n);
  for (int i = 0; i < n; ++i) {
    l(i, i) = static_cast<double>(g.degree(i));
    for (int j : g.neighbors(i)) l(i, j) = -1.0;
  }
  return l;
}

namespace {

double max_offdiagonal(const DenseMatrix& a) {
  double m = 0.0;
  for (int p = 0; p < a.rows(); ++p) {
    for (int q = p + 1; q < a.cols(); ++q) {
      m = std::max(m, std::abs(a(p, q)));
    }
  }
  return m;
}

// One Jacobi rotation zeroing a(p, q), applied symmetrically, with the
// eigenvector accumulator updated in step.
void jacobi_rotate(DenseMatrix& a, DenseMatrix& v, int p, int q) {
  const double apq = a(p, q);
  const double app = a(p, p);
  const double aqq = a(q, q);

  const double theta = 0.5 * (aqq - app) / apq;
  double t;
  if (std::abs(theta) > 1e154) {
    t = 0.5 / theta;  // avoids theta*theta overflow; exact enough out here
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  a(p, p) = app - t * apq;
  a(q, q) = aqq + t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  const int n = a.rows();
  for (int k = 0; k < n; ++k) {
    if (k == p || k == q) continue;
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(p, k) = a(k, p);
    a(k, q) = s * akp + c * akq;
    a(q, k) = a(k, q);
  }
  for (int k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

void fix_eigenvector_signs(DenseMatrix& vectors) {
  for (int j = 0; j < vectors.cols(); ++j) {
    double lead = 0.0;
    for (int i = 0; i < vectors.rows(); ++i) {
      if (std::abs(vectors(i, j)) > 1e-12) {
        lead = vectors(i, j);
        break;
      }
    }
    if (lead < 0.0) {
      for (int i = 0; i < vectors.rows(); ++i) vectors(i, j) = -vectors(i, j);
    }
  }
}

}  // namespace

EigenDecomposition eig_sym(const DenseMatrix& m) {
  if (m.rows() != m.cols()) {
    throw std::invalid_argument("eig_sym: matrix is not square");
  }
  const int n = m.rows();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(m(i, j) - m(j, i)) > 1e-12) {
        throw std::invalid_argument("eig_sym: matrix is not symmetric");
      }
    }
  }

  constexpr int kMaxSweeps = 100;
  const double tol = 1e-12 * m.frobenius_norm();

  DenseMatrix a = m;
  DenseMatrix v = DenseMatrix::identity(n);
  int sweeps = 0;
  bool converged = max_offdiagonal(a) <= tol;
  while (!converged && sweeps < kMaxSweeps) {
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        if (a(p, q) != 0.0) jacobi_rotate(a, v, p, q);
      }
    }
    ++sweeps;
    converged = max_offdiagonal(a) <= tol;
  }
  if (!converged) {
    throw std::runtime_error("eig_sym: no convergence after " +
                             std::to_string(kMaxSweeps) + " sweeps");
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return a(x, x) < a(y, y); });

  EigenDecomposition out;
  out.sweeps = sweeps;
  out.eigenvalues.resize(n);
  out.eigenvectors = DenseMatrix(n, n);
  for (int j = 0; j < n; ++j) {
    out.eigenvalues[j] = a(order[j], order[j]);
    for (int i = 0; i < n; ++i) out.eigenvectors(i, j) = v(i, order[j]);
  }
  fix_eigenvector_signs(out.eigenvectors);
  return out;
}

double second_eigenvalue(const EigenDecomposition& eig, int component_count) {
  if (component_count < 1) {
    throw std::invalid_argument("second_eigenvalue: component_count must be >= 1");
  }
  const int n = static_cast<int>(eig.eigenvalues.size());
  const int below = n - component_count;
  double lambda = 0.0;
  for (int i = 0; i < below; ++i) {
    lambda = std::max(lambda, std::abs(eig.eigenvalues[i]));
  }
  return lambda;
}

SpectralDecomposition decompose_normalized_adjacency(const Graph& g) {
  EigenDecomposition eig = eig_sym(normalized_adjacency(g));
  const int m = connected_components(g).component_count;
  SpectralDecomposition out;
  out.eigenvalues = std::move(eig.eigenvalues);
  out.eigenvectors = std::move(eig.eigenvectors);
  out.multiplicity_m = m;
  EigenDecomposition view;
  view.eigenvalues = out.eigenvalues;
  out.second_eigenvalue = second_eigenvalue(view, m);
  return out;
}

double fiedler_value(const Graph& g) {
  if (g.node_count() < 2) {
    throw std::invalid_argument("fiedler_value: needs at least 2 nodes");
  }
  if (!is_connected(g)) {
    throw std::invalid_argument("fiedler_value: graph is disconnected");
  }
  const EigenDecomposition eig = eig_sym(unnormalized_laplacian(g));
  return eig.eigenvalues[1];
}

LimitProjector limit_projector(const Graph& g) {
  const int n = g.node_count();
  const ComponentPartition part = connected_components(g);
  const int m = part.component_count;

  std::vector<double> component_mass(m, 0.0);  // sum of d_i + 1 per component
  for (int i = 0; i < n; ++i) {
    component_mass[part.component_id[i]] += g.degree(i) + 1.0;
  }

  LimitProjector out;
  out.basis = DenseMatrix(n, m);
  for (int i = 0; i < n; ++i) {
    const int c = part.component_id[i];
    out.basis(i, c) = std::sqrt((g.degree(i) + 1.0) / component_mass[c]);
  }
  out.pi = DenseMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    const int c = part.component_id[i];
    const double di = g.degree(i) + 1.0;
    for (int j = 0; j < n; ++j) {
      if (part.component_id[j] != c) continue;
      out.pi(i, j) = std::sqrt(di * (g.degree(j) + 1.0)) / component_mass[c];
    }
  }
  return out;
}

std::vector<PowerStep> power_convergence(const Graph& g, int k_max) {
  if (k_max < 1) {
    throw std::invalid_argument("power_convergence: k_max must be >= 1");
  }
  const DenseMatrix s = normalized_adjacency(g);
  const LimitProjector proj = limit_projector(g);
  const SpectralDecomposition spec = decompose_normalized_adjacency(g);
  const double lambda = spec.second_eigenvalue;
  const double scale =
      std::sqrt(static_cast<double>(g.node_count() - spec.multiplicity_m));

  std::vector<PowerStep> steps;
  steps.reserve(k_max);
  DenseMatrix power = s;
  double lambda_pow = 1.0;
  for (int k = 1; k <= k_max; ++k) {
    lambda_pow *= lambda;
    steps.push_back({k, frobenius_distance(power, proj.pi), scale * lambda_pow});
    if (k < k_max) power = matmul(power, s);
  }
  return steps;
}

}  // namespace oversmooth
