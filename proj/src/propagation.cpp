#include "oversmooth/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "oversmooth/rng.hpp"
#include "oversmooth/spectral.hpp"

namespace oversmooth {

Activation parse_activation(const std::string& name) {
  if (name == "relu") return Activation::Relu;
  if (name == "identity") return Activation::Identity;
  throw std::invalid_argument("unknown activation '" + name + "'");
}

DenseMatrix apply_activation(DenseMatrix m, Activation act) {
  if (act == Activation::Relu) {
    for (double& v : m.data()) v = v > 0.0 ? v : 0.0;
  }
  return m;
}

DenseMatrix row_softmax(const DenseMatrix& m) {
  DenseMatrix out(m.rows(), m.cols());
  for (int i = 0; i < m.rows(); ++i) {
    double row_max = m(i, 0);
    for (int j = 1; j < m.cols(); ++j) row_max = std::max(row_max, m(i, j));
    double total = 0.0;
    for (int j = 0; j < m.cols(); ++j) {
      out(i, j) = std::exp(m(i, j) - row_max);
      total += out(i, j);
    }
    for (int j = 0; j < m.cols(); ++j) out(i, j) /= total;
  }
  return out;
}

double max_singular_value(const DenseMatrix& m) {
  // Largest eigenvalue of the (symmetric, PSD) Gram matrix.
  const DenseMatrix gram = matmul(transpose(m), m);
  const EigenDecomposition eig = eig_sym(gram);
  const double top = eig.eigenvalues.empty() ? 0.0 : eig.eigenvalues.back();
  return std::sqrt(std::max(top, 0.0));
}

KernelSet make_kernels(int depth, const std::vector<int>& dims, double s_target,
                       std::uint64_t seed) {
  if (depth < 1) throw std::invalid_argument("make_kernels: depth must be >= 1");
  if (s_target < 0.0) throw std::invalid_argument("make_kernels: s_target must be >= 0");
  if (static_cast<int>(dims.size()) != depth + 1) {
    throw std::invalid_argument("make_kernels: dims must list depth + 1 widths");
  }
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("make_kernels: widths must be >= 1");
  }

  KernelSet set;
  set.layer_kernels.reserve(depth);
  set.s_values.reserve(depth);
  for (int l = 0; l < depth; ++l) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(l)));
    DenseMatrix theta(dims[l], dims[l + 1]);
    for (double& v : theta.data()) v = rng.normal();
    if (s_target == 0.0) {
      scale_in_place(theta, 0.0);
      set.s_values.push_back(0.0);
    } else {
      const double current = max_singular_value(theta);
      if (current == 0.0) {
        throw std::runtime_error("make_kernels: degenerate zero draw");
      }
      scale_in_place(theta, s_target / current);
      set.s_values.push_back(max_singular_value(theta));
    }
    set.layer_kernels.push_back(std::move(theta));
  }
  set.s_sup = *std::max_element(set.s_values.begin(), set.s_values.end());
  return set;
}

KernelSet identity_kernels(int depth, int channels) {
  if (depth < 1 || channels < 1) {
    throw std::invalid_argument("identity_kernels: bad dimensions");
  }
  KernelSet set;
  for (int l = 0; l < depth; ++l) {
    set.layer_kernels.push_back(DenseMatrix::identity(channels));
    set.s_values.push_back(1.0);
  }
  set.s_sup = 1.0;
  return set;
}

namespace {

void check_features(const Graph& g, const DenseMatrix& x) {
  if (x.rows() != g.node_count()) {
    throw std::invalid_argument("features: row count must equal node count");
  }
  if (x.cols() < 1) throw std::invalid_argument("features: need >= 1 channel");
  if (!x.all_finite()) throw std::invalid_argument("features: non-finite entry");
}

void check_kernel_chain(const KernelSet& kernels, int in_channels) {
  if (kernels.layer_kernels.empty()) {
    throw std::invalid_argument("kernels: empty set");
  }
  int width = in_channels;
  for (const DenseMatrix& k : kernels.layer_kernels) {
    if (k.rows() != width) {
      throw std::invalid_argument("kernels: layer dimensions do not chain");
    }
    width = k.cols();
  }
}

void check_square_kernels(const KernelSet& kernels, int channels) {
  for (const DenseMatrix& k : kernels.layer_kernels) {
    if (k.rows() != channels || k.cols() != channels) {
      throw std::invalid_argument("kernels: square kernels of input width required");
    }
  }
}

}  // namespace

Trajectory forward_gcn(const Graph& g, const DenseMatrix& x,
                       const KernelSet& kernels, Activation act) {
  check_features(g, x);
  check_kernel_chain(kernels, x.cols());

  const DenseMatrix s = normalized_adjacency(g);
  const DenseMatrix basis = limit_projector(g).basis;
  const int depth = static_cast<int>(kernels.layer_kernels.size());

  Trajectory t;
  t.metadata = {"gcn", depth, 0, kernels.s_sup};
  t.records.reserve(depth + 1);
  t.records.push_back(measure_smoothness(0, x, basis));
  DenseMatrix h = x;
  for (int l = 0; l < depth; ++l) {
    h = apply_activation(matmul(matmul(s, h), kernels.layer_kernels[l]), act);
    t.records.push_back(measure_smoothness(l + 1, h, basis));
  }
  t.final_features = std::move(h);
  return t;
}

DenseMatrix forward_sgc(const Graph& g, const DenseMatrix& x, int k_hops,
                        const DenseMatrix& theta, bool apply_softmax) {
  check_features(g, x);
  if (k_hops < 0) throw std::invalid_argument("forward_sgc: k_hops must be >= 0");
  if (theta.rows() != x.cols()) {
    throw std::invalid_argument("forward_sgc: kernel rows must match channels");
  }
  const DenseMatrix s = normalized_adjacency(g);
  DenseMatrix h = x;
  for (int k = 0; k < k_hops; ++k) h = matmul(s, h);
  h = matmul(h, theta);
  return apply_softmax ? row_softmax(h) : h;
}

Trajectory sgc_trajectory(const Graph& g, const DenseMatrix& x, int k_hops,
                          const DenseMatrix& theta) {
  check_features(g, x);
  if (k_hops < 0) throw std::invalid_argument("sgc_trajectory: k_hops must be >= 0");
  if (theta.rows() != x.cols()) {
    throw std::invalid_argument("sgc_trajectory: kernel rows must match channels");
  }
  const DenseMatrix s = normalized_adjacency(g);
  const DenseMatrix basis = limit_projector(g).basis;

  Trajectory t;
  t.metadata = {"sgc", k_hops, 0, max_singular_value(theta)};
  DenseMatrix power = x;
  DenseMatrix out = matmul(power, theta);
  t.records.push_back(measure_smoothness(0, out, basis));
  for (int k = 1; k <= k_hops; ++k) {
    power = matmul(s, power);
    out = matmul(power, theta);
    t.records.push_back(measure_smoothness(k, out, basis));
  }
  t.final_features = std::move(out);
  return t;
}

Trajectory forward_gcnii(const Graph& g, const DenseMatrix& x,
                         const KernelSet& kernels,
                         const std::vector<double>& alpha,
                         const std::vector<double>& beta, Activation act) {
  check_features(g, x);
  check_square_kernels(kernels, x.cols());
  const int depth = static_cast<int>(kernels.layer_kernels.size());
  if (static_cast<int>(alpha.size()) != depth ||
      static_cast<int>(beta.size()) != depth) {
    throw std::invalid_argument("forward_gcnii: alpha/beta must list one value per layer");
  }
  for (int l = 0; l < depth; ++l) {
    if (alpha[l] < 0.0 || alpha[l] > 1.0 || beta[l] < 0.0 || beta[l] > 1.0) {
      throw std::invalid_argument("forward_gcnii: alpha/beta must lie in [0, 1]");
    }
  }

  const DenseMatrix s = normalized_adjacency(g);
  const DenseMatrix basis = limit_projector(g).basis;
  const int c = x.cols();

  Trajectory t;
  t.metadata = {"gcnii", depth, 0, kernels.s_sup};
  t.records.push_back(measure_smoothness(0, x, basis));
  DenseMatrix h = x;
  for (int l = 0; l < depth; ++l) {
    const DenseMatrix smoothed = matmul(s, h);
    DenseMatrix mixed(x.rows(), c);
    for (int i = 0; i < x.rows(); ++i) {
      for (int j = 0; j < c; ++j) {
        mixed(i, j) = (1.0 - alpha[l]) * smoothed(i, j) + alpha[l] * x(i, j);
      }
    }
    const DenseMatrix& theta = kernels.layer_kernels[l];
    DenseMatrix kernel_mix(c, c);
    for (int i = 0; i < c; ++i) {
      for (int j = 0; j < c; ++j) {
        kernel_mix(i, j) =
            (1.0 - beta[l]) * (i == j ? 1.0 : 0.0) + beta[l] * theta(i, j);
      }
    }
    h = apply_activation(matmul(mixed, kernel_mix), act);
    t.records.push_back(measure_smoothness(l + 1, h, basis));
  }
  t.final_features = std::move(h);
  return t;
}

DagnnParams make_dagnn_params(int in_channels, int hidden, int out_channels,
                              std::uint64_t seed) {
  if (in_channels < 1 || hidden < 1 || out_channels < 1) {
    throw std::invalid_argument("make_dagnn_params: bad dimensions");
  }
  DagnnParams params;
  params.w1 = DenseMatrix(in_channels, hidden);
  Rng r1(mix_seed(seed, 0));
  const double scale1 = 1.0 / std::sqrt(static_cast<double>(in_channels));
  for (double& v : params.w1.data()) v = scale1 * r1.normal();
  params.w2 = DenseMatrix(hidden, out_channels);
  Rng r2(mix_seed(seed, 1));
  const double scale2 = 1.0 / std::sqrt(static_cast<double>(hidden));
  for (double& v : params.w2.data()) v = scale2 * r2.normal();
  params.projection.resize(out_channels);
  Rng r3(mix_seed(seed, 2));
  for (double& v : params.projection) v = r3.normal();
  return params;
}

namespace {

double sigmoid(double v) { return 1.0 / (1.0 + std::exp(-v)); }

struct DagnnRun {
  std::vector<DenseMatrix> hops;  // H_l = S^l Z for l = 0..hops
  DenseMatrix gates;              // N x (hops+1)
  DenseMatrix output;
};

DagnnRun run_dagnn(const Graph& g, const DenseMatrix& x, int hops,
                   const DagnnParams& params) {
  if (hops < 0) throw std::invalid_argument("forward_dagnn: hops must be >= 0");
  if (params.w1.rows() != x.cols()) {
    throw std::invalid_argument("forward_dagnn: w1 rows must match channels");
  }
  if (params.w2.rows() != params.w1.cols() ||
      static_cast<int>(params.projection.size()) != params.w2.cols()) {
    throw std::invalid_argument("forward_dagnn: parameter shapes do not chain");
  }

  const DenseMatrix s = normalized_adjacency(g);
  const DenseMatrix z =
      matmul(apply_activation(matmul(x, params.w1), Activation::Relu), params.w2);

  DagnnRun run;
  run.hops.push_back(z);
  for (int l = 1; l <= hops; ++l) run.hops.push_back(matmul(s, run.hops.back()));

  const int n = x.rows();
  const int c = params.w2.cols();
  run.gates = DenseMatrix(n, hops + 1);
  run.output = DenseMatrix(n, c);
  for (int l = 0; l <= hops; ++l) {
    const DenseMatrix& h = run.hops[l];
    for (int i = 0; i < n; ++i) {
      double score = 0.0;
      for (int j = 0; j < c; ++j) score += h(i, j) * params.projection[j];
      const double gate = sigmoid(score);
      run.gates(i, l) = gate;
      for (int j = 0; j < c; ++j) run.output(i, j) += gate * h(i, j);
    }
  }
  return run;
}

}  // namespace

DagnnResult forward_dagnn(const Graph& g, const DenseMatrix& x, int hops,
                          const DagnnParams& params) {
  check_features(g, x);
  DagnnRun run = run_dagnn(g, x, hops, params);
  return {std::move(run.output), std::move(run.gates)};
}

Trajectory dagnn_trajectory(const Graph& g, const DenseMatrix& x, int hops,
                            const DagnnParams& params) {
  check_features(g, x);
  const DenseMatrix basis = limit_projector(g).basis;
  DagnnRun run = run_dagnn(g, x, hops, params);

  Trajectory t;
  t.metadata = {"dagnn", hops, 0, 0.0};
  for (int l = 0; l <= hops; ++l) {
    t.records.push_back(measure_smoothness(l, run.hops[l], basis));
  }
  t.final_features = std::move(run.output);
  return t;
}

Trajectory forward_dropedge(const Graph& g, const DenseMatrix& x,
                            const KernelSet& kernels, double drop_rate,
                            Activation act, std::uint64_t seed) {
  check_features(g, x);
  check_kernel_chain(kernels, x.cols());
  if (drop_rate < 0.0 || drop_rate >= 1.0) {
    throw std::invalid_argument("forward_dropedge: drop_rate must lie in [0, 1)");
  }

  const DenseMatrix basis = limit_projector(g).basis;
  const std::vector<std::pair<int, int>> edges = g.edge_pairs();
  const int depth = static_cast<int>(kernels.layer_kernels.size());

  Trajectory t;
  t.metadata = {"dropedge", depth, seed, kernels.s_sup};
  t.records.push_back(measure_smoothness(0, x, basis));
  DenseMatrix h = x;
  std::vector<std::pair<int, int>> kept;
  for (int l = 0; l < depth; ++l) {
    // Symmetric mask, resampled per layer: one draw per undirected edge.
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(l)));
    kept.clear();
    for (const auto& e : edges) {
      if (!rng.bernoulli(drop_rate)) kept.push_back(e);
    }
    const Graph masked = Graph::from_edge_pairs(g.node_count(), kept);
    const DenseMatrix s_layer = normalized_adjacency(masked);
    h = apply_activation(matmul(matmul(s_layer, h), kernels.layer_kernels[l]), act);
    t.records.push_back(measure_smoothness(l + 1, h, basis));
  }
  t.final_features = std::move(h);
  return t;
}

namespace {

DenseMatrix row_normalized(const DenseMatrix& m) {
  DenseMatrix out = m;
  for (int i = 0; i < m.rows(); ++i) {
    double sum = 0.0;
    for (int j = 0; j < m.cols(); ++j) sum += m(i, j) * m(i, j);
    const double norm = std::sqrt(sum);
    if (norm == 0.0) continue;
    for (int j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) / norm;
  }
  return out;
}

}  // namespace

Trajectory forward_residual(const Graph& g, const DenseMatrix& x,
                            const KernelSet& kernels, Activation act) {
  check_features(g, x);
  check_square_kernels(kernels, x.cols());

  const DenseMatrix s = normalized_adjacency(g);
  const DenseMatrix basis = limit_projector(g).basis;
  const int depth = static_cast<int>(kernels.layer_kernels.size());

  Trajectory t;
  t.metadata = {"residual", depth, 0, kernels.s_sup};
  t.records.push_back(measure_smoothness(0, x, basis));
  t.normalized_d_m.push_back(subspace_distance(row_normalized(x), basis));
  DenseMatrix h = x;
  for (int l = 0; l < depth; ++l) {
    const DenseMatrix update =
        apply_activation(matmul(matmul(s, h), kernels.layer_kernels[l]), act);
    h = add(update, h);
    t.records.push_back(measure_smoothness(l + 1, h, basis));
    t.normalized_d_m.push_back(subspace_distance(row_normalized(h), basis));
  }
  t.final_features = std::move(h);
  return t;
}

namespace {

// Spearman rank correlation with average ranks on ties; empty when either
// side has zero variance.
std::optional<double> spearman(const std::vector<double>& a,
                               const std::vector<double>& b) {
  const std::size_t n = a.size();
  auto ranks = [n](const std::vector<double>& values) {
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t x, std::size_t y) { return values[x] < values[y]; });
    std::vector<double> rank(n, 0.0);
    std::size_t i = 0;
    while (i < n) {
      std::size_t j = i;
      while (j + 1 < n && values[order[j + 1]] == values[order[i]]) ++j;
      const double shared = 0.5 * (static_cast<double>(i) + static_cast<double>(j)) + 1.0;
      for (std::size_t k = i; k <= j; ++k) rank[order[k]] = shared;
      i = j + 1;
    }
    return rank;
  };

  const std::vector<double> ra = ranks(a);
  const std::vector<double> rb = ranks(b);
  const double mean = (static_cast<double>(n) + 1.0) / 2.0;
  double cov = 0.0, var_a = 0.0, var_b = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double da = ra[i] - mean;
    const double db = rb[i] - mean;
    cov += da * db;
    var_a += da * da;
    var_b += db * db;
  }
  if (var_a == 0.0 || var_b == 0.0) return std::nullopt;
  return cov / std::sqrt(var_a * var_b);
}

}  // namespace

ConvergenceProfile node_convergence_profile(const Graph& g,
                                            const DenseMatrix& x, int k) {
  check_features(g, x);
  if (k < 0) throw std::invalid_argument("node_convergence_profile: k must be >= 0");
  if (!is_connected(g)) {
    throw std::invalid_argument("node_convergence_profile: graph is disconnected");
  }

  const DenseMatrix s = normalized_adjacency(g);
  const DenseMatrix limit = matmul(limit_projector(g).pi, x);
  DenseMatrix h = x;
  for (int step = 0; step < k; ++step) h = matmul(s, h);

  ConvergenceProfile profile;
  std::vector<double> degrees_real(g.node_count());
  std::vector<double> residuals(g.node_count());
  for (int i = 0; i < g.node_count(); ++i) {
    double sum = 0.0;
    for (int j = 0; j < x.cols(); ++j) {
      const double d = h(i, j) - limit(i, j);
      sum += d * d;
    }
    const double residual = std::sqrt(sum);
    profile.nodes.push_back({i, g.degree(i), residual});
    degrees_real[i] = static_cast<double>(g.degree(i));
    residuals[i] = residual;
  }
  profile.rank_correlation = spearman(degrees_real, residuals);
  return profile;
}

DenseMatrix uniform_features(int n, int channels, std::uint64_t seed) {
  if (n < 1 || channels < 1) {
    throw std::invalid_argument("uniform_features: bad dimensions");
  }
  Rng rng(seed);
  DenseMatrix x(n, channels);
  for (double& v : x.data()) v = rng.uniform_symmetric();
  return x;
}

DenseMatrix orthogonal_features(const Graph& g, int channels,
                                std::uint64_t seed) {
  const DenseMatrix basis = limit_projector(g).basis;
  const DenseMatrix x = uniform_features(g.node_count(), channels, seed);
  const DenseMatrix projection = matmul(basis, matmul(transpose(basis), x));
  return subtract(x, projection);
}

}  // namespace oversmooth
