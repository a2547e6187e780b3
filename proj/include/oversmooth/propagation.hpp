#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oversmooth/graph.hpp"
#include "oversmooth/matrix.hpp"
#include "oversmooth/smoothness.hpp"

namespace oversmooth {

enum class Activation { Relu, Identity };

Activation parse_activation(const std::string& name);

struct KernelSet {
  std::vector<DenseMatrix> layer_kernels;  // layer l maps dims[l] -> dims[l+1]
  std::vector<double> s_values;            // true max singular value per layer
  double s_sup = 0.0;
};

/// Seeded standard-normal kernels rescaled so each layer's top singular value
/// equals s_target (computed through the symmetric eigendecomposition of
/// Theta^T Theta). Layer l draws from an independent sub-stream of `seed`,
/// so extending depth keeps earlier layers bit-identical.
KernelSet make_kernels(int depth, const std::vector<int>& dims, double s_target,
                       std::uint64_t seed);
KernelSet identity_kernels(int depth, int channels);

struct RunMetadata {
  std::string arch;
  int depth = 0;
  std::uint64_t seed = 0;
  double s_sup = 0.0;
};

struct Trajectory {
  std::vector<SmoothnessRecord> records;  // depth + 1 entries, layer 0 first
  DenseMatrix final_features;
  std::vector<double> normalized_d_m;  // row-normalized d_M, residual runs only
  RunMetadata metadata;
};

/// H^(l+1) = act(S H^(l) Theta^(l)).
Trajectory forward_gcn(const Graph& g, const DenseMatrix& x,
                       const KernelSet& kernels, Activation act);

/// S^K X Theta, with row-wise softmax only when asked.
DenseMatrix forward_sgc(const Graph& g, const DenseMatrix& x, int k_hops,
                        const DenseMatrix& theta, bool apply_softmax);

/// Layer-wise view of SGC for trajectory output: records S^k X Theta
/// for k = 0..k_hops.
Trajectory sgc_trajectory(const Graph& g, const DenseMatrix& x, int k_hops,
                          const DenseMatrix& theta);

/// H^(l+1) = act(((1-a_l) S H^(l) + a_l H^(0)) ((1-b_l) I + b_l Theta^(l))).
/// Requires square kernels of the input width.
Trajectory forward_gcnii(const Graph& g, const DenseMatrix& x,
                         const KernelSet& kernels,
                         const std::vector<double>& alpha,
                         const std::vector<double>& beta, Activation act);

struct DagnnParams {
  DenseMatrix w1;  // in_channels x hidden
  DenseMatrix w2;  // hidden x out_channels
  std::vector<double> projection;  // out_channels gating vector
};
DagnnParams make_dagnn_params(int in_channels, int hidden, int out_channels,
                              std::uint64_t seed);

struct DagnnResult {
  DenseMatrix output;
  DenseMatrix gates;  // N x (hops+1) sigmoid scores per node and hop
};

/// Z = relu(X W1) W2; H_l = S^l Z; per-node gates sigmoid(H_l . projection);
/// output = sum over hops of gate_l applied row-wise to H_l.
DagnnResult forward_dagnn(const Graph& g, const DenseMatrix& x, int hops,
                          const DagnnParams& params);

/// Hop-wise view for trajectory output: records H_l = S^l Z per hop, final
/// features are the gated sum.
Trajectory dagnn_trajectory(const Graph& g, const DenseMatrix& x, int hops,
                            const DagnnParams& params);

/// Per layer, each undirected edge drops independently with probability
/// drop_rate (symmetric mask, fresh per layer); the surviving graph is
/// re-augmented with self-loops and renormalized. Metrics are recorded
/// against the ORIGINAL graph's limit basis.
Trajectory forward_dropedge(const Graph& g, const DenseMatrix& x,
                            const KernelSet& kernels, double drop_rate,
                            Activation act, std::uint64_t seed);

/// H^(l+1) = act(S H^(l) Theta^(l)) + H^(l). Also records d_M of the
/// row-normalized features, since plain residual sums grow in norm and the
/// claim is about direction collapse.
Trajectory forward_residual(const Graph& g, const DenseMatrix& x,
                            const KernelSet& kernels, Activation act);

struct NodeResidual {
  int node = 0;
  int degree = 0;
  double residual = 0.0;  // || row_i(S^k X) - row_i(Pi X) ||_2
};

struct ConvergenceProfile {
  std::vector<NodeResidual> nodes;
  // Spearman correlation of degree vs residual; empty when one side is constant.
  std::optional<double> rank_correlation;
};

ConvergenceProfile node_convergence_profile(const Graph& g,
                                            const DenseMatrix& x, int k);

/// Seeded i.i.d. uniform [-1, 1) features.
DenseMatrix uniform_features(int n, int channels, std::uint64_t seed);

/// Uniform features with the limit-subspace component projected out,
/// maximizing the initial d_M for clean decay curves.
DenseMatrix orthogonal_features(const Graph& g, int channels,
                                std::uint64_t seed);

DenseMatrix apply_activation(DenseMatrix m, Activation act);
DenseMatrix row_softmax(const DenseMatrix& m);
double max_singular_value(const DenseMatrix& m);

}  // namespace oversmooth
