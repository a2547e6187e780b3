#pragma once

#include <optional>

#include "oversmooth/graph.hpp"

namespace oversmooth {

/// Guaranteed onset depth of eps-smoothing: ceil(log(eps/d0) / log(s*lambda)).
/// Returns 0 when d0 <= eps already, 1 when s*lambda == 0 (one application
/// lands in the limit subspace), and nullopt ("unbounded") when
/// s*lambda >= 1 and the hypothesis fails.
std::optional<long> epsilon_smoothing_depth(double epsilon, double d0, double s,
                                            double lambda);

/// Algebraic-connectivity lower bound 4 / (N * D) for connected graphs.
double mohar_lower_bound(long n, long diameter_d);

/// 1 - fiedler/d_max, or 1 - fiedler/(d_max+1) with the augmented-degree
/// reading. Both readings are always reported by the audit.
double cavers_upper_bound(double fiedler, int d_max, bool augmented_degree);

/// (1 - 4/(N*D*d_max))^{-1}. Throws std::domain_error when N*D*d_max <= 4
/// and the expression stops being a usable bound (reported as "vacuous").
double theorem3_kernel_bound(long n, long diameter_d, long d_max);

struct LinkCheck {
  bool applicable = true;
  bool holds = false;
  double slack = 0.0;  // bound side minus exact side; >= 0 when the link holds
};

struct BoundReport {
  int n = 0;
  int diameter_d = 0;
  int d_max = 0;
  double lambda = 0.0;              // exact second eigenvalue (magnitude)
  double top_end_eigenvalue = 0.0;  // largest eigenvalue below the 1-block
  double fiedler = 0.0;
  double mohar_lb = 0.0;
  double cavers_ub_paper = 0.0;
  double cavers_ub_aug = 0.0;
  std::optional<double> thm3_s_bound;  // empty = vacuous on this graph
  double epsilon = 0.0;
  double d0 = 0.0;
  double s = 0.0;
  std::optional<long> l_hat;  // empty = unbounded

  LinkCheck mohar_link;         // (a) fiedler >= 4/(N*D)
  LinkCheck cavers_paper_link;  // (b) top-end eigenvalue <= paper reading
  LinkCheck cavers_aug_link;    // (b) top-end eigenvalue <= augmented reading
  LinkCheck lambda_link;        // (c) |lambda| <= 1 - 4/(N*D*d_max), data only
  LinkCheck theorem3_link;      // (d) s < thm3_s_bound implies s*lambda < 1
  double lambda_link_rhs = 0.0;  // 1 - 4/(N*D*d_max) when link (c) applies
};

/// Evaluates the whole inequality chain on a connected graph with at least
/// two nodes, recording pass/fail and slack per link. Link (c) is recorded,
/// never asserted: the proof bounds the top eigenvalue while lambda is a
/// magnitude, and the negative spectral end is not covered.
BoundReport audit_bounds(const Graph& g, double epsilon, double s, double d0);

/// Tolerance used when flagging link pass/fail (absolute).
inline constexpr double kLinkTolerance = 1e-12;

}  // namespace oversmooth
