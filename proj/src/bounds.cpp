#include "oversmooth/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "oversmooth/spectral.hpp"

namespace oversmooth {

std::optional<long> epsilon_smoothing_depth(double epsilon, double d0, double s,
                                            double lambda) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be > 0");
  if (d0 < 0.0) throw std::invalid_argument("d0 must be >= 0");
  if (s < 0.0) throw std::invalid_argument("s must be >= 0");
  if (lambda < 0.0 || lambda >= 1.0) {
    throw std::invalid_argument("lambda must lie in [0, 1)");
  }

  if (d0 <= epsilon) return 0;
  const double rate = s * lambda;
  if (rate == 0.0) return 1;
  if (rate >= 1.0) return std::nullopt;  // hypothesis fails, no depth predicted
  return static_cast<long>(std::ceil(std::log(epsilon / d0) / std::log(rate)));
}

double mohar_lower_bound(long n, long diameter_d) {
  if (n < 1 || diameter_d < 1) {
    throw std::invalid_argument("mohar_lower_bound: n and D must be >= 1");
  }
  return 4.0 / (static_cast<double>(n) * static_cast<double>(diameter_d));
}

double cavers_upper_bound(double fiedler, int d_max, bool augmented_degree) {
  if (fiedler < 0.0 || d_max < 1) {
    throw std::invalid_argument("cavers_upper_bound: bad arguments");
  }
  const double denom = augmented_degree ? d_max + 1.0 : static_cast<double>(d_max);
  return 1.0 - fiedler / denom;
}

double theorem3_kernel_bound(long n, long diameter_d, long d_max) {
  const double product = static_cast<double>(n) * diameter_d * d_max;
  if (!(product > 4.0)) {
    throw std::domain_error("theorem3_kernel_bound: N*D*d_max <= 4, bound vacuous");
  }
  return 1.0 / (1.0 - 4.0 / product);
}

BoundReport audit_bounds(const Graph& g, double epsilon, double s, double d0) {
  if (g.node_count() < 2) {
    throw std::invalid_argument("audit_bounds: needs at least 2 nodes");
  }
  if (!is_connected(g)) {
    throw std::invalid_argument("audit_bounds: graph is disconnected");
  }
  if (s < 0.0 || d0 < 0.0 || !(epsilon > 0.0)) {
    throw std::invalid_argument("audit_bounds: bad epsilon/s/d0");
  }

  BoundReport r;
  r.n = g.node_count();
  r.diameter_d = diameter(g);
  r.d_max = degree_stats(g).d_max;
  r.epsilon = epsilon;
  r.s = s;
  r.d0 = d0;

  const SpectralDecomposition spec = decompose_normalized_adjacency(g);
  r.lambda = spec.second_eigenvalue;
  // Largest eigenvalue below the 1-block; connected, so the block is 1 wide.
  r.top_end_eigenvalue = spec.eigenvalues[r.n - 2];
  r.fiedler = fiedler_value(g);

  r.mohar_lb = mohar_lower_bound(r.n, r.diameter_d);
  r.cavers_ub_paper = cavers_upper_bound(r.fiedler, r.d_max, false);
  r.cavers_ub_aug = cavers_upper_bound(r.fiedler, r.d_max, true);
  try {
    r.thm3_s_bound = theorem3_kernel_bound(r.n, r.diameter_d, r.d_max);
  } catch (const std::domain_error&) {
    r.thm3_s_bound.reset();
  }
  r.l_hat = epsilon_smoothing_depth(epsilon, d0, s, r.lambda);

  // (a) Mohar: fiedler >= 4/(N*D).
  r.mohar_link.slack = r.fiedler - r.mohar_lb;
  r.mohar_link.holds = r.mohar_link.slack >= -kLinkTolerance;

  // (b) Cavers, both d_max readings, against the top-end eigenvalue.
  r.cavers_paper_link.slack = r.cavers_ub_paper - r.top_end_eigenvalue;
  r.cavers_paper_link.holds = r.cavers_paper_link.slack >= -kLinkTolerance;
  r.cavers_aug_link.slack = r.cavers_ub_aug - r.top_end_eigenvalue;
  r.cavers_aug_link.holds = r.cavers_aug_link.slack >= -kLinkTolerance;

  // (c) |lambda| against 1 - 4/(N*D*d_max). Recorded, never asserted: the
  // proof chain controls the top end while lambda is a magnitude.
  if (r.thm3_s_bound) {
    const double rhs =
        1.0 - 4.0 / (static_cast<double>(r.n) * r.diameter_d * r.d_max);
    r.lambda_link.applicable = true;
    r.lambda_link.slack = rhs - r.lambda;
    r.lambda_link.holds = r.lambda_link.slack >= -kLinkTolerance;
    r.lambda_link_rhs = rhs;
  } else {
    r.lambda_link.applicable = false;
  }

  // (d) If s is inside the Theorem-3 bound, s*lambda must contract.
  if (r.thm3_s_bound && s < *r.thm3_s_bound) {
    r.theorem3_link.applicable = true;
    r.theorem3_link.slack = 1.0 - s * r.lambda;
    r.theorem3_link.holds = r.theorem3_link.slack > 0.0;
  } else {
    r.theorem3_link.applicable = false;
  }

  return r;
}

}  // namespace oversmooth
