#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "oversmooth/bounds.hpp"
#include "oversmooth/spectral.hpp"

using namespace oversmooth;

namespace {

Graph make(GraphFamily family, int n) {
  GeneratorSpec spec;
  spec.family = family;
  spec.n = n;
  return generate(spec);
}

}  // namespace

TEST_CASE("epsilon smoothing depth arithmetic") {
  CHECK(epsilon_smoothing_depth(0.1, 10.0, 1.0, 0.5) == 7);
  CHECK(epsilon_smoothing_depth(1.0, 0.5, 2.0, 0.9) == 0);
  CHECK(!epsilon_smoothing_depth(0.1, 10.0, 2.0, 0.6));  // s*lambda = 1.2, unbounded
  CHECK(epsilon_smoothing_depth(0.1, 10.0, 0.0, 0.5) == 1);
  CHECK(epsilon_smoothing_depth(0.1, 10.0, 1.0, 0.0) == 1);
  CHECK(!epsilon_smoothing_depth(0.1, 10.0, 1.0 / 0.5, 0.5));  // boundary s*lambda = 1

  CHECK_THROWS_AS(epsilon_smoothing_depth(0.0, 1.0, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_smoothing_depth(0.1, -1.0, 1.0, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(epsilon_smoothing_depth(0.1, 1.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("epsilon smoothing depth is monotone") {
  const auto base = epsilon_smoothing_depth(1e-3, 5.0, 1.0, 0.7);
  REQUIRE(base);
  const auto tighter = epsilon_smoothing_depth(1e-4, 5.0, 1.0, 0.7);
  REQUIRE(tighter);
  CHECK(*tighter >= *base);
  const auto slower = epsilon_smoothing_depth(1e-3, 5.0, 1.0, 0.9);
  REQUIRE(slower);
  CHECK(*slower >= *base);
}

TEST_CASE("mohar lower bound values") {
  CHECK(mohar_lower_bound(3, 2) == doctest::Approx(2.0 / 3).epsilon(1e-15));
  CHECK(mohar_lower_bound(3, 1) == doctest::Approx(4.0 / 3).epsilon(1e-15));
  CHECK(mohar_lower_bound(34, 5) == doctest::Approx(4.0 / 170).epsilon(1e-15));
  CHECK_THROWS_AS(mohar_lower_bound(0, 1), std::invalid_argument);

  // Against the exact fiedler values.
  CHECK(fiedler_value(make(GraphFamily::Path, 3)) >= mohar_lower_bound(3, 2));
  CHECK(fiedler_value(make(GraphFamily::Complete, 3)) >= mohar_lower_bound(3, 1));
}

TEST_CASE("cavers upper bound, both readings") {
  // Path(3): fiedler 1, d_max 2; the paper reading is tight at lambda = 1/2.
  CHECK(cavers_upper_bound(1.0, 2, false) == doctest::Approx(0.5).epsilon(1e-15));
  // K2: the paper reading goes negative while the top-end eigenvalue is 0.
  CHECK(cavers_upper_bound(2.0, 1, false) == doctest::Approx(-1.0).epsilon(1e-15));
  CHECK(cavers_upper_bound(2.0, 1, true) == doctest::Approx(0.0).epsilon(1e-15));
  // Complete(3), augmented reading: tight at 0.
  CHECK(cavers_upper_bound(3.0, 2, true) == doctest::Approx(0.0).epsilon(1e-15));
}

TEST_CASE("theorem 3 kernel bound") {
  CHECK(theorem3_kernel_bound(3, 2, 2) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(theorem3_kernel_bound(5, 2, 4) == doctest::Approx(10.0 / 9).epsilon(1e-15));
  CHECK(theorem3_kernel_bound(34, 5, 17) ==
        doctest::Approx(1.0013860013860014).epsilon(1e-15));
  // K2: N*D*d_max = 2, vacuous.
  CHECK_THROWS_AS(theorem3_kernel_bound(2, 1, 1), std::domain_error);
}

TEST_CASE("audit on Path(3) reproduces the worked chain") {
  const BoundReport r = audit_bounds(make(GraphFamily::Path, 3), 0.1, 1.4, 1.0);
  CHECK(r.n == 3);
  CHECK(r.diameter_d == 2);
  CHECK(r.d_max == 2);
  CHECK(r.lambda == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.fiedler == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(r.mohar_lb == doctest::Approx(2.0 / 3).epsilon(1e-12));
  CHECK(r.mohar_link.holds);
  // Tight link: cavers paper reading equals lambda here.
  CHECK(r.cavers_ub_paper == doctest::Approx(0.5).epsilon(1e-9));
  CHECK(r.cavers_paper_link.holds);
  CHECK(r.cavers_aug_link.holds);
  REQUIRE(r.thm3_s_bound);
  CHECK(*r.thm3_s_bound == doctest::Approx(1.5).epsilon(1e-12));
  CHECK(r.theorem3_link.applicable);  // s = 1.4 < 1.5
  CHECK(r.theorem3_link.holds);       // s*lambda = 0.7
  REQUIRE(r.l_hat);
  CHECK(*r.l_hat == 7);
}

TEST_CASE("audit on Complete(3) hits the degenerate lambda") {
  const BoundReport r = audit_bounds(make(GraphFamily::Complete, 3), 0.1, 1.0, 1.0);
  CHECK(r.lambda == doctest::Approx(0.0).epsilon(1e-9));
  REQUIRE(r.l_hat);
  CHECK(*r.l_hat == 1);
  // Paper-reading Cavers fails here (bound -1/2 vs top-end 0), recorded as data.
  CHECK(!r.cavers_paper_link.holds);
  CHECK(r.cavers_aug_link.holds);
}

TEST_CASE("audit on K2 records the paper-reading caveat") {
  const BoundReport r = audit_bounds(make(GraphFamily::Path, 2), 0.1, 1.0, 1.0);
  CHECK(r.cavers_ub_paper == doctest::Approx(-1.0).epsilon(1e-9));
  CHECK(!r.cavers_paper_link.holds);
  CHECK(r.cavers_ub_aug == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(r.cavers_aug_link.holds);
  CHECK(!r.thm3_s_bound);  // vacuous
  CHECK(!r.theorem3_link.applicable);
  CHECK(!r.lambda_link.applicable);
}

TEST_CASE("audit on karate") {
  const BoundReport r = audit_bounds(make(GraphFamily::Karate, 34), 1e-3, 1.0013, 1.0);
  CHECK(r.n == 34);
  CHECK(r.diameter_d == 5);
  CHECK(r.d_max == 17);
  REQUIRE(r.thm3_s_bound);
  CHECK(*r.thm3_s_bound == doctest::Approx(1.0013860013860014).epsilon(1e-12));
  CHECK(r.mohar_link.holds);
  CHECK(r.cavers_aug_link.holds);
  CHECK(r.theorem3_link.applicable);  // 1.0013 < 1.00138...
  CHECK(r.theorem3_link.holds);
}

TEST_CASE("audit rejects bad input") {
  const Graph disconnected = Graph::from_edge_pairs(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(audit_bounds(disconnected, 0.1, 1.0, 1.0), std::invalid_argument);
  const Graph single = Graph::from_edge_pairs(1, {});
  CHECK_THROWS_AS(audit_bounds(single, 0.1, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(audit_bounds(make(GraphFamily::Path, 3), -0.1, 1.0, 1.0),
                  std::invalid_argument);
}
