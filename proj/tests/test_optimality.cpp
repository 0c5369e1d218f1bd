#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "hardylab/error.hpp"
#include "hardylab/hardy_weights.hpp"
#include "hardylab/optimality.hpp"
#include "hardylab/suites.hpp"

using namespace hardylab;

TEST_CASE("ground-state identity on small graphs") {
  for (const RadialModel& m : {make_tree(2, 8), make_antitree_poly(1, 8), make_tree(1, 10)}) {
    const VertexGraph g = expand_vertex_graph(m, 6);
    const auto v = radial_to_vertex(g, sqrt_of(u_gamma(m, 0.0)));
    const VerificationReport rep = ground_state_check(g, v, 20, 3, "identity");
    CHECK(rep.status == Status::pass);
    CHECK(rep.residuals.at("max_residual") <= 1e-11);
  }
}

TEST_CASE("ground-state identity with gamma > 0") {
  const RadialModel m = make_tree(3, 8);
  const VertexGraph g = expand_vertex_graph(m, 5);
  const auto v = radial_to_vertex(g, sqrt_of(u_gamma(m, 0.5)));
  CHECK(ground_state_check(g, v, 10, 11, "identity").status == Status::pass);
}

TEST_CASE("seeded runs are reproducible") {
  const RadialModel m = make_tree(2, 8);
  const VertexGraph g = expand_vertex_graph(m, 5);
  const auto v = radial_to_vertex(g, sqrt_of(u_gamma(m, 0.0)));
  const auto a = ground_state_check(g, v, 5, 42, "identity");
  const auto b = ground_state_check(g, v, 5, 42, "identity");
  CHECK(a.residuals == b.residuals);
}

TEST_CASE("helper sums") {
  const HelperSumDecay h = helper_sum_decay({3, 100, 1000, 10000});
  CHECK(h.values[0] == doctest::Approx(0.8966112928).epsilon(1e-9));
  CHECK(h.values[1] == doctest::Approx(0.21626421571066354).epsilon(1e-13));
  CHECK(h.decreasing_beyond_100);
}

TEST_CASE("criticality energies: direct sum against the closed form") {
  const RadialModel m = make_tree(2, 2000);
  for (long n : {3L, 10L, 100L, 1000L}) {
    const CriticalityEnergy e = criticality_energy(m, 0.0, n);
    CHECK(e.relative_difference <= 1e-10);
    CHECK(e.closed_form > 0);
  }
  // φ_n(0) = 1 keeps the identity for γ > 0
  CHECK(criticality_energy(make_tree(3, 200), 0.5, 100).relative_difference <= 1e-10);
  CHECK(criticality_closed_form(m, 100000) < criticality_closed_form(m, 1000));
}

TEST_CASE("null-criticality sums") {
  const RadialModel m = make_tree(2, 2001);
  const NullCriticality a = null_criticality_sum(m, 0.0, 200);
  const NullCriticality b = null_criticality_sum(m, 0.0, 2000);
  CHECK(b.sum > a.sum);
  CHECK(b.floor_part >= 0.25 * (std::log(2000.0) - std::log(2.0)));
}

TEST_CASE("optimality probe") {
  const RadialModel m = make_tree(2, 5000);
  const WeightProfile w = optimal_weight(m, 0.0);
  const ProbeResult up = optimality_probe(m, w, 0.1, 1, 4999);
  CHECK(up.status == ProbeStatus::refuted);
  CHECK(up.first_failing_b > 2);
  const ProbeResult ctl = optimality_probe(m, w, 0.0, 1, 4999);
  CHECK(ctl.status == ProbeStatus::not_refuted);
  CHECK(to_report(up, 0.1, 1, 4999, true).status == Status::pass);
  CHECK(to_report(ctl, 0.0, 1, 4999, false).status == Status::pass);
}

TEST_CASE("bounded oscillation and properness") {
  CHECK(bounded_oscillation(make_tree(3, 300), 0.0, 300) <= 6.0);
  CHECK(properness_proxy(make_tree(2, 300), 0.0).status == Status::pass);
  CHECK(properness_proxy(make_tree(1, 300), 0.0).status == Status::hypothesis_not_met);
}

TEST_CASE("spectral gap bound") {
  const VerificationReport rep = lambda0_bound(make_tree(2, 1001), 8, {10, 100, 1000});
  CHECK(rep.status == Status::pass);
  CHECK(rep.residuals.at("radial_increases") == 0);
}

TEST_CASE("suites") {
  const RadialModel m = make_tree(2, 300);
  const auto reports = run_suite(m, "all", {});
  CHECK(reports.size() == 14);
  for (const auto& r : reports) CHECK_MESSAGE(r.status == Status::pass, r.check);
  for (std::size_t i = 1; i < reports.size(); ++i) CHECK(reports[i - 1].check <= reports[i].check);
  CHECK_THROWS_AS(run_suite(m, "nope", {}), Error);
  const auto green = run_suite(make_tree(1, 100), "green", {});
  CHECK(green.at(0).status == Status::hypothesis_not_met);
}
