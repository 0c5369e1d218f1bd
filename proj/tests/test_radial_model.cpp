#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>

#include "hardylab/error.hpp"
#include "hardylab/radial_model.hpp"
#include "hardylab/vertex_graph.hpp"

using namespace hardylab;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::invalid_parameter;
}

}  // namespace

TEST_CASE("wide reals keep exponents far outside double range") {
  const WideReal two(2.0);
  WideReal big(1.0);
  for (int i = 0; i < 5000; ++i) big = big * two;
  CHECK(big.exponent() > 4000);
  CHECK_FALSE(std::isfinite(big.to_double()));
  const WideReal back = big / big;
  CHECK(back.to_double() == doctest::Approx(1.0).epsilon(1e-30));
  CHECK(static_cast<double>(big.log()) == doctest::Approx(5000 * std::log(2.0)).epsilon(1e-14));
  CHECK(WideReal::parse(big.to_string()) == big);
  CHECK(WideReal(3.0) > WideReal(2.0));
  CHECK((WideReal(3.0) - WideReal(3.0)).is_zero());
}

TEST_CASE("tree radial data") {
  const RadialModel m = make_tree(3, 20);
  CHECK(m.depth() == 20);
  CHECK(m.k_minus(0) == 0.0);
  CHECK(m.k_plus(5) == 3.0);
  CHECK(m.kappa(7) == 3.0);
  CHECK(m.area(4).to_double() == doctest::Approx(81.0));
  CHECK(*m.exact_area(40) == BigInt(3) * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 *
                                 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3 * 3);
  CHECK(m.tail() == Tail::geometric(3.0));
}

TEST_CASE("radial accessors reject radii outside their domain") {
  const RadialModel m = make_tree(2, 5);
  CHECK(kind_of([&] { (void)m.k_plus(5); }) == ErrorKind::needs_tail);
  CHECK(kind_of([&] { (void)m.kappa(0); }) == ErrorKind::undefined_at_origin);
  CHECK(kind_of([&] { (void)m.vol(6); }) == ErrorKind::range_out_of_bounds);
}

TEST_CASE("anti-tree with s(r) = r+1") {
  const RadialModel m = make_antitree_poly(1, 10);
  // area(r) = s(r−1)s(r) = r(r+1)
  for (int r = 1; r <= 10; ++r) CHECK(m.area(r).to_double() == doctest::Approx(r * (r + 1.0)));
  CHECK(m.kappa(3) == doctest::Approx(5.0 / 3.0));
  CHECK(*m.exact_area(1000) == BigInt(1000) * 1001);
  const std::vector<std::int64_t> s{1, 2, 4, 8};
  const RadialModel a = make_antitree(s, 3);
  CHECK(a.area(3).to_double() == doctest::Approx(32.0));
  CHECK(kind_of([] { (void)make_antitree_poly(40, 30); }) == ErrorKind::size_limit);
}

TEST_CASE("custom models must satisfy the area compatibility") {
  std::vector<double> kp{2, 2, 2}, km{0, 1, 1, 1};
  std::vector<WideReal> vol{WideReal(1.0), WideReal(2.0), WideReal(4.0), WideReal(8.0)};
  CHECK_NOTHROW(make_custom(kp, km, vol, Tail::geometric(2.0)));
  vol[2] = WideReal(5.0);
  try {
    (void)make_custom(kp, km, vol, Tail::unspecified());
    FAIL("accepted an inconsistent model");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::inconsistent_model);
    REQUIRE(e.radius().has_value());
    CHECK(*e.radius() == 2);
  }
}

TEST_CASE("model text format round trip") {
  const RadialModel m = make_antitree_poly(2, 12);
  const RadialModel back = read_model(write_model(m));
  CHECK(back.same_radial_data(m));
  CHECK(back.depth() == 12);

  const std::string text =
      "radial-model v1\n"
      "# comment\n"
      "0 3 0 1\n"
      "1 3 1 3\n"
      "2 - 1 9\n"
      "tail eventually-geometric 3\n";
  const RadialModel t = read_model(text);
  CHECK(t.depth() == 2);
  CHECK(t.tail() == Tail::geometric(3.0));
  CHECK(t.kappa(1) == 3.0);
  CHECK(kind_of([] { (void)read_model("radial-model v2\n"); }) == ErrorKind::parse_error);
}

TEST_CASE("model shorthand grammar") {
  CHECK(parse_model_source("tree:2:30").depth() == 30);
  CHECK(parse_model_source("antitree:poly:1:7").area(7).to_double() == doctest::Approx(56.0));
  CHECK(kind_of([] { (void)parse_model_source("tree:x:3"); }) == ErrorKind::parse_error);

  const std::string path = "hardylab_model_test.txt";
  {
    std::ofstream f(path);
    f << write_model(make_tree(2, 6));
  }
  CHECK(parse_model_source("file:" + path).same_radial_data(make_tree(2, 6)));
  CHECK(parse_model_source(path).depth() == 6);
  std::remove(path.c_str());
}

TEST_CASE("truncation keeps the generator tail") {
  const RadialModel m = make_tree(2, 50).truncated(10);
  CHECK(m.depth() == 10);
  CHECK(m.tail() == Tail::geometric(2.0));
}

TEST_CASE("vertex realization is weakly spherically symmetric") {
  for (const RadialModel& m : {make_tree(2, 8), make_tree(1, 8), make_antitree_poly(1, 8), make_antitree_poly(2, 5)}) {
    const VertexGraph g = expand_vertex_graph(m, 5);
    CHECK(check_weak_symmetry(g, m));
  }
  const VertexGraph t = expand_vertex_graph(make_tree(2, 8), 4);
  CHECK(t.size() == 31);
  CHECK(t.is_tree());
  CHECK(t.outer_curvature(30) == 2.0);
  CHECK(kind_of([] { (void)expand_vertex_graph(make_tree(4, 20), 12); }) == ErrorKind::size_limit);
}

TEST_CASE("vertex energy of a radial ramp matches the radial energy") {
  const RadialModel m = make_tree(2, 8);
  const VertexGraph g = expand_vertex_graph(m, 6);
  std::vector<double> f(g.size());
  for (int x = 0; x < g.size(); ++x) f[x] = 6 - g.sphere(x);
  // radial: Σ area(r+1)·1 for r = 0..5 plus the boundary edges to S(7)
  double want = 0;
  for (int r = 1; r <= 7; ++r) want += m.area(r).to_double() * (r == 7 ? 0.0 : 1.0);
  CHECK(vertex_energy(g, f) == doctest::Approx(want));
}
