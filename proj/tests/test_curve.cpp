#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace cremona;
using testutil::fppt;
using testutil::qpt;

namespace {

template <typename F>
ErrorKind kind_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  return ErrorKind::Internal;
}

}  // namespace

TEST_CASE("curve construction accepts exactly smooth cubics") {
  Rational one(1);
  auto c = testutil::weierstrass_curve(one);
  CHECK(c.f.degree() == 3);
  CHECK(c.fx == Form<Rational>::monomial(Rational(-3), 2, 0, 0) +
                    Form<Rational>::monomial(one, 0, 0, 2));

  Form<Rational> conic = Form<Rational>::monomial(one, 2, 0, 0) +
                         Form<Rational>::monomial(one, 0, 1, 1);
  CHECK(kind_of([&] { curve_new(conic); }) == ErrorKind::NotDegree3);

  Form<Rational> split = Form<Rational>::monomial(one, 1, 1, 1);  // xyz
  CHECK(kind_of([&] { curve_new(split); }) == ErrorKind::Reducible);

  // cuspidal y^2 z = x^3, singular at (0:0:1)
  Form<Rational> cusp = Form<Rational>::monomial(one, 0, 2, 1) -
                        Form<Rational>::monomial(one, 3, 0, 0);
  try {
    curve_new(cusp);
    FAIL("cuspidal cubic accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Singular);
    CHECK(std::string(e.what()).find("(0 : 0 : 1)") != std::string::npos);
  }
}

TEST_CASE("tangent lines and inflexion detection on the running example") {
  Rational one(1);
  auto c = testutil::weierstrass_curve(one);
  auto O = qpt(0, 1, 0);
  auto q = qpt(0, 0, 1);

  CHECK(tangent_line(c, O) == Form<Rational>::monomial(one, 0, 0, 1));
  CHECK(tangent_line(c, q) == Form<Rational>::monomial(one, 1, 0, 0));
  Form<Rational> xmz = Form<Rational>::monomial(one, 1, 0, 0) -
                       Form<Rational>::monomial(one, 0, 0, 1);
  CHECK(tangent_line(c, qpt(1, 0, 1)) == xmz);

  CHECK(is_inflexion(c, O));
  CHECK_FALSE(is_inflexion(c, q));
  CHECK_FALSE(is_inflexion(c, qpt(1, 0, 1)));
  CHECK(kind_of([&] { tangent_line(c, qpt(1, 1, 1)); }) == ErrorKind::PointNotOnCurve);
}

TEST_CASE("tangency frame matches the normal form at an inflexion") {
  Rational one(1);
  auto c = testutil::weierstrass_curve(one);
  auto td = tangency_data(c, qpt(0, 1, 0));
  CHECK(td.inflexion);
  // inflexion <=> the dehomogenized quartic loses its constant term
  CHECK(td.quartic.deg == 4);
  CHECK(td.quartic.p.coeff(0).is_zero());
  // frame column three is the marked point
  auto col = PlanePoint<Rational>::make(td.m.a[0][0], td.m.a[1][0], td.m.a[2][0]);
  CHECK(col == qpt(0, 1, 0));

  auto td2 = tangency_data(c, qpt(0, 0, 1));
  CHECK_FALSE(td2.inflexion);
  CHECK_FALSE(td2.quartic.p.coeff(0).is_zero());
}

TEST_CASE("marked set over the rationals") {
  Rational one(1);
  auto c = testutil::weierstrass_curve(one);
  auto O = qpt(0, 1, 0);
  auto ms = marked_set_build(c, {O});

  REQUIRE(ms.config.n == 5);
  CHECK(ms.config.hash() == 6825191383141369462ull);
  CHECK(ms.omega[0].pt == qpt(0, 0, 1));
  CHECK(ms.omega[1].pt == O);
  CHECK(ms.omega[2].pt == qpt(1, 0, -1));
  CHECK(ms.omega[3].pt == qpt(1, 0, 1));
  CHECK(ms.omega[4].near);
  CHECK(ms.omega[4].pt == O);
  // the near direction stays on the tangent z = 0
  CHECK(ms.omega[4].dir == qpt(1, 0, 0));
  REQUIRE(ms.generators.size() == 1);
  CHECK(ms.generators[0] == 1);
  auto succ = ms.config.successors(1);
  CHECK(succ == std::vector<int>{0, 2, 3, 4});
  for (int b = 0; b < 5; ++b)
    if (b != 1) CHECK(ms.config.successors(b).empty());
  ms.config.validate();
}

TEST_CASE("marked set rejections") {
  Rational one(1);
  auto c = testutil::weierstrass_curve(one);
  auto O = qpt(0, 1, 0);
  CHECK(kind_of([&] { marked_set_build(c, {qpt(1, 1, 1)}); }) == ErrorKind::GeneratorOffCurve);
  CHECK(kind_of([&] { marked_set_build(c, {O, O}); }) == ErrorKind::DuplicateGenerator);
  CHECK(kind_of([&] { marked_set_build(c, {qpt(0, 0, 1)}); }) == ErrorKind::QuarticNotSplit);
  CHECK(kind_of([&] { marked_set_build(c, {qpt(1, 0, 1)}); }) == ErrorKind::QuarticNotSplit);
  CHECK(kind_of([&] { marked_set_build(c, {}); }) == ErrorKind::InvalidArgument);
}

TEST_CASE("marked sets over prime fields hit the frozen configurations") {
  // F_13: O is an inflexion, q = (0:0:1) is split with O on its tangent
  Fp one13(1, 13);
  auto c13 = testutil::weierstrass_curve(one13);
  auto O13 = fppt(0, 1, 0, 13);
  auto q13 = fppt(0, 0, 1, 13);
  auto ms13 = marked_set_build(c13, {O13, q13});
  CHECK(ms13.config.n == 9);
  CHECK(ms13.config.hash() == 7785663014903746454ull);
  int iq = 0, iO = 1;
  CHECK(ms13.omega[static_cast<std::size_t>(iO)].pt == O13);
  CHECK(ms13.omega[static_cast<std::size_t>(iq)].pt == q13);
  CHECK(ms13.config.succ[static_cast<std::size_t>(iO)][static_cast<std::size_t>(iq)]);
  CHECK_FALSE(ms13.config.succ[static_cast<std::size_t>(iq)][static_cast<std::size_t>(iO)]);
  // tangent at q passes through O: the geometric content of the relation
  CHECK(tangent_line(c13, q13).eval(O13.c).is_zero());

  // F_7: inflexion generator plus a generic one, related
  Fp one7(1, 7);
  auto c7 = testutil::weierstrass_curve(one7);
  auto ms7 = marked_set_build(c7, {fppt(0, 1, 0, 7), fppt(1, 0, 1, 7)});
  CHECK(ms7.config.n == 9);
  CHECK(ms7.config.hash() == 15067930990611260940ull);

  // F_11: three inflexion generators, relation-free
  Fp one11(1, 11);
  auto c11 = testutil::weierstrass_curve(one11);
  auto ms11 = marked_set_build(
      c11, {fppt(0, 1, 0, 11), fppt(1, 1, 3, 11), fppt(1, 10, 3, 11)});
  CHECK(ms11.config.n == 15);
  CHECK(ms11.config.hash() == 4368162816258512783ull);
  int near_count = 0;
  for (const auto& o : ms11.omega) near_count += o.near ? 1 : 0;
  CHECK(near_count == 3);
  for (int g : ms11.generators)
    for (int h : ms11.generators)
      CHECK_FALSE(ms11.config.succ[static_cast<std::size_t>(g)][static_cast<std::size_t>(h)]);
}

TEST_CASE("successor points satisfy their defining incidence") {
  // every successor a of a generator g has g on the tangent at a; near
  // records point along the tangent at the generator itself
  Fp one(1, 13);
  auto c = testutil::weierstrass_curve(one);
  auto ms = marked_set_build(c, {fppt(0, 1, 0, 13), fppt(0, 0, 1, 13)});
  for (std::size_t gi = 0; gi < ms.generators.size(); ++gi) {
    int g = ms.generators[gi];
    const auto& gp = ms.omega[static_cast<std::size_t>(g)].pt;
    for (int s : ms.config.successors(g)) {
      const auto& so = ms.omega[static_cast<std::size_t>(s)];
      if (so.near) {
        CHECK(so.pt == gp);
        CHECK(tangent_line(c, gp).eval(so.dir.c).is_zero());
      } else {
        CHECK(on_curve(c, so.pt));
        CHECK(tangent_line(c, so.pt).eval(gp.c).is_zero());
        CHECK_FALSE(so.pt == gp);
      }
    }
  }
}

namespace {

MarkedConfig calibration_config() {
  MarkedConfig cfg;
  cfg.n = 9;
  cfg.names = {"O", "q", "t2", "t3", "NO", "s1", "s2", "s3", "s4"};
  cfg.near_base.assign(9, -1);
  cfg.near_base[4] = 0;
  cfg.succ.assign(9, std::vector<bool>(9, false));
  for (int b : {1, 2, 3, 4}) cfg.succ[0][static_cast<std::size_t>(b)] = true;
  for (int b : {5, 6, 7, 8}) cfg.succ[1][static_cast<std::size_t>(b)] = true;
  cfg.generators = {0, 1};
  return cfg;
}

}  // namespace

TEST_CASE("abstract configuration validation") {
  MarkedConfig cfg = calibration_config();
  cfg.validate();
  std::uint64_t h = cfg.hash();
  cfg.names = {"a", "b", "c", "d", "e", "f", "g", "h", "i"};
  CHECK(cfg.hash() == h);  // names are display only

  auto expect_invalid = [](MarkedConfig bad) {
    CHECK(kind_of([&] { bad.validate(); }) == ErrorKind::InvalidArgument);
  };

  {
    MarkedConfig bad = calibration_config();
    bad.generators.clear();
    expect_invalid(bad);
  }
  {
    MarkedConfig bad = calibration_config();
    bad.generators = {0, 0};
    expect_invalid(bad);
  }
  {
    MarkedConfig bad = calibration_config();
    bad.generators = {0, 1, 4};  // near record as generator
    expect_invalid(bad);
  }
  {
    MarkedConfig bad = calibration_config();
    bad.succ[2][2] = true;  // reflexive
    expect_invalid(bad);
  }
  {
    MarkedConfig bad = calibration_config();
    bad.succ[1][0] = true;  // mutual with 0 > 1
    expect_invalid(bad);
  }
  {
    MarkedConfig bad = calibration_config();
    bad.succ[1][2] = true;  // second predecessor for 2
    expect_invalid(bad);
  }
  {
    MarkedConfig bad = calibration_config();
    bad.succ[0][3] = false;  // generator with three successors
    expect_invalid(bad);
  }
  {
    MarkedConfig bad = calibration_config();
    bad.succ[2][3] = true;  // successors of 0 related to each other
    expect_invalid(bad);
  }
  {
    MarkedConfig bad = calibration_config();
    bad.near_base[4] = 2;  // near record based on a non-generator
    expect_invalid(bad);
  }
  {
    // orphan: neither generator nor successor of one
    MarkedConfig bad = calibration_config();
    bad.n = 10;
    bad.names.push_back("orphan");
    bad.near_base.push_back(-1);
    for (auto& row : bad.succ) row.push_back(false);
    bad.succ.emplace_back(10, false);
    expect_invalid(bad);
  }
}

TEST_CASE("empty configuration is valid and rank one") {
  MarkedConfig cfg;
  cfg.validate();
  CHECK(cfg.hash() != 0);
  cfg.generators = {0};
  CHECK(kind_of([&] { cfg.validate(); }) == ErrorKind::InvalidArgument);
}
