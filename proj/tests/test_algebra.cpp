#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

using namespace cremona;
using testutil::Rng;
using testutil::detail_scale;
using testutil::random_form;
using testutil::random_poly;
using testutil::sylvester_resultant;

TEST_CASE("field specs parse and print") {
  FieldSpec q = FieldSpec::parse("Q");
  CHECK(q.kind == FieldSpec::Kind::Rationals);
  CHECK(q.str() == "Q");
  FieldSpec f13 = FieldSpec::parse("Fp:13");
  CHECK(f13.kind == FieldSpec::Kind::Prime);
  CHECK(f13.p == 13);
  CHECK(f13.str() == "Fp:13");
  CHECK_THROWS_AS(FieldSpec::parse("Fp:5"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("Fp:9"), Error);
  CHECK_THROWS_AS(FieldSpec::parse("R"), Error);
}

TEST_CASE("rational arithmetic is exact and canonical") {
  Rational a = Rational::parse("6/8");
  CHECK(a.str() == "3/4");
  CHECK(Rational::parse("-6/-8").str() == "3/4");
  CHECK(Rational::parse("5").str() == "5");
  CHECK((a + a).str() == "3/2");
  CHECK((a * a.inv()).is_one());
  CHECK(Rational(0).is_zero());
  CHECK_THROWS_AS(Rational(0).inv(), Error);
  CHECK(Rational(-2).cmp(Rational(3)) < 0);
}

TEST_CASE("prime field arithmetic") {
  Fp a = Fp::from_int(-1, 13);
  CHECK(a.value() == 12);
  CHECK((a * a).value() == 1);
  Fp b = Fp::from_int(5, 13);
  CHECK((b * b.inv()).is_one());
  CHECK_THROWS_AS(Fp(0, 13).inv(), Error);
  Fp c7 = Fp::from_int(3, 7);
  CHECK_THROWS_AS(a + c7, Error);
  for (long long n = 1; n < 13; ++n) {
    Fp x = Fp::from_int(n, 13);
    CHECK((x * x.inv()).value() == 1);
  }
}

TEST_CASE("polynomial division and gcd over a field") {
  Rational one(1);
  Rng rng(101);
  for (int it = 0; it < 40; ++it) {
    auto f = random_poly(rng, static_cast<int>(rng.uniform(0, 5)), one);
    auto g = random_poly(rng, static_cast<int>(rng.uniform(0, 3)), one);
    if (g.is_zero()) continue;
    auto [q, r] = divmod_field(f, g);
    CHECK(q * g + r == f);
    CHECK((r.is_zero() || r.degree() < g.degree()));
  }
  // gcd(x^2 - 1, x^3 - 1) = x - 1, monic
  Poly<Rational> a({Rational(-1), Rational(0), Rational(1)});
  Poly<Rational> b({Rational(-1), Rational(0), Rational(0), Rational(1)});
  Poly<Rational> g = gcd_field(a, b);
  CHECK(g == Poly<Rational>({Rational(-1), Rational(1)}));
}

TEST_CASE("squarefree part drops multiplicity only") {
  // (x - 1)^2 (x + 2) -> (x - 1)(x + 2)
  Poly<Rational> lin1({Rational(-1), Rational(1)});
  Poly<Rational> lin2({Rational(2), Rational(1)});
  Poly<Rational> f = lin1 * lin1 * lin2;
  CHECK(squarefree_part_field(f) == make_monic(lin1 * lin2));
}

TEST_CASE("squarefree part over F_p handles p-th power collapse") {
  // x^7 - x = prod over F_7 of (x - a); already squarefree
  Fp one(1, 7);
  Poly<Fp> f = Poly<Fp>::monomial(one, 7) - Poly<Fp>::monomial(one, 1);
  Poly<Fp> s = squarefree_part_complete(f);
  CHECK(s == make_monic(f));
  // (x^7 - x)^2 has derivative zero in pieces; squarefree part must recover it
  Poly<Fp> s2 = squarefree_part_complete(f * f);
  CHECK(s2 == make_monic(f));
  // x^14 = (x^2)^7: derivative vanishes identically
  Poly<Fp> x14 = Poly<Fp>::monomial(one, 14);
  CHECK(squarefree_part_complete(x14) == Poly<Fp>::monomial(one, 1));
}

TEST_CASE("resultant matches the Sylvester determinant") {
  Rational qone(1);
  Rng rng(202);
  for (int it = 0; it < 60; ++it) {
    auto a = random_poly(rng, static_cast<int>(rng.uniform(1, 4)), qone);
    auto b = random_poly(rng, static_cast<int>(rng.uniform(1, 4)), qone);
    Rational lib = resultant(a, b);
    Rational ora = sylvester_resultant(a, b, qone);
    CHECK(lib == ora);
  }
  Fp fone(1, 13);
  for (int it = 0; it < 60; ++it) {
    auto a = random_poly(rng, static_cast<int>(rng.uniform(1, 5)), fone);
    auto b = random_poly(rng, static_cast<int>(rng.uniform(1, 5)), fone);
    Fp lib = resultant(a, b);
    Fp ora = sylvester_resultant(a, b, fone);
    CHECK(lib == ora);
  }
}

TEST_CASE("resultant vanishes exactly on common roots") {
  Fp one(1, 13);
  Rng rng(303);
  for (int it = 0; it < 40; ++it) {
    auto a = random_poly(rng, 3, one);
    auto b = random_poly(rng, 3, one);
    Poly<Fp> shared({detail_scale(one, -rng.uniform(0, 12)), one});
    CHECK(resultant(a * shared, b * shared).is_zero());
    Fp r = resultant(a, b);
    CHECK(r.is_zero() == (gcd_field(a, b).degree() > 0));
  }
}

TEST_CASE("resultant is multiplicative in the first argument") {
  Fp one(1, 13);
  Rng rng(404);
  for (int it = 0; it < 40; ++it) {
    auto a = random_poly(rng, 2, one);
    auto b = random_poly(rng, 2, one);
    auto c = random_poly(rng, 3, one);
    CHECK(resultant(a * b, c) == resultant(a, c) * resultant(b, c));
  }
}

TEST_CASE("rational roots with multiplicities") {
  // (x - 2)^2 (2x + 3) -> roots -3/2 (1), 2 (2), sorted ascending
  Poly<Rational> f({Rational(2), Rational(1)});
  f = f - Poly<Rational>::monomial(Rational(4), 0);  // x - 2
  Poly<Rational> g({Rational(3), Rational(2)});
  auto roots = roots_in_field(f * f * g);
  REQUIRE(roots.size() == 2);
  CHECK(roots[0].first == Rational::parse("-3/2"));
  CHECK(roots[0].second == 1);
  CHECK(roots[1].first == Rational(2));
  CHECK(roots[1].second == 2);
  CHECK(roots_in_field(Poly<Rational>({Rational(1), Rational(0), Rational(1)})).empty());
}

TEST_CASE("prime field roots agree with exhaustive scan") {
  Fp one(1, 13);
  Rng rng(505);
  for (int it = 0; it < 50; ++it) {
    auto f = random_poly(rng, static_cast<int>(rng.uniform(1, 6)), one);
    auto lib = roots_in_field(f);
    // oracle: trial division by (x - r) per residue
    std::vector<std::pair<Fp, int>> expect;
    for (long long r = 0; r < 13; ++r) {
      Fp fr = Fp::from_int(r, 13);
      if (!f.eval(fr).is_zero()) continue;
      Poly<Fp> lin({-fr, one});
      Poly<Fp> rest = f;
      int mult = 0;
      while (true) {
        auto [q, rem] = divmod_field(rest, lin);
        if (!rem.is_zero()) break;
        rest = q;
        ++mult;
      }
      expect.emplace_back(fr, mult);
    }
    REQUIRE(lib.size() == expect.size());
    for (std::size_t i = 0; i < lib.size(); ++i) {
      CHECK(lib[i].first == expect[i].first);
      CHECK(lib[i].second == expect[i].second);
    }
  }
}

TEST_CASE("binary form roots include the point at infinity") {
  Fp one(1, 13);
  // B(s,t) = s^2 t (s - t): roots (0:1) x2 is wrong; p(s) = B(s,1) = s^3 - s^2
  BinaryForm<Fp> b;
  b.deg = 4;
  b.p = Poly<Fp>::monomial(one, 3) - Poly<Fp>::monomial(one, 2);
  auto roots = binary_roots(b, one);
  REQUIRE(roots.size() == 3);
  bool saw_zero = false, saw_one = false, saw_inf = false;
  for (const auto& r : roots) {
    if (r.at_infinity()) {
      saw_inf = true;
      CHECK(r.mult == 1);
    } else if (r.s.is_zero()) {
      saw_zero = true;
      CHECK(r.mult == 2);
    } else if (r.s.is_one()) {
      saw_one = true;
      CHECK(r.mult == 1);
    }
  }
  CHECK((saw_zero && saw_one && saw_inf));
}

TEST_CASE("squarefree factorization multiplies back") {
  Fp one(1, 13);
  // (x - 1)(x - 2)(x^2 - 2); 2 is not a square mod 13
  Poly<Fp> f1({detail_scale(one, -1), one});
  Poly<Fp> f2({detail_scale(one, -2), one});
  Poly<Fp> f3 = Poly<Fp>::monomial(one, 2) - Poly<Fp>(detail_scale(one, 2));
  auto fac = factor_squarefree_monic(f1 * f2 * f3);
  CHECK(fac.unresolved.empty());
  REQUIRE(fac.irreducible.size() == 3);
  Poly<Fp> prod(one);
  for (const auto& g : fac.irreducible) {
    prod = prod * g;
    CHECK(g.lc().is_one());
  }
  CHECK(prod == f1 * f2 * f3);
}

TEST_CASE("gauss solve on square and singular systems") {
  Fp one(1, 13);
  Rng rng(606);
  for (int it = 0; it < 30; ++it) {
    std::vector<std::vector<Fp>> A(3, std::vector<Fp>(3, one.zero_like()));
    std::vector<Fp> x0(3), b(3, one.zero_like());
    for (int i = 0; i < 3; ++i) {
      x0[static_cast<std::size_t>(i)] = detail_scale(one, rng.uniform(-6, 6));
      for (int j = 0; j < 3; ++j)
        A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            detail_scale(one, rng.uniform(-6, 6));
    }
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        b[static_cast<std::size_t>(i)] =
            b[static_cast<std::size_t>(i)] +
            A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * x0[static_cast<std::size_t>(j)];
    auto sol = gauss_solve(A, b);
    REQUIRE(sol.has_value());
    for (int i = 0; i < 3; ++i) {
      Fp acc = one.zero_like();
      for (int j = 0; j < 3; ++j)
        acc = acc + A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * (*sol)[static_cast<std::size_t>(j)];
      CHECK(acc == b[static_cast<std::size_t>(i)]);
    }
  }
  // inconsistent system: x = 0 and x = 1
  std::vector<std::vector<Fp>> A = {{one}, {one}};
  std::vector<Fp> b = {one.zero_like(), one};
  CHECK_FALSE(gauss_solve(A, b).has_value());
}

TEST_CASE("matrix inverse round trips") {
  Rational one(1);
  Mat3<Rational> m = Mat3<Rational>::from_columns({Rational(1), Rational(2), Rational(0)},
                                                  {Rational(0), Rational(1), Rational(3)},
                                                  {Rational(1), Rational(0), Rational(1)});
  Mat3<Rational> inv = m.inverse();
  Mat3<Rational> id = Mat3<Rational>::identity_like(one);
  Mat3<Rational> prod = m * inv;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(prod.a[i][j] == id.a[i][j]);
  Mat3<Rational> sing = Mat3<Rational>::from_columns({Rational(1), Rational(2), Rational(3)},
                                                     {Rational(2), Rational(4), Rational(6)},
                                                     {Rational(0), Rational(1), Rational(1)});
  CHECK_THROWS_AS(sing.inverse(), Error);
}

TEST_CASE("form term order is graded lexicographic descending") {
  Rational one(1);
  Form<Rational> f = testutil::weierstrass_form(one);
  std::vector<Mono> monos;
  for (const auto& [m, c] : f.terms()) {
    (void)c;
    monos.push_back(m);
  }
  REQUIRE(monos.size() == 3);
  CHECK(monos[0] == Mono{3, 0, 0});
  CHECK(monos[1] == Mono{1, 0, 2});
  CHECK(monos[2] == Mono{0, 2, 1});
}

TEST_CASE("forms satisfy the Euler identity") {
  Fp one(1, 13);
  Rng rng(707);
  for (int it = 0; it < 30; ++it) {
    int d = static_cast<int>(rng.uniform(1, 5));
    Form<Fp> f = random_form(rng, d, one);
    Form<Fp> euler = Form<Fp>::monomial(one, 1, 0, 0) * f.derivative(0) +
                     Form<Fp>::monomial(one, 0, 1, 0) * f.derivative(1) +
                     Form<Fp>::monomial(one, 0, 0, 1) * f.derivative(2);
    CHECK(euler == f.scaled(detail_scale(one, d)));
  }
}

TEST_CASE("form division and gcd round trip") {
  Fp one(1, 13);
  Rng rng(808);
  for (int it = 0; it < 30; ++it) {
    Form<Fp> a = random_form(rng, static_cast<int>(rng.uniform(1, 3)), one);
    Form<Fp> b = random_form(rng, static_cast<int>(rng.uniform(1, 3)), one);
    Form<Fp> prod = a * b;
    auto q = form_try_divide(prod, a);
    REQUIRE(q.has_value());
    CHECK(*q == b);
    Form<Fp> g = form_gcd(prod, a);
    auto qa = form_try_divide(a, g);
    CHECK(qa.has_value());
  }
  // non-divisible pair leaves a remainder
  Form<Fp> x = Form<Fp>::monomial(one, 1, 0, 0);
  Form<Fp> y = Form<Fp>::monomial(one, 0, 1, 0);
  CHECK_FALSE(form_try_divide(x * x + y * y, x).has_value());
}

TEST_CASE("form substitution composes evaluations") {
  Fp one(1, 13);
  Rng rng(909);
  Form<Fp> f = random_form(rng, 2, one);
  Form<Fp> a = random_form(rng, 2, one);
  Form<Fp> b = random_form(rng, 2, one);
  Form<Fp> c = random_form(rng, 2, one);
  Form<Fp> sub = form_substitute(f, a, b, c);
  for (int it = 0; it < 20; ++it) {
    std::array<Fp, 3> p = {detail_scale(one, rng.uniform(0, 12)),
                           detail_scale(one, rng.uniform(0, 12)),
                           detail_scale(one, rng.uniform(0, 12))};
    std::array<Fp, 3> img = {a.eval(p), b.eval(p), c.eval(p)};
    CHECK(sub.eval(p) == f.eval(img));
  }
}

TEST_CASE("linear change of coordinates is functorial") {
  Rational one(1);
  Form<Rational> f = testutil::weierstrass_form(one);
  Mat3<Rational> m = Mat3<Rational>::from_columns({Rational(1), Rational(1), Rational(0)},
                                                  {Rational(0), Rational(1), Rational(0)},
                                                  {Rational(2), Rational(0), Rational(1)});
  Form<Rational> g = form_linear_change(f, m);
  // g(v) = f(M v) pointwise
  Rng rng(111);
  for (int it = 0; it < 20; ++it) {
    std::array<Rational, 3> v = {Rational(static_cast<int>(rng.uniform(-5, 5))),
                                 Rational(static_cast<int>(rng.uniform(-5, 5))),
                                 Rational(static_cast<int>(rng.uniform(-5, 5)))};
    CHECK(g.eval(v) == f.eval(m.apply(v)));
  }
  Form<Rational> back = form_linear_change(g, m.inverse());
  CHECK(back == f);
}

TEST_CASE("plane points canonicalize the first nonzero coordinate") {
  auto p = PlanePoint<Rational>::make(Rational(0), Rational(3), Rational(6));
  CHECK(p.c[0].is_zero());
  CHECK(p.c[1].is_one());
  CHECK(p.c[2] == Rational(2));
  CHECK_THROWS_AS(PlanePoint<Rational>::make(Rational(0), Rational(0), Rational(0)), Error);
  auto q = PlanePoint<Rational>::make(Rational(0), Rational(1), Rational(2));
  CHECK(p == q);
  Form<Rational> l = line_through(testutil::qpt(0, 1, 0), testutil::qpt(1, 0, 0));
  CHECK(l == Form<Rational>::monomial(Rational(1), 0, 0, 1));
}

TEST_CASE("common zeros of coprime systems are the rational intersections") {
  Rational one(1);
  // x z = 0 and y z = 0 share the factor z and the point (0:0:1)
  Form<Rational> xz = Form<Rational>::monomial(one, 1, 0, 1);
  Form<Rational> yz = Form<Rational>::monomial(one, 0, 1, 1);
  auto cz = common_zeros<Rational>({xz, yz});
  CHECK(cz.positive_dimensional);
  CHECK(cz.common_factor == Form<Rational>::monomial(one, 0, 0, 1));

  // x^2 - z^2 and y: two rational points
  Form<Rational> f = Form<Rational>::monomial(one, 2, 0, 0) - Form<Rational>::monomial(one, 0, 0, 2);
  Form<Rational> g = Form<Rational>::monomial(one, 0, 1, 0);
  auto cz2 = common_zeros<Rational>({f, g});
  CHECK_FALSE(cz2.positive_dimensional);
  CHECK_FALSE(cz2.extension_zeros);
  REQUIRE(cz2.points.size() == 2);
  CHECK(cz2.points[0] == testutil::qpt(1, 0, -1));
  CHECK(cz2.points[1] == testutil::qpt(1, 0, 1));

  // x^2 + z^2 and y: conjugate points only
  Form<Rational> f2 = Form<Rational>::monomial(one, 2, 0, 0) + Form<Rational>::monomial(one, 0, 0, 2);
  auto cz3 = common_zeros<Rational>({f2, g});
  CHECK(cz3.points.empty());
  CHECK(cz3.extension_zeros);

  // same system over F_13 where -1 is a square: (5:0:1) and (8:0:1)
  Fp fone(1, 13);
  Form<Fp> f3 = Form<Fp>::monomial(fone, 2, 0, 0) + Form<Fp>::monomial(fone, 0, 0, 2);
  Form<Fp> g3 = Form<Fp>::monomial(fone, 0, 1, 0);
  auto cz4 = common_zeros<Fp>({f3, g3});
  REQUIRE(cz4.points.size() == 2);
  CHECK_FALSE(cz4.extension_zeros);
}

TEST_CASE("common zeros rejects the identically zero system") {
  CHECK_THROWS_AS(common_zeros<Rational>({Form<Rational>{}}), Error);
}
