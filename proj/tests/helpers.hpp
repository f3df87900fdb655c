// Shared fixtures for the test suite: the running example curve over any
// field, small deterministic RNG wrappers, and independent oracles that the
// library code must agree with.
#ifndef CREMONA_TESTS_HELPERS_HPP
#define CREMONA_TESTS_HELPERS_HPP

#include <random>
#include <vector>

#include <cremona/cremona.hpp>

namespace testutil {

using namespace cremona;

// y^2 z = x^3 - x z^2, smooth with an inflexion at (0:1:0).
template <typename K>
Form<K> weierstrass_form(const K& one) {
  Form<K> f = Form<K>::monomial(one, 0, 2, 1);
  f = f - Form<K>::monomial(one, 3, 0, 0);
  f = f + Form<K>::monomial(one, 1, 0, 2);
  return f;
}

template <typename K>
CubicCurve<K> weierstrass_curve(const K& one) {
  return curve_new(weierstrass_form(one));
}

inline Rational q_of(long n) { return Rational(static_cast<int>(n)); }

inline Fp fp_of(long long n, std::uint64_t p) { return Fp::from_int(n, p); }

inline PlanePoint<Rational> qpt(long x, long y, long z) {
  return PlanePoint<Rational>::make(q_of(x), q_of(y), q_of(z));
}

inline PlanePoint<Fp> fppt(long long x, long long y, long long z, std::uint64_t p) {
  return PlanePoint<Fp>::make(fp_of(x, p), fp_of(y, p), fp_of(z, p));
}

// Deterministic RNG; each test site picks its own seed so failures replay.
struct Rng {
  std::mt19937_64 g;
  explicit Rng(std::uint64_t seed) : g(seed) {}
  long long uniform(long long lo, long long hi) {
    return std::uniform_int_distribution<long long>(lo, hi)(g);
  }
};

inline Rational detail_scale(const Rational& one, long long v) {
  (void)one;
  return Rational(static_cast<int>(v));
}

inline Fp detail_scale(const Fp& one, long long v) { return Fp::from_int(v, one.mod()); }

template <typename K>
Poly<K> random_poly(Rng& rng, int deg, const K& one) {
  std::vector<K> c;
  for (int i = 0; i <= deg; ++i) {
    long long v = rng.uniform(-6, 6);
    if (i == deg && v == 0) v = 1;
    c.push_back(detail_scale(one, v));
  }
  return Poly<K>(std::move(c));
}

template <typename K>
Form<K> random_form(Rng& rng, int deg, const K& one) {
  Form<K> f;
  for (int i = 0; i <= deg; ++i)
    for (int j = 0; i + j <= deg; ++j) {
      long long v = rng.uniform(-5, 5);
      if (v != 0) f.set_term(i, j, deg - i - j, detail_scale(one, v));
    }
  if (f.is_zero()) f = Form<K>::monomial(one, deg, 0, 0);
  return f;
}

// Independent resultant oracle: Sylvester matrix determinant by fraction
// clearing Gaussian elimination in the field.
template <typename K>
K sylvester_resultant(const Poly<K>& a, const Poly<K>& b, const K& one) {
  int m = a.degree(), n = b.degree();
  K zero = one.zero_like();
  if (m < 0 || n < 0) return zero;
  int size = m + n;
  if (size == 0) return one;
  std::vector<std::vector<K>> s(static_cast<std::size_t>(size),
                                std::vector<K>(static_cast<std::size_t>(size), zero));
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + i)] = a.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i)
      s[static_cast<std::size_t>(n + r)][static_cast<std::size_t>(r + i)] = b.coeff(n - i);
  K det = one;
  for (int col = 0; col < size; ++col) {
    int sel = -1;
    for (int r = col; r < size; ++r)
      if (!s[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)].is_zero()) {
        sel = r;
        break;
      }
    if (sel < 0) return zero;
    if (sel != col) {
      std::swap(s[static_cast<std::size_t>(sel)], s[static_cast<std::size_t>(col)]);
      det = -det;
    }
    K piv = s[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    det = det * piv;
    K ip = piv.inv();
    for (int r = col + 1; r < size; ++r) {
      K f = s[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] * ip;
      if (f.is_zero()) continue;
      for (int c2 = col; c2 < size; ++c2)
        s[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] =
            s[static_cast<std::size_t>(r)][static_cast<std::size_t>(c2)] -
            f * s[static_cast<std::size_t>(col)][static_cast<std::size_t>(c2)];
    }
  }
  return det;
}

}  // namespace testutil

#endif  // CREMONA_TESTS_HELPERS_HPP
