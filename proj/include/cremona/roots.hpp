// Exact root finding and small-degree factorization over Q and F_p.
// Rational roots are complete (rational root theorem with full integer
// factorization); F_p roots use the x^p - x gcd, never a residue scan.
#ifndef CREMONA_ROOTS_HPP
#define CREMONA_ROOTS_HPP

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "poly.hpp"
#include "scalars.hpp"

namespace cremona {

namespace detail {

// --- integer factorization: trial division then Pollard rho ---------------

inline mpz_class pollard_rho_split(const mpz_class& n) {
  // n odd composite, no factor below the trial bound; c sweep keeps it
  // deterministic
  for (unsigned long c = 1;; ++c) {
    mpz_class x = 2, y = 2, d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      mpz_class diff = x - y;
      if (diff < 0) diff = -diff;
      if (diff == 0) break;  // cycle for this c
      mpz_gcd(d.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    }
    if (d != 1 && d != n) return d;
  }
}

// factors n >= 1 into sorted (prime, exponent) pairs
inline std::vector<std::pair<mpz_class, int>> factor_mpz(mpz_class n) {
  check(n >= 1, ErrorKind::Internal, "factor_mpz expects n >= 1");
  std::vector<std::pair<mpz_class, int>> out;
  auto push = [&out](const mpz_class& p) {
    for (auto& [q, e] : out)
      if (q == p) {
        ++e;
        return;
      }
    out.emplace_back(p, 1);
  };
  for (const unsigned long p : {2ul, 3ul, 5ul}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      n /= p;
      push(p);
    }
  }
  unsigned long d = 7;
  static const unsigned long wheel[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  std::size_t wi = 0;
  while (d <= 1000000ul && mpz_class(d) * d <= n) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), d)) {
      n /= d;
      push(d);
    }
    d += wheel[wi];
    wi = (wi + 1) & 7;
  }
  std::vector<mpz_class> stack;
  if (n > 1) stack.push_back(n);
  while (!stack.empty()) {
    mpz_class m = stack.back();
    stack.pop_back();
    if (m == 1) continue;
    if (mpz_probab_prime_p(m.get_mpz_t(), 40)) {
      push(m);
      continue;
    }
    mpz_class f = pollard_rho_split(m);
    stack.push_back(f);
    stack.push_back(m / f);
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// all positive divisors of n >= 1, ascending
inline std::vector<mpz_class> divisors_mpz(const mpz_class& n) {
  auto fac = factor_mpz(n);
  std::vector<mpz_class> ds{1};
  for (const auto& [p, e] : fac) {
    std::size_t base = ds.size();
    mpz_class pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) {
        ds.push_back(ds[j] * pk);
        check(ds.size() <= 2000000, ErrorKind::Internal, "divisor set too large");
      }
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// generic polynomial helpers

// f(g(x)) by Horner
template <typename K>
Poly<K> poly_compose(const Poly<K>& f, const Poly<K>& g) {
  Poly<K> acc;
  for (int i = f.degree(); i >= 0; --i) acc = acc * g + Poly<K>(f.coeff(i));
  return acc;
}

// base^e mod m in K[x], e given as a nonnegative big integer
template <typename K>
Poly<K> poly_powmod(const Poly<K>& base, const mpz_class& e, const Poly<K>& m) {
  check(m.degree() >= 1, ErrorKind::Internal, "powmod modulus must be nonconstant");
  check(sgn(e) >= 0, ErrorKind::Internal, "powmod exponent must be nonnegative");
  Poly<K> mm = make_monic(m);
  Poly<K> r(m.lc().one_like());
  if (e == 0) return r;
  Poly<K> b = divmod_field(base, mm).second;
  std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (std::size_t i = bits; i-- > 0;) {
    r = divmod_field(r * r, mm).second;
    if (mpz_tstbit(e.get_mpz_t(), i)) r = divmod_field(r * b, mm).second;
  }
  return r;
}

// multiplicity of r as a root of f (0 if not a root)
template <typename K>
int root_multiplicity(Poly<K> f, const K& r) {
  check(!f.is_zero(), ErrorKind::Internal, "root multiplicity in zero polynomial");
  Poly<K> lin;  // x - r
  lin = Poly<K>::monomial(r.one_like(), 1) - Poly<K>(r);
  int m = 0;
  while (true) {
    auto [q, rem] = divmod_field(f, lin);
    if (!rem.is_zero()) return m;
    ++m;
    f = q;
    if (f.is_zero()) return m;
  }
}

// ---------------------------------------------------------------------------
// complete squarefree part (sound in characteristic p as well)

namespace detail {

// f with zero derivative over F_p is g(x^p); returns g (p-th root)
inline Poly<Fp> de_frobenius(const Poly<Fp>& f, std::uint64_t p) {
  Poly<Fp> g;
  for (int i = 0; i <= f.degree(); ++i) {
    Fp c = f.coeff(i);
    if (c.is_zero()) continue;
    check(i % static_cast<int>(p) == 0, ErrorKind::Internal, "de_frobenius exponent");
    // a^(1/p) = a in the prime field
    g = g + Poly<Fp>::monomial(c, i / static_cast<int>(p));
  }
  return g;
}

}  // namespace detail

template <typename K>
Poly<K> squarefree_part_complete(const Poly<K>& f) {
  check(!f.is_zero(), ErrorKind::Internal, "squarefree part of zero");
  if constexpr (is_rational_v<K>) {
    return squarefree_part_field(f);
  } else {
    Poly<K> g = make_monic(f);
    if (g.degree() <= 0) return Poly<K>(f.lc().one_like());
    std::uint64_t p = g.lc().mod();
    Poly<K> d = g.derivative();
    if (d.is_zero()) return squarefree_part_complete(detail::de_frobenius(g, p));
    Poly<K> c = gcd_field(g, d);
    auto wq = g.try_exact_div(c);
    check(wq.has_value(), ErrorKind::Internal, "squarefree quotient failed");
    Poly<K> w = make_monic(*wq);  // factors with multiplicity not divisible by p
    Poly<K> r = c;
    while (true) {
      Poly<K> h = gcd_field(r, w);
      if (h.degree() <= 0) break;
      auto q = r.try_exact_div(h);
      check(q.has_value(), ErrorKind::Internal, "squarefree strip failed");
      r = *q;
    }
    if (r.degree() <= 0) return w;
    // r is a p-th power: its factors have multiplicity divisible by p
    return make_monic(w * squarefree_part_complete(detail::de_frobenius(make_monic(r), p)));
  }
}

// ---------------------------------------------------------------------------
// roots over the coefficient field, with multiplicities

inline std::vector<std::pair<Rational, int>> roots_rational(const Poly<Rational>& f) {
  check(!f.is_zero(), ErrorKind::InvalidArgument, "roots of the zero polynomial");
  std::vector<std::pair<Rational, int>> out;
  int v = 0;
  while (v <= f.degree() && f.coeff(v).is_zero()) ++v;
  Poly<Rational> g;
  for (int i = v; i <= f.degree(); ++i) g = g + Poly<Rational>::monomial(f.coeff(i), i - v);
  if (v > 0) out.emplace_back(Rational(), v);
  if (g.degree() >= 1) {
    mpz_class den_lcm = 1;
    for (int i = 0; i <= g.degree(); ++i)
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), g.coeff(i).denominator().get_mpz_t());
    std::vector<mpz_class> c(static_cast<std::size_t>(g.degree()) + 1);
    mpz_class content = 0;
    for (int i = 0; i <= g.degree(); ++i) {
      mpz_class num = g.coeff(i).numerator() * (den_lcm / g.coeff(i).denominator());
      c[static_cast<std::size_t>(i)] = num;
      mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), num.get_mpz_t());
    }
    for (auto& ci : c) ci /= content;
    mpz_class a0 = c.front(), ad = c.back();
    if (a0 < 0) a0 = -a0;
    if (ad < 0) ad = -ad;
    auto num_divs = detail::divisors_mpz(a0);
    auto den_divs = detail::divisors_mpz(ad);
    for (const mpz_class& pnum : num_divs) {
      for (const mpz_class& qden : den_divs) {
        mpz_class gg;
        mpz_gcd(gg.get_mpz_t(), pnum.get_mpz_t(), qden.get_mpz_t());
        if (gg != 1) continue;
        for (int sign = 0; sign < 2; ++sign) {
          mpq_class cand(sign ? -pnum : pnum, qden);
          cand.canonicalize();
          Rational r(cand);
          // Horner over the integer coefficients
          Rational acc;
          for (std::size_t i = c.size(); i-- > 0;)
            acc = acc * r + Rational(mpq_class(c[i]));
          if (acc.is_zero()) out.emplace_back(r, root_multiplicity(g, r));
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first.cmp(b.first) < 0; });
  return out;
}

namespace detail {

// splits a monic product of distinct linear factors into its roots
inline void split_linear_fp(const Poly<Fp>& g, std::uint64_t p, std::vector<Fp>& out) {
  if (g.degree() <= 0) return;
  if (g.degree() == 1) {
    out.push_back(-g.coeff(0));  // monic: root is -c0
    return;
  }
  mpz_class half = (mpz_class(static_cast<unsigned long>(p)) - 1) / 2;
  for (std::uint64_t a = 0; a < p; ++a) {
    Poly<Fp> shifted = Poly<Fp>::monomial(Fp(1, p), 1) + Poly<Fp>(Fp(a, p));
    Poly<Fp> s = poly_powmod(shifted, half, g) - Poly<Fp>(Fp(1, p));
    Poly<Fp> d = gcd_field(s, g);
    if (d.degree() > 0 && d.degree() < g.degree()) {
      auto q = g.try_exact_div(d);
      check(q.has_value(), ErrorKind::Internal, "root split division failed");
      split_linear_fp(d, p, out);
      split_linear_fp(make_monic(*q), p, out);
      return;
    }
  }
  raise(ErrorKind::Internal, "root splitting exhausted all shifts");
}

}  // namespace detail

inline std::vector<std::pair<Fp, int>> roots_fp(const Poly<Fp>& f) {
  check(!f.is_zero(), ErrorKind::InvalidArgument, "roots of the zero polynomial");
  std::vector<std::pair<Fp, int>> out;
  if (f.degree() < 1) return out;
  std::uint64_t p = 0;
  for (int i = 0; i <= f.degree(); ++i)
    if (!f.coeff(i).is_zero()) p = f.coeff(i).mod();
  Poly<Fp> sf = squarefree_part_complete(f);
  if (sf.degree() < 1) return out;
  Poly<Fp> x = Poly<Fp>::monomial(Fp(1, p), 1);
  Poly<Fp> xp = poly_powmod(x, mpz_class(static_cast<unsigned long>(p)), sf);
  Poly<Fp> lin = gcd_field(xp - x, sf);  // product of (x - r) over distinct roots
  std::vector<Fp> roots;
  detail::split_linear_fp(lin, p, roots);
  for (const Fp& r : roots) out.emplace_back(r, root_multiplicity(f, r));
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first.cmp(b.first) < 0; });
  return out;
}

// roots of f in the coefficient field, as sorted (root, multiplicity) pairs
template <typename K>
std::vector<std::pair<K, int>> roots_in_field(const Poly<K>& f) {
  if constexpr (is_rational_v<K>) {
    return roots_rational(f);
  } else {
    static_assert(is_fp_v<K>, "roots_in_field supports Q and F_p");
    return roots_fp(f);
  }
}

// ---------------------------------------------------------------------------
// binary forms B(s, t) and their projective roots

template <typename K>
struct BinaryForm {
  int deg = -1;     // declared degree; -1 for the zero form
  Poly<K> p;        // p(t) = B(t, 1)

  bool is_zero() const { return p.is_zero(); }
};

template <typename K>
struct ProjRoot {
  K s, t;  // canonical: (r : 1) or (1 : 0)
  int mult = 0;

  bool at_infinity() const { return t.is_zero(); }
};

// all roots of B in P^1(K); multiplicity at (1:0) is deg - deg(p)
template <typename K>
std::vector<ProjRoot<K>> binary_roots(const BinaryForm<K>& b, const K& one_witness) {
  check(!b.is_zero(), ErrorKind::InvalidArgument, "roots of the zero binary form");
  std::vector<ProjRoot<K>> out;
  for (const auto& [r, m] : roots_in_field(b.p))
    out.push_back(ProjRoot<K>{r, one_witness.one_like(), m});
  int inf_mult = b.deg - b.p.degree();
  check(inf_mult >= 0, ErrorKind::Internal, "binary form exceeds declared degree");
  if (inf_mult > 0)
    out.push_back(ProjRoot<K>{one_witness.one_like(), one_witness.zero_like(), inf_mult});
  return out;
}

// ---------------------------------------------------------------------------
// factorization of squarefree monic polynomials

template <typename K>
struct SquarefreeFactors {
  std::vector<Poly<K>> irreducible;  // monic, sorted
  std::vector<Poly<K>> unresolved;   // monic, degree >= 5; empty over F_p
};

namespace detail {

inline std::optional<Rational> rational_sqrt(const Rational& r) {
  if (r.cmp(Rational()) < 0) return std::nullopt;
  mpz_class num = r.numerator(), den = r.denominator();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class sn, sd;
  mpz_sqrt(sn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(sd.get_mpz_t(), den.get_mpz_t());
  mpq_class q(sn, sd);
  q.canonicalize();
  return Rational(q);
}

// splits a monic rootless rational quartic into two monic quadratics, or
// reports irreducibility; complete via the resolvent cubic of the depressed
// form
inline std::optional<std::pair<Poly<Rational>, Poly<Rational>>> quartic_split(
    const Poly<Rational>& f) {
  check(f.degree() == 4 && f.lc().is_one(), ErrorKind::Internal, "quartic_split input");
  Rational a = f.coeff(3);
  Poly<Rational> shift =
      Poly<Rational>::monomial(Rational(1), 1) - Poly<Rational>(a * Rational(1, 4));
  Poly<Rational> g = poly_compose(f, shift);  // depressed: y^4 + P y^2 + Q y + R
  Rational P = g.coeff(2), Q = g.coeff(1), R = g.coeff(0);
  auto unshift = [&](const Poly<Rational>& h) {
    Poly<Rational> back =
        Poly<Rational>::monomial(Rational(1), 1) + Poly<Rational>(a * Rational(1, 4));
    return poly_compose(h, back);
  };
  auto quad = [](const Rational& lin, const Rational& cst) {
    return Poly<Rational>::monomial(Rational(1), 2) +
           Poly<Rational>::monomial(lin, 1) + Poly<Rational>(cst);
  };
  if (Q.is_zero()) {
    // (y^2 + t1)(y^2 + t2) with t1 + t2 = P, t1 t2 = R
    Rational D = P * P - Rational(4) * R;
    if (auto sd = rational_sqrt(D)) {
      Rational t1 = (P + *sd) * Rational(1, 2), t2 = (P - *sd) * Rational(1, 2);
      return std::make_pair(unshift(quad(Rational(), t1)), unshift(quad(Rational(), t2)));
    }
    // (y^2 + s y + t)(y^2 - s y + t) with t^2 = R, s^2 = 2t - P
    if (auto sr = rational_sqrt(R)) {
      for (const Rational& t : {*sr, -*sr}) {
        Rational s2 = Rational(2) * t - P;
        if (auto s = rational_sqrt(s2)) {
          if (!s->is_zero())
            return std::make_pair(unshift(quad(*s, t)), unshift(quad(-*s, t)));
        }
      }
    }
    return std::nullopt;
  }
  // resolvent: u^3 + 2P u^2 + (P^2 - 4R) u - Q^2, with u = s^2
  Poly<Rational> res = Poly<Rational>::monomial(Rational(1), 3) +
                       Poly<Rational>::monomial(Rational(2) * P, 2) +
                       Poly<Rational>::monomial(P * P - Rational(4) * R, 1) -
                       Poly<Rational>(Q * Q);
  for (const auto& [u, m] : roots_rational(res)) {
    if (u.cmp(Rational()) <= 0) continue;
    auto s = rational_sqrt(u);
    if (!s) continue;
    Rational qs = Q.div(*s);
    Rational t1 = (P + u - qs) * Rational(1, 2);
    Rational t2 = (P + u + qs) * Rational(1, 2);
    Poly<Rational> f1 = quad(*s, t1), f2 = quad(-*s, t2);
    if (f1 * f2 == g) return std::make_pair(unshift(f1), unshift(f2));
  }
  return std::nullopt;
}

inline void ddf_edf_fp(const Poly<Fp>& f, std::uint64_t p, std::vector<Poly<Fp>>& out);

// equal-degree splitting: every irreducible factor of f has degree d
inline void edf_fp(const Poly<Fp>& f, int d, std::uint64_t p, std::vector<Poly<Fp>>& out) {
  if (f.degree() <= 0) return;
  if (f.degree() == d) {
    out.push_back(make_monic(f));
    return;
  }
  mpz_class pd;
  mpz_ui_pow_ui(pd.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
  mpz_class half = (pd - 1) / 2;
  // deterministic candidate sweep: monic polynomials of growing degree
  for (int cd = 1; cd <= 4; ++cd) {
    std::vector<std::uint64_t> tuple(static_cast<std::size_t>(cd), 0);
    while (true) {
      Poly<Fp> r = Poly<Fp>::monomial(Fp(1, p), cd);
      for (int i = 0; i < cd; ++i)
        r = r + Poly<Fp>::monomial(Fp(tuple[static_cast<std::size_t>(i)], p), i);
      Poly<Fp> s = poly_powmod(r, half, f) - Poly<Fp>(Fp(1, p));
      Poly<Fp> w = gcd_field(s, f);
      if (w.degree() > 0 && w.degree() < f.degree()) {
        auto q = f.try_exact_div(w);
        check(q.has_value(), ErrorKind::Internal, "edf split division failed");
        edf_fp(w, d, p, out);
        edf_fp(make_monic(*q), d, p, out);
        return;
      }
      int pos = cd - 1;
      while (pos >= 0) {
        if (++tuple[static_cast<std::size_t>(pos)] < p) break;
        tuple[static_cast<std::size_t>(pos)] = 0;
        --pos;
      }
      if (pos < 0) break;
    }
  }
  raise(ErrorKind::Internal, "equal-degree splitting exhausted candidates");
}

inline void ddf_edf_fp(const Poly<Fp>& f, std::uint64_t p, std::vector<Poly<Fp>>& out) {
  Poly<Fp> g = make_monic(f);
  if (g.degree() <= 0) return;
  Poly<Fp> x = Poly<Fp>::monomial(Fp(1, p), 1);
  Poly<Fp> h = divmod_field(x, g).second;
  int d = 0;
  while (g.degree() >= 2 * (d + 1)) {
    ++d;
    h = poly_powmod(h, mpz_class(static_cast<unsigned long>(p)), g);
    Poly<Fp> w = gcd_field(h - x, g);
    if (w.degree() > 0) {
      edf_fp(w, d, p, out);
      auto q = g.try_exact_div(w);
      check(q.has_value(), ErrorKind::Internal, "ddf division failed");
      g = make_monic(*q);
      if (g.degree() >= 1) h = divmod_field(h, g).second;
    }
  }
  if (g.degree() >= 1) out.push_back(g);
}

}  // namespace detail

// factors a squarefree monic polynomial; over Q, degrees >= 5 without a
// rational root may land in `unresolved`
template <typename K>
SquarefreeFactors<K> factor_squarefree_monic(const Poly<K>& f) {
  check(!f.is_zero() && f.lc().is_one(), ErrorKind::Internal,
        "factor_squarefree_monic expects a monic polynomial");
  SquarefreeFactors<K> out;
  if (f.degree() < 1) return out;
  if constexpr (is_rational_v<K>) {
    Poly<K> rest = f;
    for (const auto& [r, m] : roots_rational(f)) {
      Poly<K> lin = Poly<K>::monomial(r.one_like(), 1) - Poly<K>(r);
      out.irreducible.push_back(lin);
      auto q = rest.try_exact_div(lin);
      check(q.has_value() && m == 1, ErrorKind::Internal, "squarefree input expected");
      rest = *q;
    }
    std::vector<Poly<K>> work{make_monic(rest)};
    while (!work.empty()) {
      Poly<K> g = work.back();
      work.pop_back();
      if (g.degree() < 1) continue;
      if (g.degree() <= 3) {
        out.irreducible.push_back(g);  // rootless degree 2 or 3 is irreducible
      } else if (g.degree() == 4) {
        if (auto split = detail::quartic_split(g)) {
          work.push_back(split->first);
          work.push_back(split->second);
        } else {
          out.irreducible.push_back(g);
        }
      } else {
        out.unresolved.push_back(g);
      }
    }
  } else {
    static_assert(is_fp_v<K>, "factor_squarefree_monic supports Q and F_p");
    std::uint64_t p = f.lc().mod();
    detail::ddf_edf_fp(f, p, out.irreducible);
  }
  auto by_cmp = [](const Poly<K>& a, const Poly<K>& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.cmp(b) < 0;
  };
  std::sort(out.irreducible.begin(), out.irreducible.end(), by_cmp);
  std::sort(out.unresolved.begin(), out.unresolved.end(), by_cmp);
  return out;
}

}  // namespace cremona

#endif  // CREMONA_ROOTS_HPP
