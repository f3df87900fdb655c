// Complete decision of the common zero locus of a system of trivariate
// forms: enumerates all K-rational common zeros and decides whether any
// further zeros exist over proper algebraic extensions. Splits into the
// line z = 0 and the affine chart z = 1; the chart is handled by a
// branching gcd/resultant recursion in K[t][x], and existence of zeros
// above an irreducible (or merely squarefree) t-factor is decided by
// Euclidean reduction modulo that factor with dynamic splitting on
// zero divisors.
#ifndef CREMONA_ELIMINATION_HPP
#define CREMONA_ELIMINATION_HPP

#include <algorithm>
#include <vector>

#include "errors.hpp"
#include "form.hpp"
#include "poly.hpp"
#include "roots.hpp"

namespace cremona {

template <typename K>
struct CommonZeros {
  bool positive_dimensional = false;  // system shares a form factor
  Form<K> common_factor;              // that factor (monic) when positive_dimensional
  std::vector<PlanePoint<K>> points;  // every K-rational common zero, sorted
  bool extension_zeros = false;       // common zeros beyond `points` over extensions
};

namespace detail {

// reduces every t-coefficient of f modulo u, trimming in x
template <typename K>
Poly<Poly<K>> reduce_xpoly_mod(const Poly<Poly<K>>& f, const Poly<K>& u) {
  Poly<Poly<K>> r;
  for (int i = 0; i <= f.degree(); ++i) {
    Poly<K> c = divmod_field(f.coeff(i), u).second;
    if (!c.is_zero()) r = r + Poly<Poly<K>>::monomial(c, i);
  }
  return r;
}

// Decides whether the affine system has a common zero (x0, tau) with
// u(tau) = 0, x0 ranging over the algebraic closure. u monic squarefree.
// Splits u on zero divisors, so u need not be irreducible.
template <typename K>
bool zeros_above(Poly<K> u, std::vector<Poly<Poly<K>>> fs) {
  u = make_monic(u);
  if (u.degree() < 1) return false;
  while (true) {
    std::vector<Poly<Poly<K>>> xs;
    std::vector<Poly<K>> ps;
    for (const auto& f : fs) {
      Poly<Poly<K>> r = reduce_xpoly_mod(f, u);
      if (r.is_zero()) continue;  // vanishes identically above u
      if (r.degree() == 0)
        ps.push_back(r.coeff(0));
      else
        xs.push_back(r);
    }
    if (!ps.empty()) {
      Poly<K> g = u;
      for (const auto& p : ps) g = gcd_field(g, p);
      if (g.degree() < 1) return false;  // pure constraints never all vanish
      if (g.degree() < u.degree()) {
        u = g;
        fs = xs;
        continue;  // re-reduce against the smaller modulus
      }
      // pure constraints vanish on all of u; only x-members remain
    }
    fs = xs;
    if (fs.empty()) return true;  // unconstrained above u (finite systems never hit this)
    std::sort(fs.begin(), fs.end(),
              [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
    const Poly<K>& lc0 = fs[0].lc();
    Poly<K> g = gcd_field(lc0, u);
    if (g.degree() >= 1) {
      // zero divisor: decide on both coprime parts of u (u squarefree)
      auto rest = u.try_exact_div(g);
      check(rest.has_value(), ErrorKind::Internal, "modulus split failed");
      return zeros_above(g, fs) || zeros_above(make_monic(*rest), fs);
    }
    if (fs.size() == 1) {
      // lc invertible above u: positive x-degree survives every root of u,
      // so a closure root exists above each of them
      return true;
    }
    // one Euclid step: reduce fs[1] by the monic scaling of fs[0]
    auto [one, w] = half_ext_gcd_field(lc0, u);
    check(one.degree() == 0, ErrorKind::Internal, "unit inversion failed");
    Poly<Poly<K>> f2m;  // fs[0] made monic modulo u
    for (int i = 0; i <= fs[0].degree(); ++i) {
      Poly<K> c = divmod_field(fs[0].coeff(i) * w, u).second;
      if (!c.is_zero()) f2m = f2m + Poly<Poly<K>>::monomial(c, i);
    }
    Poly<Poly<K>> r = fs[1];
    while (!r.is_zero() && r.degree() >= f2m.degree()) {
      Poly<K> lead = divmod_field(r.lc(), u).second;
      if (lead.is_zero()) {
        r = r - Poly<Poly<K>>::monomial(r.lc(), r.degree());
        continue;
      }
      Poly<Poly<K>> t = Poly<Poly<K>>::monomial(lead, r.degree() - f2m.degree());
      r = r - t * f2m;
      r = reduce_xpoly_mod(r, u);
    }
    fs[1] = reduce_xpoly_mod(r, u);
    if (fs[1].is_zero()) fs.erase(fs.begin() + 1);
  }
}

// Emits nonzero t-polynomials whose root sets jointly cover the
// t-coordinates of every affine common zero of the system.
template <typename K>
void candidate_t_polys(std::vector<Poly<Poly<K>>> s, std::vector<Poly<K>>& out) {
  std::vector<Poly<Poly<K>>> xs;
  std::vector<Poly<K>> ps;
  for (auto& f : s) {
    if (f.is_zero()) continue;
    if (f.degree() == 0) {
      if (f.coeff(0).degree() <= 0) return;  // nonzero scalar: branch has no zeros
      ps.push_back(f.coeff(0));
    } else {
      xs.push_back(f);
    }
  }
  if (xs.empty() || (xs.size() == 1 && !ps.empty())) {
    check(!ps.empty(), ErrorKind::Internal, "unconstrained elimination branch");
    Poly<K> g;
    for (const auto& p : ps) g = gcd_field(g, p);
    if (g.degree() >= 1) out.push_back(g);
    return;
  }
  check(xs.size() >= 2, ErrorKind::Internal, "unconstrained elimination branch");
  std::sort(xs.begin(), xs.end(),
            [](const auto& a, const auto& b) { return a.degree() < b.degree(); });
  Poly<Poly<K>> f1 = xs[0], f2 = xs[1];
  std::vector<Poly<Poly<K>>> rest(xs.begin() + 2, xs.end());
  for (const auto& p : ps) rest.push_back(Poly<Poly<K>>(p));
  Poly<Poly<K>> w = gcd_biv(f1, f2);
  if (w.degree() == 0) {
    // content w(t) and an x-coprime pair: t-coordinates of common zeros of
    // {f1, f2} are roots of w or of the resultant, and the full system only
    // shrinks that set
    const Poly<K>& wc = w.coeff(0);
    auto h1 = f1.try_scalar_div(wc);
    auto h2 = f2.try_scalar_div(wc);
    check(h1.has_value() && h2.has_value(), ErrorKind::Internal, "content division failed");
    Poly<K> res = resultant(*h1, *h2);
    check(!res.is_zero(), ErrorKind::Internal, "resultant of coprime pair vanished");
    if (wc.degree() >= 1) out.push_back(wc);
    if (res.degree() >= 1) out.push_back(res);
    return;
  }
  // common factor of positive x-degree: split V(f1, f2) = V(w) u V(f1/w, f2/w)
  auto h1 = f1.try_exact_div(w);
  auto h2 = f2.try_exact_div(w);
  check(h1.has_value() && h2.has_value(), ErrorKind::Internal, "gcd division failed");
  std::vector<Poly<Poly<K>>> branch_a = rest;
  branch_a.push_back(w);
  candidate_t_polys(branch_a, out);
  std::vector<Poly<Poly<K>>> branch_b = rest;
  branch_b.push_back(*h1);
  branch_b.push_back(*h2);
  candidate_t_polys(branch_b, out);
}

template <typename K>
Poly<K> specialize_inner(const Poly<Poly<K>>& f, const K& t0) {
  Poly<K> r;
  for (int i = 0; i <= f.degree(); ++i) {
    K c = f.coeff(i).eval(t0);
    if (!c.is_zero()) r = r + Poly<K>::monomial(c, i);
  }
  return r;
}

}  // namespace detail

// Complete common-zero analysis of a system of forms (not all zero).
template <typename K>
CommonZeros<K> common_zeros(const std::vector<Form<K>>& system_in) {
  std::vector<Form<K>> s;
  for (const auto& f : system_in)
    if (!f.is_zero()) s.push_back(f);
  check(!s.empty(), ErrorKind::InvalidArgument, "common zeros of an identically zero system");
  CommonZeros<K> out;
  Form<K> g = form_gcd(s);
  if (g.degree() >= 1) {
    out.positive_dimensional = true;
    out.common_factor = g;
    out.extension_zeros = true;
    return out;
  }
  K one = s[0].lead_coeff().one_like();
  K zero = one.zero_like();

  // --- the line z = 0: restrictions are binary forms in (s, t) ---
  Poly<K> gline;
  bool line_constrained = false, inf_common = true;
  for (const auto& f : s) {
    Poly<K> p;  // f(u, 1, 0)
    for (const auto& [m, c] : f.terms())
      if (m[2] == 0) p = p + Poly<K>::monomial(c, m[0]);
    if (p.is_zero()) continue;  // z | f: no constraint on the line
    line_constrained = true;
    gline = gcd_field(gline, p);
    if (p.degree() == f.degree()) inf_common = false;  // f(1:0:0) != 0
  }
  check(line_constrained, ErrorKind::Internal, "line constraints vanished with constant gcd");
  if (inf_common) out.points.push_back(PlanePoint<K>::make(one, zero, zero));
  std::vector<Poly<K>> ext_factors;
  if (gline.degree() >= 1) {
    for (const auto& [r, m] : roots_in_field(gline))
      out.points.push_back(PlanePoint<K>::make(r, one, zero));
    auto fac = factor_squarefree_monic(squarefree_part_complete(gline));
    for (const auto& q : fac.irreducible)
      if (q.degree() >= 2) out.extension_zeros = true;
    if (!fac.unresolved.empty()) out.extension_zeros = true;  // rootless, degree >= 5
  }

  // --- affine chart z = 1 ---
  std::vector<Poly<Poly<K>>> a;
  for (const auto& f : s) a.push_back(form_to_xy_affine(f));
  std::vector<Poly<K>> cands;
  detail::candidate_t_polys(a, cands);
  std::vector<K> tvals;
  for (const auto& c : cands)
    for (const auto& [r, m] : roots_in_field(c)) tvals.push_back(r);
  std::sort(tvals.begin(), tvals.end(), [](const K& x, const K& y) { return x.cmp(y) < 0; });
  tvals.erase(std::unique(tvals.begin(), tvals.end(),
                          [](const K& x, const K& y) { return x == y; }),
              tvals.end());
  for (const K& t0 : tvals) {
    Poly<K> gx;
    bool all_zero = true;
    for (const auto& f : a) {
      Poly<K> sp = detail::specialize_inner(f, t0);
      if (sp.is_zero()) continue;
      all_zero = false;
      gx = gcd_field(gx, sp);
    }
    if (all_zero) {  // a full vertical line of zeros: impossible for finite systems
      out.extension_zeros = true;
      continue;
    }
    if (gx.degree() < 1) continue;
    for (const auto& [x0, m] : roots_in_field(gx))
      out.points.push_back(PlanePoint<K>::make(x0, t0, one));
    auto fac = factor_squarefree_monic(squarefree_part_complete(gx));
    for (const auto& q : fac.irreducible)
      if (q.degree() >= 2) out.extension_zeros = true;
    if (!fac.unresolved.empty()) out.extension_zeros = true;
  }
  // t-coordinates in proper extensions
  if (!out.extension_zeros) {
    for (const auto& c : cands) {
      if (out.extension_zeros) break;
      auto fac = factor_squarefree_monic(squarefree_part_complete(c));
      for (const auto& q : fac.irreducible) {
        if (q.degree() < 2) continue;
        bool dup = false;
        for (const auto& seen : ext_factors)
          if (seen == q) dup = true;
        if (dup) continue;
        ext_factors.push_back(q);
        if (detail::zeros_above(q, a)) {
          out.extension_zeros = true;
          break;
        }
      }
      if (out.extension_zeros) break;
      for (const auto& q : fac.unresolved) {
        bool dup = false;
        for (const auto& seen : ext_factors)
          if (seen == q) dup = true;
        if (dup) continue;
        ext_factors.push_back(q);
        if (detail::zeros_above(q, a)) {
          out.extension_zeros = true;
          break;
        }
      }
    }
  }
  std::sort(out.points.begin(), out.points.end());
  out.points.erase(std::unique(out.points.begin(), out.points.end()), out.points.end());
  return out;
}

}  // namespace cremona

#endif  // CREMONA_ELIMINATION_HPP
