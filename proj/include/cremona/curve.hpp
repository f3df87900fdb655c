// Smooth plane cubics: validation (degree, rational linear factors,
// smoothness over the closure), tangent lines, inflexion tests, the
// tangency quartic of a marked point, successor points, and assembly of a
// marked point set with its combinatorial shadow.
#ifndef CREMONA_CURVE_HPP
#define CREMONA_CURVE_HPP

#include <algorithm>
#include <optional>
#include <vector>

#include "config.hpp"
#include "elimination.hpp"
#include "errors.hpp"
#include "form.hpp"
#include "linalg.hpp"
#include "roots.hpp"

namespace cremona {

template <typename K>
struct CubicCurve {
  Form<K> f;                // degree 3, coefficients as given
  Form<K> fx, fy, fz;       // partial derivatives
};

template <typename K>
bool on_curve(const CubicCurve<K>& c, const PlanePoint<K>& p) {
  return c.f.eval(p.c).is_zero();
}

template <typename K>
void require_on_curve(const CubicCurve<K>& c, const PlanePoint<K>& p) {
  check(on_curve(c, p), ErrorKind::PointNotOnCurve, "point " + p.str() + " is not on the curve");
}

// monic linear form cutting the tangent line at a smooth curve point
template <typename K>
Form<K> tangent_line(const CubicCurve<K>& c, const PlanePoint<K>& p) {
  require_on_curve(c, p);
  K a = c.fx.eval(p.c), b = c.fy.eval(p.c), d = c.fz.eval(p.c);
  check(!(a.is_zero() && b.is_zero() && d.is_zero()), ErrorKind::Internal,
        "vanishing gradient on a curve validated as smooth");
  return Form<K>::linear(a, b, d).monic();
}

namespace detail {

template <typename K>
bool proportional(const PlanePoint<K>& a, const PlanePoint<K>& b) {
  return a == b;  // canonical scaling makes proportionality plain equality
}

template <typename K>
std::vector<PlanePoint<K>> standard_points(const K& one) {
  K zero = one.zero_like();
  return {PlanePoint<K>::make(one, zero, zero), PlanePoint<K>::make(zero, one, zero),
          PlanePoint<K>::make(zero, zero, one)};
}

}  // namespace detail

// canonical second rational point on a line, distinct from p: first match
// among the standard points, then the coefficient-built kernel basis
template <typename K>
PlanePoint<K> second_point_on_line(const Form<K>& line, const PlanePoint<K>& p) {
  check(line.degree() == 1, ErrorKind::Internal, "second_point_on_line expects a line");
  K one = line.lead_coeff().one_like();
  K zero = one.zero_like();
  K a = line.coeff(1, 0, 0), b = line.coeff(0, 1, 0), c = line.coeff(0, 0, 1);
  std::vector<PlanePoint<K>> cand = detail::standard_points<K>(one);
  if (!a.is_zero()) {
    cand.push_back(PlanePoint<K>::make(-b, a, zero));
    cand.push_back(PlanePoint<K>::make(-c, zero, a));
  } else if (!b.is_zero()) {
    cand.push_back(PlanePoint<K>::make(one, zero, zero));
    cand.push_back(PlanePoint<K>::make(zero, -c, b));
  } else {
    cand.push_back(PlanePoint<K>::make(one, zero, zero));
    cand.push_back(PlanePoint<K>::make(zero, one, zero));
  }
  for (const auto& q : cand)
    if (line.eval(q.c).is_zero() && !detail::proportional(q, p)) return q;
  raise(ErrorKind::Internal, "no second rational point on line " + line.str());
}

// canonical rational point off a line: first standard point not on it
template <typename K>
PlanePoint<K> point_off_line(const Form<K>& line) {
  check(line.degree() == 1, ErrorKind::Internal, "point_off_line expects a line");
  K one = line.lead_coeff().one_like();
  for (const auto& q : detail::standard_points<K>(one))
    if (!line.eval(q.c).is_zero()) return q;
  raise(ErrorKind::Internal, "line vanishes on all standard points");
}

// ---------------------------------------------------------------------------
// curve validation

namespace detail {

// multiplies a field element by a small nonnegative integer
template <typename K>
K k_times_int(const K& c, int n) {
  K acc = c.zero_like();
  for (int i = 0; i < n; ++i) acc = acc + c;
  return acc;
}

// searches for a monic-in-y factor y + g z of f (degree 3)
template <typename K>
std::optional<Form<K>> linear_factor_y(const Form<K>& f) {
  K one = f.lead_coeff().one_like();
  // f(x, -g z, z): coefficient polynomials in g, indexed by (i, z-degree)
  std::map<std::pair<int, int>, Poly<K>> eqs;
  for (const auto& [m, c] : f.terms()) {
    K cc = (m[1] % 2 == 1) ? -c : c;
    auto key = std::make_pair(m[0], m[2] + m[1]);
    auto it = eqs.find(key);
    Poly<K> term = Poly<K>::monomial(cc, m[1]);
    if (it == eqs.end())
      eqs.emplace(key, term);
    else
      it->second = it->second + term;
  }
  Poly<K> g;
  for (const auto& [key, q] : eqs) {
    if (q.is_zero()) continue;
    if (q.degree() == 0) return std::nullopt;  // constant obstruction
    g = gcd_field(g, q);
  }
  if (g.degree() < 1) return std::nullopt;
  for (const auto& [r, mult] : roots_in_field(g)) {
    Form<K> line = Form<K>::linear(one.zero_like(), one, r);
    if (form_try_divide(f, line).has_value()) return line;
  }
  return std::nullopt;
}

// searches for a factor x + b y + g z of f (degree 3)
template <typename K>
std::optional<Form<K>> linear_factor_x(const Form<K>& f) {
  K one = f.lead_coeff().one_like();
  // f(-b y - g z, y, z): for each (y, z) monomial a polynomial in (b, g);
  // b is the outer variable, g the inner
  std::map<std::pair<int, int>, Poly<Poly<K>>> eqs;
  static const int binom3[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
  for (const auto& [m, c] : f.terms()) {
    for (int mm = 0; mm <= m[0]; ++mm) {
      K cc = k_times_int(c, binom3[m[0]][mm]);
      if (m[0] % 2 == 1) cc = -cc;
      if (cc.is_zero()) continue;
      auto key = std::make_pair(m[1] + mm, m[2] + m[0] - mm);  // (y-deg, z-deg)
      Poly<Poly<K>> term =
          Poly<Poly<K>>::monomial(Poly<K>::monomial(cc, m[0] - mm), mm);  // b^mm g^(i-mm)
      auto it = eqs.find(key);
      if (it == eqs.end())
        eqs.emplace(key, term);
      else
        it->second = it->second + term;
    }
  }
  std::vector<Poly<Poly<K>>> sys;
  for (const auto& [key, q] : eqs) {
    if (q.is_zero()) continue;
    if (q.degree() == 0 && q.coeff(0).degree() <= 0) return std::nullopt;  // constant obstruction
    sys.push_back(q);
  }
  if (sys.empty()) return std::nullopt;
  std::vector<Poly<K>> cands;
  detail::candidate_t_polys(sys, cands);
  std::vector<K> gvals;
  for (const auto& cpoly : cands)
    for (const auto& [r, mult] : roots_in_field(cpoly)) gvals.push_back(r);
  std::sort(gvals.begin(), gvals.end(), [](const K& x, const K& y) { return x.cmp(y) < 0; });
  gvals.erase(std::unique(gvals.begin(), gvals.end(),
                          [](const K& x, const K& y) { return x == y; }),
              gvals.end());
  for (const K& g0 : gvals) {
    Poly<K> bpoly;
    bool obstructed = false;
    for (const auto& q : sys) {
      Poly<K> sp = specialize_inner(q, g0);
      if (sp.is_zero()) continue;
      if (sp.degree() == 0) {
        obstructed = true;
        break;
      }
      bpoly = gcd_field(bpoly, sp);
    }
    if (obstructed || bpoly.degree() < 1) continue;
    for (const auto& [b0, mult] : roots_in_field(bpoly)) {
      Form<K> line = Form<K>::linear(one, b0, g0);
      if (form_try_divide(f, line).has_value()) return line;
    }
  }
  return std::nullopt;
}

// any monic linear factor of the cubic over K
template <typename K>
std::optional<Form<K>> rational_linear_factor(const Form<K>& f) {
  if (form_z_valuation(f) >= 1) {
    K one = f.lead_coeff().one_like();
    return Form<K>::linear(one.zero_like(), one.zero_like(), one);
  }
  if (auto l = linear_factor_y(f)) return l;
  return linear_factor_x(f);
}

}  // namespace detail

// Validates and wraps a cubic: degree exactly 3, no linear factor over K,
// smooth over the algebraic closure (decided, not sampled).
template <typename K>
CubicCurve<K> curve_new(const Form<K>& f) {
  check(f.degree() == 3, ErrorKind::NotDegree3,
        "curve form has degree " + std::to_string(f.degree()) + ", expected 3");
  if (auto line = detail::rational_linear_factor(f))
    raise(ErrorKind::Reducible, "curve has the linear factor " + line->str());
  CubicCurve<K> c{f, f.derivative(0), f.derivative(1), f.derivative(2)};
  // char 0 or p >= 7: 3F = x Fx + y Fy + z Fz, so common zeros of the
  // partials automatically lie on the curve
  auto cz = common_zeros<K>({c.fx, c.fy, c.fz});
  if (cz.positive_dimensional)
    raise(ErrorKind::Singular,
          "partials share the factor " + cz.common_factor.str());
  if (!cz.points.empty())
    raise(ErrorKind::Singular, "curve is singular at " + cz.points[0].str());
  if (cz.extension_zeros)
    raise(ErrorKind::Singular, "curve is singular over a proper extension of the base field");
  return c;
}

// ---------------------------------------------------------------------------
// tangency normalization and the contact quartic

template <typename K>
struct TangencyData {
  Mat3<K> m;               // columns: p, a point off the tangent, a second tangent point
  PlanePoint<K> second;    // that second tangent point (direction of near records)
  Form<K> f2, f3;          // binary forms in (y, z): F o M = x^2 y + x f2 + f3
  Form<K> quartic_form;    // disc(s, t) = f2^2 - 4 s f3 as a (y, z)-form
  BinaryForm<K> quartic;   // same, dehomogenized at z = 1
  bool inflexion = false;
};

template <typename K>
TangencyData<K> tangency_data(const CubicCurve<K>& c, const PlanePoint<K>& p) {
  require_on_curve(c, p);
  K one = c.f.lead_coeff().one_like();
  Form<K> tl = tangent_line(c, p);
  PlanePoint<K> q = second_point_on_line(tl, p);
  PlanePoint<K> r = point_off_line(tl);
  Mat3<K> m = Mat3<K>::from_columns(p.c, r.c, q.c);
  check(!m.det().is_zero(), ErrorKind::Internal, "tangency frame is degenerate");
  Form<K> g = form_linear_change(c.f, m);
  check(g.coeff(3, 0, 0).is_zero(), ErrorKind::Internal, "marked point left the curve");
  check(g.coeff(2, 0, 1).is_zero(), ErrorKind::Internal, "tangent direction lost");
  K lead = g.coeff(2, 1, 0);
  check(!lead.is_zero(), ErrorKind::Internal, "normalized cubic lost its x^2 y term");
  g = g.scaled(lead.inv());
  TangencyData<K> td{m, q, {}, {}, {}, {}, false};
  for (const auto& [mono, coeff] : g.terms()) {
    if (mono[0] == 1) td.f2.set_term(0, mono[1], mono[2], coeff);
    if (mono[0] == 0) td.f3.set_term(0, mono[1], mono[2], coeff);
  }
  Form<K> s = Form<K>::monomial(one, 0, 1, 0);
  td.quartic_form = td.f2 * td.f2 - (s * td.f3).scaled(detail::k_times_int(one, 4));
  check(!td.quartic_form.is_zero() && td.quartic_form.degree() == 4, ErrorKind::Internal,
        "tangency quartic degenerated");
  td.quartic.deg = 4;
  for (const auto& [mono, coeff] : td.quartic_form.terms())
    td.quartic.p = td.quartic.p + Poly<K>::monomial(coeff, mono[1]);
  // the curve restricted to its tangent: contact order at p decides inflexion
  td.inflexion = g.coeff(1, 0, 2).is_zero();
  check(!g.coeff(0, 0, 3).is_zero() || !td.inflexion, ErrorKind::Internal,
        "tangent line lies on the curve");
  // disc(0, 1) = f2(0, 1)^2, so the quartic vanishes at (0:1) iff inflexion
  check(td.quartic.p.coeff(0).is_zero() == td.inflexion, ErrorKind::Internal,
        "quartic constant term disagrees with inflexion test");
  // smooth cubic in char != 2: the four contact lines are always simple
  check(4 - td.quartic.p.degree() <= 1, ErrorKind::Internal, "multiple root at infinity");
  check(gcd_field(td.quartic.p, td.quartic.p.derivative()).degree() == 0, ErrorKind::Internal,
        "tangency quartic has a multiple root");
  return td;
}

template <typename K>
bool is_inflexion(const CubicCurve<K>& c, const PlanePoint<K>& p) {
  return tangency_data(c, p).inflexion;
}

// ---------------------------------------------------------------------------
// marked points: proper or infinitely near (first neighbourhood)

template <typename K>
struct OmegaPoint {
  PlanePoint<K> pt;   // the point itself, or the base of a near record
  bool near = false;
  PlanePoint<K> dir;  // near only: canonical second point of the tangent

  bool operator==(const OmegaPoint& o) const { return near == o.near && pt == o.pt; }
  // proper records first, then near; each block by point order
  bool operator<(const OmegaPoint& o) const {
    if (near != o.near) return !near;
    return pt < o.pt;
  }
  std::string str() const { return near ? "Near" + pt.str() : pt.str(); }
};

// The four marked successors of p: contact points of the tangent lines
// through p, with the inflexion direction recorded as an infinitely near
// point. Requires all four to be rational.
template <typename K>
std::vector<OmegaPoint<K>> successors_of(const CubicCurve<K>& c, const PlanePoint<K>& p) {
  TangencyData<K> td = tangency_data(c, p);
  K one = c.f.lead_coeff().one_like();
  auto roots = binary_roots(td.quartic, one);
  int found = 0;
  std::vector<OmegaPoint<K>> out;
  K two = detail::k_times_int(one, 2);
  for (const auto& rt : roots) {
    found += rt.mult;
    check(rt.mult == 1, ErrorKind::Internal, "tangency quartic root is not simple");
    if (rt.s.is_zero()) {
      // the tangent at p itself: p is an inflexion, successor infinitely near
      out.push_back(OmegaPoint<K>{p, true, td.second});
      continue;
    }
    K x0 = -td.f2.eval({one, rt.s, rt.t}).div(two * rt.s);
    auto v = td.m.apply({x0, rt.s, rt.t});
    PlanePoint<K> img = PlanePoint<K>::make(v[0], v[1], v[2]);
    check(on_curve(c, img), ErrorKind::Internal, "contact point left the curve");
    check(!(img == p), ErrorKind::Internal, "contact point collided with its source");
    out.push_back(OmegaPoint<K>{img, false, img});
  }
  check(found <= 4, ErrorKind::Internal, "tangency quartic has too many roots");
  if (found < 4)
    raise(ErrorKind::QuarticNotSplit,
          "only " + std::to_string(found) + " of 4 contact lines are rational at " + p.str());
  std::sort(out.begin(), out.end());
  return out;
}

// a > b in the tangency order: b proper and the tangent at b passes
// through a, or b infinitely near with base a
template <typename K>
bool succ_related(const CubicCurve<K>& c, const OmegaPoint<K>& a, const OmegaPoint<K>& b) {
  if (a.near) return false;  // near records are never sources
  if (b.near) return a.pt == b.pt;
  if (a.pt == b.pt) return false;
  return tangent_line(c, b.pt).eval(a.pt.c).is_zero();
}

// ---------------------------------------------------------------------------
// marked point sets

template <typename K>
struct MarkedPointSet {
  CubicCurve<K> curve;
  std::vector<OmegaPoint<K>> omega;     // sorted; proper block then near block
  std::vector<int> generators;          // indices into omega
  std::vector<std::vector<bool>> succ;  // succ[a][b]
  MarkedConfig config;                  // validated combinatorial shadow
};

template <typename K>
MarkedPointSet<K> marked_set_build(const CubicCurve<K>& c,
                                   const std::vector<PlanePoint<K>>& gens) {
  check(!gens.empty(), ErrorKind::InvalidArgument, "no generator points given");
  for (std::size_t i = 0; i < gens.size(); ++i) {
    check(on_curve(c, gens[i]), ErrorKind::GeneratorOffCurve,
          "generator " + gens[i].str() + " is not on the curve");
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      check(!(gens[i] == gens[j]), ErrorKind::DuplicateGenerator,
            "generator " + gens[i].str() + " appears twice");
  }
  std::vector<OmegaPoint<K>> omega;
  auto insert = [&omega](const OmegaPoint<K>& op) {
    for (const auto& existing : omega)
      if (existing == op) return;
    omega.push_back(op);
  };
  std::vector<std::vector<OmegaPoint<K>>> succ_lists;
  for (const auto& g : gens) insert(OmegaPoint<K>{g, false, g});
  for (const auto& g : gens) {
    auto sl = successors_of(c, g);
    for (const auto& s : sl) insert(s);
    succ_lists.push_back(sl);
  }
  std::sort(omega.begin(), omega.end());
  auto index_of = [&omega](const OmegaPoint<K>& op) {
    for (std::size_t i = 0; i < omega.size(); ++i)
      if (omega[i] == op) return static_cast<int>(i);
    raise(ErrorKind::Internal, "marked point lost during assembly");
  };
  MarkedPointSet<K> ms{c, omega, {}, {}, {}};
  for (const auto& g : gens) ms.generators.push_back(index_of(OmegaPoint<K>{g, false, g}));
  const int n = static_cast<int>(omega.size());
  ms.succ.assign(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b)
        ms.succ[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
            succ_related(c, omega[static_cast<std::size_t>(a)], omega[static_cast<std::size_t>(b)]);
  // the quartic successors and the relation must agree on each generator
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    std::vector<int> via_rel;
    int ga = ms.generators[gi];
    for (int b = 0; b < n; ++b)
      if (ms.succ[static_cast<std::size_t>(ga)][static_cast<std::size_t>(b)]) via_rel.push_back(b);
    std::vector<int> via_quartic;
    for (const auto& s : succ_lists[gi]) via_quartic.push_back(index_of(s));
    std::sort(via_quartic.begin(), via_quartic.end());
    check(via_rel == via_quartic, ErrorKind::Internal,
          "tangency relation disagrees with the contact quartic at " + gens[gi].str());
  }
  ms.config.n = n;
  for (int i = 0; i < n; ++i) {
    const auto& op = omega[static_cast<std::size_t>(i)];
    ms.config.names.push_back(op.str());
    ms.config.near_base.push_back(op.near ? index_of(OmegaPoint<K>{op.pt, false, op.pt}) : -1);
  }
  ms.config.succ = ms.succ;
  ms.config.generators = ms.generators;
  try {
    ms.config.validate();
  } catch (const Error& e) {
    // geometric builds satisfy the structural invariants by theorem
    raise(ErrorKind::Internal, std::string("geometric invariant failed: ") + e.what());
  }
  return ms;
}

}  // namespace cremona

#endif  // CREMONA_CURVE_HPP
