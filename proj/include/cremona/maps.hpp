// Rational maps of the plane as exact form triples: construction of the
// cubic involutions and their pencil relatives, composition with content
// tracking, base-point analysis with depth-1 infinitely near detection,
// and the verification predicates for curve-fixing maps.
#ifndef CREMONA_MAPS_HPP
#define CREMONA_MAPS_HPP

#include <array>
#include <climits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "curve.hpp"
#include "elimination.hpp"
#include "errors.hpp"
#include "form.hpp"
#include "linalg.hpp"
#include "roots.hpp"

namespace cremona {

// Components share one degree, carry no common factor, and the first
// nonzero component is monic, so equality of normalized maps is syntactic.
template <typename K>
struct RationalMap {
  std::array<Form<K>, 3> comp;

  int degree() const {
    for (const auto& f : comp)
      if (!f.is_zero()) return f.degree();
    return -1;
  }
  std::string str() const {
    return "(" + comp[0].str() + " : " + comp[1].str() + " : " + comp[2].str() + ")";
  }
};

namespace detail {

template <typename K>
void normalize_map_scale(std::array<Form<K>, 3>& c) {
  for (const auto& f : c)
    if (!f.is_zero()) {
      K s = f.lead_coeff().inv();
      for (auto& g : c) g = g.scaled(s);
      return;
    }
}

}  // namespace detail

template <typename K>
RationalMap<K> map_new(const Form<K>& p1, const Form<K>& p2, const Form<K>& p3) {
  std::array<Form<K>, 3> c{p1, p2, p3};
  int d = -1;
  std::vector<Form<K>> nz;
  for (const auto& f : c)
    if (!f.is_zero()) {
      check(d < 0 || f.degree() == d, ErrorKind::DegreeMismatch,
            "component degrees " + std::to_string(d) + " and " + std::to_string(f.degree()) +
                " differ");
      d = f.degree();
      nz.push_back(f);
    }
  check(d >= 0, ErrorKind::ZeroMap, "all three components are zero");
  Form<K> content = form_gcd(nz);
  if (content.degree() >= 1)
    for (auto& f : c)
      if (!f.is_zero()) f = form_divexact(f, content);
  detail::normalize_map_scale(c);
  return RationalMap<K>{c};
}

template <typename K>
RationalMap<K> identity_map(const K& one) {
  return map_new(Form<K>::monomial(one, 1, 0, 0), Form<K>::monomial(one, 0, 1, 0),
                 Form<K>::monomial(one, 0, 0, 1));
}

// image of a point, or nothing when the point is a base point
template <typename K>
std::optional<PlanePoint<K>> map_apply(const RationalMap<K>& m, const PlanePoint<K>& p) {
  K a = m.comp[0].is_zero() ? K{} : m.comp[0].eval(p.c);
  K b = m.comp[1].is_zero() ? K{} : m.comp[1].eval(p.c);
  K c = m.comp[2].is_zero() ? K{} : m.comp[2].eval(p.c);
  if (a.is_zero() && b.is_zero() && c.is_zero()) return std::nullopt;
  return PlanePoint<K>::make(a, b, c);
}

// projective equality via vanishing of all cross products
template <typename K>
bool map_equal(const RationalMap<K>& f, const RationalMap<K>& g) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(f.comp[i] * g.comp[j] - f.comp[j] * g.comp[i]).is_zero()) return false;
  return true;
}

template <typename K>
struct Composition {
  RationalMap<K> map;
  Form<K> content;  // monic common factor removed during reduction
};

// f after g; the removed content witnesses any degree drop
template <typename K>
Composition<K> map_compose_full(const RationalMap<K>& f, const RationalMap<K>& g) {
  std::array<Form<K>, 3> raw;
  for (int i = 0; i < 3; ++i)
    raw[i] = f.comp[i].is_zero()
                 ? Form<K>{}
                 : form_substitute(f.comp[i], g.comp[0], g.comp[1], g.comp[2]);
  std::vector<Form<K>> nz;
  for (const auto& h : raw)
    if (!h.is_zero()) nz.push_back(h);
  check(!nz.empty(), ErrorKind::ComposedToZero,
        "the image of the inner map lies in the zero set of every outer component");
  Form<K> content = form_gcd(nz);
  if (content.degree() >= 1)
    for (auto& h : raw)
      if (!h.is_zero()) h = form_divexact(h, content);
  detail::normalize_map_scale(raw);
  return Composition<K>{RationalMap<K>{raw}, content};
}

template <typename K>
RationalMap<K> map_compose(const RationalMap<K>& f, const RationalMap<K>& g) {
  return map_compose_full(f, g).map;
}

// ---------------------------------------------------------------------------
// inertia predicates

namespace detail {

template <typename K>
std::array<Form<K>, 3> inertia_cross_products(const RationalMap<K>& phi) {
  K one = phi.comp[phi.comp[0].is_zero() ? (phi.comp[1].is_zero() ? 2 : 1) : 0]
              .lead_coeff()
              .one_like();
  Form<K> x = Form<K>::monomial(one, 1, 0, 0);
  Form<K> y = Form<K>::monomial(one, 0, 1, 0);
  Form<K> z = Form<K>::monomial(one, 0, 0, 1);
  return {x * phi.comp[1] - y * phi.comp[0], x * phi.comp[2] - z * phi.comp[0],
          y * phi.comp[2] - z * phi.comp[1]};
}

}  // namespace detail

// the map restricted to the curve is the identity: the curve form divides
// every cross product of coordinates with components
template <typename K>
bool fixes_curve(const RationalMap<K>& phi, const CubicCurve<K>& c) {
  for (const auto& cp : detail::inertia_cross_products(phi))
    if (!cp.is_zero() && !form_try_divide(cp, c.f).has_value()) return false;
  return true;
}

// the curve maps into itself: F divides F(P1, P2, P3)
template <typename K>
bool preserves_curve(const RationalMap<K>& phi, const CubicCurve<K>& c) {
  Form<K> fo = form_substitute(c.f, phi.comp[0], phi.comp[1], phi.comp[2]);
  if (fo.is_zero()) return true;
  return form_try_divide(fo, c.f).has_value();
}

// exact quotients of the cross products by the curve form; for a
// curve-fixing map of degree d these have degree d - 2, which forces d >= 3
// for any such map other than the identity
template <typename K>
std::array<Form<K>, 3> degfix_quotients(const RationalMap<K>& phi, const CubicCurve<K>& c) {
  check(fixes_curve(phi, c), ErrorKind::NotInInertia,
        "map does not fix the curve pointwise");
  auto cps = detail::inertia_cross_products(phi);
  std::array<Form<K>, 3> q;
  for (int i = 0; i < 3; ++i)
    q[i] = cps[static_cast<std::size_t>(i)].is_zero()
               ? Form<K>{}
               : form_divexact(cps[static_cast<std::size_t>(i)], c.f);
  return q;
}

// ---------------------------------------------------------------------------
// the cubic involution centred at a curve point

// In the tangency frame the curve is x^2 y + x f2(y,z) + f3(y,z); on each
// line through the centre the residual quadratic is y u^2 + f2 u + f3, and
// the involution swapping its roots is (f2 x + 2 f3 : -y (2xy + f2) :
// -z (2xy + f2)). Degree 3, squaring to the identity, and fixing the curve
// are verified on every construction.
template <typename K>
RationalMap<K> sigma(const CubicCurve<K>& c, const PlanePoint<K>& p) {
  TangencyData<K> td = tangency_data(c, p);
  K one = c.f.lead_coeff().one_like();
  K two = detail::k_times_int(one, 2);
  Form<K> x = Form<K>::monomial(one, 1, 0, 0);
  Form<K> y = Form<K>::monomial(one, 0, 1, 0);
  Form<K> z = Form<K>::monomial(one, 0, 0, 1);
  Form<K> core = (x * y).scaled(two) + td.f2;
  std::array<Form<K>, 3> s{td.f2 * x + td.f3.scaled(two), (y * core).scaled(-one),
                           (z * core).scaled(-one)};
  Mat3<K> minv = td.m.inverse();
  std::array<Form<K>, 3> t;
  for (int j = 0; j < 3; ++j) t[static_cast<std::size_t>(j)] = form_linear_change(s[static_cast<std::size_t>(j)], minv);
  std::array<Form<K>, 3> comp;
  for (int i = 0; i < 3; ++i) {
    Form<K> acc;
    for (int j = 0; j < 3; ++j)
      acc = acc + t[static_cast<std::size_t>(j)].scaled(td.m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    comp[static_cast<std::size_t>(i)] = acc;
  }
  RationalMap<K> out = map_new(comp[0], comp[1], comp[2]);
  check(out.degree() == 3, ErrorKind::Internal, "cubic involution lost degree in reduction");
  check(fixes_curve(out, c), ErrorKind::Internal, "cubic involution moved a curve point");
  auto sq = map_compose_full(out, out);
  check(map_equal(sq.map, identity_map(one)), ErrorKind::Internal,
        "cubic involution failed to square to the identity");
  return out;
}

// ---------------------------------------------------------------------------
// base points

template <typename K>
struct BasePointRecord {
  OmegaPoint<K> location;
  int multiplicity = 0;
};

namespace detail {

// invertible frame whose third column is p
template <typename K>
Mat3<K> point_frame(const PlanePoint<K>& p) {
  K one{};
  for (int i = 0; i < 3; ++i)
    if (!p.c[static_cast<std::size_t>(i)].is_zero()) one = p.c[static_cast<std::size_t>(i)].one_like();
  auto sp = standard_points<K>(one);
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) {
      Mat3<K> m = Mat3<K>::from_columns(sp[static_cast<std::size_t>(i)].c, sp[static_cast<std::size_t>(j)].c, p.c);
      if (!m.det().is_zero()) return m;
    }
  raise(ErrorKind::Internal, "no standard frame for point " + p.str());
}

// vanishing order at (0:0:1) of a homogeneous form
template <typename K>
int origin_order(const Form<K>& g) {
  check(!g.is_zero(), ErrorKind::Internal, "vanishing order of the zero form");
  int m = INT_MAX;
  for (const auto& [mono, c] : g.terms()) m = std::min(m, mono[0] + mono[1]);
  return m;
}

// restriction to the exceptional line of the strict transform at level m:
// chart (x, y) = (u, uv) keeps v-exponent mono[1], chart (uv, u) keeps mono[0]
template <typename K>
Poly<K> exceptional_restriction(const Form<K>& g, int m, bool second_chart) {
  Poly<K> e;
  for (const auto& [mono, c] : g.terms())
    if (mono[0] + mono[1] == m)
      e = e + Poly<K>::monomial(c, second_chart ? mono[0] : mono[1]);
  return e;
}

// multiplicity at (u, v) = (0, v0) of the strict transform of g at level m
template <typename K>
int chart_multiplicity(const Form<K>& g, int m, const K& v0, bool second_chart) {
  K one = v0.one_like();
  std::map<std::pair<int, int>, K> acc;
  for (const auto& [mono, c] : g.terms()) {
    int ua = mono[0] + mono[1] - m;
    int vb = second_chart ? mono[0] : mono[1];
    std::vector<K> pw{one};
    for (int i = 1; i <= vb; ++i) pw.push_back(pw.back() * v0);
    K binom = one;
    for (int k = 0; k <= vb; ++k) {
      K add = c * binom * pw[static_cast<std::size_t>(vb - k)];
      auto key = std::make_pair(ua, k);
      auto it = acc.find(key);
      if (it == acc.end())
        acc.emplace(key, add);
      else
        it->second = it->second + add;
      if (k < vb) binom = binom * k_times_int(one, vb - k).div(k_times_int(one, k + 1));
    }
  }
  int best = INT_MAX;
  for (const auto& [key, c] : acc)
    if (!c.is_zero()) best = std::min(best, key.first + key.second);
  check(best < INT_MAX, ErrorKind::Internal, "strict transform vanished identically");
  return best;
}

}  // namespace detail

// multiplicity of the linear system at a point (0 when not a base point)
template <typename K>
int multiplicity_at(const RationalMap<K>& phi, const PlanePoint<K>& p) {
  Mat3<K> fr = detail::point_frame(p);
  int m = INT_MAX;
  for (const auto& f : phi.comp)
    if (!f.is_zero()) m = std::min(m, detail::origin_order(form_linear_change(f, fr)));
  return m;
}

// All base points over the base field, each with the minimum vanishing
// order of the components, plus depth-1 infinitely near base points found
// by blow-up in both charts. Deeper infinitely near points are out of
// scope and surface as homaloidal deficits.
template <typename K>
std::vector<BasePointRecord<K>> proper_base_points(const RationalMap<K>& phi) {
  std::vector<Form<K>> sys;
  for (const auto& f : phi.comp)
    if (!f.is_zero()) sys.push_back(f);
  auto cz = common_zeros(sys);
  check(!cz.positive_dimensional, ErrorKind::Internal,
        "content-free components share the curve " + cz.common_factor.str());
  check(!cz.extension_zeros, ErrorKind::BasePointsNotRational,
        "the map has base points over a proper extension of the base field");
  std::vector<BasePointRecord<K>> out;
  for (const auto& q : cz.points) {
    Mat3<K> fr = detail::point_frame(q);
    K one = fr.det().one_like();
    K zero = one.zero_like();
    std::vector<Form<K>> local;
    for (const auto& f : phi.comp)
      if (!f.is_zero()) local.push_back(form_linear_change(f, fr));
    int m = INT_MAX;
    for (const auto& g : local) m = std::min(m, detail::origin_order(g));
    check(m >= 1, ErrorKind::Internal, "common zero with vanishing order zero");
    out.push_back(BasePointRecord<K>{OmegaPoint<K>{q, false, q}, m});
    // chart (u, uv): directions (1 : v0)
    Poly<K> gc;
    for (const auto& g : local) gc = gcd_field(gc, detail::exceptional_restriction(g, m, false));
    check(!gc.is_zero(), ErrorKind::Internal, "every exceptional restriction vanished");
    if (gc.degree() >= 1) {
      auto rts = roots_in_field(gc);
      int found = 0;
      for (const auto& [r, mu] : rts) found += mu;
      check(found == gc.degree(), ErrorKind::BasePointsNotRational,
            "infinitely near base points over a proper extension at " + q.str());
      for (const auto& [v0, mu] : rts) {
        int nm = INT_MAX;
        for (const auto& g : local)
          nm = std::min(nm, detail::chart_multiplicity(g, m, v0, false));
        check(nm >= 1, ErrorKind::Internal, "near direction without a near base point");
        auto dv = fr.apply({one, v0, zero});
        out.push_back(BasePointRecord<K>{
            OmegaPoint<K>{q, true, PlanePoint<K>::make(dv[0], dv[1], dv[2])}, nm});
      }
    }
    // chart (uv, u): only the direction (0 : 1) is new
    bool dir01 = true;
    for (const auto& g : local)
      if (!detail::exceptional_restriction(g, m, true).coeff(0).is_zero()) {
        dir01 = false;
        break;
      }
    if (dir01) {
      int nm = INT_MAX;
      for (const auto& g : local)
        nm = std::min(nm, detail::chart_multiplicity(g, m, zero, true));
      check(nm >= 1, ErrorKind::Internal, "near direction without a near base point");
      auto dv = fr.apply({zero, one, zero});
      out.push_back(BasePointRecord<K>{
          OmegaPoint<K>{q, true, PlanePoint<K>::make(dv[0], dv[1], dv[2])}, nm});
    }
  }
  std::sort(out.begin(), out.end(), [](const BasePointRecord<K>& a, const BasePointRecord<K>& b) {
    if (a.location.near != b.location.near) return !a.location.near;
    int s = a.location.pt.cmp(b.location.pt);
    if (s != 0) return s < 0;
    return a.location.dir.cmp(b.location.dir) < 0;
  });
  return out;
}

// ---------------------------------------------------------------------------
// homaloidal bookkeeping

template <typename K>
struct HomaloidalReport {
  int degree = 0;
  std::vector<BasePointRecord<K>> records;
  long sum_k = 0, sum_k2 = 0;
  long deficit_k = 0, deficit_k2 = 0;  // (3d-3) - sum_k, (d^2-1) - sum_k2
  std::optional<bool> small_degree_pattern_ok;  // set for 1 <= degree <= 3

  bool complete() const { return deficit_k == 0 && deficit_k2 == 0; }
};

template <typename K>
HomaloidalReport<K> homaloidal_check(const RationalMap<K>& phi) {
  HomaloidalReport<K> r;
  r.degree = phi.degree();
  r.records = proper_base_points(phi);
  for (const auto& rec : r.records) {
    r.sum_k += rec.multiplicity;
    r.sum_k2 += static_cast<long>(rec.multiplicity) * rec.multiplicity;
  }
  long d = r.degree;
  r.deficit_k = (3 * d - 3) - r.sum_k;
  r.deficit_k2 = (d * d - 1) - r.sum_k2;
  if (d >= 1 && d <= 3) {
    std::vector<int> ks;
    for (const auto& rec : r.records) ks.push_back(rec.multiplicity);
    std::sort(ks.begin(), ks.end());
    static const std::vector<std::vector<int>> want{{}, {1, 1, 1}, {1, 1, 1, 1, 2}};
    r.small_degree_pattern_ok = (ks == want[static_cast<std::size_t>(d - 1)]);
  }
  return r;
}

// ---------------------------------------------------------------------------
// curve-fixing cubics from a conic through four points

namespace detail {

// (y, z)-part of f at the given x-exponent, with the x-exponent dropped
template <typename K>
Form<K> x_slice(const Form<K>& f, int i) {
  Form<K> out;
  for (const auto& [mono, c] : f.terms())
    if (mono[0] == i) out.set_term(0, mono[1], mono[2], c);
  return out;
}

}  // namespace detail

// Normalized position: the first point at (1:0:0) with tangent {y = 0}, so
// the curve is x^2 y + x f2 + f3 and the conic is x y + g2. The map
// (xG - F : yG : zG) fixes the curve and is singular at the first point;
// it is birational exactly when (g2 - f2) g2 + y f3 is nonzero.
template <typename K>
RationalMap<K> cubic4pts(const CubicCurve<K>& c, const std::array<PlanePoint<K>, 4>& pts,
                         const Form<K>& g) {
  K one = c.f.lead_coeff().one_like();
  K zero = one.zero_like();
  check(c.f.coeff(3, 0, 0).is_zero() && c.f.coeff(2, 1, 0) == one &&
            c.f.coeff(2, 0, 1).is_zero(),
        ErrorKind::NormalizationViolated, "curve is not in the x^2 y + x f2 + f3 frame");
  check(g.degree() == 2 && g.coeff(2, 0, 0).is_zero() && g.coeff(1, 1, 0) == one &&
            g.coeff(1, 0, 1).is_zero(),
        ErrorKind::NormalizationViolated, "conic is not in the x y + g2 frame");
  PlanePoint<K> p1 = PlanePoint<K>::make(one, zero, zero);
  check(pts[0] == p1, ErrorKind::NormalizationViolated, "first point must be (1 : 0 : 0)");
  for (const auto& p : pts) {
    require_on_curve(c, p);
    check(g.eval(p.c).is_zero(), ErrorKind::InvalidArgument,
          "conic misses the point " + p.str());
  }
  Form<K> f2 = detail::x_slice(c.f, 1);
  Form<K> f3 = detail::x_slice(c.f, 0);
  Form<K> g2 = detail::x_slice(g, 0);
  Form<K> y = Form<K>::monomial(one, 0, 1, 0);
  Form<K> det = (g2 - f2) * g2 + y * f3;
  check(!det.is_zero(), ErrorKind::NotBirational,
        "conic and curve share their residual intersection on every line");
  Form<K> x = Form<K>::monomial(one, 1, 0, 0);
  Form<K> z = Form<K>::monomial(one, 0, 0, 1);
  RationalMap<K> out = map_new(x * g - c.f, y * g, z * g);
  check(out.degree() == 3, ErrorKind::Internal, "conic construction lost degree");
  check(fixes_curve(out, c), ErrorKind::Internal, "conic construction moved a curve point");
  check(multiplicity_at(out, p1) == 2, ErrorKind::Internal,
        "conic construction is not singular at the marked point");
  return out;
}

// ---------------------------------------------------------------------------
// the pencil construction: one Moebius map per line through p

// On each line through p the curve leaves a residual quadratic
// a t^2 + b t + c and the auxiliary curve (multiplicity d-1 at p) leaves a
// single residual root t0; the unique Moebius map fixing the quadratic's
// roots and sending t0 to p has matrix ((a t0 + b, c), (-a, a t0)). The
// auxiliary curve with multiplicity d at p is rejected, as is the
// degenerate pencil where t0 meets a fixed root on every line.
template <typename K>
RationalMap<K> pencil_map(const CubicCurve<K>& c, const PlanePoint<K>& p, const Form<K>& cd) {
  require_on_curve(c, p);
  int d = cd.degree();
  check(d >= 1, ErrorKind::InvalidArgument, "auxiliary curve must have positive degree");
  Form<K> tl = tangent_line(c, p);
  PlanePoint<K> q2 = second_point_on_line(tl, p);
  PlanePoint<K> r = point_off_line(tl);
  Mat3<K> m = Mat3<K>::from_columns(p.c, r.c, q2.c);
  check(!m.det().is_zero(), ErrorKind::Internal, "pencil frame is degenerate");
  Form<K> fn = form_linear_change(c.f, m);
  check(fn.coeff(3, 0, 0).is_zero(), ErrorKind::Internal, "marked point left the curve");
  Form<K> a = detail::x_slice(fn, 2);
  Form<K> b = detail::x_slice(fn, 1);
  Form<K> cf = detail::x_slice(fn, 0);
  check(!a.is_zero(), ErrorKind::Internal, "residual quadratic lost its leading form");
  Form<K> cdn = form_linear_change(cd, m);
  int xdeg = 0;
  for (const auto& [mono, coef] : cdn.terms()) xdeg = std::max(xdeg, mono[0]);
  check(xdeg == 1, ErrorKind::WrongMultiplicity,
        "auxiliary curve has multiplicity " + std::to_string(d - xdeg) + " at " + p.str() +
            ", expected " + std::to_string(d - 1));
  Form<K> u = detail::x_slice(cdn, 1);
  Form<K> v = detail::x_slice(cdn, 0);
  Form<K> disc = a * v * v - b * u * v + cf * u * u;
  check(!disc.is_zero(), ErrorKind::DegenerateConfiguration,
        "moved point coincides with a fixed point on every line");
  K one = c.f.lead_coeff().one_like();
  Form<K> x = Form<K>::monomial(one, 1, 0, 0);
  Form<K> y = Form<K>::monomial(one, 0, 1, 0);
  Form<K> z = Form<K>::monomial(one, 0, 0, 1);
  Form<K> line = u * x + v;
  std::array<Form<K>, 3> s{(a * v - b * u) * x - cf * u, y * (a * line), z * (a * line)};
  Mat3<K> minv = m.inverse();
  std::array<Form<K>, 3> t;
  for (int j = 0; j < 3; ++j) t[static_cast<std::size_t>(j)] = form_linear_change(s[static_cast<std::size_t>(j)], minv);
  std::array<Form<K>, 3> comp;
  for (int i = 0; i < 3; ++i) {
    Form<K> acc;
    for (int j = 0; j < 3; ++j)
      acc = acc + t[static_cast<std::size_t>(j)].scaled(m.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    comp[static_cast<std::size_t>(i)] = acc;
  }
  RationalMap<K> out = map_new(comp[0], comp[1], comp[2]);
  check(fixes_curve(out, c), ErrorKind::Internal, "pencil construction moved a curve point");
  return out;
}

// ---------------------------------------------------------------------------
// base points of curve-preserving maps lie on the curve

template <typename K>
struct DecompositionCheckReport {
  std::vector<BasePointRecord<K>> records;
  std::vector<std::string> violations;

  bool ok() const { return violations.empty(); }
};

template <typename K>
DecompositionCheckReport<K> decomposition_candidate_check(const RationalMap<K>& phi,
                                                          const CubicCurve<K>& c) {
  check(preserves_curve(phi, c), ErrorKind::InvalidArgument,
        "map does not preserve the curve");
  DecompositionCheckReport<K> rep;
  rep.records = proper_base_points(phi);
  for (const auto& rec : rep.records) {
    if (!rec.location.near) {
      if (!on_curve(c, rec.location.pt))
        rep.violations.push_back("base point " + rec.location.pt.str() + " is off the curve");
      continue;
    }
    if (!on_curve(c, rec.location.pt)) {
      rep.violations.push_back("near base point over " + rec.location.pt.str() +
                               " has its base off the curve");
      continue;
    }
    Form<K> dirline = line_through(rec.location.pt, rec.location.dir);
    if (!(dirline == tangent_line(c, rec.location.pt)))
      rep.violations.push_back("near base point over " + rec.location.pt.str() +
                               " points away from the tangent");
  }
  return rep;
}

}  // namespace cremona

#endif  // CREMONA_MAPS_HPP
