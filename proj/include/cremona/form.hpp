// Homogeneous trivariate forms over an exact field, with the graded-lex
// term order x > y > z used everywhere for leading coefficients and
// deterministic printing. The zero form is degree-polymorphic (degree -1).
#ifndef CREMONA_FORM_HPP
#define CREMONA_FORM_HPP

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "errors.hpp"
#include "linalg.hpp"
#include "poly.hpp"

namespace cremona {

using Mono = std::array<int, 3>;

inline int mono_total(const Mono& m) { return m[0] + m[1] + m[2]; }

// Graded-lex descending: higher total degree first, then bigger x, then y.
struct MonoBefore {
  bool operator()(const Mono& a, const Mono& b) const {
    int da = mono_total(a), db = mono_total(b);
    if (da != db) return da > db;
    return a > b;
  }
};

template <typename K>
class Form {
 public:
  using TermMap = std::map<Mono, K, MonoBefore>;

  Form() = default;

  static Form monomial(const K& c, int i, int j, int k) {
    check(i >= 0 && j >= 0 && k >= 0, ErrorKind::InvalidArgument, "negative exponent");
    Form f;
    if (!c.is_zero()) f.t_.emplace(Mono{i, j, k}, c);
    return f;
  }
  static Form linear(const K& a, const K& b, const K& c) {
    Form f = monomial(a, 1, 0, 0);
    f = f + monomial(b, 0, 1, 0);
    f = f + monomial(c, 0, 0, 1);
    return f;
  }

  bool is_zero() const { return t_.empty(); }
  int degree() const { return t_.empty() ? -1 : mono_total(t_.begin()->first); }
  std::size_t term_count() const { return t_.size(); }
  const TermMap& terms() const { return t_; }

  // Leading (graded-lex greatest) term.
  const Mono& lead_mono() const {
    check(!t_.empty(), ErrorKind::Internal, "lead of zero form");
    return t_.begin()->first;
  }
  const K& lead_coeff() const {
    check(!t_.empty(), ErrorKind::Internal, "lead of zero form");
    return t_.begin()->second;
  }

  K coeff(int i, int j, int k) const {
    auto it = t_.find(Mono{i, j, k});
    if (it == t_.end()) return t_.empty() ? K{} : t_.begin()->second.zero_like();
    return it->second;
  }

  void set_term(int i, int j, int k, const K& c) {
    check(i >= 0 && j >= 0 && k >= 0, ErrorKind::InvalidArgument, "negative exponent");
    Mono m{i, j, k};
    if (c.is_zero())
      t_.erase(m);
    else
      t_[m] = c;
    assert_homogeneous();
  }

  Form operator-() const {
    Form r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
  }
  Form operator+(const Form& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    check(degree() == o.degree(), ErrorKind::DegreeMismatch, "adding forms of different degrees");
    Form r = *this;
    for (const auto& [m, c] : o.t_) {
      auto it = r.t_.find(m);
      if (it == r.t_.end()) {
        r.t_.emplace(m, c);
      } else {
        it->second = it->second + c;
        if (it->second.is_zero()) r.t_.erase(it);
      }
    }
    return r;
  }
  Form operator-(const Form& o) const { return *this + (-o); }
  Form operator*(const Form& o) const {
    Form r;
    if (is_zero() || o.is_zero()) return r;
    for (const auto& [ma, ca] : t_)
      for (const auto& [mb, cb] : o.t_) {
        Mono m{ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
        K prod = ca * cb;
        auto it = r.t_.find(m);
        if (it == r.t_.end()) {
          if (!prod.is_zero()) r.t_.emplace(m, prod);
        } else {
          it->second = it->second + prod;
          if (it->second.is_zero()) r.t_.erase(it);
        }
      }
    return r;
  }
  bool operator==(const Form& o) const {
    if (t_.size() != o.t_.size()) return false;
    auto ia = t_.begin();
    auto ib = o.t_.begin();
    for (; ia != t_.end(); ++ia, ++ib)
      if (ia->first != ib->first || !(ia->second == ib->second)) return false;
    return true;
  }
  bool operator!=(const Form& o) const { return !(*this == o); }

  Form scaled(const K& c) const {
    Form r;
    if (c.is_zero()) return r;
    for (const auto& [m, cf] : t_) r.t_.emplace(m, cf * c);
    return r;
  }

  // Scales so the graded-lex leading coefficient is 1.
  Form monic() const {
    if (is_zero()) return *this;
    return scaled(lead_coeff().inv());
  }

  K eval(const std::array<K, 3>& p) const {
    K zero = p[0].zero_like();
    if (is_zero()) return zero;
    int d = degree();
    std::array<std::vector<K>, 3> pw;
    for (int v = 0; v < 3; ++v) {
      pw[v].reserve(static_cast<std::size_t>(d) + 1);
      pw[v].push_back(p[v].one_like());
      for (int e = 1; e <= d; ++e) pw[v].push_back(pw[v].back() * p[v]);
    }
    K acc = zero;
    for (const auto& [m, c] : t_) acc = acc + c * pw[0][m[0]] * pw[1][m[1]] * pw[2][m[2]];
    return acc;
  }

  Form derivative(int var) const {
    check(var >= 0 && var < 3, ErrorKind::InvalidArgument, "derivative variable out of range");
    Form r;
    for (const auto& [m, c] : t_) {
      if (m[var] == 0) continue;
      K cc = scalar_times_int(c, m[var]);
      if (cc.is_zero()) continue;  // characteristic p can kill terms
      Mono mm = m;
      --mm[var];
      r.t_.emplace(mm, cc);
    }
    return r;
  }

  Form pow(int e) const {
    check(e >= 0, ErrorKind::InvalidArgument, "negative form power");
    if (e == 0) {
      check(!is_zero(), ErrorKind::InvalidArgument, "zero form to power zero");
      return monomial(lead_coeff().one_like(), 0, 0, 0);
    }
    Form r = *this;
    for (int i = 1; i < e; ++i) r = r * (*this);
    return r;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : t_) {
      std::string cs = c.str();
      if (!first) {
        if (!cs.empty() && cs[0] == '-') {
          s += " - ";
          cs = cs.substr(1);
        } else {
          s += " + ";
        }
      }
      first = false;
      std::string vars;
      static const char* names[3] = {"x", "y", "z"};
      for (int v = 0; v < 3; ++v) {
        if (m[v] == 0) continue;
        if (!vars.empty()) vars += "*";
        vars += names[v];
        if (m[v] > 1) vars += "^" + std::to_string(m[v]);
      }
      if (vars.empty()) {
        s += cs;
      } else if (cs == "1") {
        s += vars;
      } else {
        s += cs + "*" + vars;
      }
    }
    return s;
  }

 private:
  static K scalar_times_int(const K& c, int n) {
    K acc = c.zero_like();
    for (int i = 0; i < n; ++i) acc = acc + c;
    return acc;
  }
  void assert_homogeneous() const {
    if (t_.empty()) return;
    int d = mono_total(t_.begin()->first);
    for (const auto& [m, c] : t_)
      check(mono_total(m) == d, ErrorKind::Internal, "form not homogeneous");
  }

  TermMap t_;
};

// f / g by leading-term division; exact iff the remainder vanishes.
template <typename K>
std::optional<Form<K>> form_try_divide(const Form<K>& f, const Form<K>& g,
                                       Form<K>* remainder_out = nullptr) {
  check(!g.is_zero(), ErrorKind::DivisionByZero, "form division by zero");
  Form<K> rem = f, quot;
  const Mono& gl = g.lead_mono();
  K glc_inv = g.lead_coeff().inv();
  while (!rem.is_zero()) {
    const Mono& rl = rem.lead_mono();
    if (rl[0] < gl[0] || rl[1] < gl[1] || rl[2] < gl[2]) break;
    Form<K> t = Form<K>::monomial(rem.lead_coeff() * glc_inv, rl[0] - gl[0], rl[1] - gl[1],
                                  rl[2] - gl[2]);
    quot = quot + t;
    rem = rem - t * g;
  }
  if (!rem.is_zero()) {
    if (remainder_out) *remainder_out = rem;
    return std::nullopt;
  }
  return quot;
}

template <typename K>
Form<K> form_divexact(const Form<K>& f, const Form<K>& g) {
  Form<K> rem;
  auto q = form_try_divide(f, g, &rem);
  check(q.has_value(), ErrorKind::NonDivisible,
        "form division is not exact; remainder " + rem.str());
  return *q;
}

// Largest e with z^e | f (f nonzero), and the cofactor.
template <typename K>
int form_z_valuation(const Form<K>& f, Form<K>* cofactor = nullptr) {
  check(!f.is_zero(), ErrorKind::Internal, "z-valuation of zero form");
  int e = f.degree();
  for (const auto& [m, c] : f.terms()) e = std::min(e, m[2]);
  if (cofactor) {
    Form<K> r;
    for (const auto& [m, c] : f.terms()) r.set_term(m[0], m[1], m[2] - e, c);
    *cofactor = r;
  }
  return e;
}

// f(x, y, 1) as an element of K[y][x] (outer variable x).
template <typename K>
Poly<Poly<K>> form_to_xy_affine(const Form<K>& f) {
  Poly<Poly<K>> r;
  for (const auto& [m, c] : f.terms()) {
    Poly<K> inner = Poly<K>::monomial(c, m[1]);
    r = r + Poly<Poly<K>>::monomial(inner, m[0]);
  }
  return r;
}

// Homogenizes g(x, y) from K[y][x] to a form of degree d (z fills in).
// Requires total degree of g to be at most d.
template <typename K>
Form<K> form_from_xy_affine(const Poly<Poly<K>>& g, int d) {
  Form<K> r;
  for (int i = 0; i <= g.degree(); ++i) {
    const Poly<K>& inner = g.coeff(i);
    for (int j = 0; j <= inner.degree(); ++j) {
      K c = inner.coeff(j);
      if (c.is_zero()) continue;
      check(i + j <= d, ErrorKind::Internal, "homogenization degree too small");
      r.set_term(i, j, d - i - j, c);
    }
  }
  return r;
}

// Total degree of an affine bivariate polynomial in K[y][x].
template <typename K>
int xy_total_degree(const Poly<Poly<K>>& g) {
  int d = -1;
  for (int i = 0; i <= g.degree(); ++i) {
    const Poly<K>& inner = g.coeff(i);
    if (!inner.is_zero()) d = std::max(d, i + inner.degree());
  }
  return d;
}

// gcd of forms, returned monic w.r.t. graded-lex. gcd(f, 0) = monic f.
// Route: split off z powers, dehomogenize to K[y][x], bivariate gcd,
// re-homogenize to the gcd's total degree.
template <typename K>
Form<K> form_gcd(const Form<K>& f, const Form<K>& g) {
  if (f.is_zero()) return g.monic();
  if (g.is_zero()) return f.monic();
  Form<K> f0, g0;
  int af = form_z_valuation(f, &f0);
  int ag = form_z_valuation(g, &g0);
  Poly<Poly<K>> fa = form_to_xy_affine(f0);
  Poly<Poly<K>> ga = form_to_xy_affine(g0);
  Poly<Poly<K>> h = gcd_biv(fa, ga);
  Form<K> hf = form_from_xy_affine(h, xy_total_degree(h));
  int az = std::min(af, ag);
  if (az > 0) hf = hf * Form<K>::monomial(hf.is_zero() ? K{} : hf.lead_coeff().one_like(), 0, 0, az);
  return hf.monic();
}

template <typename K>
Form<K> form_gcd(const std::vector<Form<K>>& fs) {
  Form<K> acc;
  for (const auto& f : fs) acc = form_gcd(acc, f);
  return acc;
}

// F(A, B, C) with power caching. Nonzero substituents must share a degree.
template <typename K>
Form<K> form_substitute(const Form<K>& f, const Form<K>& a, const Form<K>& b, const Form<K>& c) {
  if (f.is_zero()) return Form<K>{};
  int e = -1;
  for (const Form<K>* s : {&a, &b, &c})
    if (!s->is_zero()) {
      check(e == -1 || s->degree() == e, ErrorKind::DegreeMismatch,
            "substituted forms of different degrees");
      e = s->degree();
    }
  K one = f.lead_coeff().one_like();
  Form<K> unit = Form<K>::monomial(one, 0, 0, 0);
  auto powers = [&](const Form<K>& base, int maxe) {
    std::vector<Form<K>> p{unit};
    for (int i = 1; i <= maxe; ++i) p.push_back(p.back() * base);
    return p;
  };
  int mi = 0, mj = 0, mk = 0;
  for (const auto& [m, cf] : f.terms()) {
    mi = std::max(mi, m[0]);
    mj = std::max(mj, m[1]);
    mk = std::max(mk, m[2]);
  }
  std::vector<Form<K>> pa = powers(a, mi), pb = powers(b, mj), pc = powers(c, mk);
  Form<K> r;
  for (const auto& [m, cf] : f.terms())
    r = r + (pa[m[0]] * pb[m[1]] * pc[m[2]]).scaled(cf);
  return r;
}

// (F after the change of coordinates v -> M v).
template <typename K>
Form<K> form_linear_change(const Form<K>& f, const Mat3<K>& m) {
  Form<K> lx = Form<K>::linear(m.a[0][0], m.a[0][1], m.a[0][2]);
  Form<K> ly = Form<K>::linear(m.a[1][0], m.a[1][1], m.a[1][2]);
  Form<K> lz = Form<K>::linear(m.a[2][0], m.a[2][1], m.a[2][2]);
  return form_substitute(f, lx, ly, lz);
}

// ---------------------------------------------------------------------------
// Projective plane points with canonical scaling (first nonzero coord = 1).

template <typename K>
struct PlanePoint {
  std::array<K, 3> c;

  static PlanePoint make(const K& x, const K& y, const K& z) {
    PlanePoint p{{x, y, z}};
    int i0 = -1;
    for (int i = 0; i < 3; ++i)
      if (!p.c[i].is_zero()) {
        i0 = i;
        break;
      }
    check(i0 >= 0, ErrorKind::InvalidArgument, "projective point with all coordinates zero");
    K inv = p.c[i0].inv();
    for (int i = 0; i < 3; ++i) p.c[i] = p.c[i] * inv;
    return p;
  }

  bool operator==(const PlanePoint& o) const {
    for (int i = 0; i < 3; ++i)
      if (!(c[i] == o.c[i])) return false;
    return true;
  }
  bool operator!=(const PlanePoint& o) const { return !(*this == o); }

  // Deterministic total order (coordinates are canonical).
  int cmp(const PlanePoint& o) const {
    for (int i = 0; i < 3; ++i) {
      int s = c[i].cmp(o.c[i]);
      if (s != 0) return s;
    }
    return 0;
  }
  bool operator<(const PlanePoint& o) const { return cmp(o) < 0; }

  std::string str() const { return "(" + c[0].str() + " : " + c[1].str() + " : " + c[2].str() + ")"; }
};

// Line through two distinct points, as a monic linear form.
template <typename K>
Form<K> line_through(const PlanePoint<K>& p, const PlanePoint<K>& q) {
  check(!(p == q), ErrorKind::InvalidArgument, "line through a repeated point");
  K a = p.c[1] * q.c[2] - p.c[2] * q.c[1];
  K b = p.c[2] * q.c[0] - p.c[0] * q.c[2];
  K c = p.c[0] * q.c[1] - p.c[1] * q.c[0];
  return Form<K>::linear(a, b, c).monic();
}

}  // namespace cremona

#endif  // CREMONA_FORM_HPP
