// Dense univariate polynomials over an exact coefficient ring T. T is either
// a scalar field (Rational, Fp, QuotExt) or a nested Poly, so Poly<Poly<K>>
// gives K[y][x] for the bivariate work: pseudo-division, primitive PRS gcd,
// and the subresultant-style resultant used by the elimination passes.
//
// Poly<T> itself models the same coefficient interface (zero_like, one_like,
// is_zero, + - *, ==, try_exact_div, str, cmp), which is what lets the
// algorithms nest. Empty coefficient vector == zero polynomial; nonzero polys
// never carry a zero leading coefficient.
#ifndef CREMONA_POLY_HPP
#define CREMONA_POLY_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "scalars.hpp"

namespace cremona {

template <typename T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(const T& c) {
    if (!c.is_zero()) c_.push_back(c);
  }
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Poly zero() { return Poly(); }
  static Poly monomial(const T& c, int k) {
    Poly r;
    if (c.is_zero()) return r;
    r.c_.assign(static_cast<std::size_t>(k) + 1, c.zero_like());
    r.c_.back() = c;
    return r;
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }

  const T& lc() const {
    check(!c_.empty(), ErrorKind::Internal, "leading coefficient of zero polynomial");
    return c_.back();
  }

  // out-of-range coefficients are zero (detached zero if the poly itself is zero)
  T coeff(int i) const {
    if (i >= 0 && i < static_cast<int>(c_.size())) return c_[static_cast<std::size_t>(i)];
    return c_.empty() ? T{} : c_[0].zero_like();
  }
  const std::vector<T>& coeffs() const { return c_; }

  Poly zero_like() const { return Poly(); }
  Poly one_like() const {
    check(!c_.empty(), ErrorKind::Internal, "one_like on zero polynomial lacks context");
    return Poly(c_[0].one_like());
  }

  Poly operator+(const Poly& o) const {
    std::vector<T> r(std::max(c_.size(), o.c_.size()), pick_zero(o));
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i < c_.size() && i < o.c_.size()) r[i] = c_[i] + o.c_[i];
      else if (i < c_.size()) r[i] = c_[i];
      else r[i] = o.c_[i];
    }
    return Poly(std::move(r));
  }
  Poly operator-() const {
    std::vector<T> r(c_);
    for (auto& x : r) x = -x;
    return Poly(std::move(r));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<T> r(c_.size() + o.c_.size() - 1, c_[0].zero_like());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    }
    return Poly(std::move(r));
  }
  bool operator==(const Poly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly scaled(const T& s) const {
    if (s.is_zero()) return Poly();
    std::vector<T> r(c_);
    for (auto& x : r) x = x * s;
    return Poly(std::move(r));
  }
  Poly shifted(int k) const {  // multiply by x^k
    if (is_zero() || k == 0) return *this;
    std::vector<T> r(c_.size() + static_cast<std::size_t>(k), c_[0].zero_like());
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + static_cast<std::size_t>(k)] = c_[i];
    return Poly(std::move(r));
  }

  T eval(const T& x) const {
    if (c_.empty()) return x.zero_like();
    T acc = c_.back();
    for (std::size_t i = c_.size() - 1; i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      T m = c_[i].zero_like();
      for (std::size_t k = 0; k < i; ++k) m = m + c_[i].one_like();
      r.push_back(c_[i] * m);
    }
    return Poly(std::move(r));
  }

  // coefficient-wise exact division; nullopt if any coefficient fails or s == 0
  std::optional<Poly> try_scalar_div(const T& s) const {
    if (s.is_zero()) return is_zero() ? std::optional<Poly>(Poly()) : std::nullopt;
    std::vector<T> r;
    r.reserve(c_.size());
    for (const auto& x : c_) {
      auto q = x.try_exact_div(s);
      if (!q) return std::nullopt;
      r.push_back(*q);
    }
    return Poly(std::move(r));
  }

  // exact polynomial division over the ring (leading-term algorithm);
  // nullopt when *this is not a multiple of o
  std::optional<Poly> try_exact_div(const Poly& o) const {
    check(!o.is_zero(), ErrorKind::DivisionByZero, "polynomial division by zero");
    if (is_zero()) return Poly();
    if (degree() < o.degree()) return std::nullopt;
    std::vector<T> q(static_cast<std::size_t>(degree() - o.degree()) + 1, c_[0].zero_like());
    Poly r = *this;
    while (!r.is_zero() && r.degree() >= o.degree()) {
      auto t = r.lc().try_exact_div(o.lc());
      if (!t) return std::nullopt;
      int k = r.degree() - o.degree();
      q[static_cast<std::size_t>(k)] = *t;
      r = r - o.scaled(*t).shifted(k);
      if (!r.is_zero() && r.degree() >= o.degree() + k) return std::nullopt;  // no progress
    }
    if (!r.is_zero()) return std::nullopt;
    return Poly(std::move(q));
  }

  std::string str() const {
    if (c_.empty()) return "0";
    std::string s = "[";
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i) s += ", ";
      s += c_[i].str();
    }
    return s + "]";
  }

  int cmp(const Poly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() < o.c_.size() ? -1 : 1;
    for (std::size_t i = c_.size(); i-- > 0;) {
      int c = c_[i].cmp(o.c_[i]);
      if (c) return c;
    }
    return 0;
  }

 private:
  T pick_zero(const Poly& o) const {
    if (!c_.empty()) return c_[0].zero_like();
    if (!o.c_.empty()) return o.c_[0].zero_like();
    return T{};
  }
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<T> c_;
};

// ---------------------------------------------------------------------------
// field-coefficient algorithms

template <typename K>
std::pair<Poly<K>, Poly<K>> divmod_field(const Poly<K>& f, const Poly<K>& g) {
  check(!g.is_zero(), ErrorKind::DivisionByZero, "polynomial division by zero");
  if (f.is_zero() || f.degree() < g.degree()) return {Poly<K>(), f};
  K lg = g.lc().inv();
  std::vector<K> q(static_cast<std::size_t>(f.degree() - g.degree()) + 1, lg.zero_like());
  Poly<K> r = f;
  while (!r.is_zero() && r.degree() >= g.degree()) {
    K t = r.lc() * lg;
    int k = r.degree() - g.degree();
    q[static_cast<std::size_t>(k)] = t;
    r = r - g.scaled(t).shifted(k);
  }
  return {Poly<K>(std::move(q)), r};
}

template <typename K>
Poly<K> make_monic(const Poly<K>& f) {
  if (f.is_zero()) return f;
  return f.scaled(f.lc().inv());
}

template <typename K>
Poly<K> gcd_field(const Poly<K>& a, const Poly<K>& b) {
  Poly<K> f = a, g = b;
  while (!g.is_zero()) {
    Poly<K> r = divmod_field(f, g).second;
    f = make_monic(g);  // keep coefficients small over Q
    g = r;
  }
  return make_monic(f);
}

// returns (g, u) with u*a = g (mod m), g = gcd(a, m) monic
template <typename K>
std::pair<Poly<K>, Poly<K>> half_ext_gcd_field(const Poly<K>& a, const Poly<K>& m) {
  Poly<K> r0 = a, r1 = m;
  Poly<K> u0, u1;
  if (!a.is_zero()) u0 = Poly<K>(a.lc().one_like());
  else if (!m.is_zero()) u0 = Poly<K>(m.lc().one_like());
  while (!r1.is_zero()) {
    auto [q, r2] = divmod_field(r0, r1);
    Poly<K> u2 = u0 - q * u1;
    r0 = r1; r1 = r2;
    u0 = u1; u1 = u2;
  }
  if (r0.is_zero()) return {r0, u0};
  K s = r0.lc().inv();
  return {r0.scaled(s), u0.scaled(s)};
}

template <typename K>
Poly<K> squarefree_part_field(const Poly<K>& f) {
  if (f.degree() <= 1) return make_monic(f);
  Poly<K> d = f.derivative();
  if (d.is_zero())  // only in characteristic p; caller treats as-is
    return make_monic(f);
  Poly<K> g = gcd_field(f, d);
  auto q = f.try_exact_div(g);
  check(q.has_value(), ErrorKind::Internal, "squarefree part division failed");
  return make_monic(*q);
}

// ---------------------------------------------------------------------------
// ring-coefficient algorithms (pseudo-division, PRS, resultant)

// pseudo-remainder: lc(g)^(deg f - deg g + 1) * f = q*g + prem(f, g)
template <typename T>
Poly<T> prem(const Poly<T>& f, const Poly<T>& g) {
  check(!g.is_zero(), ErrorKind::DivisionByZero, "pseudo-division by zero");
  if (f.is_zero() || f.degree() < g.degree()) return f;
  const T d = g.lc();
  int e = f.degree() - g.degree() + 1;
  Poly<T> r = f;
  while (!r.is_zero() && r.degree() >= g.degree()) {
    Poly<T> t = Poly<T>::monomial(r.lc(), r.degree() - g.degree());
    r = r.scaled(d) - t * g;
    --e;
  }
  for (; e > 0; --e) r = r.scaled(d);
  return r;
}

template <typename T>
T ring_pow(const T& a, int n) {
  T r = a.one_like();
  for (int i = 0; i < n; ++i) r = r * a;
  return r;
}

// resultant via the subresultant PRS (exact divisions only; T is a GCD-free
// ring interface: the divisions required by the algorithm are always exact)
template <typename T>
T resultant(const Poly<T>& a0, const Poly<T>& b0) {
  check(!a0.is_zero() && !b0.is_zero(), ErrorKind::InvalidArgument,
        "resultant of zero polynomial");
  Poly<T> a = a0, b = b0;
  const T one = a.lc().one_like();
  bool negate = false;
  if (a.degree() < b.degree()) {
    if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
    std::swap(a, b);
  }
  if (a.degree() == 0) return one;  // two nonzero constants
  T g = one, h = one;
  while (b.degree() > 0) {
    int delta = a.degree() - b.degree();
    if ((a.degree() & 1) && (b.degree() & 1)) negate = !negate;
    Poly<T> r = prem(a, b);
    if (r.is_zero()) return one.zero_like();  // common factor of positive degree
    T divisor = g * ring_pow(h, delta);
    auto nb = r.try_scalar_div(divisor);
    check(nb.has_value(), ErrorKind::Internal, "subresultant division not exact");
    a = b;
    b = *nb;
    g = a.lc();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      auto nh = ring_pow(g, delta).try_exact_div(ring_pow(h, delta - 1));
      check(nh.has_value(), ErrorKind::Internal, "subresultant h-update not exact");
      h = *nh;
    }
  }
  // deg b == 0: res = lc(b)^deg(a) / h^(deg(a) - 1)
  T num = ring_pow(b.lc(), a.degree());
  auto rq = num.try_exact_div(ring_pow(h, a.degree() - 1));
  check(rq.has_value(), ErrorKind::Internal, "resultant final division not exact");
  return negate ? -*rq : *rq;
}

// ---------------------------------------------------------------------------
// bivariate helpers: Poly<Poly<K>> = K[y][x] with K a field

template <typename K>
Poly<K> content_biv(const Poly<Poly<K>>& f) {
  Poly<K> c;
  for (const auto& coef : f.coeffs()) c = gcd_field(c, coef);
  return c;  // monic by gcd_field; zero iff f == 0
}

template <typename K>
Poly<Poly<K>> primitive_part_biv(const Poly<Poly<K>>& f) {
  if (f.is_zero()) return f;
  Poly<K> c = content_biv(f);
  auto q = f.try_scalar_div(c);
  check(q.has_value(), ErrorKind::Internal, "primitive part division failed");
  return *q;
}

// gcd in K[y][x], normalized: content monic in K[y], lc of lc == 1
template <typename K>
Poly<Poly<K>> gcd_biv(const Poly<Poly<K>>& a, const Poly<Poly<K>>& b) {
  if (a.is_zero()) return b.is_zero() ? b : normalize_biv(b);
  if (b.is_zero()) return normalize_biv(a);
  Poly<K> c = gcd_field(content_biv(a), content_biv(b));
  Poly<Poly<K>> f = primitive_part_biv(a), g = primitive_part_biv(b);
  if (f.degree() < g.degree()) std::swap(f, g);
  while (!g.is_zero()) {
    Poly<Poly<K>> r = prem(f, g);
    f = g;
    g = r.is_zero() ? r : primitive_part_biv(r);
  }
  Poly<Poly<K>> result = primitive_part_biv(f).scaled(c);
  return normalize_biv(result);
}

template <typename K>
Poly<Poly<K>> normalize_biv(const Poly<Poly<K>>& f) {
  if (f.is_zero()) return f;
  K s = f.lc().lc().inv();
  return f.scaled(Poly<K>(s));
}

// ---------------------------------------------------------------------------
// QuotExt: the field K[t]/(q) for q irreducible, used to decide whether
// eliminated systems have zeros above the roots of an irreducible factor.

template <typename K>
class QuotExt {
 public:
  QuotExt() = default;  // detached zero
  QuotExt(Poly<K> v, std::shared_ptr<const Poly<K>> q) : v_(std::move(v)), q_(std::move(q)) {
    reduce();
  }

  static std::shared_ptr<const Poly<K>> make_modulus(const Poly<K>& q) {
    check(q.degree() >= 1, ErrorKind::InvalidArgument, "extension modulus must be nonconstant");
    return std::make_shared<const Poly<K>>(make_monic(q));
  }

  QuotExt zero_like() const { return QuotExt(Poly<K>(), q_); }
  QuotExt one_like() const {
    check(q_ != nullptr, ErrorKind::Internal, "one_like on detached extension element");
    return QuotExt(Poly<K>((*q_).lc().one_like()), q_);
  }
  bool is_zero() const { return v_.is_zero(); }

  QuotExt operator+(const QuotExt& o) const { return QuotExt(v_ + o.v_, join(o)); }
  QuotExt operator-(const QuotExt& o) const { return QuotExt(v_ - o.v_, join(o)); }
  QuotExt operator*(const QuotExt& o) const { return QuotExt(v_ * o.v_, join(o)); }
  QuotExt operator-() const { return QuotExt(-v_, q_); }
  bool operator==(const QuotExt& o) const { return v_ == o.v_; }

  QuotExt inv() const {
    check(!is_zero(), ErrorKind::DivisionByZero, "inverse of zero");
    auto [g, u] = half_ext_gcd_field(v_, *mod());
    // q irreducible and v nonzero of lower degree => gcd is 1
    check(g.degree() == 0, ErrorKind::Internal,
          "extension modulus is reducible: gcd " + g.str());
    return QuotExt(u.scaled(g.lc().inv()), q_);
  }
  QuotExt div(const QuotExt& o) const { return *this * o.inv(); }
  std::optional<QuotExt> try_exact_div(const QuotExt& o) const {
    if (o.is_zero()) return is_zero() ? std::optional<QuotExt>(*this) : std::nullopt;
    return *this * o.inv();
  }

  int cmp(const QuotExt& o) const { return v_.cmp(o.v_); }
  std::string str() const { return v_.str(); }
  const Poly<K>& value() const { return v_; }

 private:
  std::shared_ptr<const Poly<K>> mod() const {
    check(q_ != nullptr, ErrorKind::Internal, "detached extension element has no modulus");
    return q_;
  }
  std::shared_ptr<const Poly<K>> join(const QuotExt& o) const {
    if (!q_) return o.q_;
    if (!o.q_) return q_;
    check(*q_ == *o.q_, ErrorKind::FieldMismatch, "mixed extension moduli");
    return q_;
  }
  void reduce() {
    if (q_ && !v_.is_zero()) v_ = divmod_field(v_, *q_).second;
  }

  Poly<K> v_;
  std::shared_ptr<const Poly<K>> q_;
};

}  // namespace cremona

#endif  // CREMONA_POLY_HPP
