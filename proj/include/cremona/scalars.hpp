// Exact scalar types: arbitrary-precision rationals (GMP-backed) and prime
// fields F_p with runtime modulus p >= 7. Both satisfy the Scalar interface
// used by the polynomial and form templates:
//
//   K zero_like() / one_like()      zero and one of the same field
//   bool is_zero() const
//   K inv() const                   multiplicative inverse, throws on zero
//   int cmp(const K&) const         canonical total order (deterministic ids)
//   std::string str() const         canonical wire form ("a/b" reduced / residue)
//   + - * == and unary -
//
// Elements of F_p carry their modulus; mixing moduli throws FieldMismatch.
#ifndef CREMONA_SCALARS_HPP
#define CREMONA_SCALARS_HPP

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <string>
#include <type_traits>

#include "errors.hpp"

namespace cremona {

// ---------------------------------------------------------------------------
// primality (deterministic Miller-Rabin, valid for the full 64-bit range)

namespace detail {

inline std::uint64_t mulmod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace detail

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = detail::powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = detail::mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// field descriptor (runtime choice surfaced by the CLI and JSON layer)

struct FieldSpec {
  enum class Kind { Rationals, Prime } kind = Kind::Rationals;
  std::uint64_t p = 0;

  static FieldSpec rationals() { return FieldSpec{Kind::Rationals, 0}; }

  static FieldSpec prime(std::uint64_t p) {
    check(p >= 7, ErrorKind::InvalidField,
          "prime field characteristic must be >= 7, got " + std::to_string(p));
    check(is_prime_u64(p), ErrorKind::InvalidField,
          std::to_string(p) + " is not prime");
    return FieldSpec{Kind::Prime, p};
  }

  // accepts "Q" or "Fp:<p>"
  static FieldSpec parse(const std::string& s) {
    if (s == "Q") return rationals();
    if (s.rfind("Fp:", 0) == 0) {
      const std::string num = s.substr(3);
      check(!num.empty() && num.find_first_not_of("0123456789") == std::string::npos,
            ErrorKind::InvalidField, "bad field spec '" + s + "'");
      return prime(std::stoull(num));
    }
    raise(ErrorKind::InvalidField, "bad field spec '" + s + "' (want Q or Fp:<p>)");
  }

  std::string str() const {
    return kind == Kind::Rationals ? "Q" : "Fp:" + std::to_string(p);
  }
  bool operator==(const FieldSpec& o) const { return kind == o.kind && p == o.p; }
};

// ---------------------------------------------------------------------------
// Rational

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}
  Rational(long num, long den) {
    check(den != 0, ErrorKind::DivisionByZero, "rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(const mpq_class& v) : v_(v) { v_.canonicalize(); }
  explicit Rational(const mpz_class& v) : v_(v) {}

  // parses "a" or "a/b", canonicalizes to reduced form with positive denominator
  static Rational parse(const std::string& s) {
    mpq_class v;
    if (s.empty() || mpq_set_str(v.get_mpq_t(), s.c_str(), 10) != 0)
      raise(ErrorKind::ParseError, "bad rational literal '" + s + "'");
    check(mpz_sgn(mpq_denref(v.get_mpq_t())) != 0, ErrorKind::DivisionByZero,
          "rational with zero denominator: '" + s + "'");
    v.canonicalize();
    return Rational(v);
  }

  Rational zero_like() const { return Rational(); }
  Rational one_like() const { return Rational(1); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }

  Rational operator+(const Rational& o) const { return Rational(mpq_class(v_ + o.v_)); }
  Rational operator-(const Rational& o) const { return Rational(mpq_class(v_ - o.v_)); }
  Rational operator*(const Rational& o) const { return Rational(mpq_class(v_ * o.v_)); }
  Rational operator-() const { return Rational(mpq_class(-v_)); }
  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }

  Rational inv() const {
    check(!is_zero(), ErrorKind::DivisionByZero, "inverse of zero");
    return Rational(mpq_class(1 / v_));
  }
  Rational div(const Rational& o) const { return *this * o.inv(); }
  std::optional<Rational> try_exact_div(const Rational& o) const {
    if (o.is_zero()) return is_zero() ? std::optional<Rational>(*this) : std::nullopt;
    return *this * o.inv();
  }

  int cmp(const Rational& o) const { return ::cmp(v_, o.v_); }

  std::string str() const { return v_.get_str(); }

  const mpq_class& value() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

 private:
  mpq_class v_;
};

// ---------------------------------------------------------------------------
// Fp

class Fp {
 public:
  Fp() : v_(0), p_(0) {}  // detached zero; attaches to the other operand
  Fp(std::uint64_t v, std::uint64_t p) : v_(p ? v % p : 0), p_(p) {}

  static Fp from_int(long long n, std::uint64_t p) {
    long long r = n % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
  }

  static Fp parse(const std::string& s, std::uint64_t p) {
    check(!s.empty(), ErrorKind::ParseError, "empty field element literal");
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    check(i < s.size() && s.find_first_not_of("0123456789", i) == std::string::npos &&
              s.find('/') == std::string::npos,
          ErrorKind::ParseError, "bad F_p literal '" + s + "'");
    mpz_class z(s);
    mpz_class r = z % static_cast<unsigned long>(p);
    if (r < 0) r += static_cast<unsigned long>(p);
    return Fp(r.get_ui(), p);
  }

  Fp zero_like() const { return Fp(0, p_); }
  Fp one_like() const { return Fp(1, p_); }
  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }

  Fp operator+(const Fp& o) const {
    std::uint64_t p = join(o);
    std::uint64_t s = v_ + o.v_;
    if (s >= p) s -= p;
    return Fp(s, p);
  }
  Fp operator-(const Fp& o) const {
    std::uint64_t p = join(o);
    return Fp(v_ >= o.v_ ? v_ - o.v_ : v_ + p - o.v_, p);
  }
  Fp operator*(const Fp& o) const {
    std::uint64_t p = join(o);
    return Fp(detail::mulmod_u64(v_, o.v_, p), p);
  }
  Fp operator-() const { return v_ == 0 ? *this : Fp(mod() - v_, mod()); }
  bool operator==(const Fp& o) const {
    if (p_ && o.p_) join(o);
    return v_ == o.v_;
  }
  bool operator!=(const Fp& o) const { return !(*this == o); }

  Fp inv() const {
    check(v_ != 0, ErrorKind::DivisionByZero, "inverse of zero");
    return Fp(detail::powmod_u64(v_, mod() - 2, mod()), mod());
  }
  Fp div(const Fp& o) const { return *this * o.inv(); }
  std::optional<Fp> try_exact_div(const Fp& o) const {
    if (o.is_zero()) return is_zero() ? std::optional<Fp>(*this) : std::nullopt;
    return *this * o.inv();
  }

  int cmp(const Fp& o) const { return v_ < o.v_ ? -1 : (v_ > o.v_ ? 1 : 0); }

  std::string str() const { return std::to_string(v_); }

  std::uint64_t value() const { return v_; }
  std::uint64_t mod() const {
    check(p_ != 0, ErrorKind::Internal, "detached F_p element has no modulus");
    return p_;
  }

 private:
  // detached elements (modulus 0) adopt the other operand's field
  std::uint64_t join(const Fp& o) const {
    if (p_ == 0) return o.mod();
    if (o.p_ == 0) return mod();
    check(p_ == o.p_, ErrorKind::FieldMismatch,
          "F_" + std::to_string(p_) + " vs F_" + std::to_string(o.p_));
    return p_;
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

template <typename K>
inline constexpr bool is_fp_v = std::is_same_v<K, Fp>;
template <typename K>
inline constexpr bool is_rational_v = std::is_same_v<K, Rational>;

}  // namespace cremona

#endif  // CREMONA_SCALARS_HPP
