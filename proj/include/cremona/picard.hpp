// Exact intersection lattice attached to a marked configuration: divisor
// classes in the basis {L} u {E_q}, the involution action of each marked
// generator, and the positivity certificate that proves composed words keep
// growing in degree. Every recursion step is computed twice, once through
// the one-step update table and once from the definitions, so a defect in
// either route is caught at the step where it first appears.
#ifndef CREMONA_PICARD_HPP
#define CREMONA_PICARD_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <gmpxx.h>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "errors.hpp"

namespace cremona {

// D = m*L - sum_q mults[q]*E_q.  The stored numbers are the multiplicities
// of a plane model, so the E-basis coefficients carry the opposite sign.
struct DivisorClass {
  mpz_class m;
  std::vector<mpz_class> mults;

  bool operator==(const DivisorClass& o) const { return m == o.m && mults == o.mults; }
  bool operator!=(const DivisorClass& o) const { return !(*this == o); }

  DivisorClass& add_scaled(const DivisorClass& o, const mpz_class& c) {
    m += c * o.m;
    for (std::size_t i = 0; i < mults.size(); ++i) mults[i] += c * o.mults[i];
    return *this;
  }

  std::string str(const MarkedConfig& cfg) const {
    std::string out = m.get_str() + "*L";
    for (std::size_t i = 0; i < mults.size(); ++i) {
      if (mults[i] == 0) continue;
      mpz_class a = -mults[i];
      out += (a < 0 ? " - " : " + ");
      mpz_class aa = abs(a);
      if (aa != 1) out += aa.get_str() + "*";
      out += "E[" + cfg.names[i] + "]";
    }
    return out;
  }
};

struct PicLattice {
  MarkedConfig config;

  int rank() const { return config.n + 1; }

  DivisorClass zero() const { return DivisorClass{0, std::vector<mpz_class>(static_cast<std::size_t>(config.n), 0)}; }
  DivisorClass line() const {
    DivisorClass d = zero();
    d.m = 1;
    return d;
  }
  DivisorClass exceptional(int q) const {
    check(q >= 0 && q < config.n, ErrorKind::UnknownId,
          "exceptional class: no point with index " + std::to_string(q));
    DivisorClass d = zero();
    d.mults[static_cast<std::size_t>(q)] = -1;
    return d;
  }
  // K = -3L + sum_q E_q, so K.K = 9 - |Omega|.
  DivisorClass canonical() const {
    DivisorClass d = zero();
    d.m = -3;
    for (auto& c : d.mults) c = -1;
    return d;
  }

  // Intersection form: L.L = 1, E_q.E_q = -1, mixed products 0.
  mpz_class inner(const DivisorClass& a, const DivisorClass& b) const {
    mpz_class s = a.m * b.m;
    for (std::size_t i = 0; i < a.mults.size(); ++i) s -= a.mults[i] * b.mults[i];
    return s;
  }
};

inline PicLattice lattice_new(MarkedConfig cfg) {
  cfg.validate();
  return PicLattice{std::move(cfg)};
}

// delta_b(D) = 2m - 2m_b - sum_{b > c} m_c.
inline mpz_class delta(const PicLattice& lat, const DivisorClass& d, int b) {
  check(b >= 0 && b < lat.config.n, ErrorKind::UnknownId,
        "delta: no point with index " + std::to_string(b));
  mpz_class s = 2 * d.m - 2 * d.mults[static_cast<std::size_t>(b)];
  for (int c : lat.config.successors(b)) s -= d.mults[static_cast<std::size_t>(c)];
  return s;
}

// lambda_{b,a}(D) = m - m_b + m_a - sum_{b > c, c != a} m_c, defined only for b > a.
inline mpz_class lambda(const PicLattice& lat, const DivisorClass& d, int b, int a) {
  check(b >= 0 && b < lat.config.n && a >= 0 && a < lat.config.n, ErrorKind::UnknownId,
        "lambda: point index out of range");
  check(lat.config.succ[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)],
        ErrorKind::NotInSuccRelation,
        "lambda is defined only when '" + lat.config.names[static_cast<std::size_t>(b)] +
            "' precedes '" + lat.config.names[static_cast<std::size_t>(a)] + "' in the tangency order");
  mpz_class s = d.m - d.mults[static_cast<std::size_t>(b)] + d.mults[static_cast<std::size_t>(a)];
  for (int c : lat.config.successors(b))
    if (c != a) s -= d.mults[static_cast<std::size_t>(c)];
  return s;
}

// Lattice side of one marked involution: images of the basis classes are
//   L     |-> 3L - 2E_p - sum_{p > b} E_b
//   E_p   |-> 2L -  E_p - sum_{p > b} E_b
//   E_a   |->  L -  E_p - E_a          when p > a
//   E_a   |->  E_a                     otherwise.
struct LatticeAction {
  int p = -1;
  std::vector<DivisorClass> images;  // images[0] = act(L), images[1 + q] = act(E_q)

  DivisorClass apply(const DivisorClass& d) const {
    DivisorClass out{d.m * images[0].m, std::vector<mpz_class>(d.mults.size(), 0)};
    for (std::size_t i = 0; i < d.mults.size(); ++i) out.mults[i] = d.m * images[0].mults[i];
    for (std::size_t q = 0; q < d.mults.size(); ++q) {
      if (d.mults[q] == 0) continue;
      out.add_scaled(images[1 + q], -d.mults[q]);
    }
    return out;
  }
};

inline LatticeAction sigma_action(const PicLattice& lat, int p) {
  const MarkedConfig& cfg = lat.config;
  check(p >= 0 && p < cfg.n, ErrorKind::UnknownId,
        "lattice action: no point with index " + std::to_string(p));
  check(cfg.is_generator(p), ErrorKind::NotAGenerator,
        "lattice action: '" + cfg.names[static_cast<std::size_t>(p)] + "' is not a marked generator");

  auto succ_p = cfg.successors(p);
  LatticeAction act;
  act.p = p;
  act.images.reserve(static_cast<std::size_t>(cfg.n) + 1);

  DivisorClass img_l = lat.zero();
  img_l.m = 3;
  img_l.mults[static_cast<std::size_t>(p)] = 2;
  for (int b : succ_p) img_l.mults[static_cast<std::size_t>(b)] += 1;
  act.images.push_back(img_l);

  for (int q = 0; q < cfg.n; ++q) {
    DivisorClass img = lat.zero();
    if (q == p) {
      img.m = 2;
      img.mults[static_cast<std::size_t>(p)] = 1;
      for (int b : succ_p) img.mults[static_cast<std::size_t>(b)] += 1;
    } else if (cfg.succ[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]) {
      img.m = 1;
      img.mults[static_cast<std::size_t>(p)] = 1;
      img.mults[static_cast<std::size_t>(q)] = 1;
    } else {
      img.mults[static_cast<std::size_t>(q)] = -1;
    }
    act.images.push_back(img);
  }

  // The four defining identities of the action, checked on the nose.
  auto fail = [&](const std::string& what) {
    raise(ErrorKind::Internal, "lattice action for '" + cfg.names[static_cast<std::size_t>(p)] +
                                   "': " + what);
  };
  std::vector<DivisorClass> basis;
  basis.push_back(lat.line());
  for (int q = 0; q < cfg.n; ++q) basis.push_back(lat.exceptional(q));
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (act.apply(act.images[i]) != basis[i]) fail("is not an involution on basis class " + std::to_string(i));
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i; j < basis.size(); ++j)
      if (lat.inner(act.images[i], act.images[j]) != lat.inner(basis[i], basis[j]))
        fail("does not preserve the intersection form");
  if (act.apply(lat.canonical()) != lat.canonical()) fail("moves the canonical class");
  DivisorClass hyper = lat.line();
  hyper.mults[static_cast<std::size_t>(p)] = 1;  // L - E_p, the fixed-curve class
  if (act.apply(hyper) != hyper) fail("moves the fixed-curve class");
  return act;
}

// One recursion step together with both computations of every delta and
// lambda on the result: `table` is the one-step update rule applied to the
// values on the input, `direct` is the definition evaluated on the output.
struct OvertCheckEntry {
  int b = -1;  // -1 for a delta entry
  int a = -1;
  mpz_class table;
  mpz_class direct;
};

struct OvertStep {
  DivisorClass result;
  std::vector<OvertCheckEntry> deltas;   // one per point, indexed by a
  std::vector<OvertCheckEntry> lambdas;  // one per succ pair (b, a)
};

inline OvertStep overt_step(const PicLattice& lat, const DivisorClass& d, int p) {
  const MarkedConfig& cfg = lat.config;
  check(p >= 0 && p < cfg.n, ErrorKind::UnknownId,
        "recursion step: no point with index " + std::to_string(p));
  check(cfg.is_generator(p), ErrorKind::NotAGenerator,
        "recursion step: '" + cfg.names[static_cast<std::size_t>(p)] + "' is not a marked generator");

  std::size_t sp = static_cast<std::size_t>(p);
  auto succ_p = cfg.successors(p);
  mpz_class ssum = 0;
  for (int c : succ_p) ssum += d.mults[static_cast<std::size_t>(c)];

  // Push-forward of the multiplicity vector.
  OvertStep st;
  st.result = d;
  st.result.m = 3 * d.m - 2 * d.mults[sp] - ssum;
  st.result.mults[sp] = 2 * d.m - d.mults[sp] - ssum;
  for (int q = 0; q < cfg.n; ++q) {
    std::size_t sq = static_cast<std::size_t>(q);
    if (q == p) continue;
    if (cfg.succ[sp][sq]) st.result.mults[sq] = d.m - d.mults[sp] - d.mults[sq];
  }

  // Values on the input, then the two routes to the values on the output.
  std::vector<mpz_class> dl(static_cast<std::size_t>(cfg.n));
  for (int a = 0; a < cfg.n; ++a) dl[static_cast<std::size_t>(a)] = delta(lat, d, a);

  auto mismatch = [&](const OvertCheckEntry& e) {
    std::string what = e.b < 0 ? "delta(" + cfg.names[static_cast<std::size_t>(e.a)] + ")"
                               : "lambda(" + cfg.names[static_cast<std::size_t>(e.b)] + ", " +
                                     cfg.names[static_cast<std::size_t>(e.a)] + ")";
    raise(ErrorKind::RecursionMismatch,
          "one-step table disagrees with the definition for " + what + " after applying '" +
              cfg.names[sp] + "': table " + e.table.get_str() + ", direct " + e.direct.get_str());
  };

  for (int a = 0; a < cfg.n; ++a) {
    std::size_t sa = static_cast<std::size_t>(a);
    OvertCheckEntry e;
    e.a = a;
    if (a == p)
      e.table = -dl[sa];
    else if (cfg.succ[sa][sp])
      e.table = dl[sa] + dl[sp];
    else if (cfg.succ[sp][sa])
      e.table = dl[sa] + 2 * lambda(lat, d, p, a);
    else
      e.table = dl[sa] + 2 * dl[sp];
    e.direct = delta(lat, st.result, a);
    if (e.table != e.direct) mismatch(e);
    st.deltas.push_back(std::move(e));
  }

  for (int b = 0; b < cfg.n; ++b) {
    std::size_t sb = static_cast<std::size_t>(b);
    for (int a : cfg.successors(b)) {
      OvertCheckEntry e;
      e.b = b;
      e.a = a;
      mpz_class lv = lambda(lat, d, b, a);
      if (b == p)
        e.table = -lv;
      else if (a == p)
        e.table = lv + 2 * dl[sp];
      else if (cfg.succ[sb][sp])
        e.table = lv;
      else if (cfg.succ[sp][sb])
        e.table = lv + lambda(lat, d, p, b);
      else
        e.table = lv + dl[sp];
      e.direct = lambda(lat, st.result, b, a);
      if (e.table != e.direct) mismatch(e);
      st.lambdas.push_back(std::move(e));
    }
  }
  return st;
}

// Positivity assertions attached to a word prefix.  Family indices:
//   0 delta-last-negative      delta_p < 0
//   1 delta-positive-elsewhere delta_a > 0 for a != p
//   2 delta-dominates-last     delta_a + delta_p > 0 for a != p not preceding p
//   3 successor-pair-cone      i*delta_a + j*lambda_{b,a} + k*delta_b > 0 on four
//                              index rays with b > a; each ray is affine in one
//                              free parameter, so its minimal instance plus a
//                              nonnegative slope is equivalent to the whole ray
//   4 sibling-pair-cone        i*(delta_a + 2*lambda_{b,a}) + j*delta_a' + k*delta_b > 0
//                              on four rays with b > a, b > a', a != a'; same reduction
//   5 predecessor-chain-gap    delta_a + 2*lambda_{p,a} + delta_r > delta_p
//                              for p > a and r != p
//   6 class-moved              D != L
inline constexpr int kPropFamilies = 7;

inline const char* prop_family_name(int f) {
  static const char* names[kPropFamilies] = {
      "delta-last-negative",  "delta-positive-elsewhere", "delta-dominates-last",
      "successor-pair-cone",  "sibling-pair-cone",        "predecessor-chain-gap",
      "class-moved"};
  return names[f];
}

struct FamilyResult {
  long checked = 0;
  std::vector<std::string> failures;
};

struct InvariantReport {
  int prefix_len = 0;
  int last = -1;  // -1 when the prefix is empty
  DivisorClass d;
  std::array<FamilyResult, kPropFamilies> families;

  bool ok() const {
    for (const auto& f : families)
      if (!f.failures.empty()) return false;
    return true;
  }
  long total_checked() const {
    long t = 0;
    for (const auto& f : families) t += f.checked;
    return t;
  }
  std::string first_failure() const {
    for (int f = 0; f < kPropFamilies; ++f)
      if (!families[static_cast<std::size_t>(f)].failures.empty())
        return std::string(prop_family_name(f)) + ": " +
               families[static_cast<std::size_t>(f)].failures.front();
    return "";
  }
};

// Evaluates every positivity assertion for the class d reached by a word
// whose last letter is `last` (-1 for the empty word, which drops the
// families that mention the last letter and widens the other quantifiers).
inline InvariantReport check_positivity(const PicLattice& lat, const DivisorClass& d, int last,
                                        int prefix_len) {
  const MarkedConfig& cfg = lat.config;
  if (last >= 0)
    check(cfg.is_generator(last), ErrorKind::NotAGenerator,
          "positivity report: last letter is not a marked generator");

  InvariantReport rep;
  rep.prefix_len = prefix_len;
  rep.last = last;
  rep.d = d;

  std::vector<mpz_class> dl(static_cast<std::size_t>(cfg.n));
  for (int a = 0; a < cfg.n; ++a) dl[static_cast<std::size_t>(a)] = delta(lat, d, a);
  auto name = [&](int i) { return cfg.names[static_cast<std::size_t>(i)]; };

  auto record = [&](int family, bool pass, const std::string& detail) {
    auto& fr = rep.families[static_cast<std::size_t>(family)];
    ++fr.checked;
    if (!pass) fr.failures.push_back(detail);
  };

  if (last >= 0) {
    std::size_t sp = static_cast<std::size_t>(last);
    record(0, dl[sp] < 0, "delta(" + name(last) + ") = " + dl[sp].get_str() + " is not negative");
    for (int a = 0; a < cfg.n; ++a) {
      if (a == last) continue;
      std::size_t sa = static_cast<std::size_t>(a);
      record(1, dl[sa] > 0, "delta(" + name(a) + ") = " + dl[sa].get_str() + " is not positive");
      if (!cfg.succ[sa][sp]) {
        mpz_class v = dl[sa] + dl[sp];
        record(2, v > 0, "delta(" + name(a) + ") + delta(" + name(last) + ") = " + v.get_str() +
                             " is not positive");
      }
    }
  } else {
    for (int a = 0; a < cfg.n; ++a) {
      std::size_t sa = static_cast<std::size_t>(a);
      record(1, dl[sa] > 0, "delta(" + name(a) + ") = " + dl[sa].get_str() + " is not positive");
    }
  }

  auto ray = [&](int family, const mpz_class& v, const std::string& what) {
    record(family, v > 0, what + " = " + v.get_str() + " is not positive");
  };
  auto slope = [&](int family, const mpz_class& v, const std::string& what) {
    record(family, v >= 0, what + " = " + v.get_str() + " is negative (ray eventually fails)");
  };

  for (int b = 0; b < cfg.n; ++b) {
    std::size_t sb = static_cast<std::size_t>(b);
    auto sb_succ = cfg.successors(b);
    for (int a : sb_succ) {
      std::size_t sa = static_cast<std::size_t>(a);
      mpz_class lv = lambda(lat, d, b, a);
      std::string pair = "(" + name(b) + " > " + name(a) + ")";

      // Rays (i, j, k) = (j, j, -1) and (j+1, j, 1) need a != last; rays
      // (j, j, 1) and (j-1, j, -1) need b != last; all have slope
      // delta_a + lambda_{b,a} in the free parameter j >= 2.
      bool a_side = a != last;
      bool b_side = b != last;
      if (a_side || b_side)
        slope(3, dl[sa] + lv, "slope delta + lambda at " + pair);
      if (a_side) {
        ray(3, 2 * dl[sa] + 2 * lv - dl[sb], "(2,2,-1) instance at " + pair);
        ray(3, 3 * dl[sa] + 2 * lv + dl[sb], "(3,2,1) instance at " + pair);
      }
      if (b_side) {
        ray(3, 2 * dl[sa] + 2 * lv + dl[sb], "(2,2,1) instance at " + pair);
        ray(3, dl[sa] + 2 * lv - dl[sb], "(1,2,-1) instance at " + pair);
      }

      // Sibling rays pair a with each other successor a' of b.  Rays
      // (j, j, 1) and (j+1, j, -1) need b != last; rays (j, j, -1) and
      // (j-1, j, 1) need a' != last; slope is delta_a + 2 lambda + delta_a'.
      mpz_class x = dl[sa] + 2 * lv;
      for (int a2 : sb_succ) {
        if (a2 == a) continue;
        std::size_t sa2 = static_cast<std::size_t>(a2);
        std::string trip = "(" + name(b) + " > " + name(a) + ", " + name(a2) + ")";
        bool a2_side = a2 != last;
        if (b_side || a2_side)
          slope(4, x + dl[sa2], "slope delta + 2*lambda + delta' at " + trip);
        if (b_side) {
          ray(4, x + dl[sa2] + dl[sb], "(1,1,1) instance at " + trip);
          ray(4, 2 * x + dl[sa2] - dl[sb], "(2,1,-1) instance at " + trip);
        }
        if (a2_side) {
          ray(4, x + dl[sa2] - dl[sb], "(1,1,-1) instance at " + trip);
          ray(4, x + 2 * dl[sa2] + dl[sb], "(1,2,1) instance at " + trip);
        }
      }
    }
  }

  if (last >= 0) {
    std::size_t sp = static_cast<std::size_t>(last);
    for (int a : cfg.successors(last)) {
      std::size_t sa = static_cast<std::size_t>(a);
      mpz_class base = dl[sa] + 2 * lambda(lat, d, last, a);
      for (int r = 0; r < cfg.n; ++r) {
        if (r == last) continue;
        mpz_class v = base + dl[static_cast<std::size_t>(r)] - dl[sp];
        record(5, v > 0, "chain gap at (" + name(last) + " > " + name(a) + "; " + name(r) +
                             ") = " + v.get_str() + " is not positive");
      }
    }
    record(6, d != lat.line(), "class equals L");
  }

  return rep;
}

// A word is a sequence of generator indices; letter i is applied at step i,
// so the final class is act(p_m) o ... o act(p_1) applied to L.  Words must
// be reduced: no two consecutive letters equal.
inline void require_reduced_word(const PicLattice& lat, const std::vector<int>& word) {
  const MarkedConfig& cfg = lat.config;
  for (std::size_t i = 0; i < word.size(); ++i) {
    check(word[i] >= 0 && word[i] < cfg.n, ErrorKind::UnknownId,
          "word: no point with index " + std::to_string(word[i]));
    check(cfg.is_generator(word[i]), ErrorKind::NotAGenerator,
          "word: '" + cfg.names[static_cast<std::size_t>(word[i])] + "' is not a marked generator");
    if (i > 0)
      check(word[i] != word[i - 1], ErrorKind::WordNotReduced,
            "word: letter '" + cfg.names[static_cast<std::size_t>(word[i])] +
                "' repeats at positions " + std::to_string(i) + " and " + std::to_string(i + 1));
  }
}

struct WordEvaluation {
  DivisorClass result;
  std::vector<InvariantReport> reports;  // one per nonempty prefix
};

inline std::string word_str(const MarkedConfig& cfg, const std::vector<int>& word) {
  std::string s;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) s += ".";
    s += cfg.names[static_cast<std::size_t>(word[i])];
  }
  return s.empty() ? "(empty)" : s;
}

inline WordEvaluation word_evaluate(const PicLattice& lat, const std::vector<int>& word) {
  require_reduced_word(lat, word);
  WordEvaluation ev;
  ev.result = lat.line();
  for (std::size_t i = 0; i < word.size(); ++i) {
    OvertStep st = overt_step(lat, ev.result, word[i]);
    ev.result = std::move(st.result);
    InvariantReport rep = check_positivity(lat, ev.result, word[i], static_cast<int>(i) + 1);
    if (!rep.ok()) {
      std::vector<int> prefix(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      raise(ErrorKind::AssertionFailure,
            "positivity fails after prefix " + word_str(lat.config, prefix) + ": " +
                rep.first_failure() + "; class " + ev.result.str(lat.config));
    }
    ev.reports.push_back(std::move(rep));
  }
  return ev;
}

// Degree of the plane map the word composes to, read off the lattice.
inline mpz_class predicted_degree(const PicLattice& lat, const std::vector<int>& word) {
  return word_evaluate(lat, word).result.m;
}

struct Certificate {
  std::uint64_t config_hash = 0;
  MarkedConfig config;
  int max_len = 0;
  std::uint64_t words_checked = 0;  // reduced words of length exactly max_len
  int max_coeff_bits = 0;
  std::string status;  // "certified" on success; failures raise instead
};

// Exhaustive positivity certificate over all reduced words of length at
// most max_len, walked depth-first in lexicographic generator order with
// incremental evaluation.  Subtrees under distinct first letters are
// independent, so the walk can be sharded externally per first letter.
inline Certificate certify_free_product(const PicLattice& lat, int max_len) {
  const MarkedConfig& cfg = lat.config;
  check(max_len >= 1, ErrorKind::InvalidArgument, "certificate: max_len must be at least 1");
  check(!cfg.generators.empty(), ErrorKind::InvalidArgument, "certificate: no generators");

  Certificate cert;
  cert.config_hash = cfg.hash();
  cert.config = cfg;
  cert.max_len = max_len;

  std::vector<int> gens = cfg.generators;
  std::sort(gens.begin(), gens.end());

  std::vector<int> word;
  auto note_bits = [&](const DivisorClass& d) {
    auto upd = [&](const mpz_class& v) {
      if (v == 0) return;
      int bits = static_cast<int>(mpz_sizeinbase(v.get_mpz_t(), 2));
      if (bits > cert.max_coeff_bits) cert.max_coeff_bits = bits;
    };
    upd(d.m);
    for (const auto& c : d.mults) upd(c);
  };

  // Depth-first over reduced words; every node is checked once, leaves at
  // depth max_len are the tally the certificate reports.  Subtrees under
  // distinct first letters are independent, so the walk shards naturally
  // and the tallies merge in lexicographic order either way.
  auto dfs = [&](auto&& self, const DivisorClass& d) -> void {
    int depth = static_cast<int>(word.size());
    if (depth == max_len) {
      ++cert.words_checked;
      return;
    }
    for (int g : gens) {
      if (depth > 0 && g == word.back()) continue;
      word.push_back(g);
      OvertStep st = overt_step(lat, d, g);
      InvariantReport rep = check_positivity(lat, st.result, g, depth + 1);
      if (!rep.ok())
        raise(ErrorKind::AssertionFailure,
              "positivity fails after prefix " + word_str(cfg, word) + ": " + rep.first_failure() +
                  "; class " + st.result.str(cfg));
      note_bits(st.result);
      self(self, st.result);
      word.pop_back();
    }
  };
  dfs(dfs, lat.line());

  cert.status = "certified";
  return cert;
}

}  // namespace cremona

#endif
