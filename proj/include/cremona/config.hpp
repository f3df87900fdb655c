// Combinatorial shadow of a marked point set on a cubic: point records
// (proper or infinitely near), the tangency-successor relation, and the
// chosen generators. This is all the lattice machinery ever sees, so the
// geometric and abstract entry points converge here.
#ifndef CREMONA_CONFIG_HPP
#define CREMONA_CONFIG_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace cremona {

struct MarkedConfig {
  int n = 0;
  std::vector<std::string> names;       // display only; excluded from the hash
  std::vector<int> near_base;           // -1 for proper points
  std::vector<std::vector<bool>> succ;  // succ[a][b]: a > b in the tangency order
  std::vector<int> generators;          // indices of the marked generators

  bool is_near(int i) const { return near_base[static_cast<std::size_t>(i)] >= 0; }
  bool is_generator(int i) const {
    for (int g : generators)
      if (g == i) return true;
    return false;
  }
  std::vector<int> successors(int a) const {
    std::vector<int> out;
    for (int b = 0; b < n; ++b)
      if (succ[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) out.push_back(b);
    return out;
  }
  std::vector<int> predecessors(int b) const {
    std::vector<int> out;
    for (int a = 0; a < n; ++a)
      if (succ[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]) out.push_back(a);
    return out;
  }

  // Structural invariants shared by every configuration this library
  // accepts; geometric builds satisfy them by theorem, abstract inputs are
  // rejected when they do not.
  void validate() const {
    auto req = [](bool cond, const std::string& msg) {
      check(cond, ErrorKind::InvalidArgument, "marked configuration: " + msg);
    };
    req(n >= 0, "negative point count");
    req(static_cast<int>(names.size()) == n && static_cast<int>(near_base.size()) == n &&
            static_cast<int>(succ.size()) == n,
        "inconsistent table sizes");
    for (const auto& row : succ) req(static_cast<int>(row.size()) == n, "ragged succ matrix");
    if (n == 0) {
      // The empty configuration carries a one-dimensional lattice and no
      // maps; it is valid but admits no generators.
      req(generators.empty(), "generators without points");
      return;
    }
    req(!generators.empty(), "no generators");
    for (std::size_t i = 0; i < generators.size(); ++i) {
      int g = generators[i];
      req(g >= 0 && g < n, "generator index out of range");
      req(!is_near(g), "generator '" + names[static_cast<std::size_t>(g)] + "' is a near record");
      for (std::size_t j = i + 1; j < generators.size(); ++j)
        req(generators[j] != g, "duplicate generator");
    }
    for (int i = 0; i < n; ++i) {
      std::size_t si = static_cast<std::size_t>(i);
      if (is_near(i)) {
        int b = near_base[si];
        req(b >= 0 && b < n && b != i, "near base out of range");
        req(!is_near(b), "near record based on a near record");
        req(is_generator(b), "near record '" + names[si] + "' not based on a generator");
        for (int c = 0; c < n; ++c)
          req(!succ[si][static_cast<std::size_t>(c)],
              "near record '" + names[si] + "' acts as a source");
      }
      req(!succ[si][si], "reflexive succ at '" + names[si] + "'");
    }
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        req(!(succ[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] &&
              succ[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)]),
            "mutual succ between '" + names[static_cast<std::size_t>(a)] + "' and '" +
                names[static_cast<std::size_t>(b)] + "'");
    for (int b = 0; b < n; ++b) {
      auto pred = predecessors(b);
      req(pred.size() <= 1, "'" + names[static_cast<std::size_t>(b)] + "' has several predecessors");
      if (is_near(b))
        req(pred.size() == 1 && pred[0] == near_base[static_cast<std::size_t>(b)],
            "near record '" + names[static_cast<std::size_t>(b)] +
                "' must be the successor of exactly its base");
      if (!is_generator(b) && !is_near(b))
        req(pred.size() == 1 && is_generator(pred[0]),
            "'" + names[static_cast<std::size_t>(b)] + "' is neither a generator nor a successor of one");
    }
    for (int g : generators) {
      auto sg = successors(g);
      req(sg.size() == 4, "generator '" + names[static_cast<std::size_t>(g)] +
                              "' has " + std::to_string(sg.size()) + " successors, expected 4");
      for (std::size_t i = 0; i < sg.size(); ++i)
        for (std::size_t j = 0; j < sg.size(); ++j)
          if (i != j)
            req(!succ[static_cast<std::size_t>(sg[i])][static_cast<std::size_t>(sg[j])],
                "successors of '" + names[static_cast<std::size_t>(g)] + "' are succ-related");
    }
  }

  // FNV-1a over the structural data only (names excluded), so the same
  // combinatorics hashes identically however it was built.
  std::uint64_t hash() const {
    std::uint64_t h = 14695981039346656037ull;
    auto mix = [&h](std::uint64_t v) {
      for (int k = 0; k < 8; ++k) {
        h ^= (v >> (8 * k)) & 0xff;
        h *= 1099511628211ull;
      }
    };
    mix(static_cast<std::uint64_t>(n));
    for (int b : near_base) mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(b)));
    mix(static_cast<std::uint64_t>(generators.size()));
    for (int g : generators) mix(static_cast<std::uint64_t>(g));
    for (const auto& row : succ) {
      std::uint64_t acc = 0;
      int bits = 0;
      for (bool v : row) {
        acc = (acc << 1) | (v ? 1u : 0u);
        if (++bits == 64) {
          mix(acc);
          acc = 0;
          bits = 0;
        }
      }
      if (bits) mix(acc);
    }
    return h;
  }
};

}  // namespace cremona

#endif  // CREMONA_CONFIG_HPP
