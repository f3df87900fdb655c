// Wire formats: scalars as canonical decimal strings, forms as graded-lex
// term lists, curves as 10-coefficient vectors, points as coordinate
// triples, plus marked sets, abstract configurations, and certificates.
// Parsing is strict; any shape violation raises ParseError.
#ifndef CREMONA_JSON_IO_HPP
#define CREMONA_JSON_IO_HPP

#include <json.hpp>

#include <array>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "config.hpp"
#include "curve.hpp"
#include "errors.hpp"
#include "form.hpp"
#include "maps.hpp"
#include "picard.hpp"
#include "scalars.hpp"

namespace cremona {

using nlohmann::json;

namespace jsondetail {

inline void reqj(bool cond, const std::string& msg) {
  check(cond, ErrorKind::ParseError, msg);
}

inline std::string scalar_string(const json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  raise(ErrorKind::ParseError, what + ": expected a string or integer literal");
}

template <typename K>
struct ScalarIo;

template <>
struct ScalarIo<Rational> {
  static Rational parse(const std::string& s, const FieldSpec&) { return Rational::parse(s); }
};

template <>
struct ScalarIo<Fp> {
  static Fp parse(const std::string& s, const FieldSpec& f) { return Fp::parse(s, f.p); }
};

template <typename K>
K scalar_from_json(const json& j, const FieldSpec& field, const std::string& what) {
  return ScalarIo<K>::parse(scalar_string(j, what), field);
}

}  // namespace jsondetail

// --- forms -----------------------------------------------------------------

template <typename K>
json form_to_json(const Form<K>& f) {
  json terms = json::array();
  for (const auto& [mono, c] : f.terms())
    terms.push_back(json{{"exp", json::array({mono[0], mono[1], mono[2]})}, {"c", c.str()}});
  return json{{"degree", f.degree()}, {"terms", std::move(terms)}};
}

template <typename K>
Form<K> form_from_json(const json& j, const FieldSpec& field) {
  using jsondetail::reqj;
  reqj(j.is_object() && j.contains("degree") && j.contains("terms"), "form: expected {degree, terms}");
  reqj(j["degree"].is_number_integer(), "form: degree must be an integer");
  reqj(j["terms"].is_array(), "form: terms must be an array");
  Form<K> f;
  for (const json& t : j["terms"]) {
    reqj(t.is_object() && t.contains("exp") && t.contains("c"), "form term: expected {exp, c}");
    const json& e = t["exp"];
    reqj(e.is_array() && e.size() == 3, "form term: exp must have 3 entries");
    std::array<int, 3> exp{};
    for (int i = 0; i < 3; ++i) {
      reqj(e[static_cast<std::size_t>(i)].is_number_integer(), "form term: exponent must be an integer");
      exp[static_cast<std::size_t>(i)] = e[static_cast<std::size_t>(i)].get<int>();
      reqj(exp[static_cast<std::size_t>(i)] >= 0, "form term: negative exponent");
    }
    K c = jsondetail::scalar_from_json<K>(t["c"], field, "form coefficient");
    reqj(f.coeff(exp[0], exp[1], exp[2]).is_zero(), "form: repeated monomial");
    f.set_term(exp[0], exp[1], exp[2], c);
  }
  reqj(f.degree() == j["degree"].get<int>(), "form: declared degree does not match the terms");
  return f;
}

// --- points ----------------------------------------------------------------

template <typename K>
json point_to_json(const PlanePoint<K>& p) {
  return json::array({p.c[0].str(), p.c[1].str(), p.c[2].str()});
}

template <typename K>
PlanePoint<K> point_from_json(const json& j, const FieldSpec& field) {
  jsondetail::reqj(j.is_array() && j.size() == 3, "point: expected a 3-element array");
  K x = jsondetail::scalar_from_json<K>(j[0], field, "point coordinate");
  K y = jsondetail::scalar_from_json<K>(j[1], field, "point coordinate");
  K z = jsondetail::scalar_from_json<K>(j[2], field, "point coordinate");
  check(!(x.is_zero() && y.is_zero() && z.is_zero()), ErrorKind::ParseError,
        "point: all coordinates are zero");
  return PlanePoint<K>::make(x, y, z);
}

// --- curves ----------------------------------------------------------------

// Degree-3 monomials in graded-lex order; fixed wire order for curves.
inline const std::array<std::array<int, 3>, 10>& cubic_monomial_order() {
  static const std::array<std::array<int, 3>, 10> order = {{{3, 0, 0},
                                                            {2, 1, 0},
                                                            {2, 0, 1},
                                                            {1, 2, 0},
                                                            {1, 1, 1},
                                                            {1, 0, 2},
                                                            {0, 3, 0},
                                                            {0, 2, 1},
                                                            {0, 1, 2},
                                                            {0, 0, 3}}};
  return order;
}

template <typename K>
json cubic_to_json(const Form<K>& f) {
  json a = json::array();
  for (const auto& m : cubic_monomial_order()) a.push_back(f.coeff(m[0], m[1], m[2]).str());
  return a;
}

// Parses the 10-coefficient vector without any curve validation, so the
// caller can run (and report) the smoothness checks itself.
template <typename K>
Form<K> cubic_form_from_json(const json& j, const FieldSpec& field) {
  jsondetail::reqj(j.is_array() && j.size() == 10, "curve: expected a 10-coefficient array");
  Form<K> f;
  const auto& order = cubic_monomial_order();
  for (std::size_t i = 0; i < 10; ++i) {
    K c = jsondetail::scalar_from_json<K>(j[i], field, "curve coefficient");
    if (!c.is_zero()) f.set_term(order[i][0], order[i][1], order[i][2], c);
  }
  return f;
}

// --- maps ------------------------------------------------------------------

template <typename K>
json map_to_json(const RationalMap<K>& m) {
  return json{{"degree", m.degree()},
              {"components", json::array({form_to_json(m.comp[0]), form_to_json(m.comp[1]),
                                          form_to_json(m.comp[2])})}};
}

template <typename K>
RationalMap<K> map_from_json(const json& j, const FieldSpec& field) {
  using jsondetail::reqj;
  reqj(j.is_object() && j.contains("degree") && j.contains("components"),
       "map: expected {degree, components}");
  const json& comps = j["components"];
  reqj(comps.is_array() && comps.size() == 3, "map: expected 3 components");
  RationalMap<K> m = map_new<K>(form_from_json<K>(comps[0], field), form_from_json<K>(comps[1], field),
                                form_from_json<K>(comps[2], field));
  reqj(j["degree"].is_number_integer() && m.degree() == j["degree"].get<int>(),
       "map: declared degree does not match the components");
  return m;
}

// --- base points and reports -------------------------------------------------

template <typename K>
json omega_point_to_json(const OmegaPoint<K>& op) {
  if (!op.near) return json{{"point", point_to_json(op.pt)}};
  return json{{"near_of", point_to_json(op.pt)}, {"direction", point_to_json(op.dir)}};
}

template <typename K>
json base_point_record_to_json(const BasePointRecord<K>& r) {
  json j = omega_point_to_json(r.location);
  j["multiplicity"] = r.multiplicity;
  return j;
}

template <typename K>
json homaloidal_report_to_json(const HomaloidalReport<K>& r) {
  json pts = json::array();
  for (const auto& rec : r.records) pts.push_back(base_point_record_to_json(rec));
  json j{{"degree", r.degree},
         {"base_points", std::move(pts)},
         {"sum_k", r.sum_k},
         {"sum_k2", r.sum_k2},
         {"deficit_k", r.deficit_k},
         {"deficit_k2", r.deficit_k2},
         {"complete", r.complete()}};
  if (r.small_degree_pattern_ok.has_value()) j["small_degree_pattern_ok"] = *r.small_degree_pattern_ok;
  return j;
}

// --- marked sets and abstract configurations --------------------------------

template <typename K>
json marked_set_to_json(const MarkedPointSet<K>& ms) {
  json omega = json::array();
  for (std::size_t i = 0; i < ms.omega.size(); ++i) {
    json rec = omega_point_to_json(ms.omega[i]);
    rec["id"] = static_cast<int>(i);
    if (ms.omega[i].near) rec["near_of_id"] = ms.config.near_base[i];
    omega.push_back(std::move(rec));
  }
  json succ = json::array();
  for (int b = 0; b < ms.config.n; ++b)
    for (int a : ms.config.successors(b)) succ.push_back(json::array({b, a}));
  json gens = json::array();
  for (int g : ms.config.generators) gens.push_back(g);
  return json{{"omega", std::move(omega)},
              {"generators", std::move(gens)},
              {"succ", std::move(succ)},
              {"config_hash", std::to_string(ms.config.hash())}};
}

inline json config_to_json(const MarkedConfig& cfg) {
  json points = json::array();
  for (int i = 0; i < cfg.n; ++i) {
    json rec{{"name", cfg.names[static_cast<std::size_t>(i)]}};
    if (cfg.is_near(i)) rec["near_of"] = cfg.names[static_cast<std::size_t>(cfg.near_base[static_cast<std::size_t>(i)])];
    points.push_back(std::move(rec));
  }
  json gens = json::array();
  for (int g : cfg.generators) gens.push_back(cfg.names[static_cast<std::size_t>(g)]);
  json succ = json::array();
  for (int b = 0; b < cfg.n; ++b)
    for (int a : cfg.successors(b))
      succ.push_back(json::array(
          {cfg.names[static_cast<std::size_t>(b)], cfg.names[static_cast<std::size_t>(a)]}));
  return json{{"points", std::move(points)}, {"generators", std::move(gens)}, {"succ", std::move(succ)}};
}

// Abstract configuration: {points: [{name, near_of?}], generators, succ},
// with points referenced by name (or by index) in generators and succ.
inline MarkedConfig config_from_json(const json& j) {
  using jsondetail::reqj;
  reqj(j.is_object() && j.contains("points") && j.contains("generators") && j.contains("succ"),
       "config: expected {points, generators, succ}");
  const json& pts = j["points"];
  reqj(pts.is_array(), "config: points must be an array");

  MarkedConfig cfg;
  cfg.n = static_cast<int>(pts.size());
  std::vector<std::string> near_names(pts.size());
  for (const json& p : pts) {
    reqj(p.is_object() && p.contains("name") && p["name"].is_string(),
         "config point: expected {name, near_of?}");
    std::string name = p["name"].get<std::string>();
    reqj(!name.empty(), "config point: empty name");
    for (const auto& seen : cfg.names) reqj(seen != name, "config point: duplicate name '" + name + "'");
    if (p.contains("near_of")) {
      reqj(p["near_of"].is_string(), "config point: near_of must be a name");
      near_names[cfg.names.size()] = p["near_of"].get<std::string>();
    }
    cfg.names.push_back(std::move(name));
  }
  auto resolve = [&](const json& ref, const std::string& what) -> int {
    if (ref.is_number_integer()) {
      int i = ref.get<int>();
      reqj(i >= 0 && i < cfg.n, what + ": index " + std::to_string(i) + " out of range");
      return i;
    }
    reqj(ref.is_string(), what + ": expected a point name or index");
    std::string name = ref.get<std::string>();
    for (int i = 0; i < cfg.n; ++i)
      if (cfg.names[static_cast<std::size_t>(i)] == name) return i;
    raise(ErrorKind::ParseError, what + ": unknown point '" + name + "'");
  };

  cfg.near_base.assign(static_cast<std::size_t>(cfg.n), -1);
  for (int i = 0; i < cfg.n; ++i)
    if (!near_names[static_cast<std::size_t>(i)].empty())
      cfg.near_base[static_cast<std::size_t>(i)] =
          resolve(json(near_names[static_cast<std::size_t>(i)]), "config near_of");

  cfg.succ.assign(static_cast<std::size_t>(cfg.n), std::vector<bool>(static_cast<std::size_t>(cfg.n), false));
  reqj(j["succ"].is_array(), "config: succ must be an array of pairs");
  for (const json& pair : j["succ"]) {
    reqj(pair.is_array() && pair.size() == 2, "config succ: expected [predecessor, successor] pairs");
    int b = resolve(pair[0], "config succ");
    int a = resolve(pair[1], "config succ");
    reqj(!cfg.succ[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)],
         "config succ: duplicate pair");
    cfg.succ[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = true;
  }

  reqj(j["generators"].is_array(), "config: generators must be an array");
  for (const json& g : j["generators"]) cfg.generators.push_back(resolve(g, "config generator"));
  return cfg;
}

// --- certificates ------------------------------------------------------------

inline json certificate_to_json(const Certificate& c) {
  json j = config_to_json(c.config);
  json omega = std::move(j["points"]);
  return json{{"config_hash", std::to_string(c.config_hash)},
              {"generators", std::move(j["generators"])},
              {"omega", std::move(omega)},
              {"succ", std::move(j["succ"])},
              {"max_len", c.max_len},
              {"words_checked", c.words_checked},
              {"max_coeff_bits", c.max_coeff_bits},
              {"status", c.status}};
}

// Canonical dump: sorted keys (nlohmann object order), two-space indent,
// trailing newline.  Reports must be byte-identical for identical inputs.
inline std::string json_canonical_dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace cremona

#endif
