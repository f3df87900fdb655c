// Batch front end: JSON in (files or stdin), JSON report out (stdout or
// --out), one human-readable summary line on stderr.  Exit codes: 0 all
// postconditions verified, 2 verification failure (counterexample in the
// report), 3 recoverable (not split / not rational over the field), 4
// malformed input.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cremona/cremona.hpp"
#include "cremona/json_io.hpp"

namespace {

using cremona::json;

int exit_code_for(cremona::ErrorKind k) {
  using EK = cremona::ErrorKind;
  switch (k) {
    case EK::QuarticNotSplit:
    case EK::BasePointsNotRational:
      return 3;
    case EK::NotDegree3:
    case EK::Reducible:
    case EK::Singular:
    case EK::NotBirational:
    case EK::NotInInertia:
    case EK::NormalizationViolated:
    case EK::WrongMultiplicity:
    case EK::DegenerateConfiguration:
    case EK::ComposedToZero:
    case EK::AssertionFailure:
    case EK::RecursionMismatch:
    case EK::Internal:
      return 2;
    default:
      return 4;
  }
}

std::string status_for_exit(int rc) {
  switch (rc) {
    case 0: return "ok";
    case 2: return "failed";
    case 3: return "recoverable";
    default: return "malformed";
  }
}

std::uint64_t fnv1a64(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  cremona::check(in.good(), cremona::ErrorKind::ParseError, "cannot open '" + path + "'");
  json j = json::parse(in, nullptr, false);
  cremona::check(!j.is_discarded(), cremona::ErrorKind::ParseError,
                 "'" + path + "' is not valid JSON");
  return j;
}

std::vector<int> parse_word(const std::string& s) {
  std::vector<int> w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    cremona::check(!item.empty() && item.find_first_not_of("0123456789") == std::string::npos,
                   cremona::ErrorKind::ParseError, "word: '" + item + "' is not an index");
    w.push_back(std::stoi(item));
  }
  cremona::check(!w.empty(), cremona::ErrorKind::ParseError, "word: empty");
  return w;
}

// Raw command-line values; stdin fills whatever a command still needs.
struct RawArgs {
  std::string field;
  std::string curve_path;
  std::string points_path;
  std::string word;
  std::string out_path;
  int max_len = 12;
  bool abstract_mode = false;
};

struct Inputs {
  cremona::FieldSpec field;
  std::optional<json> curve;
  std::optional<json> points;
  std::optional<json> config;  // abstract mode
  std::optional<std::vector<int>> word;
  int max_len = 12;
  bool abstract_mode = false;
};

// Loads files named by flags, then a JobConfig object from stdin when a
// required piece is still missing.  Flags win over stdin fields.
Inputs gather_inputs(const std::string& cmd, const RawArgs& raw) {
  Inputs in;
  in.max_len = raw.max_len;
  in.abstract_mode = raw.abstract_mode;

  bool needs_curve = cmd != "certify" || !raw.abstract_mode;
  if (cmd == "curve-check") needs_curve = true;
  bool needs_points = cmd != "curve-check";
  bool needs_word = cmd == "compose" || cmd == "degree-crosscheck";

  if (!raw.curve_path.empty()) in.curve = read_json_file(raw.curve_path);
  if (!raw.points_path.empty()) {
    json j = read_json_file(raw.points_path);
    if (raw.abstract_mode)
      in.config = std::move(j);
    else
      in.points = std::move(j);
  }
  if (!raw.word.empty()) in.word = parse_word(raw.word);

  bool missing = (needs_curve && !in.curve) ||
                 (needs_points && !raw.abstract_mode && !in.points) ||
                 (raw.abstract_mode && !in.config) || (needs_word && !in.word);
  json job;
  if (missing) {
    job = json::parse(std::cin, nullptr, false);
    cremona::check(!job.is_discarded() && job.is_object(), cremona::ErrorKind::ParseError,
                   "stdin: expected a JSON job object");
    if (!in.curve && job.contains("curve")) in.curve = job["curve"];
    if (!in.points && job.contains("points")) in.points = job["points"];
    if (!in.config && job.contains("config")) in.config = job["config"];
    if (!in.word && job.contains("word")) {
      cremona::check(job["word"].is_array(), cremona::ErrorKind::ParseError,
                     "stdin: word must be an array of indices");
      std::vector<int> w;
      for (const json& x : job["word"]) {
        cremona::check(x.is_number_integer(), cremona::ErrorKind::ParseError,
                       "stdin: word entries must be integers");
        w.push_back(x.get<int>());
      }
      in.word = std::move(w);
    }
    if (job.contains("max_len") && raw.max_len == 12) {
      cremona::check(job["max_len"].is_number_integer(), cremona::ErrorKind::ParseError,
                     "stdin: max_len must be an integer");
      in.max_len = job["max_len"].get<int>();
    }
    if (job.contains("abstract") && job["abstract"].is_boolean() && job["abstract"].get<bool>()) {
      in.abstract_mode = true;
      if (!in.config && in.points) in.config = std::move(*in.points);
    }
  }

  std::string field_str = raw.field;
  if (field_str.empty() && job.is_object() && job.contains("field") && job["field"].is_string())
    field_str = job["field"].get<std::string>();
  if (field_str.empty()) field_str = "Q";
  in.field = cremona::FieldSpec::parse(field_str);

  cremona::check(!needs_curve || in.curve.has_value(), cremona::ErrorKind::ParseError,
                 cmd + ": no curve given (--curve or stdin)");
  cremona::check(!(needs_points && !in.abstract_mode) || in.points.has_value(),
                 cremona::ErrorKind::ParseError, cmd + ": no points given (--points or stdin)");
  cremona::check(!in.abstract_mode || cmd == "certify", cremona::ErrorKind::ParseError,
                 "--abstract applies to certify only");
  cremona::check(!in.abstract_mode || in.config.has_value(), cremona::ErrorKind::ParseError,
                 "certify --abstract: no configuration given (--points or stdin)");
  cremona::check(!needs_word || in.word.has_value(), cremona::ErrorKind::ParseError,
                 cmd + ": no word given (--word or stdin)");
  return in;
}

// Hash of the job as given; reports over a marked configuration override
// this with the configuration hash.
std::uint64_t input_hash(const std::string& cmd, const Inputs& in) {
  std::string s = cmd + "\n" + in.field.str() + "\n";
  if (in.curve) s += in.curve->dump() + "\n";
  if (in.points) s += in.points->dump() + "\n";
  if (in.config) s += in.config->dump() + "\n";
  if (in.word) {
    for (int w : *in.word) s += std::to_string(w) + ",";
    s += "\n";
  }
  if (cmd == "certify") s += std::to_string(in.max_len) + "\n";
  return fnv1a64(s);
}

template <typename K>
std::vector<cremona::PlanePoint<K>> parse_points(const Inputs& in) {
  cremona::check(in.points->is_array() && !in.points->empty(), cremona::ErrorKind::ParseError,
                 "points: expected a nonempty array");
  std::vector<cremona::PlanePoint<K>> pts;
  for (const json& p : *in.points) pts.push_back(cremona::point_from_json<K>(p, in.field));
  return pts;
}

void check_word_indices(const std::vector<int>& word, std::size_t npoints) {
  for (int w : word)
    cremona::check(w >= 0 && static_cast<std::size_t>(w) < npoints, cremona::ErrorKind::ParseError,
                   "word: index " + std::to_string(w) + " out of range for " +
                       std::to_string(npoints) + " points");
}

// Composes the sigmas of the word letters, leftmost letter outermost.
template <typename K>
cremona::RationalMap<K> compose_word(const cremona::CubicCurve<K>& curve,
                                     const std::vector<cremona::PlanePoint<K>>& pts,
                                     const std::vector<int>& word) {
  std::vector<std::optional<cremona::RationalMap<K>>> cache(pts.size());
  auto sig = [&](int i) -> const cremona::RationalMap<K>& {
    if (!cache[static_cast<std::size_t>(i)])
      cache[static_cast<std::size_t>(i)] = cremona::sigma(curve, pts[static_cast<std::size_t>(i)]);
    return *cache[static_cast<std::size_t>(i)];
  };
  cremona::RationalMap<K> acc = sig(word[0]);
  for (std::size_t i = 1; i < word.size(); ++i) acc = cremona::map_compose(acc, sig(word[i]));
  return acc;
}

template <typename K>
int cmd_curve_check(const Inputs& in, json& rep) {
  cremona::Form<K> f = cremona::cubic_form_from_json<K>(*in.curve, in.field);
  cremona::CubicCurve<K> c = cremona::curve_new(f);
  rep["curve"] = cremona::cubic_to_json(c.f);
  rep["degree"] = 3;
  rep["smooth"] = true;
  return 0;
}

template <typename K>
int cmd_sigma(const Inputs& in, json& rep) {
  cremona::CubicCurve<K> c =
      cremona::curve_new(cremona::cubic_form_from_json<K>(*in.curve, in.field));
  auto pts = parse_points<K>(in);
  cremona::check(pts.size() == 1, cremona::ErrorKind::InvalidArgument,
                 "sigma: expected exactly one point, got " + std::to_string(pts.size()));
  cremona::RationalMap<K> s = cremona::sigma(c, pts[0]);
  auto sq = cremona::map_compose_full(s, s);
  bool involution = cremona::map_equal(sq.map, cremona::identity_map(pts[0].c[0].one_like()));
  bool fixes = cremona::fixes_curve(s, c);
  rep["point"] = cremona::point_to_json(pts[0]);
  rep["map"] = cremona::map_to_json(s);
  rep["degree"] = s.degree();
  rep["involution"] = involution;
  rep["fixes_curve"] = fixes;
  rep["squared_content_degree"] = sq.content.degree();
  rep["inflexion"] = cremona::is_inflexion(c, pts[0]);
  return (involution && fixes && s.degree() == 3) ? 0 : 2;
}

template <typename K>
int cmd_compose(const Inputs& in, json& rep) {
  cremona::CubicCurve<K> c =
      cremona::curve_new(cremona::cubic_form_from_json<K>(*in.curve, in.field));
  auto pts = parse_points<K>(in);
  check_word_indices(*in.word, pts.size());
  cremona::RationalMap<K> m = compose_word(c, pts, *in.word);
  bool preserves = cremona::preserves_curve(m, c);
  rep["word"] = *in.word;
  rep["degree"] = m.degree();
  rep["map"] = cremona::map_to_json(m);
  rep["preserves_curve"] = preserves;
  return preserves ? 0 : 2;
}

template <typename K>
int cmd_verify(const Inputs& in, json& rep) {
  cremona::CubicCurve<K> c =
      cremona::curve_new(cremona::cubic_form_from_json<K>(*in.curve, in.field));
  auto pts = parse_points<K>(in);
  json checks = json::array();
  bool all = true;
  auto push = [&](const std::string& name, bool pass, const std::string& detail = "") {
    json j{{"name", name}, {"pass", pass}};
    if (!pass && !detail.empty()) j["detail"] = detail;
    checks.push_back(std::move(j));
    all = all && pass;
  };

  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::string tag = "sigma[" + std::to_string(i) + "] ";
    cremona::RationalMap<K> s = cremona::sigma(c, pts[i]);
    push(tag + "degree 3", s.degree() == 3, "degree " + std::to_string(s.degree()));
    auto sq = cremona::map_compose_full(s, s);
    push(tag + "involution",
         cremona::map_equal(sq.map, cremona::identity_map(pts[i].c[0].one_like())));
    push(tag + "fixes curve", cremona::fixes_curve(s, c));
    auto quots = cremona::degfix_quotients(s, c);
    bool qok = false;
    int nonzero = 0;
    for (const auto& q : quots)
      if (!q.is_zero()) ++nonzero;
    qok = nonzero > 0;
    for (const auto& q : quots)
      if (!q.is_zero() && q.degree() != 1) qok = false;
    push(tag + "cross-product quotients linear", qok);
    auto dec = cremona::decomposition_candidate_check(s, c);
    push(tag + "base points on curve", dec.ok(), dec.ok() ? "" : dec.violations.front());
    auto hom = cremona::homaloidal_check(s);
    push(tag + "homaloidal sums (6, 8)", hom.sum_k == 6 && hom.sum_k2 == 8,
         "got (" + std::to_string(hom.sum_k) + ", " + std::to_string(hom.sum_k2) + ")");
    push(tag + "multiplicity pattern {2,1,1,1,1}",
         hom.small_degree_pattern_ok.has_value() && *hom.small_degree_pattern_ok);
  }

  if (in.word) {
    check_word_indices(*in.word, pts.size());
    cremona::RationalMap<K> m = compose_word(c, pts, *in.word);
    push("word preserves curve", cremona::preserves_curve(m, c));
    auto dec = cremona::decomposition_candidate_check(m, c);
    push("word base points on curve", dec.ok(), dec.ok() ? "" : dec.violations.front());
    auto hom = cremona::homaloidal_check(m);
    push("word homaloidal complete", hom.complete(),
         "deficits (" + std::to_string(hom.deficit_k) + ", " + std::to_string(hom.deficit_k2) + ")");
    rep["word_degree"] = m.degree();
  }

  rep["checks"] = std::move(checks);
  rep["all_passed"] = all;
  return all ? 0 : 2;
}

template <typename K>
int cmd_basepoints(const Inputs& in, json& rep) {
  cremona::CubicCurve<K> c =
      cremona::curve_new(cremona::cubic_form_from_json<K>(*in.curve, in.field));
  auto pts = parse_points<K>(in);
  cremona::RationalMap<K> m = [&] {
    if (in.word) {
      check_word_indices(*in.word, pts.size());
      return compose_word(c, pts, *in.word);
    }
    cremona::check(pts.size() == 1, cremona::ErrorKind::InvalidArgument,
                   "basepoints: give exactly one point or a --word");
    return cremona::sigma(c, pts[0]);
  }();
  auto hom = cremona::homaloidal_check(m);
  rep["map_degree"] = m.degree();
  rep["report"] = cremona::homaloidal_report_to_json(hom);
  return hom.complete() ? 0 : 2;
}

template <typename K>
int cmd_certify(const Inputs& in, json& rep) {
  cremona::MarkedConfig cfg;
  if (in.abstract_mode) {
    cfg = cremona::config_from_json(*in.config);
    rep["mode"] = "abstract";
  } else {
    cremona::CubicCurve<K> c =
        cremona::curve_new(cremona::cubic_form_from_json<K>(*in.curve, in.field));
    auto pts = parse_points<K>(in);
    cremona::MarkedPointSet<K> ms = cremona::marked_set_build(c, pts);
    cfg = ms.config;
    rep["mode"] = "geometric";
    rep["marked_set"] = cremona::marked_set_to_json(ms);
  }
  cremona::PicLattice lat = cremona::lattice_new(cfg);
  cremona::Certificate cert = cremona::certify_free_product(lat, in.max_len);
  rep["certificate"] = cremona::certificate_to_json(cert);
  rep["config_hash"] = std::to_string(cert.config_hash);
  return 0;
}

template <typename K>
int cmd_degree_crosscheck(const Inputs& in, json& rep) {
  cremona::CubicCurve<K> c =
      cremona::curve_new(cremona::cubic_form_from_json<K>(*in.curve, in.field));
  auto pts = parse_points<K>(in);
  check_word_indices(*in.word, pts.size());
  cremona::MarkedPointSet<K> ms = cremona::marked_set_build(c, pts);
  rep["config_hash"] = std::to_string(ms.config.hash());

  // Word letters index the points list; translate to omega ids.
  std::vector<int> lattice_word;
  for (int w : *in.word) {
    const cremona::PlanePoint<K>& p = pts[static_cast<std::size_t>(w)];
    int idx = -1;
    for (std::size_t i = 0; i < ms.omega.size(); ++i)
      if (!ms.omega[i].near && ms.omega[i].pt == p) idx = static_cast<int>(i);
    cremona::check(idx >= 0, cremona::ErrorKind::Internal, "generator missing from omega");
    lattice_word.push_back(idx);
  }

  cremona::PicLattice lat = cremona::lattice_new(ms.config);
  mpz_class predicted = cremona::predicted_degree(lat, lattice_word);
  cremona::RationalMap<K> m = compose_word(c, pts, *in.word);
  bool match = (mpz_class(m.degree()) == predicted);
  rep["word"] = *in.word;
  rep["symbolic_degree"] = m.degree();
  rep["lattice_degree"] = predicted.get_str();
  rep["match"] = match;
  return match ? 0 : 2;
}

template <typename K>
int run_command(const std::string& cmd, const Inputs& in, json& rep) {
  if (cmd == "curve-check") return cmd_curve_check<K>(in, rep);
  if (cmd == "sigma") return cmd_sigma<K>(in, rep);
  if (cmd == "compose") return cmd_compose<K>(in, rep);
  if (cmd == "verify") return cmd_verify<K>(in, rep);
  if (cmd == "basepoints") return cmd_basepoints<K>(in, rep);
  if (cmd == "certify") return cmd_certify<K>(in, rep);
  if (cmd == "degree-crosscheck") return cmd_degree_crosscheck<K>(in, rep);
  cremona::raise(cremona::ErrorKind::InvalidArgument, "unknown command '" + cmd + "'");
}

void emit(const json& rep, const std::string& out_path) {
  std::string text = cremona::json_canonical_dump(rep);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(out_path);
    cremona::check(out.good(), cremona::ErrorKind::ParseError, "cannot write '" + out_path + "'");
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for cubic-fixing plane Cremona maps"};
  app.require_subcommand(1);

  RawArgs raw;
  const std::vector<std::pair<std::string, std::string>> commands = {
      {"curve-check", "validate that the input cubic is smooth and irreducible"},
      {"sigma", "construct the cubic involution at a marked point and verify it"},
      {"compose", "compose the involutions of a word and report the result"},
      {"verify", "run every involution postcondition for the marked points"},
      {"basepoints", "base points with multiplicities and homaloidal sums"},
      {"certify", "exhaustive free-product certificate up to --max-len"},
      {"degree-crosscheck", "compare symbolic and lattice degrees of a word"},
  };
  for (const auto& [name, desc] : commands) {
    CLI::App* sc = app.add_subcommand(name, desc);
    sc->add_option("--field", raw.field, "Q (default) or Fp:<p> with p >= 7 prime");
    sc->add_option("--curve", raw.curve_path, "JSON file: 10 cubic coefficients, graded-lex");
    sc->add_option("--points", raw.points_path,
                   "JSON file: array of points, or the configuration in --abstract mode");
    sc->add_option("--word", raw.word, "comma-separated indices into the points list");
    sc->add_option("--max-len", raw.max_len, "maximum word length for certify (default 12)");
    sc->add_flag("--abstract", raw.abstract_mode, "certify a combinatorial configuration");
    sc->add_option("--out", raw.out_path, "write the JSON report here instead of stdout");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 4;
  }

  std::string cmd = app.get_subcommands().front()->get_name();
  json rep{{"command", cmd}};
  int rc = 0;
  try {
    Inputs in = gather_inputs(cmd, raw);
    rep["field"] = in.field.str();
    rep["config_hash"] = std::to_string(input_hash(cmd, in));
    rc = in.field.kind == cremona::FieldSpec::Kind::Rationals
             ? run_command<cremona::Rational>(cmd, in, rep)
             : run_command<cremona::Fp>(cmd, in, rep);
  } catch (const cremona::Error& e) {
    rc = exit_code_for(e.kind());
    rep["error"] = json{{"kind", cremona::error_kind_name(e.kind())}, {"message", e.what()}};
  } catch (const std::exception& e) {
    rc = 4;
    rep["error"] = json{{"kind", "Unhandled"}, {"message", e.what()}};
  }
  rep["status"] = status_for_exit(rc);

  try {
    emit(rep, raw.out_path);
  } catch (const cremona::Error& e) {
    std::cerr << cmd << ": " << e.what() << "\n";
    return 4;
  }
  std::cerr << cmd << ": " << rep["status"].get<std::string>();
  if (rep.contains("error")) std::cerr << " (" << rep["error"]["kind"].get<std::string>() << ")";
  std::cerr << "\n";
  return rc;
}
