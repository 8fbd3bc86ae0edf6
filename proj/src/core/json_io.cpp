#include "json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "errors.hpp"

namespace orbitline::io {

namespace {

void expect(bool cond, const std::string& msg) {
  if (!cond) fail(ErrorCode::ValidationError, msg);
}

const json& require(const json& j, const char* key) {
  expect(j.is_object(), std::string("expected an object with key '") + key + "'");
  auto it = j.find(key);
  expect(it != j.end(), std::string("missing key '") + key + "'");
  return *it;
}

int int_from_json(const json& j, const char* what) {
  expect(j.is_number_integer() || j.is_number_unsigned(),
         std::string(what) + " must be an integer");
  return j.get<int>();
}

std::vector<int> int_list_from_json(const json& j, const char* what) {
  expect(j.is_array(), std::string(what) + " must be an array");
  std::vector<int> out;
  out.reserve(j.size());
  for (const json& e : j) out.push_back(int_from_json(e, what));
  return out;
}

}  // namespace

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    fail(ErrorCode::ParseError, std::string("invalid JSON: ") + e.what());
  }
}

json rational_to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (j.is_number_unsigned()) {
    return Rational::parse(std::to_string(j.get<unsigned long long>()));
  }
  if (j.is_number_float()) {
    fail(ErrorCode::ValidationError,
         "rationals must be exact: write \"p/q\" strings, not floats");
  }
  fail(ErrorCode::ValidationError, "expected a rational (\"p/q\" string or integer)");
}

json polynomial_to_json(const Polynomial& p) {
  json coeffs = json::array();
  if (p.is_zero()) {
    coeffs.push_back("0/1");
  } else {
    for (const Rational& c : p.coeffs()) coeffs.push_back(rational_to_json(c));
  }
  return json{{"coeffs", coeffs}};
}

Polynomial polynomial_from_json(const json& j) {
  const json& arr = j.is_array() ? j : require(j, "coeffs");
  expect(arr.is_array(), "'coeffs' must be an array, constant term first");
  std::vector<Rational> coeffs;
  coeffs.reserve(arr.size());
  for (const json& e : arr) coeffs.push_back(rational_from_json(e));
  return Polynomial(std::move(coeffs));
}

json linear_map_to_json(const LinearMap& l) {
  return json{{"alpha", rational_to_json(l.alpha)}, {"beta", rational_to_json(l.beta)}};
}

LinearMap linear_map_from_json(const json& j) {
  return LinearMap(rational_from_json(require(j, "alpha")),
                   rational_from_json(require(j, "beta")));
}

json point_to_json(const Point& p) {
  return json{{"x", rational_to_json(p.x)}, {"y", rational_to_json(p.y)}};
}

Point point_from_json(const json& j) {
  return Point{rational_from_json(require(j, "x")), rational_from_json(require(j, "y"))};
}

json line_to_json(const Line& l) {
  if (l == Line::diagonal()) return json{{"kind", "diagonal"}};
  return json{{"kind", "general"},
              {"alpha", rational_to_json(l.a)},
              {"beta", rational_to_json(l.b)}};
}

Line line_from_json(const json& j) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    expect(s == "diag" || s == "diagonal", "unknown line shorthand '" + s + "'");
    return Line::diagonal();
  }
  expect(j.is_object(), "line must be an object or the string \"diagonal\"");
  if (auto it = j.find("kind"); it != j.end()) {
    const std::string kind = it->get<std::string>();
    if (kind == "diagonal") return Line::diagonal();
    expect(kind == "general", "line kind must be 'diagonal' or 'general'");
  }
  return Line{rational_from_json(require(j, "alpha")), rational_from_json(require(j, "beta"))};
}

json sequence_to_json(const SequenceSpec& s) {
  return json{{"preperiod", s.preperiod}, {"cycle", s.cycle}};
}

SequenceSpec sequence_from_json(const json& j) {
  SequenceSpec s;
  expect(j.is_object(), "sequence must be an object with 'cycle' (and 'preperiod')");
  if (auto it = j.find("preperiod"); it != j.end()) {
    s.preperiod = int_list_from_json(*it, "preperiod");
  }
  s.cycle = int_list_from_json(require(j, "cycle"), "cycle");
  expect(!s.cycle.empty(), "sequence cycle must be nonempty");
  return s;
}

json word_to_json(const Word& w) {
  return json{{"letters", w.letters}, {"order", apply_order_name(w.order)}};
}

Word word_from_json(const json& j) {
  if (j.is_array()) {
    return Word{int_list_from_json(j, "word"), ApplyOrder::InnerFirst};
  }
  Word w;
  w.letters = int_list_from_json(require(j, "letters"), "letters");
  const std::string order = require(j, "order").get<std::string>();
  if (order == "inner_first") {
    w.order = ApplyOrder::InnerFirst;
  } else if (order == "outer_first") {
    w.order = ApplyOrder::OuterFirst;
  } else {
    fail(ErrorCode::ValidationError, "order must be 'inner_first' or 'outer_first'");
  }
  return w;
}

json system_to_json(const SemigroupSystem& sys) {
  json gens = json::array();
  for (const PolyPair& g : sys.generators) {
    gens.push_back(json{{"f", polynomial_to_json(g.f)}, {"g", polynomial_to_json(g.g)}});
  }
  json out{{"generators", gens}, {"base", point_to_json(sys.base)}};
  if (sys.line.has_value()) out["line"] = line_to_json(*sys.line);
  if (!sys.sequences.empty()) {
    json seqs = json::object();
    for (const auto& [name, spec] : sys.sequences) seqs[name] = sequence_to_json(spec);
    out["sequences"] = seqs;
  }
  out["budget"] =
      json{{"max_words", sys.budget.max_words}, {"max_digits", sys.budget.max_digits}};
  if (sys.rng_seed != 0) out["rng_seed"] = sys.rng_seed;
  return out;
}

SemigroupSystem system_from_json(const json& j) {
  expect(j.is_object(), "system must be a JSON object");
  static const std::vector<std::string> known{"generators", "base",   "line",    "sequences",
                                              "budget",     "budgets", "rng_seed", "comment"};
  for (auto it = j.begin(); it != j.end(); ++it) {
    expect(std::find(known.begin(), known.end(), it.key()) != known.end(),
           "unknown system key '" + it.key() + "'");
  }

  SemigroupSystem sys;
  const json& gens = require(j, "generators");
  expect(gens.is_array() && !gens.empty(), "'generators' must be a nonempty array");
  for (const json& g : gens) {
    sys.generators.push_back(PolyPair{polynomial_from_json(require(g, "f")),
                                      polynomial_from_json(require(g, "g"))});
  }
  sys.base = point_from_json(require(j, "base"));
  if (auto it = j.find("line"); it != j.end()) sys.line = line_from_json(*it);
  if (auto it = j.find("sequences"); it != j.end()) {
    expect(it->is_object(), "'sequences' must map names to sequence objects");
    for (auto s = it->begin(); s != it->end(); ++s) {
      sys.sequences.emplace(s.key(), sequence_from_json(s.value()));
    }
  }
  const json* budget = nullptr;
  if (auto it = j.find("budget"); it != j.end()) budget = &*it;
  if (auto it = j.find("budgets"); it != j.end()) budget = &*it;
  if (budget != nullptr) {
    expect(budget->is_object(), "'budget' must be an object");
    if (auto it = budget->find("max_words"); it != budget->end()) {
      sys.budget.max_words = it->get<long long>();
    }
    if (auto it = budget->find("max_digits"); it != budget->end()) {
      sys.budget.max_digits = it->get<long long>();
    }
    expect(sys.budget.max_words > 0 && sys.budget.max_digits > 0,
           "budgets must be positive");
  }
  if (auto it = j.find("rng_seed"); it != j.end()) sys.rng_seed = it->get<std::uint64_t>();
  sys.validate();
  return sys;
}

SemigroupSystem system_from_string(const std::string& text) {
  return system_from_json(parse_json(text));
}

SemigroupSystem system_from_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return system_from_string(buf.str());
}

json orbit_record_to_json(const OrbitRecord& r) {
  return json{{"point", point_to_json(r.point)},
              {"word", r.word.letters},
              {"order", apply_order_name(r.word.order)},
              {"depth", r.depth},
              {"on_line", r.on_line}};
}

json orbit_result_to_json(const OrbitResult& r) {
  json records = json::array();
  for (const OrbitRecord& rec : r.records) records.push_back(orbit_record_to_json(rec));
  return json{{"records", records},
              {"truncated", r.truncated},
              {"closed", r.closed},
              {"words_visited", r.words_visited}};
}

std::string orbit_records_to_jsonl(const std::vector<OrbitRecord>& records) {
  std::string out;
  for (const OrbitRecord& rec : records) {
    out += orbit_record_to_json(rec).dump();
    out += '\n';
  }
  return out;
}

json height_estimate_to_json(const HeightEstimate& h) {
  return json{{"estimate", h.estimate},
              {"error_bound", h.error_bound},
              {"depth", h.depth},
              {"degree_product", h.degree_product.get_str()},
              {"preperiodic", h.preperiodic},
              {"depth_capped", h.depth_capped}};
}

json depressed_form_to_json(const DepressedForm& d) {
  return json{{"alpha", rational_to_json(d.alpha)},
              {"beta", rational_to_json(d.beta)},
              {"normalized", polynomial_to_json(d.normalized)}};
}

json monomial_equivalence_to_json(const MonomialEquivalence& m) {
  json out{{"equivalent", m.equivalent}};
  if (m.u.has_value()) out["u"] = linear_map_to_json(*m.u);
  if (m.v.has_value()) out["v"] = linear_map_to_json(*m.v);
  return out;
}

json rigidity_to_json(const std::optional<RigidityWitness>& w) {
  if (!w.has_value()) return json{{"solvable", false}};
  return json{{"solvable", true}, {"l", linear_map_to_json(w->l)}};
}

json linear_pair_solutions_to_json(const std::vector<LinearPairSolution>& sols) {
  json arr = json::array();
  for (const LinearPairSolution& s : sols) {
    arr.push_back(json{{"a", linear_map_to_json(s.a)},
                       {"b", linear_map_to_json(s.b)},
                       {"i", s.i},
                       {"j", s.j}});
  }
  return json{{"solutions", arr}, {"count", sols.size()}};
}

json decomposition_witness_to_json(const DecompositionWitness& w) {
  return json{{"E", polynomial_to_json(w.E)},
              {"H", polynomial_to_json(w.H)},
              {"a", linear_map_to_json(w.a)},
              {"b", linear_map_to_json(w.b)},
              {"c", linear_map_to_json(w.c)}};
}

json certificate_result_to_json(const CertificateSearchResult& r) {
  json out{{"found", r.certificate.has_value()}};
  if (r.certificate.has_value()) {
    out["word"] = r.certificate->word.letters;
    out["order"] = apply_order_name(r.certificate->word.order);
    out["k"] = r.certificate->k;
    if (r.certificate->link.has_value()) {
      out["link"] = linear_map_to_json(*r.certificate->link);
    }
  }
  out["exhausted_k"] = r.exhausted_k;
  out["words_visited"] = r.words_visited;
  out["checks_skipped"] = r.checks_skipped;
  out["budget_exhausted"] = r.budget_exhausted;
  return out;
}

json common_word_to_json(const CommonWordResult& r) {
  json out{{"found", r.found}};
  if (r.found) {
    out["m"] = r.m;
    out["k"] = r.k;
  }
  return out;
}

json finiteness_report_to_json(const FinitenessReport& r) {
  json out{{"criterion", r.criterion},
           {"outcome", finiteness_outcome_name(r.outcome)},
           {"stop_depth", r.stop_depth},
           {"delta", r.delta},
           {"epsilon", r.epsilon},
           {"ratio_monotone", r.ratio_monotone},
           {"detail", r.detail}};
  if (!r.rows.empty()) {
    json rows = json::array();
    for (const DominanceRow& row : r.rows) {
      rows.push_back(json{{"k", row.k},
                          {"deg_f", row.deg_f.get_str()},
                          {"deg_g", row.deg_g.get_str()},
                          {"separated", row.separated},
                          {"checked", row.checked},
                          {"hit", row.hit}});
    }
    out["rows"] = rows;
  }
  if (!r.sums.empty()) {
    json sums = json::array();
    for (const HeightSumRow& row : r.sums) {
      sums.push_back(json{{"k", row.k}, {"f_sum", row.f_sum}, {"g_sum", row.g_sum}});
    }
    out["sums"] = sums;
  }
  return out;
}

json integral_solutions_to_json(const std::vector<std::pair<long long, long long>>& sols) {
  json arr = json::array();
  for (const auto& [x, y] : sols) arr.push_back(json::array({x, y}));
  return json{{"solutions", arr}, {"count", sols.size()}};
}

}  // namespace orbitline::io
