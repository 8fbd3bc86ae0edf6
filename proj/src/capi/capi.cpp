#include "orbitline.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "core/decomposition.hpp"
#include "core/errors.hpp"
#include "core/heights.hpp"
#include "core/json_io.hpp"
#include "core/orbits.hpp"
#include "core/polynomial.hpp"
#include "core/system.hpp"
#include "core/theorems.hpp"

using orbitline::Error;
using orbitline::ErrorCode;
using orbitline::io::json;

struct ol_system {
  orbitline::SemigroupSystem sys;
};

namespace {

constexpr const char* kVersion = "1.0.0";

thread_local std::string g_last_error;

ol_status status_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return OL_ERR_PARSE;
    case ErrorCode::ValidationError: return OL_ERR_VALIDATION;
    case ErrorCode::DegreeTooLow: return OL_ERR_DEGREE_TOO_LOW;
    case ErrorCode::DegreeMismatch: return OL_ERR_DEGREE_MISMATCH;
    case ErrorCode::DegreeSumTooLow: return OL_ERR_DEGREE_SUM_TOO_LOW;
    case ErrorCode::NotInvertible: return OL_ERR_NOT_INVERTIBLE;
    case ErrorCode::PreconditionViolated: return OL_ERR_PRECONDITION;
    case ErrorCode::MonomialEquivalentInput: return OL_ERR_MONOMIAL_EQUIVALENT;
    case ErrorCode::BudgetExceeded: return OL_ERR_BUDGET;
    case ErrorCode::InsufficientSupport: return OL_ERR_INSUFFICIENT_SUPPORT;
    case ErrorCode::BadIndex: return OL_ERR_BAD_INDEX;
    case ErrorCode::HypothesisViolated: return OL_ERR_HYPOTHESIS;
    case ErrorCode::InvalidArgument: return OL_ERR_INVALID_ARGUMENT;
    case ErrorCode::IoError: return OL_ERR_IO;
    case ErrorCode::Internal: return OL_ERR_INTERNAL;
  }
  return OL_ERR_INTERNAL;
}

template <class Fn>
ol_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    g_last_error = e.what();
    return status_for(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return OL_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return OL_ERR_INTERNAL;
  }
}

void set_out(char** out, const std::string& text) {
  char* buf = static_cast<char*>(std::malloc(text.size() + 1));
  if (buf == nullptr) throw std::bad_alloc();
  std::memcpy(buf, text.c_str(), text.size() + 1);
  *out = buf;
}

void set_out(char** out, const json& j) { set_out(out, j.dump()); }

const char* required(const char* arg, const char* what) {
  if (arg == nullptr) orbitline::fail(ErrorCode::InvalidArgument, std::string(what) + " is null");
  return arg;
}

const orbitline::SemigroupSystem& system_of(const ol_system* sys) {
  if (sys == nullptr) orbitline::fail(ErrorCode::InvalidArgument, "system handle is null");
  return sys->sys;
}

orbitline::Polynomial poly_arg(const char* text, const char* what) {
  return orbitline::io::polynomial_from_json(orbitline::io::parse_json(required(text, what)));
}

orbitline::LinearMap linear_arg(const char* text, const char* what) {
  return orbitline::io::linear_map_from_json(orbitline::io::parse_json(required(text, what)));
}

orbitline::SequenceSpec sequence_arg(const orbitline::SemigroupSystem& sys, const json& j) {
  if (j.is_string()) {
    const std::string name = j.get<std::string>();
    auto it = sys.sequences.find(name);
    if (it == sys.sequences.end()) {
      orbitline::fail(ErrorCode::BadIndex, "system stores no sequence named '" + name + "'");
    }
    return it->second;
  }
  return orbitline::io::sequence_from_json(j);
}

orbitline::Rational coordinate_base(const orbitline::SemigroupSystem& sys, int coordinate,
                                    const char* x0_text) {
  if (coordinate != 0 && coordinate != 1) {
    orbitline::fail(ErrorCode::InvalidArgument, "coordinate must be 0 (f) or 1 (g)");
  }
  if (x0_text != nullptr) return orbitline::Rational::parse(x0_text);
  return coordinate == 0 ? sys.base.x : sys.base.y;
}

}  // namespace

extern "C" {

const char* ol_version(void) { return kVersion; }

const char* ol_last_error(void) { return g_last_error.c_str(); }

void ol_string_free(char* s) { std::free(s); }

ol_status ol_system_parse(const char* json_text, ol_system** out) {
  return guarded([&]() {
    required(json_text, "json_text");
    if (out == nullptr) orbitline::fail(ErrorCode::InvalidArgument, "out is null");
    auto handle = new ol_system{orbitline::io::system_from_string(json_text)};
    *out = handle;
    return OL_OK;
  });
}

ol_status ol_system_parse_file(const char* path, ol_system** out) {
  return guarded([&]() {
    required(path, "path");
    if (out == nullptr) orbitline::fail(ErrorCode::InvalidArgument, "out is null");
    auto handle = new ol_system{orbitline::io::system_from_file(path)};
    *out = handle;
    return OL_OK;
  });
}

ol_status ol_system_to_json(const ol_system* sys, char** out_json) {
  return guarded([&]() {
    set_out(out_json, orbitline::io::system_to_json(system_of(sys)));
    return OL_OK;
  });
}

void ol_system_free(ol_system* sys) { delete sys; }

ol_status ol_system_set_budget(ol_system* sys, long long max_words, long long max_digits) {
  return guarded([&]() {
    if (sys == nullptr) orbitline::fail(ErrorCode::InvalidArgument, "system handle is null");
    if (max_words < 0 || max_digits < 0) {
      orbitline::fail(ErrorCode::InvalidArgument, "budgets cannot be negative");
    }
    if (max_words > 0) sys->sys.budget.max_words = max_words;
    if (max_digits > 0) sys->sys.budget.max_digits = max_digits;
    return OL_OK;
  });
}

ol_status ol_poly_compose(const char* outer_json, const char* inner_json, char** out_json) {
  return guarded([&]() {
    const auto outer = poly_arg(outer_json, "outer");
    const auto inner = poly_arg(inner_json, "inner");
    set_out(out_json, orbitline::io::polynomial_to_json(outer.compose(inner)));
    return OL_OK;
  });
}

ol_status ol_poly_depress(const char* poly_json, char** out_json) {
  return guarded([&]() {
    set_out(out_json,
            orbitline::io::depressed_form_to_json(orbitline::depress(poly_arg(poly_json, "poly"))));
    return OL_OK;
  });
}

ol_status ol_poly_monomial_equivalent(const char* poly_json, char** out_json) {
  return guarded([&]() {
    const auto m = orbitline::is_monomial_equivalent(poly_arg(poly_json, "poly"));
    set_out(out_json, orbitline::io::monomial_equivalence_to_json(m));
    return m.equivalent ? OL_OK : OL_NOT_FOUND;
  });
}

ol_status ol_height_naive(const char* rational_text, double* out) {
  return guarded([&]() {
    if (out == nullptr) orbitline::fail(ErrorCode::InvalidArgument, "out is null");
    *out = orbitline::naive_height_value(
        orbitline::Rational::parse(required(rational_text, "rational")));
    return OL_OK;
  });
}

ol_status ol_height_naive_detail(const char* rational_text, char** out_json) {
  return guarded([&]() {
    const auto hv = orbitline::naive_height(
        orbitline::Rational::parse(required(rational_text, "rational")));
    set_out(out_json, json{{"value", hv.value},
                           {"log_argument_num", hv.num_abs.get_str()},
                           {"log_argument_den", hv.den.get_str()}});
    return OL_OK;
  });
}

ol_status ol_height_map_constant(const char* poly_json, double* out) {
  return guarded([&]() {
    if (out == nullptr) orbitline::fail(ErrorCode::InvalidArgument, "out is null");
    *out = orbitline::map_height_constant(poly_arg(poly_json, "poly"));
    return OL_OK;
  });
}

ol_status ol_height_shift_constant(const char* linear_json, double* out) {
  return guarded([&]() {
    if (out == nullptr) orbitline::fail(ErrorCode::InvalidArgument, "out is null");
    *out = orbitline::linear_shift_constant(linear_arg(linear_json, "linear map"));
    return OL_OK;
  });
}

ol_status ol_height_sequence(const ol_system* sys, const char* seq_json, int coordinate,
                             const char* x0_text, double target_error, int max_depth,
                             char** out_json) {
  return guarded([&]() {
    const auto& s = system_of(sys);
    const auto seq = sequence_arg(s, orbitline::io::parse_json(required(seq_json, "sequence")));
    const auto x0 = coordinate_base(s, coordinate, x0_text);
    const auto est =
        orbitline::canonical_height_sequence(s, coordinate, seq, x0, target_error, max_depth);
    set_out(out_json, orbitline::io::height_estimate_to_json(est));
    return OL_OK;
  });
}

ol_status ol_height_eigensystem(const ol_system* sys, int coordinate, const char* x0_text,
                                int depth, char** out_json) {
  return guarded([&]() {
    const auto& s = system_of(sys);
    const auto x0 = coordinate_base(s, coordinate, x0_text);
    const auto est =
        orbitline::canonical_height_eigensystem(s, coordinate, x0, depth, s.budget);
    set_out(out_json, orbitline::io::height_estimate_to_json(est));
    return OL_OK;
  });
}

ol_status ol_solve_rigidity(const char* a_json, const char* b_json, const char* c_json,
                            const char* d_json, char** out_json) {
  return guarded([&]() {
    const auto w = orbitline::solve_rigidity(poly_arg(a_json, "A"), poly_arg(b_json, "B"),
                                             poly_arg(c_json, "C"), poly_arg(d_json, "D"));
    set_out(out_json, orbitline::io::rigidity_to_json(w));
    return w.has_value() ? OL_OK : OL_NOT_FOUND;
  });
}

ol_status ol_solve_linear_pair(const char* f_json, const char* g_json, char** out_json) {
  return guarded([&]() {
    const auto sols =
        orbitline::solve_linear_pair(poly_arg(f_json, "F"), poly_arg(g_json, "G"));
    set_out(out_json, orbitline::io::linear_pair_solutions_to_json(sols));
    return sols.empty() ? OL_NOT_FOUND : OL_OK;
  });
}

ol_status ol_verify_decomposition(const char* f_json, const char* g_json,
                                  const char* witness_json, int* out_ok) {
  return guarded([&]() {
    if (out_ok == nullptr) orbitline::fail(ErrorCode::InvalidArgument, "out_ok is null");
    const json w = orbitline::io::parse_json(required(witness_json, "witness"));
    orbitline::DecompositionWitness witness;
    witness.E = orbitline::io::polynomial_from_json(w.at("E"));
    witness.H = orbitline::io::polynomial_from_json(w.at("H"));
    witness.a = orbitline::io::linear_map_from_json(w.at("a"));
    witness.b = orbitline::io::linear_map_from_json(w.at("b"));
    witness.c = orbitline::io::linear_map_from_json(w.at("c"));
    const bool ok = orbitline::verify_decomposition(poly_arg(f_json, "F"),
                                                    poly_arg(g_json, "G"), witness);
    *out_ok = ok ? 1 : 0;
    return OL_OK;
  });
}

ol_status ol_orbit(const ol_system* sys, const char* params_json, char** out_json) {
  return guarded([&]() {
    const auto& s = system_of(sys);
    const json params = orbitline::io::parse_json(required(params_json, "params"));
    const std::string mode = params.value("mode", std::string("semigroup"));
    const bool intersect = params.value("intersect", false);
    if (intersect && !s.line.has_value()) {
      orbitline::fail(ErrorCode::ValidationError,
                      "'intersect' needs a line in the system file");
    }

    orbitline::OrbitResult result;
    if (mode == "semigroup") {
      const int max_depth = params.value("max_depth", 3);
      const bool dedup = params.value("dedup", true);
      result = orbitline::enumerate_semigroup_orbit(s, s.base, max_depth, dedup, s.line);
    } else if (mode == "forward" || mode == "coherent") {
      auto it = params.find("sequence");
      if (it == params.end()) {
        orbitline::fail(ErrorCode::ValidationError,
                        "sequence orbits need a 'sequence' (spec or stored name)");
      }
      const auto seq = sequence_arg(s, *it);
      const int n_max = params.value("n_max", 10);
      const auto orbit_mode = mode == "forward" ? orbitline::SequenceOrbitMode::Forward
                                                : orbitline::SequenceOrbitMode::Coherent;
      result = orbitline::enumerate_sequence_orbit(s, seq, s.base, n_max, orbit_mode, s.line);
    } else {
      orbitline::fail(ErrorCode::InvalidArgument,
                      "mode must be 'semigroup', 'forward', or 'coherent'");
    }
    if (intersect) {
      result.records = orbitline::intersect_with_line(result.records, *s.line);
    }
    set_out(out_json, orbitline::io::orbit_result_to_json(result));
    return OL_OK;
  });
}

ol_status ol_extract_suffix(const char* words_json, int min_support, char** out_json) {
  return guarded([&]() {
    const json arr = orbitline::io::parse_json(required(words_json, "words"));
    if (!arr.is_array()) {
      orbitline::fail(ErrorCode::ValidationError, "words must be a JSON array");
    }
    std::vector<orbitline::Word> words;
    words.reserve(arr.size());
    for (const json& w : arr) words.push_back(orbitline::io::word_from_json(w));
    const orbitline::Word suffix = orbitline::extract_coherent_suffix(words, min_support);

    // Support of the full extracted run: words whose outermost maps match it.
    long long support = 0;
    for (const orbitline::Word& w : words) {
      const orbitline::Word inner = w.order == orbitline::ApplyOrder::InnerFirst ? w : w.reversed();
      if (inner.length() < suffix.length()) continue;
      bool match = true;
      for (std::size_t k = 0; k < suffix.length(); ++k) {
        if (inner.letters[inner.length() - 1 - k] != suffix.letters[k]) {
          match = false;
          break;
        }
      }
      if (match) ++support;
    }

    json out = orbitline::io::word_to_json(suffix);
    out["support"] = support;
    set_out(out_json, out);
    return OL_OK;
  });
}

ol_status ol_certificate_search(const ol_system* sys, int max_k, const char* link_json,
                                char** out_json) {
  return guarded([&]() {
    const auto& s = system_of(sys);
    std::optional<orbitline::LinearMap> link;
    if (link_json != nullptr) link = linear_arg(link_json, "link");
    const auto result = orbitline::search_equality_certificate(s, max_k, link);
    set_out(out_json, orbitline::io::certificate_result_to_json(result));
    return result.certificate.has_value() ? OL_OK : OL_NOT_FOUND;
  });
}

ol_status ol_conjugate(const ol_system* sys, const char* linear_json, ol_system** out) {
  return guarded([&]() {
    if (out == nullptr) orbitline::fail(ErrorCode::InvalidArgument, "out is null");
    const auto l = linear_arg(linear_json, "linear map");
    auto handle = new ol_system{orbitline::conjugate_system(system_of(sys), l)};
    *out = handle;
    return OL_OK;
  });
}

ol_status ol_common_word(const ol_system* sys, int coordinate, const char* phi_json,
                         const char* psi_json, int m_max, int k_max, char** out_json) {
  return guarded([&]() {
    const auto& s = system_of(sys);
    if (coordinate != 0 && coordinate != 1) {
      orbitline::fail(ErrorCode::InvalidArgument, "coordinate must be 0 (f) or 1 (g)");
    }
    std::vector<orbitline::Polynomial> gens;
    gens.reserve(s.size());
    for (std::size_t i = 1; i <= s.size(); ++i) {
      gens.push_back(s.coord(static_cast<int>(i), coordinate));
    }
    const auto phi = sequence_arg(s, orbitline::io::parse_json(required(phi_json, "phi")));
    const auto psi = sequence_arg(s, orbitline::io::parse_json(required(psi_json, "psi")));
    const auto result = orbitline::check_common_word(gens, phi, psi, m_max, k_max, s.budget);
    set_out(out_json, orbitline::io::common_word_to_json(result));
    return result.found ? OL_OK : OL_NOT_FOUND;
  });
}

ol_status ol_finiteness_degree(const ol_system* sys, const char* params_json, char** out_json) {
  return guarded([&]() {
    const auto& s = system_of(sys);
    const json params = orbitline::io::parse_json(required(params_json, "params"));
    auto it = params.find("sequence");
    if (it == params.end()) {
      orbitline::fail(ErrorCode::ValidationError, "params need a 'sequence'");
    }
    const auto seq = sequence_arg(s, *it);
    const double target_error = params.value("target_error", 1e-6);
    const int max_depth = params.value("max_depth", 64);
    const int verify_depth = params.value("verify_depth", 12);
    const auto report = orbitline::degree_dominance_bound(s, seq, s.base.x, s.base.y,
                                                          target_error, max_depth, verify_depth);
    set_out(out_json, orbitline::io::finiteness_report_to_json(report));
    return report.outcome == orbitline::FinitenessOutcome::Certified ? OL_OK : OL_INCONCLUSIVE;
  });
}

ol_status ol_finiteness_heightsum(const ol_system* sys, int k_max, int detect_depth,
                                  char** out_json) {
  return guarded([&]() {
    const auto& s = system_of(sys);
    const auto report =
        orbitline::height_sum_comparison(s, s.base.x, s.base.y, k_max, detect_depth);
    set_out(out_json, orbitline::io::finiteness_report_to_json(report));
    return report.outcome == orbitline::FinitenessOutcome::Certified ? OL_OK : OL_INCONCLUSIVE;
  });
}

ol_status ol_integral_solutions(const char* f_json, const char* g_json, long long bound,
                                char** out_json) {
  return guarded([&]() {
    const auto sols = orbitline::sample_integral_solutions(poly_arg(f_json, "F"),
                                                           poly_arg(g_json, "G"), bound);
    set_out(out_json, orbitline::io::integral_solutions_to_json(sols));
    return OL_OK;
  });
}

ol_status ol_generators_commute(const ol_system* sys, int* out_commute) {
  return guarded([&]() {
    if (out_commute == nullptr) orbitline::fail(ErrorCode::InvalidArgument, "out is null");
    *out_commute = orbitline::generators_commute(system_of(sys)) ? 1 : 0;
    return OL_OK;
  });
}

}  // extern "C"
