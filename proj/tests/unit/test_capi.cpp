#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstring>
#include <string>

#include "json.hpp"
#include "orbitline.h"

using json = nlohmann::json;

namespace {

// Owns a char* produced by the library.
struct OwnedString {
  char* ptr = nullptr;
  ~OwnedString() { ol_string_free(ptr); }
  std::string str() const { return ptr ? std::string(ptr) : std::string(); }
  json parsed() const { return json::parse(str()); }
  char** out() { return &ptr; }
};

// Owns a system handle.
struct OwnedSystem {
  ol_system* sys = nullptr;
  ~OwnedSystem() { ol_system_free(sys); }
  ol_system** out() { return &sys; }
};

constexpr const char* kSquare = R"({
  "generators": [{"f": ["0","0","1"], "g": ["0","0","1"]}],
  "base": {"x": "2", "y": "2"}
})";

constexpr const char* kSwap = R"({
  "generators": [
    {"f": ["0","0","1"], "g": ["0","0","0","0","0","0","1"]},
    {"f": ["0","0","0","0","0","0","1"], "g": ["0","0","1"]}
  ],
  "base": {"x": "2", "y": "2"}
})";

constexpr const char* kDominant = R"({
  "generators": [{"f": ["0","0","0","1"], "g": ["0","0","1"]}],
  "base": {"x": "2", "y": "2"}
})";

}  // namespace

TEST_CASE("version string is present") {
  const char* v = ol_version();
  REQUIRE(v != nullptr);
  CHECK(std::strchr(v, '.') != nullptr);
}

TEST_CASE("system parse, serialize, budget, free") {
  OwnedSystem sys;
  REQUIRE(ol_system_parse(kSquare, sys.out()) == OL_OK);
  OwnedString out;
  REQUIRE(ol_system_to_json(sys.sys, out.out()) == OL_OK);
  json j = out.parsed();
  CHECK(j["generators"].size() == 1);
  CHECK(j["base"]["x"] == "2/1");

  REQUIRE(ol_system_set_budget(sys.sys, 123, 456) == OL_OK);
  OwnedString after;
  REQUIRE(ol_system_to_json(sys.sys, after.out()) == OL_OK);
  CHECK(after.parsed()["budget"]["max_words"] == 123);
  CHECK(after.parsed()["budget"]["max_digits"] == 456);
  // zero keeps the current value
  REQUIRE(ol_system_set_budget(sys.sys, 0, 789) == OL_OK);
  OwnedString kept;
  REQUIRE(ol_system_to_json(sys.sys, kept.out()) == OL_OK);
  CHECK(kept.parsed()["budget"]["max_words"] == 123);
  CHECK(kept.parsed()["budget"]["max_digits"] == 789);
}

TEST_CASE("parse errors set the thread-local message") {
  OwnedSystem sys;
  CHECK(ol_system_parse("{nope", sys.out()) == OL_ERR_PARSE);
  CHECK(std::strlen(ol_last_error()) > 0);
  CHECK(ol_system_parse(R"({"generators":[{"f":["1"],"g":["0","0","1"]}],
                            "base":{"x":"0","y":"0"}})",
                        sys.out()) == OL_ERR_VALIDATION);
  CHECK(ol_system_parse(nullptr, sys.out()) == OL_ERR_INVALID_ARGUMENT);
  CHECK(ol_system_parse_file("/tmp/no_such_orbitline_file.json", sys.out()) == OL_ERR_IO);
}

TEST_CASE("polynomial helpers over the wire") {
  OwnedString composed;
  REQUIRE(ol_poly_compose(R"(["1","0","1"])", R"(["1","0","0","2"])", composed.out()) == OL_OK);
  CHECK(composed.parsed()["coeffs"] ==
        json::parse(R"(["2/1","0/1","0/1","4/1","0/1","0/1","4/1"])"));

  OwnedString depressed;
  REQUIRE(ol_poly_depress(R"(["3","2","1"])", depressed.out()) == OL_OK);
  CHECK(depressed.parsed()["alpha"] == "-2/1");
  CHECK(depressed.parsed()["beta"] == "-1/1");

  OwnedString equiv;
  CHECK(ol_poly_monomial_equivalent(R"(["0","1","1"])", equiv.out()) == OL_OK);
  CHECK(equiv.parsed()["equivalent"] == true);
  OwnedString not_equiv;
  CHECK(ol_poly_monomial_equivalent(R"(["0","-3","0","1"])", not_equiv.out()) == OL_NOT_FOUND);
  CHECK(not_equiv.parsed()["equivalent"] == false);
  OwnedString too_low;
  CHECK(ol_poly_monomial_equivalent(R"(["0","1"])", too_low.out()) == OL_ERR_DEGREE_TOO_LOW);
}

TEST_CASE("height entry points") {
  double h = 0.0;
  REQUIRE(ol_height_naive("-8/3", &h) == OL_OK);
  CHECK(h == doctest::Approx(std::log(8.0)).epsilon(1e-12));
  CHECK(ol_height_naive("1.5", &h) != OL_OK);

  OwnedString detail;
  REQUIRE(ol_height_naive_detail("-8/3", detail.out()) == OL_OK);
  CHECK(detail.parsed()["log_argument_num"] == "8");
  CHECK(detail.parsed()["log_argument_den"] == "3");

  double c = 0.0;
  REQUIRE(ol_height_map_constant(R"(["1","0","1"])", &c) == OL_OK);
  CHECK(c > 0.0);
  REQUIRE(ol_height_shift_constant(R"({"alpha":"2","beta":"1"})", &c) == OL_OK);
  CHECK(c >= std::log(2.0));

  OwnedSystem sys;
  REQUIRE(ol_system_parse(kSquare, sys.out()) == OL_OK);
  OwnedString est;
  REQUIRE(ol_height_sequence(sys.sys, R"({"preperiod":[],"cycle":[1]})", 0, nullptr, 1e-6, 64,
                             est.out()) == OL_OK);
  json je = est.parsed();
  CHECK(std::abs(je["estimate"].get<double>() - std::log(2.0)) < 1e-6);
  CHECK(je["error_bound"].get<double>() <= 1e-6);

  OwnedString eig;
  REQUIRE(ol_height_eigensystem(sys.sys, 0, "2", 6, eig.out()) == OL_OK);
  CHECK(std::abs(eig.parsed()["estimate"].get<double>() - std::log(2.0)) < 1e-9);
}

TEST_CASE("decomposition entry points") {
  OwnedString rig;
  REQUIRE(ol_solve_rigidity(R"(["1/4","-1/2","1/4"])", R"(["1","0","0","2"])",
                            R"(["0","0","1"])", R"(["0","0","0","1"])", rig.out()) == OL_OK);
  CHECK(rig.parsed()["solvable"] == true);
  CHECK(rig.parsed()["l"]["alpha"] == "2/1");
  CHECK(rig.parsed()["l"]["beta"] == "1/1");

  OwnedString pair;
  REQUIRE(ol_solve_linear_pair(R"(["0","1","0","1"])", R"(["0","4","0","1"])", pair.out()) ==
          OL_OK);
  json jp = pair.parsed();
  CHECK(jp["count"] == 2);
  CHECK(jp["solutions"][0]["a"]["alpha"] == "-8/1");

  OwnedString none;
  CHECK(ol_solve_linear_pair(R"(["0","1","0","1"])", R"(["0","0","1","1"])", none.out()) ==
        OL_NOT_FOUND);

  int ok = 0;
  const char* witness = R"({
    "E": ["1","0","1"], "H": ["0","0","0","1"],
    "a": {"alpha":"1","beta":"1"}, "b": {"alpha":"2","beta":"0"},
    "c": {"alpha":"-1","beta":"0"}
  })";
  // F = E∘H∘a = ((X+1)^3)^2 + 1; G = E∘c∘H∘b = (-(2X)^3)^2 + 1 = 64X^6 + 1
  REQUIRE(ol_verify_decomposition(R"(["2","6","15","20","15","6","1"])",
                                  R"(["1","0","0","0","0","0","64"])", witness, &ok) == OL_OK);
  CHECK(ok == 1);
}

TEST_CASE("orbit with parameters and validation") {
  OwnedSystem sys;
  REQUIRE(ol_system_parse(kSwap, sys.out()) == OL_OK);
  OwnedString orbit;
  REQUIRE(ol_orbit(sys.sys, R"({"mode":"semigroup","max_depth":2,"dedup":true})",
                   orbit.out()) == OL_OK);
  json jo = orbit.parsed();
  CHECK(jo["records"].size() >= 5);
  CHECK(jo["truncated"] == false);

  OwnedString bad;
  CHECK(ol_orbit(sys.sys, R"({"mode":"sideways"})", bad.out()) == OL_ERR_INVALID_ARGUMENT);
  CHECK(ol_orbit(sys.sys, R"({"mode":"semigroup","intersect":true})", bad.out()) ==
        OL_ERR_VALIDATION);  // no line stored to intersect with

  OwnedString fwd;
  REQUIRE(ol_orbit(sys.sys,
                   R"({"mode":"forward","sequence":{"preperiod":[],"cycle":[1,2]},"n_max":2})",
                   fwd.out()) == OL_OK);
  CHECK(fwd.parsed()["records"].size() == 3);
}

TEST_CASE("suffix extraction over the wire") {
  OwnedString out;
  REQUIRE(ol_extract_suffix(R"([[1],[2,1],[1,2,1],[2,2,1],[1,1,2,1]])", 3, out.out()) == OL_OK);
  CHECK(out.parsed()["letters"] == json::parse("[1,2]"));
  OwnedString fail;
  CHECK(ol_extract_suffix(R"([[1],[2]])", 4, fail.out()) == OL_ERR_INSUFFICIENT_SUPPORT);
}

TEST_CASE("certificate search statuses") {
  OwnedSystem swap;
  REQUIRE(ol_system_parse(kSwap, swap.out()) == OL_OK);
  OwnedString found;
  REQUIRE(ol_certificate_search(swap.sys, 4, nullptr, found.out()) == OL_OK);
  CHECK(found.parsed()["k"] == 2);
  CHECK(found.parsed()["word"] == json::parse("[1,2]"));

  OwnedSystem diverge;
  REQUIRE(ol_system_parse(R"({"generators":[{"f":["1","0","1"],"g":["2","0","1"]}],
                              "base":{"x":"2","y":"2"}})",
                          diverge.out()) == OL_OK);
  OwnedString missing;
  CHECK(ol_certificate_search(diverge.sys, 4, nullptr, missing.out()) == OL_NOT_FOUND);
  CHECK(missing.parsed()["found"] == false);
  CHECK(missing.parsed()["exhausted_k"] == 4);
}

TEST_CASE("conjugation and common word over the wire") {
  OwnedSystem sys;
  REQUIRE(ol_system_parse(kSquare, sys.out()) == OL_OK);
  OwnedSystem conj;
  REQUIRE(ol_conjugate(sys.sys, R"({"alpha":"1","beta":"1"})", conj.out()) == OL_OK);
  OwnedString cj;
  REQUIRE(ol_system_to_json(conj.sys, cj.out()) == OL_OK);
  CHECK(cj.parsed()["generators"][0]["g"]["coeffs"] == json::parse(R"(["2/1","-2/1","1/1"])"));
  CHECK(cj.parsed()["base"]["y"] == "3/1");

  OwnedSystem two;
  REQUIRE(ol_system_parse(R"({"generators":[
      {"f":["0","0","1"],"g":["0","0","1"]},
      {"f":["0","0","0","1"],"g":["0","0","0","1"]}],
      "base":{"x":"2","y":"2"}})",
                          two.out()) == OL_OK);
  OwnedString cw;
  REQUIRE(ol_common_word(two.sys, 0, R"({"preperiod":[],"cycle":[1,2]})",
                         R"({"preperiod":[],"cycle":[2,1]})", 4, 4, cw.out()) == OL_OK);
  CHECK(cw.parsed()["m"] == 0);
  CHECK(cw.parsed()["k"] == 2);
}

TEST_CASE("finiteness wrappers map outcomes to statuses") {
  OwnedSystem dom;
  REQUIRE(ol_system_parse(kDominant, dom.out()) == OL_OK);
  OwnedString rep;
  REQUIRE(ol_finiteness_degree(dom.sys, R"({"sequence":{"preperiod":[],"cycle":[1]}})",
                               rep.out()) == OL_OK);
  CHECK(rep.parsed()["outcome"] == "certified");
  CHECK(rep.parsed()["stop_depth"] == 1);

  OwnedSystem sym;
  REQUIRE(ol_system_parse(kSquare, sym.out()) == OL_OK);
  OwnedString inconclusive;
  CHECK(ol_finiteness_degree(sym.sys, R"({"sequence":{"preperiod":[],"cycle":[1]}})",
                             inconclusive.out()) == OL_INCONCLUSIVE);

  OwnedSystem hs;
  REQUIRE(ol_system_parse(R"({"generators":[
      {"f":["0","0","0","1"],"g":["0","0","1"]},
      {"f":["0","0","0","0","1"],"g":["0","0","1"]}],
      "base":{"x":"2","y":"2"}})",
                          hs.out()) == OL_OK);
  OwnedString hrep;
  REQUIRE(ol_finiteness_heightsum(hs.sys, 6, 8, hrep.out()) == OL_OK);
  CHECK(hrep.parsed()["outcome"] == "certified");

  OwnedString viol;
  CHECK(ol_finiteness_heightsum(sym.sys, 4, 8, viol.out()) == OL_ERR_HYPOTHESIS);
}

TEST_CASE("integral solutions and commutativity over the wire") {
  OwnedString sols;
  REQUIRE(ol_integral_solutions(R"(["0","0","1"])", R"(["0","0","0","0","1"])", 100,
                                sols.out()) == OL_OK);
  CHECK(sols.parsed()["count"] == 41);

  OwnedSystem sys;
  REQUIRE(ol_system_parse(kSwap, sys.out()) == OL_OK);
  int commute = -1;
  REQUIRE(ol_generators_commute(sys.sys, &commute) == OL_OK);
  CHECK(commute == 1);
}

TEST_CASE("null argument handling and string ownership") {
  CHECK(ol_system_to_json(nullptr, nullptr) == OL_ERR_INVALID_ARGUMENT);
  double h;
  CHECK(ol_height_naive(nullptr, &h) == OL_ERR_INVALID_ARGUMENT);
  ol_string_free(nullptr);  // must be a no-op
  ol_system_free(nullptr);  // must be a no-op
}
