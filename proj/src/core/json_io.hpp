#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "decomposition.hpp"
#include "heights.hpp"
#include "orbits.hpp"
#include "polynomial.hpp"
#include "rational.hpp"
#include "system.hpp"
#include "theorems.hpp"
#include "words.hpp"

// JSON (de)serialization for every public value type. Key order is fixed
// (ordered_json) so equal values always dump to identical bytes. Rationals
// travel as exact "p/q" strings; JSON floats are rejected on input, and the
// only doubles ever emitted are estimates/error bounds, printed with
// shortest-round-trip precision.
namespace orbitline::io {

using json = nlohmann::ordered_json;

json rational_to_json(const Rational& r);
Rational rational_from_json(const json& j);

json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const json& j);

json linear_map_to_json(const LinearMap& l);
LinearMap linear_map_from_json(const json& j);

json point_to_json(const Point& p);
Point point_from_json(const json& j);

json line_to_json(const Line& l);
Line line_from_json(const json& j);

json sequence_to_json(const SequenceSpec& s);
SequenceSpec sequence_from_json(const json& j);

json word_to_json(const Word& w);
Word word_from_json(const json& j);

json system_to_json(const SemigroupSystem& sys);
SemigroupSystem system_from_json(const json& j);
SemigroupSystem system_from_string(const std::string& text);
SemigroupSystem system_from_file(const std::string& path);

json orbit_record_to_json(const OrbitRecord& r);
json orbit_result_to_json(const OrbitResult& r);
std::string orbit_records_to_jsonl(const std::vector<OrbitRecord>& records);

json height_estimate_to_json(const HeightEstimate& h);

json depressed_form_to_json(const DepressedForm& d);
json monomial_equivalence_to_json(const MonomialEquivalence& m);
json rigidity_to_json(const std::optional<RigidityWitness>& w);
json linear_pair_solutions_to_json(const std::vector<LinearPairSolution>& sols);
json decomposition_witness_to_json(const DecompositionWitness& w);

json certificate_result_to_json(const CertificateSearchResult& r);
json common_word_to_json(const CommonWordResult& r);
json finiteness_report_to_json(const FinitenessReport& r);
json integral_solutions_to_json(const std::vector<std::pair<long long, long long>>& sols);

// Parses with exceptions mapped onto ParseError.
json parse_json(const std::string& text);

}  // namespace orbitline::io
