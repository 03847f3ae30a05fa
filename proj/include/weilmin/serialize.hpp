#pragma once

#include <json.hpp>

#include "weilmin/descent.hpp"

namespace weilmin {

using json = nlohmann::json;

// CycElt <-> ordered list of p-1 "num/den" strings
json cyc_to_json(const CycElt& x);
CycElt cyc_from_json(const json& j, long p);

// ExactMatrix <-> {p, rows, cols, entries: [[CycElt...]...]}
json matrix_to_json(const ExactMatrix& M);
ExactMatrix matrix_from_json(const json& j);

// QuadCoord <-> {a, b, p}; a, b are decimal strings (lossless for mpz)
json quad_to_json(const QuadCoord& q);
QuadCoord quad_from_json(const json& j);

json heis_to_json(const HeisElt& h, long p);

// Model documents share the top-level schema
//   {schema_version, p, c, epsilon, series, ring, S, T}
// with minimal-model entries {a, b} and cyclotomic matrices in the
// ExactMatrix format above.
json minimal_model_to_json(const MinimalModel& m);
MinimalModel minimal_model_from_json(const json& j);

json cyclotomic_model_to_json(const WeilModel& m, const RingReport& ring);

json report_to_json(const std::vector<CheckResult>& checks);

// LaTeX / plain-text rendering. Half-integral quadratic values render as
// \frac{1}{2}(x \pm y\sqrt{D}); values in Z + Z sqrt(D) drop the half.
std::string quad_to_latex(const QuadCoord& q);
std::string quad_to_text(const QuadCoord& q);
std::string cyc_to_latex(const CycElt& x);

std::string minimal_model_to_latex(const MinimalModel& m);
std::string minimal_model_to_text(const MinimalModel& m);
std::string cyclotomic_model_to_latex(const WeilModel& m);
std::string cyclotomic_model_to_text(const WeilModel& m, const RingReport& ring);

}  // namespace weilmin
