#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "dinikit/params.hpp"
#include "dinikit/rational.hpp"
#include "dinikit/verifier.hpp"

namespace dinikit::report {

// ordered_json keeps insertion order, so emitted documents are key-stable.
using json = nlohmann::ordered_json;

[[nodiscard]] json rational_json(const Rational& q);  // {"num","den","approx"}
[[nodiscard]] json complex_json(Complex z);           // {"re","im"}
[[nodiscard]] json params_json(const Params& p);
[[nodiscard]] json eval_json(const EvalResult& r);
[[nodiscard]] json sample_json(const verify::SamplePoint& s);
[[nodiscard]] json report_json(const verify::VerificationReport& rep);
[[nodiscard]] json catalog_json(const std::vector<verify::VerificationReport>& reports);

// Accepts "a+bi", "a-bi", "a", "bi", "i", "-i"; decimal components, no spaces
// inside a component. Throws std::invalid_argument on anything else.
[[nodiscard]] Complex parse_complex(const std::string& text);

}  // namespace dinikit::report
