#include "dinikit/report_json.hpp"

#include <cctype>
#include <cstdlib>
#include <stdexcept>

#include "dinikit/bounds.hpp"

namespace dinikit::report {

namespace {

const char* hypothesis_name(bounds::HypothesisKind kind) {
  return kind == bounds::HypothesisKind::kRatioW ? "ratio_w" : "ratio_wprime";
}

}  // namespace

json rational_json(const Rational& q) {
  return json{{"num", q.num_str()}, {"den", q.den_str()}, {"approx", q.to_double()}};
}

json complex_json(Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json params_json(const Params& p) {
  return json{{"alpha", rational_json(p.alpha)}, {"v", rational_json(p.v)}, {"m", p.m}};
}

json eval_json(const EvalResult& r) {
  return json{{"value", complex_json(r.value)},
              {"terms_used", r.terms_used},
              {"tail_bound", r.tail_bound},
              {"branch_warning", r.branch_warning}};
}

json sample_json(const verify::SamplePoint& s) {
  return json{{"r", s.r}, {"theta", s.theta}, {"z", complex_json(s.z)}};
}

json report_json(const verify::VerificationReport& rep) {
  json j;
  j["id"] = rep.id;
  j["statistic"] = rep.statistic;
  j["params"] = params_json(rep.params);
  j["hypothesis"] = rep.hypothesis
                        ? json{{"kind", hypothesis_name(rep.hypothesis->kind)},
                               {"slack", rational_json(rep.hypothesis->slack)},
                               {"satisfied", rep.hypothesis->satisfied}}
                        : json(nullptr);
  j["claimed_bound"] = rep.claimed_bound ? rational_json(*rep.claimed_bound) : json(nullptr);
  j["scale"] = rep.scale ? rational_json(*rep.scale) : json(nullptr);
  j["empirical"] = rep.empirical;
  j["arg"] = sample_json(rep.arg);
  j["margin"] = rep.margin;
  j["samples"] = rep.samples;
  j["skipped"] = rep.skipped;
  j["first_skipped"] = rep.first_skipped ? sample_json(*rep.first_skipped) : json(nullptr);
  j["verdict"] = verify::verdict_name(rep.verdict);
  return j;
}

json catalog_json(const std::vector<verify::VerificationReport>& reports) {
  json cases = json::array();
  long confirmed = 0, violated = 0, hypothesis_failed = 0;
  for (const auto& rep : reports) {
    cases.push_back(report_json(rep));
    switch (rep.verdict) {
      case verify::Verdict::kConfirmed: ++confirmed; break;
      case verify::Verdict::kViolated: ++violated; break;
      case verify::Verdict::kHypothesisFailed: ++hypothesis_failed; break;
    }
  }
  json j;
  j["cases"] = std::move(cases);
  j["summary"] = json{{"total", static_cast<long>(reports.size())},
                      {"confirmed", confirmed},
                      {"violated", violated},
                      {"hypothesis_failed", hypothesis_failed},
                      {"exit_code", violated > 0 ? 1 : 0}};
  return j;
}

namespace {

[[noreturn]] void bad_literal(const std::string& text) {
  throw std::invalid_argument("complex literal \"" + text + "\": expected a+bi with decimal parts");
}

// Parses "+i" / "-i" / "i" at s, else a decimal followed by optional 'i'.
// Returns the end pointer; sets value and is_imag.
const char* component(const char* s, const std::string& text, double& value, bool& is_imag) {
  double sign = 1.0;
  const char* p = s;
  if (*p == '+' || *p == '-') {
    if (*p == '-') sign = -1.0;
    if (p[1] == 'i') {
      value = sign;
      is_imag = true;
      return p + 2;
    }
  } else if (*p == 'i') {
    value = 1.0;
    is_imag = true;
    return p + 1;
  }
  char* end = nullptr;
  value = std::strtod(s, &end);
  if (end == s) bad_literal(text);
  is_imag = *end == 'i';
  return is_imag ? end + 1 : end;
}

}  // namespace

Complex parse_complex(const std::string& text) {
  std::size_t lo = 0, hi = text.size();
  while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
  while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
  const std::string body = text.substr(lo, hi - lo);
  if (body.empty()) bad_literal(text);

  double re = 0.0, im = 0.0;
  double v1 = 0.0;
  bool imag1 = false;
  const char* p = component(body.c_str(), text, v1, imag1);
  if (*p == '\0') {
    (imag1 ? im : re) = v1;
    return Complex{re, im};
  }
  if (imag1 || (*p != '+' && *p != '-')) bad_literal(text);
  double v2 = 0.0;
  bool imag2 = false;
  p = component(p, text, v2, imag2);
  if (*p != '\0' || !imag2) bad_literal(text);
  return Complex{v1, v2};
}

}  // namespace dinikit::report
