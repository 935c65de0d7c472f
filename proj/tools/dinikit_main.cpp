#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dinikit/bounds.hpp"
#include "dinikit/corollary.hpp"
#include "dinikit/plot.hpp"
#include "dinikit/report_json.hpp"
#include "dinikit/series.hpp"
#include "dinikit/verifier.hpp"

namespace {

using namespace dinikit;
using report::json;

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string complex_str(Complex z) {
  return fmt17(z.real()) + (z.imag() < 0 ? "" : "+") + fmt17(z.imag()) + "i";
}

void write_doc(const json& doc, const std::string& path) {
  if (path.empty()) return;
  const std::filesystem::path parent = std::filesystem::path(path).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw plot::IoError("cannot open " + path + " for writing");
  out << doc.dump(2) << '\n';
  if (!out.flush()) throw plot::IoError("write failed: " + path);
}

struct EvalOpts {
  std::string alpha = "1", v = "1/2", z = "0+0i";
  int deriv = 0;
  double tol = dini::kDefaultTol;
  bool as_json = false;
};

int run_eval(const EvalOpts& o) {
  if (!(o.tol > 0.0)) throw std::domain_error("tol must be > 0");
  if (o.deriv != 0 && o.deriv != 1) throw std::domain_error("deriv must be 0 or 1");
  const Params p{Rational::from_string(o.alpha), Rational::from_string(o.v), 0};
  const Complex z = report::parse_complex(o.z);
  const EvalResult r = dini::eval_w(p, z, o.deriv, o.tol);
  if (o.as_json) {
    std::cout << report::eval_json(r).dump(2) << '\n';
  } else {
    std::cout << "value: " << complex_str(r.value) << '\n'
              << "terms_used: " << r.terms_used << '\n'
              << "tail_bound: " << fmt17(r.tail_bound) << '\n';
    if (r.branch_warning) std::cout << "branch_warning: true\n";
  }
  return 0;
}

struct BoundsOpts {
  std::string alpha = "1", v = "1/2";
  bool as_json = false;
};

json hypothesis_block(bounds::HypothesisKind kind, const Rational& alpha, const Rational& v) {
  const bounds::Hypothesis h = bounds::hypothesis(kind, alpha, v);
  return json{{"slack", report::rational_json(h.slack)}, {"satisfied", h.satisfied}};
}

json bounds_doc(const Params& p) {
  using bounds::BoundKind;
  const auto val = [&](BoundKind k) {
    return report::rational_json(bounds::bound_value(k, p.alpha, p.v));
  };
  json j;
  j["params"] = report::params_json(p);
  j["bounds"] = json{{"sup_w", val(BoundKind::kSupW)},
                     {"sup_wprime", val(BoundKind::kSupWPrime)},
                     {"ratio_w", val(BoundKind::kRatioW)},
                     {"ratio_w_inv", val(BoundKind::kRatioWInv)},
                     {"ratio_wprime", val(BoundKind::kRatioWPrime)},
                     {"ratio_wprime_inv", val(BoundKind::kRatioWPrimeInv)}};
  j["hypotheses"] =
      json{{"ratio_w", hypothesis_block(bounds::HypothesisKind::kRatioW, p.alpha, p.v)},
           {"ratio_wprime", hypothesis_block(bounds::HypothesisKind::kRatioWPrime, p.alpha, p.v)}};
  return j;
}

int run_bounds(const BoundsOpts& o) {
  const Params p{Rational::from_string(o.alpha), Rational::from_string(o.v), 0};
  require_bounds_domain(p);
  const json doc = bounds_doc(p);
  if (o.as_json) {
    std::cout << doc.dump(2) << '\n';
    return 0;
  }
  const auto ratio_str = [](const json& q) {
    const std::string den = q["den"].get<std::string>();
    return q["num"].get<std::string>() + (den == "1" ? "" : "/" + den);
  };
  for (const auto& [name, value] : doc["bounds"].items())
    std::cout << name << " = " << ratio_str(value) << " = "
              << fmt17(value["approx"].get<double>()) << '\n';
  for (const auto& [name, h] : doc["hypotheses"].items())
    std::cout << "hypothesis " << name << ": slack = " << ratio_str(h["slack"])
              << (h["satisfied"].get<bool>() ? " (satisfied)" : " (NOT satisfied)") << '\n';
  return 0;
}

struct VerifyOpts {
  std::string case_id;
  double r_max = 0.999;
  int radii = 64;
  int angles = 720;
  bool zero_ring = false;
  bool as_json = false;
  std::string out;
};

verify::DiskSampling make_spec(const VerifyOpts& o) {
  verify::DiskSampling spec;
  spec.r_max = o.r_max;
  spec.radii = o.radii;
  spec.angles = o.angles;
  spec.includes_zero_neighborhood = o.zero_ring;
  return spec;
}

void print_report_line(const verify::VerificationReport& rep) {
  std::cout << rep.id << ": " << verify::verdict_name(rep.verdict) << "  " << rep.statistic << " = "
            << fmt17(rep.empirical);
  if (rep.claimed_bound)
    std::cout << "  bound = " << rep.claimed_bound->str() << "  margin = " << fmt17(rep.margin);
  if (rep.hypothesis && !rep.hypothesis->satisfied)
    std::cout << "  [hypothesis slack " << rep.hypothesis->slack.str() << "]";
  if (rep.samples > 0) {
    std::cout << "  (" << rep.samples << " samples";
    if (rep.skipped > 0) std::cout << ", " << rep.skipped << " skipped";
    std::cout << ")";
  }
  std::cout << '\n';
}

int run_verify(const VerifyOpts& o) {
  const verify::DiskSampling spec = make_spec(o);
  (void)verify::sampling_radii(spec);  // surface bad overrides as usage errors up front

  std::vector<verify::VerificationReport> reports;
  if (o.case_id.empty())
    reports = verify::run_catalog(spec);
  else
    reports.push_back(verify::run_case(o.case_id, spec));

  const json doc = report::catalog_json(reports);
  write_doc(doc, o.out);
  if (o.as_json) {
    std::cout << doc.dump(2) << '\n';
  } else {
    for (const auto& rep : reports) print_report_line(rep);
    const json& s = doc["summary"];
    std::cout << s["total"].get<long>() << " cases: " << s["confirmed"].get<long>()
              << " confirmed, " << s["violated"].get<long>() << " violated, "
              << s["hypothesis_failed"].get<long>() << " hypothesis_failed\n";
  }
  return doc["summary"]["exit_code"].get<int>();
}

struct PlotOpts {
  std::string fn = "f1";
  std::string format = "both";
  std::string out;
  std::vector<double> radii;
  int angles = 200;
};

int run_plot(const PlotOpts& o) {
  const dini::CorollaryFn fn = dini::corollary_from_name(o.fn);
  if (o.format != "svg" && o.format != "csv" && o.format != "both")
    throw std::invalid_argument("format must be svg, csv, or both");
  verify::DiskSampling spec = plot::default_figure_spec();
  if (!o.radii.empty()) spec.explicit_radii = o.radii;
  spec.angles = o.angles;

  const plot::ImageGrid grid = plot::image_domain(fn, spec);

  const std::string base = o.out.empty() ? std::string("figures/") + o.fn : o.out;
  const std::filesystem::path parent = std::filesystem::path(base).parent_path();
  if (!parent.empty()) std::filesystem::create_directories(parent);
  std::vector<std::string> written;
  if (o.format == "svg" || o.format == "both") {
    plot::emit(grid, plot::EmitFormat::kSvg, base + ".svg");
    written.push_back(base + ".svg");
  }
  if (o.format == "csv" || o.format == "both") {
    plot::emit(grid, plot::EmitFormat::kCsv, base + ".csv");
    written.push_back(base + ".csv");
  }

  std::cout << o.fn << ": " << grid.points.size() << " points, min Re = "
            << (grid.has_min ? fmt17(grid.min_re) : "n/a") << ", " << grid.flagged << " flagged\n";
  for (const std::string& path : written) std::cout << "wrote " << path << '\n';
  return 0;
}

struct ReportOpts {
  std::string out;
  int radii = 64;
  int angles = 720;
};

int run_report(const ReportOpts& o) {
  verify::DiskSampling spec;
  spec.radii = o.radii;
  spec.angles = o.angles;
  json doc;
  doc["tool"] = "dinikit";
  doc["catalog"] = report::catalog_json(verify::run_catalog(spec));
  json per_pair = json::array();
  for (const dini::CorollaryFn fn :
       {dini::CorollaryFn::kF1, dini::CorollaryFn::kF3, dini::CorollaryFn::kF5})
    per_pair.push_back(bounds_doc(dini::corollary_info(fn).params));
  doc["bounds"] = std::move(per_pair);
  write_doc(doc, o.out);
  if (o.out.empty()) std::cout << doc.dump(2) << '\n';
  return doc["catalog"]["summary"]["exit_code"].get<int>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power series toolkit: certified evaluation, exact bounds, claim checks, figures"};
  app.require_subcommand(1);

  EvalOpts eo;
  CLI::App* eval = app.add_subcommand("eval", "evaluate w or w' with a certified tail bound");
  eval->add_option("--alpha", eo.alpha, "alpha as integer, fraction p/q, or decimal");
  eval->add_option("--v", eo.v, "order v as integer, fraction p/q, or decimal");
  eval->add_option("--z", eo.z, "evaluation point, a+bi");
  eval->add_option("--deriv", eo.deriv, "0 for w, 1 for w'");
  eval->add_option("--tol", eo.tol, "certified truncation tolerance");
  eval->add_flag("--json", eo.as_json, "emit JSON");

  BoundsOpts bo;
  CLI::App* bnd = app.add_subcommand("bounds", "print the six exact bound constants");
  bnd->add_option("--alpha", bo.alpha, "alpha as integer, fraction p/q, or decimal");
  bnd->add_option("--v", bo.v, "order v as integer, fraction p/q, or decimal");
  bnd->add_flag("--json", bo.as_json, "emit JSON");

  VerifyOpts vo;
  CLI::App* ver = app.add_subcommand("verify", "check the claim catalog on a disk grid");
  ver->add_option("--case", vo.case_id, "single catalog id (default: all 23)");
  ver->add_option("--rmax", vo.r_max, "outermost radius, < 1");
  ver->add_option("--radii", vo.radii, "number of radii");
  ver->add_option("--angles", vo.angles, "samples per circle");
  ver->add_flag("--zero-ring", vo.zero_ring, "append a ring near the origin");
  ver->add_flag("--json", vo.as_json, "emit the full JSON document");
  ver->add_option("--out", vo.out, "also write the JSON document to this path");

  PlotOpts po;
  CLI::App* plt = app.add_subcommand("plot", "write image-domain figures for f1..f6");
  plt->add_option("--fn", po.fn, "function id f1..f6")->required();
  plt->add_option("--format", po.format, "svg, csv, or both");
  plt->add_option("--out", po.out, "output base path (default figures/<fn>)");
  plt->add_option("--radii", po.radii, "boundary radii to draw");
  plt->add_option("--angles", po.angles, "samples per circle");

  ReportOpts ro;
  CLI::App* rep = app.add_subcommand("report", "full JSON document: catalog plus bound tables");
  rep->add_option("--out", ro.out, "write to this path instead of stdout");
  rep->add_option("--radii", ro.radii, "number of radii");
  rep->add_option("--angles", ro.angles, "samples per circle");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (app.got_subcommand(eval)) return run_eval(eo);
    if (app.got_subcommand(bnd)) return run_bounds(bo);
    if (app.got_subcommand(ver)) return run_verify(vo);
    if (app.got_subcommand(plt)) return run_plot(po);
    if (app.got_subcommand(rep)) return run_report(ro);
    return 2;
  } catch (const dini::EvalUnachievable& e) {
    std::cerr << "evaluation failure: " << e.what() << '\n';
    return 3;
  } catch (const plot::IoError& e) {
    std::cerr << "io failure: " << e.what() << '\n';
    return 4;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "io failure: " << e.what() << '\n';
    return 4;
  } catch (const std::domain_error& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "evaluation failure: " << e.what() << '\n';
    return 3;
  }
}
