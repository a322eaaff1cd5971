// poincare: exact Poincare-polynomial calculus for rational spaces and maps.
//
// Subcommands: space info/list, map info, check, product-threshold,
// hyperbolic. Exit codes: 0 = holds/success, 1 = inequality or identity
// violated, 2 = input error, 3 = not applicable / undecidable at this
// truncation.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "poincare/catalog_refs.hpp"
#include "poincare/hilali.hpp"
#include "poincare/hyperbolic.hpp"
#include "poincare/json_io.hpp"

namespace {

using namespace poincare;

int default_truncation() {
  if (const char* env = std::getenv("POINCARE_TRUNCATION")) {
    try {
      const int value = std::stoi(env);
      if (value >= 2) return value;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring bad POINCARE_TRUNCATION='" << env << "'\n";
  }
  return kDefaultTruncation;
}

const char* to_label(EllipticityClass c) {
  switch (c) {
    case EllipticityClass::Elliptic: return "Elliptic";
    case EllipticityClass::Hyperbolic: return "Hyperbolic";
    default: return "UndeterminedTruncated";
  }
}

const char* to_label(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    default: return "undetermined";
  }
}

const char* to_label(ConvergenceVerdict v) {
  switch (v) {
    case ConvergenceVerdict::ConvergesTo: return "ConvergesTo";
    case ConvergenceVerdict::DivergenceSuspected: return "DivergenceSuspected";
    default: return "Inconclusive";
  }
}

std::string series_str(const TruncatedSeriesQ& s, int max_terms = 12) {
  std::ostringstream out;
  int shown = 0;
  for (auto& [d, c] : s.coeffs()) {
    if (shown++ == max_terms) {
      out << " + ...";
      break;
    }
    if (shown > 1) out << " + ";
    if (c != 1 || d == 0) out << to_string(c);
    if (d > 0) out << "t^" << d;
  }
  if (shown == 0) out << "0";
  out << "  (through t^" << s.truncation() << ")";
  return out.str();
}

Json verdict_json(const HilaliVerdict& v) {
  return Json{{"context", v.context}, {"lhs", to_string(v.lhs)},   {"rhs", to_string(v.rhs)},
              {"holds", v.holds},     {"strict", v.strict}};
}

Json classification_json(const MapClassification& c) {
  return Json{{"ellipticWrtKernel", to_label(c.elliptic_wrt_kernel())},
              {"ellipticWrtCokernel", to_label(c.elliptic_wrt_cokernel())},
              {"elliptic", to_label(c.elliptic())},
              {"hyperbolicWrtKernel", to_label(c.hyperbolic_wrt_kernel())},
              {"hyperbolicWrtCokernel", to_label(c.hyperbolic_wrt_cokernel())}};
}

Json radius_json(const RadiusEstimate& est) {
  Json out{{"radius", est.radius},
           {"rootTestValue", est.root_test_value},
           {"infiniteRadius", est.infinite_radius},
           {"window", Json::array({est.window_lo, est.window_hi})}};
  if (est.ratio_test_value) out["ratioTestValue"] = *est.ratio_test_value;
  return out;
}

Json convergence_json(const ConvergenceReport& c) {
  Json out{{"verdict", to_label(c.verdict)}, {"tailBound", c.tail_bound}};
  if (c.verdict == ConvergenceVerdict::ConvergesTo) out["value"] = c.value;
  Json prefixes = Json::array();
  for (auto& [k, s] : c.prefix_sums) prefixes.push_back(Json::array({k, s}));
  out["prefixSums"] = prefixes;
  return out;
}

Json threshold_json(const ThresholdReport& r) {
  Json out{{"s", to_string(r.s)}, {"maxN", r.max_n}};
  out["analyticBound"] = r.analytic_bound ? Json(*r.analytic_bound) : Json();
  out["exactMinimum"] = r.exact_minimum ? Json(*r.exact_minimum) : Json();
  if (r.verified_range) {
    out["verifiedRange"] = Json::array({r.verified_range->first, r.verified_range->second});
  }
  Json per_n = Json::array();
  for (auto& e : r.per_n) {
    per_n.push_back(Json{{"n", e.n}, {"lhs", to_string(e.lhs)}, {"rhs", to_string(e.rhs)}});
  }
  out["perN"] = per_n;
  return out;
}

Json hyperbolic_json(const HyperbolicReport& r) {
  Json out{{"truncation", r.truncation},
           {"radius", radius_json(r.radius)},
           {"felixBoundSatisfied", r.felix_bound_satisfied},
           {"atRadius", convergence_json(r.at_radius)},
           {"note", r.note}};
  if (r.comparison) {
    out["comparison"] =
        Json{{"seriesValue", r.comparison->first}, {"poincareValue", r.comparison->second}};
  }
  return out;
}

struct Options {
  std::string format = "human";
  int truncation = kDefaultTruncation;
  bool json() const { return format == "json"; }
};

void emit(const Options& opt, const Json& payload, const std::string& human) {
  if (opt.json()) {
    std::cout << canonical_dump(payload);
  } else {
    std::cout << human;
  }
}

int cmd_space_info(const Options& opt, const std::string& ref) {
  SpaceModel x = resolve_space_ref(ref, opt.truncation);
  const EllipticityClass cls = classify(x);

  Json payload = space_to_json(x);
  payload["classification"] = to_label(cls);
  std::ostringstream human;
  human << x.name << "\n  classification: " << to_label(cls) << "\n";
  if (cls == EllipticityClass::UndeterminedTruncated && x.homology_total == Finiteness::Infinite) {
    human << "  note: homology rank infinite, neither elliptic nor hyperbolic\n";
  }
  if (x.homology.support().finite()) {
    PolynomialQ p = poincare_polynomial(x);
    payload["P"] = p.str();
    payload["chi"] = euler(x);
    human << "  P(t)   = " << p.str() << "\n  chi    = " << euler(x) << "\n";
  } else {
    human << "  HP(t)  = " << series_str(hp_series_h(x, x.homology.support().bound)) << "\n";
  }
  if (x.homotopy.support().finite()) {
    PolynomialQ ppi = homotopy_poincare_polynomial(x);
    payload["Ppi"] = ppi.str();
    payload["chiPi"] = euler_pi(x);
    human << "  Ppi(t) = " << ppi.str() << "\n  chiPi  = " << euler_pi(x) << "\n";
  } else {
    human << "  HPpi(t) = " << series_str(hp_series_pi(x, x.homotopy.support().bound)) << "\n";
  }
  if (!x.notes.empty()) human << "  provenance: " << x.notes << "\n";
  emit(opt, payload, human.str());
  return 0;
}

int cmd_space_list(const Options& opt) {
  const Json families = Json::array({"point", "sphere:N  (N >= 2)", "cp:N  (N >= 1)",
                                     "kq:N  (N >= 2)", "wedge:N1,N2,...",
                                     "product:<ref>*<ref>", "<file>.json"});
  std::ostringstream human;
  human << "catalog space references:\n";
  for (auto& f : families) human << "  " << f.get<std::string>() << "\n";
  human << "map references:\n  constant:<space>  identity:<space>  degree:N:D\n"
        << "  counterexample:referee  wedge-inclusion:N  generator:N\n"
        << "  product:<map>*<map>  <file>.json\n";
  emit(opt, Json{{"spaces", families}}, human.str());
  return 0;
}

int cmd_map_info(const Options& opt, const std::string& ref) {
  MapModel f = resolve_map_ref(ref, opt.truncation);
  const MapClassification cls = ellipticity_of_map(f);
  const KernelProfile profile = kernel_profile(f);

  Json payload{{"name", f.name},
               {"source", f.source.name},
               {"target", f.target.name},
               {"classification", classification_json(cls)},
               {"kernelProfile",
                Json{{"hKernel", detail::dims_to_json(profile.h_kernel)},
                     {"hCokernel", detail::dims_to_json(profile.h_cokernel)},
                     {"piKernel", detail::dims_to_json(profile.pi_kernel)},
                     {"piCokernel", detail::dims_to_json(profile.pi_cokernel)}}}};
  std::ostringstream human;
  human << f.name << "\n  elliptic wrt kernel: " << to_label(cls.elliptic_wrt_kernel())
        << ", wrt cokernel: " << to_label(cls.elliptic_wrt_cokernel()) << "\n";
  if (cls.elliptic_wrt_kernel() == Tri::Yes) {
    const PolynomialQ pf = p_of_map(f);
    const PolynomialQ ppi = p_pi_of_map(f);
    payload["Pf"] = pf.str();
    payload["PpiF"] = ppi.str();
    payload["PfAt1"] = to_string(pf(Rational(1)));
    payload["PpiFAt1"] = to_string(ppi(Rational(1)));
    human << "  P_f(t)   = " << pf.str() << ",  P_f(1)   = " << to_string(pf(Rational(1))) << "\n"
          << "  Ppi_f(t) = " << ppi.str() << ",  Ppi_f(1) = " << to_string(ppi(Rational(1)))
          << "\n";
  } else {
    human << "  P_f unavailable (not elliptic wrt kernel)\n";
  }
  emit(opt, payload, human.str());
  return 0;
}

int verdict_exit(const HilaliVerdict& v) { return v.holds ? 0 : 1; }

int cmd_check(const Options& opt, const std::string& kind, const std::string& ref) {
  if (kind == "hilali") {
    HilaliVerdict v = hilali_check(resolve_space_ref(ref, opt.truncation));
    std::ostringstream human;
    human << "hilali " << v.context << ": " << to_string(v.lhs) << (v.holds ? " <= " : " > ")
          << to_string(v.rhs) << (v.holds ? "  (holds)" : "  (VIOLATED)") << "\n";
    emit(opt, verdict_json(v), human.str());
    return verdict_exit(v);
  }
  if (kind == "relative-hilali") {
    HilaliVerdict v = relative_hilali_check(resolve_map_ref(ref, opt.truncation));
    std::ostringstream human;
    human << "relative-hilali " << v.context << ": " << to_string(v.lhs)
          << (v.holds ? " <= " : " > ") << to_string(v.rhs)
          << (v.holds ? "  (holds)" : "  (VIOLATED)") << "\n";
    emit(opt, verdict_json(v), human.str());
    return verdict_exit(v);
  }
  if (kind == "identities") {
    MapModel f = resolve_map_ref(ref, opt.truncation);
    IdentityReport r = verify_exact_identities(f);
    Json payload{{"hIdentity", r.h_identity},
                 {"piIdentity", r.pi_identity},
                 {"hSurjective", r.h_surjective},
                 {"piSurjective", r.pi_surjective}};
    std::ostringstream human;
    human << "identities " << f.name << ": H " << (r.h_identity ? "ok" : "VIOLATED") << ", pi "
          << (r.pi_identity ? "ok" : "VIOLATED") << "\n";
    emit(opt, payload, human.str());
    return r.h_identity && r.pi_identity ? 0 : 1;
  }
  if (kind == "injectivity") {
    MapModel f = resolve_map_ref(ref, opt.truncation);
    InjectivityReport r = injectivity_probe(f);
    Json payload{{"hInjective", to_label(r.h_injective)},
                 {"piInjective", to_label(r.pi_injective)},
                 {"inScope", r.in_scope},
                 {"consistent", to_label(r.consistent)},
                 {"classification", classification_json(r.classification)},
                 {"note", r.note}};
    std::ostringstream human;
    human << "injectivity " << f.name << ": H injective " << to_label(r.h_injective)
          << ", pi injective " << to_label(r.pi_injective) << ", consistent "
          << to_label(r.consistent) << (r.in_scope ? "" : "  [out of scope]") << "\n";
    emit(opt, payload, human.str());
    if (!r.in_scope || r.consistent == Tri::Undetermined) return 3;
    return r.consistent == Tri::Yes ? 0 : 1;
  }
  throw InvalidModel("unknown check kind '" + kind +
                     "' (expected hilali, relative-hilali, identities, injectivity)");
}

int cmd_product_threshold(const Options& opt, const std::string& ref, const std::string& s_text,
                          int max_n) {
  MapModel f = resolve_map_ref(ref, opt.truncation);
  ThresholdReport r = product_threshold(f, parse_rational(s_text), max_n);
  Json payload = threshold_json(r);
  payload["map"] = f.name;
  std::ostringstream human;
  human << "product-threshold " << f.name << " at s = " << to_string(r.s) << "\n";
  human << "  analytic bound: "
        << (r.analytic_bound ? std::to_string(*r.analytic_bound) : std::string("-")) << "\n";
  human << "  exact minimum:  "
        << (r.exact_minimum ? std::to_string(*r.exact_minimum)
                            : "not found within max-n " + std::to_string(r.max_n))
        << "\n";
  if (r.verified_range) {
    human << "  strict inequality verified for n in [" << r.verified_range->first << ", "
          << r.verified_range->second << "]\n";
  }
  for (auto& e : r.per_n) {
    human << "    n = " << e.n << ": Ppi = " << to_string(e.lhs) << "  vs  P = " << to_string(e.rhs)
          << "\n";
  }
  emit(opt, payload, human.str());
  return r.exact_minimum ? 0 : 3;
}

int cmd_hyperbolic(const Options& opt, const std::string& ref, const std::string& experiment,
                   int truncation, double r, const std::string& radius_source, int max_n) {
  if (experiment == "felix" || experiment == "question42") {
    SpaceModel x = resolve_space_ref(ref, std::max(truncation, opt.truncation));
    HyperbolicReport report = experiment == "felix" ? felix_check(x, truncation)
                                                    : question_42_experiment(x, truncation);
    Json payload = hyperbolic_json(report);
    payload["space"] = x.name;
    payload["experiment"] = experiment;
    std::ostringstream human;
    human << experiment << " " << x.name << " at N = " << report.truncation << "\n"
          << "  radius estimate: " << report.radius.radius
          << "  (root test: " << report.radius.root_test_value << ")\n"
          << "  Felix bound (< 1): " << (report.felix_bound_satisfied ? "satisfied" : "NOT met")
          << "\n"
          << "  at the radius: " << to_label(report.at_radius.verdict);
    if (report.at_radius.verdict == ConvergenceVerdict::ConvergesTo) {
      human << " ~= " << report.at_radius.value;
    }
    human << "\n";
    if (report.comparison) {
      human << "  HPpi(r) ~= " << report.comparison->first << "  vs  P(r) = "
            << report.comparison->second << "\n";
    }
    if (!report.note.empty()) human << "  " << report.note << "\n";
    emit(opt, payload, human.str());
    return 0;
  }
  if (experiment == "threshold") {
    MapModel f = resolve_map_ref(ref, std::max(truncation, opt.truncation));
    const RadiusSource source =
        radius_source == "rf" ? RadiusSource::KernelSeries : RadiusSource::SourceSpace;
    HyperbolicThresholdReport report = hyperbolic_threshold(f, r, truncation, max_n, source);
    Json payload{{"map", f.name},
                 {"experiment", "threshold"},
                 {"r", report.r},
                 {"radiusEstimate", report.radius_estimate},
                 {"radiusSource", radius_source},
                 {"maxN", report.max_n}};
    payload["threshold"] = report.threshold ? Json(*report.threshold) : Json();
    if (report.verified_range) {
      payload["verifiedRange"] =
          Json::array({report.verified_range->first, report.verified_range->second});
    }
    Json per_n = Json::array();
    for (auto& e : report.per_n) {
      per_n.push_back(Json{{"n", e.n}, {"lhs", e.lhs}, {"rhs", e.rhs}});
    }
    payload["perN"] = per_n;
    std::ostringstream human;
    human << "hyperbolic threshold " << f.name << " at r = " << r << " (radius estimate "
          << report.radius_estimate << " from " << radius_source << ")\n"
          << "  n(r): "
          << (report.threshold ? std::to_string(*report.threshold)
                               : "not found within max-n " + std::to_string(report.max_n))
          << "\n";
    emit(opt, payload, human.str());
    return report.threshold ? 0 : 3;
  }
  throw InvalidModel("unknown experiment '" + experiment +
                     "' (expected felix, question42, threshold)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Poincare-polynomial calculus for rational spaces and maps"};
  app.require_subcommand(1);

  Options opt;
  opt.truncation = default_truncation();
  app.add_option("--format", opt.format, "output format")
      ->check(CLI::IsMember({"human", "json"}))
      ->capture_default_str();
  app.add_option("--truncation", opt.truncation,
                 "default truncation for catalog entries with infinite support")
      ->check(CLI::Range(2, 1000));

  auto* space = app.add_subcommand("space", "inspect spaces");
  space->require_subcommand(1);
  auto* space_info = space->add_subcommand("info", "ranks, polynomials, classification");
  std::string space_ref;
  space_info->add_option("ref", space_ref, "catalog reference or JSON file")->required();
  auto* space_list = space->add_subcommand("list", "list catalog reference families");

  auto* map = app.add_subcommand("map", "inspect maps");
  map->require_subcommand(1);
  auto* map_info = map->add_subcommand("info", "induced maps, kernel profile, P_f");
  std::string map_ref;
  map_info->add_option("ref", map_ref, "catalog reference or JSON file")->required();

  auto* check = app.add_subcommand("check", "run an inequality or identity check");
  std::string check_kind, check_ref;
  check->add_option("kind", check_kind, "hilali | relative-hilali | identities | injectivity")
      ->required();
  check->add_option("ref", check_ref, "catalog reference or JSON file")->required();

  auto* threshold = app.add_subcommand("product-threshold", "strict inequality under powers");
  std::string threshold_ref, threshold_s = "1";
  int threshold_max_n = 12;
  threshold->add_option("ref", threshold_ref, "map reference")->required();
  threshold->add_option("--s", threshold_s, "evaluation point (rational, >= 0)")
      ->capture_default_str();
  threshold->add_option("--max-n", threshold_max_n, "exact search cap")->check(CLI::Range(1, 14));

  auto* hyperbolic = app.add_subcommand("hyperbolic", "Hilbert-Poincare series experiments");
  std::string hyp_ref, hyp_experiment = "felix", hyp_radius_source = "rX";
  int hyp_n = 60, hyp_max_n = 12;
  double hyp_r = 0.5;
  hyperbolic->add_option("ref", hyp_ref, "space reference (felix/question42) or map (threshold)")
      ->required();
  hyperbolic->add_option("--n", hyp_n, "series truncation")->check(CLI::Range(8, 1000));
  hyperbolic->add_option("--experiment", hyp_experiment, "felix | question42 | threshold")
      ->capture_default_str();
  hyperbolic->add_option("--r", hyp_r, "evaluation point for the threshold experiment");
  hyperbolic->add_option("--radius-source", hyp_radius_source, "rX | rf")
      ->check(CLI::IsMember({"rX", "rf"}));
  hyperbolic->add_option("--max-n", hyp_max_n, "threshold search cap")->check(CLI::Range(1, 64));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (space_info->parsed()) return cmd_space_info(opt, space_ref);
    if (space_list->parsed()) return cmd_space_list(opt);
    if (map_info->parsed()) return cmd_map_info(opt, map_ref);
    if (check->parsed()) return cmd_check(opt, check_kind, check_ref);
    if (threshold->parsed())
      return cmd_product_threshold(opt, threshold_ref, threshold_s, threshold_max_n);
    if (hyperbolic->parsed())
      return cmd_hyperbolic(opt, hyp_ref, hyp_experiment, hyp_n, hyp_r, hyp_radius_source,
                            hyp_max_n);
  } catch (const NotApplicable& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 3;
  } catch (const NotElliptic& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 3;
  } catch (const NotEllipticWrtKernel& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 3;
  } catch (const NotHyperbolic& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 3;
  } catch (const UnboundedSupport& e) {
    std::cerr << "undecidable at this truncation: " << e.what() << "\n";
    return 3;
  } catch (const TooShort& e) {
    std::cerr << "undecidable at this truncation: " << e.what() << "\n";
    return 3;
  } catch (const RadiusExceeded& e) {
    std::cerr << "not applicable: " << e.what() << "\n";
    return 3;
  } catch (const DegreeOutOfWindow& e) {
    std::cerr << "undecidable at this truncation: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
