// Command-line surface over the core library: symbolic verdicts as JSON,
// sequence-norm evaluations as CSV, and (1/p, s)-region diagrams as SVG.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "mskit/diagram.hpp"
#include "mskit/models.hpp"

using namespace mskit;

namespace {

struct DescriptorFlags {
  std::string family = "B";
  std::string flavor = "sup";
  std::string s, p, q = "1", rho;
  int n = 0;

  void attach(CLI::App* app, bool required, const std::string& suffix = "") {
    auto opt = [&](const std::string& name) { return "--" + name + suffix; };
    app->add_option(opt("family"), family, "space family: B or F");
    app->add_option(opt("flavor"), flavor, "flavor: sub, sup or classical");
    auto* s_opt = app->add_option(opt("s"), s, "smoothness (rational a/b, decimal, or integer)");
    auto* p_opt = app->add_option(opt("p"), p, "integrability p");
    app->add_option(opt("q"), q, "summability q (default 1; 'inf' allowed)");
    app->add_option(opt("rho"), rho, "slope parameter rho (defaults to -n for classical)");
    if (suffix.empty()) app->add_option("--n", n, "dimension")->required(required);
    if (required) {
      s_opt->required();
      p_opt->required();
    }
  }

  SpaceDescriptor build(int dim) const {
    SpaceDescriptor d;
    if (family == "B" || family == "b")
      d.family = Family::B;
    else if (family == "F" || family == "f")
      d.family = Family::F;
    else
      throw std::invalid_argument("unknown family: " + family);
    if (flavor == "sub")
      d.flavor = Flavor::Sub;
    else if (flavor == "sup")
      d.flavor = Flavor::Sup;
    else if (flavor == "classical")
      d.flavor = Flavor::Classical;
    else
      throw std::invalid_argument("unknown flavor: " + flavor);
    d.n = dim;
    d.s = Scalar::parse(s);
    d.p = Scalar::parse(p);
    d.q = Scalar::parse(q);
    d.rho = rho.empty() ? Scalar(-dim) : Scalar::parse(rho);
    d.require_valid();
    return d;
  }
};

nlohmann::json verdict_json(const Verdict& v) { return nlohmann::json::parse(v.to_json()); }

std::string marker_str(const std::optional<SpaceOrMarker>& m) {
  return m ? m->str() : std::string("-");
}

Ground parse_ground(const std::string& g) {
  if (g == "rn" || g == "whole") return Ground::RnWhole;
  if (g == "domain" || g == "bounded") return Ground::BoundedDomain;
  throw std::invalid_argument("unknown ground: " + g + " (use rn|domain)");
}

PredicateKind parse_region_predicate(const std::string& name) {
  if (name == "linfty") return PredicateKind::EmbedLinfty;
  if (name == "l1loc") return PredicateKind::SubsetL1loc;
  if (name == "delta") return PredicateKind::MemberDelta;
  if (name == "chiq") return PredicateKind::MemberChiQ;
  if (name == "functional") return PredicateKind::FunctionalChiQ;
  if (name == "algebra") return PredicateKind::MultiplicationAlgebra;
  if (name == "truncation") return PredicateKind::Truncation;
  if (name == "haar") return PredicateKind::HaarBasis;
  if (name == "bmo") return PredicateKind::EmbedBmo;
  throw std::invalid_argument("no region predicate named " + name);
}

int run_classify(const DescriptorFlags& flags, const DescriptorFlags& flags2,
                 const std::string& predicate, const std::string& ground_s,
                 const std::string& mode_s, const std::string& r_s, const std::string& sigma_s,
                 const std::string& shift_s, const std::string& theta_s,
                 const std::string& method_s, const std::string& iq_s, bool have_second) {
  SpaceDescriptor d = flags.build(flags.n);
  nlohmann::json out;

  auto second = [&]() -> SpaceDescriptor {
    if (!have_second)
      throw std::invalid_argument("this predicate needs a second space (--s2/--p2/...)");
    return flags2.build(flags.n);
  };

  if (predicate == "linfty" || predicate == "continuous" || predicate == "l1loc" ||
      predicate == "bmo" || predicate == "lr" || predicate == "holder" ||
      predicate == "embed") {
    EmbeddingQuery query;
    query.source = d;
    query.ground = ground_s.empty() ? Ground::RnWhole : parse_ground(ground_s);
    query.mode = mode_s == "compact" ? EmbedMode::Compact : EmbedMode::Continuous;
    if (predicate == "linfty") query.target = Target::linfty();
    else if (predicate == "continuous") query.target = Target::continuous();
    else if (predicate == "l1loc") query.target = Target::l1loc();
    else if (predicate == "bmo") query.target = Target::bmo();
    else if (predicate == "lr") query.target = Target::lr(Scalar::parse(r_s.empty() ? "inf" : r_s));
    else if (predicate == "holder") {
      if (sigma_s.empty()) throw std::invalid_argument("--sigma required for the holder target");
      query.target = Target::holder(Scalar::parse(sigma_s));
    } else {
      query.target = Target::space_of(second());
    }
    out = verdict_json(embeds(query));
  } else if (predicate == "delta" || predicate == "chiq") {
    out = verdict_json(member(predicate == "delta" ? Element::Delta : Element::ChiQ, d));
  } else if (predicate == "functional") {
    out = verdict_json(functional_chiQ(d));
  } else if (predicate == "algebra" || predicate == "truncation" || predicate == "haar" ||
             predicate == "fatou" || predicate == "multiplier" || predicate == "diffeo" ||
             predicate == "extension") {
    Property which = predicate == "algebra"      ? Property::MultiplicationAlgebra
                     : predicate == "truncation" ? Property::Truncation
                     : predicate == "haar"       ? Property::HaarBasis
                     : predicate == "fatou"      ? Property::Fatou
                     : predicate == "multiplier" ? Property::SmoothMultiplier
                     : predicate == "diffeo"     ? Property::Diffeomorphism
                                                 : Property::HalfSpaceExtension;
    out = verdict_json(property(d, which));
  } else if (predicate == "trace") {
    TraceResult t = trace(d);
    out["verdict"] = verdict_json(t.verdict);
    out["target"] = marker_str(t.target);
    out["extension_exists"] = t.extension_exists;
  } else if (predicate == "growth") {
    GrowthEnvelope g = growth_envelope(d, ground_s.empty() ? Ground::BoundedDomain
                                                           : parse_ground(ground_s));
    out["verdict"] = verdict_json(g.verdict);
    if (g.shape) {
      switch (*g.shape) {
        case GrowthEnvelope::Shape::InfiniteEverywhere: out["shape"] = "infinite_everywhere"; break;
        case GrowthEnvelope::Shape::PowerLaw: out["shape"] = "power_law"; break;
        case GrowthEnvelope::Shape::LogLaw: out["shape"] = "log_law"; break;
        case GrowthEnvelope::Shape::Bounded: out["shape"] = "bounded"; break;
      }
      out["exponent"] = g.exponent.str();
    }
  } else if (predicate == "compact") {
    EmbeddingQuery query;
    query.source = d;
    query.target = Target::space_of(second());
    query.ground = ground_s.empty() ? Ground::BoundedDomain : parse_ground(ground_s);
    query.mode = EmbedMode::Compact;
    CompactnessExponents ce = compactness_exponents(query);
    out["entropy_exponent"] = ce.entropy_exponent.str();
    out["bound_type"] =
        ce.bound_type == CompactnessExponents::Bound::Exact ? "exact" : "two_sided_up_to_eps";
    if (ce.alpha) out["alpha"] = ce.alpha->str();
  } else if (predicate == "equal") {
    out = verdict_json(spaces_equal(d, second()));
  } else if (predicate == "lift") {
    if (shift_s.empty()) throw std::invalid_argument("--shift required for lift");
    out = nlohmann::json::parse(descriptor_to_json(lift(d, Scalar::parse(shift_s))));
  } else if (predicate == "interpolate") {
    InterpolationMethod method;
    if (method_s == "plusminus") {
      method.kind = InterpolationMethod::Kind::PlusMinus;
    } else {
      method.kind = InterpolationMethod::Kind::RealWithQ;
      method.q = Scalar::parse(iq_s.empty() ? "1" : iq_s);
    }
    if (theta_s.empty()) throw std::invalid_argument("--theta required for interpolation");
    InterpolationResult r = interpolate(d, second(), Scalar::parse(theta_s), method);
    out["verdict"] = verdict_json(r.verdict);
    if (r.space) out["space"] = nlohmann::json::parse(descriptor_to_json(*r.space));
  } else if (predicate == "canonicalize") {
    Canonical c = canonicalize(d);
    out["space"] = c.is_holder ? nlohmann::json(c.as_marker().str())
                               : nlohmann::json::parse(descriptor_to_json(c.rep));
    out["citation"] = c.citation;
    out["note"] = c.note;
  } else if (predicate == "convert") {
    out["morrey_u"] = d.rho.sign() < 0 ? convert(d, ParamTarget::MorreyU).str() : "undefined";
    out["tau"] = convert(d, ParamTarget::Tau).str();
    out["hybrid_r"] = convert(d, ParamTarget::HybridR).str();
    out["diff_dimension"] = diff_dimension(d).str();
    out["sigma_rho_p"] = sigma_tp(d.slope(), d.p).str();
  } else {
    throw std::invalid_argument("unknown predicate: " + predicate);
  }

  std::cout << out.dump() << "\n";
  return 0;
}

CoefficientArray model_or_file(const std::string& model, const std::string& file, int n, int jmax,
                               int j0, std::uint64_t seed, double density) {
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw std::invalid_argument("cannot read coefficient file: " + file);
    std::ostringstream buf;
    buf << in.rdbuf();
    return CoefficientArray::from_jsonl(buf.str());
  }
  ModelSpec spec;
  spec.n = n;
  spec.j_max = jmax;
  spec.j0 = j0;
  spec.seed = seed;
  spec.density = density;
  if (model == "delta") spec.kind = ModelSpec::Kind::Delta;
  else if (model == "boundary") spec.kind = ModelSpec::Kind::Boundary;
  else if (model == "single") spec.kind = ModelSpec::Kind::SingleCube;
  else if (model == "random") spec.kind = ModelSpec::Kind::RandomSparse;
  else throw std::invalid_argument("unknown model: " + model + " (delta|boundary|single|random)");
  return generate(spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"morrey smoothness space toolkit"};
  app.require_subcommand(1);

  // --- classify ---
  auto* classify = app.add_subcommand("classify", "theorem-backed verdict for one query");
  DescriptorFlags cflags, cflags2;
  std::string predicate, ground_s, mode_s, r_s, sigma_s, shift_s, theta_s, method_s, iq_s;
  classify->add_option("--predicate", predicate, "what to decide")->required();
  cflags.attach(classify, true);
  cflags2.attach(classify, false, "2");
  bool have_second = false;
  classify->add_flag("--second", have_second, "a second space is supplied via --s2/--p2/...");
  classify->add_option("--ground", ground_s, "rn | domain");
  classify->add_option("--mode", mode_s, "continuous | compact");
  classify->add_option("--r", r_s, "Lebesgue exponent for the lr predicate");
  classify->add_option("--sigma", sigma_s, "Hoelder exponent for the holder predicate");
  classify->add_option("--shift", shift_s, "smoothness shift for lift");
  classify->add_option("--theta", theta_s, "interpolation parameter in (0,1)");
  classify->add_option("--method", method_s, "interpolation method: real | plusminus");
  classify->add_option("--iq", iq_s, "fine index of the real interpolation result");

  // --- norm ---
  auto* norm = app.add_subcommand("norm", "evaluate a sequence norm with growth analysis");
  std::string n_model = "delta", n_file, n_flavor = "sub", n_convention = "jplus";
  std::string n_s, n_p, n_q = "1", n_rho;
  int n_dim = 1, n_jmax = 12, n_j0 = 0;
  std::uint64_t n_seed = 1;
  double n_density = 0.05, n_rate_tol = kDefaultRateTolerance, n_fit_floor = kDefaultFitFloor;
  norm->add_option("--model", n_model, "delta | boundary | single | random");
  norm->add_option("--file", n_file, "coefficient JSON-lines file instead of a model");
  norm->add_option("--n", n_dim, "dimension")->required();
  norm->add_option("--jmax", n_jmax, "top level");
  norm->add_option("--j0", n_j0, "level of the single-cube model");
  norm->add_option("--seed", n_seed, "random model seed");
  norm->add_option("--density", n_density, "random model density");
  norm->add_option("--s", n_s)->required();
  norm->add_option("--p", n_p)->required();
  norm->add_option("--q", n_q);
  norm->add_option("--rho", n_rho)->required();
  norm->add_option("--flavor", n_flavor, "sub | sup | classic");
  norm->add_option("--convention", n_convention, "jplus | zero (sup flavor)");
  norm->add_option("--rate-tolerance", n_rate_tol);
  norm->add_option("--fit-floor", n_fit_floor);

  // --- experiment ---
  auto* experiment = app.add_subcommand("experiment", "membership / strictness experiments");
  std::string e_kind = "membership", e_model = "delta";
  DescriptorFlags eflags;
  int e_jmax = 16;
  double e_band = kDefaultExclusionBand;
  experiment->add_option("--kind", e_kind, "membership | strictness");
  experiment->add_option("--model", e_model, "delta | boundary");
  eflags.attach(experiment, true);
  experiment->add_option("--jmax", e_jmax, "top truncation level");
  experiment->add_option("--band", e_band, "breaking-line exclusion band in s");

  // --- diagram / sweep ---
  auto add_grid_options = [](CLI::App* cmd, DescriptorFlags& flags, std::string& pred,
                             double& pmin, double& pmax, double& smin, double& smax, int& res) {
    cmd->add_option("--predicate", pred, "region predicate")->required();
    flags.attach(cmd, false);
    cmd->add_option("--invp-min", pmin);
    cmd->add_option("--invp-max", pmax);
    cmd->add_option("--s-min", smin);
    cmd->add_option("--s-max", smax);
    cmd->add_option("--resolution", res);
  };
  auto* diagram = app.add_subcommand("diagram", "render a region diagram as SVG");
  DescriptorFlags dflags;
  std::string d_pred, d_out, d_title;
  double d_pmin = 0.05, d_pmax = 3.0, d_smin = -2.0, d_smax = 3.0;
  int d_res = 96;
  add_grid_options(diagram, dflags, d_pred, d_pmin, d_pmax, d_smin, d_smax, d_res);
  diagram->add_option("--out", d_out, "output SVG path")->required();
  diagram->add_option("--title", d_title, "diagram title");

  auto* sweep = app.add_subcommand("sweep", "evaluate a predicate over a (1/p, s) grid");
  DescriptorFlags sflags;
  std::string s_pred, s_format = "csv";
  double s_pmin = 0.05, s_pmax = 3.0, s_smin = -2.0, s_smax = 3.0;
  int s_res = 32;
  add_grid_options(sweep, sflags, s_pred, s_pmin, s_pmax, s_smin, s_smax, s_res);
  sweep->add_option("--format", s_format, "csv | json");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return 2;
  }

  try {
    if (classify->parsed()) {
      have_second = have_second || !cflags2.s.empty();
      return run_classify(cflags, cflags2, predicate, ground_s, mode_s, r_s, sigma_s, shift_s,
                          theta_s, method_s, iq_s, have_second);
    }

    if (norm->parsed()) {
      CoefficientArray arr = model_or_file(n_model, n_file, n_dim, n_jmax, n_j0, n_seed, n_density);
      NormParams np{Scalar::parse(n_s), Scalar::parse(n_p), Scalar::parse(n_q),
                    Scalar::parse(n_rho)};
      LevelSeries series;
      if (n_flavor == "sub") {
        series = sub_flavor_series(arr, np);
      } else if (n_flavor == "sup") {
        SupConvention conv =
            n_convention == "zero" ? SupConvention::FromZero : SupConvention::FromJPlus;
        series = sup_flavor_series(arr, np, conv);
      } else if (n_flavor == "classic") {
        series = classic_series(arr, np);
      } else {
        throw std::invalid_argument("unknown flavor: " + n_flavor);
      }
      GrowthReport report = growth_analyze(series.terms, n_rate_tol, n_fit_floor);
      std::cout << "level,term,cumulative\n";
      char buf[96];
      for (std::size_t j = 0; j < series.terms.size(); ++j) {
        std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g\n", j, series.terms[j],
                      series.cumulative[j]);
        std::cout << buf;
      }
      std::snprintf(buf, sizeof buf, "# value=%.12g rate=%.6g r2=%.4f verdict=%s\n",
                    series.cumulative.back(), report.fitted_rate, report.r_squared,
                    report.verdict_str().c_str());
      std::cout << buf;
      return 0;
    }

    if (experiment->parsed()) {
      SpaceDescriptor d = eflags.build(eflags.n);
      if (e_kind == "strictness") {
        StrictnessReport r = strictness_experiment(d, e_jmax);
        std::cout << "level,sub_term,sub_cumulative,sup_value\n";
        char buf[128];
        for (std::size_t j = 0; j < r.sub_terms.size(); ++j) {
          std::snprintf(buf, sizeof buf, "%zu,%.12g,%.12g,%.12g\n", j, r.sub_terms[j],
                        r.sub_cumulative[j], r.sup_values[j]);
          std::cout << buf;
        }
        nlohmann::json summary;
        summary["s"] = r.s_used.str();
        summary["sub_term_rate"] = r.sub_term_rate;
        summary["sub_diverges"] = r.sub_diverges;
        summary["sup_bounded"] = r.sup_bounded;
        std::cout << summary.dump() << "\n";
        return 0;
      }
      ModelSpec spec;
      spec.kind = e_model == "boundary" ? ModelSpec::Kind::Boundary : ModelSpec::Kind::Delta;
      spec.n = d.n;
      spec.j_max = e_jmax;
      AgreementRecord rec = membership_experiment(spec, d, e_band);
      std::cout << "model,space,rate,expected_rate,numeric,classifier,agreement\n";
      std::string numeric = rec.growth.verdict_str();
      std::string agreement =
          rec.agreement == AgreementRecord::Agreement::Agree      ? "agree"
          : rec.agreement == AgreementRecord::Agreement::Disagree ? "disagree"
                                                                  : "boundary-excluded";
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.6g,%.6g", rec.growth.fitted_rate, rec.expected_rate);
      std::cout << e_model << "," << d.str() << "," << buf << "," << numeric << ","
                << rec.classifier_verdict.status_str() << "," << agreement << "\n";
      nlohmann::json summary;
      summary["total"] = 1;
      summary["agree"] = rec.agreement == AgreementRecord::Agreement::Agree ? 1 : 0;
      summary["disagree"] = rec.agreement == AgreementRecord::Agreement::Disagree ? 1 : 0;
      summary["excluded"] = rec.agreement == AgreementRecord::Agreement::BoundaryExcluded ? 1 : 0;
      std::cout << summary.dump() << "\n";
      return 0;
    }

    if (diagram->parsed() || sweep->parsed()) {
      bool rendering = diagram->parsed();
      DescriptorFlags& flags = rendering ? dflags : sflags;
      std::string pred_name = rendering ? d_pred : s_pred;
      if (flags.s.empty()) flags.s = "0";
      if (flags.p.empty()) flags.p = "1";
      SpaceDescriptor proto = flags.build(flags.n);
      RegionGrid grid = grid_sweep(parse_region_predicate(pred_name), proto,
                                   rendering ? d_pmin : s_pmin, rendering ? d_pmax : s_pmax,
                                   rendering ? d_smin : s_smin, rendering ? d_smax : s_smax,
                                   rendering ? d_res : s_res);
      if (rendering) {
        std::string title = d_title.empty()
                                ? pred_name + " region, rho = " + proto.rho.str() +
                                      ", n = " + std::to_string(proto.n)
                                : d_title;
        std::ofstream out(d_out, std::ios::binary);
        if (!out) throw std::invalid_argument("cannot write " + d_out);
        out << render_svg(grid, title);
        return 0;
      }
      if (s_format == "json") {
        nlohmann::json j;
        j["predicate"] = pred_name;
        j["resolution"] = grid.resolution;
        std::vector<std::string> statuses;
        for (auto st : grid.cells) {
          Verdict v;
          v.status = st;
          statuses.push_back(v.status_str());
        }
        j["cells"] = statuses;
        std::cout << j.dump() << "\n";
      } else {
        std::cout << region_grid_csv(grid);
      }
      return 0;
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
