#include "mskit/models.hpp"

#include <cmath>
#include <functional>
#include <sstream>

namespace mskit {

std::uint64_t splitmix64(std::uint64_t counter) {
  std::uint64_t z = counter + 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double uniform_pm1(std::uint64_t seed, std::uint64_t counter) {
  std::uint64_t bits = splitmix64(seed * 0x9e3779b97f4a7c15ULL + counter);
  double u = double(bits >> 11) * 0x1.0p-53;  // [0, 1)
  return 2.0 * u - 1.0;
}

namespace {

double uniform01(std::uint64_t seed, std::uint64_t counter) {
  return 0.5 * (uniform_pm1(seed, counter) + 1.0);
}

void boundary_cells(int n, int j, const std::function<void(const std::vector<std::int64_t>&)>& emit) {
  std::int64_t side = std::int64_t(1) << j;
  std::vector<std::int64_t> m(n);
  // Disjoint enumeration by the first boundary coordinate: coordinates in
  // front of it stay interior, the rest are free.
  std::function<void(int, int, bool)> rec = [&](int dim, int first_boundary, bool placed) {
    if (dim == n) {
      if (placed) emit(m);
      return;
    }
    if (dim < first_boundary) {
      for (std::int64_t v = 1; v + 1 < side; ++v) {
        m[dim] = v;
        rec(dim + 1, first_boundary, placed);
      }
    } else if (dim == first_boundary) {
      for (std::int64_t v : {std::int64_t(0), side - 1}) {
        m[dim] = v;
        rec(dim + 1, first_boundary, true);
        if (side == 1) break;  // 0 and side-1 coincide
      }
    } else {
      for (std::int64_t v = 0; v < side; ++v) {
        m[dim] = v;
        rec(dim + 1, first_boundary, placed);
      }
    }
  };
  for (int fb = 0; fb < n; ++fb) rec(0, fb, false);
}

}  // namespace

std::int64_t boundary_cell_count(int n, int j) {
  if (j == 0) return 1;
  std::int64_t side = std::int64_t(1) << j;
  auto ipow = [](std::int64_t b, int e) {
    std::int64_t r = 1;
    while (e-- > 0) r *= b;
    return r;
  };
  return ipow(side, n) - ipow(std::max<std::int64_t>(side - 2, 0), n);
}

CoefficientArray generate(const ModelSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("model dimension must be positive");
  if (spec.j_max < 0) throw std::invalid_argument("model j_max must be nonnegative");
  CoefficientArray out(spec.n, spec.j_max);

  switch (spec.kind) {
    case ModelSpec::Kind::Delta: {
      std::vector<std::int64_t> origin(spec.n, 0);
      for (int j = 0; j <= spec.j_max; ++j)
        out.add(j, 0, origin, std::exp2(double(j) * spec.n));
      break;
    }
    case ModelSpec::Kind::Boundary: {
      out.add(0, 0, std::vector<std::int64_t>(spec.n, 0), 1.0);
      for (int j = 1; j <= spec.j_max; ++j)
        boundary_cells(spec.n, j, [&](const std::vector<std::int64_t>& m) { out.add(j, 0, m, 1.0); });
      break;
    }
    case ModelSpec::Kind::SingleCube: {
      std::vector<std::int64_t> m = spec.m0;
      if (static_cast<int>(m.size()) != spec.n) m.assign(spec.n, 0);
      out.add(spec.j0, 0, std::move(m), 1.0);
      break;
    }
    case ModelSpec::Kind::RandomSparse: {
      if (!(spec.density > 0.0 && spec.density <= 1.0))
        throw std::invalid_argument("density must lie in (0, 1]");
      std::uint64_t ctr = 0;
      for (int j = 0; j <= spec.j_max; ++j) {
        int cards = j == 0 ? (1 << spec.n) : (1 << spec.n) - 1;
        std::int64_t side = std::int64_t(1) << j;
        std::vector<std::int64_t> m(spec.n, 0);
        std::function<void(int)> rec = [&](int dim) {
          if (dim == spec.n) {
            for (int g = 0; g < cards; ++g) {
              std::uint64_t keep_ctr = ctr++;
              std::uint64_t val_ctr = ctr++;
              if (uniform01(spec.seed, keep_ctr) < spec.density)
                out.add(j, g, m, uniform_pm1(spec.seed, val_ctr));
            }
            return;
          }
          for (std::int64_t v = 0; v < side; ++v) {
            m[dim] = v;
            rec(dim + 1);
          }
        };
        rec(0);
      }
      break;
    }
  }
  out.finalize();
  return out;
}

namespace {

double breaking_line_for(Element element, const SpaceDescriptor& d) {
  double slope = d.slope().to_double();
  double invp = d.p.is_inf() ? 0.0 : 1.0 / d.p.to_double();
  if (element == Element::Delta) return slope * invp - d.n;
  return std::min(slope, 1.0) * invp;
}

}  // namespace

AgreementRecord membership_experiment(const ModelSpec& spec, const SpaceDescriptor& d,
                                      double exclusion_band) {
  return membership_experiment(generate(spec), spec, d, exclusion_band);
}

AgreementRecord membership_experiment(const CoefficientArray& arr, const ModelSpec& spec,
                                      const SpaceDescriptor& d, double exclusion_band) {
  d.require_valid();
  if (spec.kind != ModelSpec::Kind::Delta && spec.kind != ModelSpec::Kind::Boundary)
    throw std::invalid_argument("membership experiments run on the delta or boundary model");
  if (spec.n != d.n) throw std::invalid_argument("model and space dimension differ");
  if (spec.j_max < 6) throw std::invalid_argument("growth analysis needs j_max >= 6");

  Canonical canon = canonicalize(d);
  if (canon.is_holder)
    throw std::invalid_argument("space collapses to a Hoelder-Zygmund marker; skipped");
  SpaceDescriptor e = canon.rep;
  if (e.family == Family::F)
    throw std::invalid_argument("F-family space with q != p has no B-side norm; skipped");
  if (e.is_classical() || !(e.is_clan() || e.is_zero_clan()))
    throw std::invalid_argument("membership experiments target the clan norms");

  Element element = spec.kind == ModelSpec::Kind::Delta ? Element::Delta : Element::ChiQ;

  AgreementRecord rec;
  rec.model = spec;
  rec.space = d;
  rec.classifier_verdict = member(element, d);

  NormParams np{e.s, e.p, e.q, e.rho};
  LevelSeries series = e.flavor == Flavor::Sub ? sub_flavor_series(arr, np)
                                               : sup_flavor_series(arr, np);
  rec.growth = growth_analyze(series.terms);

  double slope = e.slope().to_double();
  double invp = 1.0 / e.p.to_double();
  rec.expected_rate = element == Element::Delta ? e.s.to_double() + e.n + e.rho.to_double() * invp
                                                : e.s.to_double() - std::min(slope, 1.0) * invp;
  rec.distance_to_line = std::fabs(e.s.to_double() - breaking_line_for(element, e));

  bool excluded = rec.distance_to_line < exclusion_band ||
                  rec.growth.verdict == GrowthReport::Verdict::Inconclusive ||
                  rec.classifier_verdict.status == Verdict::Status::Open;
  if (excluded) {
    rec.agreement = AgreementRecord::Agreement::BoundaryExcluded;
  } else {
    bool numeric_member = rec.growth.verdict == GrowthReport::Verdict::Finite;
    bool symbolic_member = rec.classifier_verdict.affirmative();
    rec.agreement = numeric_member == symbolic_member ? AgreementRecord::Agreement::Agree
                                                      : AgreementRecord::Agreement::Disagree;
  }
  return rec;
}

StrictnessReport strictness_experiment(const SpaceDescriptor& d, int j_max) {
  d.require_valid();
  if (!(d.family == Family::B && d.flavor == Flavor::Sub))
    throw std::invalid_argument("the strictness witness lives in the sub-B family");
  if (d.q.is_inf())
    throw std::invalid_argument("the two flavors coincide at q = inf");
  if (!d.is_clan()) throw std::invalid_argument("requires -n < rho < 0");
  if (j_max < 8) throw std::invalid_argument("j_max >= 8 required");

  StrictnessReport report;
  report.s_used = d.rho.abs() / d.p - Scalar(d.n);

  ModelSpec spec;
  spec.kind = ModelSpec::Kind::Delta;
  spec.n = d.n;
  spec.j_max = j_max;
  CoefficientArray arr = generate(spec);

  NormParams np{report.s_used, d.p, d.q, d.rho};
  LevelSeries sub = sub_flavor_series(arr, np);
  LevelSeries sup = sup_flavor_series(arr, np, SupConvention::FromJPlus);
  report.sub_terms = sub.terms;
  report.sub_cumulative = sub.cumulative;
  report.sup_values = sup.cumulative;

  GrowthReport sub_growth = growth_analyze(sub.terms);
  report.sub_term_rate = sub_growth.fitted_rate;
  // Constant level terms make the cumulative norm grow like (L+1)^{1/q}.
  std::size_t half = sub.cumulative.size() / 2;
  double expected_ratio =
      std::pow(double(sub.cumulative.size()) / double(half + 1), 1.0 / d.q.to_double());
  report.sub_diverges =
      expected_ratio > 1.0 &&
      sub.cumulative.back() >= 0.9 * expected_ratio * sub.cumulative[half];
  GrowthReport sup_growth = growth_analyze(sup.terms);
  report.sup_bounded = sup_growth.verdict == GrowthReport::Verdict::Finite;
  return report;
}

RegionGrid grid_sweep(PredicateKind predicate, const SpaceDescriptor& prototype,
                      double invp_min, double invp_max, double s_min, double s_max,
                      int resolution) {
  if (resolution < 8) throw std::invalid_argument("resolution must be at least 8");
  if (!(invp_min > 0.0) || !(invp_max > invp_min) || !(s_max > s_min))
    throw std::invalid_argument("degenerate sweep ranges");

  RegionGrid grid;
  grid.predicate = predicate;
  grid.prototype = prototype;
  grid.invp_min = invp_min;
  grid.invp_max = invp_max;
  grid.s_min = s_min;
  grid.s_max = s_max;
  grid.resolution = resolution;
  grid.cells.resize(std::size_t(resolution) * resolution);
  grid.overlays = threshold_lines(predicate, prototype.rho, prototype.n);

  for (int ip = 0; ip < resolution; ++ip) {
    double invp = invp_min + (invp_max - invp_min) * (ip + 0.5) / resolution;
    for (int is = 0; is < resolution; ++is) {
      double s = s_min + (s_max - s_min) * (is + 0.5) / resolution;
      SpaceDescriptor d = prototype;
      d.p = Scalar(1.0 / invp);
      d.s = Scalar(s);
      Verdict::Status status;
      try {
        status = evaluate_predicate(predicate, d).status;
      } catch (const std::exception&) {
        status = Verdict::Status::Open;
      }
      grid.cells[std::size_t(ip) * resolution + is] = status;
    }
  }
  return grid;
}

std::string region_grid_csv(const RegionGrid& grid) {
  std::ostringstream out;
  out << "invp,s,status\n";
  char buf[64];
  for (int ip = 0; ip < grid.resolution; ++ip) {
    double invp = grid.invp_min + (grid.invp_max - grid.invp_min) * (ip + 0.5) / grid.resolution;
    for (int is = 0; is < grid.resolution; ++is) {
      double s = grid.s_min + (grid.s_max - grid.s_min) * (is + 0.5) / grid.resolution;
      Verdict v;
      v.status = grid.at(ip, is);
      std::snprintf(buf, sizeof buf, "%.6g,%.6g,", invp, s);
      out << buf << v.status_str() << "\n";
    }
  }
  return out.str();
}

}  // namespace mskit
