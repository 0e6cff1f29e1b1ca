#include <doctest.h>

#include <cmath>
#include <set>

#include "mskit/models.hpp"

using namespace mskit;

namespace {

SpaceDescriptor desc(Family fam, Flavor fl, Scalar s, Scalar p, Scalar q, Scalar rho, int n) {
  SpaceDescriptor d;
  d.family = fam;
  d.flavor = fl;
  d.s = s;
  d.p = p;
  d.q = q;
  d.rho = rho;
  d.n = n;
  return d;
}

// Exhaustive oracle: scan the full level lattice and count cubes touching
// the boundary of the unit cube.
std::int64_t boundary_count_oracle(int n, int j) {
  if (j == 0) return 1;
  std::int64_t side = std::int64_t(1) << j;
  std::int64_t count = 0;
  std::vector<std::int64_t> m(n, 0);
  while (true) {
    bool touches = false;
    for (int i = 0; i < n; ++i)
      if (m[i] == 0 || m[i] == side - 1) touches = true;
    if (touches) ++count;
    int dim = 0;
    while (dim < n && ++m[dim] == side) m[dim++] = 0;
    if (dim == n) break;
  }
  return count;
}

}  // namespace

TEST_CASE("delta model entries") {
  ModelSpec spec;
  spec.kind = ModelSpec::Kind::Delta;
  spec.n = 1;
  spec.j_max = 6;
  CoefficientArray a = generate(spec);
  REQUIRE(a.size() == 7);
  for (const auto& e : a.entries()) {
    CHECK(e.m == std::vector<std::int64_t>{0});
    CHECK(e.v == std::exp2(e.j));
  }
  spec.n = 2;
  CoefficientArray b = generate(spec);
  CHECK(b.entries()[3].v == std::exp2(2 * 3));
}

TEST_CASE("boundary model cells and counts") {
  ModelSpec spec;
  spec.kind = ModelSpec::Kind::Boundary;
  spec.n = 1;
  spec.j_max = 6;
  CoefficientArray a = generate(spec);
  // Level j >= 1 carries the two end cubes.
  std::set<std::pair<int, std::int64_t>> seen;
  for (const auto& e : a.entries()) seen.insert({e.j, e.m[0]});
  CHECK(seen.count({2, 0}) == 1);
  CHECK(seen.count({2, 3}) == 1);
  CHECK(seen.count({2, 1}) == 0);

  CHECK(boundary_cell_count(2, 3) == 28);  // 4 * 2^3 - 4
  for (int n = 1; n <= 3; ++n)
    for (int j = 0; j <= 6; ++j)
      CHECK(boundary_cell_count(n, j) == boundary_count_oracle(n, j));

  // The generated per-level entry counts match the closed form.
  spec.n = 2;
  spec.j_max = 6;
  CoefficientArray b = generate(spec);
  std::vector<std::int64_t> per_level(7, 0);
  for (const auto& e : b.entries()) ++per_level[e.j];
  for (int j = 0; j <= 6; ++j) CHECK(per_level[j] == boundary_cell_count(2, j));
}

TEST_CASE("random model is reproducible from the seed") {
  ModelSpec spec;
  spec.kind = ModelSpec::Kind::RandomSparse;
  spec.n = 2;
  spec.j_max = 5;
  spec.seed = 42;
  spec.density = 0.1;
  CoefficientArray a = generate(spec);
  CoefficientArray b = generate(spec);
  REQUIRE(a.size() == b.size());
  CHECK(a.to_jsonl() == b.to_jsonl());
  spec.seed = 43;
  CHECK(generate(spec).to_jsonl() != a.to_jsonl());
  for (const auto& e : a.entries()) {
    CHECK(e.v >= -1.0);
    CHECK(e.v <= 1.0);
  }
}

TEST_CASE("delta model sub-flavor level terms follow the closed form") {
  // Level terms are 2^{j (s + n + rho/p)} for every level.
  ModelSpec spec;
  spec.kind = ModelSpec::Kind::Delta;
  spec.n = 1;
  spec.j_max = 14;
  CoefficientArray a = generate(spec);
  NormParams np{Scalar(-1), Scalar(2), Scalar(1), Scalar::ratio(-1, 2)};
  LevelSeries series = sub_flavor_series(a, np);
  double rate = -1 + 1 + (-0.5) / 2;  // s + n + rho/p = -0.25
  for (int j = 0; j <= 14; ++j)
    CHECK(series.terms[j] == doctest::Approx(std::exp2(rate * j)).epsilon(1e-12));
}

TEST_CASE("delta membership experiment agrees with the classifier") {
  ModelSpec spec;
  spec.kind = ModelSpec::Kind::Delta;
  spec.n = 1;
  spec.j_max = 16;

  // Inside the membership region: finite norm, verdict holds.
  auto inside = desc(Family::B, Flavor::Sub, Scalar(-1), Scalar(2), Scalar(1),
                     Scalar::ratio(-1, 2), 1);
  AgreementRecord rec = membership_experiment(spec, inside);
  CHECK(rec.growth.verdict == GrowthReport::Verdict::Finite);
  CHECK(rec.classifier_verdict.status == Verdict::Status::Holds);
  CHECK(rec.agreement == AgreementRecord::Agreement::Agree);
  CHECK(rec.growth.fitted_rate == doctest::Approx(-0.25).epsilon(1e-6));
  CHECK(rec.expected_rate == doctest::Approx(-0.25));

  // Outside: the truncated norms blow up at the predicted rate.
  auto outside = inside;
  outside.s = Scalar::ratio(-1, 2);
  AgreementRecord rec2 = membership_experiment(spec, outside);
  CHECK(rec2.growth.verdict == GrowthReport::Verdict::Divergent);
  CHECK(rec2.classifier_verdict.status == Verdict::Status::Fails);
  CHECK(rec2.agreement == AgreementRecord::Agreement::Agree);
  CHECK(rec2.growth.fitted_rate == doctest::Approx(0.25).epsilon(1e-6));

  // Near the line: excluded, not failed.
  auto near = inside;
  near.s = Scalar(-0.72);
  AgreementRecord rec3 = membership_experiment(spec, near);
  CHECK(rec3.agreement == AgreementRecord::Agreement::BoundaryExcluded);
}

TEST_CASE("boundary membership experiment, both slope regimes") {
  ModelSpec spec;
  spec.kind = ModelSpec::Kind::Boundary;
  spec.n = 2;
  spec.j_max = 12;

  auto inside = desc(Family::B, Flavor::Sup, Scalar::ratio(4, 5), Scalar(1), Scalar(1),
                     Scalar::ratio(-3, 2), 2);
  AgreementRecord rec = membership_experiment(spec, inside);
  CHECK(rec.agreement == AgreementRecord::Agreement::Agree);
  CHECK(rec.classifier_verdict.status == Verdict::Status::Holds);

  auto outside = inside;
  outside.s = Scalar::ratio(3, 2);
  AgreementRecord rec2 = membership_experiment(spec, outside);
  CHECK(rec2.agreement == AgreementRecord::Agreement::Agree);
  CHECK(rec2.classifier_verdict.status == Verdict::Status::Fails);
  CHECK(rec2.growth.verdict == GrowthReport::Verdict::Divergent);
}

TEST_CASE("membership experiment rejects what it cannot reduce") {
  ModelSpec spec;
  spec.kind = ModelSpec::Kind::Delta;
  spec.n = 1;
  spec.j_max = 8;
  auto f = desc(Family::F, Flavor::Sup, Scalar(0), Scalar(2), Scalar(3), Scalar::ratio(-1, 2), 1);
  CHECK_THROWS_AS(membership_experiment(spec, f), std::invalid_argument);
  // q = p reduces through the coincidence with the B scale.
  f.q = Scalar(2);
  CHECK_NOTHROW(membership_experiment(spec, f));
}

TEST_CASE("strictness witness at the delta breaking line") {
  auto d = desc(Family::B, Flavor::Sub, Scalar(0), Scalar(2), Scalar(1), Scalar::ratio(-1, 2), 1);
  StrictnessReport r = strictness_experiment(d, 16);
  CHECK(r.s_used == Scalar::ratio(-3, 4));
  CHECK(std::fabs(r.sub_term_rate) < 1e-9);
  for (double t : r.sub_terms) CHECK(t == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(r.sub_cumulative.back() == doctest::Approx(17.0).epsilon(1e-9));
  CHECK(r.sub_diverges);
  CHECK(r.sup_bounded);
  CHECK(r.sup_values.back() < 1.0 / (1.0 - std::exp2(-0.25)) + 1e-9);

  auto qinf = d;
  qinf.q = Scalar::infinity();
  CHECK_THROWS_AS(strictness_experiment(qinf, 16), std::invalid_argument);
  auto sup = d;
  sup.flavor = Flavor::Sup;
  CHECK_THROWS_AS(strictness_experiment(sup, 16), std::invalid_argument);

  // The same qualitative split in two dimensions.
  auto d2 = desc(Family::B, Flavor::Sub, Scalar(0), Scalar(1), Scalar(2), Scalar(-1), 2);
  StrictnessReport r2 = strictness_experiment(d2, 12);
  CHECK(r2.s_used == Scalar(-1));
  CHECK(std::fabs(r2.sub_term_rate) < 1e-9);
  CHECK(r2.sub_diverges);
  CHECK(r2.sup_bounded);
}

TEST_CASE("delta model sup-flavor value matches its closed form") {
  // sup_{0 <= J <= L} 2^{(J/p)(n+rho)} (Sum_{J <= j <= L} 2^{jq(s+n-n/p)})^{1/q},
  // evaluated directly, equals the generic norm of the truncated model.
  ModelSpec spec;
  spec.kind = ModelSpec::Kind::Delta;
  spec.n = 2;
  spec.j_max = 12;
  CoefficientArray a = generate(spec);
  for (double s : {-3.5, -2.75, -1.5}) {
    for (double rho : {-0.5, -1.25}) {
      double p = 2, q = 1.5;
      NormParams np{Scalar(s), Scalar(p), Scalar(q), Scalar(rho)};
      LevelSeries series = sup_flavor_series(a, np);
      for (int L : {6, 9, 12}) {
        double best = 0;
        for (int J = 0; J <= L; ++J) {
          double inner = 0;
          for (int j = J; j <= L; ++j) inner += std::pow(std::exp2(j * (s + 2 - 2 / p)), q);
          best = std::max(best, std::exp2(J / p * (2 + rho)) * std::pow(inner, 1 / q));
        }
        CHECK(series.cumulative[L] == doctest::Approx(best).epsilon(1e-12));
      }
    }
  }
}

TEST_CASE("delta model sup-flavor value stabilizes below the membership line") {
  // For s + n + rho/p < 0 the truncated sup-flavor values converge: the
  // increments decay geometrically and the value is bounded uniformly in
  // the truncation level.
  ModelSpec spec;
  spec.kind = ModelSpec::Kind::Delta;
  spec.n = 1;
  spec.j_max = 16;
  CoefficientArray a = generate(spec);
  NormParams np{Scalar(-2), Scalar(2), Scalar(1), Scalar::ratio(-1, 2)};
  LevelSeries series = sup_flavor_series(a, np);
  for (std::size_t j = 1; j < series.cumulative.size(); ++j)
    CHECK(series.cumulative[j] >= series.cumulative[j - 1]);
  GrowthReport rep = growth_analyze(series.terms);
  CHECK(rep.verdict == GrowthReport::Verdict::Finite);

  // Above the line the values blow up at the rate s + n + rho/p.
  NormParams bad{Scalar(0), Scalar(2), Scalar(1), Scalar::ratio(-1, 2)};
  GrowthReport rep2 = growth_analyze(sup_flavor_series(a, bad).terms);
  CHECK(rep2.verdict == GrowthReport::Verdict::Divergent);
  CHECK(rep2.fitted_rate == doctest::Approx(0.75).epsilon(0.05));
}

TEST_CASE("grid sweep shapes the L_inf region") {
  auto proto = desc(Family::B, Flavor::Sup, Scalar(0), Scalar(1), Scalar(1), Scalar::ratio(-3, 2), 3);
  RegionGrid grid = grid_sweep(PredicateKind::EmbedLinfty, proto, 0.1, 2.0, -1.0, 4.0, 16);
  REQUIRE(grid.cells.size() == 16u * 16u);
  REQUIRE(grid.overlays.size() == 1);
  int holds = 0, fails = 0;
  for (int ip = 0; ip < 16; ++ip) {
    for (int is = 0; is < 16; ++is) {
      double invp = 0.1 + (2.0 - 0.1) * (ip + 0.5) / 16;
      double s = -1.0 + 5.0 * (is + 0.5) / 16;
      bool above = s > 1.5 * invp + 1e-9;
      bool below = s < 1.5 * invp - 1e-9;
      if (above) {
        CHECK(grid.at(ip, is) == Verdict::Status::Holds);
        ++holds;
      } else if (below) {
        CHECK(grid.at(ip, is) == Verdict::Status::Fails);
        ++fails;
      }
    }
  }
  CHECK(holds > 20);
  CHECK(fails > 20);
  // The overlay formula evaluates to the threshold itself.
  CHECK(grid.overlays[0].at(Scalar(1)).to_double() == doctest::Approx(1.5));
  CHECK(grid.overlays[0].label == "s = |rho|/p");

  CHECK_THROWS_AS(grid_sweep(PredicateKind::EmbedLinfty, proto, 0.1, 2.0, -1.0, 4.0, 4),
                  std::invalid_argument);
}

TEST_CASE("region grid CSV") {
  auto proto = desc(Family::B, Flavor::Sub, Scalar(0), Scalar(1), Scalar(1), Scalar(-1), 2);
  RegionGrid grid = grid_sweep(PredicateKind::MemberDelta, proto, 0.5, 1.5, -3.0, 0.0, 8);
  std::string csv = region_grid_csv(grid);
  CHECK(csv.rfind("invp,s,status\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 65);  // header + 64 cells
}

TEST_CASE("splitmix stream is stable") {
  // Frozen values pin the generator so that arrays are reproducible across
  // builds and platforms.
  CHECK(splitmix64(0) == 16294208416658607535ULL);
  CHECK(splitmix64(1) == 10451216379200822465ULL);
  double v = uniform_pm1(1, 0);
  CHECK(v >= -1.0);
  CHECK(v <= 1.0);
  CHECK(uniform_pm1(1, 0) == v);
}
