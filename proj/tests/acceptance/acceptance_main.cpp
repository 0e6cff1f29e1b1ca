// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Criteria are pinned here in full, including every tolerance; the region
// oracle is an independent transcription of the classification theorems.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <vector>

#include "mskit/diagram.hpp"
#include "mskit/models.hpp"
#include "region_oracle.hpp"

using namespace mskit;
using Status = Verdict::Status;
using Clock = std::chrono::steady_clock;

namespace {

int g_failures = 0;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(int criterion, bool pass, const std::string& detail) {
  std::printf("criterion %d: %s (%s)\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  if (!pass) ++g_failures;
}

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

std::vector<Scalar> rho_values(int n) {
  std::vector<Scalar> out;
  for (Scalar r : {Scalar(-n) + Scalar::ratio(1, 4), Scalar::ratio(-3, 2), Scalar(-1),
                   Scalar::ratio(-1, 2), Scalar::ratio(-1, 4)}) {
    if (r > Scalar(-n) && r.sign() < 0) {
      bool dup = false;
      for (const auto& seen : out) dup = dup || seen == r;
      if (!dup) out.push_back(r);
    }
  }
  return out;
}

const std::vector<Scalar>& p_values() {
  static std::vector<Scalar> ps{Scalar::ratio(1, 4), Scalar::ratio(1, 2), Scalar(1),
                                Scalar::ratio(3, 2), Scalar(2), Scalar(4)};
  return ps;
}

const std::vector<Scalar>& q_values() {
  static std::vector<Scalar> qs{Scalar::ratio(1, 2), Scalar(1), Scalar(2), Scalar::infinity()};
  return qs;
}

std::vector<SpaceDescriptor> descriptor_pool() {
  std::vector<SpaceDescriptor> pool;
  for (int n : {1, 2, 3}) {
    for (const Scalar& p : p_values()) {
      for (const Scalar& q : q_values()) {
        for (const Scalar& rho : rho_values(n)) {
          for (Family fam : {Family::B, Family::F})
            for (Flavor fl : {Flavor::Sub, Flavor::Sup})
              pool.push_back(desc(fam, fl, Scalar(0), p, q, rho, n));
        }
        for (Family fam : {Family::B, Family::F})
          pool.push_back(desc(fam, Flavor::Classical, Scalar(0), p, q, Scalar(-n), n));
        if (!q.is_inf())
          pool.push_back(desc(Family::B, Flavor::Sup, Scalar(0), p, q, Scalar(0), n));
      }
    }
  }
  return pool;
}

// ---------------------------------------------------------------------------
// Criterion 1: classifier versus the independently transcribed region
// oracle, exact rational grid, 100% agreement, < 10 s.
// ---------------------------------------------------------------------------
struct PredicateCase {
  const char* name;
  std::function<Status(const SpaceDescriptor&)> classifier;
  std::function<Status(const SpaceDescriptor&)> transcription;
  std::function<std::vector<Scalar>(const SpaceDescriptor&)> lines;
};

void criterion_1() {
  auto t0 = Clock::now();
  Scalar one(1);

  auto line_linfty = [](const SpaceDescriptor& d) {
    return std::vector<Scalar>{d.slope() / d.p};
  };
  auto line_l1loc = [](const SpaceDescriptor& d) {
    return std::vector<Scalar>{sigma_tp(d.slope(), d.p)};
  };
  auto line_delta = [](const SpaceDescriptor& d) {
    return std::vector<Scalar>{d.slope() / d.p - Scalar(d.n)};
  };
  auto line_chiq = [one](const SpaceDescriptor& d) {
    return std::vector<Scalar>{Scalar::min(d.slope(), one) / d.p};
  };
  auto line_func = [one](const SpaceDescriptor& d) {
    Scalar line = Scalar::min(d.slope(), one) / d.p - one +
                  sigma_tp(Scalar::max(d.slope(), one) - one, d.p);
    return std::vector<Scalar>{line};
  };
  auto line_trunc = [one](const SpaceDescriptor& d) {
    return std::vector<Scalar>{sigma_tp(d.slope(), d.p), one + Scalar::min(d.slope(), one) / d.p,
                               Scalar(0)};
  };
  auto line_haar = [one](const SpaceDescriptor& d) {
    Scalar ip = d.p.reciprocal();
    Scalar rho = d.slope();
    std::vector<Scalar> out{Scalar::max(Scalar(d.n) * (ip - one), ip - one),
                            Scalar::min(Scalar::min(ip, rho * ip), one)};
    if (rho <= one) {
      out.push_back(rho * ip - one);
      out.push_back(Scalar::min(one, rho * ip));
    } else {
      out.push_back(Scalar::max(ip - one, rho * (ip - one)));
      out.push_back(Scalar::min(one, ip));
    }
    return out;
  };

  std::vector<PredicateCase> cases{
      {"linfty", [](const SpaceDescriptor& d) { return embeds({d, Target::linfty()}).status; },
       [](const SpaceDescriptor& d) { return oracle::linfty(d); }, line_linfty},
      {"l1loc", [](const SpaceDescriptor& d) { return embeds({d, Target::l1loc()}).status; },
       [](const SpaceDescriptor& d) { return oracle::l1loc(d); }, line_l1loc},
      {"delta", [](const SpaceDescriptor& d) { return member(Element::Delta, d).status; },
       [](const SpaceDescriptor& d) { return oracle::member_delta(d); }, line_delta},
      {"chiq", [](const SpaceDescriptor& d) { return member(Element::ChiQ, d).status; },
       [](const SpaceDescriptor& d) { return oracle::member_chiq(d); }, line_chiq},
      {"functional",
       [](const SpaceDescriptor& d) {
         if (!d.is_clan()) return Status::Open;
         return functional_chiQ(d).status;
       },
       [](const SpaceDescriptor& d) {
         if (!d.is_clan()) return Status::Open;
         return oracle::functional_chiq(d);
       },
       line_func},
      {"algebra",
       [](const SpaceDescriptor& d) { return property(d, Property::MultiplicationAlgebra).status; },
       [](const SpaceDescriptor& d) { return oracle::algebra(d); }, line_linfty},
      {"truncation",
       [](const SpaceDescriptor& d) { return property(d, Property::Truncation).status; },
       [](const SpaceDescriptor& d) { return oracle::truncation(d); }, line_trunc},
      {"haar", [](const SpaceDescriptor& d) { return property(d, Property::HaarBasis).status; },
       [](const SpaceDescriptor& d) { return oracle::haar(d); }, line_haar},
      {"bmo", [](const SpaceDescriptor& d) { return embeds({d, Target::bmo()}).status; },
       [](const SpaceDescriptor& d) { return oracle::bmo(d); }, line_linfty},
      {"lr", [](const SpaceDescriptor& d) { return embeds({d, Target::lr(Scalar(2))}).status; },
       [](const SpaceDescriptor& d) { return oracle::lr_finite(d); },
       [](const SpaceDescriptor&) { return std::vector<Scalar>{}; }},
  };

  const std::vector<Scalar> fixed_s{Scalar(-3),
                                    Scalar(-2),
                                    Scalar::ratio(-3, 2),
                                    Scalar(-1),
                                    Scalar::ratio(-1, 2),
                                    Scalar::ratio(-1, 4),
                                    Scalar(0),
                                    Scalar::ratio(1, 4),
                                    Scalar::ratio(1, 2),
                                    Scalar(1),
                                    Scalar::ratio(3, 2),
                                    Scalar(2),
                                    Scalar(3)};
  const Scalar eps = Scalar::ratio(1, 16);

  long tuples = 0, mismatches = 0;
  std::string first_bad;
  auto pool = descriptor_pool();
  for (const auto& base : pool) {
    for (const auto& pc : cases) {
      std::vector<Scalar> svals = fixed_s;
      for (const Scalar& line : pc.lines(base)) {
        svals.push_back(line);
        svals.push_back(line - eps);
        svals.push_back(line + eps);
      }
      for (const Scalar& s : svals) {
        SpaceDescriptor d = base;
        d.s = s;
        Status got = pc.classifier(d);
        Status want = pc.transcription(d);
        ++tuples;
        if (got != want) {
          ++mismatches;
          if (first_bad.empty()) {
            Verdict g;
            g.status = got;
            Verdict w;
            w.status = want;
            first_bad = std::string(pc.name) + " " + d.str() + ": classifier=" + g.status_str() +
                        " oracle=" + w.status_str();
          }
        }
      }
    }
  }

  // Growth envelopes and traces on the same pool.
  for (const auto& base : pool) {
    for (const Scalar& s : fixed_s) {
      SpaceDescriptor d = base;
      d.s = s;
      for (Ground ground : {Ground::RnWhole, Ground::BoundedDomain}) {
        oracle::GrowthAnswer want = oracle::growth(d, ground);
        ++tuples;
        try {
          GrowthEnvelope got = growth_envelope(d, ground);
          bool same = got.verdict.status == want.status && got.shape == want.shape &&
                      (!got.shape || Scalar::compare(got.exponent, want.exponent) == Ord::Equal);
          if (!same) {
            ++mismatches;
            if (first_bad.empty()) first_bad = "growth " + d.str();
          }
        } catch (const std::invalid_argument&) {
          // Rejected queries must be exactly those outside L1loc or the slope range.
          bool rejected_ok = oracle::l1loc(d) == Status::Fails ||
                             (!d.is_clan() && !d.is_classical());
          if (!rejected_ok) {
            ++mismatches;
            if (first_bad.empty()) first_bad = "growth reject " + d.str();
          }
        }
      }
      if (d.n >= 2 && d.is_clan()) {
        ++tuples;
        oracle::TraceAnswer want = oracle::trace(d);
        TraceResult got = trace(d);
        std::string got_target = got.target ? got.target->str() : "-";
        if (got.verdict.status != want.status || got_target != want.target ||
            got.extension_exists != want.extension) {
          ++mismatches;
          if (first_bad.empty())
            first_bad = "trace " + d.str() + " -> " + got_target + " vs " + want.target;
        }
      }
    }
  }

  // Same-family embedding pairs, continuous and compact, both grounds.
  long pair_count = 0;
  std::uint64_t ctr = 0;
  auto pick = [&pool, &ctr](std::uint64_t salt) -> const SpaceDescriptor& {
    return pool[splitmix64(salt * 1315423911ULL + ctr++) % pool.size()];
  };
  while (pair_count < 4000) {
    SpaceDescriptor a = pick(1);
    SpaceDescriptor b = pick(2);
    if (a.n != b.n || a.family != b.family || a.flavor != b.flavor) continue;
    if (a.is_zero_clan() || b.is_zero_clan()) continue;
    a.s = fixed_s[splitmix64(ctr) % fixed_s.size()];
    b.s = fixed_s[splitmix64(ctr + 1) % fixed_s.size()];
    // Exercise the limiting lines as well.
    if (ctr % 3 == 0) b.s = a.s - (a.slope() / a.p - b.slope() / b.p);
    if (ctr % 7 == 0) b.s = a.s;
    ++pair_count;
    ++tuples;
    Status want_rn = oracle::rn_embedding(a, b);
    Status got_rn = embeds({a, Target::space_of(b)}).status;
    if (got_rn != want_rn) {
      ++mismatches;
      if (first_bad.empty())
        first_bad = "rn-embed " + a.str() + " -> " + b.str();
    }
    ++tuples;
    for (EmbedMode mode : {EmbedMode::Continuous, EmbedMode::Compact}) {
      Status want_dom = oracle::domain_embedding(a, b, mode);
      Status got_dom = embeds({a, Target::space_of(b), Ground::BoundedDomain, mode}).status;
      if (got_dom != want_dom) {
        ++mismatches;
        if (first_bad.empty())
          first_bad = "domain-embed " + a.str() + " -> " + b.str();
      }
    }
    ++tuples;
    Status compact_rn = embeds({a, Target::space_of(b), Ground::RnWhole, EmbedMode::Compact}).status;
    if (compact_rn != Status::Fails) {
      ++mismatches;
      if (first_bad.empty()) first_bad = "compact on rn " + a.str();
    }
  }

  double dt = seconds_since(t0);
  char detail[256];
  std::snprintf(detail, sizeof detail,
                "%ld tuples, %ld mismatches, %.2fs%s%s", tuples, mismatches, dt,
                first_bad.empty() ? "" : "; first: ", first_bad.c_str());
  report(1, mismatches == 0 && tuples >= 10000 && dt < 10.0, detail);
}

// ---------------------------------------------------------------------------
// Criterion 2: delta-model numerics against the classifier, j_max = 16,
// 200 band-excluded tuples, >= 95% agreement, sub-flavor rate within 0.02
// of s + n + rho/p, < 30 s.
// ---------------------------------------------------------------------------
void criterion_2() {
  auto t0 = Clock::now();
  std::vector<Scalar> offsets{Scalar::ratio(-1, 1), Scalar::ratio(-1, 2), Scalar::ratio(-1, 4),
                              Scalar::ratio(-1, 8), Scalar::ratio(1, 8),  Scalar::ratio(1, 4),
                              Scalar::ratio(1, 2),  Scalar(1)};
  int total = 0, agree = 0, excluded = 0, rate_bad = 0;
  for (int n : {1, 2}) {
    ModelSpec spec;
    spec.kind = ModelSpec::Kind::Delta;
    spec.n = n;
    spec.j_max = 16;
    CoefficientArray model = generate(spec);
    for (const Scalar& rho : rho_values(n)) {
      for (const Scalar& p : {Scalar::ratio(1, 2), Scalar(1), Scalar(2), Scalar(3), Scalar(4)}) {
        for (const Scalar& q : {Scalar(1), Scalar(2), Scalar::infinity()}) {
          for (Flavor fl : {Flavor::Sub, Flavor::Sup}) {
            if (total >= 200) break;
            const Scalar& off = offsets[(total * 7 + n) % offsets.size()];
            Scalar line = rho.abs() / p - Scalar(n);
            SpaceDescriptor d = desc(Family::B, fl, line + off, p, q, rho, n);
            AgreementRecord rec = membership_experiment(model, spec, d);
            ++total;
            if (rec.agreement == AgreementRecord::Agreement::Agree) ++agree;
            if (rec.agreement == AgreementRecord::Agreement::BoundaryExcluded) ++excluded;
            // The closed-form rate belongs to the sub-flavor series; q = inf
            // identifies the flavors and is evaluated on the sup side.
            if (fl == Flavor::Sub && !q.is_inf() &&
                std::fabs(rec.growth.fitted_rate - rec.expected_rate) > 0.02)
              ++rate_bad;
          }
        }
      }
    }
  }
  double dt = seconds_since(t0);
  double ratio = total > excluded ? double(agree) / double(total - excluded) : 0.0;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "%d tuples, %.1f%% agreement (%d excluded), %d sub-rate misses, %.2fs", total,
                100.0 * ratio, excluded, rate_bad, dt);
  report(2, total == 200 && ratio >= 0.95 && rate_bad == 0 && dt < 30.0, detail);
}

// ---------------------------------------------------------------------------
// Criterion 3: boundary-model numerics against Thm 5.24 thresholds,
// n in {1,2}, j_max = 14, 200 band-excluded tuples, >= 95%, < 60 s.
// ---------------------------------------------------------------------------
void criterion_3() {
  auto t0 = Clock::now();
  std::vector<Scalar> offsets{Scalar::ratio(-3, 4), Scalar::ratio(-1, 2), Scalar::ratio(-1, 4),
                              Scalar::ratio(-1, 8), Scalar::ratio(1, 8),  Scalar::ratio(1, 4),
                              Scalar::ratio(1, 2),  Scalar::ratio(3, 4)};
  int total = 0, agree = 0, excluded = 0;
  for (int n : {1, 2}) {
    ModelSpec spec;
    spec.kind = ModelSpec::Kind::Boundary;
    spec.n = n;
    spec.j_max = 14;
    CoefficientArray model = generate(spec);
    for (const Scalar& rho : rho_values(n)) {
      for (const Scalar& p : {Scalar::ratio(1, 2), Scalar(1), Scalar(2), Scalar(3), Scalar(4)}) {
        for (const Scalar& q : {Scalar(1), Scalar(2), Scalar::infinity()}) {
          for (Flavor fl : {Flavor::Sub, Flavor::Sup}) {
            if (total >= 200) break;
            const Scalar& off = offsets[(total * 5 + n) % offsets.size()];
            Scalar line = Scalar::min(rho.abs(), Scalar(1)) / p;
            SpaceDescriptor d = desc(Family::B, fl, line + off, p, q, rho, n);
            AgreementRecord rec = membership_experiment(model, spec, d);
            ++total;
            if (rec.agreement == AgreementRecord::Agreement::Agree) ++agree;
            if (rec.agreement == AgreementRecord::Agreement::BoundaryExcluded) ++excluded;
          }
        }
      }
    }
  }
  double dt = seconds_since(t0);
  double ratio = total > excluded ? double(agree) / double(total - excluded) : 0.0;
  char detail[128];
  std::snprintf(detail, sizeof detail, "%d tuples, %.1f%% agreement (%d excluded), %.2fs", total,
                100.0 * ratio, excluded, dt);
  report(3, total == 200 && ratio >= 0.95 && dt < 60.0, detail);
}

// ---------------------------------------------------------------------------
// Criterion 4: exact sequence-norm properties on 500 random arrays.
// ---------------------------------------------------------------------------
void criterion_4() {
  auto t0 = Clock::now();
  int flavor_bad = 0, qinf_bad = 0, lift_bad = 0, qmono_bad = 0, brute_bad = 0;
  int arrays = 0, brutes = 0;
  for (int i = 0; i < 500; ++i) {
    ModelSpec spec;
    spec.kind = ModelSpec::Kind::RandomSparse;
    spec.n = 1 + i % 2;
    spec.j_max = 4 + i % 5;  // 4..8
    spec.seed = 90000 + i;
    spec.density = spec.n == 1 ? 0.45 : (spec.j_max <= 5 ? 0.2 : 0.05);
    CoefficientArray a = generate(spec);
    if (a.empty()) continue;
    ++arrays;
    double rho = -0.3 - 0.4 * (i % 3) * spec.n / 2.0;
    if (rho <= -spec.n) rho = -spec.n + 0.25;
    double p = (i % 4 == 0) ? 0.5 : 1.0 + (i % 3);
    double q = (i % 5 == 0) ? 0.75 : 1.0 + (i % 4);
    NormParams np{Scalar(0.4 - 0.2 * (i % 7)), Scalar(p), Scalar(q), Scalar(rho)};

    if (!(norm_sup_flavor(a, np) <= norm_sub_flavor(a, np))) ++flavor_bad;

    NormParams npi = np;
    npi.q = Scalar::infinity();
    if (norm_sup_flavor(a, npi, SupConvention::FromZero) != norm_sub_flavor(a, npi)) ++qinf_bad;

    Scalar sigma = Scalar::ratio(5, 4);
    NormParams shifted = np;
    shifted.s = np.s + sigma;
    double base = norm_sub_flavor(a, np);
    double lifted = norm_sub_flavor(a.lifted(sigma), shifted);
    if (std::fabs(lifted - base) > 1e-12 * std::max(1.0, std::fabs(base))) ++lift_bad;

    NormParams bigger = np;
    bigger.q = np.q * Scalar(2);
    if (!(norm_sub_flavor(a, bigger) <= norm_sub_flavor(a, np))) ++qmono_bad;
    if (!(norm_sup_flavor(a, bigger) <= norm_sup_flavor(a, np))) ++qmono_bad;

    if (spec.j_max <= 4) {
      ++brutes;
      if (norm_sup_flavor_bruteforce(a, np) != norm_sup_flavor(a, np)) ++brute_bad;
      if (norm_sub_flavor_bruteforce(a, np) != norm_sub_flavor(a, np)) ++brute_bad;
      if (norm_sup_flavor_bruteforce(a, npi, SupConvention::FromZero) !=
          norm_sup_flavor(a, npi, SupConvention::FromZero))
        ++brute_bad;
    }
  }
  double dt = seconds_since(t0);
  char detail[256];
  std::snprintf(detail, sizeof detail,
                "%d arrays (%d brute-forced): flavor %d, q-inf %d, lift %d, q-mono %d, brute %d "
                "violations, %.2fs",
                arrays, brutes, flavor_bad, qinf_bad, lift_bad, qmono_bad, brute_bad, dt);
  report(4,
         arrays >= 450 && brutes >= 80 && flavor_bad == 0 && qinf_bad == 0 && lift_bad == 0 &&
             qmono_bad == 0 && brute_bad == 0,
         detail);
}

// ---------------------------------------------------------------------------
// Criterion 5: strictness witness at s = |rho|/p - n, q = 1.
// ---------------------------------------------------------------------------
void criterion_5() {
  auto t0 = Clock::now();
  bool ok = true;
  std::string why;

  // The spec's parameters: terms flat, cumulative linear, sup bounded.
  {
    auto d = desc(Family::B, Flavor::Sub, Scalar(0), Scalar(2), Scalar(1), Scalar::ratio(-1, 2), 1);
    StrictnessReport r = strictness_experiment(d, 20);
    for (std::size_t j = 0; j < r.sub_terms.size(); ++j)
      if (std::fabs(r.sub_terms[j] - 1.0) > 1e-9) ok = false;
    for (std::size_t j = 0; j < r.sub_cumulative.size(); ++j)
      if (std::fabs(r.sub_cumulative[j] - double(j + 1)) > 1e-6) ok = false;
    if (std::fabs(r.sub_term_rate) > 0.02) ok = false;
    if (!r.sub_diverges || !r.sup_bounded) ok = false;
    double bound = 1.0 / (1.0 - std::exp2(-0.25));
    if (r.sup_values.back() > bound + 1e-9) ok = false;
    if (!ok) why = "qualitative witness failed";
  }

  // Fast-decay parameters: the sup value is constant beyond level 2.
  if (ok) {
    auto d = desc(Family::B, Flavor::Sub, Scalar(0), Scalar::ratio(1, 8), Scalar(1),
                  Scalar::ratio(-1, 2), 1);
    StrictnessReport r = strictness_experiment(d, 16);
    double v2 = r.sup_values[2];
    for (std::size_t j = 3; j < r.sup_values.size(); ++j)
      if (std::fabs(r.sup_values[j] - v2) > 1e-3 * v2) ok = false;
    for (std::size_t j = 0; j < r.sub_cumulative.size(); ++j)
      if (std::fabs(r.sub_cumulative[j] - double(j + 1)) > 1e-6) ok = false;
    if (!ok) why = "sup value not constant beyond level 2";
  }

  double dt = seconds_since(t0);
  char detail[160];
  std::snprintf(detail, sizeof detail, "%s%.2fs", why.empty() ? "" : (why + "; ").c_str(), dt);
  report(5, ok, detail);
}

// ---------------------------------------------------------------------------
// Criterion 6: entropy and alpha exponents on 50 spot tuples, exact.
// ---------------------------------------------------------------------------
void criterion_6() {
  auto t0 = Clock::now();
  int total = 0, bad = 0;
  std::uint64_t ctr = 0;
  auto pool = descriptor_pool();
  std::vector<Scalar> svals{Scalar(-1), Scalar::ratio(-1, 2), Scalar(0), Scalar::ratio(1, 2),
                            Scalar(1),  Scalar::ratio(3, 2),  Scalar(2), Scalar(3)};
  while (total < 50) {
    SpaceDescriptor a = pool[splitmix64(7000 + ctr) % pool.size()];
    SpaceDescriptor b = pool[splitmix64(9000 + ctr) % pool.size()];
    ++ctr;
    if (a.n != b.n || a.family != b.family || a.flavor != b.flavor) continue;
    if (a.is_zero_clan() || b.is_zero_clan()) continue;
    a.s = svals[splitmix64(ctr) % svals.size()] + Scalar(2);
    b.s = svals[splitmix64(ctr + 13) % svals.size()] - Scalar(2);
    EmbeddingQuery q{a, Target::space_of(b), Ground::BoundedDomain, EmbedMode::Compact};
    if (embeds(q).status != Status::Holds) continue;
    ++total;
    CompactnessExponents got = compactness_exponents(q);
    oracle::ExponentAnswer want = oracle::compact_exponents(a, b);
    bool same = Scalar::compare(got.entropy_exponent, want.entropy) == Ord::Equal;
    same = same &&
           ((got.bound_type == CompactnessExponents::Bound::Exact) == want.exact);
    same = same && (got.alpha.has_value() == want.alpha.has_value());
    if (got.alpha && want.alpha)
      same = same && Scalar::compare(*got.alpha, *want.alpha) == Ord::Equal;
    if (!same) ++bad;
  }
  double dt = seconds_since(t0);
  char detail[96];
  std::snprintf(detail, sizeof detail, "%d tuples, %d mismatches, %.2fs", total, bad, dt);
  report(6, bad == 0, detail);
}

// ---------------------------------------------------------------------------
// Criterion 7: the six canonical diagrams are byte-identical to the
// committed goldens and their legends carry the classifier's formulas.
// ---------------------------------------------------------------------------
struct DiagramSpec {
  const char* file;
  PredicateKind predicate;
  SpaceDescriptor proto;
  const char* title;
};

std::vector<DiagramSpec> diagram_specs() {
  return {
      {"linfty.svg", PredicateKind::EmbedLinfty,
       desc(Family::B, Flavor::Sup, Scalar(0), Scalar(1), Scalar(1), Scalar::ratio(-3, 2), 3),
       "embedding into L_inf, rho = -3/2, n = 3"},
      {"l1loc.svg", PredicateKind::SubsetL1loc,
       desc(Family::B, Flavor::Sub, Scalar(0), Scalar(1), Scalar(1), Scalar::ratio(-3, 2), 3),
       "inclusion in L_1^loc, rho = -3/2, n = 3"},
      {"chiq_low.svg", PredicateKind::MemberChiQ,
       desc(Family::B, Flavor::Sup, Scalar(0), Scalar(1), Scalar(1), Scalar::ratio(-1, 2), 2),
       "chi_Q membership, rho = -1/2, n = 2"},
      {"chiq_high.svg", PredicateKind::MemberChiQ,
       desc(Family::B, Flavor::Sup, Scalar(0), Scalar(1), Scalar(1), Scalar(-2), 3),
       "chi_Q membership, rho = -2, n = 3"},
      {"truncation.svg", PredicateKind::Truncation,
       desc(Family::B, Flavor::Sub, Scalar(0), Scalar(1), Scalar(2), Scalar::ratio(-1, 2), 2),
       "truncation property, rho = -1/2, n = 2"},
      {"haar.svg", PredicateKind::HaarBasis,
       desc(Family::B, Flavor::Sup, Scalar(0), Scalar(1), Scalar(1), Scalar(-2), 3),
       "Haar expansions, rho = -2, n = 3"},
  };
}

std::string render_spec(const DiagramSpec& ds) {
  RegionGrid grid = grid_sweep(ds.predicate, ds.proto, 1.0 / 16, 3.0, -2.0, 3.0, 96);
  return render_svg(grid, ds.title);
}

void criterion_7(const std::string& golden_dir, bool update) {
  auto t0 = Clock::now();
  int bad = 0;
  std::string why;
  for (const auto& ds : diagram_specs()) {
    std::string svg = render_spec(ds);
    std::string path = golden_dir + "/" + ds.file;
    if (update) {
      std::ofstream out(path, std::ios::binary);
      out << svg;
      continue;
    }
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in || buf.str() != svg) {
      ++bad;
      if (why.empty()) why = std::string("byte mismatch: ") + ds.file;
      continue;
    }
    // Legend formulas match the classifier's threshold lines.
    for (const auto& line : threshold_lines(ds.predicate, ds.proto.rho, ds.proto.n)) {
      if (svg.find(line.label) == std::string::npos) {
        ++bad;
        if (why.empty()) why = std::string("legend missing formula in ") + ds.file;
      }
    }
  }
  double dt = seconds_since(t0);
  char detail[160];
  std::snprintf(detail, sizeof detail, "%s%s%.2fs", update ? "goldens regenerated; " : "",
                why.empty() ? "" : (why + "; ").c_str(), dt);
  report(7, bad == 0, detail);
}

// ---------------------------------------------------------------------------
// Criterion 8: slope-rule meta-test, 5000 sampled substitution pairs with
// zero verdict changes.
// ---------------------------------------------------------------------------
void criterion_8() {
  auto t0 = Clock::now();
  long pairs = 0, violations = 0;
  std::string first_bad;
  const std::vector<Scalar> offsets{Scalar(-2),           Scalar(-1), Scalar::ratio(-1, 4),
                                    Scalar::ratio(1, 4),  Scalar(1),  Scalar(2)};

  auto slope_n_verdict = [](PredicateKind kind, const SpaceDescriptor& d) {
    return evaluate_predicate(kind, d).status;
  };

  std::uint64_t ctr = 0;
  while (pairs < 5000) {
    std::uint64_t h = splitmix64(31337 + ctr++);
    int n1 = 1 + int(h % 3);
    int n2 = 1 + int((h >> 8) % 3);
    auto rhos1 = rho_values(n1);
    Scalar rho = rhos1[(h >> 16) % rhos1.size()];
    if (!(rho > Scalar(-n2))) continue;  // must be admissible in both dimensions
    Scalar p = p_values()[(h >> 24) % p_values().size()];
    Scalar q = q_values()[(h >> 32) % q_values().size()];
    Family fam = (h >> 40) % 2 ? Family::B : Family::F;
    Flavor fl = (h >> 41) % 2 ? Flavor::Sub : Flavor::Sup;
    const Scalar& off = offsets[(h >> 48) % offsets.size()];

    // Slope-n family: thresholds carry |rho| in place of n, so verdicts off
    // the fine lines are invariant under a dimension change at fixed rho
    // (for the delta distribution the level-n shift is explicit).
    {
      SpaceDescriptor a = desc(fam, fl, rho.abs() / p + off, p, q, rho, n1);
      SpaceDescriptor b = a;
      b.n = n2;
      for (PredicateKind kind :
           {PredicateKind::EmbedLinfty, PredicateKind::MultiplicationAlgebra}) {
        ++pairs;
        if (slope_n_verdict(kind, a) != slope_n_verdict(kind, b)) {
          ++violations;
          if (first_bad.empty()) first_bad = "slope-n dimension change, " + a.str();
        }
      }
      SpaceDescriptor la = a, lb = b;
      la.s = sigma_tp(rho.abs(), p) + off;
      lb.s = la.s;
      ++pairs;
      if (slope_n_verdict(PredicateKind::SubsetL1loc, la) !=
          slope_n_verdict(PredicateKind::SubsetL1loc, lb)) {
        ++violations;
        if (first_bad.empty()) first_bad = "slope-n l1loc, " + la.str();
      }
      SpaceDescriptor da = a, db = b;
      da.s = rho.abs() / p - Scalar(n1) + off;
      db.s = rho.abs() / p - Scalar(n2) + off;
      ++pairs;
      if (slope_n_verdict(PredicateKind::MemberDelta, da) !=
          slope_n_verdict(PredicateKind::MemberDelta, db)) {
        ++violations;
        if (first_bad.empty()) first_bad = "slope-n delta, " + da.str();
      }
      // Growth envelope: the power-law exponent depends on (s, p, |rho|) only.
      SpaceDescriptor ga = a, gb = b;
      ga.s = sigma_tp(rho.abs(), p) + (rho.abs() / p - sigma_tp(rho.abs(), p)) / Scalar(2);
      gb.s = ga.s;
      ++pairs;
      try {
        GrowthEnvelope ea = growth_envelope(ga, Ground::BoundedDomain);
        GrowthEnvelope eb = growth_envelope(gb, Ground::BoundedDomain);
        bool same = ea.verdict.status == eb.verdict.status && ea.shape == eb.shape &&
                    (!ea.shape || Scalar::compare(ea.exponent, eb.exponent) == Ord::Equal);
        if (!same) {
          ++violations;
          if (first_bad.empty()) first_bad = "slope-n growth, " + ga.str();
        }
      } catch (const std::invalid_argument&) {
      }
    }

    // Slope-1 family: chi_Q and the functional depend on rho only through
    // min(|rho|,1) and max(|rho|,1); the dimension never enters. Pairs with
    // both slopes >= 1 additionally pin the min(|rho|,1) dependence of chi_Q.
    {
      Scalar line = Scalar::min(rho.abs(), Scalar(1)) / p;
      SpaceDescriptor a = desc(fam, fl, line + off, p, q, rho, n1);
      SpaceDescriptor b = a;
      b.n = n2;
      ++pairs;
      if (slope_n_verdict(PredicateKind::MemberChiQ, a) !=
          slope_n_verdict(PredicateKind::MemberChiQ, b)) {
        ++violations;
        if (first_bad.empty()) first_bad = "slope-1 chiq dimension, " + a.str();
      }
      Scalar fline = Scalar::min(rho.abs(), Scalar(1)) / p - Scalar(1) +
                     sigma_tp(Scalar::max(rho.abs(), Scalar(1)) - Scalar(1), p);
      SpaceDescriptor fa = a, fb = b;
      fa.s = fline + off;
      fb.s = fa.s;
      ++pairs;
      if (evaluate_predicate(PredicateKind::FunctionalChiQ, fa).status !=
          evaluate_predicate(PredicateKind::FunctionalChiQ, fb).status) {
        ++violations;
        if (first_bad.empty()) first_bad = "slope-1 functional dimension, " + fa.str();
      }
      if (rho.abs() >= Scalar(1)) {
        // A second slope of magnitude >= 1 in a dimension that admits it.
        Scalar rho2 = Scalar::ratio(-7, 4);
        int n3 = 2;
        if (rho2 > Scalar(-n3) && rho2 <= Scalar(-1) && n1 >= 2) {
          SpaceDescriptor c = desc(fam, fl, line + off, p, q, rho2, n3);
          SpaceDescriptor a2 = a;
          a2.n = n3;
          if (a2.rho > Scalar(-n3)) {
            ++pairs;
            if (slope_n_verdict(PredicateKind::MemberChiQ, a2) !=
                slope_n_verdict(PredicateKind::MemberChiQ, c)) {
              ++violations;
              if (first_bad.empty()) first_bad = "slope-1 chiq min-rule, " + a2.str();
            }
          }
        }
      }
    }
  }
  double dt = seconds_since(t0);
  char detail[224];
  std::snprintf(detail, sizeof detail, "%ld pairs, %ld violations, %.2fs%s%s", pairs, violations,
                dt, first_bad.empty() ? "" : "; first: ", first_bad.c_str());
  report(8, violations == 0, detail);
}

}  // namespace

int main(int argc, char** argv) {
  std::string golden_dir = argc > 1 ? argv[1] : "tests/goldens";
  bool update = argc > 2 && std::string(argv[2]) == "--update-goldens";
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7(golden_dir, update);
  criterion_8();
  if (g_failures) std::printf("%d criterion(s) failed\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
