#pragma once

#include <cstdint>
#include <optional>

#include "mskit/classifier.hpp"
#include "mskit/seqnorm.hpp"

namespace mskit {

// Canonical extremal coefficient models. DeltaModel puts 2^{jn} on the
// origin cube of every level (the coefficient envelope of the delta
// distribution); BoundaryModel puts 1 on every cube inside the unit cube
// that touches its boundary (the envelope of chi_Q).
struct ModelSpec {
  enum class Kind { Delta, Boundary, SingleCube, RandomSparse };

  Kind kind = Kind::Delta;
  int n = 1;
  int j_max = 12;

  // SingleCube
  int j0 = 0;
  std::vector<std::int64_t> m0;

  // RandomSparse
  std::uint64_t seed = 1;
  double density = 0.05;
};

CoefficientArray generate(const ModelSpec& spec);

// Number of level-j cubes of the boundary model (cubes in (0,1)^n touching
// the boundary): 1 at level 0, 2^{jn} - (2^j - 2)^n for j >= 1.
std::int64_t boundary_cell_count(int n, int j);

// SplitMix64 output for a counter; the random model draws its values and
// its sparsity mask from this stream, so arrays are reproducible from the
// seed alone.
std::uint64_t splitmix64(std::uint64_t counter);
double uniform_pm1(std::uint64_t seed, std::uint64_t counter);

struct AgreementRecord {
  ModelSpec model;
  SpaceDescriptor space;
  GrowthReport growth;
  Verdict classifier_verdict;
  enum class Agreement { Agree, Disagree, BoundaryExcluded };
  Agreement agreement = Agreement::BoundaryExcluded;
  double distance_to_line = 0.0;  // |s - breaking line|
  double expected_rate = 0.0;     // closed-form level rate, sub flavor
};

inline constexpr double kDefaultExclusionBand = 0.1;

// Evaluates the model's sequence norm per truncation level, classifies the
// growth, and compares with the symbolic membership verdict. Inconclusive
// growth or an s within the exclusion band of the breaking line is recorded
// as boundary-excluded rather than a failure.
AgreementRecord membership_experiment(const ModelSpec& spec, const SpaceDescriptor& d,
                                      double exclusion_band = kDefaultExclusionBand);

// Same, with the coefficient array generated once by the caller (batch runs
// over many parameter tuples reuse the model).
AgreementRecord membership_experiment(const CoefficientArray& array, const ModelSpec& spec,
                                      const SpaceDescriptor& d,
                                      double exclusion_band = kDefaultExclusionBand);

struct StrictnessReport {
  Scalar s_used = Scalar(0);
  std::vector<double> sub_terms;       // level terms, rate 0 on the line
  std::vector<double> sub_cumulative;  // grows linearly in the truncation
  std::vector<double> sup_values;      // bounded in the truncation
  double sub_term_rate = 0.0;
  bool sub_diverges = false;
  bool sup_bounded = false;
};

// Witness for the strictness of the sub -> sup inclusion at q < infinity:
// the delta model at s = |rho|/p - n has constant sub-flavor level terms
// (divergent sum) while the sup-flavor value stays bounded.
StrictnessReport strictness_experiment(const SpaceDescriptor& d, int j_max = 16);

// Sampled (1/p, s) rectangle with per-point verdict statuses and the
// predicate's breaking lines.
struct RegionGrid {
  PredicateKind predicate = PredicateKind::EmbedLinfty;
  SpaceDescriptor prototype;  // family/flavor/q/rho/n used at every point
  double invp_min = 0.0, invp_max = 3.0;
  double s_min = -2.0, s_max = 3.0;
  int resolution = 64;
  std::vector<Verdict::Status> cells;  // row-major, s fastest
  std::vector<ThresholdLine> overlays;

  Verdict::Status at(int ip, int is) const { return cells[ip * resolution + is]; }
};

RegionGrid grid_sweep(PredicateKind predicate, const SpaceDescriptor& prototype,
                      double invp_min, double invp_max, double s_min, double s_max,
                      int resolution);

std::string region_grid_csv(const RegionGrid& grid);

}  // namespace mskit
