#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "mskit/scalar.hpp"

namespace mskit {

// Dyadic cube 2^{-J} M + 2^{-J} (0,1)^n.
struct DyadicCube {
  int level = 0;
  std::vector<std::int64_t> pos;

  // Q_{j,m} is contained in Q_{J,M} iff j >= J and floor(m / 2^{j-J}) = M
  // componentwise.
  bool contains(int j, std::span<const std::int64_t> m) const;
};

// floor(v / 2^k) for k >= 0 (arithmetic shift semantics for negatives).
inline std::int64_t floor_div_pow2(std::int64_t v, int k) {
  return k == 0 ? v : (v >> k);
}

// Finite sparse coefficient family lambda^{j,G}_m over levels 0..j_max.
// G is an opaque wavelet-type tag with 2^n admissible values at level 0 and
// 2^n - 1 at deeper levels; the norms depend on it only through the inner
// p-sum. Entries are kept sorted so that every evaluation path accumulates
// in one canonical order.
class CoefficientArray {
public:
  struct Entry {
    int j = 0;
    int g = 0;
    std::vector<std::int64_t> m;
    double v = 0.0;
  };

  CoefficientArray(int n, int j_max);

  int dim() const { return n_; }
  int j_max() const { return j_max_; }

  void add(int j, int g, std::vector<std::int64_t> m, double v);
  // Sorts entries and merges duplicates. The norm entry points call it
  // lazily; call it explicitly after the last add() before sharing one
  // array across threads (evaluation itself is pure).
  void finalize() const;

  const std::vector<Entry>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  // Spatial translation by an integer vector t: level-j indices shift by
  // 2^j t, which leaves every norm unchanged.
  CoefficientArray translated(std::span<const std::int64_t> t) const;
  CoefficientArray scaled(double c) const;
  // Entries scaled by 2^{-j sigma}; evaluating at s + sigma then reproduces
  // the value at s.
  CoefficientArray lifted(const Scalar& sigma) const;
  CoefficientArray truncated(int level) const;

  // JSON-lines: header {"n":..,"j_max":..}, then {"j":..,"G":..,"m":[..],"v":..}.
  std::string to_jsonl() const;
  static CoefficientArray from_jsonl(const std::string& text);  // throws with line number

private:
  void check_entry(const Entry& e) const;

  int n_;
  int j_max_;
  mutable bool sorted_ = true;
  mutable std::vector<Entry> entries_;
};

enum class SupConvention { FromJPlus, FromZero };

struct NormParams {
  Scalar s = Scalar(0);
  Scalar p = Scalar(1);
  Scalar q = Scalar(1);
  Scalar rho = Scalar(-1);
};

// || . | b^s_{p,q} ||: no Morrey sup, plain level sums.
double norm_classic(const CoefficientArray& a, const NormParams& np);

// Sup flavor: outer sup over cubes Q_{J,M}, inner q-sum over levels of the
// p-sums over contained cubes. FromJPlus starts the level sum at max(J, 0);
// FromZero starts at 0 and charges levels coarser than J through the
// ancestor cube of Q_{J,M} at the L_p(Q_{J,M})-restriction weight. The two
// give equivalent quasi-norms but different numbers on finite arrays.
double norm_sup_flavor(const CoefficientArray& a, const NormParams& np,
                       SupConvention convention = SupConvention::FromJPlus);

// Sub flavor: outer q-sum over levels, inner sup over cubes.
double norm_sub_flavor(const CoefficientArray& a, const NormParams& np);

// Per-level data for growth analysis: `terms[j]` is the level-j contribution
// (sub flavor: the j-th term of the outer q-sum; sup flavor: the increment
// of the truncated norm), `cumulative[j]` the truncated norm through level j.
struct LevelSeries {
  std::vector<double> terms;
  std::vector<double> cumulative;
};

LevelSeries sub_flavor_series(const CoefficientArray& a, const NormParams& np);
LevelSeries sup_flavor_series(const CoefficientArray& a, const NormParams& np,
                              SupConvention convention = SupConvention::FromJPlus);
LevelSeries classic_series(const CoefficientArray& a, const NormParams& np);

// Reference implementation: exhaustive enumeration of (J, M) over the
// provably sufficient window instead of the sparse cube traversal. Test use.
double norm_sup_flavor_bruteforce(const CoefficientArray& a, const NormParams& np,
                                  SupConvention convention = SupConvention::FromJPlus);
double norm_sub_flavor_bruteforce(const CoefficientArray& a, const NormParams& np);

struct GrowthReport {
  std::vector<double> per_level;
  double fitted_rate = 0.0;  // base-2 geometric rate of the level terms
  double r_squared = 0.0;
  enum class Verdict { Finite, Divergent, Inconclusive };
  Verdict verdict = Verdict::Inconclusive;

  std::string verdict_str() const;
};

inline constexpr double kDefaultRateTolerance = 0.02;
inline constexpr double kDefaultFitFloor = 0.98;

// Least-squares fit of log2(term) against the level over the top half of the
// levels; fewer than 6 levels is Inconclusive by contract.
GrowthReport growth_analyze(std::span<const double> per_level,
                            double rate_tolerance = kDefaultRateTolerance,
                            double fit_floor = kDefaultFitFloor);

// Extended-precision accumulation toggle (long double by default); the
// MSKIT_PRECISION environment variable ("double" / "extended") overrides.
bool extended_precision_enabled();

}  // namespace mskit
