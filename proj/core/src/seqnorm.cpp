#include "mskit/seqnorm.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <functional>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

namespace mskit {

bool extended_precision_enabled() {
  static const bool enabled = [] {
    const char* env = std::getenv("MSKIT_PRECISION");
    if (!env) return true;
    return std::strcmp(env, "double") != 0;
  }();
  return enabled;
}

bool DyadicCube::contains(int j, std::span<const std::int64_t> m) const {
  if (j < level || m.size() != pos.size()) return false;
  for (std::size_t i = 0; i < pos.size(); ++i)
    if (floor_div_pow2(m[i], j - level) != pos[i]) return false;
  return true;
}

CoefficientArray::CoefficientArray(int n, int j_max) : n_(n), j_max_(j_max) {
  if (n < 1) throw std::invalid_argument("dimension must be positive");
  if (j_max < 0) throw std::invalid_argument("j_max must be nonnegative");
}

void CoefficientArray::check_entry(const Entry& e) const {
  if (e.j < 0 || e.j > j_max_) throw std::invalid_argument("level outside [0, j_max]");
  if (static_cast<int>(e.m.size()) != n_) throw std::invalid_argument("position arity mismatch");
  int card = e.j == 0 ? (1 << n_) : (1 << n_) - 1;
  if (e.g < 0 || e.g >= card)
    throw std::invalid_argument("wavelet-type tag outside the per-level range");
}

void CoefficientArray::add(int j, int g, std::vector<std::int64_t> m, double v) {
  Entry e{j, g, std::move(m), v};
  check_entry(e);
  entries_.push_back(std::move(e));
  sorted_ = false;
}

void CoefficientArray::finalize() const {
  if (sorted_) return;
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    if (a.j != b.j) return a.j < b.j;
    if (a.m != b.m) return a.m < b.m;
    return a.g < b.g;
  });
  std::vector<Entry> merged;
  merged.reserve(entries_.size());
  for (auto& e : entries_) {
    if (!merged.empty() && merged.back().j == e.j && merged.back().g == e.g &&
        merged.back().m == e.m)
      merged.back().v += e.v;
    else
      merged.push_back(std::move(e));
  }
  entries_ = std::move(merged);
  sorted_ = true;
}

CoefficientArray CoefficientArray::translated(std::span<const std::int64_t> t) const {
  if (static_cast<int>(t.size()) != n_) throw std::invalid_argument("shift arity mismatch");
  CoefficientArray out(n_, j_max_);
  for (const auto& e : entries_) {
    std::vector<std::int64_t> m = e.m;
    for (int i = 0; i < n_; ++i) m[i] += t[i] << e.j;
    out.add(e.j, e.g, std::move(m), e.v);
  }
  out.finalize();
  return out;
}

CoefficientArray CoefficientArray::scaled(double c) const {
  CoefficientArray out(n_, j_max_);
  for (const auto& e : entries_) out.add(e.j, e.g, e.m, c * e.v);
  out.finalize();
  return out;
}

CoefficientArray CoefficientArray::lifted(const Scalar& sigma) const {
  CoefficientArray out(n_, j_max_);
  double sig = sigma.to_double();
  for (const auto& e : entries_) out.add(e.j, e.g, e.m, e.v * std::exp2(-e.j * sig));
  out.finalize();
  return out;
}

CoefficientArray CoefficientArray::truncated(int level) const {
  CoefficientArray out(n_, std::min(level, j_max_));
  for (const auto& e : entries_)
    if (e.j <= level) out.add(e.j, e.g, e.m, e.v);
  out.finalize();
  return out;
}

std::string CoefficientArray::to_jsonl() const {
  finalize();
  nlohmann::json head;
  head["n"] = n_;
  head["j_max"] = j_max_;
  std::string out = head.dump();
  out.push_back('\n');
  for (const auto& e : entries_) {
    nlohmann::json line;
    line["j"] = e.j;
    line["G"] = e.g;
    line["m"] = e.m;
    line["v"] = e.v;
    out += line.dump();
    out.push_back('\n');
  }
  return out;
}

CoefficientArray CoefficientArray::from_jsonl(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  auto fail = [&lineno](const std::string& why) {
    throw std::invalid_argument("coefficient file line " + std::to_string(lineno) + ": " + why);
  };
  std::optional<CoefficientArray> out;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const std::exception& e) {
      fail(e.what());
    }
    try {
      if (!out) {
        out.emplace(j.at("n").get<int>(), j.at("j_max").get<int>());
        continue;
      }
      out->add(j.at("j").get<int>(), j.at("G").get<int>(),
               j.at("m").get<std::vector<std::int64_t>>(), j.at("v").get<double>());
    } catch (const std::exception& e) {
      fail(e.what());
    }
  }
  if (!out) {
    lineno = 0;
    fail("missing header line");
  }
  out->finalize();
  return *out;
}

namespace {

// 2^x with the integer part split off exactly.
template <typename Acc>
Acc pow2a(const Scalar& x) {
  if (x.is_rational()) {
    std::int64_t k = x.rat().floor();
    Rational frac = x.rat() - Rational(k);
    Acc base = frac.is_zero() ? Acc(1) : Acc(std::exp2((long double)frac.to_double()));
    return std::ldexp(base, static_cast<int>(k));
  }
  return Acc(std::exp2((long double)x.to_double()));
}

struct NormContext {
  double invp, q;  // the level weights use exact Scalars; q < 0 is unused
  bool p_inf, q_inf;
  int n;
  Scalar s_exact, invp_exact, nrho_exact, rho_p_exact;
};

NormContext make_context(int n, const NormParams& np) {
  if (np.p.sign() <= 0 || np.q.sign() <= 0) throw std::invalid_argument("p, q must be positive");
  if (np.rho.is_inf()) throw std::invalid_argument("rho must be finite");
  if (np.rho < Scalar(-n) || np.rho.sign() > 0)
    throw std::invalid_argument("norms require rho in [-n, 0]");
  NormContext c;
  c.n = n;
  c.p_inf = np.p.is_inf();
  c.q_inf = np.q.is_inf();
  Scalar invp = c.p_inf ? Scalar(0) : np.p.reciprocal();
  c.invp = invp.to_double();
  c.q = c.q_inf ? -1.0 : np.q.to_double();
  c.s_exact = np.s;
  c.invp_exact = invp;
  c.nrho_exact = (Scalar(n) + np.rho) * invp;
  c.rho_p_exact = np.rho * invp;
  return c;
}

// Canonical-order aggregation helpers. The r-sum (Sum x_i^r)^{1/r} is
// evaluated with the maximum factored out, so a single nonzero term comes
// back bit-exactly and q-nesting comparisons stay monotone.
template <typename Acc>
struct PowAgg {
  std::vector<Acc> items;
  void add(Acc v) {
    if (v != Acc(0)) items.push_back(v);
  }
  Acc value(double r, bool r_inf) const {
    if (items.empty()) return 0;
    Acc m = 0;
    for (Acc v : items) m = std::max(m, v);
    if (r_inf || m == Acc(0)) return m;
    if (items.size() == 1) return m;
    Acc sum = 0;
    for (Acc v : items) sum += std::pow(v / m, (Acc)r);
    return m * std::pow(sum, Acc(1) / (Acc)r);
  }
};

template <typename Acc>
Acc agg_value(const std::vector<Acc>& items, double r, bool r_inf) {
  PowAgg<Acc> a;
  for (Acc v : items) a.add(v);
  return a.value(r, r_inf);
}

using Pos = std::vector<std::int64_t>;

Pos ancestor(const Pos& m, int shift) {
  Pos out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = floor_div_pow2(m[i], shift);
  return out;
}

// Positions are packed into an unsigned 128-bit word, one offset field per
// dimension, so that lexicographic order on coordinates matches integer
// order on keys. The offset is a power of two, which keeps floor division
// by powers of two exact on the packed fields.
struct Packing {
  int n;
  int width;
  std::int64_t offset;

  explicit Packing(int dims) : n(dims) {
    width = 128 / dims;
    if (width > 62) width = 62;
    offset = std::int64_t(1) << (width - 2);
  }

  unsigned __int128 pack(const Pos& m) const {
    unsigned __int128 key = 0;
    for (int i = 0; i < n; ++i) {
      std::int64_t shifted = m[i] + offset;
      if (shifted < 0 || shifted >= (std::int64_t(1) << (width - 1)))
        throw std::invalid_argument("cube index magnitude beyond the packing range");
      key = (key << width) | static_cast<unsigned __int128>(shifted);
    }
    return key;
  }

  Pos unpack(unsigned __int128 key) const {
    Pos m(n);
    unsigned __int128 mask = ((unsigned __int128)1 << width) - 1;
    for (int i = n - 1; i >= 0; --i) {
      m[i] = static_cast<std::int64_t>(key & mask) - offset;
      key >>= width;
    }
    return m;
  }

  unsigned __int128 ancestor_key(unsigned __int128 key, int shift) const {
    Pos m = unpack(key);
    for (auto& v : m) v = floor_div_pow2(v, shift);
    return pack(m);
  }

  unsigned __int128 first_child_key(unsigned __int128 key) const {
    Pos m = unpack(key);
    for (auto& v : m) v *= 2;
    return pack(m);
  }
};

using PosKey = unsigned __int128;

// Per-level per-position inner data: Sum_G |v|^p (or max_G |v| at p = inf),
// sorted ascending by position. Entry order is canonical, so the sums per
// position accumulate in one fixed order.
template <typename Acc>
using PosSums = std::vector<std::pair<PosKey, Acc>>;

template <typename Acc>
std::vector<PosSums<Acc>> position_sums(const CoefficientArray& a, const NormContext& c,
                                        const Packing& pk) {
  std::vector<PosSums<Acc>> out(a.j_max() + 1);
  for (const auto& e : a.entries()) {
    Acc mag = std::fabs((Acc)e.v);
    Acc powed = c.p_inf ? mag : std::pow(mag, Acc(1) / (Acc)c.invp);
    PosKey key = pk.pack(e.m);
    auto& level = out[e.j];
    if (!level.empty() && level.back().first == key) {
      if (c.p_inf)
        level.back().second = std::max(level.back().second, powed);
      else
        level.back().second += powed;
    } else {
      level.emplace_back(key, powed);
    }
  }
  return out;
}

// Groups a level's position sums by their level-J ancestor. The stable sort
// keeps positions in ascending order inside each group, so group sums run in
// the same order as a filtered scan of the positions.
template <typename Acc>
PosSums<Acc> group_by_ancestor(const PosSums<Acc>& level, int shift, const Packing& pk,
                               bool p_inf) {
  PosSums<Acc> grouped;
  grouped.reserve(level.size());
  for (const auto& [key, val] : level) grouped.emplace_back(pk.ancestor_key(key, shift), val);
  std::stable_sort(grouped.begin(), grouped.end(),
                   [](const auto& a, const auto& b) { return a.first < b.first; });
  std::size_t w = 0;
  for (std::size_t r = 0; r < grouped.size(); ++r) {
    if (w > 0 && grouped[w - 1].first == grouped[r].first) {
      if (p_inf)
        grouped[w - 1].second = std::max(grouped[w - 1].second, grouped[r].second);
      else
        grouped[w - 1].second += grouped[r].second;
    } else {
      grouped[w++] = grouped[r];
    }
  }
  grouped.resize(w);
  return grouped;
}

template <typename Acc>
Acc inner_value(Acc accum, const NormContext& c) {
  // accum is Sum |v|^p (or the max for p = inf); returns its 1/p power.
  if (c.p_inf) return accum;
  return std::pow(accum, (Acc)c.invp);
}

// Coarsest level that needs to be searched: below it the grouping of the
// support into cubes is constant while the cube weight only decays.
int coarse_level(const CoefficientArray& a) {
  double extent = 1.0;
  for (const auto& e : a.entries()) {
    double scale = std::exp2(-double(e.j));
    for (auto mi : e.m) {
      extent = std::max(extent, std::fabs(double(mi) * scale));
      extent = std::max(extent, std::fabs(double(mi + 1) * scale));
    }
  }
  int b = 0;
  while (std::exp2(double(b)) < extent) ++b;
  return -b - 1;
}

struct CellKey {
  int J;
  PosKey M;
  friend bool operator<(const CellKey& a, const CellKey& b) {
    if (a.J != b.J) return a.J < b.J;
    return a.M < b.M;
  }
};

template <typename Acc>
struct CellTerms {
  std::vector<std::pair<int, Acc>> terms;  // (level, term), ascending levels
};

// Containment terms T_{j,(J,M)} = 2^{j(s-n/p)} 2^{(J/p)(n+rho)} X^{1/p},
// grouped per cell, levels ascending. Shared by both flavors so that the
// flavor inequality compares identical per-cell numbers.
template <typename Acc>
std::map<CellKey, CellTerms<Acc>> containment_terms(const CoefficientArray& a,
                                                    const NormContext& c, const Packing& pk,
                                                    int j_low) {
  auto psums = position_sums<Acc>(a, c, pk);
  std::map<CellKey, CellTerms<Acc>> cells;
  for (int j = 0; j <= a.j_max(); ++j) {
    if (psums[j].empty()) continue;
    Acc wj = pow2a<Acc>(Scalar(j) * (c.s_exact - Scalar(c.n) * c.invp_exact));
    for (int J = j_low; J <= j; ++J) {
      auto grouped = group_by_ancestor(psums[j], j - J, pk, c.p_inf);
      Acc gJ = pow2a<Acc>(Scalar(J) * c.nrho_exact);
      for (const auto& [M, x] : grouped) {
        Acc t = wj * gJ * inner_value(x, c);
        cells[CellKey{J, M}].terms.emplace_back(j, t);
      }
    }
  }
  return cells;
}

// Ancestor terms of the FromZero convention: a cube Q_{J,M} with J > j is
// charged 2^{js} 2^{-Jn/p} 2^{(J/p)(n+rho)} = 2^{js + J rho/p} times the
// inner value of its level-j ancestor. These are the L_p(Q_{J,M})
// restrictions of the coarse layers; each is strictly dominated by the
// corresponding containment term at level j.
template <typename Acc>
void add_fromzero_terms(const CoefficientArray& a, const NormContext& c, const Packing& pk,
                        int j_low, std::map<CellKey, CellTerms<Acc>>& cells) {
  auto psums = position_sums<Acc>(a, c, pk);

  // Candidate cells: every containment cell plus, for each ancestor position
  // of an entry, the first-corner child cell one level deeper (pure
  // descendants deeper down only lose weight).
  std::map<CellKey, bool> candidates;
  for (const auto& [key, _] : cells) candidates[key] = true;
  for (int j = 0; j <= a.j_max(); ++j) {
    for (const auto& [key, val] : psums[j]) {
      (void)val;
      for (int J = j_low; J <= j; ++J)
        candidates[CellKey{J + 1, pk.first_child_key(pk.ancestor_key(key, j - J))}] = true;
    }
  }

  for (const auto& [key, _] : candidates) {
    if (key.J <= 0) continue;  // no levels below J
    std::vector<std::pair<int, Acc>> anc_terms;
    for (int j = 0; j < key.J && j <= a.j_max(); ++j) {
      if (psums[j].empty()) continue;
      PosKey up = pk.ancestor_key(key.M, key.J - j);
      auto it = std::lower_bound(psums[j].begin(), psums[j].end(), up,
                                 [](const auto& pr, PosKey k) { return pr.first < k; });
      if (it == psums[j].end() || it->first != up) continue;
      Acc w = pow2a<Acc>(Scalar(j) * c.s_exact + Scalar(key.J) * c.rho_p_exact);
      anc_terms.emplace_back(j, w * inner_value(it->second, c));
    }
    if (anc_terms.empty()) continue;
    auto& cell = cells[key];
    cell.terms.insert(cell.terms.begin(), anc_terms.begin(), anc_terms.end());
    std::stable_sort(cell.terms.begin(), cell.terms.end(),
                     [](const auto& x, const auto& y) { return x.first < y.first; });
  }
}

template <typename Acc>
std::vector<Acc> sup_values_impl(const CoefficientArray& a, const NormContext& c,
                                 SupConvention convention) {
  Packing pk(a.dim());
  int j_low = coarse_level(a);
  auto cells = containment_terms<Acc>(a, c, pk, j_low);
  if (convention == SupConvention::FromZero) add_fromzero_terms<Acc>(a, c, pk, j_low, cells);

  std::vector<Acc> values(a.j_max() + 1, 0);
  // The truncated value is monotone in the truncation level, so per level
  // it suffices to rescan the cells that gained a term there.
  std::vector<std::vector<const CellTerms<Acc>*>> touched(a.j_max() + 1);
  for (const auto& [key, cell] : cells)
    for (const auto& [lvl, t] : cell.terms) touched[lvl].push_back(&cell);

  Acc running = 0;
  for (int L = 0; L <= a.j_max(); ++L) {
    for (const CellTerms<Acc>* cell : touched[L]) {
      PowAgg<Acc> agg;
      for (const auto& [lvl, t] : cell->terms)
        if (lvl <= L) agg.add(t);
      running = std::max(running, agg.value(c.q, c.q_inf));
    }
    values[L] = running;
  }
  return values;
}

template <typename Acc>
std::vector<Acc> sub_terms_impl(const CoefficientArray& a, const NormContext& c) {
  Packing pk(a.dim());
  int j_low = coarse_level(a);
  auto cells = containment_terms<Acc>(a, c, pk, j_low);
  std::vector<Acc> terms(a.j_max() + 1, 0);
  for (const auto& [key, cell] : cells)
    for (const auto& [lvl, t] : cell.terms) terms[lvl] = std::max(terms[lvl], t);
  return terms;
}

template <typename Acc>
std::vector<Acc> classic_terms_impl(const CoefficientArray& a, const NormContext& c) {
  Packing pk(a.dim());
  auto psums = position_sums<Acc>(a, c, pk);
  std::vector<Acc> terms(a.j_max() + 1, 0);
  for (int j = 0; j <= a.j_max(); ++j) {
    if (psums[j].empty()) continue;
    Acc x = 0;
    for (const auto& [key, val] : psums[j]) {
      if (c.p_inf)
        x = std::max(x, val);
      else
        x += val;
    }
    terms[j] = pow2a<Acc>(Scalar(j) * (c.s_exact - Scalar(c.n) * c.invp_exact)) * inner_value(x, c);
  }
  return terms;
}

template <typename Acc>
LevelSeries series_from_terms(const std::vector<Acc>& terms, const NormContext& c) {
  LevelSeries out;
  out.terms.reserve(terms.size());
  out.cumulative.reserve(terms.size());
  for (std::size_t L = 0; L < terms.size(); ++L) {
    out.terms.push_back(double(terms[L]));
    std::vector<Acc> head(terms.begin(), terms.begin() + L + 1);
    out.cumulative.push_back(double(agg_value(head, c.q, c.q_inf)));
  }
  return out;
}

template <typename Acc>
LevelSeries series_from_values(const std::vector<Acc>& values) {
  LevelSeries out;
  Acc prev = 0;
  for (Acc v : values) {
    out.terms.push_back(double(v - prev));
    out.cumulative.push_back(double(v));
    prev = v;
  }
  return out;
}

void check_flavor_rho(const CoefficientArray& a, const NormParams& np, bool sup) {
  if (np.rho.is_inf() || np.rho < Scalar(-a.dim()))
    throw std::invalid_argument("flavored norms require rho >= -n");
  if (np.rho.sign() > 0) throw std::invalid_argument("flavored norms require rho <= 0");
  (void)sup;
}

}  // namespace

double norm_classic(const CoefficientArray& a, const NormParams& np) {
  a.finalize();
  NormContext c = make_context(a.dim(), np);
  if (extended_precision_enabled()) {
    auto t = classic_terms_impl<long double>(a, c);
    return double(agg_value(t, c.q, c.q_inf));
  }
  auto t = classic_terms_impl<double>(a, c);
  return agg_value(t, c.q, c.q_inf);
}

double norm_sup_flavor(const CoefficientArray& a, const NormParams& np, SupConvention convention) {
  a.finalize();
  check_flavor_rho(a, np, true);
  if (a.empty()) return 0.0;
  NormContext c = make_context(a.dim(), np);
  if (extended_precision_enabled())
    return double(sup_values_impl<long double>(a, c, convention).back());
  return sup_values_impl<double>(a, c, convention).back();
}

double norm_sub_flavor(const CoefficientArray& a, const NormParams& np) {
  a.finalize();
  check_flavor_rho(a, np, false);
  if (a.empty()) return 0.0;
  NormContext c = make_context(a.dim(), np);
  if (extended_precision_enabled()) {
    auto t = sub_terms_impl<long double>(a, c);
    return double(agg_value(t, c.q, c.q_inf));
  }
  auto t = sub_terms_impl<double>(a, c);
  return agg_value(t, c.q, c.q_inf);
}

LevelSeries sub_flavor_series(const CoefficientArray& a, const NormParams& np) {
  a.finalize();
  check_flavor_rho(a, np, false);
  NormContext c = make_context(a.dim(), np);
  if (extended_precision_enabled())
    return series_from_terms(sub_terms_impl<long double>(a, c), c);
  return series_from_terms(sub_terms_impl<double>(a, c), c);
}

LevelSeries sup_flavor_series(const CoefficientArray& a, const NormParams& np,
                              SupConvention convention) {
  a.finalize();
  check_flavor_rho(a, np, true);
  NormContext c = make_context(a.dim(), np);
  if (extended_precision_enabled())
    return series_from_values(sup_values_impl<long double>(a, c, convention));
  return series_from_values(sup_values_impl<double>(a, c, convention));
}

LevelSeries classic_series(const CoefficientArray& a, const NormParams& np) {
  a.finalize();
  NormContext c = make_context(a.dim(), np);
  if (extended_precision_enabled())
    return series_from_terms(classic_terms_impl<long double>(a, c), c);
  return series_from_terms(classic_terms_impl<double>(a, c), c);
}

namespace {

// The brute-force paths reuse the per-position sums so that additions run
// in the same canonical order as the sparse traversal; what they check is
// the exhaustive (J, M) enumeration against the ancestor bookkeeping.
template <typename Acc>
Acc brute_cell_value(const CoefficientArray& a, const NormContext& c, const Packing& pk,
                     const std::vector<PosSums<Acc>>& psums, int J, const Pos& M,
                     SupConvention convention) {
  PosKey cell = pk.pack(M);
  PowAgg<Acc> agg;
  int j_from = convention == SupConvention::FromJPlus ? std::max(J, 0) : 0;
  for (int j = j_from; j <= a.j_max(); ++j) {
    if (j >= J) {
      Acc x = 0;
      for (const auto& [key, val] : psums[j]) {
        if (pk.ancestor_key(key, j - J) != cell) continue;
        if (c.p_inf)
          x = std::max(x, val);
        else
          x += val;
      }
      if (x == Acc(0)) continue;
      Acc t = pow2a<Acc>(Scalar(j) * (c.s_exact - Scalar(c.n) * c.invp_exact)) *
              pow2a<Acc>(Scalar(J) * c.nrho_exact) * inner_value(x, c);
      agg.add(t);
    } else {
      // j < J (FromZero): the ancestor cube of Q_{J,M} at level j.
      PosKey up = pk.ancestor_key(cell, J - j);
      auto it = std::lower_bound(psums[j].begin(), psums[j].end(), up,
                                 [](const auto& pr, PosKey k) { return pr.first < k; });
      if (it == psums[j].end() || it->first != up || it->second == Acc(0)) continue;
      Acc t = pow2a<Acc>(Scalar(j) * c.s_exact + Scalar(J) * c.rho_p_exact) *
              inner_value(it->second, c);
      agg.add(t);
    }
  }
  return agg.value(c.q, c.q_inf);
}

inline void enumerate_window(const CoefficientArray& a, int J, std::vector<Pos>& out) {
  // Integer box covering the support at level J with one cube of margin.
  int n = a.dim();
  std::vector<std::int64_t> lo(n, INT64_MAX), hi(n, INT64_MIN);
  for (const auto& e : a.entries()) {
    for (int i = 0; i < n; ++i) {
      std::int64_t cell = e.j >= J ? floor_div_pow2(e.m[i], e.j - J) : (e.m[i] << (J - e.j));
      std::int64_t cell_hi = e.j >= J ? cell : ((e.m[i] + 1) << (J - e.j)) - 1;
      lo[i] = std::min(lo[i], cell - 1);
      hi[i] = std::max(hi[i], cell_hi + 1);
    }
  }
  Pos cur(n);
  std::function<void(int)> rec = [&](int dim) {
    if (dim == n) {
      out.push_back(cur);
      return;
    }
    for (std::int64_t v = lo[dim]; v <= hi[dim]; ++v) {
      cur[dim] = v;
      rec(dim + 1);
    }
  };
  rec(0);
}

template <typename Acc>
Acc brute_sup(const CoefficientArray& a, const NormContext& c, SupConvention convention) {
  Packing pk(a.dim());
  int j_low = coarse_level(a);
  auto psums = position_sums<Acc>(a, c, pk);
  Acc best = 0;
  for (int J = j_low; J <= a.j_max() + 1; ++J) {
    std::vector<Pos> window;
    enumerate_window(a, J, window);
    for (const auto& M : window)
      best = std::max(best, brute_cell_value<Acc>(a, c, pk, psums, J, M, convention));
  }
  return best;
}

template <typename Acc>
Acc brute_sub(const CoefficientArray& a, const NormContext& c) {
  Packing pk(a.dim());
  int j_low = coarse_level(a);
  auto psums = position_sums<Acc>(a, c, pk);
  std::vector<Acc> terms(a.j_max() + 1, 0);
  for (int j = 0; j <= a.j_max(); ++j) {
    for (int J = j_low; J <= j; ++J) {
      std::vector<Pos> window;
      enumerate_window(a, J, window);
      for (const auto& M : window) {
        PosKey cell = pk.pack(M);
        Acc x = 0;
        for (const auto& [key, val] : psums[j]) {
          if (pk.ancestor_key(key, j - J) != cell) continue;
          if (c.p_inf)
            x = std::max(x, val);
          else
            x += val;
        }
        if (x == Acc(0)) continue;
        Acc t = pow2a<Acc>(Scalar(j) * (c.s_exact - Scalar(c.n) * c.invp_exact)) *
                pow2a<Acc>(Scalar(J) * c.nrho_exact) * inner_value(x, c);
        terms[j] = std::max(terms[j], t);
      }
    }
  }
  return agg_value(terms, c.q, c.q_inf);
}

}  // namespace

double norm_sup_flavor_bruteforce(const CoefficientArray& a, const NormParams& np,
                                  SupConvention convention) {
  a.finalize();
  check_flavor_rho(a, np, true);
  if (a.empty()) return 0.0;
  NormContext c = make_context(a.dim(), np);
  if (extended_precision_enabled()) return double(brute_sup<long double>(a, c, convention));
  return brute_sup<double>(a, c, convention);
}

double norm_sub_flavor_bruteforce(const CoefficientArray& a, const NormParams& np) {
  a.finalize();
  check_flavor_rho(a, np, false);
  if (a.empty()) return 0.0;
  NormContext c = make_context(a.dim(), np);
  if (extended_precision_enabled()) return double(brute_sub<long double>(a, c));
  return brute_sub<double>(a, c);
}

std::string GrowthReport::verdict_str() const {
  switch (verdict) {
    case Verdict::Finite: return "finite";
    case Verdict::Divergent: return "divergent";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

GrowthReport growth_analyze(std::span<const double> per_level, double rate_tolerance,
                            double fit_floor) {
  GrowthReport report;
  report.per_level.assign(per_level.begin(), per_level.end());
  int levels = static_cast<int>(per_level.size());
  if (levels < 6) return report;

  // Eventually-zero tails are finite by inspection.
  int last_nonzero = -1;
  for (int i = 0; i < levels; ++i)
    if (per_level[i] != 0.0) last_nonzero = i;
  if (last_nonzero < levels / 2) {
    report.verdict = GrowthReport::Verdict::Finite;
    report.r_squared = 1.0;
    report.fitted_rate = -std::numeric_limits<double>::infinity();
    return report;
  }

  int from = levels - (levels + 1) / 2;  // top half of the levels
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int count = 0;
  for (int i = from; i < levels; ++i) {
    if (per_level[i] <= 0.0) continue;
    double x = i, y = std::log2(per_level[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++count;
  }
  if (count < 2) return report;
  double denom = count * sxx - sx * sx;
  if (denom == 0) return report;
  double slope = (count * sxy - sx * sy) / denom;
  double intercept = (sy - slope * sx) / count;

  double ss_res = 0, ss_tot = 0, mean = sy / count;
  for (int i = from; i < levels; ++i) {
    if (per_level[i] <= 0.0) continue;
    double y = std::log2(per_level[i]);
    double fit = slope * i + intercept;
    ss_res += (y - fit) * (y - fit);
    ss_tot += (y - mean) * (y - mean);
  }
  report.fitted_rate = slope;
  report.r_squared = ss_tot < 1e-18 ? 1.0 : std::max(0.0, 1.0 - ss_res / ss_tot);

  if (slope > rate_tolerance && report.r_squared >= fit_floor)
    report.verdict = GrowthReport::Verdict::Divergent;
  else if (slope < -rate_tolerance && report.r_squared >= fit_floor)
    report.verdict = GrowthReport::Verdict::Finite;
  return report;
}

}  // namespace mskit
