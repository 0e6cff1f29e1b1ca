#include "mskit/classifier.hpp"

#include <cassert>

namespace mskit {

namespace {

constexpr const char* kFuzzyNote =
    "inexact parameter within tolerance of a breaking line; verdict follows the line";

struct LineCmp {
  Ord ord;
  bool fuzzy;
};

LineCmp against(const Scalar& value, const Scalar& line) {
  bool fuzzy = false;
  Ord ord = Scalar::compare(value, line, &fuzzy);
  return {ord, fuzzy};
}

Verdict finish(Verdict v, const LineCmp& c) {
  if (c.fuzzy) v.with_note(kFuzzyNote);
  return v;
}

bool q_le(const Scalar& q, const Scalar& bound) { return Scalar::compare(q, bound) != Ord::Greater; }

// C^sigma = B^sigma_{inf,inf}: the marker as a classical descriptor.
SpaceDescriptor holder_as_classical(const Scalar& sigma, int n) {
  SpaceDescriptor d;
  d.family = Family::B;
  d.flavor = Flavor::Classical;
  d.s = sigma;
  d.p = Scalar::infinity();
  d.q = Scalar::infinity();
  d.rho = Scalar(-n);
  d.n = n;
  return d;
}

// ---------------------------------------------------------------------------
// Embeddings into L_infty / C. Sup spaces and sub F embed iff s > |rho|/p;
// sub B admits the limiting line with q <= 1. Classical spaces carry the
// same shape with slope n and their own fine conditions.
// ---------------------------------------------------------------------------
Verdict embeds_linfty(const SpaceDescriptor& d) {
  Canonical c = canonicalize(d);
  if (c.is_holder) {
    auto cmp = against(c.holder_exponent, Scalar(0));
    if (cmp.ord == Ord::Greater) return finish(Verdict::holds("Eq. (2.33)"), cmp);
    return finish(Verdict::fails("Eq. (2.33)"), cmp);
  }
  const SpaceDescriptor& e = c.rep;

  if (e.is_zero_clan()) {
    auto cmp = against(e.s, Scalar(0));
    if (cmp.ord == Ord::Greater) return finish(Verdict::holds("Remark 5.4"), cmp);
    return finish(Verdict::fails("Remark 5.4"), cmp);
  }

  Scalar line = e.slope() / e.p;
  auto cmp = against(e.s, line);

  if (e.is_classical()) {
    if (cmp.ord == Ord::Greater) return finish(Verdict::holds("Prop. 5.1"), cmp);
    if (cmp.ord == Ord::Less) return finish(Verdict::fails("Prop. 5.1"), cmp);
    if (e.family == Family::B) {
      if (q_le(e.q, Scalar(1)))
        return finish(Verdict::holds_under({"q <= 1"}, "Prop. 5.1, Eq. (5.3)"), cmp);
      return finish(Verdict::fails("Prop. 5.1, Eq. (5.3)"), cmp);
    }
    if (!e.p.is_inf() && q_le(e.p, Scalar(1)))
      return finish(Verdict::holds_under({"p <= 1"}, "Prop. 5.1, Eq. (5.5)"), cmp);
    return finish(Verdict::fails("Prop. 5.1, Eq. (5.5)"), cmp);
  }

  // Interior clan.
  if (cmp.ord == Ord::Greater) return finish(Verdict::holds("Thm. 5.3, Eq. (5.7)"), cmp);
  if (cmp.ord == Ord::Less) return finish(Verdict::fails("Thm. 5.3"), cmp);
  if (e.family == Family::B && e.flavor == Flavor::Sub) {
    if (q_le(e.q, Scalar(1)))
      return finish(Verdict::holds_under({"q <= 1"}, "Thm. 5.3, Eq. (5.8)"), cmp);
    return finish(Verdict::fails("Thm. 5.3, Eq. (5.8)"), cmp);
  }
  return finish(Verdict::fails(e.family == Family::F ? "Thm. 5.3, Eq. (5.8a)" : "Thm. 5.3, Eq. (5.7)"),
                cmp);
}

// ---------------------------------------------------------------------------
// Inclusion in L_1^loc. Off the line s = sigma_p^{|rho|} the answer is the
// slope-n transfer of the classical picture; on the line the sub B / F cases
// are settled, the sup B case is open.
// ---------------------------------------------------------------------------
Verdict subset_l1loc(const SpaceDescriptor& d) {
  Canonical c = canonicalize(d);
  if (c.is_holder) return subset_l1loc(holder_as_classical(c.holder_exponent, d.n));
  const SpaceDescriptor& e = c.rep;

  if (e.is_zero_clan()) {
    auto cmp = against(e.s, Scalar(0));
    if (cmp.ord == Ord::Greater)
      return finish(Verdict::holds("Remark 5.4", "bounded functions are locally integrable"), cmp);
    return Verdict::open("Def. 2.11(iii)", "not settled for the 0-clan at s <= 0");
  }

  Scalar line = sigma_tp(e.slope(), e.p);
  auto cmp = against(e.s, line);

  if (e.is_classical()) {
    if (e.family == Family::B) {
      if (cmp.ord == Ord::Greater) return finish(Verdict::holds("Prop. 5.5, Eq. (5.14)"), cmp);
      if (cmp.ord == Ord::Less) return finish(Verdict::fails("Prop. 5.5, Eq. (5.14)"), cmp);
      if (!e.p.is_inf() && q_le(e.p, Scalar(1))) {
        if (q_le(e.q, Scalar(1)))
          return finish(Verdict::holds_under({"q <= 1"}, "Prop. 5.5, Eq. (5.14)"), cmp);
        return finish(Verdict::fails("Prop. 5.5, Eq. (5.14)"), cmp);
      }
      // p > 1, so the line is s = 0.
      Scalar bound = Scalar::min(e.p, Scalar(2));
      if (q_le(e.q, bound))
        return finish(Verdict::holds_under({"q <= min(p,2)"}, "Prop. 5.5, Eq. (5.14)"), cmp);
      return finish(Verdict::fails("Prop. 5.5, Eq. (5.14)"), cmp);
    }
    // Classical F per Eq. (5.16): for p < 1 the line itself belongs.
    if (cmp.ord == Ord::Greater) return finish(Verdict::holds("Prop. 5.5, Eq. (5.16)"), cmp);
    if (cmp.ord == Ord::Less) return finish(Verdict::fails("Prop. 5.5, Eq. (5.16)"), cmp);
    if (e.p < Scalar(1)) return finish(Verdict::holds("Prop. 5.5, Eq. (5.16)"), cmp);
    if (q_le(e.q, Scalar(2)))
      return finish(Verdict::holds_under({"q <= 2"}, "Prop. 5.5, Eq. (5.16)"), cmp);
    return finish(Verdict::fails("Prop. 5.5, Eq. (5.16)"), cmp);
  }

  if (cmp.ord == Ord::Greater) return finish(Verdict::holds("Thm. 5.7, Eq. (5.18)"), cmp);
  if (cmp.ord == Ord::Less) return finish(Verdict::fails("Thm. 5.7, Eq. (5.19)"), cmp);

  if (e.family == Family::F || (e.flavor == Flavor::Sup && Scalar::compare(e.q, e.p) == Ord::Equal)) {
    // F rule; a sup-B space with q = p is the F space of Eq. (2.55).
    if (e.p < Scalar(1)) return finish(Verdict::holds("Eqs. (DDH-4), (DDH-5)"), cmp);
    if (q_le(e.q, Scalar(2)))
      return finish(Verdict::holds_under({"q <= 2"}, "Eqs. (DDH-4), (DDH-5)"), cmp);
    return finish(Verdict::fails("Eqs. (DDH-4), (DDH-5)"), cmp);
  }
  if (e.flavor == Flavor::Sub || e.q.is_inf()) {
    // Sub rule; q = inf identifies the two flavors (Eq. (2.57)).
    Scalar bound = Scalar::min(Scalar::max(e.p, Scalar(1)), Scalar(2));
    if (q_le(e.q, bound))
      return finish(Verdict::holds_under({"q <= min(max(p,1),2)"}, "Eq. (DDH-6)"), cmp);
    return finish(Verdict::fails("Eq. (DDH-6)"), cmp);
  }
  return Verdict::open("Remark 5.8",
                       "limiting local integrability of the sup-B space is not characterised");
}

// ---------------------------------------------------------------------------
// Membership of the delta distribution. Threshold s = |rho|/p - n; only the
// sub B family loses the line (unless q = infinity).
// ---------------------------------------------------------------------------
Verdict member_delta(const SpaceDescriptor& d) {
  Canonical c = canonicalize(d);
  if (c.is_holder) {
    auto cmp = against(c.holder_exponent, Scalar(-d.n));
    if (cmp.ord == Ord::Greater) return finish(Verdict::fails("Eq. (2.33); Prop. 5.16"), cmp);
    return finish(Verdict::holds("Eq. (2.33); Prop. 5.16"), cmp);
  }
  const SpaceDescriptor& e = c.rep;

  if (e.is_zero_clan()) {
    auto cmp = against(e.s, Scalar(-e.n));
    if (cmp.ord == Ord::Greater) return finish(Verdict::fails("Eq. (5.44)"), cmp);
    return finish(Verdict::holds("Eq. (5.44)"), cmp);
  }

  if (e.is_classical()) {
    if (e.family == Family::F && e.p.is_inf()) {
      auto cmp = against(e.s, Scalar(-e.n));
      if (cmp.ord == Ord::Greater) return finish(Verdict::fails("Prop. 5.16, Eq. (5.27)"), cmp);
      return finish(Verdict::holds("Prop. 5.16, Eq. (5.27)"), cmp);
    }
    Scalar line = Scalar(e.n) / e.p - Scalar(e.n);
    auto cmp = against(e.s, line);
    if (cmp.ord == Ord::Less) return finish(Verdict::holds("Prop. 5.16"), cmp);
    if (cmp.ord == Ord::Greater) return finish(Verdict::fails("Prop. 5.16"), cmp);
    if (e.family == Family::B && e.q.is_inf())
      return finish(Verdict::holds("Prop. 5.16, Eq. (5.26)"), cmp);
    return finish(Verdict::fails("Prop. 5.16"), cmp);
  }

  Scalar line = e.slope() / e.p - Scalar(e.n);
  auto cmp = against(e.s, line);
  if (cmp.ord == Ord::Less) return finish(Verdict::holds("Thm. 5.18"), cmp);
  if (cmp.ord == Ord::Greater) return finish(Verdict::fails("Thm. 5.18"), cmp);
  if (e.flavor == Flavor::Sup || e.family == Family::F)
    return finish(Verdict::holds(e.flavor == Flavor::Sup ? "Thm. 5.18, Eq. (5.36)"
                                                         : "Thm. 5.18, Eq. (5.37a)"),
                  cmp);
  if (e.q.is_inf()) return finish(Verdict::holds("Thm. 5.18, Eq. (5.37)"), cmp);
  return finish(Verdict::fails("Thm. 5.18, Eq. (5.37)"), cmp);
}

// ---------------------------------------------------------------------------
// Membership of chi_Q. Threshold s = min(|rho|,1)/p; the fine conditions on
// the line depend on family and flavor.
// ---------------------------------------------------------------------------
Verdict member_chiq(const SpaceDescriptor& d) {
  Canonical c = canonicalize(d);
  if (c.is_holder) {
    auto cmp = against(c.holder_exponent, Scalar(0));
    if (cmp.ord == Ord::Greater) return finish(Verdict::fails("Eq. (2.33); Prop. 5.22"), cmp);
    return finish(Verdict::holds("Eq. (2.33); Prop. 5.22"), cmp);
  }
  const SpaceDescriptor& e = c.rep;

  if (e.is_zero_clan()) {
    auto cmp = against(e.s, Scalar(0));
    if (cmp.ord == Ord::Greater) return finish(Verdict::fails("Eq. (5.60)"), cmp);
    return finish(Verdict::holds("Eq. (5.60)"), cmp);
  }

  if (e.is_classical()) {
    if (e.p.is_inf()) {
      // F at p = inf admits the line; B needs q = inf there.
      auto cmp = against(e.s, Scalar(0));
      if (cmp.ord == Ord::Less) return finish(Verdict::holds("Prop. 5.22"), cmp);
      if (cmp.ord == Ord::Greater) return finish(Verdict::fails("Prop. 5.22"), cmp);
      if (e.family == Family::F || e.q.is_inf())
        return finish(Verdict::holds("Prop. 5.22, Eqs. (5.45)-(5.46)"), cmp);
      return finish(Verdict::fails("Prop. 5.22, Eq. (5.45)"), cmp);
    }
    Scalar line = e.p.reciprocal();
    auto cmp = against(e.s, line);
    if (cmp.ord == Ord::Less) return finish(Verdict::holds("Prop. 5.22"), cmp);
    if (cmp.ord == Ord::Greater) return finish(Verdict::fails("Prop. 5.22"), cmp);
    if (e.family == Family::B && e.q.is_inf())
      return finish(Verdict::holds("Prop. 5.22, Eq. (5.45)"), cmp);
    return finish(Verdict::fails("Prop. 5.22, Eqs. (5.45)-(5.46)"), cmp);
  }

  Scalar minr = Scalar::min(e.slope(), Scalar(1));
  Scalar line = minr / e.p;
  auto cmp = against(e.s, line);
  if (cmp.ord == Ord::Less)
    return finish(Verdict::holds(e.flavor == Flavor::Sup ? "Thm. 5.24, Eq. (5.48)"
                                                         : "Thm. 5.24, Eq. (5.50)"),
                  cmp);
  if (cmp.ord == Ord::Greater) return finish(Verdict::fails("Thm. 5.24"), cmp);

  // On the line. Below slope 1 the one-dimensional reduction admits every
  // fine index except for the sub-B family; at slope >= 1 the line is
  // s = 1/p and the classical fine behaviour takes over: only the B spaces
  // with q = inf keep it, the F spaces lose it for every q (the proof
  // computations via Eq. (5.57) override the looser display; the coincidence
  // of Eq. (2.55) forces the same answer at q = p).
  if (Scalar::compare(minr, Scalar(1)) == Ord::Equal) {
    if (e.family == Family::F) return finish(Verdict::fails("Thm. 5.24, Eq. (5.57)"), cmp);
    if (e.q.is_inf()) return finish(Verdict::holds("Thm. 5.24, Eqs. (5.48), (5.50)"), cmp);
    return finish(Verdict::fails("Thm. 5.24, Eqs. (5.48), (5.50)"), cmp);
  }
  if (e.family == Family::F || e.flavor == Flavor::Sup)
    return finish(Verdict::holds("Thm. 5.24, Eqs. (5.48), (5.50a)"), cmp);
  if (e.q.is_inf()) return finish(Verdict::holds("Thm. 5.24, Eq. (5.50)"), cmp);
  return finish(Verdict::fails("Thm. 5.24, Eq. (5.50)"), cmp);
}

// ---------------------------------------------------------------------------
// chi_Q as a bounded functional. Defined for the interior clan only.
// ---------------------------------------------------------------------------
Verdict functional_chiq_impl(const SpaceDescriptor& d) {
  d.require_valid();
  if (!d.is_clan())
    throw std::invalid_argument("functional_chiQ requires -n < rho < 0");
  Canonical c = canonicalize(d);
  const SpaceDescriptor& e = c.rep;

  Scalar slope = e.slope();
  Scalar line = Scalar::min(slope, Scalar(1)) / e.p - Scalar(1) +
                sigma_tp(Scalar::max(slope, Scalar(1)) - Scalar(1), e.p);
  auto cmp = against(e.s, line);
  if (cmp.ord == Ord::Greater) return finish(Verdict::holds("Thm. 5.29, Eq. (5.69)"), cmp);
  if (cmp.ord == Ord::Less) return finish(Verdict::fails("Thm. 5.29, Eq. (5.70)"), cmp);

  if (slope < Scalar(1)) {
    // Low slope: the full characterisation of the line.
    if (e.family == Family::B && e.flavor == Flavor::Sub) {
      if (q_le(e.q, Scalar(1))) return finish(Verdict::holds("Prop. 5.27, Eq. (5.63)"), cmp);
      return finish(Verdict::fails("Prop. 5.27, Eq. (5.63)"), cmp);
    }
    return finish(Verdict::fails("Prop. 5.27, Eqs. (5.62), (5.63a)"), cmp);
  }
  return Verdict::open("Remark 5.30", "breaking-line case for slope >= 1 is not final");
}

// ---------------------------------------------------------------------------
// Multiplication algebra.
// ---------------------------------------------------------------------------
Verdict multiplication_algebra(const SpaceDescriptor& d) {
  Canonical c = canonicalize(d);
  if (c.is_holder) {
    auto cmp = against(c.holder_exponent, Scalar(0));
    if (cmp.ord == Ord::Greater) return finish(Verdict::holds("Eq. (2.33); Prop. 5.11"), cmp);
    return finish(Verdict::fails("Eq. (2.33); Prop. 5.11"), cmp);
  }
  const SpaceDescriptor& e = c.rep;

  if (e.is_zero_clan())
    return Verdict::open("Def. 2.11(iii)", "multiplication algebras on the 0-clan are not settled");

  Scalar line = e.slope() / e.p;
  auto cmp = against(e.s, line);

  if (e.is_classical()) {
    if (cmp.ord == Ord::Greater) return finish(Verdict::holds("Prop. 5.11"), cmp);
    if (cmp.ord == Ord::Less) return finish(Verdict::fails("Prop. 5.11"), cmp);
    if (e.family == Family::B) {
      if (!e.p.is_inf() && q_le(e.q, Scalar(1)))
        return finish(Verdict::holds_under({"q <= 1"}, "Prop. 5.11, Eq. (5.23)"), cmp);
      return finish(Verdict::fails("Prop. 5.11, Eq. (5.23)"), cmp);
    }
    if (!e.p.is_inf() && q_le(e.p, Scalar(1)))
      return finish(Verdict::holds_under({"p <= 1"}, "Prop. 5.11, Eq. (5.24)"), cmp);
    return finish(Verdict::fails("Prop. 5.11, Eq. (5.24)"), cmp);
  }

  if (cmp.ord == Ord::Greater) return finish(Verdict::holds("Thm. 5.13"), cmp);
  if (cmp.ord == Ord::Less) return finish(Verdict::fails("Thm. 5.13; Prop. 5.9"), cmp);
  if (e.family == Family::B && e.flavor == Flavor::Sub) {
    if (q_le(e.q, Scalar(1)))
      return Verdict::open("Thm. 5.13(ii); Remark 5.15",
                           "the limiting sub-B case with q <= 1 is necessary but unproven");
    return finish(Verdict::fails("Thm. 5.13(ii)"), cmp);
  }
  return finish(Verdict::fails("Thm. 5.13(i)"), cmp);
}

// ---------------------------------------------------------------------------
// Truncation property.
// ---------------------------------------------------------------------------
Verdict truncation(const SpaceDescriptor& d) {
  Canonical c = canonicalize(d);
  if (c.is_holder) {
    // C^sigma = B^sigma_{inf,inf}: the classical band applies.
    return truncation(holder_as_classical(c.holder_exponent, d.n));
  }
  const SpaceDescriptor& e = c.rep;

  if (e.is_zero_clan())
    return Verdict::open("Def. 2.11(iii)", "truncation on the 0-clan is not settled");

  if (e.is_classical()) {
    if (e.family == Family::F)
      return Verdict::open("Remark 5.31a", "classical F truncation is less final");
    Scalar lower = sigma_tp(Scalar(e.n), e.p);
    Scalar upper = Scalar(1) + e.p.reciprocal();
    auto lo = against(e.s, lower);
    auto hi = against(e.s, upper);
    if (lo.ord == Ord::Greater && hi.ord == Ord::Less)
      return finish(finish(Verdict::holds("Prop. 5.31, Eq. (5.75)"), lo), hi);
    if (lo.ord == Ord::Less || hi.ord == Ord::Greater)
      return finish(finish(Verdict::fails("Prop. 5.31, Eq. (5.76)"), lo), hi);
    return Verdict::open("Prop. 5.31", "band boundary not settled");
  }

  Scalar lower = sigma_tp(e.slope(), e.p);
  Scalar upper = Scalar(1) + Scalar::min(e.slope(), Scalar(1)) / e.p;
  // The full characterisation covers the sub-B family and, through the
  // coincidences at q = p and q = inf, the F spaces and the sup-B members
  // identified with them.
  bool proven_band = e.family == Family::F || e.flavor == Flavor::Sub || e.q.is_inf() ||
                     Scalar::compare(e.q, e.p) == Ord::Equal;
  proven_band = proven_band && e.p >= Scalar(1) && e.q >= Scalar(1);

  if (proven_band) {
    // Full characterisation: 0 < s < 1 + min(|rho|,1)/p (here sigma vanishes).
    auto lo = against(e.s, Scalar(0));
    auto hi = against(e.s, upper);
    const char* cite = e.family == Family::F ? "Remark 5.34" : "Eq. (5.80)";
    if (lo.ord == Ord::Greater && hi.ord == Ord::Less)
      return finish(finish(Verdict::holds(cite), lo), hi);
    return finish(finish(Verdict::fails(cite), lo), hi);
  }

  auto lo = against(e.s, lower);
  auto hi = against(e.s, upper);
  if (lo.ord == Ord::Less)
    return finish(Verdict::fails("Thm. 5.7; Conj. 5.32",
                                 "below the local integrability line the property cannot hold"),
                  lo);
  if (lo.ord == Ord::Greater && hi.ord == Ord::Less)
    return Verdict::open("Conj. 5.32", "inside the conjectured band");
  return Verdict::open("Conj. 5.32", "outside the conjectured band; failure is conjectural");
}

// ---------------------------------------------------------------------------
// Haar expansions. R_sigma is the conjectured region; Eq. (6.18) and the
// confirmed high-slope case give the proven part.
// ---------------------------------------------------------------------------
struct Region2 {
  Scalar lower;  // s strictly above
  Scalar upper;  // s strictly below
};

Region2 haar_R(const Scalar& slope, const Scalar& p) {
  Scalar invp = p.reciprocal();
  if (slope <= Scalar(1))
    return {slope * invp - Scalar(1), Scalar::min(Scalar(1), slope * invp)};
  return {Scalar::max(invp - Scalar(1), slope * (invp - Scalar(1))),
          Scalar::min(Scalar(1), invp)};
}

Verdict haar_basis(const SpaceDescriptor& d) {
  Canonical c = canonicalize(d);
  if (c.is_holder)
    return Verdict::open("Eq. (2.33)", "no Haar characterisation is stated for this range");
  const SpaceDescriptor& e = c.rep;

  if (e.is_zero_clan())
    return Verdict::open("Def. 2.11(iii)", "Haar expansions on the 0-clan are not settled");

  if (e.family == Family::F)
    return Verdict::open("Conj. 6.3",
                         "stated for the B families; the F case is q-sensitive and not covered");

  if (e.is_classical()) {
    if (e.p.is_inf())
      return Verdict::open("Prop. 6.1", "p = inf boundary of the admissible set");
    Scalar invp = e.p.reciprocal();
    Scalar lower = Scalar::max(Scalar(e.n) * (invp - Scalar(1)), invp - Scalar(1));
    Scalar upper = Scalar::min(invp, Scalar(1));
    auto lo = against(e.s, lower);
    auto hi = against(e.s, upper);
    if (lo.ord == Ord::Greater && hi.ord == Ord::Less)
      return finish(finish(Verdict::holds("Prop. 6.1, Eq. (6.10)"), lo), hi);
    if (lo.ord == Ord::Less || hi.ord == Ord::Greater)
      return finish(finish(Verdict::fails("Remark 6.2, Eq. (6.15)"), lo), hi);
    return Verdict::open("Remark 6.2", "boundary of the admissible set");
  }

  Scalar invp = e.p.reciprocal();
  Scalar slope = e.slope();

  // Proven region Eq. (6.18): max(n(1/p-1), 1/p-1) < s < min(1/p, |rho|/p, 1).
  Scalar lower18 = Scalar::max(Scalar(e.n) * (invp - Scalar(1)), invp - Scalar(1));
  Scalar upper18 = Scalar::min(Scalar::min(invp, slope * invp), Scalar(1));
  auto lo18 = against(e.s, lower18);
  auto hi18 = against(e.s, upper18);
  if (lo18.ord == Ord::Greater && hi18.ord == Ord::Less)
    return finish(finish(Verdict::holds("Eq. (6.18); Remark 6.5"), lo18), hi18);

  Region2 r = haar_R(slope, e.p);
  auto lo = against(e.s, r.lower);
  auto hi = against(e.s, r.upper);

  // Confirmed case Eq. (6.25): slope >= 1, p >= 1, n >= 2.
  if (slope >= Scalar(1) && e.p >= Scalar(1) && e.n >= 2) {
    if (lo.ord == Ord::Greater && hi.ord == Ord::Less)
      return finish(finish(Verdict::holds("Eq. (6.25); Conj. 6.3 (confirmed case)"), lo), hi);
    if (lo.ord == Ord::Less || hi.ord == Ord::Greater)
      return finish(finish(Verdict::fails("Eq. (6.25); Eqs. (6.22)-(6.23)"), lo), hi);
    return Verdict::open("Conj. 6.3", "boundary of R_{|rho|}");
  }

  if (lo.ord == Ord::Less || hi.ord == Ord::Greater)
    return finish(finish(Verdict::fails("Eqs. (6.22)-(6.23); Thms. 5.24, 5.29"), lo), hi);
  if (lo.ord == Ord::Greater && hi.ord == Ord::Less)
    return Verdict::open("Conj. 6.3", "inside the conjectured region R_{|rho|}");
  return Verdict::open("Conj. 6.3", "boundary of R_{|rho|}");
}

Verdict always_holds_key_property(const SpaceDescriptor& d, const char* clan_cite,
                                  const char* classical_cite, const char* zero_cite) {
  Canonical c = canonicalize(d);
  if (c.is_holder) return Verdict::holds(classical_cite, "Hoelder-Zygmund scale");
  if (c.rep.is_zero_clan()) return Verdict::holds(zero_cite);
  if (c.rep.is_classical()) return Verdict::holds(classical_cite);
  return Verdict::holds(clan_cite);
}

// ---------------------------------------------------------------------------
// Embedding into bmo = F^0_{inf,2}: s >= |rho|/p.
// ---------------------------------------------------------------------------
Verdict embeds_bmo(const SpaceDescriptor& d) {
  // Boundedness suffices: L_inf sits inside bmo.
  Verdict bounded = embeds_linfty(d);
  if (bounded.affirmative())
    return Verdict::holds("Remark bmo-def", "the space embeds into L_inf, which sits inside bmo");
  Canonical c = canonicalize(d);
  if (c.is_holder)
    return Verdict::open("Eq. (2.33); Remark bmo-def", "not settled for this range");
  const SpaceDescriptor& e = c.rep;
  if (e.is_zero_clan())
    return Verdict::open("Remark bmo-def", "bmo embedding not stated for the 0-clan");
  if (e.is_classical() && e.p.is_inf())
    return Verdict::open("Remark R-non-Lr", "stated for p < infinity");
  Scalar line = e.slope() / e.p;
  auto cmp = against(e.s, line);
  if (cmp.ord != Ord::Less) return finish(Verdict::holds("Remark R-non-Lr"), cmp);
  return finish(Verdict::fails("Remark R-non-Lr"), cmp);
}

Verdict embeds_holder(const SpaceDescriptor& d, const Scalar& sigma) {
  Canonical c = canonicalize(d);
  if (c.is_holder) {
    auto cmp = against(sigma, c.holder_exponent);
    if (cmp.ord != Ord::Greater) return finish(Verdict::holds("Eq. (2.33)"), cmp);
    return finish(Verdict::fails("Eq. (2.33)"), cmp);
  }
  const SpaceDescriptor& e = c.rep;
  if (e.is_zero_clan()) {
    auto cmp = against(sigma, e.s);
    // Lambda^0 B^s_{p,q} -> C^s by the fine-index chain.
    if (cmp.ord == Ord::Less) return finish(Verdict::holds("Eq. (2.34)"), cmp);
    if (cmp.ord == Ord::Equal && e.q.is_inf()) return finish(Verdict::holds("Eq. (2.34)"), cmp);
    return Verdict::open("Eq. (2.34)", "sharpness on the line not asserted here");
  }
  Scalar dd = diff_dimension(e);
  auto cmp = against(sigma, dd);
  const char* cite = e.is_classical() ? "Eq. (5.32)" : "Eq. (4.34)";
  if (cmp.ord != Ord::Greater) return finish(Verdict::holds(cite), cmp);
  return Verdict::open(cite, "failure above the differential dimension is not asserted here");
}

Verdict embeds_lr(const SpaceDescriptor& d, const Scalar& r) {
  if (r.sign() <= 0) throw std::invalid_argument("Lr target requires r > 0");
  if (r.is_inf()) return embeds_linfty(d);
  Canonical c = canonicalize(d);
  if (c.is_holder || c.rep.is_classical() || c.rep.is_zero_clan())
    return Verdict::open("Remark R-non-Lr", "stated for the interior clans only");
  return Verdict::fails("Remark R-non-Lr",
                        "spaces of an interior clan never embed into a finite-exponent Lebesgue space");
}

// ---------------------------------------------------------------------------
// Space-to-space embeddings.
// ---------------------------------------------------------------------------

Scalar slope_of(const SpaceDescriptor& d) { return d.slope(); }

Scalar ddim(const SpaceDescriptor& d) { return d.s - slope_of(d) / d.p; }

// Necessary conditions shared by every family pairing on R^n: the target
// slope may not exceed the source slope, |rho_1|/p_1 >= |rho_2|/p_2, and the
// differential dimension may not increase.
struct RnNecessity {
  bool ok;
  bool fuzzy;
  Ord dcmp;  // comparison of the differential dimensions
};

RnNecessity rn_necessity(const SpaceDescriptor& a, const SpaceDescriptor& b) {
  bool f1 = false, f2 = false, f3 = false;
  Ord slope_cmp = Scalar::compare(slope_of(b), slope_of(a), &f1);
  Ord ratio_cmp = Scalar::compare(slope_of(a) / a.p, slope_of(b) / b.p, &f2);
  Ord dcmp = Scalar::compare(ddim(a), ddim(b), &f3);
  bool ok = slope_cmp != Ord::Greater && ratio_cmp != Ord::Less && dcmp != Ord::Less;
  return {ok, f1 || f2 || f3, dcmp};
}

// Same family and flavor on R^n: the complete characterisations of T6.5 /
// T7.1, with the unsettled limiting line of crossing sup-B pairs.
Verdict rn_same_family(const SpaceDescriptor& a, const SpaceDescriptor& b, bool same_clan) {
  RnNecessity nec = rn_necessity(a, b);
  auto done = [&nec](Verdict v) {
    if (nec.fuzzy) v.with_note(kFuzzyNote);
    return v;
  };

  const bool is_f = a.family == Family::F;
  const char* cite = same_clan ? (is_f ? "Thm. 6.5(ii)" : "Thm. 6.5(i), Eq. (6.34)")
                               : (is_f ? "Thm. 7.1(ii),(iv)" : "Thm. 7.1(i),(iii)");
  if (!nec.ok) return done(Verdict::fails(same_clan ? cite : "Thm. 7.1, Eq. (DDH-7)"));
  if (nec.dcmp == Ord::Greater) return done(Verdict::holds(cite));

  // Limiting line, equal differential dimensions.
  if (is_f) {
    if (Scalar::compare(a.p, b.p) == Ord::Less) return done(Verdict::holds(cite));
    if (Scalar::compare(a.s, b.s) == Ord::Equal && Scalar::compare(a.p, b.p) == Ord::Equal)
      return done(q_le(a.q, b.q) ? Verdict::holds(cite) : Verdict::fails(cite));
    return done(Verdict::fails(cite));
  }
  bool sup_b = a.flavor == Flavor::Sup && b.flavor == Flavor::Sup;
  if (sup_b && !same_clan) {
    // Coincidences settle two corners of the gap: q = inf on both sides is
    // the sub pair (Eq. (2.57)), q = p on both sides the F pair (Eq. (2.55)).
    if (a.q.is_inf() && b.q.is_inf())
      return done(Verdict::holds("Thm. 7.1(i); Eq. (2.57)"));
    if (Scalar::compare(a.q, a.p) == Ord::Equal && Scalar::compare(b.q, b.p) == Ord::Equal) {
      if (Scalar::compare(a.p, b.p) == Ord::Less)
        return done(Verdict::holds("Thm. 7.1(iv); Eq. (2.55)"));
      return done(Verdict::fails("Thm. 7.1(iv); Eq. (2.55)"));
    }
    // T7.1(iii): sufficiency on the line is not settled; necessity forces
    // q_1 <= q_2 when s_1 = s_2.
    if (Scalar::compare(a.s, b.s) == Ord::Equal && !q_le(a.q, b.q))
      return done(Verdict::fails("Thm. 7.1(iii)"));
    return Verdict::open("Thm. 7.1(iii); Remark R6.16",
                         "limiting line for crossing sup-B spaces is not settled");
  }
  return done(q_le(a.q, b.q) ? Verdict::holds(cite) : Verdict::fails(cite));
}

// Rule dispatch for embeddings reads coincidences backwards: a sup-B space
// with q = p is the F space of Eq. (2.55), one with q = inf the sub space
// of Eq. (2.57). Classical descriptors stay as they are.
SpaceDescriptor effective_shape(SpaceDescriptor d) {
  bool sup_or_classical = d.flavor == Flavor::Sup || d.flavor == Flavor::Classical;
  if (d.family == Family::B && sup_or_classical && !d.is_zero_clan() && !d.q.is_inf() &&
      !d.p.is_inf() && Scalar::compare(d.q, d.p) == Ord::Equal)
    d.family = Family::F;
  return d;
}

// F spaces sit between B spaces with fine indices min(p,q) and max(p,q)
// (q = infinity on the sub side). Used for mixed-family queries.
SpaceDescriptor f_lower_bracket(const SpaceDescriptor& d) {
  SpaceDescriptor b = d;
  b.family = Family::B;
  b.q = Scalar::min(d.p, d.q);
  return b;
}
SpaceDescriptor f_upper_bracket(const SpaceDescriptor& d) {
  SpaceDescriptor b = d;
  b.family = Family::B;
  b.q = d.flavor == Flavor::Sub ? Scalar::infinity() : Scalar::max(d.p, d.q);
  if (b.q.is_inf() && b.flavor == Flavor::Sub) b.flavor = Flavor::Sup;
  return b;
}

Verdict rn_space_embedding_impl(SpaceDescriptor a, SpaceDescriptor b);

Verdict rn_space_embedding(SpaceDescriptor a, SpaceDescriptor b) {
  return rn_space_embedding_impl(effective_shape(a), effective_shape(b));
}

// Callers inside the bracket routes enter here directly so that the
// coincidence re-reading cannot recurse through its own brackets.
Verdict rn_space_embedding_impl(SpaceDescriptor a, SpaceDescriptor b) {
  bool same_clan = Scalar::compare(a.rho, b.rho) == Ord::Equal;

  // A space of an interior clan never lands in a classical space with
  // finite integrability.
  if (a.is_clan() && b.is_classical() && !b.p.is_inf())
    return Verdict::fails("Remark R6.18");

  if (a.is_zero_clan() || b.is_zero_clan()) {
    if (a == b) return Verdict::holds("identity");
    return Verdict::open("Def. 2.11(iii)", "0-clan embeddings are not settled here");
  }

  // Classical target with p = inf: only the q = inf member (the
  // Hoelder-Zygmund space) is covered, through Eq. (4.34).
  if (a.is_clan() && b.is_classical() && b.p.is_inf()) {
    if (b.q.is_inf()) return embeds_holder(a, b.s);
    return Verdict::open("Eq. (4.34)", "classical targets with p = inf and q < inf not covered");
  }

  // Same family; classical descriptors match either flavor.
  bool flavors_match = a.flavor == b.flavor || a.family == Family::F ||
                       a.flavor == Flavor::Classical || b.flavor == Flavor::Classical;
  // A classical B endpoint coincides in both flavors at slope -n, so the
  // complete rules apply; the sup-B limiting gap needs both sides genuinely
  // of sup flavor.
  if (a.family == b.family && flavors_match) return rn_same_family(a, b, same_clan);

  // Mixed flavors of the B family.
  if (a.family == Family::B && b.family == Family::B) {
    bool a_sub = a.flavor == Flavor::Sub;
    bool b_sub = b.flavor == Flavor::Sub;
    RnNecessity nec = rn_necessity(a, b);
    if (!nec.ok)
      return Verdict::fails("Remark R6.16", "necessary slope conditions fail");
    if (a_sub && !b_sub) {
      // Route through the settled sub pair, then the strict inclusion. A
      // target with q = inf is itself a sub space, so that route is exact.
      SpaceDescriptor b_as_sub = b;
      b_as_sub.flavor = Flavor::Sub;
      Verdict via_sub = rn_same_family(a, b_as_sub, same_clan);
      if (b.q.is_inf()) return via_sub.with_note("via Eq. (2.57)");
      if (via_sub.affirmative()) return via_sub.with_note("via Eq. (2.56)");
      SpaceDescriptor a_as_sup = a;
      a_as_sup.flavor = Flavor::Sup;
      Verdict via_sup = rn_same_family(a_as_sup, b, same_clan);
      if (via_sup.affirmative()) return via_sup.with_note("via Eq. (2.56)");
      return Verdict::open("Eq. (2.56)", "flavor-crossing limiting case is not stated");
    }
    if (!a_sub && b_sub && a.q.is_inf()) {
      // A sup source with q = inf is the sub space of Eq. (2.57).
      SpaceDescriptor a_as_sub = a;
      a_as_sub.flavor = Flavor::Sub;
      return rn_same_family(a_as_sub, b, same_clan).with_note("via Eq. (2.57)");
    }
    return Verdict::open("Eq. (2.56)", "embedding from the sup into the sub family is not stated");
  }

  // Mixed families: bracket the F side between B spaces (Eqs. (2.53)/(2.54)).
  if (a.family == Family::F && b.family == Family::B) {
    Verdict sufficient = rn_space_embedding_impl(f_upper_bracket(a), b);
    if (sufficient.affirmative()) return sufficient.with_note("via Eqs. (2.53)-(2.54)");
    Verdict necessary = rn_space_embedding_impl(f_lower_bracket(a), b);
    if (necessary.status == Verdict::Status::Fails)
      return necessary.with_note("via Eqs. (2.53)-(2.54)");
    return Verdict::open("Eqs. (2.53)-(2.54)", "between the fine-index brackets");
  }
  if (a.family == Family::B && b.family == Family::F) {
    Verdict sufficient = rn_space_embedding_impl(a, f_lower_bracket(b));
    if (sufficient.affirmative()) return sufficient.with_note("via Eqs. (2.53)-(2.54)");
    Verdict necessary = rn_space_embedding_impl(a, f_upper_bracket(b));
    if (necessary.status == Verdict::Status::Fails)
      return necessary.with_note("via Eqs. (2.53)-(2.54)");
    return Verdict::open("Eqs. (2.53)-(2.54)", "between the fine-index brackets");
  }
  return Verdict::open("Thm. 7.1", "combination not covered");
}

// Compactness threshold on a bounded domain, T5.39a (both slope orders).
struct DomainThreshold {
  Scalar value;
  const char* cite;
};

DomainThreshold domain_compact_threshold(const SpaceDescriptor& a, const SpaceDescriptor& b) {
  Scalar sa = slope_of(a), sb = slope_of(b);
  Scalar gap_p = a.p.reciprocal() - b.p.reciprocal();
  if (Scalar::compare(sa, sb) != Ord::Greater)
    return {sa * Scalar::max(gap_p, Scalar(0)), "Thm. 5.39a(i)"};
  return {Scalar::max(sa / a.p - sb / b.p, Scalar(0)), "Thm. 5.39a(ii)"};
}

Verdict domain_space_embedding(SpaceDescriptor a, SpaceDescriptor b, EmbedMode mode) {
  if (a.is_zero_clan() || b.is_zero_clan()) {
    if (mode == EmbedMode::Continuous && a == b) return Verdict::holds("identity");
    return Verdict::open("Def. 2.11(iii)", "0-clan embeddings on domains are not settled here");
  }

  DomainThreshold th = domain_compact_threshold(a, b);
  Scalar D = a.s - b.s;
  bool fz = false;
  Ord cmp = Scalar::compare(D, th.value, &fz);
  auto done = [&fz](Verdict v) {
    if (fz) v.with_note(kFuzzyNote);
    return v;
  };

  if (mode == EmbedMode::Compact) {
    const char* cite = (a.is_classical() && b.is_classical()) ? "Prop. 5.37(ii)" : th.cite;
    if (cmp == Ord::Greater) return done(Verdict::holds(cite));
    return done(Verdict::fails(cite));
  }

  // Continuity.
  if (cmp == Ord::Greater)
    return done(Verdict::holds(th.cite, "compact, hence continuous"));

  bool same_clan = Scalar::compare(a.rho, b.rho) == Ord::Equal && a.n == b.n &&
                   (a.is_classical() == b.is_classical());
  // A sup-B space with q = p is the F space of Eq. (2.55); two such sides
  // form an F pair even when only one of them was written as F.
  auto f_like = [](const SpaceDescriptor& d) {
    bool sup_or_classical = d.flavor == Flavor::Sup || d.flavor == Flavor::Classical;
    return d.family == Family::F ||
           (d.family == Family::B && sup_or_classical && !d.q.is_inf() && !d.p.is_inf() &&
            Scalar::compare(d.q, d.p) == Ord::Equal);
  };
  bool f_pair = f_like(a) && f_like(b);
  // Likewise q = inf reads as the sub space of Eq. (2.57).
  auto sub_like = [](const SpaceDescriptor& d) {
    return d.family == Family::B && (d.flavor == Flavor::Sub || d.q.is_inf()) &&
           !d.is_classical();
  };
  bool sub_pair = sub_like(a) && sub_like(b);
  bool same_shape = f_pair || sub_pair ||
                    (a.family == b.family && (a.flavor == b.flavor || a.family == Family::F));
  if (!(same_clan && same_shape)) {
    if (cmp == Ord::Equal)
      return Verdict::open("Thm. 5.39a", "limiting continuity across clans is not displayed");
    return done(Verdict::fails("Thm. 5.39a; Prop. 5.37",
                               "below the compactness threshold no continuous embedding is stated"));
  }

  // Same clan, same family and flavor: T5.39 / R5.40.
  if (cmp == Ord::Less) return done(Verdict::fails("Thm. 5.39(i)"));

  bool sup_b = !f_pair && a.family == Family::B && a.flavor == Flavor::Sup &&
               b.flavor == Flavor::Sup;
  bool limiting_p = Scalar::compare(a.p, b.p) == Ord::Less && th.value.sign() > 0;

  if (sup_b && limiting_p && !a.is_classical()) {
    // Coincidence corners first: q = inf twice is the settled sub pair, and
    // q = p twice the F pair, which keeps the limiting line for p1 < p2.
    if (a.q.is_inf() && b.q.is_inf())
      return done(Verdict::holds("Thm. 5.39(i); Eq. (2.57)"));
    if (Scalar::compare(a.q, a.p) == Ord::Equal && Scalar::compare(b.q, b.p) == Ord::Equal)
      return done(Verdict::holds("Thm. 6.5(ii); Eq. (2.55)"));
    // R5.40: q1 <= (p1/p2) q2 suffices; q1 <= q2 is necessary; in between open.
    if (!q_le(a.q, b.q)) return done(Verdict::fails("Remark 5.40"));
    Scalar bound = b.q.is_inf() ? Scalar::infinity() : (a.p / b.p) * b.q;
    if (!a.q.is_inf() && q_le(a.q, bound))
      return done(Verdict::holds("Remark 5.40, Eq. (DDH-2)"));
    return Verdict::open("Remark 5.40, Eq. (DDH-3)",
                         "limiting continuity of the sup-B pair on domains is a gap");
  }

  if (q_le(a.q, b.q)) return done(Verdict::holds("Thm. 5.39(i)"));
  return Verdict::open("Thm. 5.39(i)", "fine-index drop on the limiting line is not displayed");
}

Verdict embeds_spaces(const EmbeddingQuery& query) {
  const SpaceDescriptor& src = query.source;
  const SpaceDescriptor& dst = query.target.space;
  dst.require_valid();
  if (src.n != dst.n) throw std::invalid_argument("dimension mismatch between source and target");

  Canonical ca = canonicalize(src);
  Canonical cb = canonicalize(dst);
  SpaceDescriptor a = ca.is_holder ? holder_as_classical(ca.holder_exponent, src.n) : ca.rep;
  SpaceDescriptor b = cb.is_holder ? holder_as_classical(cb.holder_exponent, dst.n) : cb.rep;

  if (query.mode == EmbedMode::Compact) {
    if (query.ground == Ground::RnWhole)
      return Verdict::fails("Thm. 6.5", "no compact embeddings between these spaces on R^n");
    return domain_space_embedding(a, b, EmbedMode::Compact);
  }
  if (query.ground == Ground::BoundedDomain)
    return domain_space_embedding(a, b, EmbedMode::Continuous);
  return rn_space_embedding(a, b);
}

}  // namespace

Verdict embeds(const EmbeddingQuery& query) {
  query.source.require_valid();
  switch (query.target.kind) {
    case Target::Kind::Space:
      return embeds_spaces(query);
    case Target::Kind::Linfty:
    case Target::Kind::ContinuousC: {
      Verdict v = embeds_linfty(query.source);
      if (query.target.kind == Target::Kind::ContinuousC)
        v.with_note("the same characterisation holds with C in place of L_inf");
      return v;
    }
    case Target::Kind::L1loc:
      return subset_l1loc(query.source);
    case Target::Kind::Lr:
      return embeds_lr(query.source, query.target.r);
    case Target::Kind::Bmo:
      return embeds_bmo(query.source);
    case Target::Kind::HolderZygmund:
      return embeds_holder(query.source, query.target.sigma);
  }
  throw std::logic_error("unknown target kind");
}

Verdict member(Element element, const SpaceDescriptor& d) {
  d.require_valid();
  return element == Element::Delta ? member_delta(d) : member_chiq(d);
}

Verdict functional_chiQ(const SpaceDescriptor& d) { return functional_chiq_impl(d); }

Verdict property(const SpaceDescriptor& d, Property which) {
  d.require_valid();
  switch (which) {
    case Property::MultiplicationAlgebra: return multiplication_algebra(d);
    case Property::Truncation: return truncation(d);
    case Property::HaarBasis: return haar_basis(d);
    case Property::Fatou:
      return always_holds_key_property(d, "Thm. 3.12", "Remark 3.13", "Remark 3.13");
    case Property::SmoothMultiplier:
      return always_holds_key_property(d, "Thm. 4.1", "Eq. (4.5)", "Remark 4.2");
    case Property::Diffeomorphism:
      return always_holds_key_property(d, "Thm. 4.5", "Prop. 4.3", "Remark 4.6");
    case Property::HalfSpaceExtension:
      return always_holds_key_property(d, "Thm. 4.9", "Thm. 4.9", "Remark 4.11");
  }
  throw std::logic_error("unknown property");
}

TraceResult trace(const SpaceDescriptor& d) {
  d.require_valid();
  if (d.n < 2) throw std::invalid_argument("traces require n >= 2");
  if (!d.is_clan())
    throw std::invalid_argument("traces are classified for -n < rho < 0");

  Canonical c = canonicalize(d);
  const SpaceDescriptor& e = c.rep;
  Scalar slope = e.slope();
  TraceResult out;

  auto open_region = [&]() {
    out.verdict = Verdict::open("Remark 4.14, Eq. (4.62)",
                                "outside the proven hypotheses; the natural region is conjectural");
    return out;
  };

  if (slope < Scalar(1)) {
    // -1 < rho < 0, threshold s > |rho|/p.
    bool fz = false;
    Ord cmp = Scalar::compare(e.s, slope / e.p, &fz);
    if (cmp != Ord::Greater) return open_region();
    Scalar sig = e.s - slope / e.p;
    if (e.flavor == Flavor::Sup || e.family == Family::F) {
      out.verdict = Verdict::holds(e.flavor == Flavor::Sup ? "Thm. 4.12, Eq. (4.38)"
                                                           : "Thm. 4.12, Eq. (4.39a)");
      out.target = SpaceOrMarker::holder(sig);
    } else {
      out.verdict = Verdict::holds("Thm. 4.12, Eq. (4.39)");
      SpaceDescriptor t;
      t.family = Family::B;
      t.flavor = Flavor::Classical;
      t.s = sig;
      t.p = Scalar::infinity();
      t.q = e.q;
      t.n = e.n - 1;
      t.rho = Scalar(-t.n);
      out.target = SpaceOrMarker::of(t);
    }
    if (fz) out.verdict.with_note(kFuzzyNote);
    out.extension_exists = true;
    return out;
  }

  // |rho| >= 1. The q = inf sup-B case reaches down to s > 1/p.
  bool fz = false;
  Scalar reduced = e.s - e.p.reciprocal();
  Ord cmp = Scalar::compare(reduced, sigma_tp(Scalar(e.n - 1), e.p), &fz);

  if (cmp != Ord::Greater) {
    if (Scalar::compare(slope, Scalar(1)) == Ord::Equal && e.flavor == Flavor::Sup &&
        e.family == Family::B && e.q.is_inf() &&
        Scalar::compare(e.s, e.p.reciprocal()) == Ord::Greater) {
      out.verdict = Verdict::holds("Remark 4.16, Eq. (4.69)");
      out.target = SpaceOrMarker::holder(reduced);
      out.extension_exists = true;
      return out;
    }
    return open_region();
  }

  if (Scalar::compare(slope, Scalar(1)) == Ord::Equal) {
    // rho = -1: targets live in the 0-clan.
    if (e.flavor == Flavor::Sub && e.family == Family::B) {
      out.verdict = Verdict::open(
          "Cor. 4.15", "no admissible sub-flavor target space exists at rho = -1");
      return out;
    }
    SpaceDescriptor t;
    t.family = Family::B;
    t.flavor = Flavor::Sup;
    t.rho = Scalar(0);
    t.s = reduced;
    t.p = e.p;
    t.q = e.family == Family::F ? e.p : e.q;
    t.n = e.n - 1;
    out.verdict = Verdict::holds(e.family == Family::F ? "Cor. 4.15, Eq. (4.65)"
                                                       : "Cor. 4.15, Eq. (4.64)");
    out.target = SpaceOrMarker::of(t);
    out.extension_exists = true;
    if (fz) out.verdict.with_note(kFuzzyNote);
    return out;
  }

  // -n < rho < -1: targets carry slope rho + 1 in dimension n - 1.
  SpaceDescriptor t;
  t.family = Family::B;
  t.s = reduced;
  t.p = e.p;
  t.n = e.n - 1;
  t.rho = e.rho + Scalar(1);
  if (e.family == Family::F) {
    t.flavor = Flavor::Sup;
    t.q = e.p;
    out.verdict = Verdict::holds(e.flavor == Flavor::Sub ? "Thm. 4.13, Eq. (4.54a)"
                                                         : "Thm. 4.13, Eq. (4.53)");
  } else {
    t.flavor = e.flavor;
    t.q = e.q;
    out.verdict = Verdict::holds(e.flavor == Flavor::Sub ? "Thm. 4.13, Eq. (4.54)"
                                                         : "Thm. 4.13, Eq. (4.52)");
  }
  if (Scalar::compare(t.rho, Scalar(-t.n)) == Ord::Equal) t.flavor = Flavor::Classical;
  out.target = SpaceOrMarker::of(t);
  out.extension_exists = true;
  if (fz) out.verdict.with_note(kFuzzyNote);
  return out;
}

SpaceDescriptor lift(const SpaceDescriptor& d, const Scalar& shift) {
  d.require_valid();
  SpaceDescriptor out = d;
  out.s = d.s + shift;
  return out;
}

InterpolationResult interpolate(const SpaceDescriptor& d1, const SpaceDescriptor& d2,
                                const Scalar& theta, const InterpolationMethod& method) {
  d1.require_valid();
  d2.require_valid();
  if (theta.sign() <= 0 || theta >= Scalar(1))
    throw std::invalid_argument("theta must lie strictly between 0 and 1");
  InterpolationResult out;

  if (d1.n != d2.n || Scalar::compare(d1.rho, d2.rho) != Ord::Equal) {
    out.verdict = Verdict::open("Remark 3.6", "interpolation across clans is unknown");
    return out;
  }

  Canonical c1 = canonicalize(d1), c2 = canonicalize(d2);
  if (c1.is_holder || c2.is_holder) {
    out.verdict = Verdict::open("Eq. (2.33)", "Hoelder-Zygmund collapse; not covered");
    return out;
  }
  const SpaceDescriptor &a = c1.rep, &b = c2.rep;
  if (a.is_zero_clan() || b.is_zero_clan()) {
    out.verdict = Verdict::open("Def. 2.11(iii)", "interpolation on the 0-clan is not stated");
    return out;
  }

  if (method.kind == InterpolationMethod::Kind::RealWithQ) {
    if (Scalar::compare(a.p, b.p) != Ord::Equal)
      throw std::invalid_argument("real interpolation requires equal p");
    if (Scalar::compare(a.s, b.s) == Ord::Equal)
      throw std::invalid_argument("real interpolation requires distinct smoothness");
    bool sup_b_input = [](const SpaceDescriptor& d) {
      return d.family == Family::B && d.flavor == Flavor::Sup;
    }(a) || (b.family == Family::B && b.flavor == Flavor::Sup);
    if (sup_b_input && !(a.is_classical() || b.is_classical())) {
      out.verdict = Verdict::open("Prop. 3.3; Remark 3.4",
                                  "real interpolation with sup-B inputs is not stated");
      return out;
    }
    SpaceDescriptor r;
    r.family = Family::B;
    r.flavor = a.is_classical() ? Flavor::Classical : Flavor::Sub;
    r.s = (Scalar(1) - theta) * a.s + theta * b.s;
    r.p = a.p;
    r.q = method.q;
    r.rho = a.rho;
    r.n = a.n;
    out.space = r;
    out.verdict = a.is_classical() ? Verdict::holds("Prop. 3.3 (classical real interpolation)")
                                   : Verdict::holds("Prop. 3.3, Eqs. (3.13)-(3.14)");
    return out;
  }

  // Plus-minus method: matching family and flavor.
  if (a.family != b.family || a.flavor != b.flavor) {
    out.verdict = Verdict::open("Thm. 3.5", "the method is stated for matching families");
    return out;
  }
  SpaceDescriptor r = a;
  r.s = (Scalar(1) - theta) * a.s + theta * b.s;
  r.p = ((Scalar(1) - theta) / a.p + theta / b.p).reciprocal();
  if (a.q.is_inf() && b.q.is_inf())
    r.q = Scalar::infinity();
  else
    r.q = ((Scalar(1) - theta) / a.q + theta / b.q).reciprocal();
  out.space = r;
  out.verdict = a.is_classical() ? Verdict::holds("Remark 3.6, Eqs. (3.19)-(3.20)")
                                 : Verdict::holds("Thm. 3.5, Eqs. (3.15)-(3.18)");
  return out;
}

GrowthEnvelope growth_envelope(const SpaceDescriptor& d, Ground ground) {
  d.require_valid();
  if (d.flavor != Flavor::Classical && !(d.rho.sign() < 0))
    throw std::invalid_argument("growth envelopes require rho in [-n, 0)");
  Verdict l1 = subset_l1loc(d);
  if (l1.status == Verdict::Status::Fails)
    throw std::invalid_argument("growth envelopes require the space inside L_1^loc");

  GrowthEnvelope out;
  Verdict li = embeds_linfty(d);
  if (li.affirmative()) {
    out.shape = GrowthEnvelope::Shape::Bounded;
    out.verdict = Verdict::holds("Def. of the growth envelope", "bounded: the space embeds into L_inf");
    return out;
  }

  Canonical c = canonicalize(d);
  const SpaceDescriptor& e = c.rep;

  if (e.is_classical()) {
    if (e.p.is_inf()) {
      out.verdict = Verdict::open("Example envg-A", "stated for p < infinity");
      return out;
    }
    Scalar lower = sigma_tp(Scalar(e.n), e.p);
    Scalar upper = Scalar(e.n) / e.p;
    bool f1 = false, f2 = false;
    Ord lo = Scalar::compare(e.s, lower, &f1);
    Ord hi = Scalar::compare(e.s, upper, &f2);
    if (lo == Ord::Greater && hi == Ord::Less) {
      out.shape = GrowthEnvelope::Shape::PowerLaw;
      out.exponent = -e.p.reciprocal() + e.s / Scalar(e.n);
      out.verdict = Verdict::holds("Example envg-A(i)");
    } else if (hi == Ord::Equal) {
      // s = n/p and not embedded into L_inf.
      if (e.family == Family::B) {
        out.shape = GrowthEnvelope::Shape::LogLaw;
        out.exponent = Scalar(1) - e.q.reciprocal();
        out.verdict = Verdict::holds("Example envg-A(ii)");
      } else {
        out.shape = GrowthEnvelope::Shape::LogLaw;
        out.exponent = Scalar(1) - e.p.reciprocal();
        out.verdict = Verdict::holds("Example envg-A(iii)");
      }
    } else {
      out.verdict = Verdict::open("Example envg-A", "limiting line s = sigma_p^n not displayed");
    }
    if (f1 || f2) out.verdict.with_note(kFuzzyNote);
    return out;
  }

  if (e.is_zero_clan()) {
    out.verdict = Verdict::open("Def. 2.11(iii)", "growth envelopes on the 0-clan are not stated");
    return out;
  }

  if (ground == Ground::RnWhole) {
    out.shape = GrowthEnvelope::Shape::InfiniteEverywhere;
    out.verdict = Verdict::holds("Eq. (eg_MA_rn)");
    return out;
  }

  Scalar slope = e.slope();
  Scalar lower = sigma_tp(slope, e.p);
  Scalar upper = slope / e.p;
  bool f1 = false, f2 = false;
  Ord lo = Scalar::compare(e.s, lower, &f1);
  Ord hi = Scalar::compare(e.s, upper, &f2);
  if (lo == Ord::Greater && hi == Ord::Less) {
    out.shape = GrowthEnvelope::Shape::PowerLaw;
    out.exponent = -e.p.reciprocal() + e.s / slope;
    out.verdict = Verdict::holds("Thm. eg-rhoAs, Eq. (lar)");
  } else {
    out.verdict = Verdict::open("Remark after Thm. eg-rhoAs", "borderline cases on domains");
  }
  if (f1 || f2) out.verdict.with_note(kFuzzyNote);
  return out;
}

CompactnessExponents compactness_exponents(const EmbeddingQuery& query) {
  if (query.target.kind != Target::Kind::Space)
    throw std::invalid_argument("compactness exponents require a space target");
  EmbeddingQuery q = query;
  q.mode = EmbedMode::Compact;
  Verdict v = embeds(q);
  if (!v.affirmative())
    throw std::invalid_argument("the embedding is not compact: " + v.status_str() +
                                " (" + v.citation + ")");

  const SpaceDescriptor& a = query.source;
  const SpaceDescriptor& b = query.target.space;
  CompactnessExponents out;
  out.entropy_exponent = (a.s - b.s) / Scalar(a.n);

  Scalar sa = a.slope(), sb = b.slope();
  Scalar gap_p = a.p.reciprocal() - b.p.reciprocal();
  if (Scalar::compare(sa, sb) == Ord::Less && gap_p.sign() > 0) {
    Scalar low = sa * gap_p;
    Scalar high = Scalar(a.n) * gap_p;
    Scalar D = a.s - b.s;
    if (Scalar::compare(D, low) == Ord::Greater && Scalar::compare(D, high) != Ord::Greater) {
      out.bound_type = CompactnessExponents::Bound::TwoSidedUpToEps;
      out.alpha = (D - sa * gap_p) / (Scalar(a.n) - sa);
    }
  }
  return out;
}

Verdict spaces_equal(const SpaceDescriptor& a_in, const SpaceDescriptor& b_in) {
  a_in.require_valid();
  b_in.require_valid();
  if (a_in.n != b_in.n) throw std::invalid_argument("dimension mismatch");

  Canonical ca = canonicalize(a_in), cb = canonicalize(b_in);
  if (ca.is_holder && cb.is_holder) {
    if (Scalar::compare(ca.holder_exponent, cb.holder_exponent) == Ord::Equal)
      return Verdict::holds("Eq. (2.33)");
    return Verdict::fails("Eq. (2.33); Prop. 2.14");
  }
  if (ca.is_holder != cb.is_holder)
    return Verdict::fails("Eq. (2.33); Prop. 2.9");
  const SpaceDescriptor &a = ca.rep, &b = cb.rep;

  if (a == b) {
    std::string cite = ca.citation.empty() && cb.citation.empty()
                           ? "identical parameters"
                           : ca.citation + (cb.citation.empty() ? "" : "; " + cb.citation);
    return Verdict::holds(cite);
  }

  if (a.is_classical() && b.is_classical()) return Verdict::fails("Prop. 2.14");
  if (a.is_classical() != b.is_classical()) {
    if (a.is_zero_clan() || b.is_zero_clan())
      return Verdict::fails("Eq. (2.34)", "the 0-clan chains into the classical scale strictly");
    return Verdict::fails("Remark R6.18");
  }
  if (a.is_zero_clan() && b.is_zero_clan())
    return Verdict::open("Def. 2.11(iii)", "coincidences within the 0-clan are not settled");
  if (a.is_zero_clan() != b.is_zero_clan())
    return Verdict::fails("Eq. (2.34)");

  if (Scalar::compare(a.rho, b.rho) != Ord::Equal)
    return Verdict::fails("Thm. 7.1, Eq. (DDH-7)", "mutual inclusion forces equal slopes");

  bool a_supb = a.family == Family::B && a.flavor == Flavor::Sup;
  bool b_supb = b.family == Family::B && b.flavor == Flavor::Sup;
  if (!a_supb && !b_supb) {
    // Sub-B pairs, F pairs, and sub-B against F are all settled.
    if (a.family != b.family) return Verdict::fails("Thm. 2.16(ii)");
    return Verdict::fails("Thm. 2.16(i),(iii)");
  }
  if (a_supb && b_supb && a.rho > Scalar(-1) &&
      Scalar::compare(diff_dimension(a), diff_dimension(b)) != Ord::Equal)
    return Verdict::fails("Remark 2.19; Thm. 4.12", "distinct differential dimensions");
  if (a_supb != b_supb && a.family == Family::B && b.family == Family::B) {
    // sup-B against sub-B at equal parameters is strict for q < infinity.
    if (Scalar::compare(a.s, b.s) == Ord::Equal && Scalar::compare(a.p, b.p) == Ord::Equal &&
        Scalar::compare(a.q, b.q) == Ord::Equal)
      return Verdict::fails("Thm. 2.16(iv), Eq. (2.56)");
  }
  return Verdict::open("Conj. 2.18", "no further coincidences are expected but none is proven");
}

std::vector<ThresholdLine> threshold_lines(PredicateKind kind, const Scalar& rho, int n) {
  Scalar slope = rho.abs();
  if (Scalar::compare(rho, Scalar(-n)) == Ord::Equal) slope = Scalar(n);
  Scalar minr = Scalar::min(slope, Scalar(1));
  Scalar maxr = Scalar::max(slope, Scalar(1));
  std::vector<ThresholdLine> lines;
  auto sigma_line = [slope](const Scalar& invp) {
    return slope * Scalar::max(invp - Scalar(1), Scalar(0));
  };
  switch (kind) {
    case PredicateKind::EmbedLinfty:
    case PredicateKind::MultiplicationAlgebra:
    case PredicateKind::EmbedBmo:
      lines.push_back({"s = |rho|/p", [slope](const Scalar& invp) { return slope * invp; }});
      break;
    case PredicateKind::SubsetL1loc:
      lines.push_back({"s = sigma_p^{|rho|}", sigma_line});
      break;
    case PredicateKind::MemberDelta:
      lines.push_back({"s = |rho|/p - n",
                       [slope, n](const Scalar& invp) { return slope * invp - Scalar(n); }});
      break;
    case PredicateKind::MemberChiQ:
      lines.push_back({"s = min(|rho|,1)/p", [minr](const Scalar& invp) { return minr * invp; }});
      break;
    case PredicateKind::FunctionalChiQ:
      lines.push_back({"s = min(|rho|,1)/p - 1 + sigma_p^{max(|rho|,1)-1}",
                       [minr, maxr](const Scalar& invp) {
                         Scalar sig = (maxr - Scalar(1)) * Scalar::max(invp - Scalar(1), Scalar(0));
                         return minr * invp - Scalar(1) + sig;
                       }});
      break;
    case PredicateKind::Truncation:
      lines.push_back({"s = sigma_p^{|rho|}", sigma_line});
      lines.push_back({"s = 1 + min(|rho|,1)/p",
                       [minr](const Scalar& invp) { return Scalar(1) + minr * invp; }});
      break;
    case PredicateKind::HaarBasis: {
      if (slope <= Scalar(1)) {
        lines.push_back({"s = |rho|/p - 1",
                         [slope](const Scalar& invp) { return slope * invp - Scalar(1); }});
        lines.push_back({"s = min(1, |rho|/p)", [slope](const Scalar& invp) {
                           return Scalar::min(Scalar(1), slope * invp);
                         }});
      } else {
        lines.push_back({"s = max(1/p - 1, |rho|(1/p - 1))",
                         [slope](const Scalar& invp) {
                           return Scalar::max(invp - Scalar(1), slope * (invp - Scalar(1)));
                         }});
        lines.push_back({"s = min(1, 1/p)", [](const Scalar& invp) {
                           return Scalar::min(Scalar(1), invp);
                         }});
      }
      break;
    }
  }
  return lines;
}

Verdict evaluate_predicate(PredicateKind kind, const SpaceDescriptor& d) {
  switch (kind) {
    case PredicateKind::EmbedLinfty: return embeds({d, Target::linfty()});
    case PredicateKind::SubsetL1loc: return embeds({d, Target::l1loc()});
    case PredicateKind::MemberDelta: return member(Element::Delta, d);
    case PredicateKind::MemberChiQ: return member(Element::ChiQ, d);
    case PredicateKind::FunctionalChiQ: return functional_chiQ(d);
    case PredicateKind::MultiplicationAlgebra: return property(d, Property::MultiplicationAlgebra);
    case PredicateKind::Truncation: return property(d, Property::Truncation);
    case PredicateKind::HaarBasis: return property(d, Property::HaarBasis);
    case PredicateKind::EmbedBmo: return embeds({d, Target::bmo()});
  }
  throw std::logic_error("unknown predicate");
}

}  // namespace mskit
