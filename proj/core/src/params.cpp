#include "mskit/params.hpp"

namespace mskit {

Scalar sigma_tp(const Scalar& t, const Scalar& p) {
  if (t.sign() < 0) throw std::invalid_argument("sigma_tp requires t >= 0");
  if (p.sign() <= 0) throw std::invalid_argument("sigma_tp requires p > 0");
  Scalar invp = p.reciprocal();
  return t * (Scalar::max(invp, Scalar(1)) - Scalar(1));
}

Scalar diff_dimension(const SpaceDescriptor& d) {
  d.require_valid();
  return d.s - d.slope() / d.p;
}

Scalar convert(const SpaceDescriptor& d, ParamTarget target) {
  d.require_valid();
  switch (target) {
    case ParamTarget::MorreyU:
      if (d.rho.sign() >= 0)
        throw std::invalid_argument("Morrey u is defined for rho < 0 only");
      return -(Scalar(d.n) * d.p) / d.rho;
    case ParamTarget::Tau:
      return (Scalar(1) + d.rho / Scalar(d.n)) / d.p;
    case ParamTarget::HybridR:
      return d.rho / d.p;
  }
  throw std::logic_error("unknown parameter target");
}

Scalar morrey_u_to_rho(const Scalar& u, const Scalar& p, int n) {
  if (u.sign() <= 0) throw std::invalid_argument("Morrey u must be positive");
  return -(Scalar(n) * p) / u;
}

Canonical canonicalize(const SpaceDescriptor& d) {
  d.require_valid();
  Canonical c;
  c.rep = d;
  auto cite = [&c](const std::string& anchor) {
    c.citation = c.citation.empty() ? anchor : c.citation + "; " + anchor;
  };

  if (d.flavor == Flavor::Classical) {
    // Classical F with q = p collapses into the B scale; C^s at p = q = inf.
    if (c.rep.family == Family::F && !c.rep.p.is_inf() &&
        Scalar::compare(c.rep.q, c.rep.p) == Ord::Equal) {
      c.rep.family = Family::B;
      cite("Eq. (2.48)");
    }
    if (c.rep.family == Family::F && c.rep.p.is_inf() && c.rep.q.is_inf()) {
      c.rep.family = Family::B;
      cite("Eq. (2.16)");
    }
    return c;
  }

  // rho = -n: both flavors are the classical space.
  if (Scalar::compare(d.rho, Scalar(-d.n)) == Ord::Equal) {
    c.rep.flavor = Flavor::Classical;
    cite("Eq. (2.32)");
    return canonicalize(c.rep).with_front(c.citation);
  }

  // Positive slope: the sup flavor collapses to a Hoelder-Zygmund space.
  if (d.rho.sign() > 0) {
    c.is_holder = true;
    c.holder_exponent = d.s + d.rho / d.p;
    cite("Eq. (2.33)");
    return c;
  }

  // The 0-clan: F coincides with the classical F_{infty} scale, B with
  // q = infinity is the Hoelder-Zygmund space C^s, and B with q = p joins
  // the F_{infty} scale as well. The remaining B spaces with q < infinity
  // form the genuine 0-clan.
  if (d.rho.is_zero()) {
    if (d.family == Family::F) {
      c.rep.flavor = Flavor::Classical;
      c.rep.p = Scalar::infinity();
      c.rep.rho = Scalar(-d.n);
      cite("Eq. (2.35)");
      return canonicalize(c.rep).with_front(c.citation);
    }
    if (d.q.is_inf()) {
      c.rep.flavor = Flavor::Classical;
      c.rep.p = Scalar::infinity();
      c.rep.rho = Scalar(-d.n);
      cite("Eq. (2.34)");
      c.note = "q = inf at rho = 0 aliases the classical B_{inf,inf} scale (Remark 2.10)";
      return canonicalize(c.rep).with_front(c.citation, c.note);
    }
    if (Scalar::compare(d.q, d.p) == Ord::Equal) {
      c.rep.family = Family::F;
      c.rep.flavor = Flavor::Classical;
      c.rep.p = Scalar::infinity();
      c.rep.rho = Scalar(-d.n);
      cite("Eq. (2.36)");
      return c;
    }
    c.rep.flavor = Flavor::Sup;
    return c;
  }

  // Interior clan, -n < rho < 0. The two F flavors coincide; sup is the
  // canonical one. A sub B space with q = infinity equals its sup twin, and
  // sup B with q = p equals sup F with q = p (B canonical).
  if (d.family == Family::F && d.flavor == Flavor::Sub) {
    c.rep.flavor = Flavor::Sup;
    cite("Eq. (2.42)");
  }
  if (c.rep.family == Family::B && c.rep.flavor == Flavor::Sub && c.rep.q.is_inf()) {
    c.rep.flavor = Flavor::Sup;
    cite("Eq. (2.57)");
  }
  if (c.rep.family == Family::F && c.rep.flavor == Flavor::Sup &&
      Scalar::compare(c.rep.q, c.rep.p) == Ord::Equal) {
    c.rep.family = Family::B;
    cite("Eq. (2.55)");
  }
  return c;
}

Canonical Canonical::with_front(const std::string& front, const std::string& note_in) {
  Canonical out = *this;
  if (!front.empty())
    out.citation = out.citation.empty() ? front : front + "; " + out.citation;
  if (!note_in.empty())
    out.note = out.note.empty() ? note_in : note_in + "; " + out.note;
  return out;
}

}  // namespace mskit
