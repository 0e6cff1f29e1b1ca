#pragma once

#include <functional>
#include <optional>

#include "mskit/params.hpp"
#include "mskit/space.hpp"

namespace mskit {

// Target of an embedding query.
struct Target {
  enum class Kind { Space, Linfty, ContinuousC, L1loc, Lr, Bmo, HolderZygmund };

  Kind kind = Kind::Linfty;
  SpaceDescriptor space;     // Kind::Space
  Scalar r = Scalar::infinity();  // Kind::Lr
  Scalar sigma = Scalar(0);  // Kind::HolderZygmund

  static Target space_of(const SpaceDescriptor& d) {
    Target t;
    t.kind = Kind::Space;
    t.space = d;
    return t;
  }
  static Target linfty() { return Target{}; }
  static Target continuous() { return Target{Kind::ContinuousC, {}, Scalar::infinity(), Scalar(0)}; }
  static Target l1loc() { return Target{Kind::L1loc, {}, Scalar::infinity(), Scalar(0)}; }
  static Target lr(const Scalar& r) { return Target{Kind::Lr, {}, r, Scalar(0)}; }
  static Target bmo() { return Target{Kind::Bmo, {}, Scalar::infinity(), Scalar(0)}; }
  static Target holder(const Scalar& sigma) {
    return Target{Kind::HolderZygmund, {}, Scalar::infinity(), sigma};
  }
};

enum class Ground { RnWhole, BoundedDomain };
enum class EmbedMode { Continuous, Compact };

struct EmbeddingQuery {
  SpaceDescriptor source;
  Target target;
  Ground ground = Ground::RnWhole;
  EmbedMode mode = EmbedMode::Continuous;
};

// Theorem-backed decision for an embedding / inclusion query.
Verdict embeds(const EmbeddingQuery& query);

enum class Element { Delta, ChiQ };

// Membership of the delta distribution / the characteristic function of the
// unit cube in the given space.
Verdict member(Element element, const SpaceDescriptor& d);

// Whether chi_Q generates a bounded linear functional on the space.
Verdict functional_chiQ(const SpaceDescriptor& d);

enum class Property {
  MultiplicationAlgebra,
  Truncation,
  HaarBasis,
  Fatou,
  SmoothMultiplier,
  Diffeomorphism,
  HalfSpaceExtension,
};

Verdict property(const SpaceDescriptor& d, Property which);

struct TraceResult {
  Verdict verdict;
  std::optional<SpaceOrMarker> target;  // trace space when settled
  bool extension_exists = false;        // bounded linear extension operator
};

// Trace on the coordinate hyperplane (dimension drops by one).
TraceResult trace(const SpaceDescriptor& d);

// Smoothness lift: s -> s + shift, everything else unchanged.
SpaceDescriptor lift(const SpaceDescriptor& d, const Scalar& shift);

struct InterpolationMethod {
  enum class Kind { RealWithQ, PlusMinus };
  Kind kind = Kind::RealWithQ;
  Scalar q = Scalar(1);  // fine index of the real-method result
};

struct InterpolationResult {
  Verdict verdict;
  std::optional<SpaceDescriptor> space;
};

InterpolationResult interpolate(const SpaceDescriptor& d1, const SpaceDescriptor& d2,
                                const Scalar& theta, const InterpolationMethod& method);

struct GrowthEnvelope {
  enum class Shape { InfiniteEverywhere, PowerLaw, LogLaw, Bounded };
  Verdict verdict;
  std::optional<Shape> shape;
  Scalar exponent = Scalar(0);  // PowerLaw / LogLaw exponent
};

GrowthEnvelope growth_envelope(const SpaceDescriptor& d, Ground ground);

struct CompactnessExponents {
  Scalar entropy_exponent = Scalar(0);  // e_k ~ k^{-exponent}
  enum class Bound { Exact, TwoSidedUpToEps };
  Bound bound_type = Bound::Exact;
  std::optional<Scalar> alpha;  // exponent of the eps-wide two-sided bound
};

CompactnessExponents compactness_exponents(const EmbeddingQuery& query);

// Coincidence of two spaces as sets (with equivalent quasi-norms).
Verdict spaces_equal(const SpaceDescriptor& a, const SpaceDescriptor& b);

// A breaking line s = f(1/p) in the (1/p, s)-diagram, used for diagram
// overlays and the slope-rule meta checks.
struct ThresholdLine {
  std::string label;                          // printable formula
  std::function<Scalar(const Scalar&)> at;    // s as a function of 1/p
};

enum class PredicateKind {
  EmbedLinfty,
  SubsetL1loc,
  MemberDelta,
  MemberChiQ,
  FunctionalChiQ,
  MultiplicationAlgebra,
  Truncation,
  HaarBasis,
  EmbedBmo,
};

// Breaking lines of a predicate for fixed slope data (rho, n).
std::vector<ThresholdLine> threshold_lines(PredicateKind kind, const Scalar& rho, int n);

// Evaluates a predicate for a descriptor; used by sweeps and diagrams.
Verdict evaluate_predicate(PredicateKind kind, const SpaceDescriptor& d);

}  // namespace mskit
