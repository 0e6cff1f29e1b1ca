#pragma once

#include "mskit/space.hpp"

namespace mskit {

// sigma^t_p = t (max(1/p, 1) - 1). Vanishes for p >= 1.
Scalar sigma_tp(const Scalar& t, const Scalar& p);

// s - |rho|/p, the differential dimension; s - n/p for Classical.
Scalar diff_dimension(const SpaceDescriptor& d);

enum class ParamTarget { MorreyU, Tau, HybridR };

// Conversions between the slope parameterisation and the Morrey-u, tau and
// hybrid-r parameterisations:
//   u = -n p / rho   (requires rho < 0),
//   tau = (1 + rho/n) / p,
//   r = rho / p.
Scalar convert(const SpaceDescriptor& d, ParamTarget target);

// Inverse of the MorreyU conversion: rho = -n p / u.
Scalar morrey_u_to_rho(const Scalar& u, const Scalar& p, int n);

struct Canonical {
  bool is_holder = false;          // space collapsed to C^{sigma}
  Scalar holder_exponent = Scalar(0);
  SpaceDescriptor rep;             // canonical representative otherwise
  std::string citation;
  std::string note;

  SpaceOrMarker as_marker() const {
    return is_holder ? SpaceOrMarker::holder(holder_exponent) : SpaceOrMarker::of(rep);
  }
  Canonical with_front(const std::string& front, const std::string& note_in = {});
};

// Rewrites a descriptor to the canonical representative of its coincidence
// class: rho = -n becomes Classical; sup flavor with rho > 0 collapses to
// C^{s + rho/p}; the two F flavors are identified (sup is canonical); a sub
// B space with q = infinity is identified with its sup twin; B and F agree
// when q = p (B is canonical); the 0-clan F and q = p / q = infinity cases
// collapse into the classical scale.
Canonical canonicalize(const SpaceDescriptor& d);

}  // namespace mskit
