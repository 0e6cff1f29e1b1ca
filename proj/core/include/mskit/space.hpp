#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mskit/scalar.hpp"

namespace mskit {

enum class Family { B, F };
enum class Flavor { Sub, Sup, Classical };

// One Morrey smoothness space. The sub flavor puts the outer q-sum over
// levels with an inner sup over dyadic cubes; the sup flavor reverses the
// two. Classical spaces are modeled as rho = -n, the slope of the classical
// breaking lines.
struct SpaceDescriptor {
  Family family = Family::B;
  Flavor flavor = Flavor::Sup;
  Scalar s = Scalar(0);
  Scalar p = Scalar(1);
  Scalar q = Scalar(1);
  Scalar rho = Scalar(-1);
  int n = 1;

  // |rho| as the slope quantity (n for Classical).
  Scalar slope() const { return flavor == Flavor::Classical ? Scalar(n) : rho.abs(); }

  bool is_classical() const { return flavor == Flavor::Classical; }
  bool is_zero_clan() const { return flavor != Flavor::Classical && rho.is_zero(); }
  // Strictly interior slope parameter: -n < rho < 0.
  bool is_clan() const {
    return flavor != Flavor::Classical && rho.sign() < 0 && rho > Scalar(-n);
  }

  // Returns an error message for the first violated invariant, if any.
  std::optional<std::string> invalid_reason() const;
  void require_valid() const;

  std::string str() const;

  friend bool operator==(const SpaceDescriptor& a, const SpaceDescriptor& b) {
    return a.family == b.family && a.flavor == b.flavor && a.n == b.n &&
           Scalar::compare(a.s, b.s) == Ord::Equal && Scalar::compare(a.p, b.p) == Ord::Equal &&
           Scalar::compare(a.q, b.q) == Ord::Equal && Scalar::compare(a.rho, b.rho) == Ord::Equal;
  }
};

struct Verdict {
  enum class Status { Holds, Fails, HoldsUnder, Open };

  Status status = Status::Open;
  std::vector<std::string> conditions;  // fine-parameter conditions for HoldsUnder
  std::string citation;
  std::string note;

  bool affirmative() const { return status == Status::Holds || status == Status::HoldsUnder; }

  static Verdict holds(std::string cite, std::string note = {}) {
    return {Status::Holds, {}, std::move(cite), std::move(note)};
  }
  static Verdict fails(std::string cite, std::string note = {}) {
    return {Status::Fails, {}, std::move(cite), std::move(note)};
  }
  static Verdict holds_under(std::vector<std::string> conds, std::string cite, std::string note = {}) {
    return {Status::HoldsUnder, std::move(conds), std::move(cite), std::move(note)};
  }
  static Verdict open(std::string cite, std::string note = {}) {
    return {Status::Open, {}, std::move(cite), std::move(note)};
  }

  Verdict& with_note(const std::string& extra) {
    if (!extra.empty()) note = note.empty() ? extra : note + "; " + extra;
    return *this;
  }

  std::string status_str() const;
  std::string to_json() const;
};

// Either a space descriptor or a Hoelder-Zygmund marker C^sigma.
struct SpaceOrMarker {
  bool is_holder = false;
  Scalar holder_exponent = Scalar(0);
  SpaceDescriptor space;

  static SpaceOrMarker holder(const Scalar& sigma) {
    SpaceOrMarker m;
    m.is_holder = true;
    m.holder_exponent = sigma;
    return m;
  }
  static SpaceOrMarker of(const SpaceDescriptor& d) {
    SpaceOrMarker m;
    m.space = d;
    return m;
  }
  std::string str() const;
};

// JSON round-trip for descriptors: {family, flavor, s, p, q, rho, n} with
// "inf" for infinity and "num/den" strings for exact rationals.
std::string descriptor_to_json(const SpaceDescriptor& d);
SpaceDescriptor descriptor_from_json(const std::string& text);

}  // namespace mskit
