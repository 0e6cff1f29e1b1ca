#include "mskit/space.hpp"

#include <nlohmann/json.hpp>

namespace mskit {

namespace {

nlohmann::json scalar_to_json(const Scalar& v) {
  if (v.is_inf()) return "inf";
  if (v.is_rational()) {
    if (v.rat().is_integer()) return v.rat().num();
    return v.rat().str();
  }
  return v.to_double();
}

Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(Rational(j.get<std::int64_t>()));
  if (j.is_number_float()) return Scalar(j.get<double>());
  throw std::invalid_argument("expected a number, \"num/den\" or \"inf\"");
}

}  // namespace

std::optional<std::string> SpaceDescriptor::invalid_reason() const {
  if (n < 1) return "dimension n must be a positive integer";
  if (p.sign() <= 0) return "integrability p must be positive";
  if (q.sign() <= 0) return "summability q must be positive";
  if (p.is_inf() && flavor != Flavor::Classical)
    return "p = inf is only admitted for classical spaces";
  switch (flavor) {
    case Flavor::Sub:
      if (rho.is_inf() || rho < Scalar(-n) || rho.sign() >= 0)
        return "sub flavor requires -n <= rho < 0";
      break;
    case Flavor::Sup:
      if (rho.is_inf() || rho < Scalar(-n)) return "sup flavor requires rho >= -n";
      break;
    case Flavor::Classical:
      if (rho != Scalar(-n)) return "classical spaces carry rho = -n by convention";
      break;
  }
  return std::nullopt;
}

void SpaceDescriptor::require_valid() const {
  if (auto why = invalid_reason()) throw std::invalid_argument(*why);
}

std::string SpaceDescriptor::str() const {
  std::string fam = family == Family::B ? "B" : "F";
  std::string head;
  switch (flavor) {
    case Flavor::Sub: head = "Lambda_{" + rho.str() + "} "; break;
    case Flavor::Sup: head = "Lambda^{" + rho.str() + "} "; break;
    case Flavor::Classical: head = ""; break;
  }
  return head + fam + "^{" + s.str() + "}_{" + p.str() + "," + q.str() + "}(R^" +
         std::to_string(n) + ")";
}

std::string Verdict::status_str() const {
  switch (status) {
    case Status::Holds: return "holds";
    case Status::Fails: return "fails";
    case Status::HoldsUnder: return "holds_under";
    case Status::Open: return "open";
  }
  return "open";
}

std::string Verdict::to_json() const {
  nlohmann::json j;
  j["status"] = status_str();
  j["conditions"] = conditions;
  j["citation"] = citation;
  j["note"] = note;
  return j.dump();
}

std::string SpaceOrMarker::str() const {
  if (is_holder) return "C^{" + holder_exponent.str() + "}";
  return space.str();
}

std::string descriptor_to_json(const SpaceDescriptor& d) {
  nlohmann::json j;
  j["family"] = d.family == Family::B ? "B" : "F";
  j["flavor"] = d.flavor == Flavor::Sub ? "sub" : (d.flavor == Flavor::Sup ? "sup" : "classical");
  j["s"] = scalar_to_json(d.s);
  j["p"] = scalar_to_json(d.p);
  j["q"] = scalar_to_json(d.q);
  j["rho"] = scalar_to_json(d.rho);
  j["n"] = d.n;
  return j.dump();
}

SpaceDescriptor descriptor_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  SpaceDescriptor d;
  std::string fam = j.at("family").get<std::string>();
  if (fam == "B" || fam == "b")
    d.family = Family::B;
  else if (fam == "F" || fam == "f")
    d.family = Family::F;
  else
    throw std::invalid_argument("unknown family: " + fam);
  std::string fl = j.at("flavor").get<std::string>();
  if (fl == "sub")
    d.flavor = Flavor::Sub;
  else if (fl == "sup")
    d.flavor = Flavor::Sup;
  else if (fl == "classical")
    d.flavor = Flavor::Classical;
  else
    throw std::invalid_argument("unknown flavor: " + fl);
  d.s = scalar_from_json(j.at("s"));
  d.p = scalar_from_json(j.at("p"));
  d.q = scalar_from_json(j.at("q"));
  d.n = j.at("n").get<int>();
  if (j.contains("rho"))
    d.rho = scalar_from_json(j.at("rho"));
  else if (d.flavor == Flavor::Classical)
    d.rho = Scalar(-d.n);
  d.require_valid();
  return d;
}

}  // namespace mskit
