#include "mskit/scalar.hpp"

#include <cctype>
#include <cstdlib>

namespace mskit {

double& comparison_tolerance() {
  static double tol = 1e-9;
  return tol;
}

Scalar Scalar::parse(const std::string& text) {
  std::string t;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) t.push_back(c);
  if (t.empty()) throw std::invalid_argument("empty numeric literal");
  if (t == "inf" || t == "+inf" || t == "infinity") return Scalar::infinity();

  auto slash = t.find('/');
  if (slash != std::string::npos) {
    std::size_t pos1 = 0, pos2 = 0;
    long long num = std::stoll(t.substr(0, slash), &pos1);
    long long den = std::stoll(t.substr(slash + 1), &pos2);
    if (pos1 != slash || pos2 != t.size() - slash - 1)
      throw std::invalid_argument("malformed rational literal: " + text);
    return Scalar(Rational(num, den));
  }
  if (t.find('.') == std::string::npos && t.find('e') == std::string::npos &&
      t.find('E') == std::string::npos) {
    std::size_t pos = 0;
    long long v = std::stoll(t, &pos);
    if (pos != t.size()) throw std::invalid_argument("malformed integer literal: " + text);
    return Scalar(Rational(v));
  }
  std::size_t pos = 0;
  double v = std::stod(t, &pos);
  if (pos != t.size()) throw std::invalid_argument("malformed numeric literal: " + text);
  return Scalar(v);
}

}  // namespace mskit
