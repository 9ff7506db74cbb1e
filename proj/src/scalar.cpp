#include "curalg/scalar.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

namespace curalg {

Scalar parse_scalar(std::string_view text) {
  static const std::regex pattern(R"(\s*([+-]?)(\d+)(?:/(\d+))?\s*)");
  std::match_results<std::string_view::const_iterator> m;
  if (!std::regex_match(text.begin(), text.end(), m, pattern)) {
    throw std::invalid_argument("malformed rational '" + std::string(text) + "'");
  }
  mpz_class num(m[2].str(), 10);
  mpz_class den(1);
  if (m[3].matched) {
    den = mpz_class(m[3].str(), 10);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  }
  if (m[1].str() == "-") num = -num;
  Scalar value(num, den);
  value.canonicalize();
  return value;
}

std::string format_scalar(const Scalar& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

bool is_zero(const Vector& v) {
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return sgn(s) == 0; });
}

}  // namespace curalg
