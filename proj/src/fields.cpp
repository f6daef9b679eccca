#include "spanbound/fields.hpp"

#include <cctype>

namespace spanbound {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PrimeField::value_type PrimeField::inv(value_type a) const {
  if (a == 0) fail(ErrorKind::ZeroInverse, "inverse of 0 in " + describe());
  // extended Euclid on (a, p)
  std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += p_;
  return static_cast<value_type>(t);
}

mpq_class parse_rational(std::string_view text) {
  std::string s(text);
  auto begin = s.find_first_not_of(" \t");
  auto end = s.find_last_not_of(" \t");
  if (begin == std::string::npos) fail(ErrorKind::SyntaxError, "empty rational");
  s = s.substr(begin, end - begin + 1);
  mpq_class q;
  bool ok = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    bool sign = (c == '-' || c == '+') && (i == 0 || s[i - 1] == '/');
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '/' || sign)) ok = false;
  }
  if (!ok || q.set_str(s, 10) != 0) fail(ErrorKind::SyntaxError, "not a rational number: '" + s + "'");
  if (q.get_den() == 0) fail(ErrorKind::ZeroDenominator, "zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace spanbound
