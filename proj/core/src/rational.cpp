#include "polyalg/rational.hpp"

#include <functional>

namespace polyalg {

Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && s.front() == ' ') s.erase(s.begin());
  while (!s.empty() && s.back() == ' ') s.pop_back();
  if (s.empty()) throw InvalidArgument("empty rational literal");
  if (s.front() == '+') s.erase(s.begin());
  auto valid_int = [](std::string_view part, bool allow_sign) {
    if (part.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && part[0] == '-') i = 1;
    if (i == part.size()) return false;
    for (; i < part.size(); ++i)
      if (part[i] < '0' || part[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s, true)) throw InvalidArgument("malformed rational: " + s);
    return Rational(Integer(s));
  }
  std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw InvalidArgument("malformed rational: " + s);
  Integer d(den);
  if (d == 0) throw InvalidArgument("zero denominator: " + s);
  Rational r(Integer(num), d);
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::size_t hash_value(const Rational& value) {
  auto mix = [](std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
  };
  std::size_t h = 0;
  for (const mpz_srcptr z : {value.get_num_mpz_t(), value.get_den_mpz_t()}) {
    h = mix(h, static_cast<std::size_t>(mpz_sgn(z) + 1));
    for (std::size_t i = 0; i < mpz_size(z); ++i) h = mix(h, mpz_getlimbn(z, i));
  }
  return h;
}

Rational binomial(const Rational& t, int k) {
  if (k < 0) return 0;
  Rational result = 1;
  for (int i = 0; i < k; ++i) result *= (t - i);
  result /= Rational(factorial(k));
  return result;
}

Integer factorial(int n) {
  Integer r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

Integer double_factorial(int n) {
  Integer r = 1;
  for (int i = n; i > 1; i -= 2) r *= i;
  return r;
}

Rational power(const Rational& base, int exponent) {
  Rational result = 1;
  if (exponent < 0) {
    if (base == 0) throw InvalidArgument("zero to a negative power");
    for (int i = 0; i < -exponent; ++i) result /= base;
    return result;
  }
  for (int i = 0; i < exponent; ++i) result *= base;
  return result;
}

Rational ratio(long num, long den) {
  if (den == 0) throw InvalidArgument("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace polyalg
