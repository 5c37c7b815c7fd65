#include "ikp/rational.hpp"

#include <algorithm>
#include <cctype>

namespace ikp {

long long to_int(const Rational& r) {
  if (!is_integral(r)) throw std::invalid_argument("to_int: rational is not integral");
  return static_cast<long long>(numerator(r));
}

namespace {

Integer parse_digits(const std::string& s, const std::string& what) {
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); }))
    throw std::invalid_argument("malformed number: " + what);
  // Strip leading zeros; the integer constructor would read "08" as octal.
  size_t first = s.find_first_not_of('0');
  if (first == std::string::npos) return Integer(0);
  return Integer(s.substr(first));
}

}  // namespace

Rational parse_rational(const std::string& s) {
  std::string t = s;
  bool neg = false;
  if (!t.empty() && (t[0] == '-' || t[0] == '+')) {
    neg = t[0] == '-';
    t.erase(t.begin());
  }
  if (t.empty()) throw std::invalid_argument("malformed number: '" + s + "'");

  Rational value;
  auto slash = t.find('/');
  auto dot = t.find('.');
  if (slash != std::string::npos) {
    Integer num = parse_digits(t.substr(0, slash), s);
    Integer den = parse_digits(t.substr(slash + 1), s);
    if (den == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
    value = Rational(num, den);
  } else if (dot != std::string::npos) {
    std::string ip = t.substr(0, dot);
    std::string fp = t.substr(dot + 1);
    if (ip.empty() && fp.empty()) throw std::invalid_argument("malformed number: '" + s + "'");
    Integer num = ip.empty() ? Integer(0) : parse_digits(ip, s);
    Integer scale = 1;
    if (!fp.empty()) {
      Integer frac = parse_digits(fp, s);
      for (size_t i = 0; i < fp.size(); ++i) scale *= 10;
      num = num * scale + frac;
    }
    value = Rational(num, scale);
  } else {
    value = Rational(parse_digits(t, s));
  }
  return neg ? -value : value;
}

std::string format_rational(const Rational& r) {
  Integer num = numerator(r);
  Integer den = denominator(r);
  if (den == 1) return num.str();

  // Finite decimal expansion exists iff den = 2^a 5^b.
  Integer d = den;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) return num.str() + "/" + den.str();

  int digits = std::max(twos, fives);
  Integer scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  Integer scaled = num * scale / den;  // exact by construction
  bool neg = scaled < 0;
  std::string body = (neg ? Integer(-scaled) : scaled).str();
  if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  return (neg ? "-" : "") + body;
}

double approx(const Rational& r) { return static_cast<double>(r); }

}  // namespace ikp
