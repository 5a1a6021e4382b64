#include "rsched/rational.hpp"

#include "rsched/error.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace rsched {

namespace {

BigInt parse_integer(std::string_view text) {
  if (text.empty()) throw ParseError(0, "empty number");
  std::size_t pos = 0;
  bool negative = false;
  if (text[0] == '-' || text[0] == '+') {
    negative = text[0] == '-';
    pos = 1;
  }
  if (pos == text.size()) throw ParseError(0, "malformed number '" + std::string(text) + "'");
  BigInt value = 0;
  for (; pos < text.size(); ++pos) {
    const char c = text[pos];
    if (c < '0' || c > '9') throw ParseError(0, "malformed number '" + std::string(text) + "'");
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) : Rational(BigInt(num), BigInt(den)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_ = den < 0 ? boost::multiprecision::cpp_rational(-num, -den) : boost::multiprecision::cpp_rational(num, den);
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const BigInt num = parse_integer(text.substr(0, slash));
  const std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw ParseError(0, "signed denominator in '" + std::string(text) + "'");
  const BigInt den = parse_integer(den_text);
  if (den == 0) throw ParseError(0, "zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

BigInt Rational::numerator() const { return boost::multiprecision::numerator(value_); }
BigInt Rational::denominator() const { return boost::multiprecision::denominator(value_); }

bool Rational::is_integer() const { return denominator() == 1; }

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw std::overflow_error("rational " + to_string() + " is not an integer");
  const BigInt n = numerator();
  if (n > std::numeric_limits<std::int64_t>::max() || n < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("rational " + to_string() + " exceeds 64 bits");
  return static_cast<std::int64_t>(n);
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw std::domain_error("zero raised to a negative power");
    return Rational(1) / pow(-exponent);
  }
  Rational result(1);
  Rational base = *this;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1U) result *= base;
    base *= base;
    e >>= 1U;
  }
  return result;
}

std::string Rational::to_string() const {
  const BigInt d = denominator();
  if (d == 1) return numerator().str();
  return numerator().str() + "/" + d.str();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (a.value_ > b.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace rsched
