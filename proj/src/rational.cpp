#include "g2/rational.hpp"

#include <ostream>

#include "g2/errors.hpp"

namespace g2 {

Rational::Rational(const BigInt& numerator, const BigInt& denominator) {
  if (denominator == 0) throw ValidationError("rational with zero denominator");
  q_ = mpq_class(numerator, denominator);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string s(text);
  const auto slash = s.find('/');
  BigInt num;
  BigInt den = 1;
  auto read = [&](const std::string& part, BigInt& out) {
    if (part.empty() || out.set_str(part, 10) != 0) {
      throw ValidationError("malformed rational '" + s + "'");
    }
  };
  if (slash == std::string::npos) {
    read(s, num);
  } else {
    read(s.substr(0, slash), num);
    read(s.substr(slash + 1), den);
  }
  return {num, den};
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw ValidationError("division by zero");
  q_ /= o.q_;
  return *this;
}

BigInt Rational::to_integer() const {
  if (!is_integer()) throw ConsistencyError("expected an integer, got " + to_string());
  return q_.get_num();
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::string group_digits(const BigInt& value) {
  std::string digits = BigInt(abs(value)).get_str();
  std::string out;
  const auto len = digits.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (i > 0 && (len - i) % 3 == 0) out.push_back(',');
    out.push_back(digits[i]);
  }
  return value < 0 ? "-" + out : out;
}

}  // namespace g2
