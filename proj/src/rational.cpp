#include "brouwer1d/rational.hpp"

#include <cassert>
#include <cctype>
#include <ostream>

namespace brouwer1d {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw InvalidInput("rational with zero denominator");
  canonicalize();
}

void Rational::canonicalize() {
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  if (num_ == 0) {
    den_ = 1;
    return;
  }
  BigInt g = gcd(num_, den_);
  if (g != 1) {
    mpz_divexact(num_.get_mpz_t(), num_.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational Rational::parse(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  std::string_view num_text = body;
  std::string_view den_text;
  if (auto slash = body.find('/'); slash != std::string_view::npos) {
    num_text = body.substr(0, slash);
    den_text = body.substr(slash + 1);
    if (!all_digits(den_text)) {
      throw InvalidInput("malformed rational literal '" + std::string(text) + "'");
    }
  }
  if (!all_digits(num_text)) {
    throw InvalidInput("malformed rational literal '" + std::string(text) + "'");
  }
  BigInt num(std::string(num_text), 10);
  BigInt den = den_text.empty() ? BigInt(1) : BigInt(std::string(den_text), 10);
  if (den == 0) {
    throw InvalidInput("zero denominator in literal '" + std::string(text) + "'");
  }
  if (negative) num = -num;
  return Rational(std::move(num), std::move(den));
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.get_str();
  return num_.get_str() + "/" + den_.get_str();
}

std::string Rational::to_decimal(int digits) const {
  if (digits < 0) throw InvalidInput("negative digit count");
  BigInt magnitude = ::abs(num_);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  // Truncation toward zero of |x| * 10^digits.
  BigInt scaled = magnitude * scale / den_;
  BigInt int_part = scaled / scale;
  BigInt frac_part = scaled % scale;

  std::string out;
  if (num_ < 0) out += '-';
  out += int_part.get_str();
  if (digits > 0) {
    std::string frac = frac_part.get_str();
    out += '.';
    out.append(static_cast<std::size_t>(digits) - frac.size(), '0');
    out += frac;
  }
  return out;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), num_.get_mpz_t(), den_.get_mpz_t());
  return q;
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  canonicalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.num_ == 0) throw ArithmeticError("division by zero");
  BigInt rnum = rhs.num_;
  num_ *= rhs.den_;
  den_ *= rnum;
  canonicalize();
  return *this;
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  BigInt lhs = a.num_ * b.den_;
  BigInt rhs = b.num_ * a.den_;
  int r = ::cmp(lhs, rhs);
  if (r < 0) return std::strong_ordering::less;
  if (r > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Ordering cmp(const Rational& a, const Rational& b) {
  BigInt lhs = a.numerator() * b.denominator();
  BigInt rhs = b.numerator() * a.denominator();
  int r = ::cmp(lhs, rhs);
  if (r < 0) return Ordering::less;
  if (r > 0) return Ordering::greater;
  return Ordering::equal;
}

Sqrt2Side cmp_sqrt2(const Rational& x) {
  if (x.sign() <= 0) throw InvalidInput("cmp_sqrt2 requires a positive argument");
  // x = p/q in lowest terms; x^2 < 2  <=>  p^2 < 2 q^2.
  BigInt lhs = x.numerator() * x.numerator();
  BigInt rhs = 2 * x.denominator() * x.denominator();
  int r = ::cmp(lhs, rhs);
  assert(r != 0 && "2 is not the square of a rational");
  if (r == 0) throw std::logic_error("rational square equal to 2");
  return r < 0 ? Sqrt2Side::below : Sqrt2Side::above;
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }
Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace brouwer1d
