#include "pdt/rational.hpp"

#include <cctype>
#include <functional>
#include <stdexcept>

namespace pdt {

Rational::Rational(long numerator, long denominator) : value_(numerator, denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) {
  if (value_.get_den() == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

std::optional<Rational> Rational::parse(std::string_view text) {
  const auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (const char c : s) {
      if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    }
    return true;
  };
  bool negative = false;
  if (!text.empty() && text.front() == '-') {
    negative = true;
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!digits(num) || !digits(den)) return std::nullopt;
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (negative) n = -n;
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw std::domain_error("rational division by zero");
  value_ /= other.value_;
  return *this;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

std::string Rational::str() const {
  if (is_integer()) return numerator();
  return numerator() + "/" + denominator();
}

std::size_t Rational::hash() const {
  const std::size_t h = std::hash<std::string>{}(numerator());
  return h ^ (std::hash<std::string>{}(denominator()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace pdt
