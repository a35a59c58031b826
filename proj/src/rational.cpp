#include "pollctl/rational.hpp"

#include <cctype>
#include <cstdlib>

#include "pollctl/error.hpp"

namespace pollctl {

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

BigInt pow10(long long e) {
  BigInt r = 1;
  for (long long i = 0; i < e; ++i) r *= 10;
  return r;
}

// cpp_int's string constructor follows C++ literal rules, so "0375" would be
// read as octal; force decimal by dropping leading zeros.
BigInt decimal_bigint(const std::string& digits) {
  std::size_t first = digits.find_first_not_of('0');
  if (first == std::string::npos) return BigInt(0);
  return BigInt(digits.substr(first));
}

[[noreturn]] void bad_number(const std::string& text) {
  throw Error(Errc::MALFORMED_DOCUMENT, "not a numeric literal: '" + text + "'");
}

}  // namespace

Rational rational_from_string(const std::string& text) {
  std::string s = text;
  // trim
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  if (s.empty()) bad_number(text);

  bool negative = false;
  if (s.front() == '+' || s.front() == '-') {
    negative = (s.front() == '-');
    s.erase(s.begin());
  }
  if (s.empty()) bad_number(text);

  Rational value;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    std::string num = s.substr(0, slash);
    std::string den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad_number(text);
    BigInt d = decimal_bigint(den);
    if (d == 0) bad_number(text);
    value = Rational(decimal_bigint(num)) / Rational(d);
  } else {
    // [digits][.digits][e[sign]digits]
    std::string mantissa = s;
    long long exponent = 0;
    auto epos = s.find_first_of("eE");
    if (epos != std::string::npos) {
      mantissa = s.substr(0, epos);
      std::string exp = s.substr(epos + 1);
      bool exp_neg = false;
      if (!exp.empty() && (exp.front() == '+' || exp.front() == '-')) {
        exp_neg = (exp.front() == '-');
        exp.erase(exp.begin());
      }
      if (!all_digits(exp) || exp.size() > 6) bad_number(text);
      exponent = std::strtoll(exp.c_str(), nullptr, 10);
      if (exp_neg) exponent = -exponent;
    }
    std::string digits = mantissa;
    long long frac_digits = 0;
    auto dot = mantissa.find('.');
    if (dot != std::string::npos) {
      std::string head = mantissa.substr(0, dot);
      std::string tail = mantissa.substr(dot + 1);
      if (head.empty() && tail.empty()) bad_number(text);
      if (!head.empty() && !all_digits(head)) bad_number(text);
      if (!tail.empty() && !all_digits(tail)) bad_number(text);
      digits = head + tail;
      frac_digits = static_cast<long long>(tail.size());
    } else if (!all_digits(digits)) {
      bad_number(text);
    }
    if (digits.empty()) bad_number(text);
    value = Rational(decimal_bigint(digits));
    long long net = exponent - frac_digits;
    if (net > 0) {
      value *= Rational(pow10(net));
    } else if (net < 0) {
      value /= Rational(pow10(-net));
    }
  }
  if (negative) value = -value;
  return value;
}

std::string rational_to_string(const Rational& q) {
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::optional<Rational> rational_sqrt_exact(const Rational& q) {
  if (q < 0) return std::nullopt;
  BigInt num = numerator(q);
  BigInt den = denominator(q);
  BigInt sn = sqrt(num);
  BigInt sd = sqrt(den);
  if (sn * sn != num || sd * sd != den) return std::nullopt;
  return Rational(sn) / Rational(sd);
}

Float50 rational_sqrt_approx(const Rational& q) { return sqrt(Float50(q)); }

Float50 to_float(const Rational& q) { return Float50(q); }

BigInt common_denominator(const std::vector<Rational>& values) {
  BigInt acc = 1;
  for (const Rational& q : values) acc = lcm(acc, denominator(q));
  return acc;
}

}  // namespace pollctl
