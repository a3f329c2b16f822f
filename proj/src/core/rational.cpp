#include "covermeasure/core/rational.hpp"

#include <cctype>

#include "covermeasure/core/error.hpp"

namespace covermeasure {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidRank: return "invalid-rank";
    case ErrorCode::InvalidGraph: return "invalid-graph";
    case ErrorCode::InvalidArgument: return "invalid-argument";
    case ErrorCode::InvalidSampleCount: return "invalid-sample-count";
    case ErrorCode::SymmetryViolation: return "symmetry-violation";
    case ErrorCode::Divergent: return "divergent";
    case ErrorCode::InfeasibleGeometry: return "infeasible-geometry";
    case ErrorCode::EmptyEnsemble: return "empty-ensemble";
    case ErrorCode::Unsupported: return "unsupported";
  }
  return "unknown";
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

namespace {

BigInt parse_integer(std::string_view digits, std::string_view original) {
  if (digits.empty()) {
    throw Error(ErrorCode::InvalidArgument, "malformed number: '" + std::string(original) + "'");
  }
  BigInt value = 0;
  for (char c : digits) {
    if (!std::isdigit(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::InvalidArgument, "malformed number: '" + std::string(original) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return value;
}

Rational parse_decimal(std::string_view text, std::string_view original) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  std::int64_t exponent = 0;
  if (auto e = text.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = text.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '-' || exp_part.front() == '+')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    BigInt parsed = parse_integer(exp_part, original);
    if (parsed > 4000) {
      throw Error(ErrorCode::InvalidArgument, "exponent out of range: '" + std::string(original) + "'");
    }
    exponent = parsed.convert_to<std::int64_t>();
    if (exp_negative) exponent = -exponent;
    text = text.substr(0, e);
  }
  std::string digits;
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view frac = text.substr(dot + 1);
    digits = std::string(text.substr(0, dot)) + std::string(frac);
    exponent -= static_cast<std::int64_t>(frac.size());
  } else {
    digits = std::string(text);
  }
  Rational value(parse_integer(digits, original));
  BigInt scale = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(exponent < 0 ? -exponent : exponent));
  value = exponent < 0 ? value / Rational(scale) : value * Rational(scale);
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::string_view num = text.substr(0, slash);
    bool negative = !num.empty() && num.front() == '-';
    if (negative) num.remove_prefix(1);
    BigInt p = parse_integer(num, text);
    BigInt q = parse_integer(text.substr(slash + 1), text);
    if (q == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator: '" + std::string(text) + "'");
    Rational r(p, q);
    return negative ? Rational(-r) : r;
  }
  return parse_decimal(text, text);
}

std::string to_string(const Rational& q) {
  const BigInt& den = boost::multiprecision::denominator(q);
  if (den == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + den.str();
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= (n - k + i);
    result /= i;
  }
  return result;
}

BigInt factorial(std::int64_t n) {
  BigInt result = 1;
  for (std::int64_t i = 2; i <= n; ++i) result *= i;
  return result;
}

}  // namespace covermeasure
