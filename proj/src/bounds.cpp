#include "hexiso/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hexiso/errors.hpp"

namespace hexiso {

std::string to_decimal(Wide value) {
  if (value == 0) return "0";
  const bool negative = value < 0;
  // Work on the negative side so the minimum value is representable.
  Wide v = negative ? value : -value;
  std::string digits;
  while (v != 0) {
    digits.push_back(static_cast<char>('0' - static_cast<int>(v % 10)));
    v /= 10;
  }
  if (negative) digits.push_back('-');
  std::reverse(digits.begin(), digits.end());
  return digits;
}

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t d = std::gcd(num, den);
  num_ = num / d;
  den_ = den / d;
}

std::string Rational::to_string() const {
  return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const Wide l = static_cast<Wide>(a.num_) * b.den_;
  const Wide r = static_cast<Wide>(b.num_) * a.den_;
  return l <=> r;
}

namespace {

constexpr Wide kFinNumerator = 36638809;  // 0.6053^2 * 10^8
constexpr Wide kFinDenominator = 100000000;

void require_counts(const char* name, std::int64_t w_size, std::int64_t count) {
  if (w_size < 0 || count < 0) {
    throw InvalidArgument(std::string(name) + ": counts must be non-negative");
  }
  if (w_size > kMaxCheckedCount || count > kMaxCheckedCount) {
    throw InvalidArgument(std::string(name) + ": counts above 2^28 are not supported");
  }
}

BoundCheck make_check(std::string name, Wide lhs, Wide rhs) {
  return {std::move(name), lhs >= rhs, lhs == rhs, lhs, rhs};
}

}  // namespace

BoundCheck check_inf_N(std::int64_t w_size, std::int64_t n_count) {
  require_counts("check_inf_N", w_size, n_count);
  const Wide n = n_count;
  return make_check("inf_N", n * n, 6 * static_cast<Wide>(w_size));
}

BoundCheck check_inf_E(std::int64_t w_size, std::int64_t e_count) {
  require_counts("check_inf_E", w_size, e_count);
  const Wide e = e_count;
  return make_check("inf_E", e * e, 6 * static_cast<Wide>(w_size));
}

BoundCheck check_inf_B(std::int64_t w_size, std::int64_t b_count) {
  require_counts("check_inf_B", w_size, b_count);
  const Wide b = b_count;
  return make_check("inf_B", b * b + 6 * b, 6 * static_cast<Wide>(w_size));
}

BoundCheck check_fin_N(std::int64_t w_size, std::int64_t n_count) {
  require_counts("check_fin_N", w_size, n_count);
  const Wide n = n_count;
  return make_check("fin_N", kFinDenominator * n * n, kFinNumerator * w_size);
}

BoundCheck check_fin_B(std::int64_t w_size, std::int64_t b_count) {
  require_counts("check_fin_B", w_size, b_count);
  const Wide b = b_count;
  return make_check("fin_B", kFinDenominator * b * b + kFinNumerator * b,
                    kFinNumerator * w_size);
}

BoundCheck check_fin_E(std::int64_t w_size, std::int64_t e_count) {
  require_counts("check_fin_E", w_size, e_count);
  // e^2 >= (9 - 6 sqrt 2) W  <=>  6 sqrt(2) W >= A,  A = 9 W - e^2.
  const Wide w = w_size;
  const Wide a = 9 * w - static_cast<Wide>(e_count) * e_count;
  const Wide signed_square = a < 0 ? -(a * a) : a * a;
  return make_check("fin_E", 72 * w * w, signed_square);
}

namespace {

void require_positive(const GrayRowCounts& l) {
  if (std::any_of(l.begin(), l.end(), [](std::int64_t v) { return v < 1; })) {
    throw InvalidArgument("gray-row counts must be positive");
  }
}

}  // namespace

std::int64_t eq1_lower(const GrayRowCounts& l) {
  require_positive(l);
  return l[0] + l[1] + l[2];
}

Rational eq2_upper(const GrayRowCounts& l) {
  require_positive(l);
  GrayRowCounts s = l;
  std::sort(s.begin(), s.end());  // s[2] plays the role of the largest count
  const std::int64_t excess = s[0] + s[1] - s[2];
  return Rational(4 * s[0] * s[1] - excess * excess, 2);
}

ConstantC constant(ConstantRole role) {
  const long double sqrt2 = std::sqrt(2.0L);
  const long double sqrt3 = std::sqrt(3.0L);
  const long double sqrt6 = std::sqrt(6.0L);
  switch (role) {
    case ConstantRole::infinite: return {role, "sqrt(6)", sqrt6};
    case ConstantRole::finite_n: return {role, "6053/10000", 0.6053L};
    case ConstantRole::finite_e: return {role, "sqrt(6)-sqrt(3)", sqrt3 * (sqrt2 - 1.0L)};
    case ConstantRole::conjecture: break;
  }
  return {ConstantRole::conjecture, "2/sqrt(3)", 2.0L / sqrt3};
}

double f(double c) {
  const double sqrt3 = std::sqrt(3.0);
  const double sqrt6 = std::sqrt(6.0);
  if (!(c > -sqrt3 && c < sqrt6 - sqrt3)) {
    throw DomainError("f(c) is defined for -sqrt(3) < c < sqrt(6)-sqrt(3)");
  }
  return sqrt3 * c / (-2.0 * sqrt3 * (c + sqrt3) * (c - sqrt6 + sqrt3));
}

double g(double c) {
  const double sqrt3 = std::sqrt(3.0);
  const double sqrt6 = std::sqrt(6.0);
  // The quadratic -4c^2 + 4 sqrt(6) c - 12 has negative discriminant.
  return (24.0 * c - 12.0 * sqrt6) / ((-4.0 * c * c + 4.0 * c * sqrt6 - 12.0) * sqrt3);
}

int r_threshold(double c) {
  const double upper = std::sqrt(6.0) - std::sqrt(3.0);
  if (!(c >= 0.0 && c < upper)) {
    throw DomainError("r_threshold is defined for 0 <= c < sqrt(6)-sqrt(3)");
  }
  return static_cast<int>(std::ceil(f(c)));
}

}  // namespace hexiso
