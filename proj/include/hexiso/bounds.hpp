#pragma once

// Exact checkers for the isoperimetric inequalities on the infinite grid and
// on G_r. Every verdict is decided on an integer inequality equivalent to the
// radical form; floating point only appears in f, g and r_threshold.

#include <compare>
#include <cstdint>
#include <string>

#include "hexiso/perimeter.hpp"

namespace hexiso {

using Wide = __int128;

std::string to_decimal(Wide value);

/// Reduced fraction with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  long double value() const { return static_cast<long double>(num_) / den_; }
  std::string to_string() const;  // "num/den", or "num" when den == 1

  friend bool operator==(const Rational&, const Rational&) = default;
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// holds <=> lhs >= rhs; tight <=> lhs == rhs.
struct BoundCheck {
  std::string name;
  bool holds = false;
  bool tight = false;
  Wide lhs = 0;
  Wide rhs = 0;
};

// Counts above this limit are rejected so the integerised forms fit in Wide.
inline constexpr std::int64_t kMaxCheckedCount = std::int64_t{1} << 28;

// |N| >= sqrt(6) sqrt(|W|)  as  n^2 >= 6 |W|.
BoundCheck check_inf_N(std::int64_t w_size, std::int64_t n_count);
// |E| >= sqrt(6) sqrt(|W|)  as  e^2 >= 6 |W|.
BoundCheck check_inf_E(std::int64_t w_size, std::int64_t e_count);
// |B| >= c sqrt(|W| + c^2/4) - c^2/2 with c^2 = 6  as  b^2 + 6 b >= 6 |W|.
BoundCheck check_inf_B(std::int64_t w_size, std::int64_t b_count);

// c = 0.6053, c^2 = 36638809 / 10^8.
BoundCheck check_fin_N(std::int64_t w_size, std::int64_t n_count);
BoundCheck check_fin_B(std::int64_t w_size, std::int64_t b_count);
// c = sqrt(6) - sqrt(3), c^2 = 9 - 6 sqrt(2). Decided as
// 72 |W|^2 >= sgn(A) A^2 with A = 9 |W| - e^2.
BoundCheck check_fin_E(std::int64_t w_size, std::int64_t e_count);

// Lower bound on |N(W)| for a set with gray-row counts l.
std::int64_t eq1_lower(const GrayRowCounts& l);
// Upper bound on |W| for a bad-row-free set: 2 l1 l2 - (l1 + l2 - l3)^2 / 2
// after ordering l3 >= max(l1, l2); a half-integer.
Rational eq2_upper(const GrayRowCounts& l);

enum class ConstantRole { infinite, finite_n, finite_e, conjecture };

struct ConstantC {
  ConstantRole role;
  std::string exact;     // closed form, e.g. "sqrt(6)-sqrt(3)"
  long double value;
};

ConstantC constant(ConstantRole role);

// Radius bound for the finite vertex inequality; defined on
// -sqrt(3) < c < sqrt(6) - sqrt(3), DomainError elsewhere.
double f(double c);
double g(double c);
// ceil(f(c)) for 0 <= c < sqrt(6) - sqrt(3).
int r_threshold(double c);

}  // namespace hexiso
