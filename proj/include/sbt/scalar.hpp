#pragma once

// Exact arithmetic in Q(u,v,a,b,x,y,z,s)[w] / (w^2 - W), W = (a + (1-v) b) / (a u).

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "sbt/errors.hpp"

namespace sbt {

using Rational = mpq_class;

enum class Var : std::uint8_t { u = 0, v, a, b, x, y, z, s };
inline constexpr int kNumVars = 8;

std::string_view var_name(Var v);
std::optional<Var> parse_var(std::string_view name);

/// Monomial in the eight field variables. Exponents are packed one byte per
/// variable with u in the most significant byte, so that comparing
/// (degree, bits) is the graded-lexicographic order with u > v > ... > s.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(Var v, unsigned exponent = 1);

  unsigned exponent(Var v) const {
    return static_cast<unsigned>((bits_ >> shift(v)) & 0xffu);
  }
  unsigned degree() const { return degree_; }
  bool is_one() const { return bits_ == 0; }
  std::uint64_t bits() const { return bits_; }

  Monomial operator*(Monomial rhs) const;
  bool divides(Monomial rhs) const;
  /// Precondition: divisor.divides(*this).
  Monomial operator/(Monomial divisor) const;

  static Monomial gcd(Monomial lhs, Monomial rhs);
  static Monomial lcm(Monomial lhs, Monomial rhs);

  friend bool operator==(Monomial, Monomial) = default;
  friend std::strong_ordering operator<=>(Monomial lhs, Monomial rhs) {
    if (auto c = lhs.degree_ <=> rhs.degree_; c != 0) return c;
    return lhs.bits_ <=> rhs.bits_;
  }

  std::string to_string() const;

 private:
  static constexpr unsigned shift(Var v) {
    return 8u * (7u - static_cast<unsigned>(v));
  }
  static Monomial from_bits(std::uint64_t bits);

  std::uint64_t bits_ = 0;
  std::uint16_t degree_ = 0;
};

/// Sparse polynomial with rational coefficients. Terms are kept in strictly
/// decreasing graded-lex order and never carry a zero coefficient.
class Polynomial {
 public:
  struct Term {
    Monomial mono;
    Rational coeff;
  };

  Polynomial() = default;
  Polynomial(const Rational& c);  // NOLINT(google-explicit-constructor)
  Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
  static Polynomial variable(Var v);
  static Polynomial monomial(Monomial m, const Rational& c = 1);
  /// Builds the canonical form of an arbitrary term list.
  static Polynomial from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }
  bool is_monomial() const { return terms_.size() == 1; }
  const std::vector<Term>& terms() const { return terms_; }
  const Term& leading() const { return terms_.front(); }
  std::size_t size() const { return terms_.size(); }
  /// Constant term (zero when absent).
  Rational constant_value() const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) { return lhs += rhs; }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) { return lhs -= rhs; }
  friend Polynomial operator*(const Polynomial& lhs, const Polynomial& rhs);
  Polynomial scaled(const Rational& c) const;
  Polynomial shifted(Monomial m) const;  // multiply by a monomial
  Polynomial pow(unsigned e) const;

  /// Quotient if `divisor` divides *this exactly, nullopt otherwise.
  std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
  /// Quotient by a monomial that divides every term.
  Polynomial divided(Monomial m) const;

  /// gcd of all monomials (one for the zero polynomial).
  Monomial monomial_content() const;
  /// Positive rational c such that *this / c has coprime integer coefficients.
  Rational content() const;

  friend bool operator==(const Polynomial& lhs, const Polynomial& rhs);
  /// Total order on canonical term lists; used to sort denominator factors.
  static int compare(const Polynomial& lhs, const Polynomial& rhs);

  std::string to_string() const;

 private:
  std::vector<Term> terms_;
};

class RationalFunction;
using Bindings = std::map<Var, RationalFunction>;

/// num / den with den = monomial * prod(factor^exp). Factors are primitive
/// integer polynomials with positive leading coefficient that are not
/// monomials; the rational constant always lives in the numerator.
class RationalFunction {
 public:
  struct Factor {
    Polynomial poly;
    unsigned exp = 0;
  };

  RationalFunction() = default;
  RationalFunction(Polynomial num);  // NOLINT(google-explicit-constructor)
  RationalFunction(const Rational& c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  RationalFunction(long c) : RationalFunction(Polynomial(c)) {}  // NOLINT
  static RationalFunction fraction(const Polynomial& num, const Polynomial& den);

  bool is_zero() const { return num_.is_zero(); }
  bool is_one() const;
  bool is_polynomial() const { return den_mono_.is_one() && den_factors_.empty(); }
  const Polynomial& numerator() const { return num_; }
  Monomial denominator_monomial() const { return den_mono_; }
  const std::vector<Factor>& denominator_factors() const { return den_factors_; }
  /// Expanded denominator.
  Polynomial denominator() const;

  RationalFunction operator-() const;
  RationalFunction& operator+=(const RationalFunction& rhs);
  RationalFunction& operator-=(const RationalFunction& rhs);
  RationalFunction& operator*=(const RationalFunction& rhs);
  RationalFunction& operator/=(const RationalFunction& rhs);
  friend RationalFunction operator+(RationalFunction l, const RationalFunction& r) { return l += r; }
  friend RationalFunction operator-(RationalFunction l, const RationalFunction& r) { return l -= r; }
  friend RationalFunction operator*(RationalFunction l, const RationalFunction& r) { return l *= r; }
  friend RationalFunction operator/(RationalFunction l, const RationalFunction& r) { return l /= r; }
  RationalFunction inverse() const;
  RationalFunction pow(int e) const;

  /// Simultaneous substitution; throws DivisionByZero if a denominator vanishes.
  RationalFunction substitute(const Bindings& bindings) const;

  /// Equality decided by cross-multiplication.
  friend bool operator==(const RationalFunction& lhs, const RationalFunction& rhs);

  /// "num" or "(num)/(den)".
  std::string to_string() const;

 private:
  void add_signed(const RationalFunction& rhs, bool negate);
  void normalize();

  Polynomial num_;
  Monomial den_mono_;
  std::vector<Factor> den_factors_;
};

/// The generic rescaling value W = (a + (1-v) b) / (a u).
const RationalFunction& generic_w_square();

/// f0 + f1 * w, reduced by w^2 = W. The relation travels with the value so that
/// specializations (which change W) stay consistent; a null context means the
/// generic W. Scalars without a w-part combine with any context.
class Scalar {
 public:
  Scalar() = default;
  Scalar(RationalFunction f0);  // NOLINT(google-explicit-constructor)
  Scalar(Polynomial p) : Scalar(RationalFunction(std::move(p))) {}  // NOLINT
  Scalar(long c) : Scalar(RationalFunction(c)) {}  // NOLINT
  Scalar(const Rational& c) : Scalar(RationalFunction(c)) {}  // NOLINT
  Scalar(RationalFunction f0, RationalFunction f1,
         std::shared_ptr<const RationalFunction> w_square = nullptr);

  static Scalar variable(Var v) { return Scalar(Polynomial::variable(v)); }
  static Scalar w();

  const RationalFunction& rational_part() const { return f0_; }
  const RationalFunction& w_part() const { return f1_; }
  const RationalFunction& w_square() const;
  const std::shared_ptr<const RationalFunction>& context() const { return w_square_; }

  bool is_zero() const { return f0_.is_zero() && f1_.is_zero(); }
  bool is_one() const { return f1_.is_zero() && f0_.is_one(); }
  bool has_w() const { return !f1_.is_zero(); }

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& rhs);
  Scalar& operator-=(const Scalar& rhs);
  Scalar& operator*=(const Scalar& rhs);
  Scalar& operator/=(const Scalar& rhs) { return *this *= rhs.inverse(); }
  friend Scalar operator+(Scalar l, const Scalar& r) { return l += r; }
  friend Scalar operator-(Scalar l, const Scalar& r) { return l -= r; }
  friend Scalar operator*(Scalar l, const Scalar& r) { return l *= r; }
  friend Scalar operator/(Scalar l, const Scalar& r) { return l /= r; }
  /// Throws DivisionByZero for zero.
  Scalar inverse() const;
  Scalar pow(int e) const;

  /// Bindings may not mention w; W is recomputed from the substituted values.
  Scalar substitute(const Bindings& bindings) const;

  friend bool operator==(const Scalar& lhs, const Scalar& rhs);

  std::string to_string() const;

 private:
  static std::shared_ptr<const RationalFunction> join_context(const Scalar& lhs,
                                                              const Scalar& rhs);

  RationalFunction f0_;
  RationalFunction f1_;
  std::shared_ptr<const RationalFunction> w_square_;
};

/// Parses the rendering produced by Scalar::to_string (and ordinary
/// expressions built from integers, variables, w, + - * / ^ and parentheses).
Scalar parse_scalar(std::string_view text);

}  // namespace sbt
