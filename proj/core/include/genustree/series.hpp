#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace genustree {

using Rational = mpq_class;

class DivisionByNonUnitError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class BadConstantTermError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A power series truncated at order N, with exact rational coefficients
/// c_0..c_N (always canonical: lowest terms, positive denominator).
/// Binary operations truncate to the smaller operand order.
class TruncatedSeries {
 public:
  /// The zero series of the given order.
  explicit TruncatedSeries(int order);

  /// Polynomial constructor: coefficients c_0, c_1, ... padded with zeros.
  static TruncatedSeries polynomial(std::span<const long> coeffs, int order);
  static TruncatedSeries polynomial(std::initializer_list<long> coeffs, int order);

  int order() const noexcept { return order_; }
  const Rational& coeff(int i) const { return coeffs_.at(static_cast<std::size_t>(i)); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }
  Rational& mutable_coeff(int i) { return coeffs_.at(static_cast<std::size_t>(i)); }

  TruncatedSeries operator+(const TruncatedSeries& rhs) const;
  TruncatedSeries operator-(const TruncatedSeries& rhs) const;
  TruncatedSeries operator*(const TruncatedSeries& rhs) const;
  /// Formal division; throws DivisionByNonUnitError when rhs has constant
  /// term zero.
  TruncatedSeries operator/(const TruncatedSeries& rhs) const;

  /// The series r with r^2 = *this and r(0) = 1, by the coefficient
  /// recurrence r_n = (c_n - sum_{0<i<n} r_i r_{n-i}) / 2. Throws
  /// BadConstantTermError unless the constant term is exactly 1.
  TruncatedSeries sqrt() const;

  /// Multiplication by t^k; drops the top k coefficients.
  TruncatedSeries shift_up(int k) const;
  /// Exact division by t^k; the low k coefficients must vanish.
  TruncatedSeries shift_down(int k) const;
  TruncatedSeries scaled(const Rational& factor) const;

  /// Equal orders and identical coefficients.
  bool operator==(const TruncatedSeries& rhs) const = default;

 private:
  int order_;
  std::vector<Rational> coeffs_;
};

/// A series in t whose coefficient at t^g is a polynomial in a second
/// marker variable w with exact rational coefficients. The w-degree at t^g
/// stays at most g+2 for every series constructed here.
class BivariateSeries {
 public:
  struct Term {
    int t_power;
    int w_power;
    long coefficient;
  };

  explicit BivariateSeries(int order);
  static BivariateSeries from_terms(std::span<const Term> terms, int order);
  static BivariateSeries from_terms(std::initializer_list<Term> terms, int order);

  int order() const noexcept { return order_; }
  /// Coefficient polynomial in w at t^g (ascending powers of w; may be
  /// empty for zero).
  const std::vector<Rational>& coeff_poly(int g) const {
    return coeffs_.at(static_cast<std::size_t>(g));
  }
  Rational coeff(int g, int w_power) const;

  BivariateSeries operator*(const BivariateSeries& rhs) const;
  /// Formal division; the divisor's t-constant coefficient must be the
  /// unit polynomial 1 (which every denominator used here has).
  BivariateSeries operator/(const BivariateSeries& rhs) const;

  /// Specialization w = 1.
  TruncatedSeries evaluate_w1() const;

  bool operator==(const BivariateSeries& rhs) const;

 private:
  void trim(int g);
  int order_;
  std::vector<std::vector<Rational>> coeffs_;
};

/// The closed-form generating functions used by the bounds.
enum class SeriesName {
  kLowerSimple,  // t / ((1-t-t^2)(1-t)); coefficients F_{g+2}-1
  kLowerA,       // the a_g lower-bound series
  kLowerAMult,   // bivariate, w marks the multiplicity (coefficient of
                 // w^lambda t^g lower-bounds the count at that multiplicity)
  kUpperC,       // the c_g upper-bound series
  kInfiniteD,    // t(1+t-t^3-t^4)/(1-t-t^2); the d_g chain bound
  kK0,           // closed form for the d = 0 slice of the healthy tree
  kK1,           // closed form for the d = 1 slice
  kG111,         // pair-node series of the strong-marked lower-bound tree
  kFProp1,       // t^3 / ((1-t-t^2)(1-t)^2); plain-node series of the
                 // simple lower-bound tree
  kH11,          // family-node series H(1,1,t), equal to t^2/(1-t)^2
  kFBar,         // t/(1-t); the ordinary chain
};

using NamedSeries = std::variant<TruncatedSeries, BivariateSeries>;

/// Expansion of the named closed form to the requested order.
NamedSeries named_series(SeriesName name, int order);

/// Convenience accessor for univariate names; throws std::invalid_argument
/// for kLowerAMult.
TruncatedSeries named_univariate(SeriesName name, int order);

/// The bivariate multiplicity-marked series (kLowerAMult).
BivariateSeries multiplicity_series(int order);

struct IdentityCheck {
  std::string name;
  int order;
  bool pass;
};

struct IdentityReport {
  std::vector<IdentityCheck> checks;
  bool all_pass = true;
};

/// Verifies the series identities behind the bound derivations, each as an
/// exact coefficient comparison to the given order (must be >= 16):
///   - lower_a_assembly:   FBar + H11 + G111 == lower_a
///   - upper_c_assembly:   K0 + K1/(1-t) + t/(1-t) == upper_c
///   - kernel_vanishing:   v* = (1 - sqrt(1-4t^2)) / (2t^2) satisfies
///                         (v*-1) - v*^2 t^2 == 0
///   - multiplicity_reduction: the bivariate series at w = 1 == lower_a
///   - lower_simple_assembly: FBar + t^2/(1-t)^2 + FProp1 == lower_simple
IdentityReport identity_suite(int order);

}  // namespace genustree
