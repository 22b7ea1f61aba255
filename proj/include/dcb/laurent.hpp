#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace dcb {

using BigInt = boost::multiprecision::cpp_int;

/// Sparse Laurent polynomial in one variable v with integer coefficients.
///
/// Terms are kept sorted by increasing exponent and no stored coefficient is
/// zero, so structural equality is polynomial equality.
class LaurentPoly {
 public:
  using Term = std::pair<int, BigInt>;

  LaurentPoly() = default;
  LaurentPoly(long long constant);  // NOLINT: integers promote naturally
  LaurentPoly(std::initializer_list<std::pair<int, long long>> terms);

  static LaurentPoly monomial(int exponent, BigInt coefficient = 1);
  static LaurentPoly from_terms(std::vector<Term> terms);

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  // Only meaningful for nonzero polynomials.
  int min_exponent() const { return terms_.front().first; }
  int max_exponent() const { return terms_.back().first; }

  BigInt coefficient(int exponent) const;
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_bar_symmetric() const;
  bool has_nonnegative_coefficients() const;
  // True iff every exponent is >= 1, i.e. the element lies in v Z[v].
  bool in_positive_part() const;

  BigInt at_one() const;

  LaurentPoly bar() const;
  LaurentPoly shifted(int k) const;  // multiply by v^k

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  // this += scale * o
  void add_scaled(const LaurentPoly& o, const LaurentPoly& scale);

  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Exact quotient by (v - v^-1). Throws InternalError when the input is not
  /// divisible.
  LaurentPoly divided_by_v_minus_vinv() const;

  std::size_t hash() const;

  /// `v^3 + 2*v - v^-1`; `0` for the zero polynomial.
  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

/// Parses the rendering produced by LaurentPoly::to_string (whitespace free form
/// also accepted, e.g. `v^2-3*v^-1+1`).
LaurentPoly parse_laurent(std::string_view text);

/// [a]_v = (v^a - v^-a)/(v - v^-1); defined for every integer a.
LaurentPoly quantum_integer(int a);
/// [a]_v! = [a]_v [a-1]_v ... [1]_v. DomainError for a < 0.
LaurentPoly quantum_factorial(int a);

/// The unique bar-invariant gamma with p - gamma in v Z[v].
LaurentPoly symmetric_part(const LaurentPoly& p);

inline LaurentPoly bar(const LaurentPoly& p) { return p.bar(); }

}  // namespace dcb
