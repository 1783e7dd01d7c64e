#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace snakedimer {

using BigInt = boost::multiprecision::cpp_int;

// An indeterminate interned by name: equal names always yield equal ids.
class Indeterminate {
 public:
  explicit Indeterminate(const std::string& name);
  int id() const { return id_; }
  const std::string& name() const;
  bool operator==(const Indeterminate& o) const { return id_ == o.id_; }
  bool operator<(const Indeterminate& o) const { return id_ < o.id_; }

 private:
  int id_;
};

// Exponent vector: (variable id, nonzero exponent) pairs sorted by id.
// Exponents may be negative (Laurent monomials).
using Monomial = std::vector<std::pair<int, int>>;

class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long long c);  // NOLINT: implicit by design
  LaurentPoly(const BigInt& c);
  static LaurentPoly variable(const Indeterminate& v, int exponent = 1);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term value; throws ValidationError unless is_constant().
  BigInt constant_value() const;
  BigInt coefficient(const Monomial& m) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Nonnegative power.
  LaurentPoly pow(int e) const;
  // Multiplicative inverse; defined only for single terms with coefficient +-1.
  LaurentPoly inverse() const;

  // Replace `v` by `value` everywhere.  Negative exponents of `v` require
  // `value` to be invertible (single term, unit coefficient).
  LaurentPoly substitute(const Indeterminate& v, const LaurentPoly& value) const;
  // Set every variable to 1 (sum of coefficients).
  BigInt sum_of_coefficients() const;

  // True when no variable other than `v` occurs.
  bool is_univariate_in(const Indeterminate& v) const;
  // Exponent -> coefficient view of a univariate polynomial in `v`.
  std::map<int, BigInt> univariate_coefficients(const Indeterminate& v) const;
  int min_degree_in(const Indeterminate& v) const;  // 0 for the zero polynomial

  // Terms sorted by ascending total degree, ties by variable name (natural
  // numeric order), larger exponent first.  "^" for powers, explicit "*".
  std::string str() const;

  const std::map<Monomial, BigInt>& terms() const { return terms_; }

 private:
  void add_term(const Monomial& m, const BigInt& c);
  std::map<Monomial, BigInt> terms_;  // nonzero coefficients only
};

}  // namespace snakedimer
