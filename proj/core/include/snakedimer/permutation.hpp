#pragma once

#include <string>
#include <vector>

#include "snakedimer/laurent.hpp"

namespace snakedimer {

// A permutation of {1..n} in one-line notation, 1-indexed throughout.
class Permutation {
 public:
  explicit Permutation(std::vector<int> one_line);

  static Permutation identity(int n);
  // The order-reversing permutation i -> n+1-i.
  static Permutation longest(int n);
  // Accepts either a comma-free digit string ("3142", entries 1..9) or a
  // comma-separated list ("10,3,2,...").
  static Permutation parse(const std::string& text);

  int size() const { return static_cast<int>(values_.size()); }
  int at(int position) const;
  const std::vector<int>& one_line() const { return values_; }

  Permutation inverse() const;
  // (a.compose(b))(i) == a(b(i)).
  Permutation compose(const Permutation& other) const;
  long long inversion_count() const;

  // Digit string for n <= 9, comma-separated beyond.
  std::string str() const;

  bool operator==(const Permutation& other) const { return values_ == other.values_; }
  bool operator<(const Permutation& other) const { return values_ < other.values_; }

 private:
  std::vector<int> values_;
};

// Position-based code: L_i = #{j > i | sigma(j) < sigma(i)}, with 0 <= L_i <= n-i.
class LehmerCode {
 public:
  explicit LehmerCode(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int at(int position) const;
  const std::vector<int>& entries() const { return entries_; }
  long long sum() const;

  bool operator==(const LehmerCode& other) const { return entries_ == other.entries_; }

 private:
  std::vector<int> entries_;
};

// Value-based code: x_i = #{j < i | sigma^{-1}(j) > sigma^{-1}(i)}, with 0 <= x_i <= i-1.
class InversionCode {
 public:
  explicit InversionCode(std::vector<int> entries);

  int size() const { return static_cast<int>(entries_.size()); }
  int at(int position) const;
  const std::vector<int>& entries() const { return entries_; }
  long long sum() const;

  bool operator==(const InversionCode& other) const { return entries_ == other.entries_; }

 private:
  std::vector<int> entries_;
};

LehmerCode lehmer_encode(const Permutation& sigma);
Permutation lehmer_decode(const LehmerCode& code);
InversionCode inversion_encode(const Permutation& sigma);
Permutation inversion_decode(const InversionCode& code);

struct PermutationClassification {
  // Descents at odd positions: sigma(1) > sigma(2) < sigma(3) > ...
  bool alternating = false;
  // Ascents at odd positions: sigma(1) < sigma(2) > sigma(3) < ...
  bool reverse_alternating = false;
  // No i < j < k with sigma(i) < sigma(k) < sigma(j).
  bool avoids_132 = false;
  // No i < j < k with sigma(j) < sigma(i) < sigma(k).
  bool avoids_213 = false;
};

PermutationClassification classify(const Permutation& sigma);

enum class PermutationClass {
  Alternating,
  ReverseAlternating,
  Avoiding132,
  Avoiding213,
};

// All members of the class in S_n, sorted by one-line notation.  Generated
// from Lehmer-code space (each class corresponds to a simple constraint on
// adjacent code entries), not by filtering all of S_n.
std::vector<Permutation> enumerate_class(int n, PermutationClass cls);

enum class PermutationOrder {
  // Entrywise comparison of Lehmer codes.
  LeftMiddle,
  // Entrywise comparison of inversion codes.
  RightMiddle,
  // Comparison of rank matrices.
  Bruhat,
  // Inversion-set containment of the inverses.
  LeftWeak,
};

bool order_leq(const Permutation& lhs, const Permutation& rhs, PermutationOrder order);

// sigma -> w0 sigma^{-1} w0.  Satisfies rev(LehmerCode(sigma)) ==
// InversionCode(result) and swaps the 132- and 213-avoiding classes.
Permutation w0_conjugate_inverse(const Permutation& sigma);

// Sum of q^{inv(sigma)} over the given permutations.
LaurentPoly inversion_genfun(const std::vector<Permutation>& perms, const Indeterminate& q);

enum class TriangleKind { Entringer, Ballot, Seidel };

class NumberTriangle {
 public:
  NumberTriangle(TriangleKind kind, std::vector<std::vector<BigInt>> rows);

  TriangleKind kind() const { return kind_; }
  int row_count() const { return static_cast<int>(rows_.size()); }
  const std::vector<BigInt>& row(int n) const;
  const std::vector<std::vector<BigInt>>& rows() const { return rows_; }

 private:
  TriangleKind kind_;
  std::vector<std::vector<BigInt>> rows_;
};

// Rows 1..n_max of the requested triangle.
//   Entringer: row n has n entries, E(1,1) = 1, E(n,k) = sum_{i > n-k} E(n-1,i).
//   Ballot:    row n has n entries, C(1,1) = 1, C(n,k) = sum_{i <= k} C(n-1,i).
//   Seidel:    row n has ceil(n/2) entries, g(1,1) = 1,
//              g(n,k) = sum_{i > floor(n/2)-k} g(n-1,i).
NumberTriangle triangle(TriangleKind kind, int n_max);

// Seed the start of each row of a triangular array with the input values,
// fill each row by accumulating sums against the previous row in alternating
// reading direction, and report the row ends starting from the second row.
// Seeding with (1,0,0,...) produces the up-down permutation counts
// (1,1,2,5,16,...).
std::vector<BigInt> boustrophedon(const std::vector<BigInt>& seq);

// Number of down-up alternating permutations of n letters (1,1,1,2,5,16,...
// for n = 0,1,2,...).
BigInt euler_number(int n);
// Catalan numbers 1,1,2,5,14,... for n = 0,1,2,...
BigInt catalan_number(int n);
// Final entry of row n of the Seidel triangle (1,1,1,2,3,8,17,56,... for
// n = 1,2,...).
BigInt genocchi_number(int n);

}  // namespace snakedimer
