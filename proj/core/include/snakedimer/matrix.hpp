#pragma once

#include <functional>
#include <string>
#include <vector>

#include "snakedimer/laurent.hpp"

namespace snakedimer {

// Dense matrix over the Laurent polynomial ring.  Entries are addressed
// 1-indexed to match the usual transfer-matrix conventions.
class LaurentMatrix {
 public:
  LaurentMatrix() : rows_(0), cols_(0) {}
  LaurentMatrix(int rows, int cols);
  static LaurentMatrix identity(int n);
  static LaurentMatrix from_table(const std::vector<std::vector<long long>>& t);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  LaurentPoly& at(int i, int j);              // 1-indexed
  const LaurentPoly& at(int i, int j) const;  // 1-indexed

  friend LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b);
  bool operator==(const LaurentMatrix& o) const;
  bool operator!=(const LaurentMatrix& o) const { return !(*this == o); }

  bool is_integer() const;  // all entries constant
  // [[e,e,...],[...]] with entries rendered via LaurentPoly::str().
  std::string str() const;
  LaurentMatrix map(const std::function<LaurentPoly(const LaurentPoly&)>& f) const;
  // Every indeterminate set to 1 (each entry becomes its coefficient sum).
  LaurentMatrix substituted_all_ones() const;

 private:
  int rows_, cols_;
  std::vector<LaurentPoly> a_;
};

}  // namespace snakedimer
