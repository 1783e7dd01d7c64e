#include "snakedimer/matrix.hpp"

#include <sstream>

#include "snakedimer/errors.hpp"

namespace snakedimer {

LaurentMatrix::LaurentMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {
  if (rows < 0 || cols < 0) throw ValidationError("matrix dimensions must be nonnegative");
}

LaurentMatrix LaurentMatrix::identity(int n) {
  LaurentMatrix m(n, n);
  for (int i = 1; i <= n; ++i) m.at(i, i) = 1;
  return m;
}

LaurentMatrix LaurentMatrix::from_table(const std::vector<std::vector<long long>>& t) {
  int r = static_cast<int>(t.size());
  int c = r == 0 ? 0 : static_cast<int>(t[0].size());
  LaurentMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(t[i].size()) != c) throw ValidationError("ragged matrix table");
    for (int j = 0; j < c; ++j) m.at(i + 1, j + 1) = t[i][j];
  }
  return m;
}

LaurentPoly& LaurentMatrix::at(int i, int j) {
  if (i < 1 || i > rows_ || j < 1 || j > cols_)
    throw ValidationError("matrix index out of range");
  return a_[(i - 1) * cols_ + (j - 1)];
}

const LaurentPoly& LaurentMatrix::at(int i, int j) const {
  if (i < 1 || i > rows_ || j < 1 || j > cols_)
    throw ValidationError("matrix index out of range");
  return a_[(i - 1) * cols_ + (j - 1)];
}

LaurentMatrix operator*(const LaurentMatrix& a, const LaurentMatrix& b) {
  if (a.cols_ != b.rows_)
    throw ValidationError("matrix dimension mismatch: " + std::to_string(a.cols_) + " vs " +
                          std::to_string(b.rows_));
  LaurentMatrix out(a.rows_, b.cols_);
  for (int i = 1; i <= a.rows_; ++i)
    for (int k = 1; k <= a.cols_; ++k) {
      const LaurentPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 1; j <= b.cols_; ++j) {
        const LaurentPoly& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        out.at(i, j) += aik * bkj;
      }
    }
  return out;
}

bool LaurentMatrix::operator==(const LaurentMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

bool LaurentMatrix::is_integer() const {
  for (auto& p : a_)
    if (!p.is_constant()) return false;
  return true;
}

std::string LaurentMatrix::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 1; i <= rows_; ++i) {
    if (i > 1) os << ",";
    os << "[";
    for (int j = 1; j <= cols_; ++j) {
      if (j > 1) os << ",";
      os << at(i, j).str();
    }
    os << "]";
  }
  os << "]";
  return os.str();
}

LaurentMatrix LaurentMatrix::map(const std::function<LaurentPoly(const LaurentPoly&)>& f) const {
  LaurentMatrix out(rows_, cols_);
  for (int i = 0; i < rows_ * cols_; ++i) out.a_[i] = f(a_[i]);
  return out;
}

LaurentMatrix LaurentMatrix::substituted_all_ones() const {
  return map([](const LaurentPoly& p) { return LaurentPoly(p.sum_of_coefficients()); });
}

}  // namespace snakedimer
