#include "snakedimer/transfer.hpp"

#include <string>

#include "snakedimer/errors.hpp"

namespace snakedimer {

namespace {

void check_label(int v, const char* what) {
  if (v < 0) throw ValidationError(std::string(what) + " must be nonnegative");
}

void check_m(const std::vector<int>& m) {
  if (m.empty()) throw ValidationError("multiplicity vector must be nonempty");
  for (int v : m) check_label(v, "multiplicity");
}

void check_symbols(const std::vector<int>& m, const EdgeSymbols& s) {
  size_t n = m.size() - 1;  // tiles
  if (s.a.size() < n + 1 || s.b.size() < n + 1 || s.c.size() < n + 1)
    throw ValidationError("edge symbol families too short for " + std::to_string(n) + " tiles");
}

}  // namespace

LaurentMatrix transfer_R(int a, int b) {
  check_label(a, "matrix size parameter");
  check_label(b, "matrix size parameter");
  LaurentMatrix m(a + 1, b + 1);
  for (int i = 1; i <= a + 1; ++i)
    for (int j = 1; j <= b + 1; ++j)
      if (i + j <= b + 2) m.at(i, j) = 1;
  return m;
}

LaurentMatrix antidiagonal_W(int a) {
  check_label(a, "matrix size parameter");
  LaurentMatrix m(a + 1, a + 1);
  for (int i = 1; i <= a + 1; ++i) m.at(i, a + 2 - i) = 1;
  return m;
}

LaurentMatrix transfer_L(int a, int b) { return antidiagonal_W(a) * transfer_R(a, b); }

LaurentMatrix transfer_U(int a, int b) { return transfer_R(a, b) * antidiagonal_W(b); }

LaurentMatrix weighted_U(int n, const LaurentPoly& t) {
  check_label(n, "matrix size parameter");
  LaurentMatrix m(n + 1, n + 1);
  for (int i = 1; i <= n + 1; ++i)
    for (int j = 1; j <= n + 1; ++j)
      if (i + j <= n + 2) m.at(i, j) = t.pow(n + 2 - i - j);
  return m;
}

LaurentMatrix weighted_T(int a, int b, const LaurentPoly& t) {
  check_label(a, "matrix size parameter");
  check_label(b, "matrix size parameter");
  LaurentMatrix m(a + 1, b + 1);
  for (int i = 1; i <= std::min(a, b) + 1; ++i) m.at(i, i) = t.pow(i - 1);
  return m;
}

LaurentMatrix weighted_W(int k, const LaurentPoly& t) {
  check_label(k, "matrix size parameter");
  LaurentMatrix m(k + 1, k + 1);
  LaurentPoly tk = t.pow(k);
  for (int i = 1; i <= k + 1; ++i) m.at(i, k + 2 - i) = tk;
  return m;
}

EdgeSymbols default_edge_symbols(int tiles) {
  check_label(tiles, "tile count");
  EdgeSymbols s;
  s.a.resize(tiles + 1);
  s.b.resize(tiles + 1);
  s.c.resize(tiles + 1);
  for (int k = 0; k <= tiles; ++k)
    s.a[k] = LaurentPoly::variable(Indeterminate("a" + std::to_string(k)));
  for (int k = 1; k <= tiles; ++k) {
    s.b[k] = LaurentPoly::variable(Indeterminate("b" + std::to_string(k)));
    s.c[k] = LaurentPoly::variable(Indeterminate("c" + std::to_string(k)));
  }
  return s;
}

EdgeSymbols unit_edge_symbols(int tiles) {
  check_label(tiles, "tile count");
  EdgeSymbols s;
  s.a.assign(tiles + 1, LaurentPoly(1));
  s.b.assign(tiles + 1, LaurentPoly(1));
  s.c.assign(tiles + 1, LaurentPoly(1));
  return s;
}

LaurentMatrix straight_product(const std::vector<int>& m) {
  check_m(m);
  LaurentMatrix acc = transfer_R(m[0], m[0]);
  for (size_t k = 1; k < m.size(); ++k) acc = acc * transfer_R(m[k - 1], m[k]);
  return acc;
}

LaurentMatrix zigzag_product(const std::vector<int>& m) {
  check_m(m);
  LaurentMatrix acc = transfer_R(m[0], m[0]);
  if (m.size() >= 2) acc = acc * transfer_R(m[0], m[1]);
  for (size_t k = 2; k < m.size(); ++k) acc = acc * transfer_L(m[k - 1], m[k]);
  return acc;
}

LaurentMatrix weighted_straight_product(const std::vector<int>& m, const EdgeSymbols& s) {
  check_m(m);
  check_symbols(m, s);
  LaurentMatrix acc = weighted_U(m[0], s.a[0]);
  for (size_t k = 1; k < m.size(); ++k) {
    acc = acc * weighted_T(m[k - 1], m[k], s.b[k] * s.c[k]);
    acc = acc * weighted_U(m[k], s.a[k]);
  }
  return acc;
}

LaurentMatrix weighted_zigzag_product(const std::vector<int>& m, const EdgeSymbols& s) {
  check_m(m);
  check_symbols(m, s);
  LaurentMatrix acc = weighted_U(m[0], m.size() >= 2 ? s.b[1] : s.a[0]);
  if (m.size() >= 2) {
    acc = acc * weighted_T(m[0], m[1], s.a[0] * s.c[1]);
    acc = acc * weighted_U(m[1], s.a[1]);
  }
  for (size_t k = 2; k < m.size(); ++k) {
    acc = acc * weighted_W(m[k - 1], s.b[k]);
    acc = acc * weighted_T(m[k - 1], m[k], s.b[k].inverse() * s.c[k]);
    acc = acc * weighted_U(m[k], s.a[k]);
  }
  return acc;
}

LaurentPoly q_euler_poly(int n, const Indeterminate& q) {
  if (n < 2) throw ValidationError("q Euler polynomial needs n >= 2");
  int tiles = n - 2;
  std::vector<int> m(tiles + 1);
  for (int k = 0; k <= tiles; ++k) m[k] = k + 1;
  EdgeSymbols s = unit_edge_symbols(tiles);
  // Bottom edges alternate between 1/q and q, anchored so the last bottom
  // edge always carries 1/q.
  for (int k = 1; k <= tiles; ++k)
    s.c[k] = LaurentPoly::variable(q, (k % 2 == n % 2) ? -1 : 1);
  LaurentMatrix x = weighted_straight_product(m, s);
  return LaurentPoly::variable(q, (n * n) / 4) * x.at(1, 1);
}

LaurentPoly q_catalan_poly(int n, const Indeterminate& q) {
  if (n < 1) throw ValidationError("q Catalan polynomial needs n >= 1");
  int tiles = n - 1;
  std::vector<int> m(tiles + 1);
  for (int k = 0; k <= tiles; ++k) m[k] = k + 1;
  EdgeSymbols s = unit_edge_symbols(tiles);
  for (int k = 1; k <= tiles; ++k) s.c[k] = LaurentPoly::variable(q);
  return weighted_zigzag_product(m, s).at(1, 1);
}

}  // namespace snakedimer
