#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "snakedimer/laurent.hpp"
#include "snakedimer/matrix.hpp"
#include "snakedimer/transfer.hpp"

using namespace snakedimer;

TEST_CASE("elementary factor matrices") {
  CHECK(transfer_R(2, 2) == LaurentMatrix::from_table({{1, 1, 1}, {1, 1, 0}, {1, 0, 0}}));
  CHECK(transfer_R(3, 1) == LaurentMatrix::from_table({{1, 1}, {1, 0}, {0, 0}, {0, 0}}));
  CHECK(transfer_R(1, 3) == LaurentMatrix::from_table({{1, 1, 1, 1}, {1, 1, 1, 0}}));
  CHECK(antidiagonal_W(2) ==
        LaurentMatrix::from_table({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}}));
  // L = W * R and U = R * W.
  CHECK(transfer_L(2, 2) == antidiagonal_W(2) * transfer_R(2, 2));
  CHECK(transfer_L(2, 2) == LaurentMatrix::from_table({{1, 0, 0}, {1, 1, 0}, {1, 1, 1}}));
  CHECK(transfer_U(2, 2) == transfer_R(2, 2) * antidiagonal_W(2));
  CHECK(transfer_U(2, 2) == LaurentMatrix::from_table({{1, 1, 1}, {0, 1, 1}, {0, 0, 1}}));
  CHECK(transfer_U(1, 2) == LaurentMatrix::from_table({{1, 1, 1}, {0, 1, 1}}));
  CHECK(transfer_L(1, 2) == LaurentMatrix::from_table({{1, 1, 0}, {1, 1, 1}}));
}

TEST_CASE("straight product counts covers by end labels") {
  // Two-square straight snake, labels (2,3) on the three verticals.
  LaurentMatrix m = straight_product({2, 3});
  CHECK(m == LaurentMatrix::from_table({{3, 3, 2, 1}, {2, 2, 2, 1}, {1, 1, 1, 1}}));
  // Single-label chain: one column of boundary shapes, no squares.
  CHECK(straight_product({2}) == transfer_R(2, 2));
}

TEST_CASE("zigzag product top-left entries give Catalan numbers") {
  // Labels 1..n on the zigzag give X with X[1][1] = Catalan(n).
  std::vector<long long> catalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
  for (int n = 1; n <= 8; ++n) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = i + 1;
    LaurentMatrix x = zigzag_product(m);
    CHECK(x.at(1, 1).constant_value() == catalan[n]);
  }
}

TEST_CASE("zigzag product with doubled labels gives Fuss-Catalan numbers") {
  // Labels 2,4,...,2n count 3-ary-tree analogues: 1, 3, 12, 55, 273.
  std::vector<long long> fuss = {1, 3, 12, 55, 273};
  for (int n = 1; n <= 5; ++n) {
    std::vector<int> m(n);
    for (int i = 0; i < n; ++i) m[i] = 2 * (i + 1);
    CHECK(zigzag_product(m).at(1, 1).constant_value() == fuss[n - 1]);
  }
}

TEST_CASE("straight product with staircase labels gives Euler numbers") {
  // Labels 1..n-1 on the straight snake with n-2 squares count E_n:
  // 1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936 (zigzag permutations).
  std::vector<long long> euler = {1, 1, 1, 2, 5, 16, 61, 272, 1385, 7936};
  for (int n = 2; n <= 9; ++n) {
    std::vector<int> m(n - 1);
    for (int i = 0; i < n - 1; ++i) m[i] = i + 1;
    CHECK(straight_product(m).at(1, 1).constant_value() == euler[n]);
  }
}

TEST_CASE("straight product with paired labels gives Genocchi numbers") {
  // Labels 1,1,2,2,3,... (odd length) give 2, 3, 8, 17, 56 for n=4..8.
  std::vector<long long> genocchi = {2, 3, 8, 17, 56};
  for (int n = 4; n <= 8; ++n) {
    std::vector<int> m;
    for (int k = 1; (int)m.size() < n - 2; ++k) {
      m.push_back(k);
      if ((int)m.size() < n - 2) m.push_back(k);
    }
    CHECK(straight_product(m).at(1, 1).constant_value() == genocchi[n - 4]);
  }
}

TEST_CASE("weighted factors") {
  Indeterminate t("t");
  LaurentPoly tv = LaurentPoly::variable(t);
  // U_2(t): entry (i,j) = t^{4-i-j} when i+j <= 4.
  LaurentMatrix u2 = weighted_U(2, tv);
  CHECK(u2.at(1, 1) == tv.pow(2));
  CHECK(u2.at(1, 2) == tv);
  CHECK(u2.at(2, 2) == LaurentPoly(1));
  CHECK(u2.at(3, 2).is_zero());
  CHECK(u2.substituted_all_ones() == transfer_R(2, 2));
  // T_{2,3}(t): rectangular diagonal with t^{i-1}.
  LaurentMatrix t23 = weighted_T(2, 3, tv);
  CHECK(t23.rows() == 3);
  CHECK(t23.cols() == 4);
  CHECK(t23.at(1, 1) == LaurentPoly(1));
  CHECK(t23.at(2, 2) == tv);
  CHECK(t23.at(3, 3) == tv.pow(2));
  CHECK(t23.at(1, 2).is_zero());
  // W_2(t): antidiagonal of t^2.
  LaurentMatrix w2 = weighted_W(2, tv);
  CHECK(w2.at(1, 3) == tv.pow(2));
  CHECK(w2.at(2, 2) == tv.pow(2));
  CHECK(w2.at(3, 1) == tv.pow(2));
  CHECK(w2.at(1, 1).is_zero());
}

TEST_CASE("weighted straight product on one square") {
  // Square with side labels (2,3): top-left entry lists all covers by weight.
  EdgeSymbols sym = default_edge_symbols(1);
  LaurentMatrix x = weighted_straight_product({2, 3}, sym);
  LaurentPoly a0 = sym.a[0], a1 = sym.a[1], b1 = sym.b[1], c1 = sym.c[1];
  CHECK(x.at(1, 1) == a0.pow(2) * a1.pow(3) + a0 * a1.pow(2) * b1 * c1 +
                          a1 * b1.pow(2) * c1.pow(2));
  // Setting every symbol to 1 recovers the plain count matrix.
  CHECK(weighted_straight_product({2, 3}, unit_edge_symbols(1)) ==
        straight_product({2, 3}));
}

TEST_CASE("weighted products specialize to unweighted") {
  for (std::vector<int> m : {std::vector<int>{1, 2, 3, 4}, {2, 2, 2}, {3, 1, 2}}) {
    int tiles = (int)m.size() - 1;
    CHECK(weighted_straight_product(m, unit_edge_symbols(tiles)) == straight_product(m));
    CHECK(weighted_zigzag_product(m, unit_edge_symbols(tiles)) == zigzag_product(m));
  }
}

TEST_CASE("weighted zigzag product expansion for labels 1,2,3,4") {
  EdgeSymbols sym = default_edge_symbols(3);
  LaurentMatrix x = weighted_zigzag_product({1, 2, 3, 4}, sym);
  LaurentPoly a0 = sym.a[0], a1 = sym.a[1], a2 = sym.a[2], a3 = sym.a[3];
  LaurentPoly b1 = sym.b[1], b2 = sym.b[2], b3 = sym.b[3];
  LaurentPoly c1 = sym.c[1], c2 = sym.c[2], c3 = sym.c[3];
  // Every cover uses a total edge multiplicity of (1+2+3+4) = 10, so each
  // monomial below has total degree 10.
  LaurentPoly expect =
      a3.pow(4) * b1 * b2.pow(2) * b3.pow(3) +
      a2 * a3.pow(3) * b1 * b2.pow(2) * b3.pow(2) * c3 +
      a1 * a3.pow(3) * b1 * b2 * b3.pow(2) * c2 * c3 +
      a2.pow(2) * a3.pow(2) * b1 * b2.pow(2) * b3 * c3.pow(2) +
      a0 * a3.pow(3) * b2 * b3.pow(2) * c1 * c2 * c3 +
      a1 * a2 * a3.pow(2) * b1 * b2 * b3 * c2 * c3.pow(2) +
      a2.pow(3) * a3 * b1 * b2.pow(2) * c3.pow(3) +
      a0 * a2 * a3.pow(2) * b2 * b3 * c1 * c2 * c3.pow(2) +
      a1.pow(2) * a3.pow(2) * b1 * b3 * c2.pow(2) * c3.pow(2) +
      a1 * a2.pow(2) * a3 * b1 * b2 * c2 * c3.pow(3) +
      a0 * a1 * a3.pow(2) * b3 * c1 * c2.pow(2) * c3.pow(2) +
      a0 * a2.pow(2) * a3 * b2 * c1 * c2 * c3.pow(3) +
      a1.pow(2) * a2 * a3 * b1 * c2.pow(2) * c3.pow(3) +
      a0 * a1 * a2 * a3 * c1 * c2.pow(2) * c3.pow(3);
  CHECK(x.at(1, 1) == expect);
  // Specializing all edge weights to 1 recovers the plain cover count.
  CHECK(x.substituted_all_ones().at(1, 1) == LaurentPoly(14));
}

TEST_CASE("q-count of down-up permutations by inversions") {
  Indeterminate q("q");
  LaurentPoly qv = LaurentPoly::variable(q);
  CHECK(q_euler_poly(2, q) == qv);  // the single down-up pair has one inversion
  CHECK(q_euler_poly(3, q) == qv + qv.pow(2));
  CHECK(q_euler_poly(4, q) == qv.pow(2) + qv.pow(3) + 2 * qv.pow(4) + qv.pow(5));
  LaurentPoly e5 = qv.pow(2) + 2 * qv.pow(3) + 3 * qv.pow(4) + 4 * qv.pow(5) +
                   3 * qv.pow(6) + 2 * qv.pow(7) + qv.pow(8);
  CHECK(q_euler_poly(5, q) == e5);
  // Sum of coefficients recovers the plain counts.
  CHECK(q_euler_poly(6, q).sum_of_coefficients() == 61);
  CHECK(q_euler_poly(7, q).sum_of_coefficients() == 272);
}

TEST_CASE("q-count of 132-avoiding permutations by inversions") {
  Indeterminate q("q");
  LaurentPoly qv = LaurentPoly::variable(q);
  CHECK(q_catalan_poly(1, q) == LaurentPoly(1));
  CHECK(q_catalan_poly(2, q) == LaurentPoly(1) + qv);
  CHECK(q_catalan_poly(3, q) == LaurentPoly(1) + qv + 2 * qv.pow(2) + qv.pow(3));
  LaurentPoly c4 = LaurentPoly(1) + qv + 2 * qv.pow(2) + 3 * qv.pow(3) +
                   3 * qv.pow(4) + 3 * qv.pow(5) + qv.pow(6);
  CHECK(q_catalan_poly(4, q) == c4);
  CHECK(q_catalan_poly(5, q).sum_of_coefficients() == 42);
  CHECK(q_catalan_poly(6, q).sum_of_coefficients() == 132);
}
