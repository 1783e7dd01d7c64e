#pragma once

#include <vector>

#include "snakedimer/matrix.hpp"

namespace snakedimer {

// Structural transfer matrices, 1-indexed entries.
//   R(a,b): (a+1) x (b+1), entry (i,j) = 1 iff i + j <= b + 2.
//   W(a):   (a+1) x (a+1) anti-diagonal of ones.
//   L(a,b) = W(a) * R(a,b)   (rows reversed).
//   U(a,b) = R(a,b) * W(b)   (columns reversed).
LaurentMatrix transfer_R(int a, int b);
LaurentMatrix antidiagonal_W(int a);
LaurentMatrix transfer_L(int a, int b);
LaurentMatrix transfer_U(int a, int b);

// Weighted factors.
//   weighted_U(n,t): (n+1) x (n+1), entry (i,j) = t^(n+2-i-j) when i+j <= n+2, else 0.
//   weighted_T(a,b,t): (a+1) x (b+1), diagonal entry (i,i) = t^(i-1).
//   weighted_W(k,t): (k+1) x (k+1), entries (i, k+2-i) = t^k.
LaurentMatrix weighted_U(int n, const LaurentPoly& t);
LaurentMatrix weighted_T(int a, int b, const LaurentPoly& t);
LaurentMatrix weighted_W(int k, const LaurentPoly& t);

// Edge weight symbols for a snake with n tiles: a[0..n], b[1..n], c[1..n]
// (index 0 of b and c is unused).
struct EdgeSymbols {
  std::vector<LaurentPoly> a, b, c;
};
// Fresh named symbols a0..an, b1..bn, c1..cn.
EdgeSymbols default_edge_symbols(int tiles);
// All weights equal to one.
EdgeSymbols unit_edge_symbols(int tiles);

// Products over a multiplicity vector m = (m_0, ..., m_n), n = tiles:
//   straight_product: R(m0,m0) R(m0,m1) R(m1,m2) ... R(m_{n-1},m_n)
//   zigzag_product:   R(m0,m0) R(m0,m1) L(m1,m2) ... L(m_{n-1},m_n)
// The (i,j) entry counts covers where the end multiplicities are lowered to
// m0+1-i and mn+1-j.  The (1,1) entry is the full cover count.
LaurentMatrix straight_product(const std::vector<int>& m);
LaurentMatrix zigzag_product(const std::vector<int>& m);

// Weighted counterparts; entries are polynomials in the given edge symbols.
//   straight: U(m0;a0) * prod_k T(m_{k-1},m_k; b_k c_k) U(m_k; a_k)
//   zigzag:   U(m0;b1) T(m0,m1; a0 c1) U(m1;a1)
//             * prod_{k>=2} W(m_{k-1}; b_k) T(m_{k-1},m_k; b_k^{-1} c_k) U(m_k; a_k)
LaurentMatrix weighted_straight_product(const std::vector<int>& m, const EdgeSymbols& s);
LaurentMatrix weighted_zigzag_product(const std::vector<int>& m, const EdgeSymbols& s);

// Inversion generating function of the down-up alternating permutations of
// size n, as a polynomial in q: q^(floor(n^2/4)) times the weighted straight
// (1,1) entry on the 2 x (n-1) grid with alternating q / 1/q bottom weights.
LaurentPoly q_euler_poly(int n, const Indeterminate& q);
// Carlitz-Riordan q-Catalan polynomial via the weighted zigzag product with
// unit a/b weights and c = q.
LaurentPoly q_catalan_poly(int n, const Indeterminate& q);

}  // namespace snakedimer
