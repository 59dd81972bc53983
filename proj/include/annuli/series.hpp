#pragma once
// Truncated power series over a commutative ring R containing Q (Scalar or
// Residue<Scalar>).  A series is a coefficient vector, index = exponent.
#include <gmpxx.h>

#include <vector>

#include "annuli/scalar.hpp"

namespace annuli {

template <class R>
using Ser = std::vector<R>;

template <class R>
R from_q(const mpq_class& q) {
  return R(Scalar(q));
}

template <class R>
Ser<R> mul_trunc(const Ser<R>& a, const Ser<R>& b, int n) {
  Ser<R> c(n, R(0));
  for (int i = 0; i < n && i < int(a.size()); ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j < n && j < int(b.size()); ++j)
      if (!b[j].is_zero()) c[i + j] = c[i + j] + a[i] * b[j];
  }
  return c;
}

// U^alpha to n terms for U[0] == 1 (J.C.P. Miller recurrence).
template <class R>
Ser<R> pow_unit(const Ser<R>& U, const mpq_class& alpha, int n) {
  Ser<R> W(n, R(0));
  if (n == 0) return W;
  W[0] = R(1);
  for (int k = 1; k < n; ++k) {
    R acc(0);
    for (int j = 1; j <= k && j < int(U.size()); ++j) {
      if (U[j].is_zero() || W[k - j].is_zero()) continue;
      mpq_class w(alpha);
      w *= mpq_class(j);
      w += mpq_class(j - k);
      if (w == 0) continue;
      acc = acc + from_q<R>(w) * (U[j] * W[k - j]);
    }
    W[k] = from_q<R>(rat(1, k)) * acc;
  }
  return W;
}

// 1/A to n terms; A[0] must be invertible (may throw Split for residues).
template <class R>
Ser<R> inv_series(const Ser<R>& A, int n) {
  Ser<R> B(n, R(0));
  if (n == 0) return B;
  R i0 = inv(A[0]);
  B[0] = i0;
  for (int k = 1; k < n; ++k) {
    R acc(0);
    for (int j = 1; j <= k && j < int(A.size()); ++j)
      if (!A[j].is_zero() && !B[k - j].is_zero()) acc = acc + A[j] * B[k - j];
    B[k] = -(acc * i0);
  }
  return B;
}

// Base coordinate b*tau^e*U(tau) with U[0] = 1 and e != 0, reparametrised by
// z = tau*U^(1/e) so that the base becomes b*z^e exactly.  For a Laurent
// series H(tau) = sum_i Hc[i] tau^(hval+i), returns [z^k] H(tau(z)) for k != 0
// via Lagrange-Buermann: (1/k) [tau^(k-1)] H'(tau) U^(-k/e).
// Requires Hc known through tau^k and U through tau^(k-hval).
template <class R>
R lagrange_coeff(int e, const Ser<R>& U, int hval, const Ser<R>& Hc, int k) {
  int need = k - hval + 1;  // terms of U^(-k/e) that can contribute
  if (need <= 0) return R(0);
  Ser<R> V = pow_unit(U, rat(-k, e), need);
  // H' = sum_i (hval+i) Hc[i] tau^(hval+i-1); pick tau^(k-1) in H' * V
  R acc(0);
  for (int i = 0; i < int(Hc.size()); ++i) {
    int ex = hval + i;
    int vi = k - ex;  // index into V
    if (vi < 0) break;
    if (vi >= need || Hc[i].is_zero() || ex == 0 || V[vi].is_zero()) continue;
    acc = acc + from_q<R>(mpq_class(ex)) * (Hc[i] * V[vi]);
  }
  return from_q<R>(rat(1, k)) * acc;
}

}  // namespace annuli
