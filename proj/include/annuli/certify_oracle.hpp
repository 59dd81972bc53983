#pragma once
// Value-semigroup delta oracle (included from certify.hpp).
#include <map>
#include <set>

#include "annuli/residue.hpp"
#include "annuli/series.hpp"

namespace annuli {

namespace oracle_detail {

template <class R>
int order_of(const Ser<R>& a) {
  for (int k = 1; k < int(a.size()); ++k)
    if (!zero_test(a[k])) return k;
  return -1;
}

}  // namespace oracle_detail

template <class R>
long delta_semigroup_oracle(const Ser<R>& x0, const Ser<R>& y0, int bound) {
  Ser<R> x(bound, R(0)), y(bound, R(0));
  for (int k = 1; k < bound && k < int(x0.size()); ++k) x[k] = x0[k];
  for (int k = 1; k < bound && k < int(y0.size()); ++k) y[k] = y0[k];
  int ox = oracle_detail::order_of(x), oy = oracle_detail::order_of(y);
  if (ox < 0 && oy < 0) throw Error(Err::BoundTooSmall, "both coordinates vanish below the bound");
  if (ox < 0) ox = bound;
  if (oy < 0) oy = bound;

  // echelon basis keyed by leading order, leading coefficient 1
  std::map<int, Ser<R>> piv;
  auto insert = [&](Ser<R> v) {
    for (int i = 1; i < bound;) {
      if (zero_test(v[i])) {
        ++i;
        continue;
      }
      auto it = piv.find(i);
      if (it == piv.end()) {
        R c = inv(v[i]);
        for (int j = i; j < bound; ++j) v[j] = v[j] * c;
        piv.emplace(i, std::move(v));
        return;
      }
      R c = v[i];
      for (int j = i; j < bound; ++j)
        if (!it->second[j].is_zero()) v[j] = v[j] - c * it->second[j];
    }
  };

  Ser<R> xa(bound, R(0));
  xa[0] = R(1);
  for (int a = 0; long(a) * ox < bound; ++a) {
    Ser<R> m = xa;
    for (int b = 0; long(a) * ox + long(b) * oy < bound; ++b) {
      if (a + b > 0) insert(m);
      m = mul_trunc(m, y, bound);
    }
    xa = mul_trunc(xa, x, bound);
  }

  std::set<int> S{0};
  for (const auto& kv : piv) S.insert(kv.first);
  int mult = std::min(ox, oy);
  int c = bound;  // first order from which everything below the bound is attained
  while (c > 0 && S.count(c - 1)) --c;
  if (bound - c < mult) throw Error(Err::BoundTooSmall, "conductor not reached below the bound");
  long gaps = 0;
  for (int k = 1; k < c; ++k)
    if (!S.count(k)) ++gaps;
  return gaps;
}

}  // namespace annuli
