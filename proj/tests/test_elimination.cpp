#include <random>

#include "annuli/elimination.hpp"
#include "doctest.h"

using namespace annuli;

namespace {

QPoly rand_v(std::mt19937& rng, int deg, int val, long d) {
  std::uniform_int_distribution<int> dist(-6, 6), den(1, 3);
  std::vector<Scalar> c(deg + 1);
  for (int j = val; j <= deg; ++j)
    c[j] = d == 1 ? Scalar(mpq_class(dist(rng), den(rng)))
                  : Scalar(mpq_class(dist(rng), den(rng)), mpq_class(dist(rng), den(rng)), d);
  if (c[deg].is_zero()) c[deg] = Scalar(1);
  return QPoly(c);
}

BiPoly rand_bi(std::mt19937& rng, int du, int dv, long d) {
  std::uniform_int_distribution<int> vd(0, dv), vv(0, 2);
  std::vector<QPoly> c(du + 1);
  for (auto& x : c) {
    int hi = vd(rng);
    x = rand_v(rng, hi, std::min(hi, vv(rng)), d);
  }
  return BiPoly(c);
}

}  // namespace

TEST_CASE("modular primitives") {
  uint64_t p = 1000000007ULL;
  CHECK(modp::is_prime(p));
  CHECK(!modp::is_prime(1000000007ULL * 3));
  CHECK(modp::mul(modp::inv(12345, p), 12345, p) == 1);
  uint64_t r;
  CHECK(modp::sqrt(2, 7, r));
  CHECK(modp::mul(r, r, 7) == 2);
  CHECK(!modp::sqrt(3, 7, r));
  CHECK(modp::sqrt(5, p, r) == (modp::pow(5, (p - 1) / 2, p) == 1));
  // Res(t-3, t-7) = -4
  CHECK(modp::resultant({p - 3, 1}, {p - 7, 1}, p) == p - 4);
}

TEST_CASE("assignment bounds") {
  std::vector<std::vector<long>> w{{1, 5, 0}, {2, 4, 7}, {3, 0, 6}};
  CHECK(assignment_bound(w, true) == 5 + 7 + 3);
  CHECK(assignment_bound(w, false) == 0 + 2 + 0);
}

TEST_CASE("elimination examples") {
  // Res_u(u^2 - v, u - 1) = 1 - v
  BiPoly f(std::vector<QPoly>{QPoly(std::vector<Scalar>{Scalar(0), Scalar(-1)}), QPoly(), QPoly(1)});
  BiPoly g(std::vector<QPoly>{QPoly(-1), QPoly(1)});
  CHECK(resultant_u(f, g) == QPoly(std::vector<Scalar>{Scalar(1), Scalar(-1)}));
  // common factor gives zero
  CHECK(resultant_u(f * g, g).is_zero());
}

TEST_CASE("multi-modular elimination agrees with the subresultant sequence") {
  std::mt19937 rng(11);
  for (long d : {1L, 2L, 5L, -3L}) {
    for (int it = 0; it < 25; ++it) {
      std::uniform_int_distribution<int> du(1, 4), dv(0, 4);
      BiPoly F = rand_bi(rng, du(rng), dv(rng), d), G = rand_bi(rng, du(rng), dv(rng), d);
      ElimStats st;
      QPoly fast = resultant_u(F, G, &st);
      QPoly slow = resultant(F, G);
      CHECK(fast == slow);
      if (!slow.is_zero()) {
        CHECK(slow.deg() <= st.degree_bound);
        int val = 0;
        while (slow.coeffs()[val].is_zero()) ++val;
        CHECK(val >= st.valuation_bound);
      }
    }
  }
}
