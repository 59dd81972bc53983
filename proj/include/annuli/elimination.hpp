#pragma once
// Exact elimination of u from two polynomials in (u, v) over Q(sqrt d).
// Res_u is reconstructed from images modulo word-size primes (evaluation in v,
// Euclid mod p, Newton interpolation) and combined by CRT under a proven
// coefficient bound, so the result is exact.
#include <cstdint>
#include <vector>

#include "annuli/laurent.hpp"

namespace annuli {

using BiPoly = Poly<QPoly>;  // outer variable u, coefficients in Q(sqrt d)[v]

struct ElimStats {
  int degree_bound = 0;     // upper bound on deg_v of the resultant
  int valuation_bound = 0;  // lower bound on ord_v of the resultant
  int primes = 0;
  int points = 0;
};

QPoly resultant_u(const BiPoly& F, const BiPoly& G, ElimStats* stats = nullptr);

// max (or min) weight perfect matching on a square matrix; entries < -1e8 mean forbidden
long assignment_bound(const std::vector<std::vector<long>>& w, bool maximize);

namespace modp {
uint64_t mul(uint64_t a, uint64_t b, uint64_t p);
uint64_t pow(uint64_t a, uint64_t e, uint64_t p);
uint64_t inv(uint64_t a, uint64_t p);
bool is_prime(uint64_t n);
// sqrt of a modulo p, or false when a is a non-residue
bool sqrt(uint64_t a, uint64_t p, uint64_t& r);
// resultant of dense polynomials (low to high) modulo p
uint64_t resultant(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p);
}  // namespace modp

}  // namespace annuli
