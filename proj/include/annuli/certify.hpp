#pragma once
// Global certification: the double-point balance ledger, exact injectivity via
// the symmetric double-point system, the embedding verdict, the regularity
// inequality, the estimates audit and the value-semigroup delta oracle.
#include <optional>
#include <string>
#include <vector>

#include "annuli/curve.hpp"
#include "annuli/elimination.hpp"
#include "annuli/local.hpp"

namespace annuli {

struct Ledger {
  long twoDeltaMax = 0;
  std::vector<PointAnalysis> finite;
  long finiteSum = 0;  // sum of degree * 2 delta over the finite points
  PlaceData inf, zero;
  bool tangent = false;
  std::optional<Tangency> tan;
  long twoDeltaInf = 0;  // 2d_oo + 2d_0, or the tangency count
  long indexSum = 0;     // i_0 + i_oo + finiteSum (must be 2 when not tangent)
  bool balanced = false;
  long E = 0, reserve = 0;  // E and 2 delta_max - E
  int nuInf = 0;            // nu_0 + nu_oo (+ nu_tan)
  long extNuTotal = 0;
  long sigma = 0;
  long margin = 0;  // sigma - extNuTotal
  bool regularityOK = false;
  std::string summary() const;  // "6 = 2+2+2+0"
};

// ledger of a classified normal form
Ledger ph_ledger(const Normalized& nf);
// finite points use x as base unless y has the smaller pole budget in type (-/+)
bool finite_base_is_x(const Normalized& nf);

// D~(u, v): (f(t) - f(t'))/(t - t') times the minimal power of v = t t', written
// in u = t + t', v = t t'
BiPoly symmetric_quotient(const Laurent& f);

struct Witness {
  QPoly vFactor;                   // squarefree factor in v
  std::vector<QPoly> uFactor;      // monic factor in u over Q(sqrt d)[v]/(vFactor)
  std::optional<Scalar> u, v;      // explicit values when both factors are linear
  bool verified = false;
};

struct Injectivity {
  bool injective = true;
  bool positiveDimensional = false;  // D~ and E~ share a factor
  std::optional<Witness> witness;
  bool diagonalOK = true;  // singular parameters appear on u^2 = 4v
  int resultantDegree = 0;
  ElimStats stats;
};

Injectivity injectivity_certificate(const Curve& c);
// exact re-check of a witness in the tower Q(sqrt d)[v][u][t]
bool verify_witness(const Curve& c, const Witness& w);

struct Verdict {
  bool embedding = false;
  std::string reason;  // "", "PowerCover 2", "SelfIntersection", "NonProper", ...
  Primitivity prim;
  Injectivity inj;
  std::optional<Normalized> nf;
  std::optional<Ledger> ledger;
};

// throws Error(Internal) when balance and injectivity disagree
Verdict embedding_verdict(const Curve& c);

struct AuditItem {
  std::string name;
  std::string lhs, rhs;  // exact values of both sides
  bool pass = true;
};

std::vector<AuditItem> estimates_audit(const Normalized& nf, const Ledger& L);
bool audits_pass(const std::vector<AuditItem>& a);

// delta of the branch (x(tau), y(tau)) from the gaps of its value semigroup;
// series are given from tau^0 and truncated at bound; BoundTooSmall when the
// conductor is not visible below bound
template <class R>
long delta_semigroup_oracle(const Ser<R>& x, const Ser<R>& y, int bound);

}  // namespace annuli

#include "annuli/certify_oracle.hpp"
