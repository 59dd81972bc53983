#pragma once
// Local invariants: singular parameters, Puiseux characteristic data at finite
// points and at t = 0, t = oo, Milnor numbers, codimensions, place indices,
// hidden double points and the tangency analysis when ps = rq.
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "annuli/curve.hpp"
#include "annuli/residue.hpp"
#include "annuli/series.hpp"

namespace annuli {

using Res = Residue<Scalar>;

struct PuiseuxBranch {
  bool baseX = true;      // series of the other coordinate in the base coordinate
  int e = 0;              // base = c*z^e: e = n > 0 at finite points, -P at a place
  int lead = 0;           // first z-exponent of the other coordinate
  std::vector<int> charExps;                      // z-exponents k_j (d does not divide k_j)
  std::vector<std::pair<long, long>> pairs;      // (m_j, n_j)
  std::vector<int> essentialZeros;                // scanned essential positions with zero coefficient
  std::vector<std::string> essentialCoeffs;       // coefficients at the characteristic exponents
  int truncation = 0;                             // last z-exponent examined
  bool complete = false;
  int ramification() const { return std::abs(e); }
  // exponents v_j in the sign convention of the Milnor formulas (-k_j at places)
  std::vector<long> v() const;
  int nu() const { return int(essentialZeros.size()); }
};

// both displayed forms of the Milnor / branch sum; they must agree
long milnor_from_pairs(const std::vector<std::pair<long, long>>& pairs);
long milnor_from_exponents(const std::vector<long>& v, const std::vector<std::pair<long, long>>& pairs);
long branch_sum(const PuiseuxBranch& b);  // throws IncompleteBranch; checks both forms
int codimension_nu(const PuiseuxBranch& b);  // throws IncompleteBranch
std::string singularity_label(const PuiseuxBranch& b);  // "A_k" or the pair list

// branch x = tau^n, y = sum y[k] tau^k (y[0] ignored), scanned up to tau^kmax
PuiseuxBranch monomial_base_branch(int n, const Ser<Scalar>& y, int kmax);

struct TruncationPolicy {
  int start = 0;
  int cap = 0;
  static TruncationPolicy for_profile(const Profile& pr);  // honours ANNULI_TRUNC_CAP
};

// squarefree factors (rational linear ones split off) of the common zeros of
// x' and y' in C*
std::vector<QPoly> singular_factors(const Curve& c);

struct PointAnalysis {
  QPoly factor;       // modulus after dynamic splitting
  int degree = 1;     // orbit degree
  int xOrder = 0, yOrder = 0;
  PuiseuxBranch branch;
  long mu = 0;        // = 2 delta
  int nu = 0;
  int extNu = 0;      // (n - 2) + nu with n the ramification
  std::string label;
};

std::vector<PointAnalysis> analyze_point(const Curve& c, const QPoly& factor, bool baseX, const TruncationPolicy& tp);
std::vector<PointAnalysis> analyze_singularities(const Curve& c, bool baseX, const TruncationPolicy& tp);

// Taylor coefficients of f(s + tau) - f(s), tau^0..tau^(N-1), over the residue ring
Ser<Res> taylor_at(const Laurent& f, const Res& s, int N);

struct PlaceData {
  bool atInf = true;
  PuiseuxBranch branch;
  long sigma = 0;       // branch sum
  long index = 0;       // i_P (valid when ps != rq)
  long twoDeltaMax = 0; // (p-1)(q-1)-(p'-1)+max(ps,rq) (or the r,s analogue)
  long twoDelta = 0;
  int nu = 0;
};

PuiseuxBranch place_branch(const Curve& c, bool atInf, const TruncationPolicy& tp);
PlaceData place_data(const Curve& c, const Profile& pr, bool atInf, const TruncationPolicy& tp);

struct Tangency {
  long I = 0;            // -sum over matching roots of ord(y(t)-y(t'))/R~
  long oMax = 0;
  int u = 0;             // coinciding lattice terms
  int nuTan = 0;
  long twoMinusIndexSum = 0;  // 2 - i_0 - i_oo = S_oo + S_0 + 2I - 2
  long printedThird = 0;      // 2pq*X (X possibly fractional: stored times denominator)
  std::string printedX;       // exact rational X
  bool leadingEqual = false;  // E^{p1} = F^{p1}
  std::vector<std::pair<long, long>> commonPairs;  // (w_j, v_j)
};

Tangency tangency_analysis(const Curve& c, const Profile& pr, const PlaceData& inf, const PlaceData& zero,
                           const TruncationPolicy& tp);

}  // namespace annuli
