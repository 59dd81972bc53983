#pragma once
// Generators for the families (a)-(w) of embedded annuli, the shared Laurent
// recursion, the antisymmetric solver for (j), tower transformations and the
// expected singularity data of each family.
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "annuli/curve.hpp"
#include "annuli/local.hpp"

namespace annuli {

struct SeriesId {
  char letter = 'a';
  std::map<std::string, long> params;
  long operator[](const std::string& k) const;
  std::string str() const;  // "b(k=1,m=2)"
  friend bool operator<(const SeriesId& a, const SeriesId& b) {
    return a.letter != b.letter ? a.letter < b.letter : a.params < b.params;
  }
};

struct ParamRange {
  std::string name;
  long lo = 0, hi = 0;
};

struct FamilyInfo {
  char letter;
  std::vector<ParamRange> params;  // default verification ranges
  std::string formula;
  std::string constraints;
};

const std::vector<FamilyInfo>& families();
const FamilyInfo& family(char letter);  // throws ExcludedParams on unknown letters

// [P(u) - P(1)] u^e / (u - 1)
Laurent recursion_step(const Laurent& P, int e);
// the polynomial Z with Z(t) - Z(1/t) = (t-1)^(2m+1) (t+1)^(2n+1) t^(-m-n-1)
Laurent solve_Z(long m, long n);

enum class TowerMode { Forward, Reverse, Mid };
// Forward: (x, x y + K) with K = -(x y)(oo) when x y is bounded at oo, else 0.
// Reverse: (x, [y(t) - y(t1)] / x); t1 defaults to the only nonzero root of x.
// Mid:     (x, (x + 1/4) y) for x = t(t - 1).
Curve tower(const Curve& c, TowerMode mode, std::optional<Scalar> t1 = std::nullopt);

// throws ExcludedParams naming the violated constraint
void validate(const SeriesId& id);
Curve gen_series(const SeriesId& id);
// series (b) rebuilt from y = t - 1/2 by m mid-towers and k reverse towers
Curve gen_b_by_towers(long k, long m);

struct ExpectedPoint {
  std::optional<mpq_class> at;  // rational parameter when the location is known
  int degree = 1;               // orbit degree of the point
  long mu = 0;
  std::string label;            // "A_k" when the type is an A-singularity
};

struct ExpectedInvariants {
  bool smooth = false;
  std::vector<ExpectedPoint> points;
  std::string notes;
};

ExpectedInvariants expected_invariants(const SeriesId& id);
// Milnor number of a branch x = tau^n whose other coordinate has nonzero terms
// exactly at the given exponents (increasing)
long mu_from_support(long n, const std::vector<long>& exps);

struct MatchResult {
  bool ok = true;
  std::string detail;
};
MatchResult match_expected(const std::vector<PointAnalysis>& found, const ExpectedInvariants& ex);

// grid of ids: explicit ranges override defaults; with keepExcluded the
// invalid points are kept (to be reported as skipped)
std::vector<SeriesId> series_grid(char letter, const std::map<std::string, std::pair<long, long>>& ranges,
                                  bool keepExcluded);
std::vector<SeriesId> default_grid();

}  // namespace annuli
