#include <numeric>
#include <random>

#include "annuli/catalog.hpp"
#include "annuli/certify.hpp"
#include "doctest.h"

using namespace annuli;

namespace {

Curve item(char letter, std::map<std::string, long> params = {}) { return gen_series(SeriesId{letter, params}); }

QPoly lin(const Scalar& a) { return QPoly({-a, Scalar(1)}); }

struct Analyzed {
  Normalized nf;
  TruncationPolicy tp;
  std::vector<PointAnalysis> pts;
  PlaceData inf, zero;
};

Analyzed run(const Curve& c) {
  Analyzed a{classify(c), {}, {}, {}, {}};
  a.tp = TruncationPolicy::for_profile(a.nf.profile);
  a.pts = analyze_singularities(a.nf.curve, finite_base_is_x(a.nf), a.tp);
  a.inf = place_data(a.nf.curve, a.nf.profile, true, a.tp);
  a.zero = place_data(a.nf.curve, a.nf.profile, false, a.tp);
  return a;
}

bool tangent(const Profile& pr) { return pr.p() * pr.s() == pr.r() * pr.q() && pr.p() > 0 && pr.r() > 0; }

// independent delta of the branch: doubling bound until the conductor shows
long oracle_delta(const Ser<Scalar>& x, const Ser<Scalar>& y) {
  for (int bound = 32;; bound *= 2) {
    try {
      return delta_semigroup_oracle<Scalar>(x, y, bound);
    } catch (const Error& e) {
      if (e.code() != Err::BoundTooSmall || bound > 4096) throw;
    }
  }
}

}  // namespace

TEST_CASE("singular parameters") {
  auto w = singular_factors(item('w'));
  REQUIRE(w.size() == 2);
  CHECK(w[0] == lin(Scalar(1)));
  CHECK(w[1] == QPoly({Scalar(1), Scalar(1), Scalar(1)}));
  auto u = singular_factors(item('u'));
  REQUIRE(u.size() == 1);
  CHECK(u[0] == lin(Scalar(1)));
  CHECK(singular_factors(item('s', {{"n", 1}})).empty());
}

TEST_CASE("finite Puiseux data") {
  Analyzed w = run(item('w'));
  REQUIRE(w.pts.size() == 2);
  for (const auto& p : w.pts) {
    CHECK(p.branch.pairs == std::vector<std::pair<long, long>>{{3, 2}});
    CHECK(p.label == "A_2");
    CHECK(p.mu == 2);
    CHECK(p.nu == 1);
    CHECK(p.extNu == 1);
  }
  CHECK(w.pts[1].degree == 2);

  Analyzed u = run(item('u'));
  REQUIRE(u.pts.size() == 1);
  CHECK(u.pts[0].branch.pairs == std::vector<std::pair<long, long>>{{9, 2}});
  CHECK(u.pts[0].mu == 8);
  CHECK(u.pts[0].nu == 4);
  CHECK(u.pts[0].extNu == 4);
  CHECK(u.pts[0].branch.essentialZeros == std::vector<int>{1, 3, 5, 7});

  Analyzed b = run(item('b', {{"k", 1}, {"m", 2}}));
  REQUIRE(b.pts.size() == 1);
  CHECK(b.pts[0].factor == lin(Scalar(mpq_class(1, 2))));
  CHECK(b.pts[0].branch.pairs == std::vector<std::pair<long, long>>{{5, 2}});
  CHECK(b.pts[0].nu == 2);
  CHECK(b.pts[0].label == "A_4");
}

TEST_CASE("Milnor numbers from characteristic pairs") {
  CHECK(milnor_from_pairs({{3, 2}}) == 2);
  CHECK(milnor_from_pairs({{9, 2}}) == 8);
  CHECK(milnor_from_pairs({{3, 2}, {7, 2}}) == 16);
  CHECK(milnor_from_exponents({6, 7}, {{3, 2}, {7, 2}}) == 16);
  CHECK(milnor_from_exponents({3}, {{3, 2}}) == 2);

  // x = tau^4, y = tau^6 + tau^7
  Ser<Scalar> y(8, Scalar(0));
  y[6] = y[7] = Scalar(1);
  PuiseuxBranch br = monomial_base_branch(4, y, 60);
  REQUIRE(br.complete);
  CHECK(br.pairs == std::vector<std::pair<long, long>>{{3, 2}, {7, 2}});
  CHECK(branch_sum(br) == 16);

  // truncated before the gcd chain closes
  Ser<Scalar> z(7, Scalar(0));
  z[6] = Scalar(1);
  PuiseuxBranch open = monomial_base_branch(4, z, 6);
  CHECK_FALSE(open.complete);
  CHECK_THROWS_AS(codimension_nu(open), Error);
}

TEST_CASE("places at infinity") {
  Analyzed u = run(item('u'));
  CHECK(u.inf.branch.pairs == std::vector<std::pair<long, long>>{{3, 2}});
  CHECK(u.inf.index == -4);
  CHECK(u.zero.index == -2);
  CHECK(u.inf.twoDelta == 0);
  CHECK(u.zero.twoDelta == 0);

  Analyzed w = run(item('w'));
  CHECK(w.inf.branch.pairs == std::vector<std::pair<long, long>>{{1, 2}});
  CHECK(w.inf.index == -2);
  CHECK(w.zero.index == -2);
  CHECK(w.inf.twoDelta == 0);
  CHECK(w.zero.twoDelta == 0);

  Analyzed s = run(item('s', {{"n", 1}}));
  CHECK(s.pts.empty());
  CHECK(s.inf.twoDelta == 12);
  CHECK(s.zero.twoDelta == 0);
  CHECK(s.inf.nu == 3);
}

TEST_CASE("tangency at infinity") {
  Analyzed r = run(item('r', {{"n", 0}}));
  REQUIRE(tangent(r.nf.profile));
  CHECK(two_delta_max(r.nf.profile) == 14);
  REQUIRE(r.pts.size() == 1);
  CHECK(r.pts[0].mu == 12);
  Tangency tan = tangency_analysis(r.nf.curve, r.nf.profile, r.inf, r.zero, r.tp);
  CHECK(two_delta_max(r.nf.profile) - tan.twoMinusIndexSum == 2);
  CHECK(tan.leadingEqual);
  CHECK(tan.u == 1);
  CHECK(tan.nuTan == 1);
}

TEST_CASE("root choice does not change the vanishing pattern") {
  // the degree-2 cusp orbit of (w), split over Q(sqrt -3)
  Curve w = item('w');
  Scalar omega(mpq_class(-1, 2), mpq_class(1, 2), -3);
  Scalar omegaBar(mpq_class(-1, 2), mpq_class(-1, 2), -3);
  TruncationPolicy tp = TruncationPolicy::for_profile(exponent_profile(w));
  auto a = analyze_point(w, lin(omega), true, tp);
  auto b = analyze_point(w, lin(omegaBar), true, tp);
  auto joint = analyze_point(w, QPoly({Scalar(1), Scalar(1), Scalar(1)}), true, tp);
  REQUIRE(a.size() == 1);
  REQUIRE(b.size() == 1);
  REQUIRE(joint.size() == 1);
  for (const auto* p : {&b[0], &joint[0]}) {
    CHECK(p->branch.charExps == a[0].branch.charExps);
    CHECK(p->branch.essentialZeros == a[0].branch.essentialZeros);
    CHECK(p->branch.pairs == a[0].branch.pairs);
    CHECK(p->mu == a[0].mu);
  }
  // the same point through the y-base gives the same Milnor number
  auto viaY = analyze_point(w, lin(Scalar(1)), false, tp);
  REQUIRE(viaY.size() == 1);
  CHECK(viaY[0].mu == 2);
}

TEST_CASE("random cuspidal branches agree with the semigroup oracle") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> ram(2, 6), coef(-3, 3), count(1, 4);
  for (int trial = 0; trial < 50; ++trial) {
    int n = ram(rng);
    std::uniform_int_distribution<int> ex(n + 1, 24);
    Ser<Scalar> y(31, Scalar(0));
    for (int j = count(rng); j > 0; --j) {
      int c = coef(rng);
      y[ex(rng)] = Scalar(c == 0 ? 1 : c);
    }
    y[29] = Scalar(1);  // closes the gcd chain for every n <= 6
    Ser<Scalar> x(31, Scalar(0));
    x[n] = Scalar(1);
    PuiseuxBranch br = monomial_base_branch(n, y, 60);
    CAPTURE(n);
    CAPTURE(br.charExps.size());
    REQUIRE(br.complete);
    long mu = milnor_from_pairs(br.pairs);
    CHECK(mu == milnor_from_exponents(br.v(), br.pairs));
    CHECK(2 * oracle_delta(x, y) == mu);
    CHECK(mu <= long(n) * codimension_nu(br));
  }
}

TEST_CASE("local invariants over the catalog grid") {
  for (const auto& id : default_grid()) {
    CAPTURE(id.str());
    Analyzed a = run(gen_series(id));
    const Profile& pr = a.nf.profile;
    long finite = 0;
    for (const auto& p : a.pts) {
      finite += p.degree * p.mu;
      CHECK(p.mu == milnor_from_exponents(p.branch.v(), p.branch.pairs));
      CHECK(p.mu <= long(p.branch.e) * p.nu);
      CHECK(p.extNu == p.branch.e - 2 + p.nu);
      for (const auto& [m, k] : p.branch.pairs) CHECK(std::gcd(m, k) == 1);
    }
    CHECK(a.inf.twoDelta >= 0);
    CHECK(a.zero.twoDelta >= 0);
    if (pr.pp() == 1) CHECK(a.inf.twoDelta == 0);
    if (pr.rp() == 1) CHECK(a.zero.twoDelta == 0);
    if (!tangent(pr)) CHECK(a.inf.index + a.zero.index + finite == 2);
  }
}
