#include "annuli/catalog.hpp"
#include "annuli/certify.hpp"
#include "doctest.h"

using namespace annuli;

namespace {

Laurent T() { return Laurent::t(); }
Laurent tp(int e) { return Laurent::mono(Scalar(1), e); }
Laurent c(const Scalar& s) { return Laurent(s); }
Laurent tm1(int e) { return pow(T() - c(Scalar(1)), e); }
Scalar half() { return Scalar(mpq_class(1, 2)); }

Curve item(char letter, std::map<std::string, long> params = {}) { return gen_series(SeriesId{letter, params}); }

// x = (t-1)^2 (t+a)/t, y = (t-1)^2 (t+b)/t^2; (a, b) = (2, 1/2) is item (w)
Curve w_family(const Scalar& a, const Scalar& b) { return {tm1(2) * (T() + c(a)) * tp(-1), tm1(2) * (T() + c(b)) * tp(-2)}; }

Ledger ledger_of(const Curve& cv) { return ph_ledger(classify(cv)); }

const AuditItem* audit(const std::vector<AuditItem>& a, const std::string& prefix) {
  for (const auto& x : a)
    if (x.name.rfind(prefix, 0) == 0) return &x;
  return nullptr;
}

void require_refuted(const Curve& cv) {
  Verdict v = embedding_verdict(cv);
  CHECK_FALSE(v.embedding);
  CHECK(v.reason == "SelfIntersection");
  REQUIRE(v.inj.witness);
  CHECK(v.inj.witness->verified);
  CHECK(verify_witness(cv, *v.inj.witness));
  if (v.ledger) CHECK_FALSE(v.ledger->balanced);
}

}  // namespace

TEST_CASE("maximal double point count") {
  CHECK(two_delta_max(exponent_profile(item('u'))) == 8);
  CHECK(two_delta_max(exponent_profile(item('w'))) == 6);
  CHECK(two_delta_max(classify(item('r', {{"n", 0}})).profile) == 14);
}

TEST_CASE("balance ledgers") {
  Ledger w = ledger_of(item('w'));
  CHECK(w.summary() == "6 = 2+2+2+0");
  CHECK(w.balanced);
  CHECK(w.indexSum == 2);
  Ledger u = ledger_of(item('u'));
  CHECK(u.summary() == "8 = 8+0");
  CHECK(u.balanced);
  Ledger r = ledger_of(item('r', {{"n", 0}}));
  CHECK(r.tangent);
  CHECK(r.summary() == "14 = 12+2");
  CHECK(r.balanced);
  CHECK(r.twoDeltaMax <= r.E);
}

TEST_CASE("regularity inequality") {
  Ledger u = ledger_of(item('u'));
  CHECK(u.sigma == 4);
  CHECK(u.extNuTotal == 4);
  CHECK(u.margin == 0);
  CHECK(u.regularityOK);
  Ledger w = ledger_of(item('w'));
  CHECK(w.sigma == 3);
  CHECK(w.extNuTotal == 3);
  CHECK(w.margin == 0);
  Ledger s = ledger_of(item('s', {{"n", 1}}));
  CHECK(s.finite.empty());
  CHECK(s.sigma == 3);
  CHECK(s.margin == s.sigma - s.inf.nu - s.zero.nu);
  CHECK(s.margin == 0);
}

TEST_CASE("estimates audit") {
  Normalized nf = classify(item('u'));
  auto a = estimates_audit(nf, ph_ledger(nf));
  CHECK(audits_pass(a));
  const AuditItem* d = audit(a, "D >= 0");
  REQUIRE(d);
  CHECK(d->rhs == "0");
  const AuditItem* mu = audit(a, "mu <= n nu");
  REQUIRE(mu);
  CHECK(mu->lhs == "8");
  CHECK(mu->rhs == "8");

  Normalized w = classify(item('w'));
  auto aw = estimates_audit(w, ph_ledger(w));
  CHECK(audits_pass(aw));
  int cusps = 0;
  for (const auto& x : aw)
    if (x.name.rfind("mu <= n nu", 0) == 0) {
      CHECK(x.lhs == "2");
      CHECK(x.rhs == "2");
      ++cusps;
    }
  CHECK(cusps == 2);

  // tangent case skips D and uses the tangency bounds
  Normalized r = classify(item('r', {{"n", 0}}));
  auto ar = estimates_audit(r, ph_ledger(r));
  CHECK(audits_pass(ar));
  CHECK(audit(ar, "D >= 0") == nullptr);
  CHECK(audit(ar, "2 delta_inf <= 2 nu_inf") != nullptr);
}

TEST_CASE("embedding verdicts") {
  Verdict w = embedding_verdict(item('w'));
  CHECK(w.embedding);
  CHECK(w.inj.injective);
  CHECK(w.inj.diagonalOK);
  CHECK_FALSE(w.inj.witness);

  Verdict v = embedding_verdict(item('v'));
  CHECK(v.embedding);
  REQUIRE(v.ledger);
  CHECK(v.ledger->summary() == "8 = 4+4+0");

  Verdict pc = embedding_verdict({T() * T(), pow(T(), 4)});
  CHECK_FALSE(pc.embedding);
  CHECK(pc.reason == "PowerCover 2");
}

TEST_CASE("negative fixtures have verified witnesses") {
  // two self-intersecting instances
  require_refuted({tm1(2) * (T() + c(Scalar(1))) * tp(-2), tm1(4) * tp(-2)});
  require_refuted({tm1(4) * tp(-2), tm1(2) * (T() + c(Scalar(1))) * tp(-1)});
  // the (w) family away from (2, 1/2)
  std::vector<std::pair<Scalar, Scalar>> grid = {{Scalar(2), Scalar(1)},
                                                 {Scalar(1), half()},
                                                 {Scalar(3), half()},
                                                 {Scalar(2), Scalar(2)},
                                                 {Scalar(3), Scalar(1)}};
  for (const auto& [a, b] : grid) {
    CAPTURE(a.str());
    CAPTURE(b.str());
    require_refuted(w_family(a, b));
  }
  CHECK(w_family(Scalar(2), half()) == item('w'));
}

TEST_CASE("a wrong witness is rejected") {
  Verdict v = embedding_verdict({tm1(4) * tp(-2), tm1(2) * (T() + c(Scalar(1))) * tp(-1)});
  REQUIRE(v.inj.witness);
  Witness bad = *v.inj.witness;
  bad.vFactor = QPoly({Scalar(-7), Scalar(1)});
  bad.u.reset();
  bad.v.reset();
  CHECK_FALSE(verify_witness(item('w'), bad));
}

TEST_CASE("three-cusp curve: the 2/t^2 variant is refuted, the 2/t form certified") {
  Curve variant{T() * T() + c(Scalar(2)) * tp(-2), c(Scalar(2)) * T() + tp(-2)};
  Verdict p = embedding_verdict(variant);
  CHECK_FALSE(p.embedding);
  REQUIRE(p.inj.witness);
  CHECK(p.inj.witness->verified);
  CHECK(p.inj.witness->vFactor == QPoly({Scalar(-2), Scalar(0), Scalar(1)}));
  REQUIRE(p.ledger);
  CHECK(p.ledger->summary() == "4 = 0");

  Curve fixed{T() * T() + c(Scalar(2)) * tp(-1), c(Scalar(2)) * T() + tp(-2)};
  Verdict f = embedding_verdict(fixed);
  CHECK(f.embedding);
  REQUIRE(f.ledger);
  CHECK(f.ledger->summary() == "6 = 2+2+2+0");
}

TEST_CASE("injectivity is invariant under automorphisms") {
  std::vector<Curve> curves = {item('w'), item('u'), item('b', {{"k", 1}, {"m", 2}}), item('j', {{"m", 1}, {"n", 1}}),
                               w_family(Scalar(2), Scalar(1)),
                               Curve{tm1(4) * tp(-2), tm1(2) * (T() + c(Scalar(1))) * tp(-1)}};
  std::vector<Move> moves = {Move::add_to_y(QPoly({Scalar(1), Scalar(-2), Scalar(1)})),
                             Move::add_to_x(QPoly({Scalar(0), Scalar(0), Scalar(0), Scalar(3)})),
                             Move::linear(Scalar(1), Scalar(2), Scalar(1), Scalar(3)), Move::swap(),
                             Move::scale_t(Scalar(mpq_class(-3, 2))), Move::invert_t()};
  for (const auto& cv : curves) {
    CAPTURE(cv.str());
    Injectivity base = injectivity_certificate(cv);
    for (const auto& mv : moves) {
      Curve moved = apply_automorphism(cv, mv);
      Injectivity inj = injectivity_certificate(moved);
      CHECK(inj.injective == base.injective);
      if (!inj.injective) {
        REQUIRE(inj.witness);
        CHECK(verify_witness(moved, *inj.witness));
      }
    }
  }
}

TEST_CASE("diagonal of the double point system recovers the singular locus") {
  for (const auto& id : default_grid()) {
    CAPTURE(id.str());
    CHECK(injectivity_certificate(gen_series(id)).diagonalOK);
  }
}

TEST_CASE("semigroup delta oracle") {
  auto ser = [](std::initializer_list<std::pair<int, long>> terms) {
    Ser<Scalar> s(16, Scalar(0));
    for (auto [k, v] : terms) s[k] = Scalar(v);
    return s;
  };
  CHECK(delta_semigroup_oracle<Scalar>(ser({{2, 1}}), ser({{3, 1}}), 16) == 1);
  CHECK(delta_semigroup_oracle<Scalar>(ser({{1, 1}}), ser({{1, 1}}), 16) == 0);
  Ser<Scalar> x(40, Scalar(0)), y(40, Scalar(0));
  x[4] = Scalar(1);
  y[6] = y[7] = Scalar(1);
  CHECK(delta_semigroup_oracle<Scalar>(x, y, 40) == 8);
  CHECK_THROWS_AS(delta_semigroup_oracle<Scalar>(x, y, 12), Error);
}
