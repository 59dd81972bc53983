#include <random>

#include "annuli/catalog.hpp"
#include "annuli/curve.hpp"
#include "doctest.h"

using namespace annuli;

namespace {

Laurent T() { return Laurent::t(); }
Laurent tp(int e) { return Laurent::mono(Scalar(1), e); }
Laurent c(long n, long d = 1) { return Laurent(Scalar(mpq_class(n, d))); }

Curve item(char letter, std::map<std::string, long> params = {}) { return gen_series(SeriesId{letter, params}); }

void check_profile(const Curve& cv, long p, long q, long r, long s, long pp, long rp) {
  Profile pr = exponent_profile(cv);
  CHECK(pr.p() == p);
  CHECK(pr.q() == q);
  CHECK(pr.r() == r);
  CHECK(pr.s() == s);
  CHECK(pr.pp() == pp);
  CHECK(pr.rp() == rp);
}

// value of a curve at t, compared pointwise after an automorphism
std::pair<Scalar, Scalar> at(const Curve& cv, const Scalar& t) { return {cv.x.eval(t), cv.y.eval(t)}; }

}  // namespace

TEST_CASE("exponent profiles of catalog curves") {
  check_profile(item('w'), 2, 1, 1, 2, 1, 1);
  check_profile(item('u'), 2, 3, 1, 2, 1, 1);
  Profile mono = exponent_profile({tp(3), tp(-2)});
  CHECK(mono.topX == 3);
  CHECK(mono.botX == 3);
  CHECK(mono.topY == -2);
  CHECK(mono.botY == -2);
  CHECK_THROWS_AS(exponent_profile({c(2), tp(1)}), Error);
}

TEST_CASE("type table rows") {
  Normalized u = classify(item('u'));
  REQUIRE(u.type);
  CHECK(*u.type == TypeTag::PlusPlus);
  Normalized w = classify(item('w'));
  REQUIRE(w.type);
  CHECK(*w.type == TypeTag::Mixed);
  Normalized s = classify(item('s', {{"n", 1}}));
  REQUIRE(s.type);
  CHECK(*s.type == TypeTag::MinusMinus);
  CHECK(s.curve.x.field() == 2);
}

TEST_CASE("handsomeness") {
  Normalized u = classify(item('u'));
  CHECK(handsome(u.profile, *u.type));
  // (+/+) with q/p integral and r < p; the minimum s/r = 3/2 keeps the type
  Profile bad = exponent_profile({pow(T(), 3) + tp(-2), pow(T(), 6) + tp(-3)});
  CHECK(type_of(bad) == TypeTag::PlusPlus);
  CHECK_FALSE(handsome(bad, TypeTag::PlusPlus));
  // (-/+) with p/q integral and s < q
  Profile mp2 = exponent_profile({pow(T(), 4) + T(), T() * T() + tp(-1)});
  REQUIRE(type_of(mp2));
  CHECK(*type_of(mp2) == TypeTag::MinusPlus);
  CHECK_FALSE(handsome(mp2, TypeTag::MinusPlus));
}

TEST_CASE("reduction to a handsome form") {
  Normalized w = normalize(item('w'));
  CHECK(w.log.empty());
  CHECK(w.curve == item('w'));

  Curve cv{T() * T(), pow(T(), 4) + T()};
  Normalized nf = normalize(cv);
  bool killed = false;
  for (const auto& m : nf.log)
    if (m.kind == Move::AddToY && m.poly == QPoly::monomial(Scalar(-1), 2)) killed = true;
  CHECK(killed);
  CHECK(apply_automorphism(cv, Move::add_to_y(QPoly::monomial(Scalar(-1), 2))).y.top() == 1);

  // a type (+/+) curve with q/p integral but r >= p is already handsome
  Curve big{T() * T() + T() + c(1) + tp(-1) + tp(-2) + tp(-3), pow(T(), 6) + T() + tp(-4)};
  Normalized b = normalize(big);
  REQUIRE(b.type);
  CHECK(*b.type == TypeTag::PlusPlus);
  CHECK(b.handsome);
  CHECK(b.log.empty());
  Curve moved = apply_automorphism(big, Move::add_to_y(QPoly::monomial(Scalar(-1), 3)));
  CHECK(moved.y.bot() == -9);
}

TEST_CASE("curve space dimension") {
  Normalized u = classify(item('u'));
  CHECK(dim_curv(u.profile, *u.type) == 4);
  Normalized w = classify(item('w'));
  CHECK(dim_curv(w.profile, *w.type) == 3);
  Normalized s = classify(item('s', {{"n", 1}}));
  CHECK(dim_curv(s.profile, *s.type) == 3);
  // two monomials: the rescaling orbit is degenerate
  Normalized m = classify({tp(4), tp(-3)});
  CHECK(dim_curv(m.profile, *m.type) == 0);
}

TEST_CASE("non-primitive detection") {
  Primitivity a = detect_nonprimitive({T() * T(), pow(T(), 4)});
  CHECK(a.kind == Primitivity::PowerCover);
  CHECK(a.degree == 2);
  Primitivity b = detect_nonprimitive({T() * T() + tp(-2), pow(T(), 6)});
  CHECK(b.kind == Primitivity::PowerCover);
  CHECK(b.degree == 2);
  CHECK(detect_nonprimitive(item('w')).kind == Primitivity::Primitive);
}

TEST_CASE("automorphism examples") {
  Curve a = apply_automorphism({T(), T() + T() * T()}, Move::linear(1, 0, -1, 1));
  CHECK(a.y == T() * T());
  Curve inv = apply_automorphism(item('a', {{"m", 2}, {"n", 3}, {"k", 1}}), Move::invert_t());
  CHECK(inv.x == tp(-2));
  CHECK(inv.y.bot() == -3);
  // the three-cusp curve x=t^2+2/t, y=2t+1/t^2 is item (w) after x -> x - 3, y -> y/2 - 3/2
  Curve rud{T() * T() + c(2) * tp(-1), c(2) * T() + tp(-2)};
  Curve r1 = apply_automorphism(rud, Move::add_to_x(QPoly::constant(Scalar(-3))));
  Curve r2 = apply_automorphism(r1, Move::linear(1, 0, 0, Scalar(mpq_class(1, 2))));
  Curve r3 = apply_automorphism(r2, Move::add_to_y(QPoly::constant(Scalar(mpq_class(-3, 2)))));
  CHECK(r3 == item('w'));
}

TEST_CASE("automorphisms act on the image pointwise") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> d(-6, 6);
  Curve cv = item('u');
  std::vector<Move> moves = {Move::add_to_y(QPoly({Scalar(1), Scalar(0), Scalar(2)})),
                             Move::add_to_x(QPoly({Scalar(0), Scalar(-1)})), Move::linear(2, 1, 1, 1), Move::swap()};
  for (const auto& mv : moves) {
    Curve m = apply_automorphism(cv, mv);
    for (int i = 0; i < 5; ++i) {
      int k = d(rng);
      Scalar t(mpq_class(k == 0 ? 7 : k, 3));
      auto [x, y] = at(cv, t);
      auto [x2, y2] = at(m, t);
      Scalar ex, ey;
      switch (mv.kind) {
        case Move::AddToY: ex = x; ey = y + mv.poly.eval(x); break;
        case Move::AddToX: ex = x + mv.poly.eval(y); ey = y; break;
        default: ex = mv.m[0] * x + mv.m[1] * y; ey = mv.m[2] * x + mv.m[3] * y; break;
      }
      CHECK(x2 == ex);
      CHECK(y2 == ey);
    }
  }
  Curve sc = apply_automorphism(cv, Move::scale_t(Scalar(3)));
  CHECK(sc.x.eval(Scalar(1)) == cv.x.eval(Scalar(3)));
}

TEST_CASE("normal form invariants over the catalog grid") {
  for (const auto& id : default_grid()) {
    CAPTURE(id.str());
    Curve cv = gen_series(id);
    CHECK(detect_nonprimitive(cv).kind == Primitivity::Primitive);
    Normalized nf = normalize(cv);
    REQUIRE(nf.type);
    CHECK(nf.handsome);
    CHECK(dim_curv(nf.profile, *nf.type) >= 0);
    CHECK(apply_all(cv, nf.log) == nf.curve);
    // idempotent and invariant under t -> 2t
    Normalized again = normalize(nf.curve);
    CHECK(again.log.empty());
    CHECK(again.type == nf.type);
    Normalized scaled = normalize(apply_automorphism(cv, Move::scale_t(Scalar(2))));
    CHECK(scaled.type == nf.type);
    // t -> 1/t swaps and negates the exponent ranges
    Profile a = exponent_profile(cv), b = exponent_profile(apply_automorphism(cv, Move::invert_t()));
    CHECK(b.topX == -a.botX);
    CHECK(b.botX == -a.topX);
    CHECK(b.topY == -a.botY);
    CHECK(b.botY == -a.topY);
  }
}
