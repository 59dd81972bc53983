#include "annuli/curve.hpp"

#include <algorithm>
#include <numeric>

namespace annuli {

long Curve::field() const {
  long d = x.field();
  return d != 1 ? d : y.field();
}

std::string Curve::str() const { return "x = " + x.str() + ", y = " + y.str(); }

long Profile::pp() const { return std::gcd(std::labs(p()), std::labs(q())); }
long Profile::rp() const { return std::gcd(std::labs(r()), std::labs(s())); }

Profile exponent_profile(const Curve& c) {
  if (c.x.is_constant() || c.y.is_constant())
    throw Error(Err::ConstantComponent, "a component of the curve is constant");
  Profile pr;
  pr.topX = c.x.top();
  pr.botX = c.x.bot();
  pr.topY = c.y.top();
  pr.botY = c.y.bot();
  pr.lcTopX = c.x.top_coef();
  pr.lcBotX = c.x.bot_coef();
  pr.lcTopY = c.y.top_coef();
  pr.lcBotY = c.y.bot_coef();
  return pr;
}

std::string type_name(TypeTag t) {
  switch (t) {
    case TypeTag::PlusPlus: return "(+/+)";
    case TypeTag::Mixed: return "(-+/+-)";
    case TypeTag::MinusPlus: return "(-/+)";
    case TypeTag::MinusMinus: return "(-/-)";
  }
  return "?";
}

namespace {
bool divides(long a, long b) { return a != 0 && b % a == 0; }
}  // namespace

std::optional<TypeTag> type_of(const Profile& pr) {
  long p = pr.p(), q = pr.q(), r = pr.r(), s = pr.s();
  if (0 < p && p < q && 0 < r && r < s && pr.rp() <= pr.pp()) {
    // min(q/p, s/r) not an integer
    bool qp_min = q * r <= s * p;
    bool integral = qp_min ? divides(p, q) : divides(r, s);
    if (!integral) return TypeTag::PlusPlus;
  }
  if (0 < q && q < p && 0 < r && r < s && p + r <= q + s) return TypeTag::Mixed;
  if (0 < -r && -r <= p && q > 0 && s > 0 && !divides(p, q)) return TypeTag::MinusPlus;
  if (0 < -r && -r <= p && 0 < -q && -q <= s && p - std::labs(r) <= s - std::labs(q)) return TypeTag::MinusMinus;
  return std::nullopt;
}

bool handsome(const Profile& pr, TypeTag t) {
  long p = pr.p(), q = pr.q(), r = pr.r(), s = pr.s();
  switch (t) {
    case TypeTag::PlusPlus: return !(divides(p, q) && r < p);
    case TypeTag::Mixed: return !((divides(q, p) && s < q) || (divides(r, s) && p < r));
    case TypeTag::MinusPlus: return !(divides(q, p) && s < q);
    case TypeTag::MinusMinus: return true;
  }
  return true;
}

int type_epsilon(TypeTag t) {
  switch (t) {
    case TypeTag::PlusPlus:
    case TypeTag::Mixed: return 2;
    case TypeTag::MinusPlus: return 1;
    case TypeTag::MinusMinus: return 0;
  }
  return 0;
}

long type_k(const Profile& pr, TypeTag t) {
  if (t == TypeTag::PlusPlus) return std::min(pr.q() / pr.p(), pr.s() / pr.r());
  if (t == TypeTag::MinusPlus) return pr.q() / pr.p();
  return 0;
}

long dim_curv(const Profile& pr, TypeTag t) {
  long sigma = pr.p() + pr.q() + pr.r() + pr.s() - 1 - type_epsilon(t) - type_k(pr, t);
  // two monomials: rescaling t fixes the curve, so the orbit is one dimension smaller
  if (pr.p() + pr.r() == 0 && pr.q() + pr.s() == 0) sigma += 1;
  return sigma;
}

long two_delta_max(const Profile& pr) {
  long p = pr.p(), q = pr.q(), r = pr.r(), s = pr.s();
  return (p + r - 1) * (q + s - 1) - (pr.pp() + pr.rp() - 1) + std::labs(p * s - r * q);
}

// ---- moves ----

Move Move::add_to_x(const QPoly& p) {
  Move m;
  m.kind = AddToX;
  m.poly = p;
  return m;
}
Move Move::add_to_y(const QPoly& p) {
  Move m;
  m.kind = AddToY;
  m.poly = p;
  return m;
}
Move Move::linear(const Scalar& a, const Scalar& b, const Scalar& c, const Scalar& d) {
  Move m;
  m.kind = Linear;
  m.m[0] = a;
  m.m[1] = b;
  m.m[2] = c;
  m.m[3] = d;
  return m;
}
Move Move::swap() { return linear(0, 1, 1, 0); }
Move Move::scale_t(const Scalar& l) {
  Move m;
  m.kind = ScaleT;
  m.lambda = l;
  return m;
}
Move Move::invert_t() { return Move(); }

std::string Move::str() const {
  switch (kind) {
    case AddToX: return "x -> x + (" + poly.str("y") + ")";
    case AddToY: return "y -> y + (" + poly.str("x") + ")";
    case Linear:
      if (m[0].is_zero() && m[3].is_zero() && m[1].is_one() && m[2].is_one()) return "swap x,y";
      return "(x,y) -> (" + m[0].str() + "*x + " + m[1].str() + "*y, " + m[2].str() + "*x + " + m[3].str() + "*y)";
    case ScaleT: return "t -> " + lambda.str() + "*t";
    case InvertT: return "t -> 1/t";
  }
  return "?";
}

namespace {
Laurent compose_poly(const QPoly& p, const Laurent& b) {
  Laurent acc;
  for (int i = p.deg(); i >= 0; --i) acc = acc * b + Laurent(p.coeffs()[i]);
  return acc;
}
}  // namespace

Curve apply_automorphism(const Curve& c, const Move& mv) {
  switch (mv.kind) {
    case Move::AddToX: return {c.x + compose_poly(mv.poly, c.y), c.y};
    case Move::AddToY: return {c.x, c.y + compose_poly(mv.poly, c.x)};
    case Move::Linear:
      return {c.x.scaled(mv.m[0]) + c.y.scaled(mv.m[1]), c.x.scaled(mv.m[2]) + c.y.scaled(mv.m[3])};
    case Move::ScaleT: return {c.x.subs_scale(mv.lambda), c.y.subs_scale(mv.lambda)};
    case Move::InvertT: return {c.x.compose_inv_t(), c.y.compose_inv_t()};
  }
  return c;
}

Curve apply_all(Curve c, const std::vector<Move>& log) {
  for (const auto& m : log) c = apply_automorphism(c, m);
  return c;
}

Primitivity detect_nonprimitive(const Curve& c) {
  long g = 0;
  for (const Laurent* L : {&c.x, &c.y})
    for (const auto& [k, v] : L->terms()) g = std::gcd(g, std::labs(long(k)));
  Primitivity out;
  if (g > 1) {
    out.kind = Primitivity::PowerCover;
    out.degree = g;
  }
  return out;
}

// ---- normalization ----

namespace {

// pole order at the place (0 when regular)
int pole_inf(const Laurent& a) { return std::max(0, a.top()); }
int pole_zero(const Laurent& a) { return std::max(0, -a.bot()); }

// make a component that is regular at some place vanish there
bool translate(Curve& c, std::vector<Move>& log) {
  bool moved = false;
  for (int comp = 0; comp < 2; ++comp) {
    Laurent& a = comp == 0 ? c.x : c.y;
    if (a.is_constant()) throw Error(Err::ConstantComponent, "a component of the curve is constant");
    if ((a.top() <= 0 || a.bot() >= 0) && !a.coef(0).is_zero()) {
      QPoly shift = QPoly::constant(-a.coef(0));
      Move mv = comp == 0 ? Move::add_to_x(shift) : Move::add_to_y(shift);
      c = apply_automorphism(c, mv);
      log.push_back(mv);
      moved = true;
      if ((comp == 0 ? c.x : c.y).is_zero()) throw Error(Err::ConstantComponent, "a component of the curve is constant");
    }
  }
  return moved;
}

struct Candidate {
  bool swap, invert;
};
const Candidate kVariants[4] = {{false, false}, {true, false}, {false, true}, {true, true}};

std::vector<Move> variant_moves(const Candidate& v) {
  std::vector<Move> m;
  if (v.swap) m.push_back(Move::swap());
  if (v.invert) m.push_back(Move::invert_t());
  return m;
}

// A -> A - c B^l cancelling the leading pole of A at the place (inf or 0)
std::optional<Move> reduction(const Curve& c, bool reduce_x, bool at_inf, bool require_free) {
  const Laurent& A = reduce_x ? c.x : c.y;
  const Laurent& B = reduce_x ? c.y : c.x;
  int pa = at_inf ? pole_inf(A) : pole_zero(A);
  int pb = at_inf ? pole_inf(B) : pole_zero(B);
  if (pa == 0 || pb == 0 || pa % pb != 0) return std::nullopt;
  int l = pa / pb;
  if (require_free) {
    int qa = at_inf ? pole_zero(A) : pole_inf(A);
    int qb = at_inf ? pole_zero(B) : pole_inf(B);
    if (qb * l > qa) return std::nullopt;
  }
  Scalar la = at_inf ? A.top_coef() : A.bot_coef();
  Scalar lb = at_inf ? B.top_coef() : B.bot_coef();
  Scalar coef = -(la / pow(Laurent(lb), l).coef(0));
  QPoly poly = QPoly::monomial(coef, l);
  return reduce_x ? Move::add_to_x(poly) : Move::add_to_y(poly);
}

// the bullet of the handsomeness definition that fires, as a move in variant coordinates
std::optional<Move> bullet_move(const Curve& c, const Profile& pr, TypeTag t) {
  long p = pr.p(), q = pr.q(), r = pr.r(), s = pr.s();
  switch (t) {
    case TypeTag::PlusPlus:
      if (divides(p, q) && r < p) return reduction(c, false, true, false);
      break;
    case TypeTag::Mixed:
      if (divides(q, p) && s < q) return reduction(c, true, true, false);
      if (divides(r, s) && p < r) return reduction(c, false, false, false);
      break;
    case TypeTag::MinusPlus:
      if (divides(q, p) && s < q) return reduction(c, true, true, false);
      break;
    case TypeTag::MinusMinus: break;
  }
  return std::nullopt;
}

}  // namespace

Normalized normalize(const Curve& input) {
  Normalized out;
  Curve c = input;
  std::vector<Move> log;
  Profile p0 = exponent_profile(c);
  long cap = 4 * (std::labs(p0.p()) + std::labs(p0.q()) + std::labs(p0.r()) + std::labs(p0.s()));
  for (long step = 0;; ++step) {
    if (step > cap) throw Error(Err::NonTermination, "normalization exceeded its move cap");
    translate(c, log);
    bool proper = (pole_inf(c.x) || pole_inf(c.y)) && (pole_zero(c.x) || pole_zero(c.y));

    int accepted = -1;
    std::vector<TypeTag> tags(4);
    std::vector<char> ok(4, 0);
    int typed_bad = -1;
    for (int i = 0; i < 4; ++i) {
      Curve v = apply_all(c, variant_moves(kVariants[i]));
      Profile pr = exponent_profile(v);
      auto t = type_of(pr);
      if (!t) continue;
      tags[i] = *t;
      if (handsome(pr, *t)) {
        ok[i] = 1;
        if (accepted < 0) accepted = i;
      } else if (typed_bad < 0) {
        typed_bad = i;
      }
    }
    if (accepted >= 0 && proper) {
      for (const auto& m : variant_moves(kVariants[accepted])) log.push_back(m);
      out.curve = apply_all(c, variant_moves(kVariants[accepted]));
      out.log = log;
      out.profile = exponent_profile(out.curve);
      out.type = tags[accepted];
      out.handsome = true;
      for (int i = 0; i < 4; ++i)
        if (ok[i] && tags[i] != *out.type &&
            std::find(out.alternates.begin(), out.alternates.end(), tags[i]) == out.alternates.end())
          out.alternates.push_back(tags[i]);
      return out;
    }
    // free reductions never enlarge a pole
    std::optional<Move> mv;
    for (int k = 0; k < 4 && !mv; ++k) {
      mv = reduction(c, k >= 2, k % 2 == 0, true);
      // a move that leaves a constant component would destroy the curve
      if (mv) {
        Curve nxt = apply_automorphism(c, *mv);
        if ((mv->kind == Move::AddToX ? nxt.x : nxt.y).is_constant()) mv.reset();
      }
    }
    if (mv) {
      c = apply_automorphism(c, *mv);
      log.push_back(*mv);
      continue;
    }
    if (typed_bad >= 0) {
      Curve v = apply_all(c, variant_moves(kVariants[typed_bad]));
      auto bm = bullet_move(v, exponent_profile(v), tags[typed_bad]);
      if (bm) {
        for (const auto& m : variant_moves(kVariants[typed_bad])) log.push_back(m);
        c = apply_automorphism(v, *bm);
        log.push_back(*bm);
        continue;
      }
    }
    out.curve = c;
    out.log = log;
    out.profile = exponent_profile(c);
    out.shape = proper ? ShapeClass::Proper : ShapeClass::NonProper;
    if (proper && typed_bad >= 0) {
      Curve v = apply_all(c, variant_moves(kVariants[typed_bad]));
      out.curve = v;
      for (const auto& m : variant_moves(kVariants[typed_bad])) out.log.push_back(m);
      out.profile = exponent_profile(v);
      out.type = tags[typed_bad];
    }
    return out;
  }
}

Normalized classify(const Curve& c) {
  if (detect_nonprimitive(c).kind != Primitivity::Primitive)
    throw Error(Err::Unclassifiable, "curve is multiply covered");
  Normalized n = normalize(c);
  if (n.shape == ShapeClass::NonProper) throw Error(Err::NonProper, "both components are regular at one place");
  if (!n.type) throw Error(Err::Unclassifiable, "no row of the type table fits");
  return n;
}

}  // namespace annuli
