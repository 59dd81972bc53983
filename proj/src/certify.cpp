#include "annuli/certify.hpp"

#include <numeric>
#include <sstream>

namespace annuli {

// ---- ledger ----

bool finite_base_is_x(const Normalized& nf) {
  const Profile& pr = nf.profile;
  return !(nf.type == TypeTag::MinusPlus && pr.q() + pr.s() < pr.p() - std::labs(pr.r()));
}

namespace {

bool is_tangent(const Profile& pr) {
  return pr.p() > 0 && pr.q() > 0 && pr.r() > 0 && pr.s() > 0 && pr.p() * pr.s() == pr.r() * pr.q();
}

}  // namespace

Ledger ph_ledger(const Normalized& nf) {
  if (!nf.type) throw Error(Err::Unclassifiable, "ledger needs a typed normal form");
  const Curve& c = nf.curve;
  const Profile& pr = nf.profile;
  TruncationPolicy tp = TruncationPolicy::for_profile(pr);
  Ledger L;
  L.twoDeltaMax = two_delta_max(pr);
  L.finite = analyze_singularities(c, finite_base_is_x(nf), tp);
  long En = 0, extFinite = 0;
  for (const auto& pa : L.finite) {
    L.finiteSum += pa.degree * pa.mu;
    En += long(pa.degree) * pa.branch.ramification() * pa.nu;
    extFinite += long(pa.degree) * pa.extNu;
  }
  L.inf = place_data(c, pr, true, tp);
  L.zero = place_data(c, pr, false, tp);
  L.tangent = is_tangent(pr);
  if (L.tangent) {
    L.tan = tangency_analysis(c, pr, L.inf, L.zero, tp);
    L.twoDeltaInf = L.twoDeltaMax - L.tan->twoMinusIndexSum;
    L.nuInf = L.inf.nu + L.zero.nu + L.tan->nuTan;
    L.E = (pr.pp() + pr.rp()) * (L.nuInf + 1) + En;
  } else {
    L.twoDeltaInf = L.inf.twoDelta + L.zero.twoDelta;
    L.indexSum = L.inf.index + L.zero.index + L.finiteSum;
    L.nuInf = L.inf.nu + L.zero.nu;
    L.E = pr.pp() * L.inf.nu + pr.rp() * L.zero.nu + En;
  }
  L.balanced = L.twoDeltaMax == L.finiteSum + L.twoDeltaInf && L.twoDeltaInf >= 0;
  L.reserve = L.twoDeltaMax - L.E;
  L.extNuTotal = L.nuInf + extFinite;
  L.sigma = dim_curv(pr, *nf.type);
  L.margin = L.sigma - L.extNuTotal;
  L.regularityOK = L.margin >= 0;
  return L;
}

std::string Ledger::summary() const {
  std::ostringstream os;
  os << twoDeltaMax << " = ";
  bool first = true;
  for (const auto& pa : finite)
    for (int i = 0; i < pa.degree; ++i) {
      os << (first ? "" : "+") << pa.mu;
      first = false;
    }
  os << (first ? "" : "+") << twoDeltaInf;
  return os.str();
}

// ---- injectivity ----

BiPoly symmetric_quotient(const Laurent& f) {
  BiPoly out;
  if (f.is_constant()) return out;
  int R = std::max(0, -f.bot());
  int top = std::max(std::abs(f.top()), std::abs(f.bot()));
  // complete homogeneous h_n(t, t') via h_n = u h_{n-1} - v h_{n-2}
  std::vector<BiPoly> h{BiPoly(1)};
  BiPoly u = BiPoly::x(), v = BiPoly::constant(QPoly::x());
  if (top >= 2) h.push_back(u);
  for (int n = 2; n < top; ++n) h.push_back(u * h[n - 1] - v * h[n - 2]);
  for (const auto& [k, ck] : f.terms()) {
    if (k == 0) continue;
    int j = std::abs(k);
    QPoly coef = QPoly::monomial(k > 0 ? ck : -ck, k > 0 ? R : R - j);
    out += h[j - 1].scaled(coef);
  }
  return out;
}

namespace {

QPoly drop_v_power(const QPoly& p) {
  int low = 0;
  while (p.coef(low).is_zero()) ++low;
  return QPoly(std::vector<Scalar>(p.coeffs().begin() + low, p.coeffs().end()));
}

// prod over roots t of f of (v - t^2), up to a constant
QPoly square_image(const QPoly& f) {
  std::vector<Scalar> ev, od;
  for (int i = 0; i <= f.deg(); ++i) (i % 2 ? od : ev).push_back(f.coeffs()[i]);
  QPoly fe(ev), fo(od);
  return monic(fe * fe - fo * fo * QPoly::x());
}

Poly<Res> specialize(const CtxPtr<Scalar>& ctx, const BiPoly& F) {
  std::vector<Res> c;
  for (const auto& q : F.coeffs()) c.push_back(Res(ctx, q));
  return Poly<Res>(std::move(c));
}

struct Fiber {
  bool whole = false;            // both polynomials vanish on the fiber
  std::vector<QPoly> offDiagonal;  // monic u-factor reps, empty when none
};

Fiber fiber_search(const CtxPtr<Scalar>& ctx, const BiPoly& D, const BiPoly& E) {
  Poly<Res> a = specialize(ctx, D), b = specialize(ctx, E);
  Fiber fb;
  if (a.is_zero() && b.is_zero()) {
    fb.whole = true;
    return fb;
  }
  Poly<Res> g = gcd(a, b);
  Res s = Res::gen(ctx);
  Poly<Res> disc(std::vector<Res>{Res(-4) * s, Res(0), Res(1)});
  for (;;) {
    if (g.deg() < 1) break;
    Poly<Res> c = gcd(g, disc);
    if (c.deg() < 1) break;
    g = exact_div(g, c);
  }
  if (g.deg() >= 1) {
    g = monic(g);
    for (const auto& r : g.coeffs()) fb.offDiagonal.push_back(r.rep());
  }
  return fb;
}

}  // namespace

Injectivity injectivity_certificate(const Curve& c) {
  Injectivity out;
  BiPoly D = symmetric_quotient(c.x), E = symmetric_quotient(c.y);
  if (D.is_zero() || E.is_zero()) {
    out.injective = false;
    out.positiveDimensional = true;
    return out;
  }
  QPoly R = resultant_u(D, E, &out.stats);
  if (R.is_zero()) {
    out.injective = false;
    out.positiveDimensional = true;
    return out;
  }
  R = drop_v_power(R);
  out.resultantDegree = R.deg();

  // roots of R that need a fiber check: common leading-coefficient zeros and
  // squares of singular parameters; every other root is an off-diagonal pair
  QPoly lcs = gcd(D.lc(), E.lc());
  QPoly diag(1);
  for (const auto& f : singular_factors(c)) diag *= square_image(f);
  if (diag.deg() >= 1) out.diagonalOK = (R % squarefree_part(diag)).is_zero();
  QPoly special = lcs * diag;
  QPoly rest = R;
  if (special.deg() >= 1)
    for (;;) {
      QPoly g = gcd(rest, special);
      if (g.deg() < 1) break;
      rest = exact_div(rest, g);
    }
  QPoly checked = squarefree_part(exact_div(R, rest));
  QPoly todo = rest.deg() >= 1 ? squarefree_part(rest) : checked;
  if (todo.deg() < 1) return out;

  auto fibers = on_branches(todo, [&](const CtxPtr<Scalar>& ctx) { return fiber_search(ctx, D, E); });
  for (const auto& b : fibers) {
    if (b.value.whole) {
      out.injective = false;
      out.positiveDimensional = true;
      return out;
    }
    if (b.value.offDiagonal.empty()) continue;
    out.injective = false;
    Witness w;
    w.vFactor = b.modulus;
    w.uFactor = b.value.offDiagonal;
    if (w.vFactor.deg() == 1 && w.uFactor.size() == 2) {
      w.v = -w.vFactor.coef(0);
      w.u = -w.uFactor[0].coef(0);
    }
    w.verified = verify_witness(c, w);
    out.witness = w;
    return out;
  }
  if (rest.deg() >= 1) throw Error(Err::Internal, "eliminant has roots without off-diagonal solutions");
  return out;
}

bool verify_witness(const Curve& c, const Witness& w) {
  using R2 = Residue<Res>;
  using R3 = Residue<R2>;
  if (w.vFactor.deg() < 1 || w.uFactor.size() < 2) return false;
  auto checks = on_branches(w.vFactor, [&](const CtxPtr<Scalar>& ctx) {
    Res s = Res::gen(ctx);
    std::vector<Res> gc;
    for (const auto& q : w.uFactor) gc.push_back(Res(ctx, q));
    Poly<Res> g(gc);
    if (g.deg() < 1 || g.lc() != Res(1)) return false;
    Poly<Res> disc(std::vector<Res>{Res(-4) * s, Res(0), Res(1)});
    if (gcd(g, disc).deg() > 0) return false;  // t = t'
    if (s.is_zero()) return false;
    auto ctx2 = make_ctx<Res>(g);
    R2 u = R2::gen(ctx2), s2(s), sInv(inv(s));
    auto ctx3 = make_ctx<R2>(Poly<R2>(std::vector<R2>{s2, -u, R2(1)}));
    R3 T = R3::gen(ctx3), Tp = R3(u) - T;
    R3 si(sInv);
    R3 Ti = Tp * si, Tpi = T * si;  // t t' = v
    auto eval = [&](const Laurent& f, const R3& t, const R3& ti) {
      R3 acc(0);
      for (const auto& [k, ck] : f.terms()) {
        R3 pw(1);
        for (int i = 0; i < std::abs(k); ++i) pw = pw * (k > 0 ? t : ti);
        acc = acc + R3(R2(Res(ck))) * pw;
      }
      return acc;
    };
    return eval(c.x, T, Ti) == eval(c.x, Tp, Tpi) && eval(c.y, T, Ti) == eval(c.y, Tp, Tpi);
  });
  for (const auto& b : checks)
    if (!b.value) return false;
  return !checks.empty();
}

// ---- verdict ----

Verdict embedding_verdict(const Curve& c) {
  Verdict V;
  V.prim = detect_nonprimitive(c);
  if (V.prim.kind == Primitivity::PowerCover) {
    V.reason = "PowerCover " + std::to_string(V.prim.degree);
    return V;
  }
  Normalized nf = normalize(c);
  V.nf = nf;
  if (nf.shape == ShapeClass::NonProper) {
    V.reason = "NonProper";
    return V;
  }
  V.inj = injectivity_certificate(c);
  if (!V.inj.injective) V.reason = "SelfIntersection";
  V.embedding = V.inj.injective;
  if (nf.type) {
    V.ledger = ph_ledger(nf);
    if (V.ledger->balanced != V.embedding) {
      std::ostringstream os;
      os << "balance and injectivity disagree for " << c.str() << ": ledger " << V.ledger->summary()
         << (V.ledger->balanced ? " (balanced)" : " (unbalanced)") << ", injective=" << V.inj.injective;
      throw Error(Err::Internal, os.str());
    }
  }
  return V;
}

// ---- audits ----

namespace {

AuditItem le(const std::string& name, long a, long b) {
  return AuditItem{name, std::to_string(a), std::to_string(b), a <= b};
}

}  // namespace

std::vector<AuditItem> estimates_audit(const Normalized& nf, const Ledger& L) {
  std::vector<AuditItem> out;
  const Profile& pr = nf.profile;
  const Laurent& base = finite_base_is_x(nf) ? nf.curve.x : nf.curve.y;
  long zeros = base.derivative().numerator().deg();
  long used = 0;
  for (const auto& pa : L.finite) {
    const PuiseuxBranch& b = pa.branch;
    long n = b.ramification();
    std::string at = " at " + pa.factor.str();
    out.push_back(le("mu <= n nu" + at, pa.mu, n * pa.nu));
    // restricted class y = tau^m (unit): mu <= mu_min + n' nu'
    long m = b.lead, np = std::gcd(m, n);
    long muMin = (m - 1) * (n - 1) + (np - 1);
    long nuP = 0;
    for (int k : b.essentialZeros)
      if (k > m) ++nuP;
    out.push_back(le("mu <= mu_min + n' nu'" + at, pa.mu, muMin + np * nuP));
    used += long(pa.degree) * (n - 1);
  }
  out.push_back(le("sum (n_j - 1) <= zeros of the base derivative", used, zeros));
  if (!L.tangent) {
    long cross = pr.p() * pr.s() - pr.r() * pr.q();
    if (cross != 0) out.push_back(le("D >= 0", 0, std::labs(cross) - (pr.pp() + pr.rp()) + 1));
    for (const PlaceData* pd : {&L.inf, &L.zero}) {
      long g = pd->atInf ? pr.pp() : pr.rp();
      std::string nm = pd->atInf ? "oo" : "0";
      if (g > 1)
        out.push_back(le("2 delta_" + nm + " <= gcd nu_" + nm, pd->twoDelta, g * pd->nu));
      else
        out.push_back(AuditItem{"2 delta_" + nm + " = 0 for gcd 1", std::to_string(pd->twoDelta), "0",
                                pd->twoDelta == 0});
      out.push_back(le("0 <= 2 delta_" + nm, 0, pd->twoDelta));
    }
    out.push_back(AuditItem{"i_0 + i_oo + sum 2 delta_j = 2", std::to_string(L.indexSum), "2", L.indexSum == 2});
  } else {
    out.push_back(le("2 delta_inf <= (p'+r')(nu_inf+1)", L.twoDeltaInf, (pr.pp() + pr.rp()) * (L.nuInf + 1)));
    if (pr.pp() == 1 && pr.rp() == 1) out.push_back(le("2 delta_inf <= 2 nu_inf", L.twoDeltaInf, 2 * L.nuInf));
    if (L.nuInf <= 1)
      out.push_back(le("2 delta_inf <= (p'+r') nu_inf", L.twoDeltaInf, (pr.pp() + pr.rp()) * L.nuInf));
    out.push_back(le("0 <= 2 delta_inf", 0, L.twoDeltaInf));
  }
  out.push_back(le("2 delta_max <= E", L.twoDeltaMax, L.E));
  return out;
}

bool audits_pass(const std::vector<AuditItem>& a) {
  for (const auto& x : a)
    if (!x.pass) return false;
  return true;
}

template long delta_semigroup_oracle<Scalar>(const Ser<Scalar>&, const Ser<Scalar>&, int);
template long delta_semigroup_oracle<Res>(const Ser<Res>&, const Ser<Res>&, int);

}  // namespace annuli
