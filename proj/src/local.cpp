#include "annuli/local.hpp"

#include <cstdlib>
#include <numeric>

namespace annuli {

// ---- branch arithmetic ----

std::vector<long> PuiseuxBranch::v() const {
  std::vector<long> out;
  for (int k : charExps) out.push_back(e > 0 ? k : -k);
  return out;
}

namespace {

void fill_pairs(PuiseuxBranch& b) {
  b.pairs.clear();
  long d = std::abs(b.e);
  for (int k : b.charExps) {
    long dn = std::gcd(d, long(std::abs(k)));
    long v = b.e > 0 ? k : -k;
    b.pairs.push_back({v / dn, d / dn});
    d = dn;
  }
}

long tail_product(const std::vector<std::pair<long, long>>& pairs, size_t j) {
  long prod = 1;
  for (size_t i = j + 1; i < pairs.size(); ++i) prod *= pairs[i].second;
  return prod;
}

}  // namespace

long milnor_from_pairs(const std::vector<std::pair<long, long>>& pairs) {
  long sum = 0;
  for (size_t j = 0; j < pairs.size(); ++j) {
    long tail = tail_product(pairs, j);
    sum += (pairs[j].first * tail - 1) * (pairs[j].second - 1) * tail;
  }
  return sum;
}

long milnor_from_exponents(const std::vector<long>& v, const std::vector<std::pair<long, long>>& pairs) {
  long sum = 0;
  for (size_t j = 0; j < pairs.size(); ++j) sum += (v[j] - 1) * (pairs[j].second - 1) * tail_product(pairs, j);
  return sum;
}

long branch_sum(const PuiseuxBranch& b) {
  if (!b.complete) throw Error(Err::IncompleteBranch, "characteristic data not resolved");
  long a = milnor_from_exponents(b.v(), b.pairs), c = milnor_from_pairs(b.pairs);
  if (a != c) throw Error(Err::Internal, "the two Milnor forms disagree");
  return a;
}

int codimension_nu(const PuiseuxBranch& b) {
  if (!b.complete) throw Error(Err::IncompleteBranch, "characteristic data not resolved");
  return b.nu();
}

std::string singularity_label(const PuiseuxBranch& b) {
  if (b.pairs.empty()) return "smooth";
  if (b.pairs.size() == 1 && b.pairs[0].second == 2 && b.e > 0) return "A_" + std::to_string(b.pairs[0].first - 1);
  std::string s;
  for (auto [m, n] : b.pairs) s += "(" + std::to_string(m) + "," + std::to_string(n) + ")";
  return s;
}

TruncationPolicy TruncationPolicy::for_profile(const Profile& pr) {
  long S = std::labs(pr.p()) + std::labs(pr.q()) + std::labs(pr.r()) + std::labs(pr.s());
  long mult = 16;
  if (const char* env = std::getenv("ANNULI_TRUNC_CAP")) {
    long v = std::atol(env);
    if (v > 0) mult = v;
  }
  TruncationPolicy tp;
  tp.start = int(2 * S + 8);
  tp.cap = int(std::max<long>(mult * S, tp.start));
  return tp;
}

// ---- singular locus ----

namespace {

// positive divisors by trial division; empty when n is too large to factor cheaply
std::vector<mpz_class> divisors(mpz_class n) {
  n = abs(n);
  std::vector<mpz_class> primes;
  std::vector<int> mult;
  mpz_class m = n;
  for (unsigned long p = 2; m > 1; ++p) {
    if (p > 2000000) return {};
    if (mpz_class(p) * p > m) {
      primes.push_back(m);
      mult.push_back(1);
      break;
    }
    int e = 0;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++e;
    }
    if (e) {
      primes.push_back(p);
      mult.push_back(e);
    }
  }
  std::vector<mpz_class> out{1};
  for (size_t i = 0; i < primes.size(); ++i) {
    size_t cur = out.size();
    mpz_class pk = 1;
    for (int e = 1; e <= mult[i]; ++e) {
      pk *= primes[i];
      for (size_t j = 0; j < cur; ++j) out.push_back(out[j] * pk);
    }
  }
  return out;
}

std::vector<mpq_class> rational_roots(const QPoly& f) {
  // split into rational and surd parts; a rational root kills both
  std::vector<Scalar> ra, rb;
  for (const auto& c : f.coeffs()) {
    ra.push_back(Scalar(c.a()));
    rb.push_back(Scalar(c.b()));
  }
  QPoly h = QPoly(ra);
  QPoly hb = QPoly(rb);
  if (!hb.is_zero()) h = gcd(h, hb);
  std::vector<mpq_class> roots;
  if (h.deg() < 1) return roots;
  mpz_class den = 1;
  for (const auto& c : h.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.a().get_den_mpz_t());
  std::vector<mpz_class> ic;
  for (const auto& c : h.coeffs()) ic.push_back(mpq_class(c.a() * den).get_num());
  int low = 0;
  while (ic[low] == 0) ++low;  // t = 0 is excluded from C*
  auto dp = divisors(ic[low]), dq = divisors(ic.back());
  if (dp.empty() || dq.empty()) return roots;
  for (const auto& a : dp)
    for (const auto& b : dq)
      for (int sg : {1, -1}) {
        mpq_class r(sg * a, b);
        r.canonicalize();
        if (h.eval(Scalar(r)).is_zero() && std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace

std::vector<QPoly> singular_factors(const Curve& c) {
  QPoly a = c.x.derivative().numerator(), b = c.y.derivative().numerator();
  if (a.is_zero() || b.is_zero()) return {};
  QPoly g = squarefree_part(gcd(a, b));
  std::vector<QPoly> out;
  if (g.deg() < 1) return out;
  for (const auto& r : rational_roots(g)) {
    QPoly lin(std::vector<Scalar>{Scalar(mpq_class(-r)), Scalar(1)});
    out.push_back(lin);
    g = exact_div(g, lin);
  }
  if (g.deg() >= 1) out.push_back(monic(g));
  return out;
}

// ---- finite points ----

Ser<Res> taylor_at(const Laurent& f, const Res& s, int N) {
  int b = f.bot();
  QPoly num = f.numerator();
  std::vector<Res> nc;
  for (const auto& c : num.coeffs()) nc.push_back(Res(c));
  Poly<Res> shifted = taylor_shift(Poly<Res>(nc), s);
  Ser<Res> A(N, Res(0));
  for (int i = 0; i < N && i <= shifted.deg(); ++i) A[i] = shifted.coeffs()[i];
  Ser<Res> T(N, Res(0));
  if (b >= 0) {
    Poly<Res> lin(std::vector<Res>{s, Res(1)});
    Poly<Res> pw = pow(lin, b);
    for (int i = 0; i < N && i <= pw.deg(); ++i) T[i] = pw.coeffs()[i];
  } else {
    Res si = inv(s);
    Res base(1);
    for (int i = 0; i < -b; ++i) base = base * si;  // s^b
    mpq_class binom = 1;
    Res spow = base;
    for (int i = 0; i < N; ++i) {
      if (i > 0) {
        binom *= rat(b - i + 1, i);
        spow = spow * si;
      }
      T[i] = Res(Scalar(binom)) * spow;
    }
  }
  Ser<Res> out = mul_trunc(A, T, N);
  out[0] = Res(0);
  return out;
}

namespace {

int first_nonzero(const Ser<Res>& a, int from) {
  for (int k = from; k < int(a.size()); ++k)
    if (!zero_test(a[k])) return k;
  return -1;
}

// Scan the characteristic data of H in the base b*tau^e*U; positions from k0 on.
template <class R>
bool scan_branch(PuiseuxBranch& br, int e, const Ser<R>& U, int hval, const Ser<R>& Hc, int k0, int kmax) {
  long d = std::abs(e);
  br.charExps.clear();
  br.essentialZeros.clear();
  br.essentialCoeffs.clear();
  br.complete = d == 1;  // an unramified base has no characteristic exponents
  for (int k = k0; k <= kmax && !br.complete; ++k) {
    br.truncation = k;
    if (k == 0 || k % d == 0) continue;
    R c = lagrange_coeff(e, U, hval, Hc, k);
    if (zero_test(c)) {
      br.essentialZeros.push_back(k);
      continue;
    }
    br.charExps.push_back(k);
    br.essentialCoeffs.push_back(c.str());
    d = std::gcd(d, long(std::abs(k)));
    if (d == 1) {
      br.complete = true;
      break;
    }
  }
  fill_pairs(br);
  return br.complete;
}

}  // namespace

PuiseuxBranch monomial_base_branch(int n, const Ser<Scalar>& y, int kmax) {
  PuiseuxBranch br;
  br.e = n;
  Ser<Scalar> U{Scalar(1)};
  Ser<Scalar> Hc(y.begin() + std::min<size_t>(1, y.size()), y.end());
  br.lead = 0;
  for (size_t k = 1; k < y.size() && !br.lead; ++k)
    if (!y[k].is_zero()) br.lead = int(k);
  scan_branch(br, n, U, 1, Hc, 1, std::min<int>(kmax, int(y.size()) - 1));
  return br;
}

std::vector<PointAnalysis> analyze_point(const Curve& c, const QPoly& factor, bool baseX, const TruncationPolicy& tp) {
  auto branches = on_branches(factor, [&](const CtxPtr<Scalar>& ctx) {
    Res s = Res::gen(ctx);
    PointAnalysis pa;
    for (int N = tp.start;; N *= 2) {
      if (N > 2 * tp.cap) throw Error(Err::TruncationCap, "finite Puiseux data not resolved within the cap");
      int Nn = std::min(N, std::max(tp.cap, tp.start));
      Ser<Res> X = taylor_at(c.x, s, Nn), Y = taylor_at(c.y, s, Nn);
      pa.xOrder = first_nonzero(X, 1);
      pa.yOrder = first_nonzero(Y, 1);
      if (pa.xOrder < 0 || pa.yOrder < 0) {
        if (Nn >= tp.cap) throw Error(Err::TruncationCap, "vanishing order exceeds the truncation cap");
        continue;
      }
      const Ser<Res>& B = baseX ? X : Y;
      const Ser<Res>& H = baseX ? Y : X;
      int n = baseX ? pa.xOrder : pa.yOrder;
      Res ainv = inv(B[n]);
      Ser<Res> U(B.begin() + n, B.end());
      for (auto& u : U) u = u * ainv;
      Ser<Res> Hc(H.begin() + 1, H.end());
      PuiseuxBranch br;
      br.baseX = baseX;
      br.e = n;
      br.lead = baseX ? pa.yOrder : pa.xOrder;
      int kmax = std::min(Nn - 1, Nn - n);
      if (!scan_branch(br, n, U, 1, Hc, 1, kmax)) {
        if (Nn >= tp.cap) throw Error(Err::TruncationCap, "finite Puiseux data not resolved within the cap");
        continue;
      }
      pa.branch = br;
      break;
    }
    pa.mu = branch_sum(pa.branch);
    pa.nu = codimension_nu(pa.branch);
    pa.extNu = (pa.branch.ramification() - 2) + pa.nu;
    pa.label = singularity_label(pa.branch);
    return pa;
  });
  std::vector<PointAnalysis> out;
  for (auto& b : branches) {
    b.value.factor = b.modulus;
    b.value.degree = b.modulus.deg();
    out.push_back(std::move(b.value));
  }
  return out;
}

std::vector<PointAnalysis> analyze_singularities(const Curve& c, bool baseX, const TruncationPolicy& tp) {
  std::vector<PointAnalysis> out;
  for (const auto& f : singular_factors(c))
    for (auto& pa : analyze_point(c, f, baseX, tp)) out.push_back(std::move(pa));
  return out;
}

// ---- places ----

namespace {

struct PlaceSeries {
  bool baseX;
  int P;          // pole order of the base
  Ser<Scalar> U;  // base / (b tau^-P)
  int hval;
  Ser<Scalar> Hc;
};

PlaceSeries place_series(const Curve& c, bool atInf) {
  Laurent x = atInf ? c.x.compose_inv_t() : c.x;
  Laurent y = atInf ? c.y.compose_inv_t() : c.y;
  PlaceSeries ps;
  ps.baseX = !x.is_zero() && x.bot() < 0;
  const Laurent& B = ps.baseX ? x : y;
  const Laurent& H = ps.baseX ? y : x;
  if (B.is_zero() || B.bot() >= 0) throw Error(Err::NonProper, "no component has a pole at this place");
  ps.P = -B.bot();
  Scalar binv = B.bot_coef().inv();
  for (int k = B.bot(); k <= B.top(); ++k) ps.U.push_back(B.coef(k) * binv);
  ps.hval = H.bot();
  for (int k = H.bot(); k <= H.top(); ++k) ps.Hc.push_back(H.coef(k));
  return ps;
}

}  // namespace

PuiseuxBranch place_branch(const Curve& c, bool atInf, const TruncationPolicy& tp) {
  PlaceSeries ps = place_series(c, atInf);
  PuiseuxBranch br;
  br.baseX = ps.baseX;
  br.e = -ps.P;
  br.lead = ps.hval;
  if (!scan_branch(br, -ps.P, ps.U, ps.hval, ps.Hc, ps.hval, ps.hval + tp.cap))
    throw Error(Err::TruncationCap, "place Puiseux data not resolved within the cap");
  return br;
}

PlaceData place_data(const Curve& c, const Profile& pr, bool atInf, const TruncationPolicy& tp) {
  PlaceData pd;
  pd.atInf = atInf;
  pd.branch = place_branch(c, atInf, tp);
  pd.sigma = branch_sum(pd.branch);
  pd.nu = codimension_nu(pd.branch);
  long mx = std::max(pr.p() * pr.s(), pr.r() * pr.q());
  long base = atInf ? (pr.p() - 1) * (pr.q() - 1) - (pr.pp() - 1) : (pr.r() - 1) * (pr.s() - 1) - (pr.rp() - 1);
  pd.index = 2 - pd.sigma - mx;
  pd.twoDeltaMax = base + mx;
  pd.twoDelta = base - pd.sigma;
  return pd;
}

// ---- tangency ----

namespace {

Scalar spow(const Scalar& a, long e) {
  Scalar r(1);
  for (long i = 0; i < e; ++i) r = r * a;
  return r;
}

// Horner evaluation of a polynomial with Scalar coefficients at a series w
Ser<Res> compose_series(const std::vector<Scalar>& poly, const Ser<Res>& w, int N) {
  Ser<Res> acc(N, Res(0));
  for (int i = int(poly.size()) - 1; i >= 0; --i) {
    acc = mul_trunc(acc, w, N);
    acc[0] = acc[0] + Res(poly[i]);
  }
  return acc;
}

struct RootOrder {
  long o;  // ord_lambda(y(t) - y(t'))
};

}  // namespace

Tangency tangency_analysis(const Curve& c, const Profile& pr, const PlaceData& inf, const PlaceData& zero,
                           const TruncationPolicy& tp) {
  long p = pr.p(), q = pr.q(), r = pr.r(), s = pr.s();
  if (p <= 0 || r <= 0 || q <= 0 || s <= 0 || p * s != r * q)
    throw Error(Err::Internal, "tangency analysis needs ps = rq with poles at both places");
  Tangency T;
  long g = std::gcd(p, r), Pt = p / g, Rt = r / g;
  long L = Rt * q;  // = Pt * s
  // x(t) = t^p Phi_inf(1/t), x(t') = t'^-r Phi_0(t')
  std::vector<Scalar> phiInf, phi0, psi0;
  for (long i = 0; i <= p + r; ++i) phiInf.push_back(c.x.coef(int(p - i)));
  for (long i = 0; i <= p + r; ++i) phi0.push_back(c.x.coef(int(i - r)));
  for (long i = 0; i <= q + s; ++i) psi0.push_back(c.y.coef(int(i - s)));
  Scalar cInf = phiInf[0], c0 = phi0[0];
  QPoly rho_mod = QPoly::monomial(Scalar(1), int(r)) - QPoly::constant(c0 / cInf);

  auto results = on_branches(rho_mod, [&](const CtxPtr<Scalar>& ctx) {
    Res rho = Res::gen(ctx);
    // the bracket order is usually close to L, so start small and double
    for (int N = int(std::min<long>(tp.start, std::max<long>(16, L + 8)));; N *= 2) {
      if (N > 2 * tp.cap) throw Error(Err::TruncationCap, "tangency order not resolved within the cap");
      // 1/Phi_inf(lambda^Rt)
      Ser<Res> den(N, Res(0));
      for (size_t i = 0; i < phiInf.size() && long(i) * Rt < N; ++i) den[i * Rt] = Res(phiInf[i]);
      Ser<Res> denInv = inv_series(den, N);
      // V with W = rho*V, V(0) = 1; V = (Phi_0(lambda^Pt rho V)/(c0 * Phi_inf(lambda^Rt)/cInf))^(1/r)
      Ser<Res> V(N, Res(0));
      V[0] = Res(1);
      Scalar scale = cInf / c0;
      for (int it = 0; it <= N / std::max<long>(Pt, 1) + 2; ++it) {
        Ser<Res> arg(N, Res(0));  // lambda^Pt * rho * V
        for (int i = 0; i + Pt < N; ++i) arg[i + Pt] = rho * V[i];
        Ser<Res> num = compose_series(phi0, arg, N);
        Ser<Res> F = mul_trunc(num, denInv, N);
        for (auto& f : F) f = f * Res(scale);
        Ser<Res> Vn = pow_unit(F, rat(1, r), N);
        bool same = true;
        for (int i = 0; i < N && same; ++i) same = (Vn[i] == V[i]);
        V = Vn;
        if (same) break;
      }
      // bracket = lambda^L (y(t) - y(t'))
      Ser<Res> br(N, Res(0));
      for (long j = -s; j <= q; ++j) {
        long ex = Rt * (q - j);
        if (ex < N && !c.y.coef(int(j)).is_zero()) br[ex] = br[ex] + Res(c.y.coef(int(j)));
      }
      Ser<Res> arg(N, Res(0));
      for (int i = 0; i + Pt < N; ++i) arg[i + Pt] = rho * V[i];
      Ser<Res> psiPart = compose_series(psi0, arg, N);
      Ser<Res> Vneg = pow_unit(V, mpq_class(-s), N);
      Res rhoInv = inv(rho), rs(1);
      for (long i = 0; i < s; ++i) rs = rs * rhoInv;
      Ser<Res> second = mul_trunc(psiPart, Vneg, N);
      for (int i = 0; i < N; ++i) br[i] = br[i] - rs * second[i];
      // only coefficients below N - (iteration slack) are trusted; V is exact to N
      for (int i = 0; i < N; ++i)
        if (!zero_test(br[i])) return RootOrder{long(i) - L};
      if (N >= tp.cap) throw Error(Err::TruncationCap, "branches at infinity coincide to the cap");
    }
  });

  long total = 0;
  T.oMax = std::numeric_limits<long>::min();
  for (const auto& b : results) {
    total += long(b.modulus.deg()) * b.value.o;
    T.oMax = std::max(T.oMax, b.value.o);
  }
  if ((-total) % Rt != 0) throw Error(Err::Internal, "tangency intersection count is not integral");
  T.I = -total / Rt;
  T.twoMinusIndexSum = inf.sigma + zero.sigma + 2 * T.I - 2;

  // coinciding lattice terms
  long step = Pt * Rt;
  for (long e = -L; e < T.oMax; e += step) ++T.u;

  // essential positions and zero tests on the oo branch
  PlaceSeries psInf = place_series(c, true);
  auto running_d = [](const PuiseuxBranch& b, long k) {
    long d = std::abs(b.e);
    for (int kc : b.charExps)
      if (kc < k) d = std::gcd(d, long(std::abs(kc)));
    return d;
  };
  int zeroEss = 0;
  long D = 1;
  std::vector<std::pair<mpq_class, bool>> common;
  for (int j = 0; j < T.u; ++j) {
    long e = -L + j * step;
    long kInf = e / Rt, k0 = e / Pt;
    bool ess = (kInf % running_d(inf.branch, kInf) != 0) || (k0 % running_d(zero.branch, k0) != 0);
    bool isZero = kInf == 0 ? true : lagrange_coeff(-psInf.P, psInf.U, psInf.hval, psInf.Hc, int(kInf)).is_zero();
    if (ess && isZero) ++zeroEss;
    if (!isZero) {
      mpq_class a = rat(-e, g * Pt * Rt);
      long den = a.get_den().get_si();
      if (D % den != 0) {
        long Dn = std::lcm(D, den);
        T.commonPairs.push_back({mpq_class(a * Dn).get_num().get_si(), Dn / D});
        D = Dn;
      }
    }
  }
  T.nuTan = T.u - zeroEss;

  // third summand: 2pq( sum w_j (v_j - 1)(v_{j+1}...)^2 - oMax/(Pt Rt) )
  mpq_class X = 0;
  for (size_t j = 0; j < T.commonPairs.size(); ++j) {
    long tail = 1;
    for (size_t i = j + 1; i < T.commonPairs.size(); ++i) tail *= T.commonPairs[i].second;
    X += mpq_class(T.commonPairs[j].first * (T.commonPairs[j].second - 1) * tail * tail);
  }
  X -= rat(T.oMax, Pt * Rt);
  X.canonicalize();
  T.printedX = X.get_str();
  mpq_class third = X * 2 * p * q;
  T.printedThird = third.get_den() == 1 ? third.get_num().get_si() : 0;

  long p1 = p / pr.pp(), q1 = q / pr.pp();
  T.leadingEqual = spow(pr.lcTopY, p1) * spow(pr.lcBotX, q1) == spow(pr.lcBotY, p1) * spow(pr.lcTopX, q1);
  return T;
}

}  // namespace annuli
