#include "annuli/catalog.hpp"

#include <functional>
#include <numeric>
#include <sstream>

namespace annuli {

namespace {

Laurent T() { return Laurent::t(); }
Laurent tp(int e) { return Laurent::mono(Scalar(1), e); }
Laurent tm1(long e) { return pow(T() - Laurent(1), int(e)); }
Laurent q(long n, long d = 1) { return Laurent(Scalar(rat(n, d))); }

[[noreturn]] void excluded(const SeriesId& id, const std::string& why) {
  throw Error(Err::ExcludedParams, id.str() + ": " + why);
}

Laurent iterate(Laurent P, int e, long steps) {
  for (long i = 0; i < steps; ++i) P = recursion_step(P, e);
  return P;
}

bool has_pole(const Curve& c, bool atInf) {
  auto pole = [&](const Laurent& f) { return !f.is_zero() && (atInf ? f.top() > 0 : f.bot() < 0); };
  return pole(c.x) || pole(c.y);
}

}  // namespace

long SeriesId::operator[](const std::string& k) const {
  auto it = params.find(k);
  if (it == params.end()) throw Error(Err::ExcludedParams, str() + ": missing parameter " + k);
  return it->second;
}

std::string SeriesId::str() const {
  std::ostringstream os;
  os << letter;
  if (params.empty()) return os.str();
  os << "(";
  bool first = true;
  // canonical parameter order of each family
  for (const auto& pr : family(letter).params) {
    auto it = params.find(pr.name);
    if (it == params.end()) continue;
    os << (first ? "" : ",") << pr.name << "=" << it->second;
    first = false;
  }
  os << ")";
  return os.str();
}

const std::vector<FamilyInfo>& families() {
  static const std::vector<FamilyInfo> F = {
      {'a', {{"m", 1, 4}, {"n", -4, 4}, {"k", 0, 2}}, "x=t^m, y=t^n+b_1 t^-m+...+b_k t^-km (b_j=1)",
       "m>=1, gcd(m,n)=1, k>=0, n<0 when k=0, |mn|<=12"},
      {'b', {{"k", 1, 4}, {"m", 0, 4}}, "x=t(t-1), y=R_{k,m}(1/t), R_0=(1/u-1/2)^(2m+1), step exponent 2",
       "k>=1, m>=0, (k,m) not in {(1,0),(2,0),(1,1)}"},
      {'c', {{"m", 1, 3}, {"n", 2, 4}, {"k", 1, 3}}, "x=t^mn (t-1), y=S_k(1/t), S_0=u^n, step exponent mn+1",
       "k>=1, n>=2, mn>=2"},
      {'d', {{"m", 1, 3}, {"n", 2, 4}, {"k", 1, 3}}, "x=t^(mn-1) (t-1), y=T_k(1/t), T_0=u^n, step exponent mn",
       "k>=1, n>=2, mn>=3"},
      {'e', {{"m", 1, 3}, {"n", 2, 4}, {"k", 1, 3}}, "x=t^mn (t-1), y=U_k(1/t), U_0=u^-n, step exponent mn+1",
       "k>=1, n>=2, mn>=2"},
      {'f', {{"m", 1, 3}, {"n", 2, 4}, {"k", 1, 3}}, "x=t^(mn-1) (t-1), y=V_k(1/t), V_0=u^-n, step exponent mn",
       "k>=1, n>=2, mn>=4"},
      {'g', {{"k", 1, 4}}, "x=t^2 (t-1), y=W_k(1/t), W_1=3u-u^2, step exponent 3", "k>=1"},
      {'h', {{"k", 1, 4}}, "x=t^3 (t-1), y=X_k(1/t), X_1=2u^2-u^3, step exponent 4", "k>=1"},
      {'i', {{"k", 1, 4}}, "x=t^3 (t-1), y=Y_k(1/t), Y_1=2u^2+u^3, step exponent 4", "k>=1"},
      {'j', {{"m", 0, 4}, {"n", 0, 4}}, "x=Z_{m,n}(t), y=t+1/t", "0<=m<=n, (m,n)!=(0,0)"},
      {'k', {{"k", 1, 4}}, "x=(t-1)^3 t^-2, y=x^k (t-1)(t-4) t^-1", "k>=1"},
      {'l', {{"m", 1, 4}, {"n", 0, 4}, {"k", 0, 4}, {"l", 1, 4}, {"p", 1, 2}},
       "x=(t-1)^m t^-pn, y=(t-1)^k t^-pl", "ml-nk=1, p>=1, m,k>=0, poles at t=0 and t=oo"},
      {'m', {{"m", 1, 4}, {"n", 0, 4}, {"k", 0, 4}, {"l", 1, 4}, {"p", 2, 3}},
       "x=(t-1)^pm t^-n, y=(t-1)^pk t^-l", "ml-nk=1, p>=2, m,k>=0, poles at t=0 and t=oo"},
      {'n', {{"m", 1, 4}, {"n", 0, 4}, {"k", 0, 4}, {"l", 0, 4}}, "x=(t-1)^2m t^-2n, y=(t-1)^2k t^-2l",
       "ml-nk=1, m,k>=0, poles at t=0 and t=oo"},
      {'o', {{"m", 1, 3}, {"n", 0, 2}}, "x=y^n (t-1)^2m (t+1) t^-m, y=(t-1)^4m t^(1-2m)", "m>=1, n>=0"},
      {'p', {{"k", 0, 4}}, "x=(t-1)^4 t^-3, y=x^k (t-1)^2 (t-3) t^-2", "k>=0"},
      {'q', {{"m", 2, 3}, {"n", 0, 3}}, "x=y^n (t-1)^(2m-1) (t+1) t^-m, y=(t-1)^(4m-2) t^(1-2m)", "m>=2, n>=0"},
      {'r', {{"n", 0, 3}}, "x=y^n (t-1)^3 (t+w) t^-2, y=(t-1)^6 t^-3, w=(1+sqrt(-3))/2", "n>=0"},
      {'s', {{"n", 1, 4}}, "x=t^2n (t^2+sqrt(2) t+1), y=t^(-2n-4) (t^2-sqrt(2) t+1)", "n>=1"},
      {'t', {}, "x=(t^2+t+2/3) t^4, y=(t^2-t+1/3) t^-8", ""},
      {'u', {}, "x=(t-1)^2 (t+2) t^-1, y=(t-1)^4 (t+1/2) t^-2", ""},
      {'v', {}, "x=(t-1)^2 (t+4+2 sqrt(5)) t^-1, y=(t-1)^4 (t+(11+5 sqrt(5))/4) t^-2", ""},
      {'w', {}, "x=(t-1)^2 (t+2) t^-1, y=(t-1)^2 (t+1/2) t^-2", ""},
  };
  return F;
}

const FamilyInfo& family(char letter) {
  for (const auto& f : families())
    if (f.letter == letter) return f;
  throw Error(Err::ExcludedParams, std::string("unknown series '") + letter + "'");
}

// ---- recursion and (j) ----

Laurent recursion_step(const Laurent& P, int e) {
  Laurent num = P - Laurent(P.eval(Scalar(1)));
  return exact_div(num, T() - Laurent(1)) * tp(e);
}

Laurent solve_Z(long m, long n) {
  if (m < 0 || n < 0 || m > n || (m == 0 && n == 0))
    throw Error(Err::ExcludedParams, "Z_{m,n} needs 0 <= m <= n and (m,n) != (0,0)");
  Laurent rhs = tm1(2 * m + 1) * pow(T() + Laurent(1), int(2 * n + 1)) * tp(int(-m - n - 1));
  // rhs = sum a_j (t^j - t^-j); Z = sum a_j t^j
  Laurent Z;
  for (const auto& [k, c] : rhs.terms()) {
    if (k > 0) Z.set(k, c);
    if (k == 0 || rhs.coef(-k) != -c) throw Error(Err::Internal, "right-hand side is not antisymmetric");
  }
  return Z;
}

// ---- towers ----

Curve tower(const Curve& c, TowerMode mode, std::optional<Scalar> t1) {
  switch (mode) {
    case TowerMode::Forward: {
      Laurent xy = c.x * c.y;
      Scalar K = (!xy.is_zero() && xy.top() <= 0) ? -xy.coef(0) : Scalar(0);
      return {c.x, xy + Laurent(K)};
    }
    case TowerMode::Reverse: {
      if (!t1) {
        QPoly N = c.x.numerator();
        if (N.deg() != 1) throw Error(Err::ShapeMismatch, "reverse tower needs the root t1 of x");
        t1 = -N.coef(0) / N.coef(1);
      }
      if (t1->is_zero() || !c.x.eval(*t1).is_zero())
        throw Error(Err::ShapeMismatch, "t1 is not a nonzero root of x");
      try {
        return {c.x, exact_div(c.y - Laurent(c.y.eval(*t1)), c.x)};
      } catch (const Error& e) {
        if (e.code() != Err::NotDivisible) throw;
        throw Error(Err::ShapeMismatch, "x has zeros in C* other than t1");
      }
    }
    case TowerMode::Mid: {
      if (c.x != T() * T() - T()) throw Error(Err::ShapeMismatch, "mid tower needs x = t(t-1)");
      return {c.x, (c.x + q(1, 4)) * c.y};
    }
  }
  throw Error(Err::Internal, "unknown tower mode");
}

// ---- generators ----

void validate(const SeriesId& id) {
  const FamilyInfo& f = family(id.letter);
  for (const auto& pr : f.params) (void)id[pr.name];
  for (const auto& [k, v] : id.params) {
    bool known = false;
    for (const auto& pr : f.params) known |= pr.name == k;
    if (!known) excluded(id, "unknown parameter " + k);
  }
  auto need = [&](bool ok, const std::string& what) {
    if (!ok) excluded(id, what);
  };
  switch (id.letter) {
    case 'a': {
      long m = id["m"], n = id["n"], k = id["k"];
      need(m >= 1, "m >= 1");
      need(n != 0 && std::gcd(m, std::labs(n)) == 1, "gcd(m,n) = 1");
      need(k >= 0, "k >= 0");
      need(k > 0 || n < 0, "k = 0 needs n < 0 (otherwise t -> 0 is not a place at infinity)");
      break;
    }
    case 'b': {
      long k = id["k"], m = id["m"];
      need(k >= 1 && m >= 0, "k >= 1, m >= 0");
      need(!((k == 1 && m == 0) || (k == 2 && m == 0) || (k == 1 && m == 1)), "(k,m) != (1,0),(2,0),(1,1)");
      break;
    }
    case 'c':
    case 'e':
      need(id["k"] >= 1 && id["n"] >= 2 && id["m"] * id["n"] >= 2, "k >= 1, n >= 2, mn >= 2");
      break;
    case 'd':
      need(id["k"] >= 1 && id["n"] >= 2 && id["m"] * id["n"] >= 3, "k >= 1, n >= 2, mn >= 3");
      break;
    case 'f':
      need(id["k"] >= 1 && id["n"] >= 2 && id["m"] * id["n"] >= 4, "k >= 1, n >= 2, mn >= 4");
      break;
    case 'g':
    case 'h':
    case 'i':
    case 'k':
      need(id["k"] >= 1, "k >= 1");
      break;
    case 'j': {
      long m = id["m"], n = id["n"];
      need(m >= 0 && m <= n && !(m == 0 && n == 0), "0 <= m <= n, (m,n) != (0,0)");
      break;
    }
    case 'l':
    case 'm':
    case 'n': {
      long m = id["m"], n = id["n"], k = id["k"], l = id["l"];
      need(m * l - n * k == 1, "ml - nk = 1");
      need(m >= 0 && k >= 0, "m, k >= 0");
      if (id.letter == 'l') need(id["p"] >= 1, "p >= 1");
      if (id.letter == 'm') need(id["p"] >= 2, "p >= 2");
      break;
    }
    case 'o':
      need(id["m"] >= 1 && id["n"] >= 0, "m >= 1, n >= 0");
      break;
    case 'p':
      need(id["k"] >= 0, "k >= 0");
      break;
    case 'q':
      need(id["m"] >= 2 && id["n"] >= 0, "m >= 2, n >= 0");
      break;
    case 'r':
      need(id["n"] >= 0, "n >= 0");
      break;
    case 's':
      need(id["n"] >= 1, "n >= 1");
      break;
    default:
      break;
  }
}

namespace {

Curve build(const SeriesId& id) {
  auto P = [&](const char* k) { return id[k]; };
  Laurent t = T();
  switch (id.letter) {
    case 'a': {
      long m = P("m"), n = P("n"), k = P("k");
      Laurent y = tp(int(n));
      for (long j = 1; j <= k; ++j) y += tp(int(-j * m));
      return {tp(int(m)), y};
    }
    case 'b': {
      long k = P("k"), m = P("m");
      Laurent R = iterate(pow(tp(-1) - q(1, 2), int(2 * m + 1)), 2, k);
      return {t * t - t, R.compose_inv_t()};
    }
    case 'c':
    case 'd':
    case 'e':
    case 'f': {
      long m = P("m"), n = P("n"), k = P("k");
      bool plain = id.letter == 'c' || id.letter == 'e';
      long mn = m * n;
      Laurent x = tp(int(plain ? mn : mn - 1)) * (t - Laurent(1));
      Laurent S0 = tp(int(id.letter <= 'd' ? n : -n));
      Laurent S = iterate(S0, int(plain ? mn + 1 : mn), k);
      return {x, S.compose_inv_t()};
    }
    case 'g':
      return {t * t * (t - Laurent(1)), iterate(q(3) * t - t * t, 3, P("k") - 1).compose_inv_t()};
    case 'h':
      return {pow(t, 3) * (t - Laurent(1)), iterate(q(2) * t * t - pow(t, 3), 4, P("k") - 1).compose_inv_t()};
    case 'i':
      return {pow(t, 3) * (t - Laurent(1)), iterate(q(2) * t * t + pow(t, 3), 4, P("k") - 1).compose_inv_t()};
    case 'j':
      return {solve_Z(P("m"), P("n")), t + tp(-1)};
    case 'k': {
      Laurent x = tm1(3) * tp(-2);
      return {x, pow(x, int(P("k"))) * (t - Laurent(1)) * (t - q(4)) * tp(-1)};
    }
    case 'l':
      return {tm1(P("m")) * tp(int(-P("p") * P("n"))), tm1(P("k")) * tp(int(-P("p") * P("l")))};
    case 'm':
      return {tm1(P("p") * P("m")) * tp(int(-P("n"))), tm1(P("p") * P("k")) * tp(int(-P("l")))};
    case 'n':
      return {tm1(2 * P("m")) * tp(int(-2 * P("n"))), tm1(2 * P("k")) * tp(int(-2 * P("l")))};
    case 'o': {
      long m = P("m");
      Laurent y = tm1(4 * m) * tp(int(1 - 2 * m));
      return {pow(y, int(P("n"))) * tm1(2 * m) * (t + Laurent(1)) * tp(int(-m)), y};
    }
    case 'p': {
      Laurent x = tm1(4) * tp(-3);
      return {x, pow(x, int(P("k"))) * tm1(2) * (t - q(3)) * tp(-2)};
    }
    case 'q': {
      long m = P("m");
      Laurent y = tm1(4 * m - 2) * tp(int(1 - 2 * m));
      return {pow(y, int(P("n"))) * tm1(2 * m - 1) * (t + Laurent(1)) * tp(int(-m)), y};
    }
    case 'r': {
      Laurent y = tm1(6) * tp(-3);
      Scalar w(rat(1, 2), rat(1, 2), -3);
      return {pow(y, int(P("n"))) * tm1(3) * (t + Laurent(w)) * tp(-2), y};
    }
    case 's': {
      long n = P("n");
      Laurent r2 = Laurent(Scalar::sqrt_of(2));
      return {tp(int(2 * n)) * (t * t + r2 * t + Laurent(1)), tp(int(-2 * n - 4)) * (t * t - r2 * t + Laurent(1))};
    }
    case 't':
      return {(t * t + t + q(2, 3)) * tp(4), (t * t - t + q(1, 3)) * tp(-8)};
    case 'u':
      return {tm1(2) * (t + q(2)) * tp(-1), tm1(4) * (t + q(1, 2)) * tp(-2)};
    case 'v':
      return {tm1(2) * (t + Laurent(Scalar(4, 2, 5))) * tp(-1),
              tm1(4) * (t + Laurent(Scalar(rat(11, 4), rat(5, 4), 5))) * tp(-2)};
    case 'w':
      return {tm1(2) * (t + q(2)) * tp(-1), tm1(2) * (t + q(1, 2)) * tp(-2)};
  }
  throw Error(Err::ExcludedParams, std::string("unknown series '") + id.letter + "'");
}

}  // namespace

Curve gen_series(const SeriesId& id) {
  validate(id);
  Curve c = build(id);
  if (c.x.is_constant() || c.y.is_constant()) excluded(id, "a component is constant");
  if (!has_pole(c, true) || !has_pole(c, false)) excluded(id, "the curve needs a pole at t = 0 and at t = oo");
  return c;
}

Curve gen_b_by_towers(long k, long m) {
  Laurent t = T();
  Curve c{t * t - t, t - q(1, 2)};
  for (long i = 0; i < m; ++i) c = tower(c, TowerMode::Mid);
  for (long i = 0; i < k; ++i) c = tower(c, TowerMode::Reverse, Scalar(1));
  return c;
}

// ---- expected data ----

long mu_from_support(long n, const std::vector<long>& exps) {
  long d = n, mu = 0;
  for (long k : exps) {
    if (d == 1) break;
    if (k % d == 0) continue;
    long g = std::gcd(d, std::labs(k));
    mu += (k - 1) * (d - g);
    d = g;
  }
  if (d != 1) throw Error(Err::Internal, "support does not resolve the branch");
  return mu;
}

ExpectedInvariants expected_invariants(const SeriesId& id) {
  validate(id);
  ExpectedInvariants ex;
  auto A = [](long k) { return "A_" + std::to_string(k); };
  auto at = [&](mpq_class a, long mu, std::string label = "") {
    if (mu > 0) ex.points.push_back({a, 1, mu, label});
  };
  switch (id.letter) {
    case 'a':
    case 'c':
    case 'd':
    case 'e':
    case 'f':
    case 'i':
    case 's':
    case 't':
      ex.notes = "smooth";
      break;
    case 'b':
      at(rat(1, 2), 2 * id["m"], A(2 * id["m"]));
      ex.notes = "A_2m at t = 1/2; x ~ t at t = 0";
      break;
    case 'g':
      at(rat(2, 3), 2, A(2));
      ex.notes = "cusp at t = 2/3";
      break;
    case 'h':
      at(rat(3, 4), 2, A(2));
      ex.notes = "cusp at t = 3/4";
      break;
    case 'j':
      at(rat(1), 2 * id["m"], A(2 * id["m"]));
      at(rat(-1), 2 * id["n"], A(2 * id["n"]));
      ex.notes = "A_2m at t = 1, A_2n at t = -1";
      break;
    case 'k':
      at(rat(1), mu_from_support(3, {3 * id["k"] + 1}));
      at(rat(-2), 2, A(2));
      ex.notes = "x-order 3 at t = 1 with y ~ x^(k+1/3); cusp at t = -2";
      break;
    case 'l':
      if (id["m"] > 1 && id["k"] > 1) at(rat(1), mu_from_support(id["m"], {id["k"]}));
      ex.notes = "x ~ (t-1)^m, y ~ x^(k/m) at t = 1";
      break;
    case 'm': {
      long p = id["p"], m = id["m"], k = id["k"];
      if (k > 0) at(rat(1), mu_from_support(p * m, {p * k, p * k + 1}));
      ex.notes = "x ~ (t-1)^pm, y ~ x^(k/m)(1 + c x^(1/pm)) at t = 1";
      break;
    }
    case 'n': {
      long m = id["m"], k = id["k"];
      if (k > 0) at(rat(1), mu_from_support(2 * m, {2 * k, 2 * k + 1}));
      ex.notes = "x ~ (t-1)^2m, y ~ x^(k/m)(1 + c x^(1/2m)) at t = 1";
      break;
    }
    case 'o': {
      long m = id["m"], n = id["n"], N = 4 * m, e = 4 * m * n + 2 * m;
      at(rat(1), mu_from_support(N, {e, e + 2, e + 3}));
      ex.notes = "y ~ (t-1)^4m, x ~ y^(n+1/2)(1 + c1 y^(1/2m) + c2 y^(3/4m)) at t = 1";
      break;
    }
    case 'p': {
      long k = id["k"];
      at(rat(1), mu_from_support(4, {4 * k + 2, 4 * k + 3}));
      at(rat(-3), 2, A(2));
      ex.notes = "x ~ (t-1)^4, y ~ x^(k+1/2)(1 + c x^(1/4)) at t = 1; cusp at t = -3";
      break;
    }
    case 'q': {
      long m = id["m"], n = id["n"], N = 4 * m - 2, e = N * n + 2 * m - 1;
      at(rat(1), mu_from_support(N, {e, e + 2}));
      ex.notes = "y ~ (t-1)^(4m-2), x ~ y^(n+1/2)(1 + c y^(2/(4m-2))) at t = 1; tangent places";
      break;
    }
    case 'r': {
      long n = id["n"];
      at(rat(1), mu_from_support(6, {6 * n + 3, 6 * n + 4}));
      ex.notes = "y ~ (t-1)^6, x ~ y^(n+1/2)(1 + c y^(1/6)) at t = 1; tangent places with A^3 = B^3";
      break;
    }
    case 'u':
      at(rat(1), 8, A(8));
      ex.notes = "A_8 at t = 1";
      break;
    case 'v':
      at(rat(1), 4, A(4));
      ex.points.push_back({std::nullopt, 1, 4, A(4)});
      ex.notes = "two A_4";
      break;
    case 'w':
      at(rat(1), 2, A(2));
      ex.points.push_back({std::nullopt, 2, 2, A(2)});
      ex.notes = "three cusps, one rational and a conjugate pair";
      break;
  }
  ex.smooth = ex.points.empty();
  return ex;
}

MatchResult match_expected(const std::vector<PointAnalysis>& found, const ExpectedInvariants& ex) {
  MatchResult r;
  std::vector<bool> used(found.size(), false);
  auto root_of = [](const PointAnalysis& pa) -> std::optional<Scalar> {
    if (pa.factor.deg() != 1) return std::nullopt;
    return -pa.factor.coef(0) / pa.factor.coef(1);
  };
  auto fits = [&](const PointAnalysis& pa, const ExpectedPoint& e) {
    if (pa.degree != e.degree || pa.mu != e.mu) return false;
    if (!e.label.empty() && pa.label.rfind("A_", 0) == 0 && pa.label != e.label) return false;
    if (e.at) {
      auto rt = root_of(pa);
      if (!rt || *rt != Scalar(*e.at)) return false;
    }
    return true;
  };
  // located expectations first so that free ones cannot steal their points
  std::vector<size_t> order;
  for (size_t i = 0; i < ex.points.size(); ++i)
    if (ex.points[i].at) order.push_back(i);
  for (size_t i = 0; i < ex.points.size(); ++i)
    if (!ex.points[i].at) order.push_back(i);
  std::ostringstream os;
  for (size_t i : order) {
    const ExpectedPoint& e = ex.points[i];
    bool hit = false;
    for (size_t j = 0; j < found.size() && !hit; ++j)
      if (!used[j] && fits(found[j], e)) used[j] = hit = true;
    if (!hit) {
      r.ok = false;
      os << "missing mu=" << e.mu << (e.at ? " at t=" + e.at->get_str() : "") << "; ";
    }
  }
  for (size_t j = 0; j < found.size(); ++j)
    if (!used[j]) {
      r.ok = false;
      os << "unexpected " << found[j].label << " at " << poly_str(found[j].factor) << "; ";
    }
  r.detail = os.str();
  return r;
}

// ---- grids ----

std::vector<SeriesId> series_grid(char letter, const std::map<std::string, std::pair<long, long>>& ranges,
                                  bool keepExcluded) {
  const FamilyInfo& f = family(letter);
  std::vector<ParamRange> rs = f.params;
  for (auto& r : rs) {
    auto it = ranges.find(r.name);
    if (it != ranges.end()) {
      r.lo = it->second.first;
      r.hi = it->second.second;
    }
  }
  for (const auto& [k, v] : ranges) {
    bool known = false;
    for (const auto& r : rs) known |= r.name == k;
    if (!known) throw Error(Err::ExcludedParams, std::string("series ") + letter + " has no parameter " + k);
  }
  std::vector<SeriesId> out;
  SeriesId cur;
  cur.letter = letter;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == rs.size()) {
      if (!keepExcluded) {
        try {
          (void)gen_series(cur);
        } catch (const Error& e) {
          if (e.code() != Err::ExcludedParams) throw;
          return;
        }
        if (letter == 'a' && std::labs(cur["m"] * cur["n"]) > 12) return;
      }
      out.push_back(cur);
      return;
    }
    for (long v = rs[i].lo; v <= rs[i].hi; ++v) {
      cur.params[rs[i].name] = v;
      rec(i + 1);
    }
  };
  rec(0);
  return out;
}

std::vector<SeriesId> default_grid() {
  std::vector<SeriesId> out;
  for (const auto& f : families())
    for (auto& id : series_grid(f.letter, {}, false)) out.push_back(std::move(id));
  return out;
}

}  // namespace annuli
