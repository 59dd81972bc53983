#include "annuli/elimination.hpp"

#include <cmath>
#include <limits>

namespace annuli {

namespace modp {

uint64_t mul(uint64_t a, uint64_t b, uint64_t p) { return uint64_t((unsigned __int128)a * b % p); }

uint64_t pow(uint64_t a, uint64_t e, uint64_t p) {
  uint64_t r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a, p);
    a = mul(a, a, p);
    e >>= 1;
  }
  return r;
}

uint64_t inv(uint64_t a, uint64_t p) { return pow(a, p - 2, p); }

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
    if (n % q == 0) return n == q;
  uint64_t d = n - 1;
  int s = 0;
  while (!(d & 1)) d >>= 1, ++s;
  for (uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    uint64_t x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool comp = true;
    for (int i = 1; i < s && comp; ++i) {
      x = mul(x, x, n);
      if (x == n - 1) comp = false;
    }
    if (comp) return false;
  }
  return true;
}

bool sqrt(uint64_t a, uint64_t p, uint64_t& r) {
  a %= p;
  if (a == 0) {
    r = 0;
    return true;
  }
  if (pow(a, (p - 1) / 2, p) != 1) return false;
  // Tonelli-Shanks
  uint64_t q = p - 1;
  int s = 0;
  while (!(q & 1)) q >>= 1, ++s;
  uint64_t z = 2;
  while (pow(z, (p - 1) / 2, p) == 1) ++z;
  uint64_t m = s, c = pow(z, q, p), t = pow(a, q, p), x = pow(a, (q + 1) / 2, p);
  while (t != 1) {
    uint64_t i = 0, tt = t;
    while (tt != 1) tt = mul(tt, tt, p), ++i;
    uint64_t b = c;
    for (uint64_t j = 0; j + i + 1 < m; ++j) b = mul(b, b, p);
    m = i;
    c = mul(b, b, p);
    t = mul(t, c, p);
    x = mul(x, b, p);
  }
  r = x;
  return true;
}

static void trim(std::vector<uint64_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

uint64_t resultant(std::vector<uint64_t> a, std::vector<uint64_t> b, uint64_t p) {
  trim(a);
  trim(b);
  if (a.empty() || b.empty()) return 0;
  uint64_t acc = 1;
  while (true) {
    int da = int(a.size()) - 1, db = int(b.size()) - 1;
    if (db == 0) return mul(acc, pow(b[0], da, p), p);
    if (da < db) {
      if ((da & 1) && (db & 1)) acc = p - acc == p ? 0 : (acc == 0 ? 0 : p - acc);
      std::swap(a, b);
      continue;
    }
    // a mod b
    uint64_t il = inv(b.back(), p);
    for (int i = da; i >= db; --i) {
      uint64_t f = mul(a[i], il, p);
      if (f == 0) continue;
      for (int j = 0; j <= db; ++j) a[i - db + j] = (a[i - db + j] + p - mul(f, b[j], p)) % p;
    }
    a.resize(db);
    trim(a);
    if (a.empty()) return 0;
    int dr = int(a.size()) - 1;
    // res(A,B) = (-1)^(da*db) lc(B)^(da-dr) res(B, R)
    acc = mul(acc, pow(b.back(), da - dr, p), p);
    if ((da & 1) && (db & 1)) acc = acc == 0 ? 0 : p - acc;
    std::swap(a, b);
  }
}

}  // namespace modp

long assignment_bound(const std::vector<std::vector<long>>& w, bool maximize) {
  // Hungarian algorithm (minimisation) on costs; forbidden cells get a large cost.
  int n = int(w.size());
  if (n == 0) return 0;
  const long BIG = 1L << 40;
  std::vector<std::vector<long>> a(n + 1, std::vector<long>(n + 1, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      long x = w[i][j];
      bool forbidden = x < -100000000L;
      a[i + 1][j + 1] = forbidden ? BIG : (maximize ? -x : x);
    }
  std::vector<long> u(n + 1), v(n + 1);
  std::vector<int> pmatch(n + 1), way(n + 1);
  for (int i = 1; i <= n; ++i) {
    pmatch[0] = i;
    int j0 = 0;
    std::vector<long> minv(n + 1, std::numeric_limits<long>::max());
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      int i0 = pmatch[j0], j1 = 0;
      long delta = std::numeric_limits<long>::max();
      for (int j = 1; j <= n; ++j)
        if (!used[j]) {
          long cur = a[i0][j] - u[i0] - v[j];
          if (cur < minv[j]) minv[j] = cur, way[j] = j0;
          if (minv[j] < delta) delta = minv[j], j1 = j;
        }
      for (int j = 0; j <= n; ++j)
        if (used[j])
          u[pmatch[j]] += delta, v[j] -= delta;
        else
          minv[j] -= delta;
      j0 = j1;
    } while (pmatch[j0] != 0);
    do {
      int j1 = way[j0];
      pmatch[j0] = pmatch[j1];
      j0 = j1;
    } while (j0);
  }
  long total = 0;
  for (int j = 1; j <= n; ++j) {
    long x = a[pmatch[j]][j];
    if (x >= BIG) return maximize ? std::numeric_limits<long>::min() : std::numeric_limits<long>::max();
    total += x;
  }
  return maximize ? -total : total;
}

namespace {

struct IntTable {
  // coefficient of u^i v^j as A + B*sqrt(d)
  std::vector<std::vector<mpz_class>> A, B;
  int deg_u = -1;
};

mpz_class lcm_den(const BiPoly& F) {
  mpz_class l = 1;
  for (const auto& cv : F.coeffs())
    for (const auto& c : cv.coeffs()) {
      mpz_class da = c.a().get_den(), db = c.b().get_den();
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), da.get_mpz_t());
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), db.get_mpz_t());
    }
  return l;
}

IntTable to_int(const BiPoly& F, const mpz_class& scale) {
  IntTable t;
  t.deg_u = F.deg();
  for (const auto& cv : F.coeffs()) {
    std::vector<mpz_class> ra, rb;
    for (const auto& c : cv.coeffs()) {
      mpq_class a = c.a() * scale, b = c.b() * scale;
      ra.push_back(a.get_num());
      rb.push_back(b.get_num());
    }
    t.A.push_back(ra);
    t.B.push_back(rb);
  }
  return t;
}

// log2 of sum over coefficients of |A| + |B|*ceil(sqrt|d|)
double log2_norm1(const IntTable& t, long d) {
  mpz_class s = 0;
  mpz_class root = (long)std::ceil(std::sqrt(double(std::labs(d))));
  for (size_t i = 0; i < t.A.size(); ++i)
    for (size_t j = 0; j < t.A[i].size(); ++j) s += abs(t.A[i][j]) + abs(t.B[i][j]) * root;
  if (s == 0) return 0;
  return double(mpz_sizeinbase(s.get_mpz_t(), 2));
}

int vdeg(const QPoly& p) { return p.deg(); }
int vval(const QPoly& p) {
  for (int j = 0; j <= p.deg(); ++j)
    if (!p.coeffs()[j].is_zero()) return j;
  return -1;
}

uint64_t reduce(const mpz_class& x, uint64_t p) {
  mpz_class r;
  mpz_class pp;
  mpz_import(pp.get_mpz_t(), 1, -1, sizeof(uint64_t), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), pp.get_mpz_t());
  uint64_t out = 0;
  mpz_export(&out, nullptr, -1, sizeof(uint64_t), 0, 0, r.get_mpz_t());
  return out;
}

mpz_class to_mpz(uint64_t x) {
  mpz_class r;
  mpz_import(r.get_mpz_t(), 1, -1, sizeof(uint64_t), 0, 0, &x);
  return r;
}

// table mod p under sqrt(d) -> s
std::vector<std::vector<uint64_t>> image(const IntTable& t, uint64_t s, uint64_t p) {
  std::vector<std::vector<uint64_t>> out(t.A.size());
  for (size_t i = 0; i < t.A.size(); ++i) {
    out[i].resize(t.A[i].size());
    for (size_t j = 0; j < t.A[i].size(); ++j) {
      uint64_t a = reduce(t.A[i][j], p), b = reduce(t.B[i][j], p);
      out[i][j] = (a + modp::mul(b, s, p)) % p;
    }
  }
  return out;
}

uint64_t eval_v(const std::vector<uint64_t>& c, uint64_t x, uint64_t p) {
  uint64_t acc = 0;
  for (int j = int(c.size()) - 1; j >= 0; --j) acc = (modp::mul(acc, x, p) + c[j]) % p;
  return acc;
}

// Newton interpolation, returns coefficients low to high
std::vector<uint64_t> interpolate(const std::vector<uint64_t>& xs, std::vector<uint64_t> ys, uint64_t p) {
  size_t n = xs.size();
  for (size_t k = 1; k < n; ++k)
    for (size_t i = n - 1; i >= k; --i) {
      uint64_t num = (ys[i] + p - ys[i - 1]) % p;
      uint64_t den = (xs[i] + p - xs[i - k]) % p;
      ys[i] = modp::mul(num, modp::inv(den, p), p);
      if (i == k) break;
    }
  std::vector<uint64_t> c(n, 0);
  for (size_t k = n; k-- > 0;) {
    // c = c*(x - xs[k]) + ys[k]
    std::vector<uint64_t> nc(n, 0);
    for (size_t j = 0; j < n; ++j) {
      if (c[j] == 0) continue;
      if (j + 1 < n) nc[j + 1] = (nc[j + 1] + c[j]) % p;
      nc[j] = (nc[j] + p - modp::mul(c[j], xs[k], p)) % p;
    }
    nc[0] = (nc[0] + ys[k]) % p;
    c.swap(nc);
  }
  return c;
}

}  // namespace

QPoly resultant_u(const BiPoly& F, const BiPoly& G, ElimStats* stats) {
  if (F.is_zero() || G.is_zero()) return QPoly();
  int m = F.deg(), n = G.deg();
  if (m == 0 && n == 0) return QPoly(1);
  if (m == 0) return pow(F.coeffs()[0], n);
  if (n == 0) return pow(G.coeffs()[0], m);

  long d = 1;
  for (const BiPoly* P : {&F, &G})
    for (const auto& cv : P->coeffs())
      for (const auto& c : cv.coeffs())
        if (!c.is_rational()) d = c.d();

  // Sylvester entry degree/valuation bounds through optimal assignments
  int N = m + n;
  const long NEG = -(1L << 30);
  std::vector<std::vector<long>> wdeg(N, std::vector<long>(N, NEG)), wval(N, std::vector<long>(N, NEG));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) {
      const QPoly& c = F.coeffs()[m - k];
      if (c.is_zero()) continue;
      wdeg[r][r + k] = vdeg(c);
      wval[r][r + k] = vval(c);
    }
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k) {
      const QPoly& c = G.coeffs()[n - k];
      if (c.is_zero()) continue;
      wdeg[n + r][r + k] = vdeg(c);
      wval[n + r][r + k] = vval(c);
    }
  long dbound = assignment_bound(wdeg, true);
  if (dbound == std::numeric_limits<long>::min()) return QPoly();  // structurally singular
  long vbound = assignment_bound(wval, false);
  if (vbound > dbound) vbound = dbound;
  int npts = int(dbound - vbound) + 1;

  mpz_class LF = lcm_den(F), LG = lcm_den(G);
  IntTable TF = to_int(F, LF), TG = to_int(G, LG);
  double bits = n * log2_norm1(TF, d) + m * log2_norm1(TG, d) + 2;
  mpz_class need = 1;
  need <<= (unsigned long)(bits + 1);

  std::vector<mpz_class> accA(npts), accB(npts);
  mpz_class M = 1;
  uint64_t p = (1ULL << 62);
  int used = 0;
  ElimStats st;
  st.degree_bound = int(dbound);
  st.valuation_bound = int(vbound);
  while (M < need) {
    do {
      --p;
    } while (!modp::is_prime(p));
    uint64_t s = 0;
    if (d != 1) {
      if (uint64_t(std::labs(d)) % p == 0) continue;
      uint64_t dm = d > 0 ? uint64_t(d) % p : p - uint64_t(-d) % p;
      if (!modp::sqrt(dm, p, s)) continue;
    }
    std::vector<uint64_t> embeds = d == 1 ? std::vector<uint64_t>{0} : std::vector<uint64_t>{s, p - s};
    std::vector<std::vector<uint64_t>> images;
    bool bad = false;
    for (uint64_t e : embeds) {
      auto IF = image(TF, e, p), IG = image(TG, e, p);
      auto nz = [](const std::vector<uint64_t>& c) {
        for (auto x : c)
          if (x) return true;
        return false;
      };
      if (!nz(IF[m]) || !nz(IG[n])) {
        bad = true;
        break;
      }
      std::vector<uint64_t> xs, ys;
      for (uint64_t x = 1; int(xs.size()) < npts; ++x) {
        uint64_t lf = eval_v(IF[m], x, p), lg = eval_v(IG[n], x, p);
        if (lf == 0 || lg == 0) continue;
        std::vector<uint64_t> a(m + 1), b(n + 1);
        for (int i = 0; i <= m; ++i) a[i] = eval_v(IF[i], x, p);
        for (int i = 0; i <= n; ++i) b[i] = eval_v(IG[i], x, p);
        uint64_t r = modp::resultant(a, b, p);
        r = modp::mul(r, modp::inv(modp::pow(x, uint64_t(vbound), p), p), p);
        xs.push_back(x);
        ys.push_back(r);
      }
      images.push_back(interpolate(xs, ys, p));
    }
    if (bad) continue;
    std::vector<uint64_t> ia(npts), ib(npts, 0);
    if (d == 1) {
      ia = images[0];
    } else {
      uint64_t i2 = modp::inv(2, p), i2s = modp::inv(modp::mul(2, s, p), p);
      for (int k = 0; k < npts; ++k) {
        ia[k] = modp::mul((images[0][k] + images[1][k]) % p, i2, p);
        ib[k] = modp::mul((images[0][k] + p - images[1][k]) % p, i2s, p);
      }
    }
    // CRT step
    mpz_class P = to_mpz(p);
    mpz_class Minv;
    mpz_class Mmod = M % P;
    mpz_invert(Minv.get_mpz_t(), Mmod.get_mpz_t(), P.get_mpz_t());
    for (int k = 0; k < npts; ++k) {
      for (int part = 0; part < 2; ++part) {
        mpz_class& acc = part == 0 ? accA[k] : accB[k];
        uint64_t r = part == 0 ? ia[k] : ib[k];
        mpz_class diff = (to_mpz(r) - acc) % P;
        if (diff < 0) diff += P;
        mpz_class t = (diff * Minv) % P;
        acc += M * t;
      }
    }
    M *= P;
    ++used;
    st.points += npts;
  }
  st.primes = used;
  if (stats) *stats = st;

  mpz_class half = M / 2;
  mpz_class scale_i;
  mpz_class lfp, lgp;
  mpz_pow_ui(lfp.get_mpz_t(), LF.get_mpz_t(), n);
  mpz_pow_ui(lgp.get_mpz_t(), LG.get_mpz_t(), m);
  mpq_class scale(mpz_class(lfp * lgp));
  std::vector<Scalar> out(vbound + npts);
  for (int k = 0; k < npts; ++k) {
    mpz_class a = accA[k], b = accB[k];
    if (a > half) a -= M;
    if (b > half) b -= M;
    mpq_class qa(a), qb(b);
    qa /= scale;
    qb /= scale;
    out[vbound + k] = d == 1 ? Scalar(qa) : Scalar(qa, qb, d);
  }
  return QPoly(std::move(out));
}

}  // namespace annuli
