#pragma once
// Dense univariate polynomials over a coefficient ring R.
// R needs: default ctor (zero), R(long), is_zero(), + - * unary-, ==.
// Field routines additionally need inv(), which may throw a splitting event.
#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "annuli/errors.hpp"

namespace annuli {

template <class R>
class Poly {
 public:
  using coeff_type = R;

  Poly() = default;
  Poly(long n) {
    if (n != 0) c_.push_back(R(n));
  }
  explicit Poly(std::vector<R> c) : c_(std::move(c)) { trim(); }

  static Poly constant(const R& x) { return Poly(std::vector<R>{x}); }
  static Poly monomial(const R& x, int k) {
    std::vector<R> v(k + 1);
    v[k] = x;
    return Poly(std::move(v));
  }
  static Poly x() { return monomial(R(1), 1); }

  int deg() const { return int(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const R& lc() const { return c_.back(); }
  R coef(int k) const { return (k >= 0 && k < int(c_.size())) ? c_[k] : R(); }
  const std::vector<R>& coeffs() const { return c_; }
  void set(int k, const R& v) {
    if (k >= int(c_.size())) c_.resize(k + 1);
    c_[k] = v;
    trim();
  }

  Poly operator-() const {
    Poly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
  }
  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<R> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly scaled(const R& s) const {
    Poly r(*this);
    for (auto& x : r.c_) x = x * s;
    r.trim();
    return r;
  }
  Poly shifted(int k) const {  // multiply by x^k, k >= 0
    if (is_zero()) return Poly();
    std::vector<R> v(k);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(std::move(v));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  R eval(const R& x) const {
    R acc;
    for (int i = deg(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
  }
  // evaluation in an algebra over R (e.g. a residue ring over R)
  template <class S>
  S eval_in(const S& x) const {
    S acc{};
    for (int i = deg(); i >= 0; --i) acc = acc * x + S(c_[i]);
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<R> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * R(long(i));
    return Poly(std::move(v));
  }

  std::string str(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = deg(); i >= 0; --i) {
      if (c_[i].is_zero()) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << c_[i].str() << ")";
      if (i > 0) os << "*" << var << (i > 1 ? "^" + std::to_string(i) : "");
    }
    return os.str();
  }

  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

 private:
  std::vector<R> c_;
};

// ---------- field algorithms ----------

template <class F>
Poly<F> monic(const Poly<F>& a) {
  if (a.is_zero()) return a;
  return a.scaled(inv(a.lc()));
}

template <class F>
std::pair<Poly<F>, Poly<F>> divmod(const Poly<F>& a, const Poly<F>& b) {
  if (b.is_zero()) throw Error(Err::DivisionByZero, "polynomial division by zero");
  int db = b.deg();
  if (a.deg() < db) return {Poly<F>(), a};
  F ilc = inv(b.lc());
  std::vector<F> r = a.coeffs();
  std::vector<F> q(a.deg() - db + 1);
  for (int i = a.deg(); i >= db; --i) {
    F f = r[i] * ilc;
    q[i - db] = f;
    if (f.is_zero()) continue;
    for (int j = 0; j <= db; ++j) r[i - db + j] = r[i - db + j] - f * b.coeffs()[j];
  }
  r.resize(db);
  return {Poly<F>(std::move(q)), Poly<F>(std::move(r))};
}

// remainder by a monic modulus: ring operations only
template <class R>
Poly<R> rem_monic(const Poly<R>& a, const Poly<R>& m) {
  int dm = m.deg();
  if (a.deg() < dm) return a;
  std::vector<R> r = a.coeffs();
  for (int i = a.deg(); i >= dm; --i) {
    R f = r[i];
    if (f.is_zero()) continue;
    for (int j = 0; j <= dm; ++j) r[i - dm + j] = r[i - dm + j] - f * m.coeffs()[j];
  }
  r.resize(dm);
  return Poly<R>(std::move(r));
}

template <class F>
Poly<F> operator%(const Poly<F>& a, const Poly<F>& b) {
  return divmod(a, b).second;
}

template <class F>
Poly<F> exact_div(const Poly<F>& a, const Poly<F>& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) throw Error(Err::NotDivisible, "nonzero remainder");
  return q;
}

template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a);
}

// s*a + t*b = g, g monic (or zero)
template <class F>
struct ExtGcd {
  Poly<F> g, s, t;
};

template <class F>
ExtGcd<F> ext_gcd(const Poly<F>& a, const Poly<F>& b) {
  Poly<F> r0 = a, r1 = b, s0(1), s1, t0, t1(1);
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    Poly<F> s2 = s0 - q * s1, t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  F il = inv(r0.lc());
  return {r0.scaled(il), s0.scaled(il), t0.scaled(il)};
}

template <class F>
Poly<F> squarefree_part(const Poly<F>& f) {
  if (f.is_zero()) throw Error(Err::DivisionByZero, "squarefree part of 0");
  if (f.deg() == 0) return Poly<F>(1);
  return monic(exact_div(f, gcd(f, f.derivative())));
}

template <class R>
Poly<R> compose(const Poly<R>& a, const Poly<R>& b) {
  Poly<R> acc;
  for (int i = a.deg(); i >= 0; --i) acc = acc * b + Poly<R>::constant(a.coeffs()[i]);
  return acc;
}

// a(x + s)
template <class R>
Poly<R> taylor_shift(const Poly<R>& a, const R& s) {
  std::vector<R> c = a.coeffs();
  int n = int(c.size());
  for (int i = 0; i < n; ++i)
    for (int j = n - 2; j >= i; --j) c[j] = c[j] + s * c[j + 1];
  return Poly<R>(std::move(c));
}

template <class R>
Poly<R> pow(const Poly<R>& a, int e) {
  Poly<R> r(1), b = a;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

// ---------- integral-domain algorithms ----------

// lc(b)^(deg a - deg b + 1) * a = q*b + r
template <class R>
Poly<R> prem(const Poly<R>& a, const Poly<R>& b) {
  int db = b.deg();
  if (a.deg() < db) return a;
  std::vector<R> r = a.coeffs();
  const R& l = b.lc();
  int steps = a.deg() - db + 1;
  for (int i = a.deg(); i >= db; --i) {
    R f = r[i];
    for (int j = 0; j < i; ++j) r[j] = r[j] * l;
    r[i] = R();
    if (!f.is_zero())
      for (int j = 0; j < db; ++j) r[i - db + j] = r[i - db + j] - f * b.coeffs()[j];
    --steps;
  }
  (void)steps;
  r.resize(db);
  return Poly<R>(std::move(r));
}

template <class R>
R ring_pow(const R& a, int e) {
  R r(1), b = a;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

// exact quotient in the coefficient domain
template <class F>
Poly<F> exact_quotient(const Poly<F>& a, const Poly<F>& b) {
  return exact_div(a, b);
}
template <class F>
F exact_quotient(const F& a, const F& b) {
  return a * inv(b);
}

// Resultant through the subresultant pseudo-remainder sequence.
template <class R>
R resultant(Poly<R> A, Poly<R> B) {
  if (A.is_zero() || B.is_zero()) return R();
  R g(1), h(1);
  long s = 1;
  if (A.deg() < B.deg()) {
    std::swap(A, B);
    if ((A.deg() & 1) && (B.deg() & 1)) s = -s;
  }
  while (B.deg() > 0) {
    int delta = A.deg() - B.deg();
    if ((A.deg() & 1) && (B.deg() & 1)) s = -s;
    Poly<R> Rm = prem(A, B);
    A = std::move(B);
    if (Rm.is_zero()) return R();
    R den = g * ring_pow(h, delta);
    std::vector<R> q;
    for (const auto& c : Rm.coeffs()) q.push_back(exact_quotient(c, den));
    B = Poly<R>(std::move(q));
    g = A.lc();
    if (delta == 0) {
      // h unchanged
    } else {
      h = exact_quotient(ring_pow(g, delta), ring_pow(h, delta - 1));
    }
  }
  int da = A.deg();
  R hb = exact_quotient(ring_pow(B.lc(), da), ring_pow(h, da - 1 < 0 ? 0 : da - 1));
  if (da == 0) hb = R(1);  // Res(const, const) = 1 by convention
  return s > 0 ? hb : -hb;
}

}  // namespace annuli
