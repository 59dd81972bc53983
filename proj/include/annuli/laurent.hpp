#pragma once
#include <map>
#include <string>
#include <utility>

#include "annuli/poly.hpp"
#include "annuli/scalar.hpp"

namespace annuli {

using QPoly = Poly<Scalar>;

// Finite sum of c_k t^k over Q(sqrt d); zero coefficients are never stored.
class Laurent {
 public:
  Laurent() = default;
  Laurent(long c) { set(0, Scalar(c)); }
  Laurent(const Scalar& c) { set(0, c); }
  explicit Laurent(const std::map<int, Scalar>& m);

  static Laurent mono(const Scalar& c, int k) {
    Laurent r;
    r.set(k, c);
    return r;
  }
  static Laurent t() { return mono(Scalar(1), 1); }
  // p(t) * t^shift
  static Laurent from_poly(const QPoly& p, int shift = 0);

  const std::map<int, Scalar>& terms() const { return m_; }
  bool is_zero() const { return m_.empty(); }
  bool is_constant() const { return m_.empty() || (m_.size() == 1 && m_.begin()->first == 0); }
  int top() const;  // requires nonzero
  int bot() const;
  Scalar coef(int k) const;
  Scalar top_coef() const { return coef(top()); }
  Scalar bot_coef() const { return coef(bot()); }
  void set(int k, const Scalar& c);
  long field() const;  // the d of any irrational coefficient, else 1

  Laurent operator-() const;
  Laurent& operator+=(const Laurent& o);
  Laurent& operator-=(const Laurent& o);
  friend Laurent operator+(Laurent a, const Laurent& b) { return a += b; }
  friend Laurent operator-(Laurent a, const Laurent& b) { return a -= b; }
  friend Laurent operator*(const Laurent& a, const Laurent& b);
  friend bool operator==(const Laurent& a, const Laurent& b);
  friend bool operator!=(const Laurent& a, const Laurent& b) { return !(a == b); }
  Laurent scaled(const Scalar& s) const;
  Laurent shifted(int k) const;

  Laurent derivative() const;
  Laurent compose_inv_t() const;          // t -> 1/t
  Laurent subs_scale(const Scalar& lambda) const;  // t -> lambda*t
  Scalar eval(const Scalar& x) const;

  // numerator polynomial N with f = t^bot * N, N(0) != 0
  QPoly numerator() const;

  std::string str(const std::string& var = "t") const;

 private:
  std::map<int, Scalar> m_;
};

Laurent pow(const Laurent& a, int e);
// compact polynomial text, "t^2 + t + 1"
inline std::string poly_str(const QPoly& p, const std::string& var = "t") { return Laurent::from_poly(p).str(var); }
// exact quotient f/g, NotDivisible otherwise
Laurent exact_div(const Laurent& f, const Laurent& g);
// numerators of two Laurent polynomials brought to a common shift
int gcd_int(long a, long b);

}  // namespace annuli
