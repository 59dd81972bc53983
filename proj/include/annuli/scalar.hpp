#pragma once
#include <gmpxx.h>

#include <string>

#include "annuli/errors.hpp"

namespace annuli {

// canonical n/d (d may be negative)
inline mpq_class rat(long n, long d = 1) {
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}


bool is_squarefree(long d);

// a + b*sqrt(d) with d squarefree; d == 1 means plain Q and b is folded into a.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long n) : a_(n) {}
  Scalar(const mpq_class& q) : a_(q) { a_.canonicalize(); }
  Scalar(const mpq_class& a, const mpq_class& b, long d);

  static Scalar sqrt_of(long d) { return Scalar(0, 1, d); }

  const mpq_class& a() const { return a_; }
  const mpq_class& b() const { return b_; }
  long d() const { return d_; }

  bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
  bool is_rational() const { return sgn(b_) == 0; }
  bool is_one() const { return a_ == 1 && sgn(b_) == 0; }

  Scalar zero() const { return with_d(0, 0); }
  Scalar one() const { return with_d(1, 0); }
  Scalar constant(const mpq_class& q) const { return with_d(q, 0); }

  Scalar conj() const { return with_d(a_, -b_); }
  mpq_class norm() const { return a_ * a_ - mpq_class(d_) * b_ * b_; }
  Scalar inv() const;

  Scalar operator-() const { return with_d(-a_, -b_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inv(); }

  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && (x.is_rational() || x.d_ == y.d_);
  }
  friend bool operator!=(const Scalar& x, const Scalar& y) { return !(x == y); }

  // total order used only for deterministic output
  int compare(const Scalar& o) const;

  std::string str() const;
  // exact strings for the two parts
  std::string a_str() const { return a_.get_str(); }
  std::string b_str() const { return b_.get_str(); }

 private:
  Scalar with_d(const mpq_class& a, const mpq_class& b) const {
    Scalar s;
    s.a_ = a;
    s.b_ = b;
    s.d_ = d_;
    return s;
  }
  long merged_d(const Scalar& o) const;

  mpq_class a_{0};
  mpq_class b_{0};
  long d_ = 1;
};

inline Scalar inv(const Scalar& x) { return x.inv(); }

}  // namespace annuli
