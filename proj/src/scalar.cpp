#include "annuli/scalar.hpp"

#include <cstdlib>

namespace annuli {

bool is_squarefree(long d) {
  if (d == 0) return false;
  unsigned long n = std::labs(d);
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % (p * p) == 0) return false;
  return true;
}

Scalar::Scalar(const mpq_class& a, const mpq_class& b, long d) : a_(a), b_(b), d_(d) {
  a_.canonicalize();
  b_.canonicalize();
  if (!is_squarefree(d)) throw Error(Err::FieldMismatch, "d=" + std::to_string(d) + " is not squarefree");
  if (d == 1) {
    a_ += b_;
    b_ = 0;
  }
}

long Scalar::merged_d(const Scalar& o) const {
  if (is_rational()) return o.is_rational() ? (d_ != 1 ? d_ : o.d_) : o.d_;
  if (o.is_rational() || o.d_ == d_) return d_;
  throw Error(Err::FieldMismatch, "sqrt(" + std::to_string(d_) + ") vs sqrt(" + std::to_string(o.d_) + ")");
}

Scalar& Scalar::operator+=(const Scalar& o) {
  d_ = merged_d(o);
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  d_ = merged_d(o);
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  long d = merged_d(o);
  if (is_rational() && o.is_rational()) {
    a_ *= o.a_;
  } else {
    mpq_class na = a_ * o.a_ + mpq_class(d) * b_ * o.b_;
    mpq_class nb = a_ * o.b_ + b_ * o.a_;
    a_ = na;
    b_ = nb;
  }
  d_ = d;
  return *this;
}

Scalar Scalar::inv() const {
  if (is_zero()) throw Error(Err::DivisionByZero, "inverse of 0");
  if (is_rational()) return with_d(1 / a_, 0);
  mpq_class n = norm();
  return with_d(a_ / n, -b_ / n);
}

int Scalar::compare(const Scalar& o) const {
  if (int c = cmp(a_, o.a_)) return c;
  return cmp(b_, o.b_);
}

std::string Scalar::str() const {
  if (is_rational()) return a_.get_str();
  std::string s;
  if (sgn(a_) != 0) s = a_.get_str();
  std::string rt = "sqrt(" + std::to_string(d_) + ")";
  if (b_ == 1) {
    s += (s.empty() ? "" : "+") + rt;
  } else if (b_ == -1) {
    s += "-" + rt;
  } else {
    if (!s.empty() && sgn(b_) > 0) s += "+";
    s += b_.get_str() + "*" + rt;
  }
  return s;
}

}  // namespace annuli
