#include "annuli/laurent.hpp"

#include <numeric>
#include <sstream>

namespace annuli {

int gcd_int(long a, long b) { return int(std::gcd(a < 0 ? -a : a, b < 0 ? -b : b)); }

Laurent::Laurent(const std::map<int, Scalar>& m) {
  for (const auto& [k, c] : m) set(k, c);
}

Laurent Laurent::from_poly(const QPoly& p, int shift) {
  Laurent r;
  for (int i = 0; i <= p.deg(); ++i) r.set(i + shift, p.coeffs()[i]);
  return r;
}

int Laurent::top() const {
  if (m_.empty()) throw Error(Err::Internal, "top of zero Laurent polynomial");
  return m_.rbegin()->first;
}

int Laurent::bot() const {
  if (m_.empty()) throw Error(Err::Internal, "bot of zero Laurent polynomial");
  return m_.begin()->first;
}

Scalar Laurent::coef(int k) const {
  auto it = m_.find(k);
  return it == m_.end() ? Scalar() : it->second;
}

void Laurent::set(int k, const Scalar& c) {
  if (c.is_zero())
    m_.erase(k);
  else
    m_[k] = c;
}

long Laurent::field() const {
  for (const auto& [k, c] : m_)
    if (!c.is_rational()) return c.d();
  return 1;
}

Laurent Laurent::operator-() const {
  Laurent r(*this);
  for (auto& [k, c] : r.m_) c = -c;
  return r;
}

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [k, c] : o.m_) set(k, coef(k) + c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [k, c] : o.m_) set(k, coef(k) - c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  std::map<int, Scalar> acc;
  for (const auto& [i, x] : a.m_)
    for (const auto& [j, y] : b.m_) {
      auto it = acc.find(i + j);
      if (it == acc.end())
        acc.emplace(i + j, x * y);
      else
        it->second += x * y;
    }
  return Laurent(acc);
}

bool operator==(const Laurent& a, const Laurent& b) {
  if (a.m_.size() != b.m_.size()) return false;
  auto i = a.m_.begin();
  auto j = b.m_.begin();
  for (; i != a.m_.end(); ++i, ++j)
    if (i->first != j->first || i->second != j->second) return false;
  return true;
}

Laurent Laurent::scaled(const Scalar& s) const {
  Laurent r;
  for (const auto& [k, c] : m_) r.set(k, c * s);
  return r;
}

Laurent Laurent::shifted(int s) const {
  Laurent r;
  for (const auto& [k, c] : m_) r.m_.emplace(k + s, c);
  return r;
}

Laurent Laurent::derivative() const {
  Laurent r;
  for (const auto& [k, c] : m_)
    if (k != 0) r.set(k - 1, c * Scalar(long(k)));
  return r;
}

Laurent Laurent::compose_inv_t() const {
  Laurent r;
  for (const auto& [k, c] : m_) r.m_.emplace(-k, c);
  return r;
}

Laurent Laurent::subs_scale(const Scalar& lambda) const {
  Laurent r;
  for (const auto& [k, c] : m_) {
    Scalar p = k >= 0 ? ring_pow(lambda, k) : ring_pow(lambda.inv(), -k);
    r.set(k, c * p);
  }
  return r;
}

Scalar Laurent::eval(const Scalar& x) const {
  if (m_.empty()) return Scalar();
  if (x.is_zero()) {
    if (bot() < 0) throw Error(Err::EvalAtPole, "evaluation at 0 with negative exponents");
    return coef(0);
  }
  Scalar acc;
  for (const auto& [k, c] : m_) acc += c * (k >= 0 ? ring_pow(x, k) : ring_pow(x.inv(), -k));
  return acc;
}

QPoly Laurent::numerator() const {
  if (m_.empty()) return QPoly();
  int b = bot();
  std::vector<Scalar> v(top() - b + 1);
  for (const auto& [k, c] : m_) v[k - b] = c;
  return QPoly(std::move(v));
}

std::string Laurent::str(const std::string& var) const {
  if (m_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = m_.rbegin(); it != m_.rend(); ++it) {
    const auto& [k, c] = *it;
    std::string cs = c.str();
    bool neg = c.is_rational() && sgn(c.a()) < 0;
    if (!first) os << (neg ? " - " : " + ");
    else if (neg) os << "-";
    first = false;
    if (neg) cs = cs.substr(1);
    if (!c.is_rational()) cs = "(" + cs + ")";
    bool unit = (cs == "1");
    if (k == 0) {
      os << cs;
      continue;
    }
    if (!unit) os << cs << "*";
    os << var;
    if (k != 1) os << "^" << (k < 0 ? "(" + std::to_string(k) + ")" : std::to_string(k));
  }
  return os.str();
}

Laurent pow(const Laurent& a, int e) {
  if (e < 0) throw Error(Err::Internal, "negative power of Laurent polynomial");
  Laurent r(1), b = a;
  while (e > 0) {
    if (e & 1) r = r * b;
    e >>= 1;
    if (e) b = b * b;
  }
  return r;
}

Laurent exact_div(const Laurent& f, const Laurent& g) {
  if (g.is_zero()) throw Error(Err::DivisionByZero, "Laurent division by zero");
  if (f.is_zero()) return Laurent();
  QPoly q;
  try {
    q = exact_div(f.numerator(), g.numerator());
  } catch (const Error& e) {
    if (e.code() == Err::NotDivisible) throw Error(Err::NotDivisible, f.str() + " by " + g.str());
    throw;
  }
  return Laurent::from_poly(q, f.bot() - g.bot());
}

}  // namespace annuli
