#pragma once
// Arithmetic in F[s]/(m) for a monic squarefree m, with dynamic splitting:
// inverting a zero divisor throws Split carrying a factorization of m.
#include <exception>
#include <memory>
#include <string>
#include <vector>

#include "annuli/poly.hpp"

namespace annuli {

template <class F>
struct ModCtx {
  Poly<F> m;  // monic, degree >= 1
};

template <class F>
using CtxPtr = std::shared_ptr<const ModCtx<F>>;

template <class F>
struct Split : std::exception {
  CtxPtr<F> ctx;
  Poly<F> g, h;  // monic, nonconstant, g*h == ctx->m
  const char* what() const noexcept override { return "modulus split"; }
};

template <class F>
class Residue;
template <class F>
Residue<F> inv(const Residue<F>& x);

template <class F>
class Residue {
 public:
  using base_type = F;

  Residue() = default;
  Residue(long n) : rep_(Poly<F>::constant(F(n))) {}
  explicit Residue(const F& c) : rep_(Poly<F>::constant(c)) {}
  Residue(CtxPtr<F> ctx, const Poly<F>& rep) : ctx_(std::move(ctx)), rep_(rep) { reduce(); }

  static Residue gen(const CtxPtr<F>& ctx) { return Residue(ctx, Poly<F>::x()); }

  const CtxPtr<F>& ctx() const { return ctx_; }
  const Poly<F>& rep() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  Residue operator-() const {
    Residue r(*this);
    r.rep_ = -rep_;
    return r;
  }
  friend Residue operator+(const Residue& a, const Residue& b) {
    return Residue(pick(a, b), a.rep_ + b.rep_, true);
  }
  friend Residue operator-(const Residue& a, const Residue& b) {
    return Residue(pick(a, b), a.rep_ - b.rep_, true);
  }
  friend Residue operator*(const Residue& a, const Residue& b) {
    if (a.is_zero() || b.is_zero()) return Residue();
    return Residue(pick(a, b), a.rep_ * b.rep_);
  }
  friend bool operator==(const Residue& a, const Residue& b) { return a.rep_ == b.rep_; }
  friend bool operator!=(const Residue& a, const Residue& b) { return !(a == b); }

  Residue inv() const {
    if (is_zero()) throw Error(Err::DivisionByZero, "inverse of 0 in residue ring");
    if (!ctx_ || rep_.deg() == 0) {
      Residue r(*this);
      r.rep_ = Poly<F>::constant(annuli::inv(rep_.lc()));
      return r;
    }
    ExtGcd<F> e = ext_gcd(rep_, ctx_->m);
    if (e.g.deg() > 0) {
      Split<F> s;
      s.ctx = ctx_;
      s.g = e.g;
      s.h = exact_div(ctx_->m, e.g);
      throw s;
    }
    return Residue(ctx_, e.s);
  }

  std::string str() const { return rep_.is_zero() ? "0" : rep_.str("s"); }

 private:
  Residue(CtxPtr<F> ctx, Poly<F> rep, bool /*already reduced*/) : ctx_(std::move(ctx)), rep_(std::move(rep)) {}
  static CtxPtr<F> pick(const Residue& a, const Residue& b) {
    if (!a.ctx_) return b.ctx_;
    if (b.ctx_ && b.ctx_ != a.ctx_) throw Error(Err::Internal, "mixing residues from different moduli");
    return a.ctx_;
  }
  void reduce() {
    if (ctx_) rep_ = rem_monic(rep_, ctx_->m);
  }

  CtxPtr<F> ctx_;
  Poly<F> rep_;
};

template <class F>
Residue<F> inv(const Residue<F>& x) {
  return x.inv();
}

template <class F>
CtxPtr<F> make_ctx(const Poly<F>& m) {
  auto c = std::make_shared<ModCtx<F>>();
  c->m = monic(m);
  return c;
}

// True when x vanishes; throws Split when x is a zero divisor.
template <class F>
bool zero_test(const F& x) {
  if (x.is_zero()) return true;
  (void)inv(x);
  return false;
}

template <class F, class T>
struct Branch {
  Poly<F> modulus;
  T value;
};

// Run fn on F[s]/(m), re-running on the factors whenever the modulus splits.
template <class F, class Fn>
auto on_branches(const Poly<F>& m, Fn&& fn) {
  using T = decltype(fn(std::declval<CtxPtr<F>>()));
  std::vector<Branch<F, T>> out;
  std::vector<Poly<F>> todo{monic(m)};
  while (!todo.empty()) {
    Poly<F> cur = std::move(todo.back());
    todo.pop_back();
    CtxPtr<F> ctx = make_ctx(cur);
    try {
      out.push_back({cur, fn(ctx)});
    } catch (const Split<F>& s) {
      if (s.ctx != ctx) throw;
      todo.push_back(s.h);
      todo.push_back(s.g);
    }
  }
  return out;
}

// Polynomial over the residue ring, lifted coefficientwise.
template <class F>
Poly<Residue<F>> lift(const CtxPtr<F>& ctx, const Poly<F>& p) {
  std::vector<Residue<F>> v;
  for (const auto& c : p.coeffs()) v.push_back(Residue<F>(ctx, Poly<F>::constant(c)));
  return Poly<Residue<F>>(std::move(v));
}

}  // namespace annuli
