#include "continuum/creals.hpp"

#include <stdexcept>
#include <utility>

namespace continuum {

RealGen::RealGen(std::string key, std::function<Rational(unsigned)> fn, Facts facts) {
  auto node = std::make_shared<Node>();
  node->key = std::move(key);
  node->fn = std::move(fn);
  node->facts = std::move(facts);
  node_ = std::move(node);
}

Rational RealGen::approx(unsigned v) const {
  {
    std::lock_guard<std::mutex> lock(node_->mu);
    auto it = node_->memo.find(v);
    if (it != node_->memo.end()) return it->second;
  }
  Rational r = node_->fn(v);
  std::lock_guard<std::mutex> lock(node_->mu);
  auto [it, inserted] = node_->memo.emplace(v, std::move(r));
  return it->second;
}

RealGen const_rational(const Rational& q) {
  Facts f;
  f.lower = q;
  f.upper = q;
  return RealGen("const(" + q.str() + ")", [q](unsigned) { return q; }, f);
}

RealGen add(const RealGen& x, const RealGen& y) {
  Facts f;
  if (x.facts().lower && y.facts().lower) f.lower = *x.facts().lower + *y.facts().lower;
  if (x.facts().upper && y.facts().upper) f.upper = *x.facts().upper + *y.facts().upper;
  return RealGen("add(" + x.key() + "," + y.key() + ")",
                 [x, y](unsigned v) { return x.approx(v + 1) + y.approx(v + 1); }, f);
}

RealGen neg(const RealGen& x) {
  Facts f;
  if (x.facts().upper) f.lower = -*x.facts().upper;
  if (x.facts().lower) f.upper = -*x.facts().lower;
  return RealGen("neg(" + x.key() + ")", [x](unsigned v) { return -x.approx(v); }, f);
}

RealGen sub(const RealGen& x, const RealGen& y) { return add(x, neg(y)); }

RealGen abs_val(const RealGen& x) {
  Facts f;
  const auto& xf = x.facts();
  if (xf.lower && xf.lower->sign() >= 0)
    f.lower = *xf.lower;
  else if (xf.upper && xf.upper->sign() <= 0)
    f.lower = -*xf.upper;
  else
    f.lower = Rational(0);
  if (xf.lower && xf.upper) {
    Rational a = xf.lower->abs();
    Rational b = xf.upper->abs();
    f.upper = a > b ? a : b;
  }
  return RealGen("abs(" + x.key() + ")", [x](unsigned v) { return x.approx(v).abs(); }, f);
}

namespace {

// Smallest p >= 0 with 2^p >= n.
unsigned ceil_log2(unsigned long n) {
  unsigned p = 0;
  unsigned long v = 1;
  while (v < n) {
    v <<= 1;
    ++p;
  }
  return p;
}

// Smallest p >= 0 with 2^p >= b, for rational b > 0.
unsigned ceil_log2(const Rational& b) {
  unsigned p = 0;
  while (Rational::pow2(static_cast<long>(p)) < b) ++p;
  return p;
}

// |approx| bound: declared facts when present, else the regularity fallback
// |approx(0)| + 2.
Rational magnitude_bound(const RealGen& x) {
  const auto& f = x.facts();
  if (f.lower && f.upper) {
    Rational a = f.lower->abs();
    Rational b = f.upper->abs();
    return a > b ? a : b;
  }
  return x.approx(0).abs() + Rational(2);
}

}  // namespace

RealGen scale_nat(unsigned n, const RealGen& x) {
  const unsigned pad = ceil_log2(std::max<unsigned long>(n, 1));
  Facts f;
  const Rational qn{static_cast<long long>(n)};
  if (x.facts().lower) f.lower = *x.facts().lower * qn;
  if (x.facts().upper) f.upper = *x.facts().upper * qn;
  return RealGen("scale(" + std::to_string(n) + "," + x.key() + ")",
                 [n, pad, x](unsigned v) {
                   return Rational(static_cast<long long>(n)) * x.approx(v + pad);
                 },
                 f);
}

RealGen mul(const RealGen& x, const RealGen& y) {
  Rational bx = magnitude_bound(x);
  Rational by = magnitude_bound(y);
  const Rational big = bx > by ? bx : by;
  // Shift p+1 so that 2*bound <= 2^(p+1); see the module notes on padding.
  const unsigned shift = ceil_log2(Rational(1) + big) + 1;
  Facts f;
  const auto& xf = x.facts();
  const auto& yf = y.facts();
  if (xf.lower && xf.upper && yf.lower && yf.upper) {
    const Rational c[4] = {*xf.lower * *yf.lower, *xf.lower * *yf.upper,
                           *xf.upper * *yf.lower, *xf.upper * *yf.upper};
    Rational lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
      if (c[i] < lo) lo = c[i];
      if (c[i] > hi) hi = c[i];
    }
    f.lower = lo;
    f.upper = hi;
  }
  return RealGen("mul(" + x.key() + "," + y.key() + ")",
                 [x, y, shift](unsigned v) {
                   return x.approx(v + shift) * y.approx(v + shift);
                 },
                 f);
}

unsigned least_margin_exponent(const Rational& margin) {
  if (margin.sign() <= 0) throw std::domain_error("margin must be positive");
  unsigned n = 0;
  while (Rational::pow2(-static_cast<long>(n)) >= margin) ++n;
  return n;
}

OrderVerdict measurably_smaller(const RealGen& beta, const RealGen& gamma, unsigned fuel) {
  // Structural refutation: gamma can never exceed beta.
  if (gamma.facts().upper && beta.facts().lower && *gamma.facts().upper <= *beta.facts().lower)
    return {Outcome::Disproved, std::nullopt, fuel};
  for (unsigned m = 0; m <= fuel; ++m) {
    // gamma(m) - beta(m) > 2^-n + 2^-(m-2) for the least adequate n.
    const Rational d = gamma.approx(m) - beta.approx(m) - Rational::pow2(2 - static_cast<long>(m));
    if (d.sign() <= 0) continue;
    const unsigned n = least_margin_exponent(d);
    if (n <= fuel) return {Outcome::Proved, MeasurablyCert{m, n}, fuel};
  }
  return {Outcome::Unknown, std::nullopt, fuel};
}

OrderVerdict measurably_greater(const RealGen& beta, const RealGen& gamma, unsigned fuel) {
  return measurably_smaller(gamma, beta, fuel);
}

ApartVerdict apart(const RealGen& beta, const RealGen& gamma, unsigned fuel) {
  if (beta.same_construction(gamma)) return {Outcome::Disproved, std::nullopt, fuel};
  OrderVerdict left = measurably_smaller(beta, gamma, fuel);
  if (left.outcome == Outcome::Proved)
    return {Outcome::Proved, ApartCert{left.cert->n, Side::left_smaller, *left.cert}, fuel};
  OrderVerdict right = measurably_greater(beta, gamma, fuel);
  if (right.outcome == Outcome::Proved)
    return {Outcome::Proved, ApartCert{right.cert->n, Side::right_smaller, *right.cert}, fuel};
  if (left.outcome == Outcome::Disproved && right.outcome == Outcome::Disproved)
    return {Outcome::Disproved, std::nullopt, fuel};
  return {Outcome::Unknown, std::nullopt, fuel};
}

std::optional<StructuralCert> not_measurably_smaller(const RealGen& beta, const RealGen& gamma) {
  if (beta.facts().lower && gamma.facts().upper && *beta.facts().lower >= *gamma.facts().upper)
    return StructuralCert{*beta.facts().lower, *gamma.facts().upper};
  return std::nullopt;
}

std::string to_string(const OrderVerdict& v) {
  switch (v.outcome) {
    case Outcome::Proved:
      return "PROVED m=" + std::to_string(v.cert->m) + " n=" + std::to_string(v.cert->n);
    case Outcome::Disproved:
      return "DISPROVED";
    default:
      return "UNKNOWN fuel=" + std::to_string(v.fuel_spent);
  }
}

std::string to_string(const ApartVerdict& v) {
  switch (v.outcome) {
    case Outcome::Proved:
      return "PROVED k=" + std::to_string(v.cert->k) +
             " side=" + (v.cert->side == Side::left_smaller ? "left" : "right") +
             " m=" + std::to_string(v.cert->inner.m) + " n=" + std::to_string(v.cert->inner.n);
    case Outcome::Disproved:
      return "DISPROVED";
    default:
      return "UNKNOWN fuel=" + std::to_string(v.fuel_spent);
  }
}

}  // namespace continuum
