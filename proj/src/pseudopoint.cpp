#include "continuum/pseudopoint.hpp"

#include <stdexcept>

namespace continuum {

bool CoordIndex::is_zero() const {
  for (const auto& c : coeffs)
    if (c != 0) return false;
  return true;
}

CoordIndex CoordIndex::operator+(const CoordIndex& o) const {
  if (coeffs.size() != o.coeffs.size()) throw std::invalid_argument("dimension mismatch");
  CoordIndex r;
  r.coeffs.reserve(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) r.coeffs.push_back(coeffs[i] + o.coeffs[i]);
  return r;
}

std::string CoordIndex::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (i) s += ",";
    s += coeffs[i].str();
  }
  return s + "]";
}

Int TwistConfig::bilinear(const CoordIndex& a, const CoordIndex& b) const {
  Int sum = 0;
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = i + 1; j < b.coeffs.size(); ++j) sum += a.coeffs[i] * b.coeffs[j];
  return sum;
}

PseudoPoint::PseudoPoint(std::size_t dim, std::map<CoordIndex, Rational> terms)
    : dim_(dim), terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->first.dim() != dim_) throw std::invalid_argument("dimension mismatch");
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
}

std::optional<CoordIndex> PseudoPoint::min_index() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.begin()->first;
}

std::string PseudoPoint::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [idx, c] : terms_) {
    if (!s.empty()) s += " + ";
    if (!(c == Rational(1))) s += c.str() + "*";
    s += "e" + idx.str();
  }
  return s;
}

PseudoPoint unit(const CoordIndex& c) {
  return PseudoPoint(c.dim(), {{c, Rational(1)}});
}

PseudoPoint embed(std::size_t dim, const Rational& q) {
  if (q.is_zero()) return PseudoPoint(dim);
  return PseudoPoint(dim, {{CoordIndex::zero(dim), q}});
}

PseudoPoint add(const PseudoPoint& x, const PseudoPoint& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
  auto terms = x.terms();
  for (const auto& [idx, c] : y.terms()) {
    auto [it, inserted] = terms.emplace(idx, c);
    if (!inserted) it->second += c;
  }
  return PseudoPoint(x.dim(), std::move(terms));
}

PseudoPoint neg(const PseudoPoint& x) {
  std::map<CoordIndex, Rational> terms;
  for (const auto& [idx, c] : x.terms()) terms.emplace(idx, -c);
  return PseudoPoint(x.dim(), std::move(terms));
}

PseudoPoint sub(const PseudoPoint& x, const PseudoPoint& y) { return add(x, neg(y)); }

PseudoPoint scale(const Rational& q, const PseudoPoint& x) {
  std::map<CoordIndex, Rational> terms;
  for (const auto& [idx, c] : x.terms()) terms.emplace(idx, q * c);
  return PseudoPoint(x.dim(), std::move(terms));
}

PseudoPoint mul(const PseudoPoint& x, const PseudoPoint& y, const TwistConfig& twist) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
  std::map<CoordIndex, Rational> terms;
  for (const auto& [a, ca] : x.terms()) {
    for (const auto& [b, cb] : y.terms()) {
      Rational contrib = twist.factor(a, b) * ca * cb;
      auto [it, inserted] = terms.emplace(a + b, contrib);
      if (!inserted) it->second += contrib;
    }
  }
  return PseudoPoint(x.dim(), std::move(terms));
}

PseudoPoint commutator(const PseudoPoint& x, const PseudoPoint& y, const TwistConfig& twist) {
  return sub(mul(x, y, twist), mul(y, x, twist));
}

Ordering compare(const PseudoPoint& x, const PseudoPoint& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("dimension mismatch");
  auto ix = x.terms().begin();
  auto iy = y.terms().begin();
  while (ix != x.terms().end() || iy != y.terms().end()) {
    if (iy == y.terms().end() || (ix != x.terms().end() && ix->first < iy->first)) {
      // x has a coefficient where y has 0
      return ix->second.sign() < 0 ? Ordering::LT : Ordering::GT;
    }
    if (ix == x.terms().end() || iy->first < ix->first) {
      return iy->second.sign() < 0 ? Ordering::GT : Ordering::LT;
    }
    if (!(ix->second == iy->second))
      return ix->second < iy->second ? Ordering::LT : Ordering::GT;
    ++ix;
    ++iy;
  }
  return Ordering::EQ;
}

std::optional<NonArchWitness> non_archimedean_witness(const PseudoPoint& x, const PseudoPoint& y) {
  if (compare(x, embed(x.dim(), Rational(0))) != Ordering::GT ||
      compare(y, embed(y.dim(), Rational(0))) != Ordering::GT)
    throw std::invalid_argument("witness requires positive arguments");
  const CoordIndex xm = *x.min_index();
  const CoordIndex ym = *y.min_index();
  if (ym < xm) return NonArchWitness{xm, ym};
  return std::nullopt;
}

bool is_infinitely_large(const PseudoPoint& x) {
  if (x.is_zero()) throw std::invalid_argument("sign undefined for zero");
  const CoordIndex m = *x.min_index();
  return m < CoordIndex::zero(x.dim()) && x.terms().begin()->second.sign() > 0;
}

bool is_infinitesimal(const PseudoPoint& x) {
  if (x.is_zero()) throw std::invalid_argument("sign undefined for zero");
  return CoordIndex::zero(x.dim()) < *x.min_index();
}

}  // namespace continuum
