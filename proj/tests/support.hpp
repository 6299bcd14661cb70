#ifndef TESTS_SUPPORT_HPP
#define TESTS_SUPPORT_HPP

#include <random>
#include <string>
#include <vector>

#include "continuum/creals.hpp"
#include "continuum/pseudopoint.hpp"

namespace testsupport {

using continuum::CoordIndex;
using continuum::MeasurablyCert;
using continuum::PseudoPoint;
using continuum::Rational;
using continuum::RealGen;

// Direct re-verification of a measurable-order certificate, independent of
// the search that produced it: the raw inequality on a 64-index window plus
// the regularity margin argument that extends it to every v >= m.
inline bool audit_cert(const RealGen& beta, const RealGen& gamma, const MeasurablyCert& c,
                       unsigned window = 64) {
  const Rational bound = Rational::pow2(-static_cast<long>(c.n));
  for (unsigned v = c.m; v <= c.m + window; ++v)
    if (!(gamma.approx(v) - beta.approx(v) > bound)) return false;
  // margin re-check: gamma(m) - beta(m) > 2^-n + 2^-(m-2)
  return gamma.approx(c.m) - beta.approx(c.m) >
         bound + Rational::pow2(2 - static_cast<long>(c.m));
}

inline bool regularity_holds(const RealGen& x, unsigned max_index) {
  for (unsigned v = 0; v <= max_index; ++v)
    for (unsigned w = 0; w <= max_index; ++w) {
      const Rational diff = (x.approx(v) - x.approx(w)).abs();
      if (diff > Rational::pow2(-static_cast<long>(v)) + Rational::pow2(-static_cast<long>(w)))
        return false;
    }
  return true;
}

inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-20, 20);
  std::uniform_int_distribution<int> den(1, 12);
  return Rational(num(rng), den(rng));
}

// Random generator built from constants via add/neg/mul/scale_nat.
inline RealGen random_generator(std::mt19937& rng, unsigned depth = 3) {
  using namespace continuum;
  if (depth == 0) return const_rational(random_rational(rng));
  std::uniform_int_distribution<int> pick(0, 4);
  switch (pick(rng)) {
    case 0: return const_rational(random_rational(rng));
    case 1: return add(random_generator(rng, depth - 1), random_generator(rng, depth - 1));
    case 2: return neg(random_generator(rng, depth - 1));
    case 3: {
      std::uniform_int_distribution<unsigned> n(0, 9);
      return scale_nat(n(rng), random_generator(rng, depth - 1));
    }
    default: return mul(random_generator(rng, depth - 1), random_generator(rng, depth - 1));
  }
}

inline PseudoPoint random_point(std::mt19937& rng, std::size_t dim, unsigned max_terms = 4) {
  std::uniform_int_distribution<unsigned> nterms(0, max_terms);
  std::uniform_int_distribution<int> coord(-3, 3);
  PseudoPoint p(dim);
  const unsigned k = nterms(rng);
  for (unsigned t = 0; t < k; ++t) {
    CoordIndex idx;
    for (std::size_t i = 0; i < dim; ++i) idx.coeffs.push_back(continuum::Int(coord(rng)));
    p = continuum::add(p, continuum::scale(random_rational(rng), continuum::unit(idx)));
  }
  return p;
}

inline CoordIndex make_index(std::vector<long> v) {
  CoordIndex idx;
  for (long c : v) idx.coeffs.push_back(continuum::Int(c));
  return idx;
}

}  // namespace testsupport

#endif
