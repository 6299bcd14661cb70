#ifndef CONTINUUM_PSEUDOPOINT_HPP
#define CONTINUUM_PSEUDOPOINT_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "continuum/rational.hpp"

namespace continuum {

// Coordinate index a_1..a_n, totally ordered lexicographically; smaller
// index means more significant position.
struct CoordIndex {
  std::vector<Int> coeffs;

  std::size_t dim() const { return coeffs.size(); }
  static CoordIndex zero(std::size_t dim) { return CoordIndex{std::vector<Int>(dim, Int(0))}; }
  bool is_zero() const;
  CoordIndex operator+(const CoordIndex& o) const;

  friend bool operator==(const CoordIndex& a, const CoordIndex& b) = default;
  friend bool operator<(const CoordIndex& a, const CoordIndex& b) {
    return a.coeffs < b.coeffs;
  }

  std::string str() const;  // "[a1,...,an]"
};

// Positive bicharacter twist f(a,b) = p^(sum_{i<j} a_i b_j) attached to
// products of basis units; p = 1 degenerates to the commutative ring.
struct TwistConfig {
  Rational p = Rational(2);

  Int bilinear(const CoordIndex& a, const CoordIndex& b) const;
  Rational factor(const CoordIndex& a, const CoordIndex& b) const {
    return Rational::pow(p, bilinear(a, b));
  }
};

enum class Ordering { LT, EQ, GT };

// Finitely supported map CoordIndex -> Rational; zero coefficients are never
// stored. Immutable value type.
class PseudoPoint {
public:
  explicit PseudoPoint(std::size_t dim) : dim_(dim) {}
  PseudoPoint(std::size_t dim, std::map<CoordIndex, Rational> terms);

  std::size_t dim() const { return dim_; }
  const std::map<CoordIndex, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  // Lexicographically smallest support index; empty for zero.
  std::optional<CoordIndex> min_index() const;

  std::string str() const;

private:
  std::size_t dim_;
  std::map<CoordIndex, Rational> terms_;
};

PseudoPoint unit(const CoordIndex& c);
PseudoPoint embed(std::size_t dim, const Rational& q);
PseudoPoint add(const PseudoPoint& x, const PseudoPoint& y);
PseudoPoint neg(const PseudoPoint& x);
PseudoPoint sub(const PseudoPoint& x, const PseudoPoint& y);
PseudoPoint scale(const Rational& q, const PseudoPoint& x);
PseudoPoint mul(const PseudoPoint& x, const PseudoPoint& y, const TwistConfig& twist = {});
PseudoPoint commutator(const PseudoPoint& x, const PseudoPoint& y, const TwistConfig& twist = {});

// Total decidable order: EQ on identical supports, otherwise decided by the
// coefficient at the smallest index where the two differ (absent = 0).
Ordering compare(const PseudoPoint& x, const PseudoPoint& y);

// Asserts forall n: n*x < y. Valid exactly when y's smallest support index
// is strictly below x's, since scaling never moves support.
struct NonArchWitness {
  CoordIndex x_min;
  CoordIndex y_min;
};

// Requires x > 0 and y > 0; empty when the pair is Archimedean.
std::optional<NonArchWitness> non_archimedean_witness(const PseudoPoint& x, const PseudoPoint& y);

// x exceeds every embedded rational: leading index below the zero tuple with
// a positive coefficient there.
bool is_infinitely_large(const PseudoPoint& x);
// |x| below every positive embedded rational: leading index above zero.
bool is_infinitesimal(const PseudoPoint& x);

}  // namespace continuum

#endif
