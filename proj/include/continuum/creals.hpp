#ifndef CONTINUUM_CREALS_HPP
#define CONTINUUM_CREALS_HPP

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>

#include "continuum/rational.hpp"

namespace continuum {

// Optional structural facts about a generator; a declared bound holds for
// every approximant, not just the sampled ones.
struct Facts {
  std::optional<Rational> lower;
  std::optional<Rational> upper;
};

// A constructive real: a total deterministic map index -> Rational obeying
// the regularity modulus |approx(v) - approx(w)| <= 2^-v + 2^-w.
//
// Approximants are memoized append-only behind a mutex, so a generator may
// be shared and evaluated concurrently. The structural key identifies
// extensionally equal constructions (two `const 1` generators compare
// equal; so do two Vesley sequences over the same oracle object).
class RealGen {
public:
  RealGen(std::string key, std::function<Rational(unsigned)> fn, Facts facts);

  Rational approx(unsigned v) const;
  const Facts& facts() const { return node_->facts; }
  const std::string& key() const { return node_->key; }

  bool same_construction(const RealGen& other) const {
    return node_ == other.node_ || node_->key == other.node_->key;
  }

private:
  struct Node {
    std::string key;
    std::function<Rational(unsigned)> fn;
    Facts facts;
    mutable std::map<unsigned, Rational> memo;
    mutable std::mutex mu;
  };
  std::shared_ptr<const Node> node_;
};

RealGen const_rational(const Rational& q);
RealGen add(const RealGen& x, const RealGen& y);
RealGen neg(const RealGen& x);
RealGen sub(const RealGen& x, const RealGen& y);
RealGen abs_val(const RealGen& x);
RealGen scale_nat(unsigned n, const RealGen& x);
RealGen mul(const RealGen& x, const RealGen& y);

// Witness for "gamma is measurably greater than beta from index m on":
// for all v >= m, gamma(v) - beta(v) > 2^-n.
struct MeasurablyCert {
  unsigned m = 0;
  unsigned n = 0;
};

enum class Side { left_smaller, right_smaller };

// Witness for apartness: |beta - gamma| > 2^-k via one directed relation.
struct ApartCert {
  unsigned k = 0;
  Side side = Side::left_smaller;
  MeasurablyCert inner;
};

enum class Outcome { Proved, Disproved, Unknown };

struct OrderVerdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<MeasurablyCert> cert;
  unsigned fuel_spent = 0;
};

struct ApartVerdict {
  Outcome outcome = Outcome::Unknown;
  std::optional<ApartCert> cert;
  unsigned fuel_spent = 0;
};

// Structural witness for a negative relation not(beta <o gamma): constant
// bounds with beta.lower >= gamma.upper.
struct StructuralCert {
  Rational beta_lower;
  Rational gamma_upper;
};

// Fuel-bounded search for beta <o gamma. Proved only via the sufficient
// margin gamma(m) - beta(m) > 2^-n + 2^-(m-2), which regularity extends to
// every v >= m. Scans m = 0..fuel, smallest adequate n <= fuel first.
// Disproved only from structural facts.
OrderVerdict measurably_smaller(const RealGen& beta, const RealGen& gamma, unsigned fuel);

OrderVerdict measurably_greater(const RealGen& beta, const RealGen& gamma, unsigned fuel);

ApartVerdict apart(const RealGen& beta, const RealGen& gamma, unsigned fuel);

// not(beta <o gamma), provable only structurally.
std::optional<StructuralCert> not_measurably_smaller(const RealGen& beta, const RealGen& gamma);

// Smallest n >= 0 with 2^-n < margin; margin must be positive.
unsigned least_margin_exponent(const Rational& margin);

std::string to_string(const OrderVerdict& v);
std::string to_string(const ApartVerdict& v);

}  // namespace continuum

#endif
