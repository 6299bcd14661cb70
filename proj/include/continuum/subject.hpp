#ifndef CONTINUUM_SUBJECT_HPP
#define CONTINUUM_SUBJECT_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "continuum/creals.hpp"

namespace continuum {

// What a staged oracle can come to know. P-oracles use the first pair,
// all-zero oracles the second.
enum class VerdictKind { ProvedP, ProvedNotP, ProvedAllZero, FoundNonzero };

struct OracleVerdict {
  VerdictKind kind;
  unsigned nonzero_index = 0;  // meaningful for FoundNonzero only
};

// Staged stand-in for the Creating Subject's knowledge about one
// proposition: monotone, at most one Undecided -> Decided transition,
// deterministic per stage.
class ProblemOracle {
public:
  virtual ~ProblemOracle() = default;
  // Empty while undecided at stage s; the verdict from the first decision
  // stage onward.
  virtual std::optional<OracleVerdict> status(unsigned stage) const = 0;
  // First stage at which status() is decided, if within `horizon`.
  std::optional<unsigned> first_decision(unsigned horizon) const;
  virtual std::string key() const = 0;
  virtual bool is_all_zero_oracle() const = 0;
};

using OraclePtr = std::shared_ptr<const ProblemOracle>;

// Deterministic test double: decided with a fixed verdict from decide_at on,
// or never.
OraclePtr synthetic_oracle(std::optional<unsigned> decide_at, OracleVerdict verdict);
OraclePtr undecided_oracle();

// Decides (FoundNonzero) iff some even e with 4 <= e <= 2s+4 is not a sum of
// two primes.
OraclePtr goldbach_oracle();

// Parses "synthetic:decide=<s>:verdict=<provedP|provedNotP|allzero|nonzero@k>",
// "goldbach", or "undecided"; throws std::invalid_argument otherwise.
OraclePtr parse_oracle_spec(const std::string& spec);

// Brouwer's sequence for a proposition P: 0 while undecided, (1/2)^s from the
// first decision stage s on, either verdict alike. Carries lower bound 0.
RealGen brouwer_alpha(const OraclePtr& oracle);

// Vesley's sequence: 0 while undecided, +(1/2)^s once all-zero is proved,
// -(1/2)^s once a nonzero entry is found. No sign fact.
RealGen vesley_x(const OraclePtr& oracle);

// Kripke's Schema witness: entries(n) = 1 iff the oracle has decided by n.
class BinarySeq {
public:
  explicit BinarySeq(OraclePtr oracle) : oracle_(std::move(oracle)) {}
  int entry(unsigned n) const { return oracle_->status(n) ? 1 : 0; }

private:
  OraclePtr oracle_;
};

BinarySeq kripke_witness(const OraclePtr& oracle);

enum class MembershipRoute { Reflexive, Structural, Asymmetry, None };

struct MembershipVerdict {
  Outcome outcome = Outcome::Unknown;
  MembershipRoute route = MembershipRoute::None;
  std::optional<MeasurablyCert> cert;  // for the Asymmetry route
  unsigned fuel_spent = 0;
};

// Stage-relative membership of x in M(alpha), checked against the canonical
// witness y = vesley_x(oracle). Proved refutes |x| o> |y| (structurally, by
// reflexivity, or via |x| <o |y|); Disproved only from structural facts.
MembershipVerdict m_alpha_contains(const RealGen& x, const OraclePtr& oracle, unsigned fuel);

struct ArchimedeanWitness {
  unsigned n = 0;
  MeasurablyCert cert;
};

// Least n in 1..fuel with n*x measurably greater than 1, if any.
std::optional<ArchimedeanWitness> archimedean_probe(const RealGen& x, unsigned fuel);

struct SubringEntry {
  std::string label;
  MembershipVerdict verdict;
};

struct SubringReport {
  std::vector<SubringEntry> entries;
  unsigned disproved_count() const;
};

// Builds sample M(alpha) members (canonical witness, its negation, rational
// multiples, zero), closes under pairwise sum/difference/product, and
// re-checks membership of each. The subring claim demands zero Disproved
// verdicts.
SubringReport subring_probe(const OraclePtr& oracle, unsigned sample_count, unsigned fuel);

std::string to_string(const MembershipVerdict& v);

}  // namespace continuum

#endif
