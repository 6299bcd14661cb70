#ifndef CONTINUUM_PASTAR_HPP
#define CONTINUUM_PASTAR_HPP

#include <iosfwd>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "continuum/rational.hpp"

namespace continuum::pastar {

// Terms of PA plus the uninterpreted constant omega. Numerals are iterated
// successors of zero.
struct Term {
  enum class Kind { Zero, Succ, Plus, Times, Var, Omega };
  Kind kind = Kind::Zero;
  std::vector<Term> kids;
  std::string var;

  friend bool operator==(const Term& a, const Term& b) = default;
};

Term zero();
Term succ(Term t);
Term plus(Term a, Term b);
Term times(Term a, Term b);
Term var(std::string name);
Term omega();
Term numeral(unsigned long k);
// The numeral value of a pure Succ^k(Zero) term, if it is one.
std::optional<unsigned long> numeral_value(const Term& t);

// Formulas over =, <, not, ->, forall; other connectives are definable.
struct Formula {
  enum class Kind { Eq, Lt, Not, Imp, Forall };
  Kind kind = Kind::Eq;
  std::vector<Term> terms;     // Eq/Lt operands
  std::vector<Formula> kids;   // Not/Imp/Forall bodies
  std::string var;             // Forall binder

  friend bool operator==(const Formula& a, const Formula& b) = default;
};

Formula eq(Term a, Term b);
Formula lt(Term a, Term b);
Formula lnot(Formula f);
Formula imp(Formula a, Formula b);
Formula forall(std::string v, Formula body);

bool contains_omega(const Term& t);
bool contains_omega(const Formula& f);
bool contains_var(const Term& t);
bool contains_var(const Formula& f);

Term subst_omega(const Term& t, const Term& replacement);
Formula subst_omega(const Formula& f, const Term& replacement);
// Capture-naive substitution of a term for a free variable; stops at a
// binder of the same name.
Term subst_var(const Term& t, const std::string& name, const Term& replacement);
Formula subst_var(const Formula& f, const std::string& name, const Term& replacement);

struct Justification {
  enum class Kind { PAAxiom, LogicAxiom, OmegaGt, NumeralFact, MP, Gen };
  Kind kind = Kind::NumeralFact;
  std::string scheme;     // PAAxiom / LogicAxiom id
  unsigned long n = 0;    // OmegaGt instance
  unsigned long i = 0;    // MP premise / Gen premise
  unsigned long j = 0;    // MP implication
  std::string var;        // Gen variable
};

struct ProofLine {
  unsigned long index = 0;
  Formula formula;
  Justification just;
};

struct Proof {
  std::vector<ProofLine> lines;
  const Formula& conclusion() const { return lines.back().formula; }
};

struct CheckError {
  unsigned long line_index = 0;
  std::string reason;
};

// Empty result means the proof checks.
std::optional<CheckError> check(const Proof& proof);

struct OmegaReport {
  std::set<unsigned long> instances;
  unsigned long m = 1;  // max(instances)+1, or 1 for an omega-free proof
};

// Requires a checked proof; throws std::invalid_argument if check fails.
std::set<unsigned long> collect_omega_instances(const Proof& proof);
OmegaReport omega_report(const Proof& proof);

// Replaces omega by the numeral m everywhere and re-justifies each former
// OmegaGt(n) line as the numeral fact m > n. The result re-checks and is
// omega-free; an omega-free conclusion is preserved verbatim.
Proof eliminate_omega(const Proof& proof);

// Text format: one proof line per file line,
//   <index> | <formula s-expression> | <justification>
// Blank lines and lines starting with '#' are skipped.
struct FileParseError {
  unsigned long file_line = 0;
  std::string reason;
};

struct ParseResult {
  std::optional<Proof> proof;
  std::optional<FileParseError> error;
};

ParseResult parse_proof_text(const std::string& text);
ParseResult parse_proof_file(const std::string& path);

std::string format_term(const Term& t);
std::string format_formula(const Formula& f);
std::string format_line(const ProofLine& line);
std::string format_proof(const Proof& proof);

}  // namespace continuum::pastar

#endif
