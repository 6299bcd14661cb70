#include "continuum/pastar.hpp"

#include <cctype>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string_view>

namespace continuum::pastar {

Term zero() { return Term{Term::Kind::Zero, {}, ""}; }
Term succ(Term t) { return Term{Term::Kind::Succ, {std::move(t)}, ""}; }
Term plus(Term a, Term b) { return Term{Term::Kind::Plus, {std::move(a), std::move(b)}, ""}; }
Term times(Term a, Term b) { return Term{Term::Kind::Times, {std::move(a), std::move(b)}, ""}; }
Term var(std::string name) { return Term{Term::Kind::Var, {}, std::move(name)}; }
Term omega() { return Term{Term::Kind::Omega, {}, ""}; }

Term numeral(unsigned long k) {
  Term t = zero();
  for (unsigned long i = 0; i < k; ++i) t = succ(std::move(t));
  return t;
}

std::optional<unsigned long> numeral_value(const Term& t) {
  unsigned long k = 0;
  const Term* cur = &t;
  while (cur->kind == Term::Kind::Succ) {
    ++k;
    cur = &cur->kids[0];
  }
  if (cur->kind == Term::Kind::Zero) return k;
  return std::nullopt;
}

Formula eq(Term a, Term b) { return Formula{Formula::Kind::Eq, {std::move(a), std::move(b)}, {}, ""}; }
Formula lt(Term a, Term b) { return Formula{Formula::Kind::Lt, {std::move(a), std::move(b)}, {}, ""}; }
Formula lnot(Formula f) { return Formula{Formula::Kind::Not, {}, {std::move(f)}, ""}; }
Formula imp(Formula a, Formula b) {
  return Formula{Formula::Kind::Imp, {}, {std::move(a), std::move(b)}, ""};
}
Formula forall(std::string v, Formula body) {
  return Formula{Formula::Kind::Forall, {}, {std::move(body)}, std::move(v)};
}

bool contains_omega(const Term& t) {
  if (t.kind == Term::Kind::Omega) return true;
  for (const auto& k : t.kids)
    if (contains_omega(k)) return true;
  return false;
}

bool contains_omega(const Formula& f) {
  for (const auto& t : f.terms)
    if (contains_omega(t)) return true;
  for (const auto& k : f.kids)
    if (contains_omega(k)) return true;
  return false;
}

bool contains_var(const Term& t) {
  if (t.kind == Term::Kind::Var) return true;
  for (const auto& k : t.kids)
    if (contains_var(k)) return true;
  return false;
}

bool contains_var(const Formula& f) {
  for (const auto& t : f.terms)
    if (contains_var(t)) return true;
  for (const auto& k : f.kids)
    if (contains_var(k)) return true;
  return false;
}

Term subst_omega(const Term& t, const Term& replacement) {
  if (t.kind == Term::Kind::Omega) return replacement;
  Term r = t;
  for (auto& k : r.kids) k = subst_omega(k, replacement);
  return r;
}

Formula subst_omega(const Formula& f, const Term& replacement) {
  Formula r = f;
  for (auto& t : r.terms) t = subst_omega(t, replacement);
  for (auto& k : r.kids) k = subst_omega(k, replacement);
  return r;
}

Term subst_var(const Term& t, const std::string& name, const Term& replacement) {
  if (t.kind == Term::Kind::Var && t.var == name) return replacement;
  Term r = t;
  for (auto& k : r.kids) k = subst_var(k, name, replacement);
  return r;
}

Formula subst_var(const Formula& f, const std::string& name, const Term& replacement) {
  if (f.kind == Formula::Kind::Forall && f.var == name) return f;  // shadowed
  Formula r = f;
  for (auto& t : r.terms) t = subst_var(t, name, replacement);
  for (auto& k : r.kids) k = subst_var(k, name, replacement);
  return r;
}

namespace {

// --- scheme matching ---------------------------------------------------

// Matches `inst` against the pattern `pat` where Var(x) in the pattern may
// stand for one consistent term; everything else must agree exactly.
bool match_term(const Term& pat, const Term& inst, const std::string& x,
                std::optional<Term>& binding) {
  if (pat.kind == Term::Kind::Var && pat.var == x) {
    if (!binding) {
      binding = inst;
      return true;
    }
    return *binding == inst;
  }
  if (pat.kind != inst.kind || pat.var != inst.var || pat.kids.size() != inst.kids.size())
    return false;
  for (std::size_t i = 0; i < pat.kids.size(); ++i)
    if (!match_term(pat.kids[i], inst.kids[i], x, binding)) return false;
  return true;
}

bool match_formula(const Formula& pat, const Formula& inst, const std::string& x,
                   std::optional<Term>& binding) {
  if (pat.kind == Formula::Kind::Forall && pat.var == x) return pat == inst;  // shadowed
  if (pat.kind != inst.kind || pat.var != inst.var || pat.terms.size() != inst.terms.size() ||
      pat.kids.size() != inst.kids.size())
    return false;
  for (std::size_t i = 0; i < pat.terms.size(); ++i)
    if (!match_term(pat.terms[i], inst.terms[i], x, binding)) return false;
  for (std::size_t i = 0; i < pat.kids.size(); ++i)
    if (!match_formula(pat.kids[i], inst.kids[i], x, binding)) return false;
  return true;
}

bool is_imp(const Formula& f) { return f.kind == Formula::Kind::Imp; }
bool is_forall(const Formula& f) { return f.kind == Formula::Kind::Forall; }

// A -> (B -> A)
bool matches_k(const Formula& f) {
  return is_imp(f) && is_imp(f.kids[1]) && f.kids[0] == f.kids[1].kids[1];
}

// (A -> (B -> C)) -> ((A -> B) -> (A -> C))
bool matches_s(const Formula& f) {
  if (!is_imp(f) || !is_imp(f.kids[0]) || !is_imp(f.kids[0].kids[1]) || !is_imp(f.kids[1]) ||
      !is_imp(f.kids[1].kids[0]) || !is_imp(f.kids[1].kids[1]))
    return false;
  const Formula& a = f.kids[0].kids[0];
  const Formula& b = f.kids[0].kids[1].kids[0];
  const Formula& c = f.kids[0].kids[1].kids[1];
  return f.kids[1].kids[0].kids[0] == a && f.kids[1].kids[0].kids[1] == b &&
         f.kids[1].kids[1].kids[0] == a && f.kids[1].kids[1].kids[1] == c;
}

// (not A -> not B) -> (B -> A)
bool matches_contra(const Formula& f) {
  if (!is_imp(f) || !is_imp(f.kids[0]) || !is_imp(f.kids[1])) return false;
  const Formula& l0 = f.kids[0].kids[0];
  const Formula& l1 = f.kids[0].kids[1];
  if (l0.kind != Formula::Kind::Not || l1.kind != Formula::Kind::Not) return false;
  return f.kids[1].kids[0] == l1.kids[0] && f.kids[1].kids[1] == l0.kids[0];
}

// forall x A -> A[t/x] for some term t
bool matches_inst(const Formula& f) {
  if (!is_imp(f) || !is_forall(f.kids[0])) return false;
  std::optional<Term> binding;
  return match_formula(f.kids[0].kids[0], f.kids[1], f.kids[0].var, binding);
}

// A[0/x] -> (forall x (A -> A[s(x)/x]) -> forall x A)
bool matches_induction(const Formula& f) {
  if (!is_imp(f) || !is_imp(f.kids[1])) return false;
  const Formula& base = f.kids[0];
  const Formula& step = f.kids[1].kids[0];
  const Formula& conc = f.kids[1].kids[1];
  if (!is_forall(step) || !is_forall(conc) || step.var != conc.var) return false;
  const std::string& x = conc.var;
  const Formula& body = conc.kids[0];
  if (!is_imp(step.kids[0])) return false;
  return step.kids[0].kids[0] == body &&
         step.kids[0].kids[1] == subst_var(body, x, succ(var(x))) &&
         base == subst_var(body, x, zero());
}

bool matches_pa_scheme(const std::string& id, const Formula& f, std::string& why) {
  std::optional<Term> t1, t2;
  const auto fail = [&](const char* msg) {
    why = msg;
    return false;
  };
  if (id == "induction") {
    if (matches_induction(f)) return true;
    return fail("not an induction instance");
  }
  // The remaining schemes are term patterns with metavariables #a, #b.
  Formula pat;
  if (id == "succ_nonzero")
    pat = lnot(eq(succ(var("#a")), zero()));
  else if (id == "succ_inj")
    pat = imp(eq(succ(var("#a")), succ(var("#b"))), eq(var("#a"), var("#b")));
  else if (id == "plus_zero")
    pat = eq(plus(var("#a"), zero()), var("#a"));
  else if (id == "plus_succ")
    pat = eq(plus(var("#a"), succ(var("#b"))), succ(plus(var("#a"), var("#b"))));
  else if (id == "times_zero")
    pat = eq(times(var("#a"), zero()), zero());
  else if (id == "times_succ")
    pat = eq(times(var("#a"), succ(var("#b"))), plus(times(var("#a"), var("#b")), var("#a")));
  else if (id == "lt_zero")
    pat = lnot(lt(var("#a"), zero()));
  else if (id == "lt_succ_self")
    pat = lt(var("#a"), succ(var("#a")));
  else if (id == "lt_succ_mono")
    pat = imp(lt(var("#a"), var("#b")), lt(var("#a"), succ(var("#b"))));
  else
    return fail("unknown PA axiom scheme");
  std::optional<Term> a, b;
  // two-metavariable matching: resolve #a first, then #b
  const std::function<bool(const Formula&, const Formula&)> m2 = [&](const Formula& p,
                                                                     const Formula& i) {
    if (p.kind != i.kind || p.var != i.var || p.terms.size() != i.terms.size() ||
        p.kids.size() != i.kids.size())
      return false;
    const std::function<bool(const Term&, const Term&)> mt = [&](const Term& pt, const Term& it) {
      if (pt.kind == Term::Kind::Var && pt.var == "#a") {
        if (!a) a = it;
        return *a == it;
      }
      if (pt.kind == Term::Kind::Var && pt.var == "#b") {
        if (!b) b = it;
        return *b == it;
      }
      if (pt.kind != it.kind || pt.var != it.var || pt.kids.size() != it.kids.size()) return false;
      for (std::size_t k = 0; k < pt.kids.size(); ++k)
        if (!mt(pt.kids[k], it.kids[k])) return false;
      return true;
    };
    for (std::size_t k = 0; k < p.terms.size(); ++k)
      if (!mt(p.terms[k], i.terms[k])) return false;
    for (std::size_t k = 0; k < p.kids.size(); ++k)
      if (!m2(p.kids[k], i.kids[k])) return false;
    return true;
  };
  if (m2(pat, f)) return true;
  return fail("axiom scheme mismatch");
}

bool matches_logic_scheme(const std::string& id, const Formula& f, std::string& why) {
  if (id == "k") {
    if (matches_k(f)) return true;
    why = "not a K instance";
  } else if (id == "s") {
    if (matches_s(f)) return true;
    why = "not an S instance";
  } else if (id == "contra") {
    if (matches_contra(f)) return true;
    why = "not a contraposition instance";
  } else if (id == "inst") {
    if (matches_inst(f)) return true;
    why = "instantiation mismatch";
  } else {
    why = "unknown logic axiom scheme";
  }
  return false;
}

// --- ground evaluation -------------------------------------------------

std::optional<Int> eval_ground(const Term& t) {
  switch (t.kind) {
    case Term::Kind::Zero: return Int(0);
    case Term::Kind::Succ: {
      auto v = eval_ground(t.kids[0]);
      if (!v) return std::nullopt;
      return *v + 1;
    }
    case Term::Kind::Plus: {
      auto a = eval_ground(t.kids[0]);
      auto b = eval_ground(t.kids[1]);
      if (!a || !b) return std::nullopt;
      return *a + *b;
    }
    case Term::Kind::Times: {
      auto a = eval_ground(t.kids[0]);
      auto b = eval_ground(t.kids[1]);
      if (!a || !b) return std::nullopt;
      return *a * *b;
    }
    default: return std::nullopt;  // Var, Omega
  }
}

// True numeral facts: ground, omega-free comparisons, optionally negated.
bool check_numeral_fact(const Formula& f, std::string& why) {
  bool negated = false;
  const Formula* cur = &f;
  if (cur->kind == Formula::Kind::Not) {
    negated = true;
    cur = &cur->kids[0];
  }
  if (cur->kind != Formula::Kind::Eq && cur->kind != Formula::Kind::Lt) {
    why = "numeral fact must be a comparison";
    return false;
  }
  auto a = eval_ground(cur->terms[0]);
  auto b = eval_ground(cur->terms[1]);
  if (!a || !b) {
    why = "numeral fact not variable-free";
    return false;
  }
  bool holds = cur->kind == Formula::Kind::Eq ? (*a == *b) : (*a < *b);
  if (negated) holds = !holds;
  if (!holds) {
    why = "false numeral fact";
    return false;
  }
  return true;
}

}  // namespace

std::optional<CheckError> check(const Proof& proof) {
  if (proof.lines.empty()) return CheckError{0, "empty proof"};
  std::map<unsigned long, const ProofLine*> seen;
  unsigned long prev_index = 0;
  for (const auto& line : proof.lines) {
    const auto err = [&](std::string reason) {
      return CheckError{line.index, std::move(reason)};
    };
    if (line.index <= prev_index && prev_index != 0) return err("line indices must increase");
    std::string why;
    switch (line.just.kind) {
      case Justification::Kind::PAAxiom:
        if (!matches_pa_scheme(line.just.scheme, line.formula, why)) return err(why);
        break;
      case Justification::Kind::LogicAxiom:
        if (!matches_logic_scheme(line.just.scheme, line.formula, why)) return err(why);
        break;
      case Justification::Kind::OmegaGt:
        if (!(line.formula == lt(numeral(line.just.n), omega())))
          return err("schema instance mismatch");
        break;
      case Justification::Kind::NumeralFact:
        if (contains_omega(line.formula)) return err("numeral fact mentions omega");
        if (!check_numeral_fact(line.formula, why)) return err(why);
        break;
      case Justification::Kind::MP: {
        auto pi = seen.find(line.just.i);
        auto pj = seen.find(line.just.j);
        if (pi == seen.end() || pj == seen.end()) return err("forward reference");
        if (!(pj->second->formula == imp(pi->second->formula, line.formula)))
          return err("modus ponens mismatch");
        break;
      }
      case Justification::Kind::Gen: {
        auto pi = seen.find(line.just.i);
        if (pi == seen.end()) return err("forward reference");
        if (!(line.formula == forall(line.just.var, pi->second->formula)))
          return err("generalization mismatch");
        break;
      }
    }
    seen.emplace(line.index, &line);
    prev_index = line.index;
  }
  return std::nullopt;
}

std::set<unsigned long> collect_omega_instances(const Proof& proof) {
  if (auto e = check(proof))
    throw std::invalid_argument("proof does not check: line " + std::to_string(e->line_index) +
                                ": " + e->reason);
  std::set<unsigned long> out;
  for (const auto& line : proof.lines)
    if (line.just.kind == Justification::Kind::OmegaGt) out.insert(line.just.n);
  return out;
}

OmegaReport omega_report(const Proof& proof) {
  OmegaReport r;
  r.instances = collect_omega_instances(proof);
  r.m = r.instances.empty() ? 1 : *r.instances.rbegin() + 1;
  return r;
}

Proof eliminate_omega(const Proof& proof) {
  const OmegaReport report = omega_report(proof);  // also re-checks
  const Term m = numeral(report.m);
  Proof out;
  out.lines.reserve(proof.lines.size());
  for (const auto& line : proof.lines) {
    ProofLine nl = line;
    nl.formula = subst_omega(line.formula, m);
    if (line.just.kind == Justification::Kind::OmegaGt)
      nl.just = Justification{Justification::Kind::NumeralFact, "", 0, 0, 0, ""};
    out.lines.push_back(std::move(nl));
  }
  return out;
}

// --- text format -------------------------------------------------------

namespace {

struct SExprParser {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  std::string atom() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos])) &&
           text[pos] != '(' && text[pos] != ')')
      ++pos;
    if (start == pos) throw std::runtime_error("expected atom");
    return std::string(text.substr(start, pos - start));
  }

  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw std::runtime_error(std::string("expected '") + c + "'");
    ++pos;
  }

  bool peek(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  Term term() {
    skip_ws();
    if (peek('(')) {
      expect('(');
      std::string head = atom();
      Term r;
      if (head == "s") {
        r = succ(term());
      } else if (head == "+") {
        Term a = term();
        r = plus(std::move(a), term());
      } else if (head == "*") {
        Term a = term();
        r = times(std::move(a), term());
      } else if (head == "num") {
        std::string k = atom();
        r = numeral(std::stoul(k));
      } else {
        throw std::runtime_error("unknown term head: " + head);
      }
      expect(')');
      return r;
    }
    std::string a = atom();
    if (a == "0") return zero();
    if (a == "w") return omega();
    return var(a);
  }

  Formula formula() {
    expect('(');
    std::string head = atom();
    Formula r;
    if (head == "=") {
      Term a = term();
      r = eq(std::move(a), term());
    } else if (head == "<") {
      Term a = term();
      r = lt(std::move(a), term());
    } else if (head == "not") {
      r = lnot(formula());
    } else if (head == "imp") {
      Formula a = formula();
      r = imp(std::move(a), formula());
    } else if (head == "forall") {
      std::string v = atom();
      r = forall(std::move(v), formula());
    } else {
      throw std::runtime_error("unknown formula head: " + head);
    }
    expect(')');
    return r;
  }
};

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) out.push_back(tok);
  return out;
}

Justification parse_justification(const std::string& text) {
  auto toks = split_ws(text);
  if (toks.empty()) throw std::runtime_error("missing justification");
  Justification j;
  const std::string& head = toks[0];
  if (head == "PA" || head == "LOGIC") {
    if (toks.size() < 2) throw std::runtime_error(head + " needs a scheme id");
    j.kind = head == "PA" ? Justification::Kind::PAAxiom : Justification::Kind::LogicAxiom;
    j.scheme = toks[1];
    // any further binding tokens are accepted and ignored; instantiations
    // are inferred by matching
  } else if (head == "OMEGA") {
    if (toks.size() != 2) throw std::runtime_error("OMEGA needs one numeral");
    j.kind = Justification::Kind::OmegaGt;
    j.n = std::stoul(toks[1]);
  } else if (head == "NUMFACT") {
    j.kind = Justification::Kind::NumeralFact;
  } else if (head == "MP") {
    if (toks.size() != 3) throw std::runtime_error("MP needs two line indices");
    j.kind = Justification::Kind::MP;
    j.i = std::stoul(toks[1]);
    j.j = std::stoul(toks[2]);
  } else if (head == "GEN") {
    if (toks.size() != 3) throw std::runtime_error("GEN needs a line index and a variable");
    j.kind = Justification::Kind::Gen;
    j.i = std::stoul(toks[1]);
    j.var = toks[2];
  } else {
    throw std::runtime_error("unknown justification: " + head);
  }
  return j;
}

}  // namespace

ParseResult parse_proof_text(const std::string& text) {
  ParseResult result;
  Proof proof;
  std::istringstream in(text);
  std::string line;
  unsigned long lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto bar1 = line.find('|');
    const auto bar2 = bar1 == std::string::npos ? std::string::npos : line.find('|', bar1 + 1);
    if (bar2 == std::string::npos) {
      result.error = FileParseError{lineno, "expected '<index> | <formula> | <justification>'"};
      return result;
    }
    try {
      ProofLine pl;
      pl.index = std::stoul(line.substr(0, bar1));
      SExprParser fp{std::string_view(line).substr(bar1 + 1, bar2 - bar1 - 1)};
      pl.formula = fp.formula();
      if (!fp.at_end()) throw std::runtime_error("trailing tokens after formula");
      pl.just = parse_justification(line.substr(bar2 + 1));
      proof.lines.push_back(std::move(pl));
    } catch (const std::exception& e) {
      result.error = FileParseError{lineno, e.what()};
      return result;
    }
  }
  if (proof.lines.empty()) {
    result.error = FileParseError{0, "no proof lines"};
    return result;
  }
  result.proof = std::move(proof);
  return result;
}

ParseResult parse_proof_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ParseResult r;
    r.error = FileParseError{0, "cannot open " + path};
    return r;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_proof_text(buf.str());
}

std::string format_term(const Term& t) {
  if (auto k = numeral_value(t)) return *k == 0 ? "0" : "(num " + std::to_string(*k) + ")";
  switch (t.kind) {
    case Term::Kind::Zero: return "0";
    case Term::Kind::Omega: return "w";
    case Term::Kind::Var: return t.var;
    case Term::Kind::Succ: return "(s " + format_term(t.kids[0]) + ")";
    case Term::Kind::Plus:
      return "(+ " + format_term(t.kids[0]) + " " + format_term(t.kids[1]) + ")";
    case Term::Kind::Times:
      return "(* " + format_term(t.kids[0]) + " " + format_term(t.kids[1]) + ")";
  }
  return "?";
}

std::string format_formula(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Eq:
      return "(= " + format_term(f.terms[0]) + " " + format_term(f.terms[1]) + ")";
    case Formula::Kind::Lt:
      return "(< " + format_term(f.terms[0]) + " " + format_term(f.terms[1]) + ")";
    case Formula::Kind::Not: return "(not " + format_formula(f.kids[0]) + ")";
    case Formula::Kind::Imp:
      return "(imp " + format_formula(f.kids[0]) + " " + format_formula(f.kids[1]) + ")";
    case Formula::Kind::Forall:
      return "(forall " + f.var + " " + format_formula(f.kids[0]) + ")";
  }
  return "?";
}

std::string format_line(const ProofLine& line) {
  std::string just;
  switch (line.just.kind) {
    case Justification::Kind::PAAxiom: just = "PA " + line.just.scheme; break;
    case Justification::Kind::LogicAxiom: just = "LOGIC " + line.just.scheme; break;
    case Justification::Kind::OmegaGt: just = "OMEGA " + std::to_string(line.just.n); break;
    case Justification::Kind::NumeralFact: just = "NUMFACT"; break;
    case Justification::Kind::MP:
      just = "MP " + std::to_string(line.just.i) + " " + std::to_string(line.just.j);
      break;
    case Justification::Kind::Gen:
      just = "GEN " + std::to_string(line.just.i) + " " + line.just.var;
      break;
  }
  return std::to_string(line.index) + " | " + format_formula(line.formula) + " | " + just;
}

std::string format_proof(const Proof& proof) {
  std::string out;
  for (const auto& line : proof.lines) out += format_line(line) + "\n";
  return out;
}

}  // namespace continuum::pastar
