#include "continuum/subject.hpp"

#include <mutex>
#include <stdexcept>

namespace continuum {

std::optional<unsigned> ProblemOracle::first_decision(unsigned horizon) const {
  for (unsigned s = 0; s <= horizon; ++s)
    if (status(s)) return s;
  return std::nullopt;
}

namespace {

std::string verdict_token(const OracleVerdict& v) {
  switch (v.kind) {
    case VerdictKind::ProvedP: return "provedP";
    case VerdictKind::ProvedNotP: return "provedNotP";
    case VerdictKind::ProvedAllZero: return "allzero";
    case VerdictKind::FoundNonzero: return "nonzero@" + std::to_string(v.nonzero_index);
  }
  return "?";
}

class SyntheticOracle final : public ProblemOracle {
public:
  SyntheticOracle(std::optional<unsigned> decide_at, OracleVerdict verdict)
      : decide_at_(decide_at), verdict_(verdict) {}

  std::optional<OracleVerdict> status(unsigned stage) const override {
    if (decide_at_ && stage >= *decide_at_) return verdict_;
    return std::nullopt;
  }

  std::string key() const override {
    if (!decide_at_) return "synthetic(never)";
    return "synthetic(decide=" + std::to_string(*decide_at_) +
           ",verdict=" + verdict_token(verdict_) + ")";
  }

  bool is_all_zero_oracle() const override {
    return verdict_.kind == VerdictKind::ProvedAllZero ||
           verdict_.kind == VerdictKind::FoundNonzero;
  }

private:
  std::optional<unsigned> decide_at_;
  OracleVerdict verdict_;
};

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool has_goldbach_pair(unsigned long e) {
  for (unsigned long p = 2; p <= e / 2; ++p)
    if (is_prime(p) && is_prime(e - p)) return true;
  return false;
}

class GoldbachOracle final : public ProblemOracle {
public:
  std::optional<OracleVerdict> status(unsigned stage) const override {
    const unsigned long bound = 2ul * stage + 4;
    std::lock_guard<std::mutex> lock(mu_);
    while (!counterexample_ && checked_ + 2 <= bound) {
      checked_ += 2;
      if (!has_goldbach_pair(checked_)) {
        counterexample_ = static_cast<unsigned>(checked_);
        counterexample_stage_ = static_cast<unsigned>((checked_ - 4) / 2);
      }
    }
    if (counterexample_ && stage >= *counterexample_stage_)
      return OracleVerdict{VerdictKind::FoundNonzero, *counterexample_};
    return std::nullopt;
  }

  std::string key() const override { return "goldbach"; }
  bool is_all_zero_oracle() const override { return true; }

private:
  mutable std::mutex mu_;
  mutable unsigned long checked_ = 2;  // largest even number verified so far
  mutable std::optional<unsigned> counterexample_;
  mutable std::optional<unsigned> counterexample_stage_;
};

}  // namespace

OraclePtr synthetic_oracle(std::optional<unsigned> decide_at, OracleVerdict verdict) {
  return std::make_shared<SyntheticOracle>(decide_at, verdict);
}

OraclePtr undecided_oracle() {
  return std::make_shared<SyntheticOracle>(std::nullopt,
                                           OracleVerdict{VerdictKind::ProvedAllZero, 0});
}

OraclePtr goldbach_oracle() { return std::make_shared<GoldbachOracle>(); }

OraclePtr parse_oracle_spec(const std::string& spec) {
  if (spec == "goldbach") return goldbach_oracle();
  if (spec == "undecided") return undecided_oracle();
  const std::string prefix = "synthetic:decide=";
  if (spec.rfind(prefix, 0) == 0) {
    const auto rest = spec.substr(prefix.size());
    const auto colon = rest.find(":verdict=");
    if (colon != std::string::npos) {
      unsigned stage = 0;
      try {
        std::size_t used = 0;
        stage = static_cast<unsigned>(std::stoul(rest.substr(0, colon), &used));
        if (used != colon) throw std::invalid_argument("");
      } catch (...) {
        throw std::invalid_argument("bad oracle spec: " + spec);
      }
      const std::string v = rest.substr(colon + 9);
      if (v == "provedP")
        return synthetic_oracle(stage, {VerdictKind::ProvedP, 0});
      if (v == "provedNotP")
        return synthetic_oracle(stage, {VerdictKind::ProvedNotP, 0});
      if (v == "allzero")
        return synthetic_oracle(stage, {VerdictKind::ProvedAllZero, 0});
      if (v.rfind("nonzero@", 0) == 0) {
        try {
          unsigned k = static_cast<unsigned>(std::stoul(v.substr(8)));
          return synthetic_oracle(stage, {VerdictKind::FoundNonzero, k});
        } catch (...) {
        }
      }
    }
  }
  throw std::invalid_argument("bad oracle spec: " + spec);
}

RealGen brouwer_alpha(const OraclePtr& oracle) {
  Facts f;
  f.lower = Rational(0);
  auto o = oracle;
  return RealGen("alpha(" + oracle->key() + ")",
                 [o](unsigned v) -> Rational {
                   auto s = o->first_decision(v);
                   if (!s) return Rational(0);
                   return Rational::pow2(-static_cast<long>(*s));
                 },
                 f);
}

RealGen vesley_x(const OraclePtr& oracle) {
  if (!oracle->is_all_zero_oracle())
    throw std::invalid_argument("vesley_x needs an all-zero oracle");
  auto o = oracle;
  return RealGen("vesley(" + oracle->key() + ")",
                 [o](unsigned v) -> Rational {
                   auto s = o->first_decision(v);
                   if (!s) return Rational(0);
                   Rational step = Rational::pow2(-static_cast<long>(*s));
                   return o->status(*s)->kind == VerdictKind::ProvedAllZero ? step : -step;
                 },
                 Facts{});
}

BinarySeq kripke_witness(const OraclePtr& oracle) { return BinarySeq(oracle); }

MembershipVerdict m_alpha_contains(const RealGen& x, const OraclePtr& oracle, unsigned fuel) {
  RealGen y = vesley_x(oracle);
  if (x.same_construction(y))
    return {Outcome::Proved, MembershipRoute::Reflexive, std::nullopt, fuel};
  RealGen ax = abs_val(x);
  RealGen ay = abs_val(y);
  if (not_measurably_smaller(ay, ax))
    return {Outcome::Proved, MembershipRoute::Structural, std::nullopt, fuel};
  OrderVerdict below = measurably_smaller(ax, ay, fuel);
  if (below.outcome == Outcome::Proved)
    return {Outcome::Proved, MembershipRoute::Asymmetry, below.cert, fuel};
  // Stage-relative: refusal to join M(alpha) must survive any future oracle
  // decision, so Disproved needs structural facts on both sides.
  if (ax.facts().lower && ay.facts().upper && *ax.facts().lower > *ay.facts().upper)
    return {Outcome::Disproved, MembershipRoute::Structural, std::nullopt, fuel};
  return {Outcome::Unknown, MembershipRoute::None, std::nullopt, fuel};
}

std::optional<ArchimedeanWitness> archimedean_probe(const RealGen& x, unsigned fuel) {
  const RealGen one = const_rational(Rational(1));
  for (unsigned n = 1; n <= fuel; ++n) {
    OrderVerdict v = measurably_greater(scale_nat(n, x), one, fuel);
    if (v.outcome == Outcome::Proved) return ArchimedeanWitness{n, *v.cert};
  }
  return std::nullopt;
}

unsigned SubringReport::disproved_count() const {
  unsigned c = 0;
  for (const auto& e : entries)
    if (e.verdict.outcome == Outcome::Disproved) ++c;
  return c;
}

SubringReport subring_probe(const OraclePtr& oracle, unsigned sample_count, unsigned fuel) {
  SubringReport report;
  if (sample_count == 0) return report;
  if (!oracle->is_all_zero_oracle())
    throw std::invalid_argument("subring_probe needs an all-zero oracle");

  const RealGen y = vesley_x(oracle);
  const Rational multipliers[] = {Rational(1, 2), Rational(-1, 3), Rational(1, 4),
                                  Rational(-2, 3), Rational(3, 4)};

  std::vector<std::pair<std::string, RealGen>> base;
  base.emplace_back("y", y);
  if (base.size() < sample_count) base.emplace_back("-y", neg(y));
  if (base.size() < sample_count) base.emplace_back("0", const_rational(Rational(0)));
  for (const auto& q : multipliers) {
    if (base.size() >= sample_count) break;
    base.emplace_back(q.str() + "*y", mul(const_rational(q), y));
  }

  for (const auto& [label, g] : base)
    report.entries.push_back({label, m_alpha_contains(g, oracle, fuel)});
  for (const auto& [la, a] : base) {
    for (const auto& [lb, b] : base) {
      report.entries.push_back(
          {"(" + la + ")+(" + lb + ")", m_alpha_contains(add(a, b), oracle, fuel)});
      report.entries.push_back(
          {"(" + la + ")-(" + lb + ")", m_alpha_contains(sub(a, b), oracle, fuel)});
      report.entries.push_back(
          {"(" + la + ")*(" + lb + ")", m_alpha_contains(mul(a, b), oracle, fuel)});
    }
  }
  return report;
}

std::string to_string(const MembershipVerdict& v) {
  switch (v.outcome) {
    case Outcome::Proved:
      switch (v.route) {
        case MembershipRoute::Reflexive: return "PROVED (reflexive)";
        case MembershipRoute::Structural: return "PROVED (structural)";
        default:
          return "PROVED m=" + std::to_string(v.cert->m) + " n=" + std::to_string(v.cert->n);
      }
    case Outcome::Disproved:
      return "DISPROVED";
    default:
      return "UNKNOWN fuel=" + std::to_string(v.fuel_spent);
  }
}

}  // namespace continuum
