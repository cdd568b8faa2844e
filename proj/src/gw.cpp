#include "tangentia/gw.hpp"

#include <algorithm>

#include "tangentia/cover.hpp"

namespace tangentia {

long pair_contribution(const PairContribution& p) {
  const auto& h = p.hypotheses;
  if (!h.immersed) throw HypothesisViolation("immersed");
  if (!h.same_point) throw HypothesisViolation("same_point");
  if (!h.log_cy) throw HypothesisViolation("log_cy");
  if (!h.transversal_intersection_at_P) throw HypothesisViolation("transversal_intersection_at_P");
  if (p.d1 < 1 || p.d2 < 1) throw std::invalid_argument("pair contribution needs positive tangency degrees");
  return std::min(p.d1, p.d2);
}

Rat reference_invariant(long d) {
  switch (d) {
    case 1: return Rat(9);
    case 2: return Rat(135, 4);
    case 3: return Rat(244);
    case 4: return Rat(36999, 16);
    default: throw std::out_of_range("I_" + std::to_string(d) + " is not tabulated (degrees 1..4 only)");
  }
}

Rat GwLedger::recompute_total() const {
  Rat sum;
  for (const auto& line : lines) sum += Rat(line.multiplicity) * line.contribution;
  return sum;
}

namespace {

// Tangency of a degree-b curve with the cubic.
long tangency(long base_degree) { return 3 * base_degree; }

template <class Weigh>
Rat weigh_census(const CensusEntry& entry, Weigh weigh) {
  Rat sum;
  for (const auto& component : entry.components) sum += Rat(component.count) * weigh(component.kind);
  return sum;
}

long attested_pair(const ReduciblePair& p) { return pair_contribution({p.d1, p.d2, {}}); }

std::string provenance(const CensusEntry& entry) {
  std::string out = "degree " + std::to_string(entry.degree) + " at " + to_string(entry.stratum) + ":";
  for (const auto& component : entry.components)
    out += " " + std::to_string(component.count) + "x " + describe(component.kind);
  return out;
}

}  // namespace

Rat census_contribution(const CensusEntry& entry) {
  return weigh_census(entry, [](const CurveKind& kind) -> Rat {
    if (const auto* cover = std::get_if<MultipleCover>(&kind))
      return multiple_cover(tangency(cover->base_degree), cover->multiplicity);
    if (const auto* pair = std::get_if<ReduciblePair>(&kind)) return Rat(attested_pair(*pair));
    return Rat(1);
  });
}

GwLedger build_ledger(long d, bool special_cubic) {
  if (d < 1 || d > 4) throw std::out_of_range("ledger is only available for degrees 1..4");
  if (special_cubic && d >= 3)
    throw std::invalid_argument("GW assembly for the special cubic is unsupported in degree " + std::to_string(d));

  std::vector<CensusStratum> strata;
  switch (d) {
    case 1: strata = {CensusStratum::T1}; break;
    case 2: strata = {CensusStratum::T1, CensusStratum::T2}; break;
    case 3: strata = {CensusStratum::T1, CensusStratum::NonFlex9Torsion}; break;
    default: strata = {CensusStratum::T1, CensusStratum::T2, CensusStratum::T3}; break;
  }

  GwLedger ledger;
  ledger.degree = d;
  for (auto s : strata) {
    const CensusEntry entry = boundary_census(d, s, special_cubic);
    ledger.lines.push_back({to_string(s), stratum_point_count(d, s), census_contribution(entry), provenance(entry)});
  }
  ledger.total = ledger.recompute_total();
  ledger.reference = reference_invariant(d);
  if (d == 4)
    ledger.notes.push_back("the published value of this sum is printed as 36999/4, a typo; exact evaluation gives "
                           "36999/16, which agrees with the tabulated I_4");
  return ledger;
}

GwLedger assemble_invariant(long d) {
  GwLedger ledger = build_ledger(d);
  if (!ledger.matches()) throw ReferenceMismatch(d, ledger.total, ledger.reference);
  return ledger;
}

Rat local_invariant(long d) {
  const Rat sign = (d % 2 == 1) ? Rat(1) : Rat(-1);
  return sign * reference_invariant(d) / Rat(3 * d);
}

namespace {

Rat instantons_at(Stratum stratum) {
  const CensusEntry entry = boundary_census(4, to_census_stratum(stratum));
  return weigh_census(entry, [](const CurveKind& kind) -> Rat {
    if (const auto* cover = std::get_if<MultipleCover>(&kind))
      return instanton_numbers(tangency(cover->base_degree), cover->multiplicity).back();
    if (const auto* pair = std::get_if<ReduciblePair>(&kind)) return Rat(attested_pair(*pair));
    return Rat(1);
  });
}

}  // namespace

long instanton_census(Stratum stratum) {
  const Rat here = instantons_at(stratum);
  for (auto other : {Stratum::T1, Stratum::T2, Stratum::T3}) {
    const Rat there = instantons_at(other);
    if (there != here)
      throw std::logic_error("instanton counts differ: " + to_string(stratum) + " has " + here.str() + ", " +
                             to_string(other) + " has " + there.str());
  }
  if (!here.is_integer()) throw std::logic_error("non-integral instanton count " + here.str());
  return to_long(here.num());
}

}  // namespace tangentia
