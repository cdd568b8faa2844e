#pragma once

// Genus-0 full-tangency relative invariants I_d of (P^2, smooth cubic) for
// d <= 4, assembled point by point from the census and the cover formulas.

#include <stdexcept>
#include <string>
#include <vector>

#include "tangentia/census.hpp"
#include "tangentia/rational.hpp"

namespace tangentia {

struct PairHypotheses {
  bool immersed = true;
  bool same_point = true;
  bool log_cy = true;
  bool transversal_intersection_at_P = true;
};

struct PairContribution {
  long d1 = 0;  // D.C1
  long d2 = 0;  // D.C2
  PairHypotheses hypotheses;
};

class HypothesisViolation : public std::invalid_argument {
public:
  explicit HypothesisViolation(const std::string& hypothesis)
      : std::invalid_argument("pair contribution hypothesis violated: " + hypothesis), hypothesis_(hypothesis) {}
  const std::string& hypothesis() const { return hypothesis_; }

private:
  std::string hypothesis_;
};

/// A union of two fully tangent immersed rational curves meeting D at the
/// same point is isolated with multiplicity min(d1, d2). The flags are
/// caller-attested; any false flag throws HypothesisViolation.
long pair_contribution(const PairContribution& p);

/// Published I_1..I_4; throws std::out_of_range for other degrees.
Rat reference_invariant(long d);

struct LedgerLine {
  std::string stratum;
  long multiplicity = 0;  // number of tangency points in the stratum
  Rat contribution;       // per point
  std::string provenance;
};

struct GwLedger {
  long degree = 0;
  std::vector<LedgerLine> lines;
  Rat total;
  Rat reference;
  std::vector<std::string> notes;

  bool matches() const { return total == reference; }
  /// Sum of multiplicity * contribution over lines.
  Rat recompute_total() const;
};

class ReferenceMismatch : public std::runtime_error {
public:
  ReferenceMismatch(long degree, const Rat& computed, const Rat& reference)
      : std::runtime_error("I_" + std::to_string(degree) + ": computed " + computed.str() + " but reference is " +
                           reference.str()),
        computed_(computed),
        reference_(reference) {}
  const Rat& computed() const { return computed_; }
  const Rat& reference() const { return reference_; }

private:
  Rat computed_;
  Rat reference_;
};

/// Per-point contribution of a census entry: immersed curves count 1,
/// k-fold covers of a degree-b curve count M_{3b}[k], pairs count
/// pair_contribution.
Rat census_contribution(const CensusEntry& entry);

/// Builds the ledger without comparing it to the reference.
GwLedger build_ledger(long d, bool special_cubic = false);

/// build_ledger plus the reference check; throws ReferenceMismatch.
GwLedger assemble_invariant(long d);

/// K_d = (-1)^{d-1} I_d / (3d) from the reference invariant.
Rat local_invariant(long d);

/// Instantons at a degree-4 point of the stratum: covers weigh m_{3b}[k],
/// pairs weigh pair_contribution, immersed curves 1. Throws std::logic_error
/// if the three strata disagree.
long instanton_census(Stratum stratum);

}  // namespace tangentia
