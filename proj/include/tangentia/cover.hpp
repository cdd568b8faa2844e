#pragma once

// Multiple-cover contributions of fully tangent rational curves and the
// divisor-sum inversion that extracts instanton numbers from them.
//
//   M_w[d]  = binomial(d(w-1)-1, d-1) / d^2       relative d-fold covers
//   M'_n[d] = (-1)^{n(d-1)} / d^2                 local d-fold covers
//   M_w[d]  = sum_{d1*d2 = d} M'_{d1 w}[d2] * m_w[d1]

#include <map>
#include <utility>
#include <vector>

#include "tangentia/rational.hpp"

namespace tangentia {

/// Contribution of d-fold covers of an immersed curve with tangency w.
Rat multiple_cover(long w, long d);

/// Contribution of d-fold covers of a degree-n curve in the local geometry.
Rat local_cover(long n, long d);

/// m_w[1..d_max], solved in increasing d. Element i holds m_w[i+1].
std::vector<Rat> instanton_numbers(long w, long d_max);

/// Re-expands instantons through the local-cover sum; entry i reproduces
/// M_w[i+1] when `instantons` came from instanton_numbers(w, ...).
std::vector<Rat> resum_instantons(long w, const std::vector<Rat>& instantons);

/// Positive divisors of n in increasing order (trial division).
std::vector<long> divisors(long n);

enum class CoverKind { Relative, Local, Instanton };

/// Tabulated cover values keyed by (w or n, d).
class CoverTable {
public:
  static CoverTable relative(long w_max, long d_max);
  static CoverTable local(long n_max, long d_max);
  static CoverTable instanton(long w_max, long d_max);

  CoverKind kind() const { return kind_; }
  const std::map<std::pair<long, long>, Rat>& entries() const { return entries_; }
  const Rat& at(long w, long d) const;

  /// True when every entry matches its defining formula and, for instanton
  /// tables, the stored d values are closed under taking divisors.
  bool consistent() const;

private:
  explicit CoverTable(CoverKind kind) : kind_(kind) {}

  CoverKind kind_;
  std::map<std::pair<long, long>, Rat> entries_;
};

struct IntegralityEntry {
  long w = 0;
  long d = 0;
  Rat value;
  bool integer = false;
  bool positive = false;
  // Tangency w >= 3 is where positivity has been observed; below that the
  // inversion yields zeros and only integrality is required.
  bool in_observed_range = false;
  bool pass = false;
};

struct IntegralityReport {
  long w_max = 0;
  long d_max = 0;
  std::vector<IntegralityEntry> entries;

  bool all_pass() const;
};

IntegralityReport integrality_report(long w_max, long d_max);

}  // namespace tangentia
