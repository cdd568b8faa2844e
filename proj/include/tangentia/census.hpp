#pragma once

// Counts of fully tangent rational plane curves of degree <= 4 through a
// fixed torsion point of the cubic, assembled from the lattice and torsion
// data.

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "tangentia/torsion.hpp"

namespace tangentia {

// Euler characteristics used by the pencil arguments.
inline constexpr long kRationalEllipticSurfaceEuler = 12;
inline constexpr long kFiberEulerOrderTwo = 6;    // singular member C1 + C2
inline constexpr long kFiberEulerOrderFour = 4;   // nodal member, branches 1 and 3
inline constexpr long kFiberEulerTripleLine = 10; // degree 3 at a flex
inline constexpr long kFiberEulerNodalCubic = 9;  // degree 3 at a 9-torsion non-flex

struct StratumCount {
  std::array<long, 3> n{};  // contributions to N_1, N_2, N_3
  std::string label;
};

/// Curves of a degree-4 class with the given arithmetic genus, split by the
/// stratum of the tangency point. Throws std::invalid_argument unless p_a is
/// 0 or 1.
StratumCount class_curve_counts(long p_a);

/// Singular fibres left after the special fibre: chi(surface) - chi(fibre).
long euler_budget(long chi_surface, long chi_special_fiber);

struct AggregateN {
  long n1 = 0;
  long n2 = 0;
  long n3 = 0;

  long of(Stratum s) const;
  friend bool operator==(const AggregateN&, const AggregateN&) = default;
};

AggregateN aggregate_N();

/// Immersed quartics per point of the stratum: N_i / (3 |T_i|).
long count_M4(Stratum stratum);

enum class CensusStratum { T1, T2, T3, NonFlex9Torsion };

std::string to_string(CensusStratum s);
/// Accepts "T1", "T2", "T3", "N9".
CensusStratum parse_census_stratum(const std::string& text);
CensusStratum to_census_stratum(Stratum s);

struct ImmersedCurve {
  long degree = 0;
};
struct MultipleCover {
  long base_degree = 0;
  long multiplicity = 0;
};
/// Union of two immersed curves with tangencies d1 = D.C1 and d2 = D.C2.
struct ReduciblePair {
  long d1 = 0;
  long d2 = 0;
};

using CurveKind = std::variant<ImmersedCurve, MultipleCover, ReduciblePair>;

/// Plane degree of a configuration.
long curve_degree(const CurveKind& kind);
std::string describe(const CurveKind& kind);

struct CensusComponent {
  CurveKind kind;
  long count = 0;
};

struct CensusEntry {
  long degree = 0;
  CensusStratum stratum = CensusStratum::T1;
  bool special_cubic = false;
  std::vector<CensusComponent> components;
};

/// Every curve in the closure of M_{d,P} for P in the stratum. special_cubic
/// selects the cubic with j = 0 (cuspidal member at flexes in degree 3); that
/// choice is only supported up to degree 3. Throws std::invalid_argument for
/// inconsistent (degree, stratum) pairs.
CensusEntry boundary_census(long degree, CensusStratum stratum, bool special_cubic = false);

/// Number of tangency points of the stratum for the given degree: flexes,
/// 6-torsion non-flexes, 9-torsion non-flexes, or the T_i of degree 4.
long stratum_point_count(long degree, CensusStratum stratum);

}  // namespace tangentia
