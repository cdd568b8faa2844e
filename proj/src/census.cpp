#include "tangentia/census.hpp"

#include <stdexcept>

#include "tangentia/lattice.hpp"

namespace tangentia {

StratumCount class_curve_counts(long p_a) {
  if (p_a == 0) return {{1, 3, 12}, "p_a = 0: conic class, 4P ~ A|D"};
  if (p_a == 1) {
    // Each of the 3 order-2 and 12 order-4 translates carries a pencil whose
    // remaining nodal fibres are the curves.
    const long per_order_two = euler_budget(kRationalEllipticSurfaceEuler, kFiberEulerOrderTwo);
    const long per_order_four = euler_budget(kRationalEllipticSurfaceEuler, kFiberEulerOrderFour);
    return {{0, 3 * per_order_two, 12 * per_order_four}, "p_a = 1: cubic pencil through P_i + 4-torsion"};
  }
  throw std::invalid_argument("class_curve_counts: p_a must be 0 or 1, got " + std::to_string(p_a));
}

long euler_budget(long chi_surface, long chi_special_fiber) {
  const long budget = chi_surface - chi_special_fiber;
  if (budget < 0)
    throw std::invalid_argument("euler_budget: special fibre exceeds surface Euler characteristic");
  return budget;
}

long AggregateN::of(Stratum s) const {
  switch (s) {
    case Stratum::T1: return n1;
    case Stratum::T2: return n2;
    case Stratum::T3: return n3;
    case Stratum::None: break;
  }
  throw std::invalid_argument("no aggregate for stratum 'none'");
}

AggregateN aggregate_N() {
  const ClassTable table = enumerate_classes(4);
  AggregateN n;
  for (long pa : {0L, 1L}) {
    const long classes = table.ordered_total(pa);
    const StratumCount per_class = class_curve_counts(pa);
    n.n1 += classes * per_class.n[0];
    n.n2 += classes * per_class.n[1];
    n.n3 += classes * per_class.n[2];
  }
  return n;
}

long count_M4(Stratum stratum) {
  const long total = aggregate_N().of(stratum);
  const long divisor = 3 * stratum_sizes().of(stratum);
  if (total % divisor != 0)
    throw std::logic_error("count_M4: N = " + std::to_string(total) + " is not divisible by 3|T| = " +
                           std::to_string(divisor));
  return total / divisor;
}

std::string to_string(CensusStratum s) {
  switch (s) {
    case CensusStratum::T1: return "T1";
    case CensusStratum::T2: return "T2";
    case CensusStratum::T3: return "T3";
    case CensusStratum::NonFlex9Torsion: return "N9";
  }
  return "?";
}

CensusStratum parse_census_stratum(const std::string& text) {
  if (text == "N9") return CensusStratum::NonFlex9Torsion;
  return to_census_stratum(parse_stratum(text));
}

CensusStratum to_census_stratum(Stratum s) {
  switch (s) {
    case Stratum::T1: return CensusStratum::T1;
    case Stratum::T2: return CensusStratum::T2;
    case Stratum::T3: return CensusStratum::T3;
    case Stratum::None: break;
  }
  throw std::invalid_argument("stratum 'none' has no census");
}

long curve_degree(const CurveKind& kind) {
  struct {
    long operator()(const ImmersedCurve& c) const { return c.degree; }
    long operator()(const MultipleCover& c) const { return c.base_degree * c.multiplicity; }
    long operator()(const ReduciblePair& c) const { return (c.d1 + c.d2) / 3; }
  } visitor;
  return std::visit(visitor, kind);
}

std::string describe(const CurveKind& kind) {
  struct {
    std::string operator()(const ImmersedCurve& c) const { return "immersed(deg " + std::to_string(c.degree) + ")"; }
    std::string operator()(const MultipleCover& c) const {
      return "cover(" + std::to_string(c.base_degree) + ",x" + std::to_string(c.multiplicity) + ")";
    }
    std::string operator()(const ReduciblePair& c) const {
      return "pair(d1=" + std::to_string(c.d1) + ",d2=" + std::to_string(c.d2) + ")";
    }
  } visitor;
  return std::visit(visitor, kind);
}

namespace {

[[noreturn]] void inconsistent(long degree, CensusStratum stratum) {
  throw std::invalid_argument("no degree-" + std::to_string(degree) + " curves are fully tangent at stratum " +
                              to_string(stratum));
}

}  // namespace

CensusEntry boundary_census(long degree, CensusStratum stratum, bool special_cubic) {
  CensusEntry entry{degree, stratum, special_cubic, {}};
  auto& c = entry.components;
  using S = CensusStratum;
  switch (degree) {
    case 1:
      if (stratum != S::T1) inconsistent(degree, stratum);
      c = {{ImmersedCurve{1}, 1}};  // the flex tangent line
      break;
    case 2:
      if (stratum == S::T1)
        c = {{MultipleCover{1, 2}, 1}};
      else if (stratum == S::T2)
        c = {{ImmersedCurve{2}, 1}};  // smooth conic
      else
        inconsistent(degree, stratum);
      break;
    case 3:
      if (stratum == S::T1) {
        // Nodal (resp. cuspidal) cubics fill the Euler budget of the pencil
        // whose singular member at P is the triple line.
        const long budget = euler_budget(kRationalEllipticSurfaceEuler, kFiberEulerTripleLine);
        c = {{MultipleCover{1, 3}, 1}, {ImmersedCurve{3}, special_cubic ? 1 : budget}};
      } else if (stratum == S::NonFlex9Torsion) {
        c = {{ImmersedCurve{3}, euler_budget(kRationalEllipticSurfaceEuler, kFiberEulerNodalCubic)}};
      } else {
        inconsistent(degree, stratum);
      }
      break;
    case 4:
      if (special_cubic)
        throw std::invalid_argument("the degree-4 census is only available for a general cubic");
      if (stratum == S::T1)
        c = {{MultipleCover{1, 4}, 1}, {ReduciblePair{3, 9}, 2}, {ImmersedCurve{4}, 8}};
      else if (stratum == S::T2)
        c = {{MultipleCover{2, 2}, 1}, {ImmersedCurve{4}, 14}};
      else if (stratum == S::T3)
        c = {{ImmersedCurve{4}, 16}};
      else
        inconsistent(degree, stratum);
      break;
    default:
      throw std::invalid_argument("census is only available for degrees 1..4");
  }
  return entry;
}

long stratum_point_count(long degree, CensusStratum stratum) {
  boundary_census(degree, stratum);  // validates the pair
  long count = 0;
  for (const auto& p : torsion_points(3 * degree)) {
    const long order = p.order();
    switch (stratum) {
      case CensusStratum::T1: count += (order == 1 || order == 3); break;
      case CensusStratum::NonFlex9Torsion: count += (9 % order == 0 && 3 % order != 0); break;
      case CensusStratum::T2:
      case CensusStratum::T3: count += stratify(p) == (stratum == CensusStratum::T2 ? Stratum::T2 : Stratum::T3); break;
    }
  }
  return count;
}

}  // namespace tangentia
