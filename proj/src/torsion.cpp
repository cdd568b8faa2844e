#include "tangentia/torsion.hpp"

#include <algorithm>
#include <stdexcept>

namespace tangentia {

long TorsionPoint::order() const {
  BigInt l;
  mpz_lcm(l.get_mpz_t(), x_.raw().get_den_mpz_t(), y_.raw().get_den_mpz_t());
  return to_long(l);
}

long point_order(const TorsionPoint& p) { return p.order(); }

std::vector<TorsionPoint> torsion_points(long n) {
  if (n < 1) throw std::invalid_argument("torsion order must be >= 1");
  std::vector<TorsionPoint> out;
  out.reserve(static_cast<std::size_t>(n * n));
  // i/n increases with i, so this loop order is already lexicographic.
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) out.emplace_back(Rat(i, n), Rat(j, n));
  return out;
}

std::string to_string(Stratum s) {
  switch (s) {
    case Stratum::T1: return "T1";
    case Stratum::T2: return "T2";
    case Stratum::T3: return "T3";
    case Stratum::None: return "none";
  }
  return "none";
}

Stratum parse_stratum(const std::string& text) {
  if (text == "T1") return Stratum::T1;
  if (text == "T2") return Stratum::T2;
  if (text == "T3") return Stratum::T3;
  throw std::invalid_argument("unknown stratum '" + text + "' (expected T1, T2 or T3)");
}

Stratum stratify(const TorsionPoint& p) {
  if ((3 * p).is_zero()) return Stratum::T1;
  if ((6 * p).is_zero()) return Stratum::T2;
  if ((12 * p).is_zero()) return Stratum::T3;
  return Stratum::None;
}

long StratumSizes::of(Stratum s) const {
  switch (s) {
    case Stratum::T1: return t1;
    case Stratum::T2: return t2;
    case Stratum::T3: return t3;
    case Stratum::None: break;
  }
  throw std::invalid_argument("no size for stratum 'none'");
}

StratumSizes stratum_sizes() {
  StratumSizes sizes;
  for (const auto& p : torsion_points(12)) {
    switch (stratify(p)) {
      case Stratum::T1: ++sizes.t1; break;
      case Stratum::T2: ++sizes.t2; break;
      case Stratum::T3: ++sizes.t3; break;
      case Stratum::None: break;
    }
  }
  return sizes;
}

std::vector<TorsionPoint> solve_division(const TorsionPoint& c, long m) {
  if (m < 1) throw std::invalid_argument("division multiplier must be >= 1");
  const TorsionPoint particular(c.x() / Rat(m), c.y() / Rat(m));
  std::vector<TorsionPoint> out;
  for (const auto& t : torsion_points(m)) out.push_back(particular + t);
  std::sort(out.begin(), out.end());
  return out;
}

MarkedCubicConfig MarkedCubicConfig::standard() {
  const Rat third(1, 3), two_thirds(2, 3);
  MarkedCubicConfig cfg;
  cfg.p = {TorsionPoint(0, 0),     TorsionPoint(third, 0),     TorsionPoint(two_thirds, 0),
           TorsionPoint(0, third), TorsionPoint(third, third), TorsionPoint(two_thirds, third)};
  cfg.o_prime = TorsionPoint(Rat(1, 9), 0);
  cfg.q = {TorsionPoint(0, two_thirds), TorsionPoint(third, two_thirds), TorsionPoint(two_thirds, two_thirds)};
  return cfg;
}

bool MarkedCubicConfig::well_formed() const {
  TorsionPoint sum;
  for (const auto& pt : p) {
    if (stratify(pt) != Stratum::T1) return false;
    sum = sum + pt;
  }
  if (!sum.is_zero() || o_prime.order() != 9) return false;
  // P_1..P_6 and Q_1..Q_3 are the nine flexes, each exactly once.
  std::vector<TorsionPoint> flexes(p.begin(), p.end());
  flexes.insert(flexes.end(), q.begin(), q.end());
  std::sort(flexes.begin(), flexes.end());
  return flexes == torsion_points(3);
}

TorsionPoint restriction_class(const DivisorClass& a, const MarkedCubicConfig& cfg) {
  TorsionPoint c = (3 * a.e) * cfg.o_prime;
  for (std::size_t i = 0; i < cfg.p.size(); ++i) c = c - a.a[i] * cfg.p[i];
  return c;
}

TorsionPoint residual_point(const DivisorClass& a, const MarkedCubicConfig& cfg) {
  if (tangency_degree(a) != 4 || arithmetic_genus(a) != 1)
    throw std::invalid_argument("residual point needs a degree-4 class with p_a = 1, got " + a.str());
  DivisorClass e = a;  // A + K
  e.e -= 3;
  for (auto& x : e.a) x -= 1;
  return restriction_class(e, cfg);
}

}  // namespace tangentia
