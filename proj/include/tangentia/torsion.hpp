#pragma once

// The smooth cubic as the abstract torus (Q/Z)^2, with a chosen flex as the
// identity. Only torsion points are ever materialised.

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "tangentia/lattice.hpp"
#include "tangentia/rational.hpp"

namespace tangentia {

class TorsionPoint {
public:
  TorsionPoint() = default;
  TorsionPoint(const Rat& x, const Rat& y) : x_(x.frac()), y_(y.frac()) {}

  const Rat& x() const { return x_; }
  const Rat& y() const { return y_; }

  /// Least n >= 1 with nP = 0.
  long order() const;

  TorsionPoint operator-() const { return {-x_, -y_}; }
  friend TorsionPoint operator+(const TorsionPoint& p, const TorsionPoint& q) { return {p.x_ + q.x_, p.y_ + q.y_}; }
  friend TorsionPoint operator-(const TorsionPoint& p, const TorsionPoint& q) { return {p.x_ - q.x_, p.y_ - q.y_}; }
  friend TorsionPoint operator*(long k, const TorsionPoint& p) { return {Rat(k) * p.x_, Rat(k) * p.y_}; }

  bool is_zero() const { return x_.is_zero() && y_.is_zero(); }

  friend bool operator==(const TorsionPoint&, const TorsionPoint&) = default;
  friend auto operator<=>(const TorsionPoint&, const TorsionPoint&) = default;

  std::string str() const { return "(" + x_.str() + ", " + y_.str() + ")"; }

private:
  Rat x_;
  Rat y_;
};

long point_order(const TorsionPoint& p);

/// The n^2 points with nP = 0, in lexicographic (x, y) order.
std::vector<TorsionPoint> torsion_points(long n);

enum class Stratum { T1, T2, T3, None };

std::string to_string(Stratum s);
/// Accepts "T1", "T2", "T3".
Stratum parse_stratum(const std::string& text);

/// T1: 3P = 0; T2: 6P = 0, 3P != 0; T3: 12P = 0, 6P != 0.
Stratum stratify(const TorsionPoint& p);

struct StratumSizes {
  long t1 = 0;
  long t2 = 0;
  long t3 = 0;

  long of(Stratum s) const;
  friend bool operator==(const StratumSizes&, const StratumSizes&) = default;
};

/// Sizes of T1, T2, T3, counted over the 12-torsion.
StratumSizes stratum_sizes();

/// All m^2 solutions of mP = c, sorted.
std::vector<TorsionPoint> solve_division(const TorsionPoint& c, long m);

/// Images of the marked points of the blown-down plane cubic.
struct MarkedCubicConfig {
  std::array<TorsionPoint, 6> p;  // the six blown-up flexes P_1..P_6
  TorsionPoint o_prime;           // a flex of the image cubic, order 9
  std::array<TorsionPoint, 3> q;  // the remaining three flexes

  static MarkedCubicConfig standard();
  bool well_formed() const;
};

/// Group element of A restricted to the cubic: 3e * O' - sum a_i P_i.
TorsionPoint restriction_class(const DivisorClass& a, const MarkedCubicConfig& cfg = MarkedCubicConfig::standard());

/// For a degree-4 class A with p_a = 1, A + K is a (-1)-curve; this is its
/// point on the cubic. Equals P_i when A = 3H - sum_{j != i} E_j.
TorsionPoint residual_point(const DivisorClass& a, const MarkedCubicConfig& cfg = MarkedCubicConfig::standard());

}  // namespace tangentia
