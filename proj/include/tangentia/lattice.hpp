#pragma once

// Picard lattice of the plane blown up in six points: classes e*H - sum a_i E_i
// with the pairing e1*e2 - sum a_i b_i.

#include <array>
#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace tangentia {

struct DivisorClass {
  long e = 0;
  std::array<long, 6> a{};

  static DivisorClass hyperplane() { return {1, {}}; }
  static DivisorClass exceptional(int index);  // 1-based
  static DivisorClass canonical() { return {-3, {-1, -1, -1, -1, -1, -1}}; }

  /// Parses literals such as "4H-E1-E2-2E3", "3H-E1-E2-E3-E4-E5", "H", "0".
  /// Throws std::invalid_argument on malformed text.
  static DivisorClass parse(std::string_view text);

  /// Inverse of parse; zero coefficients are omitted, the zero class is "0".
  std::string str() const;

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

long pairing(const DivisorClass& c1, const DivisorClass& c2);

/// (e-1)(e-2)/2 - sum a_i(a_i-1)/2; may be negative.
long arithmetic_genus(const DivisorClass& c);

/// Anticanonical degree 3e - sum a_i.
long tangency_degree(const DivisorClass& c);

/// Number of distinct orderings of a length-6 sequence: 6!/prod(mult!).
long ordered_count(const std::array<long, 6>& values);

struct ClassTableRow {
  long e = 0;
  std::array<long, 6> a_multiset{};  // ascending
  long p_a = 0;
  long ordered_count = 0;

  friend bool operator==(const ClassTableRow&, const ClassTableRow&) = default;
};

struct ClassTable {
  long target_degree = 4;
  // Only the degree-4 search has been checked against published data.
  bool validated = false;
  std::vector<ClassTableRow> rows;

  long ordered_total(long p_a) const;
};

/// Unordered classes with 0 <= a_i <= target_degree, 2 <= e <= 7*target/3,
/// 3e = target + sum a_i and p_a >= 0, sorted by (e, a_multiset).
ClassTable enumerate_classes(long target_degree = 4);

/// Every ordered class (e, a_1..a_6) underlying enumerate_classes.
std::vector<DivisorClass> enumerate_ordered_classes(long target_degree = 4);

/// One quadratic transformation centred at the distinct indices i, j, k.
DivisorClass quadratic_transform(const DivisorClass& c, int i, int j, int k);

/// Reduction steps from c down to the reduced class (before the final sort).
/// Element 0 is c itself. Throws std::invalid_argument when c is outside the
/// degree-4, p_a in {0,1} hypotheses and std::runtime_error if the iteration
/// cap is hit.
std::vector<DivisorClass> cremona_trace(const DivisorClass& c);

/// Reduced form with a sorted descending: (2,[1,1,0,0,0,0]) for p_a = 0 and
/// (3,[1,1,1,1,1,0]) for p_a = 1.
DivisorClass cremona_reduce(const DivisorClass& c);

inline constexpr int kCremonaIterationCap = 100;

}  // namespace tangentia
