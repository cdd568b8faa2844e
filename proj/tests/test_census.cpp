#include "doctest.h"
#include "tangentia/census.hpp"
#include "tangentia/lattice.hpp"

using tangentia::CensusStratum;
using tangentia::Stratum;

TEST_CASE("per-class curve counts") {
  CHECK(tangentia::class_curve_counts(0).n == std::array<long, 3>{1, 3, 12});
  CHECK(tangentia::class_curve_counts(1).n == std::array<long, 3>{0, 18, 96});
  CHECK_THROWS_AS(tangentia::class_curve_counts(2), std::invalid_argument);
  CHECK_THROWS_AS(tangentia::class_curve_counts(-1), std::invalid_argument);
}

TEST_CASE("euler budget") {
  CHECK(tangentia::euler_budget(12, 6) == 6);
  CHECK(tangentia::euler_budget(12, 4) == 8);
  CHECK(tangentia::euler_budget(12, 10) == 2);
  CHECK(tangentia::euler_budget(12, 9) == 3);
  CHECK(tangentia::euler_budget(12, 12) == 0);
  CHECK_THROWS_AS(tangentia::euler_budget(12, 13), std::invalid_argument);
}

TEST_CASE("aggregate N and #M_4") {
  const auto n = tangentia::aggregate_N();
  CHECK(n.n1 == 216 * 1 + 27 * 0);
  CHECK(n.n2 == 216 * 3 + 27 * 3 * 6);
  CHECK(n.n3 == 216 * 12 + 27 * 12 * 8);
  CHECK(n == tangentia::AggregateN{216, 1134, 5184});
  CHECK(tangentia::count_M4(Stratum::T1) == 8);
  CHECK(tangentia::count_M4(Stratum::T2) == 14);
  CHECK(tangentia::count_M4(Stratum::T3) == 16);
  const auto sizes = tangentia::stratum_sizes();
  for (auto s : {Stratum::T1, Stratum::T2, Stratum::T3}) CHECK(n.of(s) % (3 * sizes.of(s)) == 0);
  CHECK(9 * 8 + 27 * 14 + 108 * 16 == 2178);
  CHECK((n.n1 + n.n2 + n.n3) / 3 == 2178);
  CHECK((n.n1 + n.n2 + n.n3) % 3 == 0);
}

TEST_CASE("boundary census entries") {
  const auto t1 = tangentia::boundary_census(4, CensusStratum::T1);
  REQUIRE(t1.components.size() == 3);
  CHECK(std::get<tangentia::MultipleCover>(t1.components[0].kind).multiplicity == 4);
  CHECK(t1.components[0].count == 1);
  const auto pair = std::get<tangentia::ReduciblePair>(t1.components[1].kind);
  CHECK(pair.d1 == 3);
  CHECK(pair.d2 == 9);
  CHECK(t1.components[1].count == 2);
  CHECK(t1.components[2].count == 8);

  const auto t2 = tangentia::boundary_census(4, CensusStratum::T2);
  REQUIRE(t2.components.size() == 2);
  CHECK(std::get<tangentia::MultipleCover>(t2.components[0].kind).base_degree == 2);
  CHECK(t2.components[1].count == 14);

  const auto line = tangentia::boundary_census(1, CensusStratum::T1);
  REQUIRE(line.components.size() == 1);
  CHECK(line.components[0].count == 1);

  CHECK(tangentia::boundary_census(3, CensusStratum::T1).components[1].count == 2);
  CHECK(tangentia::boundary_census(3, CensusStratum::NonFlex9Torsion).components[0].count == 3);
  CHECK(tangentia::boundary_census(3, CensusStratum::T1, true).components[1].count == 1);
}

TEST_CASE("census configurations have the stated degree") {
  const std::vector<std::pair<long, CensusStratum>> valid{
      {1, CensusStratum::T1}, {2, CensusStratum::T1}, {2, CensusStratum::T2}, {3, CensusStratum::T1},
      {3, CensusStratum::NonFlex9Torsion}, {4, CensusStratum::T1}, {4, CensusStratum::T2}, {4, CensusStratum::T3}};
  for (const auto& [d, s] : valid)
    for (const auto& c : tangentia::boundary_census(d, s).components) CHECK(tangentia::curve_degree(c.kind) == d);
}

TEST_CASE("immersed quartic counts agree with the lattice census") {
  for (auto s : {Stratum::T1, Stratum::T2, Stratum::T3}) {
    long immersed = 0;
    for (const auto& c : tangentia::boundary_census(4, tangentia::to_census_stratum(s)).components)
      if (std::holds_alternative<tangentia::ImmersedCurve>(c.kind)) immersed += c.count;
    CHECK(immersed == tangentia::count_M4(s));
  }
}

TEST_CASE("inconsistent census requests") {
  CHECK_THROWS_AS(tangentia::boundary_census(1, CensusStratum::T2), std::invalid_argument);
  CHECK_THROWS_AS(tangentia::boundary_census(2, CensusStratum::T3), std::invalid_argument);
  CHECK_THROWS_AS(tangentia::boundary_census(3, CensusStratum::T2), std::invalid_argument);
  CHECK_THROWS_AS(tangentia::boundary_census(4, CensusStratum::NonFlex9Torsion), std::invalid_argument);
  CHECK_THROWS_AS(tangentia::boundary_census(5, CensusStratum::T1), std::invalid_argument);
  CHECK_THROWS_AS(tangentia::boundary_census(4, CensusStratum::T1, true), std::invalid_argument);
  CHECK_THROWS_AS(tangentia::parse_census_stratum("T4"), std::invalid_argument);
}

TEST_CASE("tangency point counts per stratum") {
  CHECK(tangentia::stratum_point_count(1, CensusStratum::T1) == 9);
  CHECK(tangentia::stratum_point_count(2, CensusStratum::T2) == 27);
  CHECK(tangentia::stratum_point_count(3, CensusStratum::NonFlex9Torsion) == 72);
  CHECK(tangentia::stratum_point_count(4, CensusStratum::T3) == 108);
}
