#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "pakstanley/parking.hpp"
#include "pakstanley/verify.hpp"

using namespace pakstanley;

namespace {

ParkingFunction pf(std::initializer_list<int> values) { return ParkingFunction{values}; }

std::vector<int> out_degrees(const DirectedMultigraph& d) {
  std::vector<int> out;
  for (int u = 1; u <= d.n(); ++u) out.push_back(d.out_degree(u));
  return out;
}

}  // namespace

TEST_CASE("build_d_graph") {
  const auto d = build_d_graph(fixtures::two_shi_pairs());
  CHECK(out_degrees(d) == std::vector<int>{2, 3, 3});
  CHECK(d.arcs(1, 2) == 0);
  CHECK(d.arcs(2, 1) == 1);
  CHECK(d.arcs(1, 3) == 1);
  CHECK(d.arcs(3, 1) == 1);
  CHECK(d.arcs(2, 3) == 1);
  CHECK(d.arcs(3, 2) == 1);
  for (int u = 1; u <= 3; ++u) CHECK(d.arcs(u, d.root()) == 1);

  CHECK(out_degrees(build_d_graph(fixtures::empty(2))) == std::vector<int>{1, 1});
  const auto shi = build_d_graph(fixtures::shi1_n3());
  CHECK(out_degrees(shi) == std::vector<int>{3, 3, 3});
  for (int u = 1; u <= 3; ++u) {
    for (int v = 1; v <= 3; ++v) {
      if (u != v) CHECK(shi.arcs(u, v) == 1);
    }
  }
}

TEST_CASE("parking predicates") {
  const auto shi = build_d_graph(fixtures::shi1_n3());
  CHECK(is_parking_naive(shi, pf({0, 0, 0})));
  CHECK_FALSE(is_parking_naive(shi, pf({1, 1, 1})));
  CHECK(is_parking_naive(shi, pf({0, 1, 2})));
  CHECK(is_parking_burning(shi, pf({0, 0, 0})));
  CHECK_FALSE(is_parking_burning(shi, pf({2, 2, 2})));

  const auto burned = burn(shi, pf({2, 2, 2}));
  CHECK_FALSE(burned.parking);
  CHECK(burned.burned == std::vector<bool>{false, false, false});

  CHECK_THROWS_AS(is_parking_naive(shi, pf({0, 0})), ParkingError);
  CHECK_THROWS_AS(is_parking_burning(shi, pf({0, -1, 0})), ParkingError);
}

TEST_CASE("burning agrees with the subset definition on every tuple below the out-degrees") {
  for (const auto& a : exhaustive_battery(2, -2, 2)) {
    const auto d = build_d_graph(a);
    for (int p1 = 0; p1 < d.out_degree(1); ++p1) {
      for (int p2 = 0; p2 < d.out_degree(2); ++p2) {
        CHECK(is_parking_naive(d, pf({p1, p2})) == is_parking_burning(d, pf({p1, p2})));
      }
    }
  }
  // n = 3: a deterministic slice of the battery.
  const auto battery = exhaustive_battery(3, -2, 2);
  for (std::size_t k = 0; k < battery.size(); k += 97) {
    const auto d = build_d_graph(battery[k]);
    for (const auto& p : oracle::parking_functions(battery[k])) {
      CHECK(is_parking_burning(d, ParkingFunction{p}));
    }
    CHECK(enumerate_parking(d).size() == oracle::parking_functions(battery[k]).size());
  }
}

TEST_CASE("enumerate_parking") {
  const auto shi2 = enumerate_parking(build_d_graph(fixtures::shi1_n2()));
  CHECK(shi2 == std::vector<ParkingFunction>{pf({0, 0}), pf({0, 1}), pf({1, 0})});
  CHECK(enumerate_parking(build_d_graph(fixtures::shi1_n3())).size() == 16);
  CHECK(enumerate_parking(build_d_graph(fixtures::two_shi_pairs())).size() == 12);

  std::vector<ParkingFunction> expected;
  const auto m103 = build_from_m_eps(fixtures::m103_data());
  for (const auto& p : oracle::parking_functions(m103)) expected.push_back(ParkingFunction{p});
  CHECK(enumerate_parking(build_d_graph(m103)) == expected);
}

TEST_CASE("matrix-tree count") {
  CHECK(count_parking_determinant(build_d_graph(fixtures::shi1_n3())) == 16);
  CHECK(count_parking_determinant(build_d_graph(fixtures::two_shi_pairs())) == 12);
  CHECK(count_parking_determinant(build_d_graph(fixtures::empty(1))) == 1);

  // Classical counts: (mn+1)^(n-1) m-parking functions for the m-Shi arrangement.
  CHECK(count_parking_determinant(build_d_graph(shi_arrangement(4, 2))) == 9 * 9 * 9);
  CHECK(count_parking_determinant(build_d_graph(shi_arrangement(5, 1))) == 6 * 6 * 6 * 6);
  CHECK(count_parking_determinant(build_d_graph(catalan_arrangement(4, 1))) ==
        oracle::catalan_regions(4, 1));

  for (const auto& a : exhaustive_battery(4, 0, 1)) {
    const auto d = build_d_graph(a);
    REQUIRE(count_parking_determinant(d) == std::int64_t(enumerate_parking(d).size()));
  }
}

TEST_CASE("parking function text") {
  CHECK(parse_parking_function("1,0,1") == pf({1, 0, 1}));
  CHECK(parse_parking_function("(1,0,1)") == pf({1, 0, 1}));
  CHECK(parse_parking_function("1 0 1") == pf({1, 0, 1}));
  CHECK(to_string(pf({1, 0, 1})) == "(1,0,1)");
  CHECK_THROWS_AS(parse_parking_function("1,-1"), ParkingError);
  CHECK_THROWS_AS(parse_parking_function("1,x"), ParkingError);
  CHECK_THROWS_AS(parse_parking_function(""), ParkingError);
}
