#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "pakstanley/psi.hpp"
#include "pakstanley/verify.hpp"

using namespace pakstanley;

namespace {

Sketch word(const std::string& text, int m, int n) { return validate_sketch(parse_letters(text), m, n); }

ParkingFunction pf(std::initializer_list<int> values) { return ParkingFunction{values}; }

// p_i counts letters alpha_j^s before alpha_i^0 with s in S+_{i,j}.
std::vector<int> phi_by_hand(const Arrangement& a, const Sketch& w) {
  std::vector<int> p(a.n(), 0);
  for (int i = 1; i <= a.n(); ++i) {
    for (const Letter& x : w.word()) {
      if (x == Letter{i, 0}) break;
      if (x.index != i && oracle::splus(a, i, x.index).count(x.level)) ++p[i - 1];
    }
  }
  return p;
}

}  // namespace

TEST_CASE("phi") {
  const auto shi = fixtures::shi1_n3();
  CHECK(phi(shi, fundamental_sketch(1, 3)) == pf({0, 0, 0}));
  CHECK(phi(shi, word("a2^0 a3^0 a2^1 a1^0 a3^1 a1^1", 1, 3)) == pf({1, 0, 1}));
  CHECK(phi(fixtures::two_shi_pairs(), word("a2^0 a3^0 a2^1 a3^1 a1^0 a1^1", 1, 3)) ==
        pf({1, 0, 1}));
  for (const auto& a : {shi, fixtures::a1(), fixtures::a2(), fixtures::shi2_n3()}) {
    for (const auto& w : enumerate_sketches(a.m(), 3)) CHECK(phi(a, w).values == phi_by_hand(a, w));
  }
}

TEST_CASE("psi on the two traced examples") {
  CHECK(to_string(psi(fixtures::shi1_n3(), pf({1, 0, 1}))) == "a2^0 a3^0 a2^1 a1^0 a3^1 a1^1");
  CHECK(to_string(psi(fixtures::two_shi_pairs(), pf({1, 0, 1}))) ==
        "a2^0 a3^0 a2^1 a3^1 a1^0 a1^1");

  const auto trace = psi_trace(fixtures::shi1_n3(), pf({1, 0, 1}));
  REQUIRE(trace.size() == 7);
  CHECK(trace[0].tuple == std::vector<int>{1, 0, 1});
  CHECK(trace[0].queue.empty());
  CHECK(trace[0].letter == Letter{2, 0});
  CHECK(trace[1].tuple == std::vector<int>{1, -1, 0});
  CHECK(trace[1].queue == std::vector<int>{2});
  CHECK(trace.back().tuple == std::vector<int>{-2, -2, -2});
  CHECK(trace.back().queue.empty());
  CHECK_FALSE(trace.back().letter);
}

TEST_CASE("psi of the zero tuple is the fundamental sketch") {
  for (const auto& a : {fixtures::shi1_n3(), fixtures::a1(), fixtures::a2(), fixtures::empty(3),
                        fixtures::shi2_n3(), build_from_m_eps(fixtures::m103_data())}) {
    CAPTURE(describe(a));
    CHECK(psi(a, pf({0, 0, 0})) == fundamental_sketch(a.m(), 3));
    CHECK(inverse_region(a, pf({0, 0, 0})) == base_region(a));
  }
}

TEST_CASE("phi(psi(p)) = p and the trace invariants") {
  const auto battery = exhaustive_battery(3, -2, 2);
  for (std::size_t k = 0; k < battery.size(); k += 13) {
    const auto& a = battery[k];
    CAPTURE(describe(a));
    for (const auto& raw : oracle::parking_functions(a)) {
      const ParkingFunction p{raw};
      const auto trace = psi_trace(a, p);
      const auto& w = trace.back().emitted;
      REQUIRE(oracle::is_sketch(w, a.m(), 3));
      const auto sketch = validate_sketch(w, a.m(), 3);
      CHECK(phi_by_hand(a, sketch) == raw);
      CHECK(in_m(sketch, a));
      CHECK(trace.back().tuple == std::vector<int>(3, -(a.m() + 1)));
    }
  }
}

TEST_CASE("inverse_region") {
  const auto shi = fixtures::shi1_n3();
  const auto table = enumerate_regions(shi);
  for (std::size_t r = 0; r < table.regions.size(); ++r) {
    CHECK(inverse_region(shi, table.labels[r]) == table.regions[r]);
  }
  const auto a1 = fixtures::a1();
  for (const auto& p : enumerate_parking(build_d_graph(a1))) {
    CHECK(gps_label(a1, inverse_region(a1, p)) == p);
  }
}

TEST_CASE("non-parking input") {
  const auto shi = fixtures::shi1_n3();
  try {
    psi_trace(shi, pf({9, 9, 9}));
    FAIL("accepted a non-parking tuple");
  } catch (const NotParkingError& e) {
    CHECK(e.burned() == std::vector<bool>{false, false, false});
  }
  CHECK_THROWS_AS(psi(shi, pf({1, 1, 1})), NotParkingError);
  CHECK_THROWS_AS(psi(shi, pf({0, 0})), ParkingError);
}

TEST_CASE("the leftmost-zero rule is not a right inverse") {
  // Emitting a1^0 a2^0 a3^0 for the empty arrangement leaves M_S.
  const auto w = psi(fixtures::empty(3), pf({0, 0, 0}), ZeroRule::leftmost);
  CHECK(to_string(w) == "a1^0 a2^0 a3^0");
  CHECK_FALSE(in_m(w, fixtures::empty(3)));
}

TEST_CASE("format_trace") {
  // 1-Shi, n = 2: S+_{1,2} = {1}, S+_{2,1} = {0}.
  const auto trace = psi_trace(fixtures::shi1_n2(), pf({1, 0}));
  CHECK(format_trace(trace) ==
        "r  P_r      O_r  w_r\n"
        "1  (1,0)    []   a2^0\n"
        "2  (1,-1)   [2]  a2^1\n"
        "3  (0,-2)   []   a1^0\n"
        "4  (-1,-2)  [1]  a1^1\n"
        "5  (-2,-2)  []   -\n"
        "sketch: a2^0 a2^1 a1^0 a1^1\n");
}
