#include <map>

#include "doctest.h"
#include "fixtures.hpp"
#include "oracles.hpp"
#include "pakstanley/arrangement.hpp"
#include "pakstanley/verify.hpp"

using namespace pakstanley;

namespace {

std::vector<int> vec(std::initializer_list<int> values) { return values; }

// S sets of the (m, eps)-arrangement, from the interval formulas.
OffsetSets m_eps_sets(const MEpsData& d) {
  OffsetSets sets;
  for (int i = 1; i <= d.n(); ++i) {
    for (int j = 1; j <= d.n(); ++j) {
      if (i == j) continue;
      const int top = d.m[j - 1] - d.epsilon(i, j);
      for (int s = i < j ? 1 : 0; s <= top; ++s) {
        if (i < j) sets[{i, j}].insert(s);
        else sets[{j, i}].insert(-s);
      }
    }
  }
  return sets;
}

bool monotone(const MEpsData& d) {
  for (int k = 1; k <= d.n(); ++k) {
    for (int i = 1; i <= d.n(); ++i) {
      for (int j = i + 1; j <= d.n(); ++j) {
        if (i != k && j != k && d.epsilon(i, k) > d.epsilon(j, k)) return false;
      }
    }
  }
  return true;
}

// Smallest (m, eps) witness for every n=3 (m, eps)-arrangement with m_k <= 3.
std::map<std::vector<Hyperplane>, MEpsData> witness_table() {
  std::map<std::vector<Hyperplane>, MEpsData> table;
  const int pairs[6][2] = {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};
  for (int code = 0; code < 64; ++code) {
    for (int mc = 0; mc < 64; ++mc) {
      MEpsData d = MEpsData::zeros(3);
      d.m = {mc / 16, mc / 4 % 4, mc % 4};
      for (int b = 0; b < 6; ++b) d.set_epsilon(pairs[b][0], pairs[b][1], code >> b & 1);
      if (!monotone(d)) continue;
      const auto key = build_from_sets(3, m_eps_sets(d)).hyperplanes();
      auto [it, inserted] = table.emplace(key, d);
      if (!inserted && std::pair(d.m, d.eps) < std::pair(it->second.m, it->second.eps)) it->second = d;
    }
  }
  return table;
}

}  // namespace

TEST_CASE("build_from_sets") {
  const auto fig3 = fixtures::two_shi_pairs();
  CHECK(fig3.size() == 5);
  CHECK(fixtures::empty(2).size() == 0);
  CHECK(fixtures::shi1_n3().size() == 6);
  CHECK(fig3.m() == 1);
  CHECK(fig3.offsets(1, 3) == vec({0, 1}));

  CHECK_THROWS_AS(build_from_sets(3, {{{2, 1}, {0}}}), ArrangementError);
  CHECK_THROWS_AS(build_from_sets(3, {{{1, 4}, {0}}}), ArrangementError);
  CHECK_THROWS_AS(build_from_sets(0, {}), ArrangementError);
}

TEST_CASE("build_from_hyperplanes normalises reversed pairs") {
  const auto a = build_from_hyperplanes(3, {{3, 2, 1}, {1, 2, 0}, {2, 3, -1}});
  CHECK(a.size() == 2);
  CHECK(a.contains({2, 3, -1}));
  CHECK(a.splus(3, 2) == vec({1}));
}

TEST_CASE("build_from_m_eps") {
  SUBCASE("m = (1,0,3), eps_{2,3} = 1") {
    const auto a = build_from_m_eps(fixtures::m103_data());
    const auto expected = build_from_sets(3, {{{1, 2}, {-1, 0}},
                                               {{1, 3}, {-1, 0, 1, 2, 3}},
                                               {{2, 3}, {0, 1, 2}}});
    CHECK(a == expected);
    CHECK(a.m() == 3);
  }
  SUBCASE("eps = 0 gives m-Catalan, eps_{i,j} = [i > j] gives m-Shi") {
    for (int m = 0; m <= 2; ++m) {
      auto data = MEpsData::zeros(3);
      data.m = {m, m, m};
      CHECK(build_from_m_eps(data) == catalan_arrangement(3, m));
      for (int i = 1; i <= 3; ++i) {
        for (int j = 1; j < i; ++j) data.set_epsilon(i, j, 1);
      }
      if (m >= 1) CHECK(build_from_m_eps(data) == shi_arrangement(3, m));
    }
    CHECK(shi_arrangement(3, 1) == fixtures::shi1_n3());
    CHECK(shi_arrangement(3, 2) == fixtures::shi2_n3());
    CHECK(catalan_arrangement(3, 1) == fixtures::catalan1_n3());
  }
  SUBCASE("invalid data") {
    auto data = MEpsData::zeros(3);
    data.set_epsilon(1, 3, 1);  // eps_{1,3} > eps_{2,3}
    CHECK_THROWS_AS(build_from_m_eps(data), ArrangementError);
    data = MEpsData::zeros(3);
    data.m[0] = -1;
    CHECK_THROWS_AS(build_from_m_eps(data), ArrangementError);
    data = MEpsData::zeros(3);
    data.set_epsilon(2, 1, 2);
    CHECK_THROWS_AS(build_from_m_eps(data), ArrangementError);
  }
}

TEST_CASE("splus and in_triple") {
  const auto shi = fixtures::shi1_n3();
  CHECK(splus(shi, 1, 2) == vec({1}));
  CHECK(splus(shi, 2, 1) == vec({0}));
  CHECK(splus(fixtures::two_shi_pairs(), 1, 2).empty());

  CHECK(in_triple(fixtures::a1(), 1, 2, 0));
  CHECK(in_triple(fixtures::two_shi_pairs(), 3, 2, 0));
  CHECK_FALSE(in_triple(shi, 1, 2, 2));
  CHECK_FALSE(in_triple(fixtures::empty(3), 2, 1, 0));
  CHECK_THROWS_AS(in_triple(shi, 1, 2, -1), ArrangementError);
  CHECK_THROWS_AS(splus(shi, 2, 2), ArrangementError);
}

TEST_CASE("transitivity, (X) and (Y) on named arrangements") {
  CHECK(is_transitive(fixtures::shi1_n3()));
  CHECK_FALSE(is_transitive(build_from_sets(3, {{{1, 3}, {0}}})));

  CHECK(holds_x(fixtures::a2()));
  CHECK_FALSE(holds_y(fixtures::a2()));
  CHECK_FALSE(holds_x(fixtures::a1()));
  CHECK(holds_y(fixtures::a1()));

  for (int n = 2; n <= 4; ++n) {
    for (int m = 0; m <= 2; ++m) {
      CAPTURE(n);
      CAPTURE(m);
      CHECK(holds_y(catalan_arrangement(n, m)));
      CHECK(holds_x(catalan_arrangement(n, m)));
      CHECK(is_transitive(catalan_arrangement(n, m)));
    }
  }
}

TEST_CASE("every n=3 (m, eps)-arrangement with m_k <= 2 is transitive with (X) and (Y)") {
  for (const auto& [key, data] : witness_table()) {
    if (*std::max_element(data.m.begin(), data.m.end()) > 2) continue;
    const auto a = build_from_hyperplanes(3, key);
    CAPTURE(describe(a));
    CHECK(is_transitive(a));
    CHECK(holds_x(a));
    CHECK(holds_y(a));
  }
}

TEST_CASE("recognize_m_eps on named arrangements") {
  const auto fig3 = recognize_m_eps(fixtures::two_shi_pairs());
  REQUIRE(fig3);
  CHECK(fig3->m == vec({0, 0, 1}));
  CHECK(fig3->eps == std::vector<int>(9, 0));

  CHECK_FALSE(recognize_m_eps(fixtures::a1()));
  CHECK_FALSE(recognize_m_eps(fixtures::a2()));

  // All S+ sets empty needs m_1 - eps_{2,1} = -1.
  const auto empty = recognize_m_eps(fixtures::empty(2));
  REQUIRE(empty);
  CHECK(empty->m == vec({0, 0}));
  CHECK(empty->epsilon(2, 1) == 1);
  CHECK(empty->epsilon(1, 2) == 0);

  const auto m103 = build_from_m_eps(fixtures::m103_data());
  const auto back = recognize_m_eps(m103);
  REQUIRE(back);
  CHECK(build_from_m_eps(*back) == m103);
}

TEST_CASE("recognize_m_eps agrees with brute force on the n=3 [-2;2] battery") {
  const auto table = witness_table();
  std::size_t recognised = 0;
  for (const auto& a : exhaustive_battery(3, -2, 2)) {
    const auto got = recognize_m_eps(a);
    const auto it = table.find(a.hyperplanes());
    if (it == table.end()) {
      if (got) FAIL_CHECK("unexpected witness for " << describe(a));
      continue;
    }
    ++recognised;
    REQUIRE_MESSAGE(got, describe(a));
    CHECK(*got == it->second);
  }
  CHECK(recognised > 0);
}

TEST_CASE("derived bound and rendering") {
  CHECK(fixtures::empty(3).m() == 0);
  CHECK(fixtures::a2().m() == 1);
  CHECK(build_from_sets(2, {{{1, 2}, {-3}}}).m() == 3);
  CHECK(to_string(Hyperplane{1, 2, -1}) == "x1-x2=-1");
  CHECK(describe(fixtures::a1()) == "n=3 {x1-x3=0, x2-x3=0}");
  for (const auto& a : exhaustive_battery(2, -3, 3)) {
    for (const auto& h : a.hyperplanes()) CHECK(std::abs(h.offset) <= a.m());
  }
}
