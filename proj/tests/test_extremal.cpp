#include <doctest.h>

#include "unicyclic/enumeration.hpp"
#include "unicyclic/errors.hpp"
#include "unicyclic/extremal.hpp"
#include "unicyclic/majorization.hpp"

using namespace unicyclic;

namespace {

DegreeSequence seq(std::vector<int> v) { return DegreeSequence(std::move(v)); }

}  // namespace

TEST_SUITE("extremal") {
  TEST_CASE("derived quantities") {
    const auto d73 = delta_quantities(7, 3);
    CHECK(d73.q == 3);
    CHECK(d73.r == 2);
    CHECK(d73.s == 5);
    CHECK_FALSE(d73.two_hub_case);
    CHECK(delta_quantities(6, 4).two_hub_case);
    CHECK(delta_quantities(8, 7).two_hub_case);
    const auto p62 = pendant_quantities(6, 2);
    CHECK(p62.m == 2);
    CHECK(p62.t == 2);
    const auto p74 = pendant_quantities(7, 4);
    CHECK(p74.m == 3);
    CHECK(p74.t == 1);
    CHECK_THROWS_AS(delta_quantities(7, 2), ParameterError);
    CHECK_THROWS_AS(delta_quantities(7, 7), ParameterError);
    CHECK_THROWS_AS(pendant_quantities(7, 5), ParameterError);
    CHECK_THROWS_AS(pendant_quantities(7, 0), ParameterError);
  }

  TEST_CASE("sequences") {
    CHECK(y_sequence(7, 4) == seq({4, 2, 2, 2, 2, 1, 1}));
    CHECK(y_sequence(4, 3) == seq({3, 2, 2, 1}));
    CHECK(y_sequence(6, 5) == seq({5, 2, 2, 1, 1, 1}));
    CHECK(z_sequence(7, 3) == seq({3, 3, 3, 2, 1, 1, 1}));
    CHECK(z_sequence(6, 4) == seq({4, 3, 2, 1, 1, 1}));
    CHECK(z_sequence(8, 7) == seq({7, 2, 2, 1, 1, 1, 1, 1}));
    CHECK(z_sequence(9, 4) == seq({4, 4, 4, 1, 1, 1, 1, 1, 1}));
    CHECK(a_sequence(6, 2) == seq({3, 3, 2, 2, 1, 1}));
    CHECK(a_sequence(5, 2) == seq({3, 3, 2, 1, 1}));
    CHECK(a_sequence(7, 4) == seq({4, 3, 3, 1, 1, 1, 1}));
    CHECK(b_sequence(6, 2) == seq({4, 2, 2, 2, 1, 1}));
  }

  TEST_CASE("constructors") {
    CHECK(degree_sequence(build_un3(5)) == seq({4, 2, 2, 1, 1}));
    CHECK(degree_sequence(build_cycle(4)) == seq({2, 2, 2, 2}));
    CHECK_THROWS_AS(build_cycle(2), ParameterError);
    CHECK_THROWS_AS(build_un3(3), ParameterError);

    const std::vector<int> two_two{2, 2};
    CHECK(degree_sequence(build_H_member(7, 4, 3, two_two)) == seq({4, 2, 2, 2, 2, 1, 1}));
    const std::vector<int> two{2};
    const auto h634 = build_H_member(6, 3, 4, two);
    CHECK(degree_sequence(h634) == seq({3, 2, 2, 2, 2, 1}));
    const std::vector<int> ones{1, 1};
    CHECK(canonical_code(build_H_member(5, 4, 3, ones)) == canonical_code(build_un3(5)));
    const std::vector<int> with_zero{0, 4};
    CHECK_THROWS_AS(build_H_member(7, 4, 3, with_zero), ParameterError);
    const std::vector<int> wrong_sum{1, 1};
    CHECK_THROWS_AS(build_H_member(7, 4, 3, wrong_sum), ParameterError);
    const std::vector<int> wrong_count{1, 1, 1};
    CHECK_THROWS_AS(build_H_member(7, 4, 4, wrong_count), ParameterError);

    CHECK(degree_sequence(build_K_member(7, 3)) == seq({3, 3, 3, 2, 1, 1, 1}));
    CHECK(degree_sequence(build_K_member(6, 4)) == seq({4, 3, 2, 1, 1, 1}));
    CHECK(degree_sequence(build_K_member(9, 4)) == seq({4, 4, 4, 1, 1, 1, 1, 1, 1}));

    CHECK(degree_sequence(build_b_member(6, 2)) == seq({4, 2, 2, 2, 1, 1}));
    CHECK(degree_sequence(build_b_member(5, 1)) == seq({3, 2, 2, 2, 1}));
    CHECK(canonical_code(build_b_member(7, 4)) == canonical_code(build_un3(7)));
  }

  TEST_CASE("membership") {
    CHECK(is_member(build_K_member(7, 3), family::K{7, 3}));
    CHECK_FALSE(is_member(build_cycle(7), family::H{7, 3}));
    CHECK(is_member(build_un3(5), family::UnThree{5}));
    CHECK(is_member(build_cycle(5), family::Cycle{5}));
    CHECK(is_member(build_un3(6), family::H{6, 5}));
    // Degree sequence right, but not unicyclic.
    const auto forest = disjoint_union(build_cycle(3), build_cycle(3));
    CHECK_FALSE(is_member(forest, family::Cycle{6}));
  }

  TEST_CASE("family descriptors") {
    CHECK(to_string(ExtremalFamily{family::H{7, 4}}) == "H(7,4)");
    CHECK(defining_sequence(family::SeqA{6, 2}) == seq({3, 3, 2, 2, 1, 1}));
    CHECK_THROWS_AS(validate(family::SeqB{6, 4}), ParameterError);
    CHECK_THROWS_AS(validate(family::K{4, 4}), ParameterError);
  }

  TEST_CASE("constructor sweep up to n = 10") {
    for (int n = 4; n <= 10; ++n) {
      CHECK(is_unicyclic(build_cycle(n)));
      CHECK(is_unicyclic(build_un3(n)));
      CHECK(degree_sequence(build_un3(n)) == defining_sequence(family::UnThree{n}));
      for (int d = 3; d <= n - 1; ++d) {
        CAPTURE(n);
        CAPTURE(d);
        const auto y = y_sequence(n, d), z = z_sequence(n, d);
        CHECK(in_class(y, S2nDelta{n, d}));
        CHECK(in_class(z, S2nDelta{n, d}));
        CHECK(majorizes(z, y));
        const auto h = build_H_member(n, d);
        const auto k = build_K_member(n, d);
        CHECK(is_unicyclic(h));
        CHECK(is_unicyclic(k));
        CHECK(degree_sequence(h) == y);
        CHECK(degree_sequence(k) == z);
        CHECK(is_member(h, family::H{n, d}));
        CHECK(is_member(k, family::K{n, d}));
        // Every cycle length and an uneven split of the paths.
        for (int cycle = 3; cycle <= n - d + 2; ++cycle) {
          std::vector<int> lengths(d - 2, 1);
          lengths.front() += n - cycle - (d - 2);
          const auto g = build_H_member(n, d, cycle, lengths);
          CHECK(is_unicyclic(g));
          CHECK(degree_sequence(g) == y);
        }
      }
      CHECK(z_sequence(n, n - 1) == defining_sequence(family::UnThree{n}));
      CHECK(y_sequence(n, n - 1) == defining_sequence(family::UnThree{n}));
      for (int p = 1; p <= n - 3; ++p) {
        CAPTURE(n);
        CAPTURE(p);
        const auto pq = pendant_quantities(n, p);
        CHECK(pq.m >= 2);
        CHECK(pq.t >= 0);
        CHECK(pq.t <= n - p);
        const auto a = a_sequence(n, p), b = b_sequence(n, p);
        CHECK(in_class(a, S2nP{n, p}));
        CHECK(in_class(b, S2nP{n, p}));
        CHECK(majorizes(b, a));
        const auto g = build_b_member(n, p);
        CHECK(is_unicyclic(g));
        CHECK(degree_sequence(g) == b);
      }
    }
  }

  TEST_CASE("majorization chains over every unicyclic graph, n = 4..8") {
    for (int n = 4; n <= 8; ++n) {
      const std::vector<int> twos(n, 2);
      const DegreeSequence cycle(twos);
      const auto top = defining_sequence(family::UnThree{n});
      for (const auto& g : enumerate_unicyclic(n)) {
        const auto x = degree_sequence(g);
        CHECK(in_class(x, S2n{n}));
        CHECK(majorizes(x, cycle));
        CHECK(majorizes(top, x));
        const int d = max_degree(g), p = pendant_count(g);
        if (d >= 3) {
          CHECK(majorizes(x, y_sequence(n, d)));
          CHECK(majorizes(z_sequence(n, d), x));
        }
        if (p >= 1) {
          CHECK(majorizes(x, a_sequence(n, p)));
          CHECK(majorizes(b_sequence(n, p), x));
        }
      }
    }
  }

  TEST_CASE("every (n, Delta) class has H and K members, and a is realized") {
    for (int n = 4; n <= 8; ++n) {
      for (int d = 3; d <= n - 1; ++d) {
        bool h = false, k = false;
        for (const auto& g : enumerate_unicyclic(n, {d, std::nullopt})) {
          h = h || is_member(g, family::H{n, d});
          k = k || is_member(g, family::K{n, d});
        }
        CHECK(h);
        CHECK(k);
      }
      for (int p = 1; p <= n - 3; ++p) {
        bool a = false;
        for (const auto& g : enumerate_unicyclic(n, {std::nullopt, p})) a = a || is_member(g, family::SeqA{n, p});
        CHECK(a);
      }
    }
  }
}
