#include <doctest.h>

#include <set>

#include "support.hpp"
#include "unicyclic/enumeration.hpp"
#include "unicyclic/errors.hpp"
#include "unicyclic/extremal.hpp"

using namespace unicyclic;

namespace {

std::vector<CanonicalCode> codes(const std::vector<Graph>& graphs) {
  std::vector<CanonicalCode> out;
  for (const auto& g : graphs) out.push_back(canonical_code(g));
  return out;
}

}  // namespace

TEST_SUITE("enumeration") {
  TEST_CASE("rooted tree counts") {
    const std::vector<std::size_t> expected{1, 1, 2, 4, 9, 20, 48};
    for (std::size_t k = 0; k < expected.size(); ++k) CHECK(rooted_trees(static_cast<int>(k + 1)).size() == expected[k]);
  }

  TEST_CASE("class counts") {
    // n = 3..7 from the edge-subset oracle; 89 and 240 are the published values.
    const std::vector<std::size_t> expected{1, 2, 5, 13, 33, 89, 240};
    for (int n = 3; n <= 9; ++n) CHECK(count_classes(n) == expected[n - 3]);
  }

  TEST_CASE("two generators agree") {
    for (int n = 3; n <= 6; ++n) {
      CAPTURE(n);
      CHECK(codes(enumerate_unicyclic(n)) == codes(enumerate_unicyclic_by_edge_subsets(n)));
    }
  }

  TEST_CASE("output contract") {
    for (int n = 3; n <= 8; ++n) {
      const auto graphs = enumerate_unicyclic(n);
      const auto cs = codes(graphs);
      CHECK(std::is_sorted(cs.begin(), cs.end()));
      CHECK(std::set<CanonicalCode>(cs.begin(), cs.end()).size() == cs.size());
      for (const auto& g : graphs) {
        CHECK(is_unicyclic(g));
        CHECK(g.order() == n);
        CHECK(canonical_form(g) == g);
      }
    }
  }

  TEST_CASE("filters") {
    for (const auto& g : enumerate_unicyclic(6, {3, std::nullopt})) CHECK(max_degree(g) == 3);
    for (const auto& g : enumerate_unicyclic(7, {std::nullopt, 2})) CHECK(pendant_count(g) == 2);
    CHECK(enumerate_unicyclic(5, {3, std::nullopt}).size() == 3);
    CHECK(enumerate_unicyclic(6, {4, std::nullopt}).size() == 3);
    CHECK(enumerate_unicyclic(7, {3, std::nullopt}).size() == 16);
    CHECK(enumerate_unicyclic(7, {std::nullopt, 2}).size() == 13);
    CHECK(enumerate_unicyclic(6, {std::nullopt, 4}).empty());
    CHECK(enumerate_unicyclic(6, {3, 3}).size() == 1);
    std::size_t total = 0;
    for (int d = 2; d <= 6; ++d) total += enumerate_unicyclic(7, {d, std::nullopt}).size();
    CHECK(total == 33);
    CHECK_THROWS_AS(enumerate_unicyclic(6, {1, std::nullopt}), ParameterError);
    CHECK_THROWS_AS(enumerate_unicyclic(6, {std::nullopt, -1}), ParameterError);
  }

  TEST_CASE("range guards") {
    CHECK_THROWS_AS(enumerate_unicyclic(2), ParameterError);
    CHECK_THROWS_AS(enumerate_unicyclic(10), ParameterError);
    CHECK_THROWS_AS(count_classes(10), ParameterError);
    CHECK_THROWS_AS(enumerate_unicyclic_by_edge_subsets(8), ParameterError);
  }

  TEST_CASE("extremal search") {
    const auto m1 = extremal_search(IndexSpec::m1(), 6);
    CHECK(m1.class_size == 13);
    REQUIRE(m1.minimizers.size() == 1);
    REQUIRE(m1.maximizers.size() == 1);
    CHECK(m1.minimizers[0].value.to_string() == "24");
    CHECK(m1.minimizers[0].code == canonical_code(build_cycle(6)));
    CHECK(m1.maximizers[0].value.to_string() == "36");
    CHECK(m1.maximizers[0].code == canonical_code(build_un3(6)));

    const auto nk = extremal_search(IndexSpec::nk(), 6);
    CHECK(nk.maximizers[0].value.to_string() == "64");
    CHECK(nk.minimizers[0].value.to_string() == "20");
    CHECK(nk.minimizers[0].code == canonical_code(build_un3(6)));

    const auto d73 = extremal_search(IndexSpec::m1(), 7, {3, std::nullopt});
    CHECK(d73.class_size == 16);
    CHECK(d73.maximizers.size() == 3);
    CHECK(d73.minimizers.size() == 4);
    CHECK(d73.maximizers[0].value.to_string() == "34");
    CHECK(d73.minimizers[0].value.to_string() == "30");
    for (const auto& e : d73.maximizers) CHECK(degree_sequence(e.graph) == z_sequence(7, 3));
    for (const auto& e : d73.minimizers) CHECK(degree_sequence(e.graph) == y_sequence(7, 3));

    const auto empty = extremal_search(IndexSpec::m1(), 6, {std::nullopt, 4});
    CHECK(empty.empty());
    CHECK(empty.minimizers.empty());
  }

  TEST_CASE("extremal search is invariant under relabeling") {
    std::mt19937 rng(61);
    auto graphs = enumerate_unicyclic(7);
    const auto base = extremal_search(IndexSpec::f(), graphs);
    for (auto& g : graphs) g = g.relabeled(testing::random_permutation(7, rng));
    std::reverse(graphs.begin(), graphs.end());
    const auto shuffled = extremal_search(IndexSpec::f(), graphs);
    REQUIRE(base.minimizers.size() == shuffled.minimizers.size());
    REQUIRE(base.maximizers.size() == shuffled.maximizers.size());
    for (std::size_t i = 0; i < base.minimizers.size(); ++i) CHECK(base.minimizers[i].code == shuffled.minimizers[i].code);
    for (std::size_t i = 0; i < base.maximizers.size(); ++i) CHECK(base.maximizers[i].code == shuffled.maximizers[i].code);
  }

  TEST_CASE("float objectives tie within tolerance") {
    const auto r = extremal_search(IndexSpec::m1_alpha(0.5), 7);
    CHECK(r.maximizers.size() == 1);
    CHECK(r.maximizers[0].code == canonical_code(build_cycle(7)));
    CHECK(r.minimizers[0].code == canonical_code(build_un3(7)));
  }
}
