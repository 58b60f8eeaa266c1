#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "unicyclic/cli.hpp"
#include "unicyclic/graph.hpp"

using namespace unicyclic;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "unicyclic");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("unicyclic_test_" + name);
  std::ofstream(path) << text;
  return path.string();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("compute") {
    const auto c5 = write_temp("c5.txt", "5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    auto r = run({"compute", c5, "M1,F,ID"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "graph 0 M1 = 20 [exact_integer]"));
    CHECK(contains(r.out, "graph 0 F = 40 [exact_integer]"));
    CHECK(contains(r.out, "graph 0 ID = 5/2 = 2.5 [exact_rational]"));

    const auto u43 = write_temp("u43.txt", "4\n0 1\n1 2\n2 0\n0 3\n");
    r = run({"compute", u43, "NK*", "--output", "tabular"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "graph_id,index,value,mode\n0,NK*,432,exact_integer\n");

    const auto p4 = write_temp("p4.txt", "4\n0 1\n1 2\n2 3\n");
    r = run({"compute", p4, "M1"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "M1 = 10"));

    r = run({"compute", c5, "M1a,SEI", "--alpha=-1,2", "--a", "2"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "M1a:-1 = 5/2"));
    CHECK(contains(r.out, "M1a:2 = 20"));
    CHECK(contains(r.out, "SEI:2 = 40"));
  }

  TEST_CASE("compute errors") {
    const auto bad = write_temp("bad.txt", "3\n0 1\n1 5\n");
    auto r = run({"compute", bad, "M1"});
    CHECK(r.code == kExitDomain);
    CHECK(contains(r.err, "line 3"));
    CHECK(contains(r.err, "vertex index out of range"));
    r = run({"compute", "/nonexistent/graph.txt", "M1"});
    CHECK(r.code == kExitDomain);
    const auto isolated = write_temp("iso.txt", "4\n0 1\n1 2\n2 0\n");
    r = run({"compute", isolated, "ID"});
    CHECK(r.code == kExitDomain);
    r = run({"compute", bad, "Q"});
    CHECK(r.code == kExitDomain);
    r = run({"compute", isolated, "M1a"});
    CHECK(r.code == kExitDomain);
    CHECK(contains(r.err, "--alpha"));
  }

  TEST_CASE("audit") {
    const auto c6 = write_temp("c6.txt", "6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
    auto r = run({"audit", c6});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "ok cor-M1-uni-lower - value=24 bound=24 tight member"));
    const auto u63 = write_temp("u63.txt", "6\n0 1\n1 2\n2 0\n0 3\n0 4\n0 5\n");
    r = run({"audit", u63, "--output", "tabular"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "0,cor-M1-uni-upper,-,36,36,1,1,1"));
    const auto p4 = write_temp("p4.txt", "4\n0 1\n1 2\n2 3\n");
    r = run({"audit", p4});
    CHECK(r.code == kExitDomain);
    CHECK(contains(r.err, "unicyclic"));
  }

  TEST_CASE("audit failure exit code") {
    // A tolerance so loose that distinct values count as tight breaks the iff claims.
    const auto g = write_temp("c5b.txt", "5\n0 1\n1 2\n2 3\n3 4\n4 0\n");
    const auto r = run({"audit", g, "--tolerance", "0.5"});
    CHECK(r.code == kExitVerification);
  }

  TEST_CASE("verify") {
    auto r = run({"verify", "4..6"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "violations=0 sharpness_mismatches=0 unattained_cells=0 CLEAN"));
    r = run({"verify", "6", "--max-degree", "3", "--output", "tabular"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "cor-M1-Delta-upper,-,6,3,,8,0,1,1,0,1,1,1"));
    r = run({"verify", "5", "--pendants", "2", "--jobs", "2"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "cor-M1-pend-lower - n=5 p=2 graphs=2 violations=0 tight=1"));
    CHECK(run({"verify", "4..12"}).code == kExitDomain);
    CHECK(run({"verify", "four"}).code == kExitDomain);
    CHECK(run({"verify", "4..6", "--tolerance", "0"}).code == kExitUsage);
  }

  TEST_CASE("enumerate") {
    auto r = run({"enumerate", "4"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "# n=4 Delta=3 p=1"));
    CHECK(contains(r.out, "# degrees (2,2,2,2)"));
    CHECK(contains(r.out, "# code "));
    CHECK(parse_edge_list_stream(r.out).size() == 2);
    r = run({"enumerate", "7", "--max-degree", "3"});
    CHECK(parse_edge_list_stream(r.out).size() == 16);
    CHECK(run({"enumerate", "11"}).code == kExitDomain);
  }

  TEST_CASE("extremal search") {
    auto r = run({"extremal-search", "M1", "6"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "M1 n=6: 13 graphs, min 24 (1), max 36 (1)"));
    r = run({"extremal-search", "M1", "7", "--max-degree", "3"});
    CHECK(contains(r.out, "max 34 (3)"));
    r = run({"extremal-search", "I:self_power", "6", "--pendants", "4"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "empty class"));
    r = run({"extremal-search", "NK", "6", "--output", "tabular"});
    CHECK(contains(r.out, "kind,value,code,degrees\n"));
    CHECK(contains(r.out, "max,64,"));
  }

  TEST_CASE("construct") {
    auto r = run({"construct", "K", "7", "3"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "# degrees (3,3,3,2,1,1,1)"));
    CHECK(contains(r.out, "# defining (3,3,3,2,1,1,1)"));
    CHECK(is_unicyclic(parse_edge_list(r.out)));
    r = run({"construct", "H", "7", "4", "--cycle", "3", "--paths", "2,2"});
    CHECK(r.code == kExitOk);
    CHECK(contains(r.out, "# degrees (4,2,2,2,2,1,1)"));
    r = run({"construct", "UnThree", "5"});
    CHECK(contains(r.out, "# degrees (4,2,2,1,1)"));
    r = run({"construct", "B", "6", "2"});
    CHECK(contains(r.out, "# degrees (4,2,2,2,1,1)"));
    r = run({"construct", "K", "7", "7"});
    CHECK(r.code == kExitDomain);
    CHECK(contains(r.err, "Delta"));
    CHECK(run({"construct", "A", "6", "2"}).code == kExitDomain);
    CHECK(run({"construct", "Z", "6"}).code == kExitDomain);
    CHECK(run({"construct", "H", "7", "4", "--paths", "2,2"}).code == kExitDomain);
    CHECK(run({"construct", "Cycle", "5", "--cycle", "3"}).code == kExitDomain);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == kExitUsage);
    CHECK(run({"frobnicate"}).code == kExitUsage);
    CHECK(run({"compute"}).code == kExitUsage);
    CHECK(run({"verify", "4..5", "--output", "xml"}).code == kExitUsage);
    CHECK(run({"--help"}).code == kExitOk);
  }
}
