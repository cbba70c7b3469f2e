#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "linkhom/diagram.hpp"
#include "oracles.hpp"

using namespace linkhom;

namespace {

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("parse/serialize round-trip on all diagram fixtures") {
  for (const char* name : {"unknot.sg", "hopf.sg", "hopf_rev.sg", "borromean.sg", "whitehead.sg",
                           "split_theta_k4.sg", "theta_circle.sg"}) {
    CAPTURE(name);
    EmbeddingCode code = parse_code(fixture(name));
    validate(code);
    EmbeddingCode again = parse_code(serialize_code(code));
    CHECK(again == code);
  }
}

TEST_CASE("corrupted codes are rejected") {
  std::string good = fixture("hopf.sg");
  auto expect_reject = [](const std::string& text) {
    try {
      validate(parse_code(text));
      return false;
    } catch (const Error&) {
      return true;
    }
  };
  // unmatched crossing
  CHECK(expect_reject("vertex 1 rotation 1t 1h\nedge 1 component 1 from 1 to 1 passes X1o+\n"));
  // sign disagreement across the two passages
  CHECK(expect_reject("vertex 1 rotation 1t 1h\n"
                      "edge 1 component 1 from 1 to 1 passes X1o+ X1u-\n"));
  // rotation mentioning a foreign end
  CHECK(expect_reject("vertex 1 rotation 1t 2h\nedge 1 component 1 from 1 to 1 passes\n"));
  // wrong component label
  CHECK(expect_reject("vertex 1 rotation 1t 1h\nedge 1 component 2 from 1 to 1 passes\n"));
  // malformed event token
  CHECK(expect_reject("vertex 1 rotation 1t 1h\nedge 1 component 1 from 1 to 1 passes X1z+\n"));
  CHECK_NOTHROW(validate(parse_code(good)));
}

TEST_CASE("crossing change is an involution and stays valid") {
  EmbeddingCode code = parse_code(fixture("whitehead.sg"));
  EmbeddingCode once = crossing_change(code, 5);
  validate(once);
  CHECK(once != code);
  CHECK(crossing_change(once, 5) == code);
}

TEST_CASE("inter-component crossing change is illegal") {
  EmbeddingCode code = parse_code(fixture("hopf.sg"));
  CHECK_THROWS_AS(crossing_change(code, 1), IllegalMove);
}

TEST_CASE("extracting every circle of a link reproduces the link") {
  for (const char* name : {"hopf.sg", "borromean.sg", "whitehead.sg"}) {
    CAPTURE(name);
    EmbeddingCode code = parse_code(fixture(name));
    CycleSelection all;
    for (int c : code.graph.colors()) all.cycles[c] = simple_cycles(code.graph, c).at(0);
    EmbeddingCode sub = extract_sublink(code, all);
    validate(sub);
    for (int i : code.graph.colors())
      for (int j : code.graph.colors())
        if (i != j)
          CHECK(oracles::linking_number(sub, i, j) == oracles::linking_number(code, i, j));
  }
}

TEST_CASE("extraction from the theta fixture keeps or drops the clasp") {
  EmbeddingCode code = parse_code(fixture("theta_circle.sg"));
  auto cycles = simple_cycles(code.graph, 1);
  CHECK(cycles.size() == 3);
  Cycle ring = simple_cycles(code.graph, 2).at(0);
  int with_e1 = 0, without_e1 = 0;
  for (const Cycle& cyc : cycles) {
    bool uses_e1 = false;
    for (const auto& [eid, fwd] : cyc.edges) uses_e1 |= (eid == 1);
    CycleSelection sel;
    sel.cycles[1] = cyc;
    sel.cycles[2] = ring;
    EmbeddingCode sub = extract_sublink(code, sel);
    validate(sub);
    long long lk = oracles::linking_number(sub, 1, 2);
    if (uses_e1) {
      CHECK(lk != 0);
      ++with_e1;
    } else {
      CHECK(lk == 0);
      ++without_e1;
    }
  }
  CHECK(with_e1 == 2);
  CHECK(without_e1 == 1);
}

TEST_CASE("extraction flips the linking sign when a cycle is traversed backwards") {
  EmbeddingCode code = parse_code(fixture("theta_circle.sg"));
  Cycle ring = simple_cycles(code.graph, 2).at(0);
  // the cycle through edges 1 and 2 traverses exactly one of them backwards;
  // reversing a single strand of a two-component clasp negates the linking
  // number relative to the same clasp read with both strands forward
  std::vector<Cycle> cycles = simple_cycles(code.graph, 1);
  long long signs = 0;
  for (const Cycle& cyc : cycles) {
    bool uses_e1 = false;
    for (const auto& [eid, fwd] : cyc.edges) uses_e1 |= (eid == 1);
    if (!uses_e1) continue;
    CycleSelection sel;
    sel.cycles[1] = cyc;
    sel.cycles[2] = ring;
    long long lk = oracles::linking_number(extract_sublink(code, sel), 1, 2);
    CHECK(std::abs(lk) == 1);
    signs += lk;
  }
  // both cycles through e1 run e1 forward, so the two linking numbers agree
  CHECK(std::abs(signs) == 2);
}

TEST_CASE("delete_component removes crossings and relabels") {
  EmbeddingCode code = parse_code(fixture("borromean.sg"));
  for (int c : {1, 2, 3}) {
    EmbeddingCode rest = delete_component(code, c);
    validate(rest);
    CHECK(rest.graph.color_count() == 2);
    CHECK(rest.graph.colors() == std::vector<int>{1, 2});
  }
  EmbeddingCode no3 = delete_component(code, 3);
  // components 1 and 2 never cross each other
  for (const auto& [eid, events] : no3.passages) CHECK(events.empty());
}

TEST_CASE("random codes validate and survive the round trip") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    EmbeddingCode code = oracles::random_link_code(rng);
    validate(code);
    CHECK(parse_code(serialize_code(code)) == code);
  }
}
