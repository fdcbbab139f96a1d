#include <doctest.h>

#include <filesystem>
#include <random>

#include "../support/fixtures.hpp"
#include "clusterbench/error.hpp"
#include "clusterbench/expression.hpp"
#include "clusterbench/io.hpp"

using namespace clusterbench;

TEST_SUITE("io") {
  TEST_CASE("canonical quiver text") {
    auto q = IceQuiver::from_arrows(3, {2}, {{1, 0, 1}, {0, 2, 2}});
    CHECK(quiver_to_string(q) ==
          R"({"type":"ice_quiver","vertices":[{"id":1,"frozen":false},{"id":2,"frozen":false},{"id":3,"frozen":true}],"arrows":[[1,3,2],[2,1,1]]})");
    CHECK(quiver_to_string(IceQuiver(0)) == R"({"type":"ice_quiver","vertices":[],"arrows":[]})");
  }

  TEST_CASE("round trip is bit-exact") {
    std::mt19937_64 rng(8);
    auto dir = std::filesystem::temp_directory_path() / "clusterbench_io_test";
    std::filesystem::create_directories(dir);
    for (int trial = 0; trial < 100; ++trial) {
      auto q = fixtures::random_ice_quiver(rng);
      auto text = quiver_to_string(q);
      CHECK(parse_quiver(text) == q);
      CHECK(quiver_to_string(parse_quiver(text)) == text);
      auto path = dir / "q.json";
      write_quiver_file(path, q);
      auto bytes = read_text_file(path);
      CHECK(bytes == text + "\n");
      write_quiver_file(path, read_quiver_file(path));
      CHECK(read_text_file(path) == bytes);
    }
    std::filesystem::remove_all(dir);
  }

  TEST_CASE("non-canonical input is accepted and normalized") {
    auto q = parse_quiver(R"({"arrows":[[2,1,1],[1,3,1]],"vertices":[{"id":3,"frozen":true},{"id":1},{"id":2,"frozen":false}],"type":"ice_quiver"})");
    CHECK(q.size() == 3);
    CHECK(q.is_frozen(2));
    CHECK(quiver_to_string(q) ==
          R"({"type":"ice_quiver","vertices":[{"id":1,"frozen":false},{"id":2,"frozen":false},{"id":3,"frozen":true}],"arrows":[[1,3,1],[2,1,1]]})");
  }

  TEST_CASE("malformed quivers are rejected") {
    const char* bad[] = {
        "not json",
        "[]",
        R"({"type":"quiver","vertices":[],"arrows":[]})",
        R"({"type":"ice_quiver","arrows":[]})",
        R"({"type":"ice_quiver","vertices":[{"id":1},{"id":1}],"arrows":[]})",
        R"({"type":"ice_quiver","vertices":[{"id":1},{"id":3}],"arrows":[]})",
        R"({"type":"ice_quiver","vertices":[{"id":0}],"arrows":[]})",
        R"({"type":"ice_quiver","vertices":[{"id":1,"frozen":1}],"arrows":[]})",
        R"({"type":"ice_quiver","vertices":[{"id":1},{"id":2}],"arrows":[[1,2,0]]})",
        R"({"type":"ice_quiver","vertices":[{"id":1},{"id":2}],"arrows":[[1,2,1],[2,1,1]]})",
        R"({"type":"ice_quiver","vertices":[{"id":1},{"id":2}],"arrows":[[1,2,1],[1,2,1]]})",
        R"({"type":"ice_quiver","vertices":[{"id":1},{"id":2}],"arrows":[[1,1,1]]})",
        R"({"type":"ice_quiver","vertices":[{"id":1},{"id":2}],"arrows":[[1,3,1]]})",
        R"({"type":"ice_quiver","vertices":[{"id":1},{"id":2}],"arrows":[[1,2]]})",
    };
    for (const char* text : bad) {
      CAPTURE(text);
      CHECK_THROWS_AS(parse_quiver(text), ParseError);
    }
  }

  TEST_CASE("reduction scripts") {
    auto s = script_from_json(Json::parse(R"({"mutations":[1,2],"freezes":[3],"deletions":[3]})"));
    CHECK(s.mutations == std::vector<std::size_t>{0, 1});
    CHECK(s.freezes == std::vector<std::size_t>{2});
    CHECK(script_from_json(script_to_json(s)) == s);
    auto t = script_from_json(Json::parse(R"({"steps":[{"op":"mutate","vertex":1},{"op":"delete","vertex":4}]})"));
    CHECK(t.deletions == std::vector<std::size_t>{3});
    CHECK(script_from_json(Json::parse("{}")).empty());
    CHECK_THROWS_AS(script_from_json(Json::parse(R"({"steps":[{"op":"freeze","vertex":1},{"op":"mutate","vertex":2}]})")),
                    PhaseOrderError);
    CHECK_THROWS_AS(script_from_json(Json::parse(R"({"steps":[{"op":"spin","vertex":1}]})")), ParseError);
    CHECK_THROWS_AS(script_from_json(Json::parse(R"({"mutations":[0]})")), ParseError);
  }

  TEST_CASE("seed round trip") {
    auto q = IceQuiver::from_arrows(2, {1}, {{0, 1, 1}});
    auto s = mutate_seed(initial_seed(q), 0);
    auto j = seed_to_json(s);
    CHECK(j["cluster"][0] == "(x2 + 1)/x1");
    CHECK(j["provenance"] == Json::array({1}));
    CHECK(seed_from_json(j) == s);
    CHECK(seed_from_json(quiver_to_json(q)) == initial_seed(q));
    auto bad = j;
    bad["cluster"] = Json::array({"x1"});
    CHECK_THROWS_AS(seed_from_json(bad), ParseError);
  }
}
