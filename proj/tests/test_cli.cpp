#include "cli.hpp"

#include <gtest/gtest.h>

#include <json.hpp>

#include <sstream>

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "covalg");
  std::ostringstream out, err;
  int code = covalg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(COVALG_TEST_DATA_DIR) + "/" + name; }

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

}  // namespace

TEST(CliCheck, Verdicts) {
  auto g3 = run({"check", data("g3.json"), "--json"});
  ASSERT_EQ(g3.code, 0) << g3.err;
  EXPECT_EQ(json_of(g3)["unmixed"], true);
  EXPECT_EQ(json_of(g3)["cohen_macaulay"], false);
  auto chain = run({"check", data("chain3.json"), "--json"});
  ASSERT_EQ(chain.code, 0);
  EXPECT_EQ(json_of(chain)["unmixed"], true);
  EXPECT_EQ(json_of(chain)["cohen_macaulay"], true);
}

TEST(CliCheck, ExitCodes) {
  auto path = run({"check", data("path.json")});
  EXPECT_EQ(path.code, 2);
  EXPECT_NE(path.err.find("NoPerfectMatching"), std::string::npos);
  EXPECT_EQ(run({"check", data("bad_index.json")}).code, 1);
  EXPECT_EQ(run({"check", data("does_not_exist.json")}).code, 1);
  EXPECT_EQ(run({"check"}).code, 1);
  EXPECT_EQ(run({"frobnicate", data("g3.json")}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(CliCheck, DropIsolated) {
  // Isolated y2 leaves a 2 x 1 graph, which cannot be unmixed.
  EXPECT_EQ(run({"check", data("path.json"), "--drop-isolated"}).code, 2);
}

TEST(CliHilbert, KnownValues) {
  auto k33 = json_of(run({"hilbert", data("k33.json"), "--json"}));
  EXPECT_EQ(k33["h"], nlohmann::json::parse("[1,1,1,1]"));
  EXPECT_EQ(k33["denom_power"], 7);
  EXPECT_EQ(k33["multiplicity"], 4);
  auto g3 = json_of(run({"hilbert", data("g3.json"), "--json"}));
  EXPECT_EQ(g3["h"], nlohmann::json::parse("[1,3,3,1]"));
  EXPECT_EQ(g3["bounds"], nlohmann::json::parse("[4,16]"));
  EXPECT_EQ(g3["gorenstein_symmetric"], true);
  EXPECT_EQ(g3["a_invariant"], -4);
  auto anti = json_of(run({"hilbert", data("antichain3.json"), "--json"}));
  EXPECT_EQ(anti["multiplicity"], 16);
}

TEST(CliHilbert, SchemaKeysInOrder) {
  auto doc = nlohmann::ordered_json::parse(run({"hilbert", data("g3.json"), "--json"}).out);
  std::vector<std::string> keys;
  for (auto& [k, v] : doc.items()) keys.push_back(k);
  std::vector<std::string> head(keys.begin(), keys.begin() + 7);
  EXPECT_EQ(head, (std::vector<std::string>{"n", "h", "denom_power", "multiplicity", "bounds",
                                            "gorenstein_symmetric", "a_invariant"}));
}

TEST(CliHilbert, OutputIsDeterministic) {
  auto a = run({"hilbert", data("g3.json"), "--json", "--threads", "1"});
  auto b = run({"hilbert", data("g3.json"), "--json", "--threads", "3"});
  auto c = run({"hilbert", data("g3.json"), "--json"});
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.out, c.out);
  auto text = run({"hilbert", data("g3.json"), "--text"});
  EXPECT_NE(text.out.find("h: 1 3 3 1"), std::string::npos);
  EXPECT_EQ(run({"hilbert", data("g3.json"), "--json", "--text"}).code, 1);
}

TEST(CliHilbert, MaxNIsEnforced) {
  EXPECT_EQ(run({"hilbert", data("g3.json"), "--max-n", "2"}).code, 1);
}

TEST(CliGroebner, Formats) {
  auto k22 = run({"groebner", data("k22.json")});
  ASSERT_EQ(k22.code, 0);
  EXPECT_EQ(k22.out, "x1*x2*u{} - y1*y2*u{1,2}\n");
  auto doc = json_of(run({"groebner", data("g3.json"), "--json"}));
  EXPECT_EQ(doc["binomials"].size(), 5u);
}

TEST(CliVerify, Passes) {
  auto k22 = run({"verify", data("k22.json"), "--json"});
  ASSERT_EQ(k22.code, 0) << k22.out;
  EXPECT_EQ(json_of(k22)["ok"], true);
  auto g3 = run({"verify", data("g3.json"), "--level", "full"});
  EXPECT_EQ(g3.code, 0) << g3.out;
  EXPECT_EQ(run({"verify", data("g3.json"), "--level", "medium"}).code, 1);
}

TEST(CliVerify, CorruptedBasisFails) {
  auto k22 = run({"verify", data("k22.json"), "--corrupt-basis", "--json"});
  EXPECT_EQ(k22.code, 3);
  EXPECT_EQ(json_of(k22)["ok"], false);
  EXPECT_EQ(run({"verify", data("g3.json"), "--corrupt-basis"}).code, 3);
}

TEST(CliLattice, Dump) {
  auto r = run({"lattice", data("g3.json"), "--json"});
  EXPECT_EQ(r.out, "{\"n\":3,\"elements\":[[],[1],[2,3],[1,2,3]]}\n");
}
