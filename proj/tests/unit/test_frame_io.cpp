#include "generators.hpp"

#include "plog/frame_io.hpp"

#include <gtest/gtest.h>

#include <filesystem>

namespace plog {
namespace {

using nlohmann::json;

std::string pointer_of(const json& j) {
  try {
    frame_from_json(j);
  } catch (const FrameFormatError& e) {
    return e.pointer();
  }
  return "no error";
}

json base() { return json::parse(R"({"n": 1, "worlds": ["a", "b"], "rel": {"0": [["a", "b"]]}})"); }

TEST(FrameJson, ParsesTheDocumentedSchema) {
  FrameFile f = frame_from_json(json::parse(
      R"({"n": 2, "worlds": ["a", "b"], "rel": {"1": [["a", "b"]]}, "val": {"p": ["b"]}, "root": "a"})"));
  EXPECT_EQ(f.frame.n(), 2u);
  EXPECT_TRUE(f.frame.edges(0).empty());
  EXPECT_EQ(f.frame.edges(1), (std::vector<Edge>{{"a", "b"}}));
  EXPECT_EQ(f.valuation.at("p"), (std::set<World>{"b"}));
  EXPECT_EQ(f.root, World("a"));
}

TEST(FrameJson, RoundTripOnRandomFrames) {
  testing::Rng rng(71);
  for (int i = 0; i < 100; ++i) {
    unsigned n = 1 + static_cast<unsigned>(testing::pick(rng, 3));
    FrameFile f{materialize(testing::random_jline(rng, n, 6)), {}, std::nullopt};
    f.valuation = testing::random_valuation(rng, f.frame, {"p", "q"});
    if (testing::coin(rng)) f.root = f.frame.world(0);
    EXPECT_EQ(frame_from_json(frame_to_json(f)), f);
    EXPECT_EQ(frame_from_json(json::parse(frame_to_json(f).dump())), f);
  }
}

TEST(FrameJson, FileRoundTrip) {
  auto path = std::filesystem::temp_directory_path() / "plog_frame_io_test.json";
  FrameFile f{materialize(parse_shape("[[..][.]]")), {{"p", {"(0,1)"}}}, World("(0,0)")};
  save_frame(path.string(), f);
  EXPECT_EQ(load_frame(path.string()), f);
  std::filesystem::remove(path);
  EXPECT_THROW(load_frame((std::filesystem::temp_directory_path() / "plog_missing.json").string()),
               std::runtime_error);
}

TEST(FrameJson, ErrorPointers) {
  json j = base();
  j["rel"]["0"].push_back("a");
  EXPECT_EQ(pointer_of(j), "/rel/0/1");

  j = base();
  j["rel"]["0"].push_back({"a"});
  EXPECT_EQ(pointer_of(j), "/rel/0/1");

  j = base();
  j["rel"]["0"].push_back({"zz", "a"});
  EXPECT_EQ(pointer_of(j), "/rel/0/1/0");

  j = base();
  j["rel"]["3"] = json::array();
  EXPECT_EQ(pointer_of(j), "/rel/3");

  j = base();
  j["n"] = -1;
  EXPECT_EQ(pointer_of(j), "/n");

  j = base();
  j.erase("worlds");
  EXPECT_EQ(pointer_of(j), "/worlds");

  j = base();
  j["worlds"].push_back("a");
  EXPECT_EQ(pointer_of(j), "/worlds/2");

  j = base();
  j["val"] = {{"p", {"a", "c"}}};
  EXPECT_EQ(pointer_of(j), "/val/p/1");

  j = base();
  j["val"] = {{"P!", json::array()}};
  EXPECT_EQ(pointer_of(j), "/val/P!");

  j = base();
  j["root"] = "c";
  EXPECT_EQ(pointer_of(j), "/root");

  EXPECT_EQ(pointer_of(json::array()), "");
}

TEST(Dot, OneLabelledEdgePerRelatedPair) {
  FrameFile f{materialize(parse_shape("[[..][.]]")), {{"p", {"(0,1)"}}}, World("(0,0)")};
  std::string dot = dot_export(f);
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  std::size_t edges = 0, pos = 0;
  while ((pos = dot.find("->", pos)) != std::string::npos) {
    ++edges;
    pos += 2;
  }
  EXPECT_EQ(edges, f.frame.edges(0).size() + f.frame.edges(1).size());
  EXPECT_NE(dot.find("\"(0,0)\" -> \"(0,1)\" [label=\"1\"]"), std::string::npos) << dot;
  EXPECT_NE(dot.find("doublecircle"), std::string::npos);
}

TEST(Countermodel, FileCarriesRootAndRevalidates) {
  Formula f = parse_formula("p -> [0]p");
  Verdict v = glp3_decide(f);
  ASSERT_TRUE(v.countermodel);
  FrameFile file = frame_from_json(frame_to_json(countermodel_file(*v.countermodel)));
  ASSERT_TRUE(file.root);
  EXPECT_FALSE(eval_at(file.frame, file.valuation, *file.root, f));
}

TEST(ProjectionJson, Layout) {
  json j = projection_to_json(build_projection(parse_shape("[[..]]")));
  EXPECT_EQ(j.at("iota"), "w");
  EXPECT_EQ(j.at("defs").size(), 2u);
  EXPECT_EQ(j.at("case_tree").at("case"), "shift");
}

}  // namespace
}  // namespace plog
