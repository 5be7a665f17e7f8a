#include "cli.hpp"

#include "plog/frame_io.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace plog {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

std::filesystem::path temp(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

TEST(Cli, DecideGlp3) {
  Result r = run({"decide", "--logic", "glp3", "[0]([0]p->q) | [0]([0]q&q->p)"});
  EXPECT_EQ(r.code, cli::kSuccess);
  EXPECT_EQ(first_line(r.out), "theorem");

  Result ref = run({"decide", "p -> [0]p"});
  EXPECT_EQ(ref.code, cli::kRefuted);
  EXPECT_EQ(ref.out, "refuted\nshape: [..]\nworld: (0)\nvaluation: p={(0)}\nbound: 3\n");
}

TEST(Cli, DecideClosed) {
  Result r = run({"decide", "--logic", "glp-closed", "<0>T"});
  EXPECT_EQ(r.code, cli::kRefuted);
  EXPECT_EQ(r.out, "refuted\nwitness: ()\n");
  EXPECT_EQ(run({"decide", "--logic", "glp-closed", "[0]F -> [1]F"}).code, cli::kSuccess);
  EXPECT_EQ(run({"decide", "--logic", "glp-closed", "p"}).code, cli::kUsage);
}

TEST(Cli, DecideJlin) {
  EXPECT_EQ(run({"decide", "--logic", "jlin", "--n", "1", "<0>p & <0>~p"}).code, cli::kRefuted);
  EXPECT_EQ(run({"decide", "--logic", "jlin", "[0]F & <0>T"}).code, cli::kSuccess);
  EXPECT_EQ(run({"decide", "--logic", "jlin", "--n", "1", "<1>T"}).code, cli::kUsage);
}

TEST(Cli, JsonEnvelope) {
  Result r = run({"--json", "decide", "p -> [0]p"});
  ASSERT_EQ(r.code, cli::kRefuted);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("status"), "refuted");
  EXPECT_TRUE(j.contains("witness"));
  ASSERT_TRUE(j.at("countermodel").is_object());
  FrameFile f = frame_from_json(j.at("countermodel"));
  ASSERT_TRUE(f.root);
  EXPECT_FALSE(eval_at(f.frame, f.valuation, *f.root, parse_formula("p -> [0]p")));

  auto t = nlohmann::json::parse(run({"--json", "decide", "[0]p -> [1]p"}).out);
  EXPECT_EQ(t.at("status"), "theorem");
  EXPECT_TRUE(t.at("countermodel").is_null());

  for (std::vector<std::string> args : {std::vector<std::string>{"--json", "parse", "p&q"},
                                        {"--json", "truthset", "<1>T"},
                                        {"--json", "axis-formula", "w"},
                                        {"--json", "worm", "to-ordinal", "<1>T"},
                                        {"--json", "enumerate", "--n", "2", "--max-size", "3"},
                                        {"--json", "cover-k", "T", "--n", "1"},
                                        {"--json", "project", "--shape", "[..]"}}) {
    Result x = run(args);
    EXPECT_EQ(x.code, cli::kSuccess) << args[1];
    auto jx = nlohmann::json::parse(x.out);
    EXPECT_TRUE(jx.contains("status") && jx.contains("witness") && jx.contains("countermodel")) << args[1];
  }
}

TEST(Cli, ModelAndDotFilesRevalidate) {
  auto model = temp("plog_cli_model.json");
  auto dot = temp("plog_cli_model.dot");
  Result r = run({"decide", "[1]p -> [0]p", "--model", model.string(), "--dot", dot.string()});
  ASSERT_EQ(r.code, cli::kRefuted);
  FrameFile f = load_frame(model.string());
  ASSERT_TRUE(f.root);
  EXPECT_FALSE(eval_at(f.frame, f.valuation, *f.root, parse_formula("[1]p -> [0]p")));
  std::ifstream in(dot);
  std::string text((std::istreambuf_iterator<char>(in)), {});
  EXPECT_EQ(text.rfind("digraph", 0), 0u);
  std::filesystem::remove(model);
  std::filesystem::remove(dot);
}

TEST(Cli, OtherCommands) {
  EXPECT_EQ(run({"parse", "[0] (p->q)"}).out, "[0](p -> q)\n");
  EXPECT_EQ(run({"axis-formula", "w"}).out, "<1>T & [0]~<1>T\n");
  EXPECT_EQ(run({"truthset", "<0><1>T"}).out, "x0 in [w + 1,∞)\n");
  EXPECT_EQ(run({"worm", "from-ordinal", "w*2"}).out, "<1><0><1>T\n");
  EXPECT_EQ(run({"worm", "to-ordinal", "<2>T"}).out, "w^w\n");
  EXPECT_EQ(run({"cover-k", "[1]F & <0>T", "--n", "2"}).out, "1\n");
  EXPECT_EQ(run({"enumerate", "--n", "1", "--max-size", "3"}).out, "[.]\n[..]\n[...]\n");
  Result p = run({"project", "--shape", "[[..]]"});
  EXPECT_EQ(p.code, cli::kSuccess);
  EXPECT_EQ(first_line(p.out), "iota: w");
}

TEST(Cli, ProjectFromFrameWithFormula) {
  auto path = temp("plog_cli_project.json");
  {
    std::ofstream out(path);
    out << R"({"n": 1, "worlds": ["r", "s"], "rel": {"0": [["r", "s"]]}, "val": {"p": ["r"]}})";
  }
  Result r = run({"project", "--frame", path.string(), "p & <0>~p"});
  EXPECT_EQ(r.code, cli::kSuccess) << r.err;
  EXPECT_NE(r.out.find("substitution: "), std::string::npos);
  std::filesystem::remove(path);
}

TEST(Cli, CheckFrame) {
  auto good = temp("plog_cli_good.json");
  auto bad = temp("plog_cli_bad.json");
  {
    std::ofstream(good) << R"({"n": 1, "worlds": ["a", "b", "c"], "rel": {"0": [["a","b"],["b","c"],["a","c"]]}})";
    std::ofstream(bad) << R"({"n": 1, "worlds": ["a", "b"], "rel": {"0": [["a","b"], "b"]}})";
  }
  Result g = run({"check-frame", good.string()});
  EXPECT_EQ(g.code, cli::kSuccess);
  EXPECT_NE(g.out.find("root: a"), std::string::npos);
  Result b = run({"check-frame", bad.string()});
  EXPECT_EQ(b.code, cli::kUsage);
  EXPECT_NE(b.err.find("/rel/0/1"), std::string::npos);
  std::filesystem::remove(good);
  std::filesystem::remove(bad);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"decide"}).code, cli::kUsage);
  EXPECT_EQ(run({"decide", "p &"}).code, cli::kUsage);
  EXPECT_EQ(run({"decide", "--logic", "k4", "p"}).code, cli::kUsage);
  EXPECT_EQ(run({"--cap", "0", "decide", "p"}).code, cli::kUsage);
  EXPECT_EQ(run({"worm", "sideways", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"axis-formula", "w^"}).code, cli::kUsage);
  EXPECT_EQ(run({"nonsense"}).code, cli::kUsage);
}

TEST(Cli, CapAndEnvironment) {
  Result r = run({"--cap", "1", "decide", "p -> [0]p"});
  EXPECT_NE(r.code, cli::kRefuted);
  setenv("PLOG_CAP", "1", 1);
  EXPECT_EQ(run({"decide", "p -> [0]p"}).code, r.code);
  setenv("PLOG_CAP", "abc", 1);
  EXPECT_EQ(run({"decide", "p"}).code, cli::kUsage);
  unsetenv("PLOG_CAP");
  EXPECT_EQ(run({"decide", "p -> [0]p"}).code, cli::kRefuted);
}

TEST(Cli, Deterministic) {
  for (std::vector<std::string> args : {std::vector<std::string>{"--json", "decide", "[0]p | [0]~p"},
                                        {"decide", "<1>p -> <0>p & [1]q"},
                                        {"project", "--shape", "[[..][.][...]]"}}) {
    Result a = run(args);
    Result b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}

}  // namespace
}  // namespace plog
