#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "polyfun_cli/commands.hpp"
#include "polyfun_cli/dot.hpp"
#include "polyfun_cli/model_io.hpp"

namespace {

using namespace polyfun;
using namespace polyfun::cli;

const std::string kModelA = R"({
  "poset": {"elements": ["*"], "leq": []},
  "objects": {"E": {"sets": {"*": 3}}, "B": {"sets": {"*": 3}}, "one": {"sets": {"*": 1}}},
  "morphisms": {
    "p": {"dom": "E", "cod": "B", "components": {"*": [0, 0, 1]}},
    "s": {"dom": "E", "cod": "one", "components": {"*": [0, 0, 0]}},
    "t": {"dom": "B", "cod": "one", "components": {"*": [0, 0, 0]}}
  },
  "polynomials": {"P": {"s": "s", "p": "p", "t": "t"}}
})";

const std::string kSierpinski = R"({
  "poset": {"elements": ["0", "1"], "leq": [["0", "1"]]},
  "objects": {
    "X": {"sets": {"0": 1, "1": 1}, "maps": {"0<=1": [0]}},
    "Y": {"sets": {"0": 2, "1": 2}, "maps": {"0<=1": [0, 1]}}
  },
  "morphisms": {
    "f": {"dom": "Y", "cod": "Y", "components": {"0": [0, 1], "1": [1, 0]}}
  }
})";

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::string& command, const std::string& text, Args args = {},
        Budget budget = {}) {
  std::ostringstream out, err;
  int code = execute(command, text, args, budget, out, err);
  return {code, out.str(), err.str()};
}

std::size_t count(const std::string& haystack, const std::string& needle) {
  std::size_t n = 0;
  for (auto at = haystack.find(needle); at != std::string::npos;
       at = haystack.find(needle, at + needle.size())) {
    ++n;
  }
  return n;
}

TEST(ModelIo, MinimalModelLoads) {
  Model m = parse_model(kModelA);
  EXPECT_EQ(m.objects.size(), 3u);
  EXPECT_FALSE(is_mono(lookup_morphism(m, "p")));
  EXPECT_TRUE(lookup_polynomial(m, "P").is_one_variable());
}

TEST(ModelIo, NonNaturalSquareNamesThePair) {
  try {
    parse_model(kSierpinski);
    FAIL() << "accepted a non-natural square";
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.location(), "/morphisms/f/components/0");
    EXPECT_NE(std::string(e.what()).find("0<=1"), std::string::npos) << e.what();
  }
  CliRun r = run("negate", kSierpinski, Args{.map = "f"});
  EXPECT_EQ(r.code, kInvalid);
  EXPECT_EQ(Json::parse(r.err)["location"], "/morphisms/f/components/0");
}

TEST(ModelIo, EmptyObjectsLoads) {
  Model m = parse_model(R"({"poset": {"elements": ["a"], "leq": []}, "objects": {}})");
  EXPECT_TRUE(m.objects.empty());
  EXPECT_TRUE(m.polynomials.empty());
}

TEST(ModelIo, IndexOutOfRangeIsLocated) {
  std::string text = kModelA;
  text.replace(text.find("[0, 0, 1]"), 9, "[0, 0, 7]");
  try {
    parse_model(text);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.location(), "/morphisms/p/components/*");
  }
}

TEST(ModelIo, NonFunctorialObjectRejected) {
  const char* chain = R"({
    "poset": {"elements": ["a", "b", "c"], "leq": [["a", "b"], ["b", "c"], ["a", "c"]]},
    "objects": {"X": {"sets": {"a": 2, "b": 2, "c": 2},
                      "maps": {"a<=b": [0, 1], "b<=c": [0, 1], "a<=c": [1, 0]}}}
  })";
  try {
    parse_model(chain);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.location().rfind("/objects/X", 0), 0u) << e.location();
  }
}

TEST(ModelIo, SyntaxErrorIsValidationExit) {
  CliRun r = run("negate", "{\"poset\": ", Args{.map = "p"});
  EXPECT_EQ(r.code, kInvalid);
  EXPECT_NE(r.err.find("syntax"), std::string::npos);
}

TEST(ModelIo, RoundTrip) {
  Model m = parse_model(kModelA);
  Json once = serialize_model(m);
  Json twice = serialize_model(load_model(once));
  EXPECT_EQ(once.dump(), twice.dump());
}

TEST(Commands, DeriveModelA) {
  CliRun r = run("derive", kModelA, Args{.poly = "P"});
  ASSERT_EQ(r.code, kOk) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["counting"], Json::parse("[[1, 2], [0, 1]]"));
  EXPECT_EQ(j["formal_derivative"], j["counting"]);
  EXPECT_TRUE(j["decidable"].get<bool>());
}

TEST(Commands, HomtermReportsBothCoefficients) {
  CliRun r = run("homterm", kModelA, Args{.poly = "P", .n = 2});
  ASSERT_EQ(r.code, kOk) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_EQ(j["strict_coefficient"], 2);
  EXPECT_EQ(j["classical_coefficient"], 1);
}

TEST(Commands, ExitCodes) {
  EXPECT_EQ(run("frobnicate", kModelA).code, kUnknownName);
  EXPECT_EQ(run("negate", kModelA, Args{.map = "nope"}).code, kUnknownName);
  EXPECT_EQ(run("negate", kModelA).code, kUnknownName);
  EXPECT_EQ(run("check", kModelA).code, kUnknownName);  // no seed
  EXPECT_EQ(run("eval", kModelA, Args{.poly = "P", .size = 30}, Budget{50}).code, kResource);
  EXPECT_EQ(run("localize-invert", kModelA, Args{.map = "p"}).code, kInvalid);
  EXPECT_EQ(run("check", kModelA, Args{.seed = 3}).code, kOk);
}

TEST(Commands, EvalCountsSections) {
  CliRun r = run("eval", kModelA, Args{.poly = "P", .size = 2});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["total_size"], 7);
}

TEST(Commands, OutputIsDeterministic) {
  for (const char* command : {"derive", "homterm", "report"}) {
    Args a{.poly = "P", .n = 2};
    EXPECT_EQ(run(command, kModelA, a).out, run(command, kModelA, a).out) << command;
  }
  Args c{.seed = 11};
  EXPECT_EQ(run("check", kModelA, c).out, run("check", kModelA, c).out);
}

TEST(Commands, ReportIsConsistent) {
  CliRun r = run("report", kModelA);
  ASSERT_EQ(r.code, kOk) << r.err;
  Json j = Json::parse(r.out);
  EXPECT_TRUE(j["consistent"].get<bool>());
}

TEST(Dot, ModelAMap) {
  Model m = parse_model(kModelA);
  const DiagMap& p = lookup_morphism(m, "p");
  std::string dot = dot_map(p, "E", "B");
  EXPECT_EQ(dot, dot_map(p, "E", "B"));
  EXPECT_EQ(count(dot, "[label="), 6u);
  EXPECT_EQ(count(dot, "style=dashed"), 3u);
  EXPECT_EQ(count(dot, "subgraph cluster_"), 2u);
}

TEST(Dot, FactorizationHasThreeColumns) {
  CliRun r = run("factorize", kModelA, Args{.map = "p", .dot = true});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out.rfind("digraph", 0), 0u);
  EXPECT_EQ(count(r.out, "subgraph cluster_"), 3u);
}

TEST(Dot, EmptyDiagram) {
  std::string dot = dot_diagram(Diagram());
  EXPECT_EQ(dot.rfind("digraph", 0), 0u);
  EXPECT_EQ(count(dot, "->"), 0u);
  EXPECT_EQ(count(dot, "[label="), 0u);
}

TEST(Corpus, ChecksPass) {
  std::size_t seen = 0;
  for (const auto& entry : std::filesystem::directory_iterator(POLYFUN_MODELS_DIR)) {
    if (entry.path().extension() != ".json") continue;
    std::ifstream in(entry.path());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CliRun r = run("check", text, Args{.seed = 7});
    EXPECT_EQ(r.code, kOk) << entry.path() << "\n" << r.out << r.err;
    ++seen;
  }
  EXPECT_GE(seen, 3u);
}

}  // namespace
