#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "modtriple/app/commands.hpp"
#include "modtriple/app/text_io.hpp"
#include "test_util.hpp"

namespace modtriple {
namespace {

using namespace modtriple::testing;
using io::json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "modtriple");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const char* name) { return std::string(MODTRIPLE_FIXTURES) + "/" + name; }

TEST(TextIo, TripleFromJson) {
  ModulusTriple t = io::triple_from_json(io::load_json(R"J({"total":{"kind":"proper"},"plus":"1*P(inf)","minus":"0"})J"));
  EXPECT_EQ(t, T("1*P(inf)", "0"));
}

TEST(TextIo, DivisorFromString) {
  io::Object o = io::object_from_json(io::load_json(R"J("2*P(x^2+1) - 1*P(0)")J"));
  ASSERT_TRUE(std::holds_alternative<Divisor>(o));
  EXPECT_EQ(std::get<Divisor>(o), D("2*P(x^2+1) - 1*P(0)"));
}

TEST(TextIo, ReduciblePointNamed) {
  try {
    io::object_from_json(io::load_json(R"J("1*P(x^2-1)")J"));
    FAIL() << "accepted a reducible point";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::SemanticError);
    EXPECT_NE(std::string(e.what()).find("reducible"), std::string::npos) << e.what();
  }
}

TEST(TextIo, SyntaxErrorHasPosition) {
  try {
    io::load_json("{\n  \"total\": ,\n}");
    FAIL() << "accepted broken JSON";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos) << e.what();
  }
}

TEST(TextIo, SignedPlusRejected) {
  EXPECT_EQ(kind_of([] { io::triple_from_json(io::load_json(R"J({"total":{"kind":"proper"},"plus":"1*P(0) - 1*P(1)","minus":"0"})J")); }),
            ErrorKind::NotEffective);
}

TEST(TextIo, PrintParsePrint) {
  std::vector<io::Object> objs{
      D("3*P(x^2+x+1) - 2*P(inf)"),
      map("x^3-1/2", "x^2+1"),
      RationalMap::constant(ClosedPoint::infinity()),
      T_open({"P(1)", "P(x^2+1)"}, "2*P(0)", "1*P(inf)"),
      Cycle::make(T("1*P(inf)", "0"), T("2*P(inf)", "0"), {Component::make(map("x^2"), map("x"), 3)}),
      IYObject::make(D("1*P(0)"), D("2*P(inf)")),
      MlogObject::make(D("1*P(inf)"), D("2*P(0)")),
      NePair{D("1*P(0) - 2*P(inf)")},
      ModulusPair::make(CurveSpace::open(pts({"P(0)"})), D("2*P(inf)")),
  };
  for (const auto& o : objs) {
    json j = io::object_to_json(o);
    io::Object back = io::object_from_json(io::load_json(j.dump()));
    EXPECT_EQ(back, o) << j.dump();
    EXPECT_EQ(io::object_to_json(back), j);
  }
}

TEST(Cli, AdmissibleIdentity) {
  CliRun r = cli({"check", "admissible", "--cycle", fixture("id.json"), "--source", fixture("box.json"), "--target",
               fixture("boxdual.json")});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, InadmissibleIsNegative) {
  CliRun r = cli({"check", "admissible", "--cycle", fixture("id.json"), "--source", fixture("box.json"), "--target",
               fixture("box2.json")});
  EXPECT_EQ(r.code, 1) << r.err;
}

TEST(Cli, SeparateEmitsTriple) {
  CliRun r = cli({"apply", "separate", "--triple", fixture("t.json"), "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  json j = json::parse(r.out);
  EXPECT_EQ(io::triple_from_json(j["result"]["triple"]), T("1*P(0)", "0"));
}

TEST(Cli, MinCompactifyPrintsLevel) {
  CliRun r = cli({"min-compactify", "--cycle", fixture("sq.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("n = 2"), std::string::npos) << r.out;
}

TEST(Cli, UnsupportedCompositionIsError) {
  CliRun r = cli({"compose", "--first", fixture("box_id.json"), "--second", fixture("sqrt.json"), "--json"});
  EXPECT_EQ(r.code, 2);
  json j = json::parse(r.out);
  EXPECT_EQ(j["verdict"], "error");
  EXPECT_EQ(j["error"]["kind"], "UnsupportedComposition");
}

TEST(Cli, TypeMismatchIsError) {
  CliRun r = cli({"compose", "--first", fixture("box_id.json"), "--second", fixture("sq.json"), "--json"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json::parse(r.out)["error"]["kind"], "TypeMismatch");
}

TEST(Cli, BadInputIsError) {
  CliRun r = cli({"check", "class", "--triple", R"J({"total":{"kind":"proper"},"plus":"1*P(x^2-1)","minus":"0"})J"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("SemanticError"), std::string::npos) << r.err;
}

TEST(Cli, UnknownSuiteIsError) { EXPECT_EQ(cli({"suite", "--suites", "nope"}).code, 2); }

TEST(Cli, SmallSuiteRunPasses) {
  CliRun r = cli({"suite", "--suites", "key-lem,separation", "--samples", "20", "--seed", "7", "--json"});
  EXPECT_EQ(r.code, 0) << r.out;
  json j = json::parse(r.out);
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["suites"].size(), 2u);
}

}  // namespace
}  // namespace modtriple

