#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli/commands.hpp"
#include "sqtile/construct.hpp"
#include "sqtile/dehn.hpp"
#include "sqtile/document.hpp"
#include "sqtile/errors.hpp"
#include "sqtile/expr_parse.hpp"
#include "support/random_tilings.hpp"

using namespace sqtile;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  const auto path = std::filesystem::temp_directory_path() / ("sqtile_cli_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

const std::string kFig4 = testing::data_path("fig4.tiling");

}  // namespace

TEST_CASE("validate") {
  const Run ok = run({"validate", kFig4});
  CHECK(ok.code == cli::kOk);
  CHECK(ok.out.find("valid") != std::string::npos);

  Tiling gap = testing::fig4_tiling();
  gap.tiles.pop_back();
  const Run bad = run({"validate", temp_file("gap.tiling", serialize_document(gap)), "--format", "json"});
  CHECK(bad.code == cli::kRefuted);
  const json j = json::parse(bad.out);
  CHECK(j["verdict"] == "invalid");
  CHECK(j["failures"][0]["kind"] == "gap");
  CHECK(j["exit_code"] == 1);

  CHECK(run({"validate", "/nonexistent/file.tiling"}).code == cli::kInputError);
  CHECK(run({"validate", temp_file("junk.tiling", "{not json")}).code == cli::kInputError);

  const std::string coarse = R"({
    "generators": [{"symbol": "a", "lo": "1/2", "hi": "3/4"}, {"symbol": "b", "lo": "1/2", "hi": "3/4"}],
    "outer": {"w": "1", "h": "1"},
    "tiles": [{"x": "0", "y": "0", "w": "1*a", "h": "1"}, {"x": "1*b", "y": "0", "w": "1 - 1*b", "h": "1"}]
  })";
  CHECK(run({"validate", temp_file("coarse.tiling", coarse)}).code == cli::kAmbiguous);
}

TEST_CASE("decide") {
  const Run r = run({"decide", "--width", "1", "--height", "1*sqrt2", "--gen", "sqrt2=[1393/985,577/408]"});
  CHECK(r.code == cli::kRefuted);
  CHECK(r.out.find("y = -1") != std::string::npos);

  const Run t = run({"decide", "--width", "3", "--height", "2", "--format", "json"});
  CHECK(t.code == cli::kOk);
  CHECK(json::parse(t.out)["ratio"] == "2/3");

  CHECK(run({"decide", "--width", "1", "--height", "1*sqrt2", "--y", "1"}).code == cli::kInputError);
  CHECK(run({"decide", "--width", "1", "--height", "1*pi"}).code == cli::kInputError);
  CHECK(run({"decide", "--width", "1"}).code == cli::kInputError);
  CHECK(run({"decide", "--width", "1", "--height", "1*x - 1*y", "--gen", "x=[1,2]", "--gen", "y=[1,2]"})
            .code == cli::kAmbiguous);
  CHECK(run({"bogus"}).code == cli::kInputError);
  CHECK(run({"decide", "--width", "1", "--height", "1", "--gen", "x=1,2"}).code == cli::kInputError);
}

TEST_CASE("decide JSON certificate re-verifies") {
  const Run r = run({"decide", "--width", "1", "--height", "2 + 1*sqrt2", "--y", "-5/2", "--format", "json"});
  REQUIRE(r.code == cli::kRefuted);
  const json j = json::parse(r.out);
  GeneratorTable tab;
  for (const auto& g : j["generators"]) {
    tab.declare(g["symbol"], Rational::parse(g["lo"].get<std::string>()),
                Rational::parse(g["hi"].get<std::string>()));
  }
  const LinExpr w = parse_expr(j["width"].get<std::string>(), tab);
  const LinExpr h = parse_expr(j["height"].get<std::string>(), tab);
  const Certificate cert{Rational::parse(j["certificate"]["y"].get<std::string>())};
  CHECK(cert.y == Rational(-5, 2));
  CHECK(verify_certificate(w, h, tab, cert));
}

TEST_CASE("construct") {
  const Run r = run({"construct", "--ratio", "3/2"});
  CHECK(r.code == cli::kOk);
  const Tiling t = parse_document(r.out);
  CHECK(t.tiles.size() == 3);
  CHECK(validate(t).valid());

  const std::string out = (std::filesystem::temp_directory_path() / "sqtile_cli_c.tiling").string();
  const Run f = run({"construct", "--width", "2 + 2*sqrt2", "--height", "3 + 3*sqrt2", "--out", out, "--format", "json"});
  CHECK(f.code == cli::kOk);
  CHECK(json::parse(f.out)["squares"] == 3);
  CHECK(parse_document(testing::read_text(out)).tiles.size() == 3);

  CHECK(run({"construct", "--width", "1", "--height", "1*sqrt2"}).code == cli::kRefuted);
  CHECK(run({"construct", "--ratio", "-1"}).code == cli::kInputError);
  CHECK(run({"construct"}).code == cli::kInputError);
}

TEST_CASE("verify") {
  const Run r = run({"verify", kFig4, "--format", "json"});
  CHECK(r.code == cli::kRefuted);
  CHECK(json::parse(r.out)["refutation"] == "tile_not_square");

  const Run sq = run({"verify", temp_file("sq.tiling", serialize_document(euclid_tiling(Rational(8), Rational(13))))});
  CHECK(sq.code == cli::kOk);

  Tiling bad = euclid_tiling(Rational(8), Rational(13));
  bad.tiles.pop_back();
  CHECK(run({"verify", temp_file("sqbad.tiling", serialize_document(bad))}).code == cli::kRefuted);
  CHECK(run({"verify", kFig4, "--y", "0"}).code == cli::kInputError);
}

TEST_CASE("analyze-good") {
  const Run r = run({"analyze-good", "--width", "1", "--height", "1 + 1*sqrt2", "--side", "1", "--side",
                     "1*sqrt2", "--format", "json"});
  CHECK(r.code == cli::kRefuted);
  CHECK(json::parse(r.out)["contradiction"] == "area_mismatch");

  const Run ok = run({"analyze-good", "--width", "2", "--height", "3", "--side", "1", "--side", "1", "--side",
                      "1", "--side", "1", "--side", "1", "--side", "1"});
  CHECK(ok.code == cli::kOk);
  CHECK(run({"analyze-good", "--width", "1", "--height", "1*sqrt3", "--side", "1"}).code ==
        cli::kInputError);
}

TEST_CASE("render") {
  const Run a = run({"render", kFig4, "--precision", "4"});
  const Run b = run({"render", kFig4, "--precision", "4"});
  CHECK(a.code == cli::kOk);
  CHECK(a.out == b.out);
  CHECK(a.out.rfind("<?xml", 0) == 0);

  Tiling gap = testing::fig4_tiling();
  gap.tiles.pop_back();
  CHECK(run({"render", temp_file("rgap.tiling", serialize_document(gap))}).code == cli::kRefuted);
}

TEST_CASE("gen flag parsing") {
  const auto g = cli::parse_gen_flag("pi=[ 314/100 , 315/100 ]");
  CHECK(g.symbol == "pi");
  CHECK(g.lo == "314/100");
  CHECK(g.hi == "315/100");
  CHECK_THROWS_AS(cli::parse_gen_flag("pi"), ParseError);
  CHECK_THROWS_AS(cli::parse_gen_flag("pi=[1]"), ParseError);
}
