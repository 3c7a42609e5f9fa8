#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "taft/cli.hpp"
#include "taft/error.hpp"
#include "taft/json_io.hpp"

using namespace taft;
using io::Json;
namespace fs = std::filesystem;

namespace {

const std::string kFixtures = TAFT_FIXTURE_DIR;

// parse the document with the reader for its kind and emit it again
Json reparse(const Json& doc) {
  const std::string kind = io::document_kind(doc);
  if (kind == "semisimple_spec") return io::semisimple_spec_to_json(io::semisimple_spec_from_json(doc));
  if (kind == "hma") return io::hma_to_json(io::hma_from_json(doc));
  if (kind == "graded_algebra") return io::graded_algebra_to_json(io::graded_algebra_from_json(doc));
  throw std::runtime_error("unexpected fixture kind " + kind);
}

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "taft");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

fs::path temp_dir() {
  const fs::path d = fs::temp_directory_path() / ("taft_test_" + std::to_string(::getpid()));
  fs::create_directories(d);
  return d;
}

}  // namespace

TEST(Json, FixturesRoundTrip) {
  std::size_t count = 0;
  for (const auto& entry : fs::directory_iterator(kFixtures)) {
    if (entry.path().extension() != ".json") continue;
    const Json doc = io::read_json_file(entry.path().string());
    const Json once = reparse(doc);
    EXPECT_EQ(io::canonical(reparse(once)), io::canonical(once)) << entry.path();
    EXPECT_EQ(io::canonical(once), io::canonical(doc)) << entry.path();
    ++count;
  }
  EXPECT_GE(count, 12u);
}

TEST(Json, ShippedFixturesMatchGenerator) {
  const fs::path dir = temp_dir() / "fx";
  const auto names = cli::write_fixtures(dir.string());
  for (const auto& n : names) {
    EXPECT_EQ(io::canonical(io::read_json_file((dir / n).string())),
              io::canonical(io::read_json_file((fs::path(kFixtures) / n).string())))
        << n;
  }
  fs::remove_all(dir.parent_path());
}

TEST(Json, ScalarForms) {
  EXPECT_EQ(io::cyc_from_json(Json(3), 4), CycNum::rational(4, 3));
  EXPECT_EQ(io::cyc_from_json(Json("-2/6"), 4), CycNum::rational(4, Rational(-1, 3)));
  EXPECT_EQ(io::cyc_from_json(Json{{"zeta", 5}}, 4), CycNum::zeta_power(4, 1));
  EXPECT_EQ(io::cyc_from_json(Json{{"m", 4}, {"coeffs", {"0", "1"}}}, 4), CycNum::zeta_power(4, 1));
  const CycNum x = CycNum::zeta_power(5, 2) + CycNum::rational(5, Rational(1, 7));
  EXPECT_EQ(io::cyc_from_json(io::cyc_to_json(x), 5), x);
  EXPECT_THROW(io::cyc_from_json(Json("0.5"), 4), ValidationError);
  EXPECT_THROW(io::cyc_from_json(Json("1/0"), 4), ValidationError);
  EXPECT_THROW(io::cyc_from_json(Json{{"m", 3}, {"coeffs", {"1"}}}, 4), ValidationError);
  EXPECT_THROW(io::cyc_from_json(Json::array(), 4), ValidationError);
}

TEST(Json, SchemaErrors) {
  Json doc = io::read_json_file(kFixtures + "/ff_alpha_2.json");
  Json no_format = doc;
  no_format.erase("format");
  EXPECT_THROW(io::semisimple_spec_from_json(no_format), ValidationError);
  Json wrong_alpha = doc;
  wrong_alpha["alpha"] = 5;
  EXPECT_THROW(io::semisimple_spec_from_json(wrong_alpha), ValidationError);
  Json missing = doc;
  missing.erase("Q");
  EXPECT_THROW(io::semisimple_spec_from_json(missing), ValidationError);
  Json kind = doc;
  kind["kind"] = "hma";
  EXPECT_THROW(io::semisimple_spec_from_json(kind), ValidationError);
  Json shape = doc;
  shape["P"] = Json::array({Json::array({1, 2})});
  EXPECT_THROW(io::semisimple_spec_from_json(shape), ValidationError);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"hopf-check", "--m", "4"}).code, 0);
  EXPECT_EQ(run_cli({"no-such-command"}).code, 2);
  EXPECT_EQ(run_cli({"verify", "--in", "/nonexistent.json"}).code, 2);
  const CliRun budget = run_cli({"codim", "--in", kFixtures + "/sweedler2dim.json", "--n", "3", "--budget", "10"});
  EXPECT_EQ(budget.code, 2);
  EXPECT_NE(budget.err.find("budget"), std::string::npos);
  EXPECT_TRUE(budget.out.empty());

  // a structure with a broken action
  const fs::path d = temp_dir();
  Json h = io::read_json_file(kFixtures + "/sweedler2dim.json");
  h["v"][0][0] = 1;
  io::write_json_file((d / "bad.json").string(), h);
  const CliRun bad = run_cli({"verify", "--in", (d / "bad.json").string()});
  EXPECT_EQ(bad.code, 2);
  EXPECT_FALSE(Json::parse(bad.out)["ok"].get<bool>());
  std::ofstream((d / "garbage.json").string()) << "{not json";
  EXPECT_EQ(run_cli({"simple", "--in", (d / "garbage.json").string()}).code, 2);
  fs::remove_all(d);
}

TEST(Cli, Pipeline) {
  const fs::path d = temp_dir();
  const std::string hma = (d / "hma.json").string();
  ASSERT_EQ(run_cli({"construct", "ss", "--in", kFixtures + "/sweedler_p_gamma3.json", "--out", hma}).code, 0);
  const CliRun s = run_cli({"simple", "--in", hma});
  ASSERT_EQ(s.code, 0);
  EXPECT_EQ(Json::parse(s.out)["verdict"], "CertifiedSimple");
  EXPECT_EQ(run_cli({"verify", "--in", hma}).code, 0);

  const CliRun c = run_cli({"codim", "--in", kFixtures + "/sweedler2dim.json", "--n", "1"});
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "{\"n\":1,\"c\":3}\n");
  const CliRun csv = run_cli({"codim", "--in", kFixtures + "/sweedler2dim.json", "--n", "2", "--report", "csv"});
  EXPECT_EQ(csv.out.substr(0, csv.out.find('\n')), "n,rows,cols,c_n,bound_ok,wall_ms");

  const std::string ne = (d / "ne.json").string();
  ASSERT_EQ(run_cli({"construct", "nilext", "--in", kFixtures + "/b_m2_elementary.json", "--out", ne}).code, 0);
  const CliRun r = run_cli({"recover", "--in", ne});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["B"]["algebra"]["dim"], 4);
  EXPECT_EQ(run_cli({"recover", "--in", hma}).code, 2);

  const CliRun iso = run_cli({"iso-ss", "--a", kFixtures + "/ff_alpha_1.json", "--b", kFixtures + "/ff_alpha_minus1.json"});
  EXPECT_TRUE(Json::parse(iso.out)["isomorphic"].get<bool>());
  const CliRun rad = run_cli({"radical", "--in", kFixtures + "/sweedler2dim.json"});
  EXPECT_EQ(Json::parse(rad.out)["dim"], 1);
  const CliRun q = run_cli({"qbinom", "--m", "3"});
  EXPECT_EQ(q.code, 0);
  EXPECT_EQ(Json::parse(q.out)["rows"].size(), 7u);
  fs::remove_all(d);
}
