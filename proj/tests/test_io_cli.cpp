#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "sigfrust/error.hpp"
#include "sigfrust/io.hpp"
#include "sigfrust/petersen.hpp"

using namespace sigfrust;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() : path_(fs::temp_directory_path() / ("sigfrust_test_" + std::to_string(::getpid()))) {
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void write(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

std::string read(const std::string& path) {
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Parse, TriangleWithOneNegativeEdge) {
  auto sg = parse_signed_graph("sg 3 3\ne 0 1 +\ne 1 2 +\ne 2 0 -");
  EXPECT_EQ(sg.graph().vertex_count(), 3U);
  EXPECT_EQ(sg.graph().edge_count(), 3U);
  EXPECT_EQ(sg.negatives().members(), (std::vector<std::size_t>{2}));
  EXPECT_EQ(sg.graph().edge(2).u, 2U);
  EXPECT_FALSE(is_balanced(sg));
}

TEST(Parse, CommentsAndBlankLines) {
  auto sg = parse_signed_graph("# header comment\n\nsg 2 1   # trailing\n\n  e 0 1 -  \n");
  EXPECT_EQ(sg.negatives().size(), 1U);
}

TEST(Parse, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_signed_graph(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  EXPECT_EQ(line_of("sg 3 2\ne 0 1 +\ne 1 2 x\n"), 3U);
  EXPECT_EQ(line_of("e 0 1 +\n"), 1U);
  EXPECT_EQ(line_of("sg 3 1\n\ne 0 1\n"), 3U);
  EXPECT_EQ(line_of("sg 3 1\ne 0 9 +\n"), 2U);
  EXPECT_EQ(line_of("sg 3 two\n"), 1U);
  EXPECT_EQ(line_of("sg 3 1\ne 0 1 +\ne 1 2 +\n"), 3U);
  EXPECT_NE(line_of("sg 3 2\ne 0 1 +\n"), 0U);
  EXPECT_NE(line_of(""), 0U);
}

TEST(Parse, LoopsAndDuplicatesAreValidityErrors) {
  EXPECT_THROW(parse_signed_graph("sg 1 1\ne 0 0 +\n"), InvalidInput);
  EXPECT_THROW(parse_signed_graph("sg 2 2\ne 0 1 +\ne 1 0 -\n"), InvalidInput);
}

TEST(Serialize, CanonicalText) {
  auto sg = parse_signed_graph("sg 3 3\ne 0   1 +\ne 1 2 +\ne 2 0 -");
  EXPECT_EQ(serialize_signed_graph(sg), "sg 3 3\ne 0 1 +\ne 1 2 +\ne 2 0 -\n");
}

TEST(Serialize, RoundTripsGeneratedInstances) {
  for (std::size_t n = 3; n <= 12; ++n) {
    for (std::size_t k = 1; 2 * k < n; ++k) {
      auto p = generate_petersen(n, k);
      Signature s(3 * n);
      for (std::size_t e = 0; e < 3 * n; e += (n % 3) + 2) s.insert(e);
      SignedGraph sg(p.graph_ptr(), s);
      const std::string text = serialize_signed_graph(sg);
      auto back = parse_signed_graph(text);
      EXPECT_EQ(back, sg);
      EXPECT_EQ(serialize_signed_graph(back), text);
    }
  }
  auto p71 = generate_petersen(7, 1);
  SignedGraph fig(p71.graph_ptr(), extremal_signature_prism(7));
  EXPECT_EQ(parse_signed_graph(serialize_signed_graph(fig)), fig);
}

TEST(Roles, RoundTrip) {
  auto p = generate_petersen(7, 3);
  auto text = serialize_roles(p.roles());
  EXPECT_EQ(text.substr(0, 13), "role 0 outer\n");
  EXPECT_EQ(parse_roles(text, 21), p.roles());
  EXPECT_THROW(parse_roles("role 0 outer\n", 2), ParseError);
  EXPECT_THROW(parse_roles("role 0 middle\n", 1), ParseError);
}

TEST(Format, JsonAndCsvCarrySameValues) {
  SolveResult r;
  r.method = "switching-gray";
  r.value = 4;
  r.witness = {0, 9, 11, 13};
  r.explored = 8192;
  r.elapsed_ms = 1.5;
  auto j = nlohmann::json::parse(format_result(r, OutputFormat::kJson));
  EXPECT_EQ(j["method"], "switching-gray");
  EXPECT_EQ(j["value"], 4);
  EXPECT_EQ(j["witness"], nlohmann::json({0, 9, 11, 13}));
  EXPECT_EQ(j["explored"], 8192);
  EXPECT_EQ(j["witness_kind"], "edges");
  EXPECT_EQ(format_result(r, OutputFormat::kCsv),
            "method,value,witness,explored,elapsed_ms\nswitching-gray,4,0;9;11;13,8192,1.500\n");
  EXPECT_THROW(parse_output_format("xml"), InvalidInput);
}

TEST(Format, ReportTables) {
  TheoremReport r;
  r.theorem = "thm-gcd1-bound";
  r.n = 7;
  r.k = 2;
  r.relation = Relation::kEquals;
  r.claim = 4;
  r.computed = 4;
  r.verdict = Verdict::kPass;
  EXPECT_EQ(format_reports({r}, OutputFormat::kCsv), "theorem,n,k,claim,computed,verdict\nthm-gcd1-bound,7,2,4,4,pass\n");
  auto md = format_reports({r}, OutputFormat::kMarkdown);
  EXPECT_NE(md.find("| theorem | n | k | claim | computed | verdict |"), std::string::npos);
  EXPECT_NE(md.find("| thm-gcd1-bound | 7 | 2 | =4 | 4 | pass |"), std::string::npos);
  auto j = nlohmann::json::parse(format_reports({r}, OutputFormat::kJson));
  EXPECT_EQ(j[0]["computed"], 4);
  EXPECT_EQ(j[0]["verdict"], "pass");
}

TEST(SuiteConfigText, ParsesKeys) {
  auto c = parse_suite_config(
      "# ranges\npetersen = 5:2, 7:3\np3kk = 2\nrestricted_n = 3..5\nfi_fn =\nseed = 9\nworkers = 2\n"
      "budget_classes = 512\nsymmetry = on\n");
  EXPECT_EQ(c.petersen, (std::vector<std::pair<std::size_t, std::size_t>>{{5, 2}, {7, 3}}));
  EXPECT_EQ(c.p3kk, (std::vector<std::size_t>{2}));
  EXPECT_EQ(c.restricted_n, (std::vector<std::size_t>{3, 4, 5}));
  EXPECT_TRUE(c.fi_fn.empty());
  EXPECT_EQ(c.seed, 9U);
  EXPECT_EQ(c.options.workers, 2U);
  EXPECT_EQ(c.options.solver.budget_classes, 512U);
  EXPECT_TRUE(c.options.solver.symmetry);
  auto m = parse_suite_config("petersen_max_n = 5\n");
  EXPECT_EQ(m.petersen.size(), 4U);  // (3,1) (4,1) (5,1) (5,2)
  EXPECT_THROW(parse_suite_config("colour = red\n"), ParseError);
  EXPECT_THROW(parse_suite_config("seed = 1\nseed = 2\n"), ParseError);
  EXPECT_THROW(parse_suite_config("petersen = 5-2\n"), ParseError);
}

TEST(Cli, GenThenFrustration) {
  TempDir dir;
  const auto path = dir.file("p71.sg");
  auto gen = run_cli({"gen", "--n", "7", "--k", "1", "--signature", "prism", "--out", path});
  ASSERT_EQ(gen.code, 0) << gen.err;
  EXPECT_EQ(parse_roles(read(path + ".roles"), 21), generate_petersen(7, 1).roles());
  auto fr = run_cli({"frustration", "--in", path, "--format", "json"});
  ASSERT_EQ(fr.code, 0) << fr.err;
  EXPECT_EQ(nlohmann::json::parse(fr.out)["value"], 4);
  auto oracle = run_cli({"frustration", "--in", path, "--method", "edge-deletion", "--format", "csv"});
  EXPECT_NE(oracle.out.find("edge-deletion,4,"), std::string::npos);
  auto fn = run_cli({"frustnum", "--in", path, "--format", "json"});
  EXPECT_EQ(nlohmann::json::parse(fn.out)["value"], 4);
  EXPECT_EQ(nlohmann::json::parse(fn.out)["witness_kind"], "vertices");
}

TEST(Cli, MaxfrustOnPetersenGraph) {
  auto r = run_cli({"maxfrust", "--n", "5", "--k", "2", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["value"], 3);
  auto sym = run_cli({"maxfrust", "--n", "7", "--k", "2", "--symmetry", "on", "--format", "csv"});
  EXPECT_NE(sym.out.find("class-enumeration,4,"), std::string::npos);
}

TEST(Cli, Balance) {
  TempDir dir;
  const auto path = dir.file("plus.sg");
  write(path, "sg 3 3\ne 0 1 +\ne 1 2 +\ne 2 0 +\n");
  auto r = run_cli({"balance", "--in", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "balanced\n");
  write(path, "sg 3 3\ne 0 1 +\ne 1 2 +\ne 2 0 -\n");
  EXPECT_EQ(run_cli({"balance", "--in", path}).out, "unbalanced\n");
}

TEST(Cli, ExploreIsDeterministic) {
  auto a = run_cli({"explore", "--n", "9", "--k", "2", "--trials", "200", "--seed", "4", "--format", "csv"});
  auto b = run_cli({"explore", "--n", "9", "--k", "2", "--trials", "200", "--seed", "4", "--format", "csv"});
  ASSERT_EQ(a.code, 0) << a.err;
  auto strip_time = [](const std::string& s) { return s.substr(0, s.rfind(',')); };
  EXPECT_EQ(strip_time(a.out), strip_time(b.out));
  EXPECT_NE(a.out.find("class-sampling,"), std::string::npos);
}

TEST(Cli, VerifyExitStatus) {
  TempDir dir;
  const auto ok = dir.file("ok.cfg");
  write(ok, "petersen = 5:2, 7:1\np3kk =\nrestricted_n = 3..5\nfi_fn =\n");
  auto pass = run_cli({"verify", "--config", ok, "--format", "csv"});
  EXPECT_EQ(pass.code, 0) << pass.out << pass.err;
  EXPECT_EQ(pass.out.substr(0, 35), "theorem,n,k,claim,computed,verdict\n");

  const auto bad = dir.file("bad.cfg");
  write(bad, "petersen = 11:3\np3kk =\nrestricted_n =\nfi_fn =\n");
  auto fail = run_cli({"verify", "--config", bad, "--format", "md"});
  EXPECT_EQ(fail.code, 1);
  EXPECT_NE(fail.out.find("| thm-gcd1-bound | 11 | 3 | =6 | 5 | fail |"), std::string::npos);

  auto skipped = run_cli({"verify", "--config", ok, "--budget-classes", "4"});
  EXPECT_EQ(skipped.code, 0);
  EXPECT_NE(skipped.out.find("skipped"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"gen", "--n", "6", "--k", "3"}).code, 2);
  EXPECT_EQ(run_cli({"gen", "--n", "7", "--k", "2", "--signature", "prism"}).code, 2);
  EXPECT_EQ(run_cli({"frustration", "--in", "/nonexistent/file.sg"}).code, 2);
  EXPECT_EQ(run_cli({"maxfrust", "--n", "7", "--k", "1", "--format", "yaml"}).code, 2);
  EXPECT_EQ(run_cli({"maxfrust", "--n", "7", "--k", "1", "--budget-classes", "5"}).code, 3);
  EXPECT_EQ(run_cli({"--help"}).code, 0);

  TempDir dir;
  const auto path = dir.file("bad.sg");
  write(path, "sg 2 1\ne 0 1 ?\n");
  auto r = run_cli({"balance", "--in", path});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(Cli, GenToStdoutMatchesSerializer) {
  auto r = run_cli({"gen", "--n", "7", "--k", "3", "--signature", "k3"});
  ASSERT_EQ(r.code, 0);
  auto p = generate_petersen(7, 3);
  EXPECT_EQ(r.out, serialize_signed_graph(SignedGraph(p.graph_ptr(), extremal_signature_k3(2))));
}
