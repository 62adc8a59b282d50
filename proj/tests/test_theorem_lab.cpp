#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "fgh/heights.hpp"
#include "fgh/lab/cli.hpp"
#include "fgh/lab/corpus.hpp"
#include "fgh/lab/expr.hpp"
#include "fgh/lab/group_file.hpp"
#include "fgh/lab/report.hpp"
#include "fgh/lab/verify.hpp"
#include "fgh/subgroup_ops.hpp"

using namespace fgh;
using namespace fgh::lab;

namespace {

std::size_t factorial(std::size_t n) { return n <= 1 ? 1 : n * factorial(n - 1); }

std::size_t power(std::size_t b, std::size_t e) {
  std::size_t r = 1;
  while (e--) r *= b;
  return r;
}

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& file) { return std::string(FGH_TEST_DATA) + "/" + file; }

int tool_exit_code(const std::string& args) {
  const std::string cmd = std::string(FGH_TOOL_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

std::vector<Verdict> run_one(const std::string& theorem, const std::string& group, const LabOptions& opts = {}) {
  return verify({theorem}, {builtin_source(group)}, opts);
}

}  // namespace

// ---------------------------------------------------------------------------
// corpus

TEST(Corpus, OrderFormulas) {
  for (std::size_t n = 1; n <= 6; ++n) {
    EXPECT_EQ(symmetric(n)->order(), factorial(n));
    if (n >= 2) {
      EXPECT_EQ(alternating(n)->order(), factorial(n) / 2);
    }
    EXPECT_EQ(cyclic(n)->order(), n);
  }
  for (std::size_t n = 3; n <= 12; ++n) EXPECT_EQ(dihedral(n)->order(), 2 * n);
  EXPECT_EQ(quaternion8()->order(), 8U);
  EXPECT_EQ(special_linear2(3)->order(), 24U);
  EXPECT_EQ(special_linear2(5)->order(), 120U);
  EXPECT_EQ(projective_special_linear2(5)->order(), 60U);
  EXPECT_EQ(projective_special_linear2(7)->order(), 168U);
  EXPECT_EQ(build_group("S4xC3")->order(), 72U);
  EXPECT_EQ(build_group("A5xA5")->order(), 3600U);
  for (const std::string a : {"C2", "C3"}) {
    for (const std::string b : {"C2", "C3"}) {
      const std::size_t na = build_group(a)->order(), nb = build_group(b)->order();
      EXPECT_EQ(build_group(a + "wr" + b)->order(), power(na, nb) * nb);
    }
  }
}

TEST(Corpus, WreathOfC2ByC2IsDihedralOfOrderEight) {
  const GroupPtr w = build_group("C2wrC2");
  EXPECT_EQ(w->order(), 8U);
  EXPECT_EQ(signature(*w), signature(*dihedral(4)));
  EXPECT_NE(signature(*w), signature(*quaternion8()));
}

TEST(Corpus, ProjectiveQuotientOfSpecialLinear) {
  const GroupPtr sl = special_linear2(5);
  const Quotient q(*sl, center(*sl));
  EXPECT_EQ(signature(q.group()), signature(*projective_special_linear2(5)));
  EXPECT_EQ(signature(*projective_special_linear2(5)), signature(*alternating(5)));
}

TEST(Corpus, DirectProductsActOnDisjointPoints) {
  const BuiltGroup b = build_named("A5xC2");
  EXPECT_EQ(b.group->order(), 120U);
  EXPECT_EQ(b.group->degree(), 7U);
  EXPECT_EQ(b.factor_degrees, (std::vector<std::size_t>{5, 2}));
  EXPECT_TRUE(build_named("S4").factor_degrees.empty());
  EXPECT_EQ(build_group("SL(2,3)")->name(), "SL(2,3)");
}

TEST(Corpus, NameErrors) {
  EXPECT_THROW(build_group("X9"), ParseError);
  EXPECT_THROW(build_group("S4x"), ParseError);
  EXPECT_THROW(build_group("SL(2,5"), ParseError);
  EXPECT_THROW(build_group("D2"), InvalidParameter);
  EXPECT_THROW(build_group("SL(2,4)"), InvalidParameter);
  EXPECT_THROW(build_group("S8"), OrderCapExceeded);
  EXPECT_THROW(build_group("A5xA5", 1000), OrderCapExceeded);
}

TEST(Corpus, EntriesUniqueAndUnderCap) {
  const auto entries = corpus_entries();
  std::set<std::string> names;
  for (const auto& e : entries) {
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    EXPECT_LE(e.order, kDefaultOrderCap);
  }
  for (const auto& base : base_group_names()) EXPECT_TRUE(names.contains(base)) << base;
  for (const std::string w : {"C2wrC2", "C2wrC3", "C3wrC2", "C2xA5", "A5xA5", "S3xS3"}) EXPECT_TRUE(names.contains(w)) << w;
  EXPECT_FALSE(names.contains("S6xS6"));

  CorpusSpec small;
  small.order_cap = 60;
  for (const auto& e : corpus_entries(small)) EXPECT_LE(e.order, 60U);
}

TEST(Corpus, EveryEntryBuildsWithAdvertisedOrder) {
  for (const auto& e : corpus_entries()) {
    if (e.order > 1000) continue;
    const GroupPtr g = build_group(e.name);
    EXPECT_EQ(g->order(), e.order) << e.name;
    EXPECT_EQ(g->name(), e.name);
  }
}

// ---------------------------------------------------------------------------
// group files

TEST(GroupFile, Examples) {
  EXPECT_EQ(parse_group_file("degree 3\ngen 2 1 3\ngen 2 3 1\n")->order(), 6U);
  const GroupPtr v4 = parse_group_file("degree 4\ngen 2 1 4 3\ngen 3 4 1 2\n");
  EXPECT_EQ(v4->order(), 4U);
  EXPECT_TRUE(is_abelian(Subgroup::whole(*v4)));
  EXPECT_THROW(parse_group_file("degree 3\ngen 2 2 1\n"), InvalidPermutation);
}

TEST(GroupFile, CommentsBlankLinesAndCarriageReturns) {
  EXPECT_EQ(parse_group_file("# S3\n\n  # indented comment\ndegree 3\r\n\ngen 2 1 3\r\ngen\t2 3 1\n")->order(), 6U);
}

TEST(GroupFile, ErrorsCarryLineNumbers) {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_group_file(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  EXPECT_EQ(line_of("degree 3\ngen 2 1 3\nswap 1 2\n"), 3U);
  EXPECT_EQ(line_of("# c\ngen 1 2\ndegree 2\n"), 2U);
  EXPECT_EQ(line_of("degree 3\ndegree 3\n"), 2U);
  EXPECT_EQ(line_of("degree 0\n"), 1U);
  EXPECT_EQ(line_of("degree x\n"), 1U);
  EXPECT_EQ(line_of("degree 3 4\n"), 1U);
  EXPECT_EQ(line_of("degree 3\n\ngen 1 2\n"), 3U);
  EXPECT_EQ(line_of("degree 3\ngen 1 2 -3\n"), 2U);
  EXPECT_EQ(line_of("degree 3\n"), 1U);
  EXPECT_EQ(line_of(""), 1U);
}

TEST(GroupFile, LoadFromDisk) {
  const GroupPtr g = load_group_file(data("s3.grp"));
  EXPECT_EQ(g->order(), 6U);
  EXPECT_EQ(g->name(), "file:" + data("s3.grp"));
  EXPECT_EQ(load_group_file(data("v4.grp"))->order(), 4U);
  EXPECT_THROW(load_group_file(data("not_bijective.grp")), InvalidPermutation);
  EXPECT_THROW(load_group_file(data("bad_directive.grp")), ParseError);
  EXPECT_THROW(load_group_file(data("missing.grp")), InvalidParameter);
}

// ---------------------------------------------------------------------------
// functorial expressions

TEST(Expr, Examples) {
  const Functorial fb = parse_functorial_expr("Rp[2]*Fstar*Rp[2]");
  EXPECT_EQ(fb.name(), fbar(2).name());
  EXPECT_EQ(fb(*alternating(5)).order(), 60U);
  const Functorial ft = parse_functorial_expr("Phi*Fstar");
  EXPECT_EQ(ft(*quaternion8()).order(), 8U);
  EXPECT_EQ(ft.flags(), ftilde().flags());
  const Functorial f = parse_functorial_expr("Fstar");
  EXPECT_EQ(f.name(), "Fstar");
  EXPECT_EQ(f(*symmetric(4)).order(), 4U);
}

TEST(Expr, SpacesAndEveryAtom) {
  for (const std::string text : {"Z", "Fit", "Soc", "Phi", "Fstar", "Rsol", "Rp[3]", "Op[2]", " Fit * Fit ", "Rp[ 2 ]"}) {
    if (text == "Rp[ 2 ]") {
      EXPECT_THROW(parse_functorial_expr(text), ParseError);
      continue;
    }
    EXPECT_NO_THROW(parse_functorial_expr(text)) << text;
  }
  EXPECT_EQ(parse_functorial_expr(" Fit * Fit ")(*symmetric(4)).order(), 12U);
}

TEST(Expr, ErrorsCarryColumns) {
  auto column_of = [](const std::string& text) -> std::size_t {
    try {
      parse_functorial_expr(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return 0;
  };
  EXPECT_EQ(column_of("Foo"), 1U);
  EXPECT_EQ(column_of("Fit*Bar"), 5U);
  EXPECT_EQ(column_of("Rp[4]"), 4U);
  EXPECT_EQ(column_of("Rp2"), 3U);
  EXPECT_EQ(column_of("Rp[2"), 5U);
  EXPECT_EQ(column_of("Fit*"), 5U);
  EXPECT_EQ(column_of("Fit Fit"), 5U);
  EXPECT_EQ(column_of(""), 1U);
}

// ---------------------------------------------------------------------------
// reports

TEST(Report, SinglePassAndEmpty) {
  std::ostringstream one;
  emit_report({{"thm6.3", "S4", Status::pass, "htilde=3"}}, one);
  EXPECT_EQ(one.str(), "THEOREM thm6.3 GROUP S4 STATUS pass DETAIL htilde=3\n1 pass / 0 fail / 0 skipped\n");
  std::ostringstream none;
  emit_report({}, none);
  EXPECT_EQ(none.str(), "0 pass / 0 fail / 0 skipped\n");
}

TEST(Report, SortedByTheoremThenGroup) {
  std::vector<Verdict> vs{{"thm6.3", "S4", Status::pass, "a=1"},
                          {"lem2.5", "S3", Status::fail, "b=2"},
                          {"thm6.3", "A5", Status::skipped, "reason=order_cap"}};
  std::ostringstream a, b;
  emit_report(vs, a);
  std::reverse(vs.begin(), vs.end());
  emit_report(vs, b);
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str(),
            "THEOREM lem2.5 GROUP S3 STATUS fail DETAIL b=2\n"
            "THEOREM thm6.3 GROUP A5 STATUS skipped DETAIL reason=order_cap\n"
            "THEOREM thm6.3 GROUP S4 STATUS pass DETAIL a=1\n"
            "1 pass / 1 fail / 1 skipped\n");
}

TEST(Report, UnwritableDestinationThrows) {
  std::ofstream bad("/nonexistent-dir/report.txt");
  EXPECT_THROW(emit_report({{"x", "y", Status::pass, ""}}, bad), Error);
}

TEST(Report, DetailRoundTrip) {
  Detail d;
  d.add("n", 3).add("text", std::string("a;b\nc")).add("h", Height::unbounded().to_string());
  EXPECT_EQ(d.str(), "n=3;text=a b c;h=inf");
  const auto m = parse_detail(d.str());
  EXPECT_EQ(m.at("n"), "3");
  EXPECT_EQ(m.at("text"), "a b c");
  EXPECT_EQ(m.at("h"), "inf");
}

// ---------------------------------------------------------------------------
// verification suites

TEST(Verify, ExampleProductOfCyclicGroups) {
  const auto vs = run_one("thm1.2.1", "S3");
  ASSERT_EQ(vs.size(), 1U);
  EXPECT_EQ(vs[0].status, Status::pass);
  const auto d = parse_detail(vs[0].detail);
  EXPECT_EQ(d.at("max"), "1");
  EXPECT_EQ(d.at("hstar"), "2");
  EXPECT_GE(std::stoul(d.at("nontrivial")), 1U);
}

TEST(Verify, NonFrattiniBoundsOnS4) {
  const auto vs = run_one("thm6.3", "S4");
  ASSERT_EQ(vs.size(), 1U);
  EXPECT_EQ(vs[0].status, Status::pass);
  const auto d = parse_detail(vs[0].detail);
  EXPECT_EQ(d.at("htilde"), "3");
  EXPECT_EQ(d.at("hstar"), "3");
  EXPECT_EQ(d.at("twice_htilde"), "6");
}

TEST(Verify, TightenedBoundFailsOnS3AndReplays) {
  LabOptions opts;
  opts.tighten_thm121 = true;
  const auto vs = run_one("thm1.2.1", "S3", opts);
  ASSERT_EQ(vs.size(), 1U);
  EXPECT_EQ(vs[0].status, Status::fail);
  const auto d = parse_detail(vs[0].detail);
  ASSERT_TRUE(d.contains("witness"));
  EXPECT_TRUE(contains(d.at("witness"), "<(1,2,3)>"));
  const auto again = run_one("thm1.2.1", "S3", opts);
  EXPECT_EQ(again[0].detail, vs[0].detail);
}

TEST(Verify, CorruptedInneriserFailsOracle) {
  LabOptions opts;
  opts.inneriser = InneriserMode::corrupted;
  const auto vs = run_one("fstar", "A5", opts);
  ASSERT_EQ(vs.size(), 1U);
  EXPECT_EQ(vs[0].status, Status::fail);
  EXPECT_TRUE(parse_detail(vs[0].detail).contains("witness"));
}

TEST(Verify, PropertySuiteRecordsFrattiniWitnessOnQ8) {
  const auto vs = run_one("props", "Q8");
  ASSERT_EQ(vs.size(), 1U);
  EXPECT_EQ(vs[0].status, Status::pass);
  const auto d = parse_detail(vs[0].detail);
  EXPECT_TRUE(contains(d.at("phi_f3"), "fail"));
  EXPECT_TRUE(contains(d.at("phi_f3"), "<(1,5)(2,6)(3,7)(4,8)>"));
  EXPECT_EQ(parse_detail(run_one("props", "S4")[0].detail).at("phi_f3"), "pass");
}

TEST(Verify, SkipsOverCaps) {
  LabOptions opts;
  opts.order_cap = 100;
  const auto over = verify({"thm6.3"}, {builtin_source("S5", 120)}, opts);
  ASSERT_EQ(over.size(), 1U);
  EXPECT_EQ(over[0].status, Status::skipped);
  EXPECT_EQ(over[0].detail, "reason=order_cap");
  const auto unknown_order = verify({"thm6.3"}, {builtin_source("S5")}, opts);
  EXPECT_EQ(unknown_order[0].status, Status::skipped);

  const auto lattice = run_one("thm1.2.1", "S5xC6");
  EXPECT_EQ(lattice[0].status, Status::skipped);
  EXPECT_EQ(lattice[0].detail, "reason=lattice_cap");
  EXPECT_EQ(run_one("lem2.6", "S4")[0].status, Status::skipped);
  EXPECT_EQ(run_one("lem2.2", "S4")[0].status, Status::skipped);
  EXPECT_EQ(run_one("lem2.2", "S3xC4")[0].status, Status::pass);
}

TEST(Verify, SuitesPassOnMixedSample) {
  const std::vector<std::string> names{"S3", "S4", "Q8", "D6", "SL(2,3)", "A5", "C2xA5", "S3xC3", "C2wrC3"};
  std::vector<SubjectSource> sources;
  for (const auto& n : names) sources.push_back(builtin_source(n));
  const auto vs = verify(theorem_ids(), sources, LabOptions{}, 2);
  EXPECT_EQ(vs.size(), names.size() * theorem_ids().size());
  for (const auto& v : vs) EXPECT_NE(v.status, Status::fail) << v.theorem << " " << v.group << " " << v.detail;
}

TEST(Verify, ScheduleIndependent) {
  std::vector<SubjectSource> sources;
  for (const std::string n : {"S4", "D6", "A5", "C2xS3", "Q8", "C3wrC2", "SL(2,3)", "C4xS3"}) sources.push_back(builtin_source(n));
  std::ostringstream one, three;
  emit_report(verify(theorem_ids(), sources, LabOptions{}, 1), one);
  emit_report(verify(theorem_ids(), sources, LabOptions{}, 3), three);
  EXPECT_EQ(one.str(), three.str());
}

TEST(Verify, TheoremIdResolution) {
  const auto ids = theorem_ids();
  EXPECT_TRUE(std::is_sorted(ids.begin(), ids.end()));
  for (const std::string id : {"thm1.2.1", "thm1.2.2", "cor1.3", "lem2.2", "lem2.5", "lem2.6", "thm2.8", "lem3.3",
                               "lem3.6", "lem4.2", "lem4.3", "lem5.1", "thm6.3", "prop6.4", "thm6.6", "ex6.5"}) {
    EXPECT_NE(std::find(ids.begin(), ids.end(), id), ids.end()) << id;
  }
  EXPECT_EQ(resolve_theorems("all"), ids);
  EXPECT_EQ(resolve_theorems("thm6.3,lem2.5,thm6.3"), (std::vector<std::string>{"thm6.3", "lem2.5"}));
  EXPECT_THROW(resolve_theorems("thm9.9"), UnknownTheorem);
  EXPECT_THROW(resolve_theorems("thm6.3,"), UnknownTheorem);
  EXPECT_THROW(verify({"nope"}, {}, LabOptions{}), UnknownTheorem);
}

TEST(Verify, FileSourcesAndLoadErrors) {
  const auto vs = verify({"thm1.2.1"}, {file_source(data("s3.grp"))}, LabOptions{}, 2);
  ASSERT_EQ(vs.size(), 1U);
  EXPECT_EQ(vs[0].status, Status::pass);
  EXPECT_EQ(vs[0].group, "file:" + data("s3.grp"));
  EXPECT_THROW(verify({"thm1.2.1"}, {file_source(data("bad_directive.grp"))}, LabOptions{}, 2), ParseError);
}

// ---------------------------------------------------------------------------
// command line

TEST(Cli, InfoOnS3) {
  const auto r = cli({"info", "--group", "S3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "h* = 2\n"));
  EXPECT_TRUE(contains(r.out, "order = 6\n"));
  EXPECT_TRUE(contains(r.out, "lambda_2 = 0\n"));
}

TEST(Cli, FactorizeS3Mutually) {
  const auto r = cli({"factorize", "--group", "S3", "--mutually"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "(C2, C3) A=<(1,2)> B=<(1,2,3)> mutually=yes totally=yes\n"));
  const auto t = cli({"factorize", "--group", "S3", "--totally"});
  EXPECT_FALSE(contains(t.out, "(S3, S3)"));
  EXPECT_EQ(cli({"factorize", "--group", "S3", "--totally", "--mutually"}).code, 2);
}

TEST(Cli, SeriesOfFbarOnS5) {
  const auto r = cli({"series", "--group", "S5", "--functorial", "Rp[2]*Fstar*Rp[2]"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "functorial = Rp[2]*Fstar*Rp[2]\n"));
  EXPECT_TRUE(contains(r.out, "flags = F1,F2,F3\n"));
  EXPECT_TRUE(contains(r.out, "height = 1\n"));
  const auto fit = cli({"series", "--group", "A5", "--functorial", "Fit"});
  EXPECT_TRUE(contains(fit.out, "complete = no\n"));
  EXPECT_TRUE(contains(fit.out, "height = inf\n"));
}

TEST(Cli, GroupFromFile) {
  const auto r = cli({"info", "--group", "file:" + data("v4.grp")});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "order = 4\n"));
  EXPECT_TRUE(contains(r.out, "h* = 1\n"));
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(cli({"verify", "--group", "S3", "--theorem", "thm1.2.1"}).code, 0);
  const auto bad = cli({"verify", "--group", "S3", "--theorem", "thm1.2.1", "--mutate", "tighten-thm1.2.1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_TRUE(contains(bad.out, "STATUS fail"));
  EXPECT_TRUE(contains(bad.out, "0 pass / 1 fail / 0 skipped\n"));
}

TEST(Cli, VerifyWritesReportFile) {
  const auto path = std::filesystem::temp_directory_path() / "fgh_cli_report.txt";
  const auto r = cli({"verify", "--group", "S4", "--theorem", "thm6.3,lem2.5", "--report", path.string(), "--jobs", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2 pass / 0 fail / 0 skipped\n");
  std::ifstream f(path);
  std::stringstream text;
  text << f.rdbuf();
  EXPECT_TRUE(contains(text.str(), "THEOREM lem2.5 GROUP S4 STATUS pass"));
  EXPECT_TRUE(contains(text.str(), "THEOREM thm6.3 GROUP S4 STATUS pass"));
  std::filesystem::remove(path);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"bogus"}).code, 2);
  EXPECT_EQ(cli({"info", "--group", "X7"}).code, 2);
  EXPECT_EQ(cli({"info", "--primes", "2,4"}).code, 2);
  EXPECT_EQ(cli({"series", "--functorial", "Rp[9]"}).code, 2);
  EXPECT_EQ(cli({"verify", "--theorem", "thm0"}).code, 2);
  EXPECT_EQ(cli({"verify", "--group", "S3", "--mutate", "nothing"}).code, 2);
  EXPECT_EQ(cli({"info", "--group", "file:" + data("not_bijective.grp")}).code, 2);
  EXPECT_EQ(cli({"info", "--group", "S6", "--order-cap", "100"}).code, 2);
  EXPECT_TRUE(contains(cli({"info", "--group", "X7"}).err, "error:"));
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, CorpusListing) {
  const auto r = cli({"corpus", "--order-cap", "10"});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(contains(r.out, "S3 6\n"));
  EXPECT_TRUE(contains(r.out, "C2xC5 10\n"));
  EXPECT_FALSE(contains(r.out, "S4 24\n"));
}

TEST(Cli, ToolBinaryExitCodes) {
  EXPECT_EQ(tool_exit_code("info --group S3"), 0);
  EXPECT_EQ(tool_exit_code("verify --group S3 --theorem thm1.2.1 --mutate tighten-thm1.2.1"), 1);
  EXPECT_EQ(tool_exit_code("verify --theorem nope"), 2);
}
