#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <braidforge/cli.hpp>

namespace {

struct RunResult {
  int code = 0;
  std::string out, err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream o, e;
  int c = braidforge::cli::run_cli(args, o, e);
  return {c, o.str(), e.str()};
}

bool has_line(const std::string& text, const std::string& line) {
  std::string probe = line + "\n";
  size_t pos = text.find(probe);
  while (pos != std::string::npos) {
    if (pos == 0 || text[pos - 1] == '\n') return true;
    pos = text.find(probe, pos + 1);
  }
  return false;
}

std::string write_file(const std::string& name, const std::string& text) {
  std::string path = "/tmp/" + name;
  std::ofstream f(path);
  f << text;
  return path;
}

std::string graph_a2() {
  return write_file("bf_cli_a2.cox", "vertices: s1 s2\nbond s1 s2 3\n");
}
std::string graph_b2() {
  return write_file("bf_cli_b2.cox", "vertices: s1 s2\nbond s1 s2 4\n");
}
std::string graph_t334() {
  return write_file("bf_cli_t334.cox",
                    "vertices: s1 s2 s3\nbond s1 s2 3\nbond s2 s3 3\nbond s1 s3 4\n");
}
std::string graph_t33inf() {
  return write_file("bf_cli_t33inf.cox",
                    "vertices: a b c\nbond a b 3\nbond b c 3\nbond a c inf\n");
}

}  // namespace

TEST_CASE("normal-form prints the factor code and invariants") {
  RunResult r = run({"normal-form", "--strands", "3", "1 2 1 1"});
  REQUIRE(r.code == 0);
  REQUIRE(has_line(r.out, "strands=3"));
  REQUIRE(has_line(r.out, "factors=D.1"));
  REQUIRE(has_line(r.out, "canonical_length=2"));
  REQUIRE(has_line(r.out, "exponent_sum=4"));
  REQUIRE(r.err.empty());

  RunResult neg = run({"normal-form", "--strands", "3", "-1"});
  REQUIRE(neg.code == 0);
  REQUIRE(has_line(neg.out, "factors=~1"));
  REQUIRE(has_line(neg.out, "exponent_sum=-1"));

  RunResult id = run({"normal-form", "--strands", "3", "1 -1"});
  REQUIRE(id.code == 0);
  REQUIRE(has_line(id.out, "factors=e"));
  REQUIRE(has_line(id.out, "canonical_length=0"));
  REQUIRE(has_line(id.out, "word="));
}

TEST_CASE("malformed words and strand counts are domain errors") {
  RunResult bad = run({"normal-form", "--strands", "3", "1 x"});
  REQUIRE(bad.code == 1);
  REQUIRE(bad.err.find("error=") == 0);
  RunResult one = run({"normal-form", "--strands", "1", "1"});
  REQUIRE(one.code == 1);
  RunResult range = run({"normal-form", "--strands", "3", "5"});
  REQUIRE(range.code == 1);
}

TEST_CASE("compare reports the order with a certificate") {
  RunResult lt = run({"compare", "--strands", "3", "1", "2"});
  REQUIRE(lt.code == 0);
  REQUIRE(has_line(lt.out, "order=LT"));

  RunResult gt = run({"compare", "--strands", "3", "2", "1"});
  REQUIRE(gt.code == 0);
  REQUIRE(has_line(gt.out, "order=GT"));

  RunResult eq = run({"compare", "--strands", "3", "1 2 1", "2 1 2"});
  REQUIRE(eq.code == 0);
  REQUIRE(has_line(eq.out, "order=EQ"));
  REQUIRE(has_line(eq.out, "certificate="));
}

TEST_CASE("classify prints periodic data or a reducing witness") {
  RunResult per = run({"classify", "--strands", "3", "1 2"});
  REQUIRE(per.code == 0);
  REQUIRE(has_line(per.out, "verdict=Periodic"));
  REQUIRE(has_line(per.out, "m=3"));
  REQUIRE(has_line(per.out, "k=1"));

  RunResult red = run({"classify", "--strands", "3", "1", "--radius", "0"});
  REQUIRE(red.code == 0);
  REQUIRE(has_line(red.out, "verdict=Reducible"));
  REQUIRE(has_line(red.out, "conjugator="));
  REQUIRE(has_line(red.out, "support=1"));
  REQUIRE(has_line(red.out, "orbit=1"));

  RunResult none = run({"classify", "--strands", "3", "1 -2", "--radius", "1"});
  REQUIRE(none.code == 0);
  REQUIRE(has_line(none.out, "verdict=NoWitnessFound"));
}

TEST_CASE("roots enumerates with the selected scalar mode") {
  RunResult full = run({"roots", "--graph", graph_a2(), "--full"});
  REQUIRE(full.code == 0);
  REQUIRE(has_line(full.out, "mode=rational"));
  REQUIRE(has_line(full.out, "type=Finite"));
  REQUIRE(has_line(full.out, "full=1"));
  REQUIRE(has_line(full.out, "count=3"));
  REQUIRE(has_line(full.out, "root=1,0:0"));
  REQUIRE(has_line(full.out, "root=0,1:0"));
  REQUIRE(has_line(full.out, "root=1,1:1"));

  RunResult quad = run({"roots", "--graph", graph_b2(), "--full"});
  REQUIRE(quad.code == 0);
  REQUIRE(has_line(quad.out, "mode=quadratic"));
  REQUIRE(has_line(quad.out, "count=4"));

  RunResult missing = run({"roots", "--graph", "/tmp/bf_cli_nothere.cox"});
  REQUIRE(missing.code == 2);
  REQUIRE(missing.err.find("error=") == 0);

  // indefinite type cannot be fully enumerated
  RunResult indef = run({"roots", "--graph", graph_t334(), "--full"});
  REQUIRE(indef.code == 1);
}

TEST_CASE("inversions lists the roots a word sends negative") {
  RunResult r = run({"inversions", "--graph", graph_a2(), "--word", "s1 s2"});
  REQUIRE(r.code == 0);
  REQUIRE(has_line(r.out, "length=2"));
  REQUIRE(has_line(r.out, "root=0,1"));
  REQUIRE(has_line(r.out, "root=1,1"));

  RunResult id = run({"inversions", "--graph", graph_a2(), "--word", ""});
  REQUIRE(id.code == 0);
  REQUIRE(has_line(id.out, "length=0"));

  RunResult bad = run({"inversions", "--graph", graph_a2(), "--word", "zz"});
  REQUIRE(bad.code == 1);
}

TEST_CASE("essential certification round-trips through the protocol") {
  RunResult sub = run({"essential", "--graph", graph_t334(), "--word", "s1"});
  REQUIRE(sub.code == 0);
  REQUIRE(has_line(sub.out, "mode=quadratic"));
  REQUIRE(has_line(sub.out, "verdict=NotEssential"));
  REQUIRE(has_line(sub.out, "reason=proper-support"));
  REQUIRE(has_line(sub.out, "support=s1"));

  RunResult tor = run({"essential", "--graph", graph_t33inf(), "--word", "c a b c"});
  REQUIRE(tor.code == 0);
  REQUIRE(has_line(tor.out, "verdict=NotEssential"));
  REQUIRE(has_line(tor.out, "reason=finite-order"));
  REQUIRE(has_line(tor.out, "order=3"));

  RunResult fin = run({"essential", "--graph", graph_a2(), "--word", "s1"});
  REQUIRE(fin.code == 1);
  REQUIRE(fin.err.find("error=") == 0);
}

TEST_CASE("surface prints invariants, the form, and representation rows") {
  RunResult r = run({"surface", "--graph", graph_a2()});
  REQUIRE(r.code == 0);
  REQUIRE(has_line(r.out, "order=s1,s2"));
  REQUIRE(has_line(r.out, "genus=1"));
  REQUIRE(has_line(r.out, "boundary=1"));
  REQUIRE(has_line(r.out, "chi=-1"));
  REQUIRE(has_line(r.out, "J=0,1"));
  REQUIRE(has_line(r.out, "J=-1,0"));
  REQUIRE(has_line(r.out, "relations=ok"));

  RunResult rep = run({"surface", "--graph", graph_a2(), "--rep", "1 2 1"});
  REQUIRE(rep.code == 0);
  REQUIRE(has_line(rep.out, "row=0,-1"));
  REQUIRE(has_line(rep.out, "row=1,0"));

  RunResult rev = run({"surface", "--graph", graph_a2(), "--order", "s2,s1"});
  REQUIRE(rev.code == 0);
  REQUIRE(has_line(rev.out, "order=s2,s1"));
  REQUIRE(has_line(rev.out, "J=0,-1"));

  RunResult big = run({"surface", "--graph", graph_b2()});
  REQUIRE(big.code == 1);
}

TEST_CASE("the scalar mode environment override is honored") {
  setenv("BRAIDFORGE_SCALAR_MODE", "float", 1);
  RunResult f = run({"roots", "--graph", graph_a2(), "--depth", "2"});
  REQUIRE(f.code == 0);
  REQUIRE(has_line(f.out, "mode=float"));

  setenv("BRAIDFORGE_SCALAR_MODE", "rational", 1);
  RunResult clash = run({"roots", "--graph", graph_b2(), "--depth", "2"});
  REQUIRE(clash.code == 1);

  setenv("BRAIDFORGE_SCALAR_MODE", "bogus", 1);
  RunResult bad = run({"roots", "--graph", graph_a2(), "--depth", "2"});
  REQUIRE(bad.code == 2);
  unsetenv("BRAIDFORGE_SCALAR_MODE");
}

TEST_CASE("usage problems exit with code two") {
  REQUIRE(run({}).code == 2);
  REQUIRE(run({"frobnicate"}).code == 2);
  REQUIRE(run({"normal-form"}).code == 2);
  RunResult help = run({"--help"});
  REQUIRE(help.code == 0);
  REQUIRE(!help.out.empty());
}

TEST_CASE("identical invocations produce identical bytes") {
  std::vector<std::string> args{"normal-form", "--strands", "4", "3 -1 2 2 -3 1"};
  RunResult a = run(args);
  RunResult b = run(args);
  REQUIRE(a.code == b.code);
  REQUIRE(a.out == b.out);
}

TEST_CASE("batch files run in order with per-request framing") {
  std::string path = write_file("bf_cli_batch.txt",
                                "# demo\n"
                                "normal-form --strands 3 \"1 2 1 1\"\n"
                                "frobnicate\n"
                                "compare --strands 3 \"1\" \"2\"\n");
  RunResult r = run({"--batch", path});
  REQUIRE(r.code == 2);
  REQUIRE(has_line(r.out, "request=0"));
  REQUIRE(has_line(r.out, "request=1"));
  REQUIRE(has_line(r.out, "request=2"));
  REQUIRE(has_line(r.out, "factors=D.1"));
  REQUIRE(has_line(r.out, "order=LT"));
  REQUIRE(has_line(r.out, "status=0"));
  REQUIRE(has_line(r.out, "status=2"));
  REQUIRE(r.out.find("request=0") < r.out.find("request=1"));
  REQUIRE(r.out.find("request=1") < r.out.find("request=2"));

  RunResult parallel = run({"--batch", path, "--jobs", "4"});
  REQUIRE(parallel.code == r.code);
  REQUIRE(parallel.out == r.out);
}

TEST_CASE("batch usage errors are reported up front") {
  REQUIRE(run({"--batch", "/tmp/bf_cli_nothere.txt"}).code == 2);
  REQUIRE(run({"--batch", "x", "y", "z"}).code == 2);
  std::string p = write_file("bf_cli_badbatch.txt", "normal-form \"unterminated\n");
  REQUIRE(run({"--batch", p}).code == 2);
  std::string ok = write_file("bf_cli_okbatch.txt", "normal-form --strands 3 \"1\"\n");
  REQUIRE(run({"--batch", ok, "--jobs", "zero"}).code == 2);
  REQUIRE(run({"--batch", ok, "--jobs", "0"}).code == 2);
}
