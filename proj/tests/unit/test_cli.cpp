#include <doctest.h>

#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "support.hpp"

using namespace qposet::test;
namespace cli = qposet::cli;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& s, const std::string& needle) { return s.find(needle) != std::string::npos; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("check") {
    auto r = run({"check", fixture("fig7.poset"), "-p", "paraorthomodular"});
    CHECK(r.code == cli::kFailed);
    CHECK(contains(r.out, "paraorthomodular: false  [witness (a,b')]"));
    r = run({"check", fixture("fig2a.poset"), "-p", "lattice", "-p", "paraorthomodular"});
    CHECK(r.code == cli::kOk);
    r = run({"check", fixture("fig4.poset")});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "paraorthomodular: false"));
    CHECK(run({"check", fixture("fig2a.poset"), "-p", "bogus"}).code == cli::kBadInput);
    CHECK(run({"check", fixture("missing.poset")}).code == cli::kBadInput);
    CHECK(run({"check"}).code == cli::kBadInput);
  }

  TEST_CASE("table") {
    auto r = run({"table", fixture("fig2a.poset"), "--op", "i1"});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "b' | b   a   b   a'  b'  1"));
    r = run({"table", fixture("fig1a.poset"), "--op", "i3"});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "{a',b'}"));
    CHECK(run({"table", fixture("fig1a.poset"), "--op", "i1"}).code == cli::kBadInput);
    CHECK(run({"table", fixture("fig2a.poset"), "--op", "i9"}).code == cli::kBadInput);
  }

  TEST_CASE("amalgam") {
    auto r = run({"amalgam", fixture("greechie_triangle.family"), "--classify"});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "loops of order 3: 1"));
    CHECK(contains(r.out, "verdict: consistent"));
    r = run({"amalgam", fixture("greechie_square.family"), "--loops", "4"});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "loop K1 K2 K3 K4 atoms a1 a2 a3 a4"));
    r = run({"amalgam", fixture("fig5.family"), "--covers"});
    CHECK(contains(r.out, "(a,a') interlopers {c,c'}"));
    r = run({"amalgam", fixture("fig5.family"), "--export-dot"});
    CHECK(r.code == cli::kOk);
    CHECK(contains(r.out, "digraph"));
  }

  TEST_CASE("verify") {
    auto r = run({"verify", "--max-n", "5", "--json"});
    CHECK(r.code == cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    CHECK(j.contains("theorems"));
    auto r8 = run({"verify", "--max-n", "5", "--json", "-j", "8"});
    CHECK(r8.out == r.out);
    CHECK(run({"verify", "--max-n", "5", "--theorems", "th1,nope"}).code == cli::kBadInput);
    CHECK(run({"verify", "--max-n", "12"}).code == cli::kBadInput);
  }

  TEST_CASE("search") {
    auto r = run({"search", "--implies", "paraorthomodular,orthomodular", "--min-n", "6", "--max-n", "6"});
    CHECK(r.code == cli::kFailed);
    CHECK(contains(r.out, "counterexample n6:"));
    CHECK(contains(r.out, "inv a a"));
    r = run({"search", "--implies", "orthomodular,paraorthomodular", "--max-n", "6"});
    CHECK(r.code == cli::kOk);
    CHECK(run({"search", "--implies", "orthomodular,paraorthomodular", "--max-n", "8", "--budget", "5"}).code ==
          cli::kBudget);
    CHECK(run({"search", "--implies", "orthomodular", "--max-n", "6"}).code == cli::kBadInput);
  }

  TEST_CASE("export") {
    auto r = run({"export", fixture("fig1a.poset"), "--text"});
    CHECK(r.code == cli::kOk);
    CHECK(r.out == qposet::read_file(fixture("fig1a.poset")));
    r = run({"export", fixture("fig4.poset"), "--dot"});
    CHECK(contains(r.out, "rankdir=BT;"));
    r = run({"export", fixture("fig2a.poset"), "--json"});
    CHECK(nlohmann::json::parse(r.out)["name"] == "fig2a");
  }
}
