#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "so3cov/covariants.hpp"
#include "so3cov/verify.hpp"

using namespace so3cov;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  std::string cmd = std::string(SO3COV_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

std::string strip_elapsed(std::string s) {
  // zero out the timing fields so byte comparison sees only the payload
  std::size_t pos = 0;
  while ((pos = s.find("\"elapsed\":", pos)) != std::string::npos) {
    std::size_t end = s.find_first_of(",\n}", pos);
    s.replace(pos, end - pos, "\"elapsed\": 0");
    pos += 10;
  }
  return s;
}

}  // namespace

TEST_CASE("verify subcommand exit codes") {
  CHECK(run("verify eq_221").exit_code == 0);
  auto bad = run("verify no_such");
  CHECK(bad.exit_code == 2);
  CHECK(bad.out.find("unknown check id") != std::string::npos);
  CHECK(run("verify").exit_code == 2);
}

TEST_CASE("verify json report shape") {
  auto r = run("verify eq_a eq_b --format json");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("\"schema\": 1") != std::string::npos);
  CHECK(r.out.find("\"relation_id\": \"eq_a\"") != std::string::npos);
  CHECK(r.out.find("\"paper_location\"") != std::string::npos);
  CHECK(r.out.find("\"status\": \"pass\"") != std::string::npos);
  CHECK(r.out.find("\"elapsed\"") != std::string::npos);
}

TEST_CASE("deterministic output for fixed configuration") {
  auto a = run("verify eq_221 tr_t1t2_t3 --format json --seed 7");
  auto b = run("verify eq_221 tr_t1t2_t3 --format json --seed 7");
  CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));

  auto h1 = run("hilbert --component C2 --degree 4");
  auto h2 = run("hilbert --component C2 --degree 4");
  CHECK(h1.out == h2.out);
  auto m1 = run("multiplicity --degree 3 --format csv");
  auto m2 = run("multiplicity --degree 3 --format csv");
  CHECK(m1.out == m2.out);
}

TEST_CASE("multiplicity queries") {
  auto r = run("multiplicity --nu 4,2,0 --algebra F3");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "3\n");
  CHECK(run("multiplicity --nu 2,0,0 --algebra E3").out == "2\n");
  auto c = run("multiplicity --nu 4,2,2 --algebra center");
  CHECK(c.out.find("center_E=1 center_F=1") != std::string::npos);
  auto table = run("multiplicity --degree 2 --format csv");
  CHECK(table.out.find("nu1,nu2,nu3,m_E,m_F,center_E,center_F") != std::string::npos);
  CHECK(table.out.find("2,0,0,2,1,1,0") != std::string::npos);
  CHECK(run("multiplicity --nu 1,2,3").exit_code == 2);
}

TEST_CASE("hilbert expansion") {
  auto r = run("hilbert --component C1 --degree 3");
  CHECK(r.exit_code == 0);
  CHECK(r.out ==
        "tau1*tau2*tau3 + tau1^2 + tau1*tau2 + tau2^2 + tau1*tau3 + tau2*tau3 + tau3^2 + 1\n");
  CHECK(run("hilbert --component C3 --degree 0").out == "0\n");
  CHECK(run("hilbert --component C1 --degree 99").exit_code == 2);
}

TEST_CASE("tableaux listing") {
  auto r = run("tableaux --shape 2,1 --content 1,1,1");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "1 2/3\n1 3/2\ncount: 2\n");
  CHECK(run("tableaux --shape 2,1 --content 4,4").exit_code == 2);
}

TEST_CASE("hwv and dimcheck") {
  auto r = run("hwv --nu 2,2,0 --index 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("rank 2 of expected 2 OK") != std::string::npos);
  CHECK(run("hwv --nu 2,2,0 --index 9").exit_code == 2);

  auto d = run("dimcheck --multidegree 1,1,0 --algebra F3");
  CHECK(d.exit_code == 0);
  CHECK(d.out == "oracle=2 formula=2 OK\n");
  CHECK(run("dimcheck --multidegree 9,9,9 --algebra F3").exit_code == 2);
  auto dc = run("dimcheck --multidegree 2,0,0 --algebra center");
  CHECK(dc.out.find("center_E: oracle=1 formula=1 OK") != std::string::npos);
}

TEST_CASE("catalog covers every displayed relation") {
  // the relation ids of the covariants catalog are all runnable through verify
  for (const auto& [id, loc] : relation_catalog()) CHECK(known_check(id));
  // the displayed relations the suite must exercise
  for (const char* id :
       {"eq_a", "eq_b", "eq_c", "eq_d", "eq_221", "eq_221_cyc2", "eq_221_cyc3", "tr4s", "tr5s",
        "t1t2t3t4", "some_rel_i", "some_rel_ii", "some_rel_iii", "some_rel_iv", "tr_t1t2_t3",
        "vector_inv_second_fund"})
    CHECK(known_check(id));
  // ids are unique
  auto cat = check_catalog();
  for (std::size_t i = 0; i < cat.size(); ++i)
    for (std::size_t j = i + 1; j < cat.size(); ++j) CHECK(cat[i].first != cat[j].first);
}
