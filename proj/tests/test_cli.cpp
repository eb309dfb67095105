#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = std::string(SCHUR_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.status = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(SCHUR_TEST_TMP_DIR) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

std::string read(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

bool contains(const std::string& s, const std::string& what) { return s.find(what) != std::string::npos; }

const std::string catalog_dir = SCHUR_SOURCE_DIR "/data/catalog/";

}  // namespace

TEST_CASE("compute") {
  const Run d8 = run("compute " + catalog_dir + "d8.fp");
  CHECK(d8.status == 0);
  CHECK(contains(d8.out, "M(G) = Z2, |M| = 2, t = 2"));
  CHECK(contains(d8.out, "n = 3, k = 1, m_G = 1"));
  CHECK(contains(d8.out, "method: bar-resolution"));
  CHECK(contains(d8.out, "catalog: d8"));

  const Run trivial = run("compute " + write_temp("trivial.fp", "gens: a\nrels: a\n"));
  CHECK(trivial.status == 0);
  CHECK(contains(trivial.out, "M(G) trivial, t = 0"));

  const Run e1 = run("compute " + write_temp("e1_p3.fp", "p: 3\ngens: a b\nrels: a^p=b^p=[a,b,a]=[a,b,b]=1\n"));
  CHECK(e1.status == 0);
  CHECK(contains(e1.out, "|M| = 9"));

  const Run q8 = run("compute " + catalog_dir + "q8.fp --format lines");
  CHECK(q8.status == 0);
  CHECK(q8.out == "q8 0 3 bar-resolution ok\n");

  const Run e1_5 = run("compute " + catalog_dir + "e1.fp --p 5");
  CHECK(e1_5.status == 0);
  CHECK(contains(e1_5.out, "M(G) = Z5 x Z5, |M| = 25, t = 1"));
}

TEST_CASE("compute reads Cayley tables") {
  const std::string z2sq = "4\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\n";
  const Run r = run("compute " + write_temp("v4.txt", z2sq));
  CHECK(r.status == 0);
  CHECK(contains(r.out, "M(G) = Z2, |M| = 2, t = 0"));
  CHECK(contains(r.out, "catalog: ab-1-1"));

  const Run s3 = run("compute " + write_temp("s3.txt", "6\n0 1 2 3 4 5\n1 2 0 4 5 3\n2 0 1 5 3 4\n3 5 4 0 2 1\n4 3 5 1 0 2\n5 4 3 2 1 0\n"));
  CHECK(s3.status == 0);
  CHECK(contains(s3.out, "M(G) trivial\n"));
  CHECK(contains(s3.out, "t undefined"));

  const Run bad = run("compute " + write_temp("bad.txt", "3\n0 1 2\n1 1 0\n2 0 1\n"));
  CHECK(bad.status == 2);
}

TEST_CASE("compute errors") {
  CHECK(run("compute " + write_temp("bad.fp", "gens: a b\nrels: a^2 b(\n")).status == 2);
  CHECK(run("compute " + catalog_dir + "e1.fp").status == 2);
  CHECK(run("compute " + catalog_dir + "e1.fp --p 4").status == 2);
  CHECK(run("compute /nonexistent/g.fp").status == 2);

  const Run cap = run("compute " + catalog_dir + "e1.fp --p 5 --homology-cap 100");
  CHECK(cap.status == 3);
  CHECK(contains(cap.out, "--homology-cap"));
  CHECK(cap.out.find("M(G)") == std::string::npos);

  CHECK(run("compute " + catalog_dir + "q16.fp --max-cosets 4").status == 3);
  CHECK(run("compute " + catalog_dir + "d8.fp --homology-cap 0").status == 2);
  CHECK(run("compute " + catalog_dir + "d8.fp --format xml").status == 2);

  // abelian groups above the cap fall back to the closed form
  const Run big = run("compute " + write_temp("z3_5.fp", "gens: a b c d e\nrels: a^3, b^3, c^3, d^3, e^3, [a,b], [a,c], [a,d], [a,e], [b,c], [b,d], [b,e], [c,d], [c,e], [d,e]\n"));
  CHECK(big.status == 0);
  CHECK(contains(big.out, "|M| = 59049, t = 0"));
  CHECK(contains(big.out, "method: calculus"));
}

TEST_CASE("verify") {
  const Run r24 = run("verify --p 2 --n 4");
  CHECK(r24.status == 0);
  CHECK(contains(r24.out, "computed t = 4: thm3.7-2 thm3.7-3 thm3.7-4\n"));
  CHECK(contains(r24.out, "verdict: match\n"));

  const Run lines = run("verify --p 2 --n 4 --format lines");
  CHECK(lines.status == 0);
  CHECK(lines.out == read(SCHUR_TEST_DATA_DIR "/verify_p2_n4.lines"));

  const Run r34 = run("verify --p 3 --n 4");
  CHECK(r34.status == 0);
  CHECK(contains(r34.out, "computed t = 4: thm3.7-8 thm3.7-5 thm3.7-9 thm3.7-10\n"));

  const Run incomplete = run("verify --p 3 --n 5");
  CHECK(incomplete.status == 1);
  CHECK(contains(incomplete.out, "verdict: incomplete"));

  const Run seven = run("verify --p 7 --n 4");
  CHECK(seven.status == 2);
  CHECK(contains(seven.out, "not catalogued"));
  CHECK(run("verify --p 6 --n 4").status == 2);
  CHECK(run("verify --p 2").status == 2);
}

TEST_CASE("catalog") {
  const Run list = run("catalog list --p 3 --n 4");
  CHECK(list.status == 0);
  CHECK(std::count(list.out.begin(), list.out.end(), '\n') == 15);

  const Run all = run("catalog list --format lines");
  CHECK(all.status == 0);
  CHECK(contains(all.out, "thm3.7-11 4 p>3\n"));

  CHECK(run("catalog list --p 7 --n 4").status == 2);

  const Run show = run("catalog show thm3.7-4");
  CHECK(show.status == 0);
  CHECK(contains(show.out, "a^2=b^2=c^2=1, abc=bca=cab"));

  const Run nope = run("catalog show nope");
  CHECK(nope.status == 2);
  CHECK(run("catalog").status == 2);
}
