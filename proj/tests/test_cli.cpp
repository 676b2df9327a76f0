#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "support.hpp"

namespace fs = std::filesystem;
using msn::testing::fixture;

namespace {

struct Run {
  std::string out;  // stdout and stderr interleaved
  int code = -1;
};

Run msn_cli(const std::string& args) {
  Run run;
  const std::string command = std::string(MSN_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buffer{};
  std::size_t n;
  while ((n = std::fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    run.out.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  run.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

std::string path(const std::string& name) { return fixture(name).string(); }

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

struct TempDir {
  fs::path dir;
  TempDir() : dir(fs::temp_directory_path() / "msn_cli_test") {
    fs::remove_all(dir);
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
};

}  // namespace

TEST_CASE("cli stats") {
  auto r = msn_cli("stats " + path("f3.tsv"));
  CHECK(r.code == 0);
  CHECK(r.out.find("nodes\t3\n") != std::string::npos);
  CHECK(r.out.find("edges\t4\n") != std::string::npos);
  CHECK(r.out.find("SUM\t4\t5\n") != std::string::npos);

  r = msn_cli("stats " + path("empty.tsv"));
  CHECK(r.code == 0);
  CHECK(r.out.find("edges\t0\n") != std::string::npos);

  r = msn_cli("stats " + path("bad_loop.tsv"));
  CHECK(r.code == 2);
  CHECK(r.out.find("line 2") != std::string::npos);

  r = msn_cli("stats " + path("no_such_file.tsv"));
  CHECK(r.code == 1);
}

TEST_CASE("cli stats export") {
  TempDir tmp;
  const auto csv = tmp.dir / "stats.csv";
  REQUIRE(msn_cli("stats " + path("f3.tsv") + " --out " + csv.string()).code == 0);
  CHECK(slurp(csv) == "layer,edges,active_nodes\nl1,3,3\nl2,1,2\nSUM,4,5\n");
  CHECK(fs::exists(tmp.dir / "stats.csv.manifest.json"));
}

TEST_CASE("cli neighborhood") {
  auto r = msn_cli("neighborhood " + path("fig1.tsv") + " --node x --alpha 3");
  CHECK(r.code == 0);
  CHECK(r.out == "u y z\ncount 3\n");

  r = msn_cli("neighborhood " + path("fig1.tsv") + " --node z --layer l2");
  CHECK(r.code == 0);
  CHECK(r.out == "x\ncount 1\n");

  CHECK(msn_cli("neighborhood " + path("fig1.tsv") + " --node x --alpha 99").code == 4);
  CHECK(msn_cli("neighborhood " + path("fig1.tsv") + " --node x --alpha 0").code == 4);
  CHECK(msn_cli("neighborhood " + path("fig1.tsv") + " --node nobody --alpha 1").code == 3);
  CHECK(msn_cli("neighborhood " + path("fig1.tsv") + " --node x --layer l9").code == 3);
}

TEST_CASE("cli centrality") {
  auto r = msn_cli("centrality " + path("f3.tsv") + " --alpha 1 --node a");
  CHECK(r.code == 0);
  CHECK(r.out == "1\n");

  r = msn_cli("centrality " + path("f3.tsv") + " --alpha 1 --variant in --node c");
  CHECK(r.code == 0);
  CHECK(r.out == "0.25\n");

  TempDir tmp;
  const auto csv = tmp.dir / "c.csv";
  r = msn_cli("centrality " + path("f3.tsv") + " --alpha 2 --all --out " + csv.string());
  CHECK(r.code == 0);
  CHECK(slurp(csv) == "node,score\na,0.75\nb,0.75\nc,0\n");

  std::ofstream(tmp.dir / "single.tsv") << "#@layer\tl1\n#@node\tz\n";
  CHECK(msn_cli("centrality " + (tmp.dir / "single.tsv").string() + " --alpha 1 --all").code == 5);
}

TEST_CASE("cli centrality is independent of thread count") {
  const auto one = msn_cli("centrality " + path("fig1.tsv") + " --alpha 1 --all --threads 1");
  const auto four = msn_cli("centrality " + path("fig1.tsv") + " --alpha 1 --all --threads 4");
  CHECK(one.code == 0);
  CHECK(one.out == four.out);
}

TEST_CASE("cli distribution") {
  TempDir tmp;
  auto r = msn_cli("distribution " + path("f3.tsv") + " --alpha 1 --kind mn --out " +
                   tmp.dir.string());
  CHECK(r.code == 0);
  CHECK(slurp(tmp.dir / "mn_rank_a1.csv") == "rank,node,value\n1,a,2\n2,b,1\n3,c,1\n");
  CHECK(fs::exists(tmp.dir / "manifest.json"));

  r = msn_cli("distribution " + path("f3.tsv") + " --alpha 2 --occupancy");
  CHECK(r.code == 0);
  CHECK(r.out.find("2,2,1,66.7") != std::string::npos);

  r = msn_cli("distribution " + path("f3.tsv") + " --alpha 1,2 --kind cldc --out " +
              tmp.dir.string());
  CHECK(r.code == 0);
  CHECK(slurp(tmp.dir / "cldc_total_summary.csv") ==
        "alpha,min,max,count\n1,0.25,1,3\n2,0.75,0.75,2\n");

  CHECK(msn_cli("distribution " + path("f3.tsv") + " --alpha 1-x").code == 4);
}

TEST_CASE("cli generate") {
  TempDir tmp;
  const auto a = tmp.dir / "a.tsv";
  const auto b = tmp.dir / "b.tsv";
  const std::string flags = " --nodes 200 --layers 3 --seed 9 --out ";
  REQUIRE(msn_cli("generate" + flags + a.string()).code == 0);
  REQUIRE(msn_cli("generate" + flags + b.string()).code == 0);
  CHECK(slurp(a) == slurp(b));
  CHECK(slurp(a).find("rng=mt19937_64 seed=9") != std::string::npos);
  CHECK(msn_cli("stats " + a.string()).code == 0);

  CHECK(msn_cli("generate --nodes 1 --out " + (tmp.dir / "x.tsv").string()).code == 6);

  std::ofstream(tmp.dir / "cfg.txt") << "nodes=100\nlayers=2\nbogus=1\n";
  const auto bad = msn_cli("generate --config " + (tmp.dir / "cfg.txt").string() + " --out " +
                           (tmp.dir / "y.tsv").string());
  CHECK(bad.code == 6);
  CHECK(bad.out.find("line 3") != std::string::npos);
}
