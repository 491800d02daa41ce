#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "cli.hpp"
#include "diffseq/json_io.hpp"
#include "diffseq/serialize.hpp"

namespace fs = std::filesystem;
using namespace diffseq;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

struct Scratch {
  fs::path dir = fs::temp_directory_path() / ("diffseq-cli-" + std::to_string(::getpid()));
  Scratch() { fs::create_directories(dir); }
  ~Scratch() { fs::remove_all(dir); }
  std::string file(const std::string& name, const std::string& contents) const {
    const fs::path p = dir / name;
    std::ofstream(p, std::ios::binary) << contents;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

std::string slurp(const std::string& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("construct") {
  Scratch tmp;
  const std::string out = tmp.path("k2.txt");
  const Run r = run({"--out", out, "construct", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "length 8\n");
  CHECK(slurp(out) == "11000011\n");

  CHECK(run({"construct", "1"}).out == "1\n");
  const Run three = run({"construct", "--l", "3"});
  CHECK(three.out.size() == 49);
  CHECK(three.out.starts_with("1100110000110011"));

  const std::string bin = tmp.path("k4.bin");
  CHECK(run({"--out", bin, "--format", "json", "construct", "4", "--encoding", "binary"}).out ==
        "{\"encoding\":\"binary\",\"l\":4,\"length\":256}\n");
  CHECK(from_binary(slurp(bin)) == construct_kappa(4));
}

TEST_CASE("construct capacity and usage errors") {
  CHECK(run({"construct", "14"}).code == cli::kExitCapacity);
  CHECK(run({"--max-bits", "100", "construct", "4"}).code == cli::kExitCapacity);
  CHECK(run({"construct", "0"}).code == cli::kExitUsage);
  CHECK(run({"construct"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("psi") {
  Scratch tmp;
  const std::string k2 = tmp.file("k2.txt", "11000011\n");
  const Run r = run({"--format", "json", "psi", k2, "--h", "0"});
  CHECK(r.code == 0);
  CHECK(psi_result_from_json(r.out) == PsiResult{4, 0, {3, 4, 5, 6}});
  CHECK(r.out == "{\"hops\":0,\"length\":4,\"witness\":[3,4,5,6]}\n");

  CHECK(run({"psi", tmp.file("one.txt", "1\n")}).out == "length 1\nhops 0\nwitness 1\n");
  CHECK(psi_result_from_json(run({"--format", "json", "psi", tmp.file("one.txt", "1\n")}).out).length == 1);

  const std::string ex2 = tmp.file("ex2.bin", to_binary(Coloring::from_string("1100001100111100")));
  CHECK(run({"--format", "csv", "psi", ex2, "--h", "1"}).out == "length,hops,witness\n9,1,3 4 5 6 7 8 12 13 14\n");
}

TEST_CASE("psi rejects malformed files") {
  Scratch tmp;
  CHECK(run({"psi", tmp.file("bad.txt", "10x1\n")}).code == cli::kExitMalformed);
  CHECK(run({"psi", tmp.file("empty.txt", "")}).code == cli::kExitMalformed);
  CHECK(run({"psi", tmp.path("missing.txt")}).code == cli::kExitMalformed);
  std::string truncated = to_binary(Coloring::from_string("1011001"));
  truncated.pop_back();
  CHECK(run({"psi", tmp.file("short.bin", truncated)}).code == cli::kExitMalformed);
  CHECK(run({"psi", tmp.file("ok.txt", "10\n"), "--gaps", "nonsense"}).code == cli::kExitUsage);
}

TEST_CASE("delta") {
  const Run two = run({"--format", "json", "delta", "2"});
  CHECK(two.code == 0);
  const DeltaResult r = delta_result_from_json(two.out);
  CHECK(r.value == 3);
  CHECK(colors_to_string(r.certificate) == "10");

  const Run one = run({"delta", "1"});
  CHECK(one.out.find("value 1\ncertificate \n") != std::string::npos);

  const Run three = run({"delta", "3", "--n-max", "7"});
  CHECK(three.out.find("value 7\ncertificate 100110\n") != std::string::npos);

  const Run exceeded = run({"delta", "2", "--r", "3", "--n-max", "6"});
  CHECK(exceeded.code == 0);
  CHECK(exceeded.out.find("value exceeds n_max = 6\ncertificate 102102\n") != std::string::npos);

  CHECK(run({"delta", "2", "--r", "3"}).code == cli::kExitUsage);
  CHECK(run({"delta", "40"}).code == cli::kExitCapacity);
  CHECK(run({"delta", "0"}).code == cli::kExitUsage);
  CHECK(run({"--format", "csv", "delta", "2"}).out.starts_with("D,k,r,value,n_max,certificate,nodes,max_depth\n"
                                                              "powers-of-2,2,2,3,3,10,"));
}

TEST_CASE("bounds") {
  const Run seven = run({"--format", "csv", "bounds", "--k-min", "7", "--k-max", "7"});
  CHECK(seven.code == 0);
  CHECK(seven.out == "k,l,integer_bound,eq2,eq1,upper_2k_minus_1,exact_delta\n7,2,8,3.401,1.747,127,\n");
  const Run two = run({"--format", "csv", "bounds", "--k-min", "2", "--k-max", "2"});
  CHECK(two.out == "k,l,integer_bound,eq2,eq1,upper_2k_minus_1,exact_delta\n2,1,1,0.2156,0.4142,3,\n");

  CHECK(run({"bounds", "--k-min", "9", "--k-max", "3"}).code == cli::kExitUsage);
  CHECK(run({"bounds", "--k-min", "1", "--k-max", "3"}).code == cli::kExitUsage);
}

TEST_CASE("bounds fill exact values from the cache") {
  Scratch tmp;
  const std::string cache = tmp.path("delta.jsonl");
  for (const char* k : {"2", "3", "4", "5"}) CHECK(run({"--cache", cache, "delta", k}).code == 0);
  const Run table = run({"--cache", cache, "--format", "csv", "bounds", "--k-min", "2", "--k-max", "6"});
  CHECK(table.out.find("\n2,1,1,0.2156,0.4142,3,3\n") != std::string::npos);
  CHECK(table.out.find(",31,17\n") != std::string::npos);
  CHECK(table.out.ends_with(",63,\n"));
}

TEST_CASE("verify") {
  const Run lemma = run({"--seed", "42", "verify", "lemma1", "--trials", "500"});
  CHECK(lemma.code == 0);
  CHECK(lemma.out.find("lemma1: 500 trials, 0 violations, PASS") != std::string::npos);

  const Run construction = run({"verify", "construction", "--l-max", "6"});
  CHECK(construction.code == 0);
  CHECK(construction.out.find("l=2 length=8 psi0=4 budget=4 slack=0 ok\n") != std::string::npos);
  CHECK(construction.out.find("l=6 length=6144") != std::string::npos);

  const Run corollaries = run({"--format", "json", "verify", "corollaries", "--trials", "300"});
  CHECK(corollaries.code == 0);
  CHECK(corollaries.out.find("\"passed\":true") != std::string::npos);

  CHECK(run({"verify", "everything"}).code == cli::kExitUsage);
  CHECK(run({"verify", "lemma1", "--trials", "0"}).code == cli::kExitUsage);
}

TEST_CASE("identical arguments give identical output") {
  const std::vector<std::vector<std::string>> cases{
      {"--seed", "9", "verify", "lemma1", "--trials", "200"},
      {"--seed", "9", "--format", "json", "verify", "corollaries", "--trials", "200"},
      {"--format", "json", "delta", "5", "--split-depth", "4", "--jobs", "3"},
      {"--format", "json", "bounds", "--k-min", "2", "--k-max", "40"},
  };
  for (const auto& args : cases) {
    const Run a = run(args);
    const Run b = run(args);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("--out redirects rendered output") {
  Scratch tmp;
  const std::string p = tmp.path("bounds.csv");
  const Run r = run({"--out", p, "--format", "csv", "bounds", "--k-min", "7", "--k-max", "7"});
  CHECK(r.out.empty());
  CHECK(slurp(p) == "k,l,integer_bound,eq2,eq1,upper_2k_minus_1,exact_delta\n7,2,8,3.401,1.747,127,\n");
}

}
