#include <algorithm>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "balagha/api.hpp"
#include "balagha/cli.hpp"
#include "balagha/report_io.hpp"
#include "doctest.h"

using namespace balagha;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) {
  return std::string(BALAGHA_FIXTURES) + "/" + name;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// A fresh scratch directory removed on scope exit.
struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() /
           ("balagha-cli-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  void write(const std::string& rel, const std::string& content) const {
    fs::create_directories((path / rel).parent_path());
    std::ofstream(path / rel, std::ios::binary) << content;
  }
};

}  // namespace

TEST_CASE("score prints density and summary") {
  const Result r = run({"score", fixture("sampleE.balagha.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("0.58974") != std::string::npos);
  CHECK(r.out.find("A6 B7 C10 / 39") != std::string::npos);
}

TEST_CASE("score json matches the API body") {
  const Result r = run({"score", fixture("sampleB.balagha.json"), "--format", "json"});
  REQUIRE(r.code == 0);
  const Api api(load_taxonomy(), Segmenter());
  const HttpResponse h =
      api.handle("POST", "/api/score", slurp(fixture("sampleB.balagha.json")));
  CHECK(io::Json::parse(r.out) == io::Json::parse(h.body));
}

TEST_CASE("score csv") {
  const Result r = run({"score", fixture("sampleD.balagha.json"), "--format", "csv"});
  CHECK(r.code == 0);
  CHECK(r.out ==
        "id,a_sum,b_sum,c_sum,total,morphemes,density\n"
        "sampleD,3,6,9,18,65,0.27692\n");
}

TEST_CASE("validate reports errors with exit 1") {
  const Result bad = run({"validate", fixture("bad.balagha.json")});
  CHECK(bad.code == 1);
  CHECK(bad.out.find("mark 3 outside {0,1,2}") != std::string::npos);

  const Result good = run({"validate", fixture("sampleA.balagha.json")});
  CHECK(good.code == 0);
  CHECK(good.out == "ok\n");

  const Result scored = run({"score", fixture("bad.balagha.json")});
  CHECK(scored.code == 1);
  CHECK(scored.err.find("mark_out_of_range") != std::string::npos);
}

TEST_CASE("format and encoding problems exit 1, missing files exit 3") {
  TempDir dir;
  dir.write("broken.balagha.json", "{\n \"id\": \n");
  dir.write("latin1.balagha.json", "{\"id\":\"\xE9\"}");
  dir.write("typed.balagha.json",
            R"({"id":"x","text":"t","annotations":[{"device":"A-1","start":"abc","end":1,"mark":1}]})");
  const Result broken = run({"validate", (dir.path / "broken.balagha.json").string()});
  CHECK(broken.code == 1);
  CHECK(broken.err.find("line") != std::string::npos);
  CHECK(run({"score", (dir.path / "latin1.balagha.json").string()}).code == 1);
  const Result typed = run({"score", (dir.path / "typed.balagha.json").string()});
  CHECK(typed.code == 1);
  CHECK(typed.err.find("annotations[0].start") != std::string::npos);
  CHECK(run({"score", (dir.path / "absent.balagha.json").string()}).code == 3);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"score"}).code == 2);
  CHECK(run({"score", fixture("sampleA.balagha.json"), "--format", "xml"}).code == 2);
  CHECK(run({"taxonomy"}).code == 2);
  CHECK(run({"taxonomy", "list", "--domain", "D"}).code == 2);
  CHECK(run({"taxonomy", "list", "--domain", "A", "--part", "B"}).code == 2);
  CHECK(run({"morphemes"}).code == 2);
  CHECK(run({"simulate", "--max-mark", "5"}).code == 2);
  CHECK(run({"simulate", "--counts", "10,x"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("morphemes from text and from files") {
  const Result r = run({"morphemes", "--text", "مساحة بيتي 200 متر مربع."});
  CHECK(r.code == 0);
  CHECK(r.out.find("بيت + ي") != std::string::npos);
  CHECK(r.out.ends_with("total\t6\n"));

  const Result j = run({"morphemes", "--text", "بيتي", "--format", "json"});
  CHECK(io::Json::parse(j.out)["total"] == 2);

  TempDir dir;
  dir.write("plain.txt", "بيتي كبير جداً، مثل قصر.");
  CHECK(run({"morphemes", (dir.path / "plain.txt").string()}).out.ends_with(
      "total\t6\n"));
  CHECK(run({"morphemes", fixture("sampleA.balagha.json")}).code == 0);

  dir.write("lex.tsv", "مكانته\tمكانته\n");
  const Result custom = run({"morphemes", "--text", "مكانته", "--lexicon",
                             (dir.path / "lex.tsv").string()});
  CHECK(custom.out.ends_with("total\t1\n"));
  dir.write("badlex.tsv", "x\n");
  CHECK(run({"morphemes", "--text", "x", "--lexicon",
             (dir.path / "badlex.tsv").string()})
            .code == 1);
}

TEST_CASE("taxonomy list and export") {
  const Result b = run({"taxonomy", "list", "--domain", "B"});
  CHECK(b.code == 0);
  CHECK(std::count(b.out.begin(), b.out.end(), '\n') == 6);
  const Result ce = run({"taxonomy", "list", "--domain", "C", "--part", "E"});
  CHECK(std::count(ce.out.begin(), ce.out.end(), '\n') == 22);

  TempDir dir;
  const fs::path out = dir.path / "taxonomy.json";
  CHECK(run({"taxonomy", "export", "--output", out.string()}).code == 0);
  CHECK(io::Json::parse(slurp(out)) == io::taxonomy_json(load_taxonomy()));
  CHECK(run({"taxonomy", "export", "--output",
             (dir.path / "no/such/dir/t.json").string()})
            .code == 3);
}

TEST_CASE("simulate prints a range table") {
  const Result r = run({"simulate", "--counts", "10,5", "--assessors", "10",
                        "--max-mark", "10", "--spread", "0.6", "--seed", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Text 1 vs text 2") != std::string::npos);
  CHECK(r.out == run({"simulate", "--counts", "10,5", "--assessors", "10",
                      "--max-mark", "10", "--spread", "0.6", "--seed", "3"})
                     .out);
  const Result csv = run({"simulate", "--csv"});
  CHECK(csv.out.starts_with("assessor,generosity,text1,text2\n"));
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 11);
}

TEST_CASE("batch scores a directory tree and lists bad files") {
  TempDir dir;
  for (const char* name : {"sampleA", "sampleC"}) {
    dir.write(std::string(name) + ".balagha.json",
              slurp(fixture(std::string(name) + ".balagha.json")));
  }
  dir.write("nested/deeper/sampleE.balagha.json", slurp(fixture("sampleE.balagha.json")));
  dir.write("nested/broken.balagha.json", "{");
  dir.write("nested/ignored.json", "{");
  dir.write("invalid.balagha.json", slurp(fixture("bad.balagha.json")));

  const Result r = run({"batch", dir.path.string()});
  CHECK(r.code == 1);
  CHECK(r.out ==
        "id,a_sum,b_sum,c_sum,total,morphemes,density\n"
        "sampleE,6,7,10,23,39,0.58974\n"
        "sampleA,1,0,0,1,46,0.02174\n"
        "sampleC,2,10,5,17,160,0.10625\n");
  CHECK(r.err.find("broken.balagha.json") != std::string::npos);
  CHECK(r.err.find("invalid.balagha.json") != std::string::npos);
  CHECK(r.err.find("ignored.json") == std::string::npos);

  fs::remove(dir.path / "nested/broken.balagha.json");
  fs::remove(dir.path / "invalid.balagha.json");
  CHECK(run({"batch", dir.path.string()}).code == 0);
  CHECK(run({"batch", (dir.path / "missing").string()}).code == 3);
}

TEST_CASE("serve fails cleanly on an unusable port") {
  const Result r = run({"serve", "--host", "256.0.0.1", "--port", "8081"});
  CHECK(r.code == 3);
}
