#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code;
  std::string out;
};

fs::path scratch() {
  static fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("veronese_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

fs::path write(const std::string& name, const std::string& content) {
  fs::path p = scratch() / name;
  std::ofstream(p) << content;
  return p;
}

Run run(const std::string& args) {
  const fs::path out = scratch() / "stdout.txt";
  const std::string command = std::string(VERONESE_CLI) + " " + args + " > " + out.string() + " 2> " +
                              (scratch() / "stderr.txt").string();
  int status = std::system(command.c_str());
  std::ifstream in(out);
  std::stringstream buf;
  buf << in.rdbuf();
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, buf.str()};
}

std::string stderr_text() {
  std::ifstream in(scratch() / "stderr.txt");
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("resolve then verify") {
  for (const char* f : {"x0^3 + x1^3 + x2^3", "x0^4 + x1^4 + x2^4", "x0*x1"}) {
    fs::path curve = write("curve.txt", std::string("# test curve\n") + f + "\n");
    fs::path complex = scratch() / "complex.json";
    Run r = run("resolve --input " + curve.string() + " --out " + complex.string());
    REQUIRE(r.code == 0);
    CHECK(stderr_text().find("warning") != std::string::npos);
    Run v = run("verify --input " + complex.string());
    CHECK(v.code == 0);
    CHECK(json::parse(v.out)["pass"] == true);
  }
  fs::path curve = write("curve.txt", "x0*x1\n");
  Run r = run("resolve --input " + curve.string() + " --assume-irreducible");
  CHECK(r.code == 0);
  CHECK(stderr_text().empty());
  CHECK(json::parse(r.out)["modules"][4] == json::array({5, 5, 5}));
  Run fermat = run("resolve --input " + write("c.txt", "x0^3+x1^3+x2^3").string());
  CHECK(json::parse(fermat.out)["modules"][4] == json::array({6}));
}

TEST_CASE("verify rejects a mutated complex") {
  fs::path curve = write("curve.txt", "x0^3 + x1^3 + x2^3");
  Run r = run("resolve --input " + curve.string());
  json j = json::parse(r.out);
  std::string& entry = j["differentials"][1]["entries"][0][0].get_ref<std::string&>();
  REQUIRE(entry == "x02");
  entry = "-x02";
  Run v = run("verify --input " + write("mutated.json", j.dump()).string());
  CHECK(v.code == 1);
  json report = json::parse(v.out);
  CHECK(report["pass"] == false);
  CHECK(report["complex"]["witness"].is_object());
}

TEST_CASE("exit codes for bad input") {
  CHECK(run("resolve --input " + write("bad.txt", "x0 + x1^2").string()).code == 3);
  CHECK(run("resolve --input " + write("line.txt", "x0 + x1").string()).code == 3);
  CHECK(run("resolve --input " + write("garbage.txt", "x0^2 + y").string()).code == 2);
  CHECK(run("resolve --input " + (scratch() / "missing.txt").string()).code == 2);
  CHECK(run("resolve --input " + write("c.txt", "x0^2").string() + " --field fp:10").code == 2);
  CHECK(run("verify --input " + write("trunc.json", "{\"format\": 1, \"field\": \"q\", \"modu").string()).code == 2);
  CHECK(run("random-curve --degree 1 --seed 0").code == 3);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify").code == 2);
}

TEST_CASE("random-curve is deterministic") {
  Run a = run("random-curve --degree 4 --seed 1");
  Run b = run("random-curve --degree 4 --seed 1");
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  Run c = run("random-curve --degree 3 --seed 7 --format json");
  json j = json::parse(c.out);
  CHECK(j["d"] == 3);
  fs::path curve = write("rc.txt", a.out);
  CHECK(run("resolve --input " + curve.string()).code == 0);
}

TEST_CASE("betti, lift and oracle") {
  fs::path curve = write("curve.txt", "x0^3 + x1^3 + x2^3");
  Run b = run("betti --input " + curve.string() + " --format json");
  REQUIRE(b.code == 0);
  CHECK(json::parse(b.out).size() == 5);
  Run t = run("betti --input " + curve.string());
  CHECK(t.out.find("total:") != std::string::npos);

  Run l = run("lift --input " + curve.string() + " --format json");
  CHECK(json::parse(l.out)["h"]["III"] == "x11");

  Run o = run("oracle --gens " + write("g.txt", "x0\nx1\nx2\n").string() + " --degree 2");
  REQUIRE(o.code == 0);
  json oj = json::parse(o.out);
  CHECK(oj["dimension"] == 3);
  CHECK(oj["ring"] == "curve");
  Run m = run("oracle --gens " +
              write("m.txt", "x11*x22 - x12^2\nx01*x22 - x12*x02\nx01*x12 - x02*x11\nx00*x22 - x02^2\n"
                             "x00*x12 - x02*x01\nx00*x11 - x01^2\n")
                  .string() +
              " --degree 3 --format text");
  CHECK(m.out.find("dimension 8") != std::string::npos);
}

TEST_CASE("veronese surface through the CLI") {
  fs::path complex = scratch() / "veronese.json";
  CHECK(run("resolve --veronese --out " + complex.string()).code == 0);
  Run v = run("verify --input " + complex.string() + " --format text");
  CHECK(v.code == 0);
  CHECK(v.out.find("verification passed") != std::string::npos);
}
