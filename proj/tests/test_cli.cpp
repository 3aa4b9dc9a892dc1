#include "doctest.h"

#include <sys/wait.h>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
};

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "krein_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

Run run(const std::string& args) {
  const std::string cmd = std::string(KREIN_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

}  // namespace

TEST_CASE("cli: usage errors") {
  CHECK(run("").code == 2);
  CHECK(run("frobnicate").code == 2);
  CHECK(run("verify --format xml").code == 2);
  CHECK(run("verify --config /nonexistent/cfg.json").code == 2);
  CHECK(run("verify --config " + write("bad.json", "{ not json").string()).code == 2);
  CHECK(run("verify --config " + write("unknown.json", R"({"bogus": 1})").string()).code == 2);
}

TEST_CASE("cli: verify") {
  const auto ok = run("verify --format csv");
  CHECK(ok.code == 0);
  CHECK(ok.out.rfind("check,residual,tolerance,pass", 0) == 0);

  const auto strict = run("verify --config " + write("strict.json", R"({"tolerance": 1e-30})").string());
  CHECK(strict.code == 1);
  const auto doc = nlohmann::json::parse(strict.out);
  CHECK(doc.is_object());
}

TEST_CASE("cli: classify") {
  const auto cfg = write("cls.json", R"({"extension": {"alpha": [1, 0, 0], "unitary": [[1, 0], [0, -1]]}})");
  const auto r = run("classify --config " + cfg.string());
  REQUIRE(r.code == 0);
  const auto doc = nlohmann::json::parse(r.out);
  CHECK(doc["empty_resolvent"] == true);
  CHECK(doc.contains("witness_beta"));
  CHECK(doc.contains("subspace_form"));

  const auto bad = write("cls_bad.json", R"({"extension": {"unitary": [[0.5, 0], [0, 0.5]]}})");
  CHECK(run("classify --config " + bad.string()).code == 2);
  const auto alpha = write("cls_alpha.json", R"({"extension": {"alpha": [1, 1, 0], "unitary": [[1, 0], [0, 1]]}})");
  CHECK(run("classify --config " + alpha.string()).code == 2);
}

TEST_CASE("cli: weyl and resolvent-check") {
  CHECK(run("weyl").code == 0);
  const auto cfg = write("res.json", R"({"model": {"points": 201}, "samples": 2})");
  const auto a = run("resolvent-check --seed 5 --config " + cfg.string());
  CHECK(a.code == 0);
  const auto b = run("resolvent-check --seed 5 --config " + cfg.string());
  CHECK(a.out == b.out);
}

TEST_CASE("cli: sweep") {
  const auto empty = write("sw_empty.json",
                           R"({"model": {"kind": "schrodinger"}, "extension": {"family": "phase", "grid": []}})");
  const auto e = run("sweep --format csv --config " + empty.string());
  CHECK(e.code == 0);
  CHECK(e.out.rfind("t,pairing_residual,max_imag,l0_re,l0_im,", 0) == 0);
  CHECK(std::count(e.out.begin(), e.out.end(), '\n') == 1);

  const auto odd = write("sw_odd.json",
                         R"({"model": {"kind": "schrodinger", "potential": {"kind": "linear"}}, "extension": {"grid": []}})");
  CHECK(run("sweep --config " + odd.string()).code == 2);

  const auto small = write("sw_small.json", R"({
    "model": {"kind": "schrodinger", "x_max": 1.1, "potential": {"kind": "harmonic"}},
    "extension": {"family": "phase", "grid": {"count": 3}}})");
  const fs::path out1 = scratch() / "sw1.csv", out2 = scratch() / "sw2.csv";
  CHECK(run("sweep --format csv --out " + out1.string() + " --config " + small.string()).code == 0);
  CHECK(run("sweep --format csv --out " + out2.string() + " --config " + small.string()).code == 0);
  const std::string text = slurp(out1);
  CHECK(text == slurp(out2));
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);

  // the theta family has empty resolvent set: failure exit, no partial file
  const auto theta = write("sw_theta.json", R"({
    "model": {"kind": "schrodinger", "x_max": 1.1}, "extension": {"family": "theta", "grid": {"count": 2}}})");
  const fs::path out3 = scratch() / "sw3.csv";
  fs::remove(out3);
  CHECK(run("sweep --out " + out3.string() + " --config " + theta.string()).code == 1);
  CHECK_FALSE(fs::exists(out3));
}
