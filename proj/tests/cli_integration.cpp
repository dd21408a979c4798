#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include <json.hpp>

namespace {

struct Run {
  std::string out;
  int code = -1;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + std::string(SALEMPARRY_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* f = popen(cmd.c_str(), "r");
  REQUIRE(f != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), f)) > 0) r.out.append(buf.data(), n);
  int status = pclose(f);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

nlohmann::json run_json(const std::string& args, const std::string& env = "") {
  Run r = run(args, env);
  INFO(args);
  REQUIRE(r.code == 0);
  return nlohmann::json::parse(r.out);
}

std::string data_file(const std::string& name) { return std::string(SALEMPARRY_DATA_DIR) + "/" + name; }

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
  auto p = std::filesystem::temp_directory_path() / ("salemparry_cli_" + name);
  std::ofstream(p) << content;
  return p;
}

const std::string kFirstSextic = "'[1,-7,-3,-11,-3,-7,1]'";

}  // namespace

TEST_CASE("expand prints the periodic word") {
  auto j = run_json("expand --poly '[1,-8,10,-15,10,-8,1]'");
  CHECK(j["status"] == "periodic");
  CHECK(j["m"] == 1);
  CHECK(j["p"] == 119);
  CHECK(j["word"]["period"].size() == 119);
}

TEST_CASE("malformed input exits with status 2") {
  CHECK(run("expand --poly '[]'").code == 2);
  CHECK(run("expand --poly '[1,x]'").code == 2);
  CHECK(run("classify --poly '[1,2'").code == 2);
  CHECK(run("nosuchcommand").code == 2);
  CHECK(run("measure --tolerance -1").code == 2);
}

TEST_CASE("classify reports Salem numbers and rejections") {
  auto j = run_json("classify --poly " + kFirstSextic);
  CHECK(j["salem"] == true);
  auto k = run_json("classify --poly '[1,0,1]'");
  CHECK(k["salem"] == false);
}

TEST_CASE("orbit of a rational point") {
  auto j = run_json("orbit --c1 0 --c2 1");
  CHECK(j["status"] == "periodic");
}

TEST_CASE("cell and disjoint on the builtin catalogs") {
  auto c = run_json("cell --name R8");
  CHECK(c["status"] == "cell");
  auto d = run_json("disjoint --builtin 23");
  CHECK(d["pairs"] == 253);
  CHECK(d["disjoint"] == true);
}

TEST_CASE("measure of the 40-cell catalog brackets the reference value") {
  auto j = run_json("measure --catalog " + data_file("catalog40.json") + " --tolerance 5e-4");
  double lo = j["lower_approx"], hi = j["upper_approx"];
  CHECK(lo <= 0.505254);
  CHECK(0.505254 <= hi);
  CHECK(hi - lo <= 5e-4);
  CHECK_FALSE(j.contains("seconds"));
}

TEST_CASE("repeated runs are byte-identical") {
  std::string args = "measure --builtin 23 --tolerance 5e-3";
  CHECK(run(args).out == run(args).out);
  std::string mc = "measure --builtin 23 --monte-carlo 20000 --seed 7";
  CHECK(run(mc).out == run(mc).out);
  CHECK(run("survey --res 12 --cap 5000").out == run("survey --res 12 --cap 5000 --threads 1").out);
}

TEST_CASE("flags override environment, which overrides the config file") {
  auto cfg = temp_file("precedence.conf", "expand_cap = 10\n");
  std::string args = "--config " + cfg.string() + " expand --poly " + kFirstSextic;
  CHECK(run_json(args)["status"] == "cap-exceeded");
  CHECK(run_json(args, "SALEMPARRY_EXPAND_CAP=1000") ["status"] == "periodic");
  CHECK(run_json(args + " --cap 10", "SALEMPARRY_EXPAND_CAP=1000")["status"] == "cap-exceeded");
  std::filesystem::remove(cfg);
}

TEST_CASE("bad config file exits with status 2") {
  auto cfg = temp_file("bad.conf", "no equals sign\n");
  CHECK(run("--config " + cfg.string() + " classify --poly '[1,1]'").code == 2);
  std::filesystem::remove(cfg);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify --check circle --n 4 --trials 20").code == 0);
  CHECK(run("verify --check interlacing --n 6").code == 0);
  CHECK(run("verify --check closed-form --a-max 5").code == 0);
  CHECK(run("verify --check circle --n 0").code == 2);
}

TEST_CASE("survey writes a canonical CSV") {
  Run r = run("survey --res 10 --cap 5000");
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("alpha1,alpha2,period,r_degree,cell\n", 0) == 0);
  CHECK(r.out.find("-9/5,-7/5,") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 46);
}
