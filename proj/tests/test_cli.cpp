#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + " " + ZPDLAB_CLI + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) r.out.append(buf, n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("zpdlab_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("analyze exit codes") {
  const Run no = run("analyze --construct jordan:2 --property zpd");
  CHECK(no.code == 3);
  CHECK(nlohmann::json::parse(no.out)["verdict"] == "no");

  const Run yes = run("analyze --construct triangular:4 --property two_sided_zpd");
  CHECK(yes.code == 0);
  CHECK(nlohmann::json::parse(yes.out)["verdict"] == "yes");

  const Run starved = run("analyze --construct triangular:3 --max-samples 1");
  CHECK(starved.code == 4);
  CHECK(nlohmann::json::parse(starved.out)["verdict"] == "no_uncertified");
}

TEST_CASE("invalid input exits with 2") {
  const fs::path bad = scratch("bad.json");
  std::ofstream(bad) << R"({"name":"bad","basis":[{"rows":2,"cols":2,"entries":[0,1,0,0]},{"rows":2,"cols":2,"entries":[0,0,1,0]}]})";
  CHECK(run("analyze --file " + bad.string()).code == 2);
  const fs::path junk = scratch("junk.json");
  std::ofstream(junk) << "{not json";
  CHECK(run("analyze --file " + junk.string()).code == 2);
  CHECK(run("analyze --construct nothing:3").code == 2);
  CHECK(run("analyze --construct jordan:2 --property nonsense").code == 2);
  CHECK(run("spaces --construct jordan:2 --space cocycle:x").code == 2);
  CHECK(run("paper-suite --only no_such_scenario").code == 2);
}

TEST_CASE("analyze is deterministic and leaves its input alone") {
  const fs::path a = scratch("a.json");
  const Run built = run("construct 'sum:(triangular:2,matrix:2)'");
  REQUIRE(built.code == 0);
  std::ofstream(a) << built.out;
  const auto before = fs::last_write_time(a);
  const Run first = run("analyze --file " + a.string() + " --property zlpd --seed 7");
  const Run second = run("analyze --file " + a.string() + " --property zlpd --seed 7");
  CHECK(first.code == 0);
  CHECK(first.out == second.out);
  CHECK(fs::last_write_time(a) == before);
}

TEST_CASE("cache hits are byte identical") {
  const fs::path dir = scratch("cache");
  fs::remove_all(dir);
  const std::string env = "ZPDLAB_CACHE=" + dir.string();
  const Run cold = run("analyze --construct matrix:2 --property zlpd", env);
  REQUIRE(cold.code == 0);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 1);
  const Run warm = run("analyze --construct matrix:2 --property zlpd", env);
  CHECK(warm.code == 0);
  CHECK(warm.out == cold.out);
  // a different seed is a different key
  run("analyze --construct matrix:2 --property zlpd --seed 3", env);
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 2);
  // the cache flag works too, and the environment wins over it
  const fs::path flag_dir = scratch("flag_cache");
  fs::remove_all(flag_dir);
  run("spaces --construct jordan:3 --space der --cache-dir " + flag_dir.string());
  CHECK(fs::exists(flag_dir));
  fs::remove_all(flag_dir);
  run("spaces --construct jordan:3 --space der --cache-dir " + flag_dir.string(), env);
  CHECK_FALSE(fs::exists(flag_dir));
  CHECK(std::distance(fs::directory_iterator(dir), fs::directory_iterator()) == 3);
}

TEST_CASE("spaces") {
  const auto der = nlohmann::json::parse(run("spaces --construct jordan:3 --space der").out);
  CHECK(der["dim"] == 2);
  const auto comm = nlohmann::json::parse(run("spaces --construct triangular:3 --space commutator").out);
  CHECK(comm["dim"] == 3);
  CHECK(comm["contained_in_square_zero"] == true);
  const auto ma = nlohmann::json::parse(run("spaces --construct matrix:2 --space multiplier_algebra").out);
  CHECK(ma["dim"] == 4);
  CHECK(ma["iso_to_A"] == true);
  const auto z1 = nlohmann::json::parse(run("spaces --construct triangular:2 --space cocycle:1").out);
  CHECK(z1["dim"] == 2);
  const Run faithless = run("spaces --construct strict:3 --space multiplier_algebra");
  CHECK(faithless.code == 1);
}

TEST_CASE("construct prints loadable algebra JSON") {
  const Run r = run("construct jordan:3");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["name"] == "J3");
  CHECK(j["basis"].size() == 3);
}

TEST_CASE("paper-suite single scenario") {
  const Run r = run("paper-suite --only equivalent --trials 20 --output json");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  REQUIRE(j["scenarios"].size() == 1);
  const auto& s = j["scenarios"][0];
  CHECK(s["scenario"] == "equivalent");
  CHECK(s["verdict"] == "pass");
  CHECK(s["dims"]["agree"] == 20);
  for (const char* key : {"schema_version", "anchor", "dims", "seed", "elapsed_ms"}) CHECK(s.contains(key));
}
