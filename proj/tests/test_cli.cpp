#include <doctest.h>

#include <sys/wait.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "oracles.hpp"

namespace fs = std::filesystem;
using namespace footnet;

namespace {

const fs::path& data_dir() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "footnet_cli_test";
    fs::remove_all(d);
    testing::write_world(testing::synthetic_world(7), d / "data");
    return d;
  }();
  return dir;
}

int run(const std::string& args) {
  const auto d = data_dir();
  std::string cmd = std::string(FOOTNET_CLI) + " " + args + " > " + (d / "stdout.txt").string() + " 2> " +
                    (d / "stderr.txt").string();
  int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  return WEXITSTATUS(status);
}

std::string inputs() {
  const auto d = data_dir() / "data";
  return "--matches " + (d / "matches.csv").string() + " --countries " + (d / "countries.csv").string();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::map<std::string, std::string> snapshot(const fs::path& dir) {
  std::map<std::string, std::string> files;
  for (const auto& e : fs::directory_iterator(dir)) files[e.path().filename().string()] = slurp(e.path());
  return files;
}

void check_manifest(const fs::path& dir, const std::string& command) {
  auto manifest = nlohmann::json::parse(slurp(dir / "manifest.json"));
  CHECK(manifest["command"] == command);
  CHECK(manifest["seed"] == 42);
  CHECK(manifest.contains("config"));
  CHECK(manifest.contains("config_hash"));
  std::set<std::string> listed;
  for (const auto& a : manifest["artifacts"]) listed.insert(a.get<std::string>());
  std::set<std::string> present;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.path().filename() != "manifest.json") present.insert(e.path().filename().string());
  }
  CHECK(listed == present);
  CHECK_FALSE(listed.empty());
}

}  // namespace

TEST_CASE("every subcommand runs and writes a complete manifest") {
  const auto out = data_dir() / "out";
  const std::pair<const char*, const char*> commands[] = {
      {"stats", ""},
      {"graph", ""},
      {"mine", "--start-year 1950 --end-year 1960 --min-support 3"},
      {"communities", ""},
      {"weak-ties", "--k 20"},
      {"dynamics", ""},
      {"similarity", "--start-year 1950 --end-year 1969"},
      {"states", "--start-year 1950 --end-year 1969"},
  };
  for (const auto& [name, extra] : commands) {
    CAPTURE(name);
    CHECK(run(std::string(name) + " " + inputs() + " --out " + out.string() + " " + extra) == 0);
    check_manifest(out / name, name);
  }
  auto stats = nlohmann::json::parse(slurp(out / "stats" / "stats.json"));
  CHECK(stats["countries"] == 42);
}

TEST_CASE("reruns are byte-identical") {
  const auto out = data_dir() / "rerun";
  for (const std::string command : {"states --start-year 1930 --end-year 1969", "communities --seed 3"}) {
    CAPTURE(command);
    const std::string name = command.substr(0, command.find(' '));
    REQUIRE(run(command + " " + inputs() + " --out " + out.string()) == 0);
    auto first = snapshot(out / name);
    REQUIRE(run(command + " " + inputs() + " --out " + out.string()) == 0);
    CHECK(first == snapshot(out / name));
  }
}

TEST_CASE("exit codes") {
  const auto out = (data_dir() / "errors").string();
  CHECK(run("stats --matches /nonexistent.csv --countries /nonexistent.csv --out " + out) == 2);
  CHECK(run("graph " + inputs() + " --from 2000-01-01 --to 1990-01-01 --out " + out) == 3);
  CHECK(run("graph " + inputs() + " --from 01/01/2000 --out " + out) == 2);
  CHECK(run("frobnicate") == 2);
  CHECK(run("weak-ties " + inputs() + " --from 1995-01-01 --to 1995-01-02 --k 5 --out " + out) == 3);

  const auto bad = data_dir() / "bad.csv";
  std::ofstream(bad) << "Date,Home,Guest,GoalsHome,GoalsGuest,Tournament,Venue,HomeRanking,GuestRanking,RankHome,"
                        "RankGuest,ThirdPlace\n2014-06-24,Italy,Spain,one,0,Friendly,Italy,,,,,False\n";
  CHECK(run("stats --matches " + bad.string() + " --countries " + (data_dir() / "data" / "countries.csv").string() +
            " --out " + out) == 2);
  CHECK(slurp(data_dir() / "stderr.txt").find("GoalsHome") != std::string::npos);
}

TEST_CASE("config file supplies defaults and flags win") {
  const auto out = data_dir() / "config";
  const auto cfg = data_dir() / "footnet.ini";
  std::ofstream(cfg) << "[communities]\nseed = 5\n";
  REQUIRE(run("--config " + cfg.string() + " communities " + inputs() + " --out " + out.string()) == 0);
  CHECK(nlohmann::json::parse(slurp(out / "communities" / "manifest.json"))["seed"] == 5);
  REQUIRE(run("--config " + cfg.string() + " communities " + inputs() + " --seed 9 --out " + out.string()) == 0);
  CHECK(nlohmann::json::parse(slurp(out / "communities" / "manifest.json"))["seed"] == 9);
}
