#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code = 0;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = infoq::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

nlohmann::json json_of(const Result& r) { return nlohmann::json::parse(r.out); }

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "infoq_cli_test";
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("entropy of a fair coin") {
  const Result r = run({"entropy", "--dist", "0.5,0.5"});
  CHECK(r.code == 0);
  CHECK(json_of(r)["H"].get<double>() == 1.0);
  CHECK(json_of(run({"entropy", "--counts", "1,1,2"}))["H"].get<double>() == doctest::Approx(1.5));
}

TEST_CASE("rabin example") {
  const Result r = run({"zoo", "rabin", "--p", "3", "--q", "5"});
  CHECK(r.code == 0);
  CHECK(json_of(r)["H"].get<double>() == 1.0);
}

TEST_CASE("pp sweep emits csv") {
  const Result r = run({"channel", "pp", "--p1", "0.5", "--eps", "0.01", "--sweep"});
  CHECK(r.code == 0);
  std::istringstream lines(r.out);
  std::string header;
  std::getline(lines, header);
  CHECK(header == "p1,eps,output_entropy,conditional_entropy,mi_exact,mi_closed_form,mi_approx,approx_rel_error");
  std::size_t rows = 0;
  for (std::string line; std::getline(lines, line);) {
    ++rows;
  }
  CHECK(rows == 20);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == infoq::cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == infoq::cli::kExitUsage);
  CHECK(run({"entropy", "--dist", "0.5,0.5", "--bogus"}).code == infoq::cli::kExitUsage);
  CHECK(run({"channel", "xpp", "--eps", "0.1"}).code == infoq::cli::kExitUsage);
  const Result bad = run({"entropy", "--dist", "0.5,0.6"});
  CHECK(bad.code == infoq::cli::kExitDomainError);
  const auto record = nlohmann::json::parse(bad.err);
  CHECK(record["error"] == "domain");
  CHECK(bad.out.empty());
  CHECK(run({"zoo", "dlog", "--p", "7", "--b", "2"}).code == infoq::cli::kExitDomainError);
}

TEST_CASE("help lists every command") {
  const Result r = run({"--help"});
  CHECK(r.code == 0);
  for (const char* name : {"entropy", "approx", "joint", "complexity", "zoo", "channel", "sim", "ksat", "verify-paper"}) {
    CHECK(r.out.find(name) != std::string::npos);
  }
  const Result zoo = run({"zoo", "--help"});
  CHECK(zoo.code == 0);
  for (const char* name : {"dirichlet", "mod", "bool", "totient", "dlog", "rabin", "rsa", "mult", "subset-sum"}) {
    CHECK(zoo.out.find(name) != std::string::npos);
  }
  const Result sub = run({"channel", "--help"});
  for (const char* flag : {"--p1", "--eps", "--sweep", "--p1-grid", "--eps-grid", "--threshold"}) {
    CHECK(sub.out.find(flag) != std::string::npos);
  }
}

TEST_CASE("formats") {
  const Result table = run({"joint", "--matrix", "0.5,0;0,0.5", "--format", "table"});
  CHECK(table.out.find("H_f") != std::string::npos);
  CHECK(table.out.rfind("key", 0) == 0);
  const Result csv = run({"zoo", "mod", "--n", "4", "--format", "csv"});
  CHECK(csv.out.rfind("key,value\n", 0) == 0);
  CHECK(csv.out.find("\nH,2.0\n") != std::string::npos);
  const Result ksat = run({"ksat", "--n", "8", "--instances", "10", "--densities", "2,6", "--format", "json"});
  CHECK(json_of(ksat)["rows"].size() == 2);
  CHECK(run({"zoo", "mod", "--n", "4", "--format", "xml"}).code == infoq::cli::kExitUsage);
}

TEST_CASE("randomized commands repeat byte for byte") {
  const std::vector<std::string> geo = {"sim", "geometric", "--p", "0.3", "--trials", "500"};
  CHECK(run(geo).out == run(geo).out);
  auto seeded = geo;
  seeded.insert(seeded.end(), {"--seed", "0"});
  CHECK(run(seeded).out == run(geo).out);
  const std::vector<std::string> ksat = {"ksat", "--n", "10", "--instances", "20", "--seed", "4"};
  CHECK(run(ksat).out == run(ksat).out);
}

TEST_CASE("file inputs") {
  const fs::path dir = scratch_dir();
  {
    std::ofstream(dir / "f.cnf") << "c or of three\np cnf 3 1\n1 2 3 0\n";
    std::ofstream(dir / "samples.csv") << "x,y\n0,-1\n1,1\n";
    std::ofstream(dir / "joint.csv") << "0.25,0.25\n0.25,0.25\n";
    std::ofstream(dir / "values.txt") << "1\n1\n2\n3\n";
  }
  const auto b = json_of(run({"zoo", "bool", "--cnf", (dir / "f.cnf").string()}));
  CHECK(b["sat_count"] == 7);
  const auto s = json_of(run({"sim", "bisect", "--csv", (dir / "samples.csv").string(), "--tol", "0.125"}));
  CHECK(s["queries"] == 3);  // [0, 1] down to 1/8
  CHECK(json_of(run({"joint", "--csv", (dir / "joint.csv").string()}))["I"].get<double>() == 0.0);
  CHECK(json_of(run({"entropy", "--values", (dir / "values.txt").string()}))["H"].get<double>() == 1.5);
  CHECK(run({"zoo", "bool", "--cnf", (dir / "missing.cnf").string()}).code == infoq::cli::kExitDomainError);
}

TEST_CASE("output directory from the environment") {
  const fs::path dir = scratch_dir() / "out";
  fs::create_directories(dir);
  fs::remove(dir / "report.json");
  ::setenv(infoq::cli::kOutputDirEnv, dir.c_str(), 1);
  const Result r = run({"entropy", "--dist", "0.25,0.75", "--out", "report.json"});
  ::unsetenv(infoq::cli::kOutputDirEnv);
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(dir / "report.json");
  REQUIRE(in);
  const auto j = nlohmann::json::parse(in);
  CHECK(j["H"].get<double>() == doctest::Approx(0.811278124459));
}

TEST_CASE("verify-paper harness") {
  const Result a = run({"verify-paper"});
  const Result b = run({"verify-paper"});
  CHECK(a.out == b.out);
  CHECK(a.out.find("PASS") != std::string::npos);
  const Result csv = run({"verify-paper", "--format", "csv"});
  CHECK(csv.code == a.code);
  CHECK(csv.out.rfind("status,id,computed,expected,description\n", 0) == 0);
  const Result fault = run({"verify-paper", "--inject-fault", "mod-entropy/27"});
  CHECK(fault.code == 1);
  CHECK(fault.out.find("FAIL    mod-entropy/27") != std::string::npos);
  CHECK(run({"verify-paper", "--inject-fault", "no-such-check"}).code == 1);
}

TEST_CASE("complexity subcommands") {
  const auto m = json_of(run({"complexity", "markov", "--budget", "100", "--ratio", "1000"}));
  CHECK(m["bound"].get<double>() == doctest::Approx(0.1));
  const auto s = json_of(run({"complexity", "sat-bound", "--n", "10", "--k", "0"}));
  CHECK(s["exact"] == "inf");
  const Result rep = run({"complexity", "report", "--matrix", "0.5,0;0,0.5", "--event", "1"});
  CHECK(rep.code == 0);
  CHECK(rep.out.find("least_queries") != std::string::npos);
  CHECK(run({"complexity", "time", "--info", "1", "--pmi", "0"}).code == infoq::cli::kExitDomainError);
}
