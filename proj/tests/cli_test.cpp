#include "doctest.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lshape/cli/run.hpp"

using lshape::cli::run;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "lshape");
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

/// Last non-comment line of CSV output.
std::string last_row(const std::string& csv) {
  std::istringstream in(csv);
  std::string line, last;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#') last = line;
  return last;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(item);
  return out;
}

}  // namespace

TEST_CASE("efp prints the exact value") {
  const auto r = call({"efp", "--r", "2", "--s", "1", "--q", "0", "--alpha", "1/2"});
  CHECK(r.code == 0);
  CHECK(split(last_row(r.out))[5] == "3/4");
  CHECK(r.out.find("# alpha=1/2") != std::string::npos);
  const auto dec = call({"efp", "--r", "2", "--s", "1", "--q", "0", "--alpha", "0.5"});
  CHECK(split(last_row(dec.out))[5] == "3/4");
  const auto real = call({"efp", "--r", "3", "--s", "2", "--q", "1", "--alpha", "1/3", "--mode", "real"});
  CHECK(real.code == 0);
  CHECK(std::stod(split(last_row(real.out))[5]) == doctest::Approx(640.0 / 2187));
}

TEST_CASE("phi in D_I is zero") {
  const auto r = call({"phi", "--x", "0.1", "--y", "0.1", "--alpha", "0.5"});
  CHECK(r.code == 0);
  const auto row = split(last_row(r.out));
  CHECK(row[3] == "D_I");
  CHECK(row[7] == "0");
}

TEST_CASE("zpart reduces to Z_N at s = 0") {
  const auto r = call({"zpart", "--r", "3", "--s", "0", "--q", "0", "--alpha", "1/2", "--rho", "2"});
  CHECK(r.code == 0);
  CHECK(std::stod(split(last_row(r.out))[4]) == doctest::Approx(64.0));
}

TEST_CASE("exit codes") {
  CHECK(call({}).code == 1);
  CHECK(call({"efp", "--r", "2"}).code == 1);
  CHECK(call({"efp", "--r", "2", "--s", "1", "--q", "0", "--alpha", "x/y"}).code == 1);
  CHECK(call({"efp", "--r", "2", "--s", "1", "--q", "0", "--alpha", "3/2"}).code == 2);
  CHECK(call({"eta", "--x", "0.1", "--y", "0.1", "--alpha", "0.5"}).code == 2);
  CHECK(call({"transition", "--x", "0.25", "--y", "0.25", "--alpha-lo", "0.2", "--alpha-hi", "0.3"}).code == 2);
  CHECK(call({"phi", "--x", "0.1", "--y", "0.1", "--alpha", "0.5", "--prec", "20"}).code == 1);
  CHECK(call({"verify", "--suite", "exactcore"}).code == 0);
  CHECK(call({"verify", "--suite", "exactcore", "--tol-scale", "1e-30"}).code == 3);
  CHECK(call({"verify", "--suite", "bogus"}).code == 1);
  CHECK(call({"--help"}).code == 0);
}

TEST_CASE("json output mirrors the rows") {
  const auto r = call({"--format", "json", "regime", "--R", "4", "--Q", "0", "--alpha", "1/2"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "regime");
  CHECK(j["config"]["R"] == 4.0);
  CHECK(j["rows"][0]["regime"] == "IIA");
  CHECK(j["rows"][0]["E"].get<double>() == doctest::Approx(1.3566017177982128660));
  const auto v = call({"verify", "--suite", "exactcore", "--format", "json"});
  const auto jv = nlohmann::json::parse(v.out);
  CHECK(jv["pass"].get<bool>());
  CHECK(jv["criteria"].size() == 2);
  CHECK(jv["criteria"][0]["checks"][0].contains("tolerance"));
}

TEST_CASE("grid output is deterministic across job counts") {
  const auto a = call({"phi", "--alpha", "1/2", "--grid", "8,4", "--jobs", "1"});
  const auto b = call({"phi", "--alpha", "1/2", "--grid", "8,4", "--jobs", "3"});
  CHECK(a.code == 0);
  const auto strip = [](const std::string& s) {
    // The jobs line is part of the echoed configuration.
    std::istringstream in(s);
    std::string line, out;
    while (std::getline(in, line))
      if (line.rfind("# jobs=", 0) != 0) out += line + "\n";
    return out;
  };
  CHECK(strip(a.out) == strip(b.out));
  CHECK(std::count(a.out.begin(), a.out.end(), '\n') == 7 * 5 + 1 + 5);
}

TEST_CASE("environment defaults and --out") {
  setenv("LSHAPE_PREC_BITS", "200", 1);
  const auto r = call({"efp", "--r", "3", "--s", "2", "--q", "1", "--alpha", "1/3", "--mode", "real"});
  CHECK(r.out.find("# precision_bits=256") != std::string::npos);
  const auto flag = call({"efp", "--r", "3", "--s", "2", "--q", "1", "--alpha", "1/3", "--mode", "real", "--prec", "600"});
  CHECK(flag.out.find("# precision_bits=1024") != std::string::npos);
  unsetenv("LSHAPE_PREC_BITS");
  const std::string path = "cli_test_out.csv";
  CHECK(call({"--out", path, "regime", "--R", "10", "--Q", "0", "--alpha", "0.5"}).code == 0);
  std::ifstream in(path);
  std::stringstream content;
  content << in.rdbuf();
  CHECK(split(last_row(content.str()))[0] == "IA");
  std::remove(path.c_str());
}

TEST_CASE("converge and density") {
  const auto c = call({"converge", "--x", "0.25", "--y", "0.25", "--alpha", "1/2", "--Ns", "16,32,64"});
  CHECK(c.code == 0);
  CHECK(c.out.find("# gaps_decreasing=true") != std::string::npos);
  const auto d = call({"density", "--R", "4", "--Q", "3", "--alpha", "0.5", "--points", "11"});
  CHECK(d.code == 0);
  CHECK(d.out.find("# regime=IIB") != std::string::npos);
  CHECK(split(last_row(d.out))[1] == "1");
}
