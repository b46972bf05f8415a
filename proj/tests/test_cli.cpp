#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "pbosc/cli.hpp"
#include "pbosc/lie_closure.hpp"

using namespace pbosc;
namespace cli = pbosc::cli;
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

fs::path temp_file(const std::string& name) {
  return fs::temp_directory_path() / ("pbosc_test_" + name);
}

std::vector<std::vector<std::string>> read_csv(const fs::path& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    rows.push_back(std::move(fields));
  }
  return rows;
}

int run_cli(const std::string& args) {
  const std::string cmd =
      std::string(PBOSC_CLI_PATH) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  REQUIRE(status != -1);
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST_CASE("family JSON round trip at s=5 preserves the algebra") {
  const OscillatorFamily original = build_family(5);
  const json j = cli::family_to_json(original);
  const OscillatorFamily reloaded = cli::family_from_json(j);
  CHECK(reloaded.s == 5);
  CHECK(reloaded.dim == 6);
  CHECK(max_abs(commutator(reloaded.a, reloaded.a_dag) - reloaded.A) <= 1e-12);
  for (const auto& name : ladder_names()) {
    CHECK(max_abs(reloaded.derived.at(name) - original.derived.at(name)) ==
          0.0);
  }
}

TEST_CASE("family JSON carries the displayed s=2 values") {
  const json j = cli::family_to_json(build_family(2));
  CHECK(j["s"] == 2);
  CHECK(j["dim"] == 3);
  const json& a_matrix = j["generators"]["A"];
  CHECK(a_matrix[0][0][0] == 1.0);
  CHECK(a_matrix[1][1][0] == 1.0);
  CHECK(a_matrix[2][2][0] == -2.0);
  CHECK(a_matrix[2][2][1] == 0.0);
  CHECK(j["generators"].contains("M"));
  CHECK(j["generators"].contains("F_dag"));
}

TEST_CASE("cmd_build writes a loadable family and reports bad input") {
  const fs::path out = temp_file("family.json");
  std::ostringstream err;
  CHECK(cli::cmd_build(2, out.string(), Tolerance{}, err) == cli::kExitPass);
  std::ifstream in(out);
  json j;
  in >> j;
  const OscillatorFamily family = cli::family_from_json(j);
  CHECK(family.s == 2);
  fs::remove(out);

  std::ostringstream err2;
  CHECK(cli::cmd_build(0, out.string(), Tolerance{}, err2) == cli::kExitUsage);
  std::ostringstream err3;
  CHECK(cli::cmd_build(2, "", Tolerance{}, err3) == cli::kExitUsage);
  std::ostringstream err4;
  CHECK(cli::cmd_build(2, "/nonexistent_dir_xyz/out.json", Tolerance{}, err4) ==
        cli::kExitIo);
}

TEST_CASE("cmd_closure reports the dimension law") {
  struct Case {
    int s;
    int expected;
  };
  for (const Case c : {Case{1, 3}, Case{2, 8}, Case{4, 24}}) {
    std::ostringstream out, err;
    const int code = cli::cmd_closure(c.s, Tolerance{}, out, err);
    CHECK(code == cli::kExitPass);
    const json report = json::parse(out.str());
    CHECK(report["command"] == "closure");
    CHECK(report["pass"] == true);
    CHECK(report["results"]["dimension"] == c.expected);
    CHECK(report["results"]["expected_dimension"] == c.expected);
    CHECK(report["tool_version"] == cli::kToolVersion);
    for (const auto& r : report["residuals"]) {
      CHECK(r["value"].get<double>() <= r["tolerance"].get<double>());
    }
  }
  std::ostringstream out, err;
  CHECK(cli::cmd_closure(0, Tolerance{}, out, err) == cli::kExitUsage);
}

TEST_CASE("cmd_closure flags the lambda8 convention only at s=2") {
  std::ostringstream out2, err2;
  cli::cmd_closure(2, Tolerance{}, out2, err2);
  CHECK(json::parse(out2.str())["results"].contains("lambda8_convention"));

  std::ostringstream out3, err3;
  cli::cmd_closure(3, Tolerance{}, out3, err3);
  CHECK_FALSE(json::parse(out3.str())["results"].contains("lambda8_convention"));
}

TEST_CASE("cmd_structure_constants emits the su(2) Levi-Civita pattern") {
  const fs::path out = temp_file("sc1.csv");
  std::ostringstream err;
  REQUIRE(cli::cmd_structure_constants(1, out.string(), Tolerance{}, err) ==
          cli::kExitPass);
  const auto rows = read_csv(out);
  REQUIRE(rows.size() == 4);  // header + 3 rows with a < b
  CHECK(rows[0] == std::vector<std::string>{"a", "b", "c", "f"});
  for (std::size_t i = 1; i < rows.size(); ++i) {
    REQUIRE(rows[i].size() == 4);
    const int a = std::stoi(rows[i][0]);
    const int b = std::stoi(rows[i][1]);
    const double f = std::stod(rows[i][3]);
    CHECK(a < b);
    CHECK(std::abs(std::abs(f) - 1.0) <= 1e-12);
  }
  fs::remove(out);
}

TEST_CASE("cmd_structure_constants output matches the API tensor") {
  const fs::path out = temp_file("sc2.csv");
  std::ostringstream err;
  REQUIRE(cli::cmd_structure_constants(2, out.string(), Tolerance{}, err) ==
          cli::kExitPass);

  const OscillatorFamily family = build_family(2);
  const LieBasis basis = close_algebra({family.a, family.a_dag, family.A});
  const StructureConstants sc = structure_constants(basis);

  const auto rows = read_csv(out);
  REQUIRE(rows.size() > 1);
  std::size_t expected_rows = 0;
  for (int a = 0; a < sc.dimension; ++a) {
    for (int b = a + 1; b < sc.dimension; ++b) {
      for (int c = 0; c < sc.dimension; ++c) {
        if (std::abs(sc.at(a, b, c)) > 1e-10) ++expected_rows;
      }
    }
  }
  CHECK(rows.size() == expected_rows + 1);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const int a = std::stoi(rows[i][0]);
    const int b = std::stoi(rows[i][1]);
    const int c = std::stoi(rows[i][2]);
    const double f = std::stod(rows[i][3]);
    CHECK(std::abs(f - sc.at(a, b, c)) <= 1e-12 * std::max(1.0, std::abs(f)));
    CHECK(std::abs(sc.at(b, a, c) + f) <= 1e-9);  // antisymmetry implied
  }
  fs::remove(out);
}

TEST_CASE("cmd_phase emits uniform rows for number states") {
  std::ostringstream out, err;
  REQUIRE(cli::cmd_phase(7, 0.0, "n:0", Tolerance{}, out, err) ==
          cli::kExitPass);
  std::istringstream lines(out.str());
  std::string header;
  std::getline(lines, header);
  CHECK(header == "m,theta_m,p_m");
  int count = 0;
  std::string line;
  double total = 0.0;
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const auto last_comma = line.rfind(',');
    const double p = std::stod(line.substr(last_comma + 1));
    CHECK(p == doctest::Approx(0.125).epsilon(1e-12));
    total += p;
    ++count;
  }
  CHECK(count == 8);
  CHECK(std::abs(total - 1.0) <= 1e-12);

  std::ostringstream out2, err2;
  REQUIRE(cli::cmd_phase(1, 0.0, "n:1", Tolerance{}, out2, err2) ==
          cli::kExitPass);
  CHECK(out2.str().find("0.5") != std::string::npos);
}

TEST_CASE("cmd_phase reads amplitude files") {
  const fs::path state = temp_file("state.txt");
  {
    std::ofstream f(state);
    f << "1 0\n0 0\n0 0\n";
  }
  std::ostringstream out, err;
  REQUIRE(cli::cmd_phase(2, 0.0, "file:" + state.string(), Tolerance{}, out,
                         err) == cli::kExitPass);
  std::istringstream lines(out.str());
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) {
    if (line.empty()) continue;
    const double p = std::stod(line.substr(line.rfind(',') + 1));
    CHECK(p == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  }
  fs::remove(state);
}

TEST_CASE("cmd_phase rejects bad state specs") {
  std::ostringstream out, err;
  CHECK(cli::cmd_phase(2, 0.0, "x:1", Tolerance{}, out, err) ==
        cli::kExitUsage);
  CHECK(cli::cmd_phase(2, 0.0, "n:5", Tolerance{}, out, err) ==
        cli::kExitUsage);
  CHECK(cli::cmd_phase(2, 0.0, "file:/no/such/file", Tolerance{}, out, err) ==
        cli::kExitUsage);
  const fs::path bad = temp_file("bad_state.txt");
  {
    std::ofstream f(bad);
    f << "2 0\n0 0\n0 0\n";  // not unit norm
  }
  CHECK(cli::cmd_phase(2, 0.0, "file:" + bad.string(), Tolerance{}, out,
                       err) == cli::kExitUsage);
  fs::remove(bad);
}

TEST_CASE("cmd_susy reports the table and passes") {
  std::ostringstream out, err;
  const int code = cli::cmd_susy(2, 12, 1.0, 0.8, Complex(0.2, 0.1), 1.0,
                                 Tolerance{}, out, err);
  CHECK(code == cli::kExitPass);
  const json report = json::parse(out.str());
  CHECK(report["pass"] == true);
  CHECK(report["results"]["window"] == 10);

  bool found_m1 = false;
  for (const auto& row : report["results"]["nprime_table"]) {
    if (row["m"] == 1) {
      found_m1 = true;
      CHECK(row["C"] == 3);
      CHECK(row["energy"].get<double>() == doctest::Approx(1.5));
    }
  }
  CHECK(found_m1);

  for (const auto& r : report["residuals"]) {
    CHECK(r["value"].get<double>() <= r["tolerance"].get<double>());
  }
}

TEST_CASE("cmd_susy: decoupled equivalence and k=3 suite") {
  std::ostringstream out, err;
  REQUIRE(cli::cmd_susy(1, 6, 1.0, 1.0, Complex(0.0, 0.0), 1.0, Tolerance{},
                        out, err) == cli::kExitPass);
  const json report = json::parse(out.str());
  CHECK(report["results"]["hamiltonian_form_equivalence"].get<double>() <=
        1e-13);

  std::ostringstream out3, err3;
  REQUIRE(cli::cmd_susy(3, 16, 1.2, 0.9, Complex(0.4, -0.3), 2.0, Tolerance{},
                        out3, err3) == cli::kExitPass);
  const json report3 = json::parse(out3.str());
  for (const auto& r : report3["residuals"]) {
    if (r["scope"] == "windowed") {
      CHECK(r["value"].get<double>() <= 1e-10);
    }
  }
}

TEST_CASE("cmd_susy rejects bad parameters") {
  std::ostringstream out, err;
  CHECK(cli::cmd_susy(0, 6, 1.0, 1.0, Complex(0, 0), 1.0, Tolerance{}, out,
                      err) == cli::kExitUsage);
  CHECK(cli::cmd_susy(3, 3, 1.0, 1.0, Complex(0, 0), 1.0, Tolerance{}, out,
                      err) == cli::kExitUsage);
  CHECK(cli::cmd_susy(1, 6, -1.0, 1.0, Complex(0, 0), 1.0, Tolerance{}, out,
                      err) == cli::kExitUsage);
}

TEST_CASE("report output lands in --out files identically") {
  const fs::path out_path = temp_file("closure.json");
  std::ostringstream out, err;
  REQUIRE(cli::cmd_closure(2, Tolerance{}, out, err, out_path.string()) ==
          cli::kExitPass);
  std::ifstream in(out_path);
  std::stringstream file_content;
  file_content << in.rdbuf();
  CHECK(file_content.str() == out.str());
  fs::remove(out_path);
}

TEST_CASE("closure reports are deterministic across runs") {
  std::ostringstream first, second, err;
  cli::cmd_closure(3, Tolerance{}, first, err);
  cli::cmd_closure(3, Tolerance{}, second, err);
  CHECK(first.str() == second.str());
}

TEST_CASE("binary: exit code contract") {
  CHECK(run_cli("closure --s 2") == 0);
  CHECK(run_cli("closure --s 0") == 2);
  CHECK(run_cli("build --s 0 --out /tmp/pbosc_never.json") == 2);
  CHECK(run_cli("") == 2);
  CHECK(run_cli("no-such-command") == 2);
  CHECK(run_cli("--help") == 0);
  CHECK(run_cli("phase --s 3 --state n:0") == 0);
  CHECK(run_cli("susy --k 1 --D 6") == 0);
}

TEST_CASE("binary: build then reload round trip") {
  const fs::path out = temp_file("family_bin.json");
  CHECK(run_cli("build --s 3 --out " + out.string()) == 0);
  std::ifstream in(out);
  REQUIRE(in.good());
  json j;
  in >> j;
  const OscillatorFamily family = cli::family_from_json(j);
  CHECK(max_abs(commutator(family.a, family.a_dag) - family.A) <= 1e-12);
  fs::remove(out);
}
