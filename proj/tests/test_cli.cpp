#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

#include <json.hpp>

namespace {

struct Run {
  int code;
  std::string out;
};

const std::filesystem::path& cache_dir() {
  static const auto dir = std::filesystem::temp_directory_path() /
                          ("repdim-cli-test-" + std::to_string(std::random_device{}()));
  return dir;
}

Run run(const std::string& args) {
  const std::string cmd =
      "REPDIM_CACHE='" + cache_dir().string() + "' '" REPDIM_CLI_PATH "' " + args + " 2>&1";
  FILE* pipe = ::popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int status = ::pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("table") {
    auto r = run("table 'symmetric(3)'");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["characters"].size() == 3);
    CHECK(j["characters"][2]["degree"] == 2);
    r = run("table 'dicyclic(8)'");
    CHECK(nlohmann::json::parse(r.out)["characters"].size() == 5);
    r = run("table 'perm(3:\"(1,2)\")'");
    REQUIRE(r.code == 0);
    j = nlohmann::json::parse(r.out);
    CHECK(j["order"] == 2);
    CHECK(j["characters"].size() == 2);
    r = run("table --pretty 'cyclic(3)'");
    CHECK(r.code == 0);
    CHECK(r.out.find("ζ3") != std::string::npos);
  }

  TEST_CASE("delta and delta-irr") {
    auto r = run("delta 'product(alternating(4),dihedral(10))'");
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "5");
    CHECK(r.out.find("witness:") != std::string::npos);
    r = run("delta-irr 'abelian(2,2)'");
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "does not exist");
    r = run("delta-irr --gap-zero 'abelian(2,2)'");
    CHECK(first_line(r.out) == "0");
    r = run("delta 'cyclic(9)'");
    CHECK(first_line(r.out) == "1");
    r = run("delta-irr 'product(alternating(4),symmetric(3))' --cache off");
    CHECK(first_line(r.out) == "6");
  }

  TEST_CASE("exit codes") {
    CHECK(run("delta 'nonsense(2)'").code == 2);
    CHECK(run("delta 'cyclic(3'").code == 2);
    CHECK(run("table 'perm(3:\"(1,2)(2,3)\")'").code == 2);
    CHECK(run("delta --bound 10 'cyclic(15)'").code == 3);
    CHECK(run("delta 'symmetric(9)'").code == 3);
    CHECK(run("delta --cache maybe 'cyclic(3)'").code == 2);
    CHECK(run("frobnicate").code == 2);
  }

  TEST_CASE("verify") {
    auto r = run("verify 'extraspecial(2,32,plus)'");
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);
    CHECK(r.out.find("predicted 4 / 4, computed 4 / 4") != std::string::npos);
    r = run("verify 'frobenius72()'");
    CHECK(r.code == 0);
    CHECK(r.out.find("predicted 8 / 8") != std::string::npos);
    r = run("verify 'symmetric(6)'");
    CHECK(r.code == 0);
    CHECK(r.out.find("predicted 5 / 5") != std::string::npos);
    r = run("verify 'product(frobenius_affine(7,2),dicyclic(8))'");
    CHECK(r.code == 1);
    CHECK(r.out.find("predicted 6 / 6, computed 5 / 6") != std::string::npos);
  }

  TEST_CASE("export and import") {
    const auto file = cache_dir().string() + "-export.json";
    auto r = run("export 'product(alternating(4),symmetric(3))' -o '" + file + "'");
    REQUIRE(r.code == 0);
    r = run("import '" + file + "'");
    CHECK(r.code == 0);
    CHECK(r.out.find("delta: 5") != std::string::npos);
    CHECK(r.out.find("delta_irr: 6") != std::string::npos);

    auto j = nlohmann::json::parse(std::ifstream(file));
    j["characters"][3]["values"][1]["coeffs"] = {7};
    std::ofstream(file, std::ios::trunc) << j.dump();
    CHECK(run("import '" + file + "'").code != 0);
    std::ofstream(file, std::ios::trunc) << "{";
    CHECK(run("import '" + file + "'").code == 2);
    std::filesystem::remove(file);
  }

  TEST_CASE("cache poisoning is reported") {
    CHECK(run("delta 'alternating(5)'").code == 0);
    std::filesystem::path entry;
    for (const auto& e : std::filesystem::directory_iterator(cache_dir())) {
      const auto j = nlohmann::json::parse(std::ifstream(e.path()));
      if (j["spec"] == "alternating(5)") entry = e.path();
    }
    REQUIRE_FALSE(entry.empty());
    auto j = nlohmann::json::parse(std::ifstream(entry));
    std::string payload = j["payload"];
    payload.replace(payload.find("\"degree\":3"), 10, "\"degree\":1");
    j["payload"] = payload;
    std::ofstream(entry, std::ios::trunc) << j.dump();
    auto r = run("delta 'alternating(5)'");
    CHECK(r.code == 0);
    CHECK(r.out.find("checksum") != std::string::npos);
    CHECK(r.out.find("\n3\n") != std::string::npos);
  }

  TEST_CASE("corpus filter") {
    auto r = run("corpus --filter frobenius");
    CHECK(r.code == 0);
    CHECK(r.out.find("[10]") != std::string::npos);
    CHECK(r.out.find("[11]") != std::string::npos);
    CHECK(r.out.find("[1]") == std::string::npos);
    CHECK(r.out.find("[15]") == std::string::npos);
    std::error_code ec;
    std::filesystem::remove_all(cache_dir(), ec);
  }
}
