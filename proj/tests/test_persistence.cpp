#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <random>

#include <json.hpp>

#include "repdim/cache.hpp"
#include "repdim/dixon.hpp"
#include "repdim/error.hpp"
#include "repdim/faithful.hpp"
#include "repdim/named_groups.hpp"
#include "repdim/table_json.hpp"

using namespace repdim;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& tag) {
    path = fs::temp_directory_path() / ("repdim-test-" + tag + "-" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

}  // namespace

TEST_SUITE("persistence") {
  TEST_CASE("table JSON schema") {
    const auto t = character_table(named_group("symmetric(3)"));
    const auto j = nlohmann::json::parse(export_table(*t));
    CHECK(j["spec"] == "symmetric(3)");
    CHECK(j["order"] == 6);
    CHECK(j["conductor"] == 6);
    CHECK(j["classes"].size() == 3);
    CHECK(j["classes"][1]["size"] == 3);
    CHECK(j["classes"][1]["powers"].size() == 6);
    CHECK(j["characters"][2]["degree"] == 2);
    CHECK(j["characters"][2]["values"][2] == nlohmann::json::parse(R"({"e":6,"coeffs":[-1,0]})"));
    // Key order is fixed.
    const std::string text = export_table(*t);
    CHECK(text.rfind(R"x({"spec":"symmetric(3)","order":6,"conductor":6,"classes":[)x", 0) == 0);
  }

  TEST_CASE("round trip and byte stability") {
    for (const char* spec : {"cyclic(1)", "dicyclic(8)", "alternating(5)", "frobenius72()", "gl(2,3)",
                             "product(alternating(4),symmetric(3))", "extraspecial(3,27,exp9)"}) {
      CAPTURE(spec);
      const Group g = named_group(spec);
      const std::string a = export_table(compute_character_table(g));
      const std::string b = export_table(compute_character_table(g));
      CHECK(a == b);
      const auto back = import_table(a);
      CHECK(export_table(back) == a);
      const auto d0 = delta(g), d1 = delta(back);
      CHECK(d0.value == d1.value);
      CHECK(d0.witness == d1.witness);
      CHECK(delta_irr(back) == delta_irr(*character_table(g)));
    }
  }

  TEST_CASE("import rejects bad input") {
    CHECK_THROWS_AS(import_table("{not json"), ParseError);
    CHECK_THROWS_AS(import_table(R"({"spec":"x"})"), ParseError);
    auto j = nlohmann::json::parse(export_table(*character_table(named_group("symmetric(3)"))));
    auto bad_value = j;
    bad_value["characters"][2]["values"][1]["coeffs"] = {1, 0};
    CHECK_THROWS_AS(import_table(bad_value.dump()), VerificationError);
    auto bad_conductor = j;
    bad_conductor["characters"][1]["values"][0] = nlohmann::json::parse(R"({"e":3,"coeffs":[1,0]})");
    CHECK_THROWS_AS(import_table(bad_conductor.dump()), ParseError);
    auto bad_len = j;
    bad_len["characters"][1]["values"][0]["coeffs"] = {1};
    CHECK_THROWS_AS(import_table(bad_len.dump()), ParseError);
    auto bad_power = j;
    bad_power["classes"][1]["powers"][1] = 7;
    CHECK_THROWS_AS(import_table(bad_power.dump()), ParseError);
  }

  TEST_CASE("external tables need not be sorted") {
    auto j = nlohmann::json::parse(export_table(*character_table(named_group("dicyclic(8)"))));
    std::swap(j["characters"][1], j["characters"][4]);
    const auto t = import_table(j.dump());
    CHECK(delta(t).value == 2);
    CHECK(delta_irr(t) == 2u);
  }

  TEST_CASE("sha256") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(sha256_hex("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  }

  TEST_CASE("cache modes and integrity") {
    TempDir dir("cache");
    const Group g = named_group("alternating(5)");
    TableCache rw(dir.path, CacheMode::ReadWrite);
    auto first = cached_table(g, rw);
    CHECK(first.status == CacheStatus::Miss);
    CHECK(fs::exists(rw.entry_path(g.spec())));
    auto second = cached_table(g, rw);
    CHECK(second.status == CacheStatus::Hit);
    CHECK(second.payload == first.payload);
    CHECK(second.payload == export_table(compute_character_table(g)));

    const auto entry = nlohmann::json::parse(slurp(rw.entry_path(g.spec())));
    CHECK(entry["key"] == rw.key(g.spec()));
    CHECK(entry["version"] == kToolVersion);
    CHECK(entry["checksum"] == sha256_hex(first.payload));

    // Tamper with the payload: detected, recomputed, rewritten.
    auto tampered = entry;
    std::string payload = tampered["payload"];
    payload.replace(payload.find("\"degree\":3"), 10, "\"degree\":4");
    tampered["payload"] = payload;
    std::ofstream(rw.entry_path(g.spec()), std::ios::trunc) << tampered.dump();
    auto third = cached_table(g, rw);
    CHECK(third.status == CacheStatus::Corrupt);
    CHECK(third.payload == first.payload);
    CHECK(cached_table(g, rw).status == CacheStatus::Hit);

    // A consistent checksum over an invalid table is still rejected on import.
    tampered["checksum"] = sha256_hex(payload);
    std::ofstream(rw.entry_path(g.spec()), std::ios::trunc) << tampered.dump();
    CHECK(cached_table(g, rw).status == CacheStatus::Corrupt);

    TempDir ro_dir("ro");
    TableCache ro(ro_dir.path, CacheMode::ReadOnly);
    CHECK(cached_table(g, ro).status == CacheStatus::Miss);
    CHECK_FALSE(fs::exists(ro.entry_path(g.spec())));
    TableCache off(dir.path, CacheMode::Off);
    CHECK(cached_table(g, off).status == CacheStatus::Disabled);
  }

  TEST_CASE("cold runs write identical bytes") {
    TempDir a("cold-a"), b("cold-b");
    const Group g = named_group("product(alternating(4),dihedral(10))");
    TableCache ca(a.path, CacheMode::ReadWrite), cb(b.path, CacheMode::ReadWrite);
    ca.store(g.spec(), export_table(compute_character_table(g)));
    cb.store(g.spec(), export_table(compute_character_table(g)));
    CHECK(slurp(ca.entry_path(g.spec())) == slurp(cb.entry_path(g.spec())));
    CHECK(ca.key(g.spec()) == cb.key(g.spec()));
    CHECK(ca.key(g.spec()) != ca.key("symmetric(3)"));
  }

  TEST_CASE("cache directory and mode parsing") {
    ::setenv("REPDIM_CACHE", "/tmp/somewhere-else", 1);
    CHECK(default_cache_dir() == fs::path("/tmp/somewhere-else"));
    ::unsetenv("REPDIM_CACHE");
    ::setenv("XDG_CACHE_HOME", "/tmp/xdg", 1);
    CHECK(default_cache_dir() == fs::path("/tmp/xdg/repdim"));
    ::unsetenv("XDG_CACHE_HOME");
    CHECK(parse_cache_mode("ro") == CacheMode::ReadOnly);
    CHECK_THROWS_AS(parse_cache_mode("yes"), ParseError);
  }

  TEST_CASE("pretty table") {
    const auto text = pretty_table(*character_table(named_group("cyclic(3)")));
    CHECK(text.find("ζ3") != std::string::npos);
    CHECK(text.find("X.3") != std::string::npos);
  }
}
