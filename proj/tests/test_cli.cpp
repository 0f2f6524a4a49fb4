#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

#include "brandt/cache.hpp"
#include "brandt/cli.hpp"
#include "doctest.h"

using namespace brandt;
using nlohmann::json;

namespace {
  struct Result {
    int         code;
    std::string out;
    std::string err;
  };

  Result run_cli(std::vector<std::string> const& args) {
    std::ostringstream out, err;
    int const          code = cli::main(args, out, err);
    return {code, out.str(), err.str()};
  }

  std::filesystem::path scratch(std::string const& name) {
    auto p = std::filesystem::temp_directory_path()
             / ("brandt_test_cli_" + name + ".json");
    std::filesystem::remove(p);
    return p;
  }

  // {0} together with the constant maps: a genuine sub-near-semiring, but
  // not the whole algebra.
  NearSemiringTable constants_only(NearSemiringTable const& t) {
    BrandtSemigroup const   b(t.n());
    std::vector<Index>      keep{t.zero()};
    std::vector<NsrElement> elements{NsrElement()};
    for (Index i = 1; i < t.size(); ++i) {
      auto const c = classify(b, t.element(i).map());
      if (std::holds_alternative<canonical::Const>(c)
          || std::holds_alternative<canonical::ConstTheta>(c)) {
        keep.push_back(i);
        elements.push_back(t.element(i));
      }
    }
    std::vector<Index> slot(t.size());
    for (Index s = 0; s < keep.size(); ++s) {
      slot[keep[s]] = s;
    }
    std::vector<Index> add, mul;
    for (Index x : keep) {
      for (Index y : keep) {
        add.push_back(slot[t.add(x, y)]);
        mul.push_back(slot[t.mul(x, y)]);
      }
    }
    return NearSemiringTable(t.n(), std::move(elements), std::move(add),
                             std::move(mul));
  }
}  // namespace

TEST_CASE("gen reports the element counts") {
  auto const r = run_cli({"gen", "--n", "3", "--output", "json"});
  REQUIRE(r.code == cli::success);
  auto const j = json::parse(r.out);
  CHECK(j["count"] == 145);
  CHECK(j["total"] == 146);
  CHECK(j["formula"] == 145);
  CHECK(j["breakdown"]["constants"] == 10);
  CHECK(j["breakdown"]["singletons"] == 81);
  CHECK(j["breakdown"]["n_support"] == 54);
  CHECK(j["elements"].size() == 145);
  CHECK(j["elements"][0] == "c:t");

  auto const one = json::parse(run_cli({"gen", "--n", "1", "--output", "json"}).out);
  CHECK(one["count"] == 3);
  CHECK(one["formula"].is_null());

  auto const text = run_cli({"gen", "--n", "2"});
  CHECK(text.code == cli::success);
  CHECK(text.out.find("|A+(B_n)| = 29") != std::string::npos);
}

TEST_CASE("large n only gets the size formula") {
  auto const r = run_cli({"gen", "--n", "6", "--output", "json"});
  REQUIRE(r.code == cli::success);
  auto const j = json::parse(r.out);
  CHECK(j["formula_only"] == true);
  CHECK(j["count"] == (720 + 1) * 36 + 1296 + 1);
  CHECK_FALSE(j.contains("elements"));
  CHECK(run_cli({"congruences", "--n", "5"}).code == cli::usage_error);
}

TEST_CASE("congruences") {
  auto const r = run_cli(
      {"congruences", "--n", "2", "--mode", "twosided", "--output", "json"});
  REQUIRE(r.code == cli::success);
  auto const j = json::parse(r.out);
  CHECK(j["mode"] == "twosided");
  CHECK(j["count"] == 3);
  CHECK(j["congruences"][0]["is_equality"] == true);
  CHECK(j["congruences"][1]["classes"] == 2);
  CHECK(j["congruences"][2]["is_universal"] == true);
  CHECK(j["congruences"][0]["partition"].size() == 30);
  CHECK(j["congruences"][1]["kernel"] == json::array({"0"}));

  auto const plus = json::parse(
      run_cli({"congruences", "--n", "1", "--mode", "plus", "--output", "json"})
          .out);
  CHECK(plus["count"] > 0);
}

TEST_CASE("the other commands") {
  auto const ri = json::parse(
      run_cli({"rightideals", "--n", "2", "--output", "json"}).out);
  CHECK(ri["count"] == 2);

  auto const an = json::parse(
      run_cli({"annihilators", "--n", "2", "--output", "json"}).out);
  CHECK(an["strongly_monogenic"] == true);
  CHECK(an["annihilator_of_C"] == json::array({"0"}));
  CHECK(an["n_subsemigroups"].size() == 2);

  auto const rad = run_cli({"radicals", "--n", "2", "--output", "json"});
  CHECK(rad.code == cli::success);
  auto const rj = json::parse(rad.out);
  CHECK(rj["J"].size() == 10);
  CHECK(rj["R"].size() == 4);

  auto const en = json::parse(run_cli({"endos", "--n", "1", "--output", "json"}).out);
  CHECK(en["count"] == 3);

  auto const v = run_cli({"verify", "--n", "2"});
  CHECK(v.code == cli::success);
  CHECK(v.out.find("FAIL") == std::string::npos);
  CHECK(run_cli({"verify", "--n", "1"}).code == cli::success);
}

TEST_CASE("JSON output is deterministic") {
  for (std::string cmd : {"gen", "congruences", "radicals", "annihilators"}) {
    CAPTURE(cmd);
    auto const a = run_cli({cmd, "--n", "2", "--output", "json"});
    auto const b = run_cli({cmd, "--n", "2", "--output", "json"});
    CHECK(a.code == cli::success);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("a cached run matches a cold run") {
  auto const path = scratch("cache");
  auto const cold = run_cli({"radicals", "--n", "2", "--output", "json"});
  auto const first
      = run_cli({"radicals", "--n", "2", "--output", "json", "--cache", path.string()});
  CHECK(std::filesystem::exists(path));
  auto const second
      = run_cli({"radicals", "--n", "2", "--output", "json", "--cache", path.string()});
  CHECK(first.out == cold.out);
  CHECK(second.out == cold.out);
  // A cache for another n is refused.
  CHECK(run_cli({"gen", "--n", "3", "--cache", path.string()}).code
        == cli::internal_error);
  std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({"gen", "--n", "2"}).code == cli::success);
  CHECK(run_cli({"--help"}).code == cli::success);
  CHECK(run_cli({"gen"}).code == cli::usage_error);
  CHECK(run_cli({"frobnicate", "--n", "2"}).code == cli::usage_error);
  CHECK(run_cli({"gen", "--n", "2", "--bogus"}).code == cli::usage_error);
  CHECK(run_cli({"gen", "--n", "0"}).code == cli::usage_error);
  CHECK(run_cli({"congruences", "--n", "2", "--mode", "left"}).code
        == cli::usage_error);
  CHECK(run_cli({"congruences", "--n", "4"}).code == cli::usage_error);
  CHECK(run_cli({"gen", "--n", "400"}).code == cli::usage_error);

  SUBCASE("a tampered cache is an internal error") {
    auto const path = scratch("tampered");
    auto       j    = to_cache_json(build_nsr(2));
    j["mul"][3][4]  = 0;
    std::ofstream(path) << j.dump();
    auto const r = run_cli({"gen", "--n", "2", "--cache", path.string()});
    CHECK(r.code == cli::internal_error);
    CHECK(r.err.find("checksum") != std::string::npos);
    std::filesystem::remove(path);
  }
  SUBCASE("a consistent but incomplete algebra fails verification") {
    auto const path = scratch("partial");
    save_cache(constants_only(build_nsr(2)), path);
    auto const r = run_cli({"verify", "--n", "2", "--cache", path.string()});
    CHECK(r.code == cli::check_failed);
    CHECK(r.out.find("FAIL count-theorem") != std::string::npos);
    std::filesystem::remove(path);
  }
}
