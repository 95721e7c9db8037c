#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "torus/cli.hpp"
#include "torus/io.hpp"

namespace fs = std::filesystem;
using torus::cli::run;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

// Points the cache at a private directory for the lifetime of the object.
struct CacheEnv {
  fs::path dir = torus::testing::scratch_dir("cache");
  CacheEnv() { ::setenv("TORUS_SUPER_CACHE", dir.c_str(), 1); }
  ~CacheEnv() {
    ::unsetenv("TORUS_SUPER_CACHE");
    std::error_code ec;
    fs::remove_all(dir, ec);
  }
};

fs::path copy_fixtures() {
  const auto dir = torus::testing::scratch_dir("fixtures");
  for (const auto& entry : fs::directory_iterator(TORUS_FIXTURE_DIR)) {
    fs::copy_file(entry.path(), dir / entry.path().filename());
  }
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("compute formats") {
    CacheEnv env;
    auto r = invoke({"compute", "2", "3", "--grouped"});
    CHECK(r.code == 0);
    CHECK(r.out == "a^0: 1 + q^4*t^2\na^2: q^2*t^3\n");
    r = invoke({"compute", "2", "3"});
    CHECK(r.out == "1 + q^4*t^2 + a^2*q^2*t^3\n");
    r = invoke({"compute", "3", "4", "--json"});
    CHECK(r.out == torus::io::read_file(std::string(TORUS_FIXTURE_DIR) + "/knot_3_4.json"));
    r = invoke({"compute", "2", "3", "--raw"});
    CHECK(r.out == "q^4*t^-8 + q^8*t^-6 + a^2*q^6*t^-5\ncontent q^4*t^-8\n");
    r = invoke({"compute", "2", "3", "--latex"});
    CHECK(r.out.find("\\begin{array}") != std::string::npos);
    CHECK(invoke({"compute", "2", "3", "--json", "--latex"}).code != 0);
  }

  TEST_CASE("non-polynomial exit code") {
    CacheEnv env;
    const auto r = invoke({"compute", "2", "4"});
    CHECK(r.code == torus::cli::kNonPolynomial);
    CHECK(r.err.find("gcd(n,m) = 2") != std::string::npos);
    CHECK(invoke({"specialize", "3", "6", "--at", "homfly"}).code == torus::cli::kNonPolynomial);
  }

  TEST_CASE("json output is identical across thread counts") {
    CacheEnv env;
    const auto one = invoke({"--no-cache", "--threads", "1", "compute", "5", "6", "--json"});
    const auto four = invoke({"--no-cache", "--threads", "4", "compute", "5", "6", "--json"});
    CHECK(one.code == 0);
    CHECK(one.out == four.out);
  }

  TEST_CASE("specialize") {
    CacheEnv env;
    CHECK(invoke({"specialize", "2", "3", "--at", "jones"}).out == "1 + q^4 - q^6\n");
    CHECK(invoke({"specialize", "2", "3", "--at", "homfly"}).out == "1 + q^4 - a^2*q^2\n");
    CHECK(invoke({"specialize", "2", "3", "--at", "alexander"}).out == "1 - q^2 + q^4\n");
    CHECK(invoke({"specialize", "2", "3", "--at", "kauffman"}).code != 0);
  }

  TEST_CASE("verify corpus") {
    const auto dir = copy_fixtures();
    auto r = invoke({"verify", "corpus", "--fixtures", dir.string()});
    CHECK(r.code == 0);
    CHECK(r.out.find("FAIL") == std::string::npos);

    // Flip one coefficient of the trefoil.
    const auto path = dir / "knot_2_3.json";
    std::string text = torus::io::read_file(path.string());
    const auto at = text.find("[2,2,3,\"1\"]");
    REQUIRE(at != std::string::npos);
    text.replace(at, 11, "[2,2,3,\"2\"]");
    std::ofstream(path, std::ios::binary) << text;
    r = invoke({"verify", "corpus", "--fixtures", dir.string()});
    CHECK(r.code == torus::cli::kMismatch);
    CHECK(r.out.find("FAIL (2,3)") != std::string::npos);
    CHECK(r.out.find("- 2 2 3 2\n+ 2 2 3 1\n") != std::string::npos);

    fs::remove(dir / "knot_5_8.json");
    CHECK(invoke({"verify", "corpus", "--fixtures", dir.string()}).code == torus::cli::kIoFailure);
    fs::remove_all(dir);
  }

  TEST_CASE("verify oracle") {
    const auto r = invoke({"verify", "oracle", "--max-size", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ok   cauchy order 3") != std::string::npos);
    CHECK(invoke({"verify", "oracle", "--max-size", "9"}).code != 0);
  }

  TEST_CASE("genfun") {
    auto r = invoke({"genfun", "2", "1"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "{\"n\":2,\"r\":1,\"numerator\":[{\"z\":0,\"terms\":[[0,0,0,\"1\"]]},{\"z\":1,\"terms\":[[2,2,3,\"1\"]]}],"
          "\"denominator\":[[0,0,0],[0,4,2]]}\n");
    r = invoke({"genfun", "4", "2"});
    CHECK(r.code == torus::cli::kCalibration);
  }

  TEST_CASE("scan") {
    const auto dir = torus::testing::scratch_dir("scan");
    const auto csv = dir / "scan.csv";
    const auto r = invoke({"scan", "--n-max", "4", "--m-max", "13", "--out", csv.string()});
    CHECK(r.code == 0);
    const auto text = torus::io::read_file(csv.string());
    CHECK(text.rfind("n,m,gcd,status,a_max,q_max,t_max,term_count,millis\n", 0) == 0);
    CHECK(invoke({"scan", "--n-max", "3", "--m-max", "5", "--out", (dir / "no" / "such.csv").string()}).code ==
          torus::cli::kIoFailure);
    fs::remove_all(dir);
  }

  TEST_CASE("cache is used and is advisory") {
    CacheEnv env;
    const torus::cli::Cache cache = torus::cli::Cache::from_environment();
    CHECK(cache.dir() == env.dir);
    CHECK(invoke({"compute", "2", "3"}).code == 0);
    const auto entry = cache.entry_path(2, 3);
    REQUIRE(fs::exists(entry));
    CHECK(entry.filename().string().rfind(torus::cli::code_version(), 0) == 0);

    // A planted entry is served as is; --no-cache bypasses it.
    std::ofstream(entry, std::ios::binary) << "0 1 0 1\n0 3 0 1\n";
    CHECK(invoke({"compute", "2", "3"}).out == "1 + q^2\n");
    CHECK(invoke({"--no-cache", "compute", "2", "3"}).out == "1 + q^4*t^2 + a^2*q^2*t^3\n");

    // Garbage is a miss, not an error.
    std::ofstream(entry, std::ios::binary) << "not a polynomial";
    CHECK(invoke({"compute", "2", "3"}).out == "1 + q^4*t^2 + a^2*q^2*t^3\n");
    fs::remove_all(env.dir);
    CHECK(invoke({"compute", "2", "3"}).code == 0);
  }

  TEST_CASE("usage errors") {
    CHECK(invoke({}).code != 0);
    CHECK(invoke({"compute", "2"}).code != 0);
    CHECK(invoke({"compute", "0", "3"}).code != 0);
    CHECK(invoke({"genfun", "3", "0"}).code != 0);
    CHECK(invoke({"--help"}).code == 0);
  }
}
