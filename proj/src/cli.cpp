#include "torus/cli.hpp"

#include <unistd.h>

#include <CLI11.hpp>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <thread>

#include "torus/errors.hpp"
#include "torus/io.hpp"
#include "torus/oracle.hpp"

#ifndef TORUS_VERSION
#define TORUS_VERSION "dev"
#endif
#ifndef TORUS_FIXTURE_DIR
#define TORUS_FIXTURE_DIR "fixtures"
#endif

namespace torus::cli {

namespace fs = std::filesystem;
using invariant::ComputeOptions;
using invariant::ComputeResult;
using invariant::NonPolynomial;
using invariant::Superpolynomial;

namespace {

// Bump when a change alters computed output.
constexpr const char* kPipelineRevision = "1";

std::string env(const char* name) {
  const char* value = std::getenv(name);
  return value == nullptr ? std::string() : std::string(value);
}

unsigned default_threads() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string pair_name(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

int report_nonpolynomial(const NonPolynomial& np, std::ostream& err) {
  err << "P" << pair_name(np.n, np.m) << " is not a polynomial: gcd(n,m) = " << np.gcd << "\n";
  return kNonPolynomial;
}

std::string fixture_path(const std::string& dir, int n, int m) {
  return (fs::path(dir) / ("knot_" + std::to_string(n) + "_" + std::to_string(m) + ".json")).string();
}

struct Settings {
  unsigned threads = default_threads();
  bool no_cache = false;
};

ComputeOptions options_from(const Settings& s) { return ComputeOptions{std::max(1u, s.threads)}; }

int cmd_compute(int n, int m, const std::string& format, bool raw, const Settings& s, std::ostream& out,
                std::ostream& err) {
  const Cache cache = s.no_cache ? Cache(fs::path()) : Cache::from_environment();
  const ComputeResult result = compute_cached(n, m, options_from(s), &cache);
  if (const auto* np = std::get_if<NonPolynomial>(&result)) return report_nonpolynomial(*np, err);
  const auto& p = std::get<Superpolynomial>(result);
  const auto poly = raw ? p.raw() : p.terms;
  if (format == "json") {
    out << (raw ? io::raw_knot_json(p) : io::knot_json(p)) << "\n";
    return kOk;
  }
  if (format == "latex") {
    out << io::latex_table(poly);
  } else if (format == "grouped") {
    out << io::grouped_text(poly);
  } else {
    out << algebra::to_string(poly) << "\n";
  }
  if (raw) out << "content " << algebra::to_string(p.raw_content, algebra::VarAlphabet::knot()) << "\n";
  return kOk;
}

int cmd_verify_corpus(const std::string& dir, const Settings& s, std::ostream& out, std::ostream& err) {
  int status = kOk;
  for (const auto& [n, m] : corpus_pairs()) {
    std::string expected;
    try {
      expected = io::read_file(fixture_path(dir, n, m));
    } catch (const IoError& e) {
      err << e.what() << "\n";
      return kIoFailure;
    }
    const ComputeResult result = invariant::compute(invariant::KnotRequest::make(n, m), options_from(s));
    if (const auto* np = std::get_if<NonPolynomial>(&result)) {
      out << "FAIL " << pair_name(n, m) << " " << np->message << "\n";
      status = kMismatch;
      continue;
    }
    const auto& p = std::get<Superpolynomial>(result);
    if (io::knot_json(p) + "\n" == expected) {
      out << "ok   " << pair_name(n, m) << " " << p.terms.size() << " terms\n";
      continue;
    }
    status = kMismatch;
    out << "FAIL " << pair_name(n, m) << "\n";
    try {
      const auto fixture = io::parse_knot_json(expected);
      const std::string diff = io::term_diff(fixture.terms, p.terms);
      out << (diff.empty() ? "serialization differs; terms agree\n" : diff);
    } catch (const UsageError& e) {
      out << "unreadable fixture: " << e.what() << "\n";
    }
  }
  return status;
}

int cmd_verify_oracle(int max_size, std::ostream& out) {
  int status = kOk;
  for (const auto& check : oracle::run_suites(max_size)) {
    out << (check.ok ? "ok   " : "FAIL ") << check.name << "\n";
    if (!check.ok) status = kMismatch;
  }
  return status;
}

int cmd_genfun(int n, int r, int kmax, const Settings& s, std::ostream& out) {
  const auto gf = invariant::generating_function(n, r, kmax, options_from(s));
  out << io::genfun_json(gf) << "\n";
  return kOk;
}

int cmd_scan(int n_max, int m_max, const std::string& path, const Settings& s, std::ostream& out,
             std::ostream& err) {
  const auto report = invariant::scan(n_max, m_max, options_from(s));
  const std::string csv = invariant::to_csv(report);
  if (path.empty()) {
    out << csv;
  } else {
    std::ofstream file(path, std::ios::binary);
    if (!(file << csv)) {
      err << "cannot write " << path << "\n";
      return kIoFailure;
    }
  }
  if (report.failures() != 0) {
    err << report.failures() << " scan entries failed\n";
    return kMismatch;
  }
  return kOk;
}

int cmd_specialize(int n, int m, const std::string& target, const Settings& s, std::ostream& out,
                   std::ostream& err) {
  static const std::map<std::string, invariant::Specialization> targets = {
      {"homfly", invariant::Specialization::homfly},
      {"jones", invariant::Specialization::jones},
      {"alexander", invariant::Specialization::alexander},
  };
  const Cache cache = s.no_cache ? Cache(fs::path()) : Cache::from_environment();
  const ComputeResult result = compute_cached(n, m, options_from(s), &cache);
  if (const auto* np = std::get_if<NonPolynomial>(&result)) return report_nonpolynomial(*np, err);
  out << algebra::to_string(invariant::specialize(std::get<Superpolynomial>(result), targets.at(target)))
      << "\n";
  return kOk;
}

}  // namespace

const std::vector<std::pair<int, int>>& corpus_pairs() {
  static const std::vector<std::pair<int, int>> pairs = {
      {2, 3}, {2, 5}, {2, 7}, {3, 4}, {3, 5}, {3, 7}, {3, 8}, {3, 10},
      {3, 11}, {4, 5}, {4, 7}, {4, 9}, {4, 11}, {5, 6}, {5, 8},
  };
  return pairs;
}

std::string code_version() {
  const std::string salt = std::string("torus-super ") + TORUS_VERSION + " pipeline " + kPipelineRevision;
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : salt) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Cache::Cache(fs::path dir) : dir_(std::move(dir)) {}

Cache Cache::from_environment() {
  if (const auto explicit_dir = env("TORUS_SUPER_CACHE"); !explicit_dir.empty()) return Cache(explicit_dir);
  if (const auto xdg = env("XDG_CACHE_HOME"); !xdg.empty()) return Cache(fs::path(xdg) / "torus-super");
  if (const auto home = env("HOME"); !home.empty()) return Cache(fs::path(home) / ".cache" / "torus-super");
  return Cache(fs::path());
}

fs::path Cache::entry_path(int n, int m) const {
  return dir_ / (code_version() + "-" + std::to_string(n) + "-" + std::to_string(m) + ".txt");
}

std::optional<Superpolynomial> Cache::load(int n, int m) const {
  if (dir_.empty()) return std::nullopt;
  std::ifstream in(entry_path(n, m), std::ios::binary);
  if (!in) return std::nullopt;
  const std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    const auto raw = algebra::parse_text(algebra::VarAlphabet::knot(), text);
    if (raw.is_zero()) return std::nullopt;
    Superpolynomial p;
    p.n = n;
    p.m = m;
    p.raw_content = algebra::monomial_content(raw);
    p.terms = raw.shifted(p.raw_content.inverse());
    if (p.terms.constant_term() != 1) return std::nullopt;
    p.flags = invariant::verify_properties(p.terms);
    return p;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void Cache::store(const Superpolynomial& p) const {
  if (dir_.empty()) return;
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) return;
  static std::atomic<unsigned> counter{0};
  const fs::path target = entry_path(p.n, p.m);
  fs::path temp = target;
  temp += ".tmp." + std::to_string(::getpid()) + "." + std::to_string(counter++);
  {
    std::ofstream outf(temp, std::ios::binary);
    if (!(outf << algebra::to_text(p.raw()))) {
      fs::remove(temp, ec);
      return;
    }
  }
  fs::rename(temp, target, ec);
  if (ec) fs::remove(temp, ec);
}

ComputeResult compute_cached(int n, int m, const ComputeOptions& options, const Cache* cache) {
  const auto req = invariant::KnotRequest::make(n, m);
  if (cache != nullptr) {
    if (auto hit = cache->load(n, m)) return *std::move(hit);
  }
  ComputeResult result = invariant::compute(req, options);
  if (cache != nullptr) {
    if (const auto* p = std::get_if<Superpolynomial>(&result)) cache->store(*p);
  }
  return result;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Torus knot superpolynomials from the beta-deformed Macdonald sum", "torus-super"};
  app.require_subcommand(1);
  Settings settings;
  app.add_option("--threads", settings.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--no-cache", settings.no_cache, "Bypass the result cache");

  int n = 0;
  int m = 0;
  auto* compute = app.add_subcommand("compute", "P(n,m) in the variables a, q, t");
  compute->add_option("n", n)->required()->check(CLI::PositiveNumber);
  compute->add_option("m", m)->required()->check(CLI::PositiveNumber);
  auto* as_json = compute->add_flag("--json", "Canonical JSON");
  auto* as_latex = compute->add_flag("--latex", "LaTeX array grouped by a-degree");
  auto* as_grouped = compute->add_flag("--grouped", "One line per a-degree");
  as_json->excludes(as_latex)->excludes(as_grouped);
  as_latex->excludes(as_grouped);
  bool raw = false;
  compute->add_flag("--raw", raw, "Skip content normalization and print the content");

  auto* verify = app.add_subcommand("verify", "Check the corpus or the oracle suites");
  verify->require_subcommand(1);
  auto* corpus = verify->add_subcommand("corpus", "Recompute every fixture and diff");
  std::string fixtures = TORUS_FIXTURE_DIR;
  corpus->add_option("--fixtures", fixtures, "Fixture directory");
  auto* oracle_cmd = verify->add_subcommand("oracle", "Brute-force Macdonald checks");
  int max_size = 4;
  oracle_cmd->add_option("--max-size", max_size)->check(CLI::Range(1, oracle::kMaxSize));

  auto* genfun = app.add_subcommand("genfun", "Generating function of the (n, nk + r) family");
  int r = 0;
  int kmax = 3;
  genfun->add_option("n", n)->required();
  genfun->add_option("r", r)->required();
  genfun->add_option("--check-kmax", kmax, "Validate the series through this k")->check(CLI::Range(0, 12));

  auto* scan = app.add_subcommand("scan", "Polynomiality over a range of (n, m)");
  int n_max = 0;
  int m_max = 0;
  std::string out_path;
  scan->add_option("--n-max", n_max)->required()->check(CLI::Range(2, 12));
  scan->add_option("--m-max", m_max)->required()->check(CLI::Range(2, 60));
  scan->add_option("--out", out_path, "CSV destination (default stdout)");

  auto* specialize = app.add_subcommand("specialize", "HOMFLY, Jones or Alexander reduction");
  std::string target;
  specialize->add_option("n", n)->required()->check(CLI::PositiveNumber);
  specialize->add_option("m", m)->required()->check(CLI::PositiveNumber);
  specialize->add_option("--at", target)->required()->check(CLI::IsMember({"homfly", "jones", "alexander"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (compute->parsed()) {
      const std::string format = as_json->count() ? "json" : as_latex->count() ? "latex" : as_grouped->count() ? "grouped" : "plain";
      return cmd_compute(n, m, format, raw, settings, out, err);
    }
    if (corpus->parsed()) return cmd_verify_corpus(fixtures, settings, out, err);
    if (oracle_cmd->parsed()) return cmd_verify_oracle(max_size, out);
    if (genfun->parsed()) return cmd_genfun(n, r, kmax, settings, out);
    if (scan->parsed()) return cmd_scan(n_max, m_max, out_path, settings, out, err);
    if (specialize->parsed()) return cmd_specialize(n, m, target, settings, out, err);
  } catch (const CalibrationError& e) {
    err << "calibration: " << e.what() << "\n";
    return kCalibration;
  } catch (const IntegrityError& e) {
    err << "integrity: " << e.what() << "\n";
    return kMismatch;
  } catch (const IoError& e) {
    err << e.what() << "\n";
    return kIoFailure;
  } catch (const UsageError& e) {
    err << "usage: " << e.what() << "\n";
    return static_cast<int>(CLI::ExitCodes::ValidationError);
  }
  return kOk;
}

}  // namespace torus::cli
