#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "torus/invariant.hpp"

namespace torus::cli {

enum ExitCode : int {
  kOk = 0,
  kMismatch = 1,
  kNonPolynomial = 2,
  kIoFailure = 3,
  kCalibration = 4,
};

/// The fifteen tabulated (n, m) pairs.
const std::vector<std::pair<int, int>>& corpus_pairs();

/// Hash of the library version and pipeline revision; part of every cache key.
std::string code_version();

/// On-disk cache of raw invariants. Advisory: unreadable entries are treated
/// as misses, failed writes are ignored.
class Cache {
 public:
  /// An empty directory disables the cache.
  explicit Cache(std::filesystem::path dir);

  /// $TORUS_SUPER_CACHE, else $XDG_CACHE_HOME/torus-super, else
  /// ~/.cache/torus-super.
  static Cache from_environment();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path entry_path(int n, int m) const;

  std::optional<invariant::Superpolynomial> load(int n, int m) const;
  /// Writes a temporary file and renames it into place.
  void store(const invariant::Superpolynomial& p) const;

 private:
  std::filesystem::path dir_;
};

/// compute() behind the cache. NonPolynomial results are not cached.
invariant::ComputeResult compute_cached(int n, int m, const invariant::ComputeOptions& options,
                                        const Cache* cache);

/// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace torus::cli
