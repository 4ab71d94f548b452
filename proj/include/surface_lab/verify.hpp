#ifndef SURFACE_LAB_VERIFY_HPP
#define SURFACE_LAB_VERIFY_HPP

// Named checks over all modules, run as a suite and rendered as a text table
// or a deterministic JSON document.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "surface_lab/legendre_numerics.hpp"

namespace surface_lab {

enum class OutputFormat { kText, kJson };
enum class Status { kPass, kFail, kSkipped };

std::string to_string(Status s);

struct RunConfig {
  std::vector<std::string> checks{"all"};
  std::vector<Complex> taus;       // explicit moduli
  bool default_taus = true;        // used when `taus` is empty
  double eps = 1e-9;
  std::size_t samples = 100;
  std::uint64_t seed = 0;
  OutputFormat format = OutputFormat::kText;
  bool timing = false;             // elapsed_ms in JSON output

  void validate() const;
  /// Moduli the numeric checks run on; empty means they are skipped.
  std::vector<Complex> effective_taus() const;
  Tolerance tolerance() const { return {eps, samples, seed}; }
};

std::vector<Complex> default_taus();

struct CheckResult {
  std::string name;
  Status status = Status::kFail;
  std::string expected;
  std::string actual;
  std::string anchor;  // the statement the check certifies
  double elapsed_ms = 0.0;
};

struct CheckInfo {
  std::string name;
  std::string anchor;
  bool numeric = false;
};

/// Every registered check, sorted by name.
std::vector<CheckInfo> list_checks();

/// Runs the requested checks (sorted by name, duplicates removed).
/// Throws UnknownCheck for an unregistered name.
std::vector<CheckResult> run(const RunConfig& config);

/// 0 iff no result failed.
int exit_code(const std::vector<CheckResult>& results);

std::string render_text(const std::vector<CheckResult>& results);
std::string render_json(const RunConfig& config, const std::vector<CheckResult>& results);

/// Parses "RE+IMi" style moduli: "0+1i", "i", "2i", "0.5+1.5i", "1/3+5/3i".
/// Throws InvalidArgument on malformed input.
Complex parse_tau(const std::string& text);
std::string format_tau(Complex tau);

}  // namespace surface_lab

#endif  // SURFACE_LAB_VERIFY_HPP
