#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "barriers/classical.hpp"
#include "barriers/css.hpp"

namespace barriers {

struct ClaimRecord {
  std::string id;
  std::string inputs;
  std::string analytic;   // the bound being checked
  std::string measured;   // measured quantities
  std::string status;     // "pass" | "fail" | "reported-only"
  double runtime_secs = 0.0;
};

struct VerificationReport {
  std::string suite;
  uint64_t seed = 0;
  std::vector<ClaimRecord> claims;

  bool all_passed() const;
};

// Stable field ordering; the JSON form omits wall-clock runtimes so
// repeated runs with one seed are byte-identical.
std::string emit_report(const VerificationReport& report,
                        const std::string& format);  // json | table | csv

// ---- code manifests ----

struct CodeManifest {
  std::string kind;  // "classical" | "css"
  // role -> relative path; roles: H (classical), H_X/H_Z/meta_X/meta_Z (css)
  std::map<std::string, std::string> matrices;
  std::vector<QubitBlock> blocks;
  std::map<std::string, std::size_t> params;  // cached n, k, ...
  std::string provenance;                     // generating command line
  uint64_t seed = 0;

  static CodeManifest read(const std::string& path);
  void write(const std::string& path) const;
};

// Loads matrices relative to the manifest's directory.
ClassicalCode load_classical(const CodeManifest& m, const std::string& base_dir);
CssCode load_css(const CodeManifest& m, const std::string& base_dir);

}  // namespace barriers
