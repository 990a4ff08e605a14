#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "progressio/catalog.hpp"
#include "progressio/spectra.hpp"

namespace progressio::harness {

enum ExitCode : int {
  kExitOk = 0,
  kExitInconsistent = 1,
  kExitUsage = 2,
  kExitCapExceeded = 3,
};

/// One machine-readable record: name, order, set, spectrum, ratio,
/// structure, consistent. Spectra render as "1|3|5".
struct ReportRow {
  std::string name;
  std::string order;
  std::string set;
  std::string spectrum;
  std::string ratio;
  std::string structure;
  std::string consistent;

  std::string to_csv() const;
};

struct CommandResult {
  std::string text;
  /// Comma-separated records, one per line of the machine-readable output.
  std::vector<std::string> records;
  int exit_code = kExitOk;

  std::string csv() const;
};

struct RunOptions {
  std::size_t subgroup_cap = spectra::kDefaultSubgroupCap;
  std::size_t closure_cap = kDefaultClosureCap;
  /// 0 picks the hardware concurrency.
  std::size_t jobs = 1;
};

/// Catalog entry names take precedence; anything else is parsed as a group
/// expression. Throws ParseError / PreconditionError for unknown refs.
CatalogEntry resolve_group_ref(std::string const& ref,
                               std::vector<CatalogEntry> const* catalog);

CommandResult cmd_spectra(CatalogEntry const& group,
                          std::vector<spectra::SpectrumKind> const& sets,
                          RunOptions const& opts);

CommandResult cmd_classify(CatalogEntry const& group, RunOptions const& opts);

/// theorem is one of "1.1", "1.2", "1.3", "1.4", "lucido". Even-order
/// entries are skipped for the odd-order theorems; entries beyond the
/// subgroup cap are reported per row and do not abort the run.
CommandResult cmd_verify(std::string const& theorem, std::vector<CatalogEntry> const& corpus,
                         std::string const& corpus_label, RunOptions const& opts);

/// Consecutive-spectrum checks ({1, ..., n}) on the named reference groups
/// for the r = 1 classifications: "A" (π_e), "B" (π_s), "C" (π_as), or
/// "ABC" for all three. Under "C", π_as(A5) and π_as(S5) are computed and
/// reported against the listed n = 4 as discrepancies, not failures.
CommandResult cmd_spot_checks(std::string const& which, RunOptions const& opts);

CommandResult cmd_pairs(std::uint64_t limit);

/// Every corpus group whose proper normal subgroup orders form an AP.
CommandResult cmd_scan_open_problem(std::vector<CatalogEntry> const& corpus,
                                    std::string const& corpus_label, RunOptions const& opts);

}  // namespace progressio::harness
