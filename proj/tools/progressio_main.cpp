// progressio: spectra, classification and corpus verification from the command line.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "progressio/commands.hpp"
#include "progressio/error.hpp"

namespace fs = std::filesystem;
using namespace progressio;
using namespace progressio::harness;

namespace {

/// A bare corpus name such as "odd.cat" falls back to the installed corpus directory.
fs::path resolve_corpus(std::string const& arg) {
  fs::path p(arg);
  if (fs::exists(p)) return p;
  fs::path fallback = fs::path(PROGRESSIO_DEFAULT_CORPUS_DIR) / p;
  if (p.is_relative() && fs::exists(fallback)) return fallback;
  throw Error("corpus file not found: " + arg);
}

std::vector<spectra::SpectrumKind> parse_sets(std::string const& text) {
  std::vector<spectra::SpectrumKind> out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string::npos) comma = text.size();
    std::string item = text.substr(pos, comma - pos);
    auto kind = spectra::parse_kind(item);
    if (!kind) throw ParseError("unknown spectrum '" + item + "' (expected e, s, as or ns)", pos);
    out.push_back(*kind);
    pos = comma + 1;
  }
  return out;
}

int emit(CommandResult const& res, std::string const& out_path) {
  std::cout << res.text;
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw Error("cannot write " + out_path);
    out << res.csv();
  }
  return res.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Element and subgroup order spectra of finite permutation groups"};
  app.require_subcommand(1);

  std::optional<std::size_t> max_order;
  std::size_t closure_cap = kDefaultClosureCap;
  std::size_t jobs = 1;
  std::string out_path;
  std::string catalog_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--max-order", max_order,
                    "Largest group order for subgroup enumeration (default from " +
                        std::string(spectra::kMaxOrderEnv) + " or 600)");
    sub->add_option("--closure-cap", closure_cap, "Largest group order built from generators");
    sub->add_option("--out", out_path, "Write comma-separated records to this file");
  };

  std::string ref;
  std::string sets = "e,s,as,ns";
  auto* spectra_cmd = app.add_subcommand("spectra", "Print order spectra of one group");
  spectra_cmd->add_option("group", ref, "Group expression or catalog name")->required();
  spectra_cmd->add_option("--sets", sets, "Comma list of e, s, as, ns");
  spectra_cmd->add_option("--catalog", catalog_path, "Catalog for resolving group names");
  add_common(spectra_cmd);

  auto* classify_cmd = app.add_subcommand("classify", "Structural report for one group");
  classify_cmd->add_option("group", ref, "Group expression or catalog name")->required();
  classify_cmd->add_option("--catalog", catalog_path, "Catalog for resolving group names");
  add_common(classify_cmd);

  std::string theorem;
  std::string corpus = "odd.cat";
  auto* verify_cmd = app.add_subcommand("verify", "Check a classification over a corpus");
  verify_cmd->add_option("--theorem", theorem, "1.1, 1.2, 1.3, 1.4, lucido, A, B, C or ABC")
      ->required();
  verify_cmd->add_option("--corpus", corpus, "Catalog file (bare names resolve to the shipped corpus)");
  verify_cmd->add_option("--jobs", jobs, "Worker threads, 0 for all cores");
  add_common(verify_cmd);

  std::uint64_t limit = 100;
  auto* pairs_cmd = app.add_subcommand("pairs", "List prime pairs (q, 2q-1)");
  pairs_cmd->add_option("--limit", limit, "Largest q");
  pairs_cmd->add_option("--out", out_path, "Write comma-separated records to this file");

  auto* scan_cmd =
      app.add_subcommand("scan-open-problem", "Groups whose proper normal subgroup orders form an AP");
  scan_cmd->add_option("--corpus", corpus, "Catalog file (bare names resolve to the shipped corpus)");
  scan_cmd->add_option("--jobs", jobs, "Worker threads, 0 for all cores");
  add_common(scan_cmd);

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunOptions opts;
  opts.subgroup_cap = max_order ? *max_order : spectra::subgroup_cap_from_env();
  opts.closure_cap = closure_cap;
  opts.jobs = jobs;

  try {
    std::optional<std::vector<CatalogEntry>> catalog;
    if (!catalog_path.empty()) catalog = load_catalog(resolve_corpus(catalog_path));
    auto const* cat = catalog ? &*catalog : nullptr;

    if (*spectra_cmd) {
      return emit(cmd_spectra(resolve_group_ref(ref, cat), parse_sets(sets), opts), out_path);
    }
    if (*classify_cmd) return emit(cmd_classify(resolve_group_ref(ref, cat), opts), out_path);
    if (*pairs_cmd) return emit(cmd_pairs(limit), out_path);

    bool const spot = theorem == "A" || theorem == "B" || theorem == "C" || theorem == "ABC";
    if (*verify_cmd && spot) return emit(cmd_spot_checks(theorem, opts), out_path);

    fs::path const path = resolve_corpus(corpus);
    auto const entries = load_catalog(path);
    if (*verify_cmd) return emit(cmd_verify(theorem, entries, path.filename().string(), opts), out_path);
    return emit(cmd_scan_open_problem(entries, path.filename().string(), opts), out_path);
  } catch (CapExceeded const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapExceeded;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
