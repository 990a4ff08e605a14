#pragma once

#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "progressio/finite_group.hpp"
#include "progressio/group_expr.hpp"

namespace progressio::harness {

/// Explicit generators in 1-based cycle notation.
struct GeneratorSource {
  std::size_t degree = 0;
  std::vector<Permutation> generators;

  friend bool operator==(GeneratorSource const&, GeneratorSource const&) = default;
};

struct CatalogEntry {
  std::string name;
  std::variant<GroupExpr, GeneratorSource> source;
  std::vector<std::string> tags;
  /// 1-based line of the [group] header; 0 for entries built in code.
  std::size_t line = 0;

  bool has_tag(std::string_view tag) const;
  friend bool operator==(CatalogEntry const& a, CatalogEntry const& b) {
    return a.name == b.name && a.source == b.source && a.tags == b.tags;
  }
};

/// Line-oriented catalog:
///
///   # comment
///   [group]
///   name = Frob75
///   expr = Frob(5,3)
///   tags = odd-order, solvable
///
///   [group]
///   name = C6
///   degree = 5
///   gen = (1 2 3)(4 5)
///
/// Throws ParseError whose position() is the offending 1-based line;
/// duplicate names are rejected the same way.
std::vector<CatalogEntry> parse_catalog(std::string_view text);
std::vector<CatalogEntry> load_catalog(std::filesystem::path const& path);

/// Canonical rendering; parse_catalog(render_catalog(x)) == x.
std::string render_catalog(std::vector<CatalogEntry> const& entries);

FiniteGroup build_entry(CatalogEntry const& entry, std::size_t cap = kDefaultClosureCap);

/// Human-readable source: the expression, or "degree 5: (1 2 3)(4 5)".
std::string describe_source(CatalogEntry const& entry);

}  // namespace progressio::harness
