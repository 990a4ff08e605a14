#include "support.hpp"

#include <filesystem>

namespace support {

namespace {

std::vector<NamedGroup> build_all(std::vector<progressio::harness::CatalogEntry> const& cat) {
  std::vector<NamedGroup> out;
  out.reserve(cat.size());
  for (auto const& e : cat) out.push_back({e.name, progressio::harness::build_entry(e)});
  return out;
}

std::filesystem::path corpus(char const* file) {
  return std::filesystem::path(PROGRESSIO_TEST_CORPUS_DIR) / file;
}

}  // namespace

std::vector<progressio::harness::CatalogEntry> const& odd_catalog() {
  static auto const cat = progressio::harness::load_catalog(corpus("odd.cat"));
  return cat;
}

std::vector<progressio::harness::CatalogEntry> const& reference_catalog() {
  static auto const cat = progressio::harness::load_catalog(corpus("reference.cat"));
  return cat;
}

std::vector<NamedGroup> const& odd_groups() {
  static auto const groups = build_all(odd_catalog());
  return groups;
}

std::vector<NamedGroup> const& reference_groups() {
  static auto const groups = build_all(reference_catalog());
  return groups;
}

progressio::FiniteGroup group(std::string const& expr) {
  return progressio::build(progressio::parse_group_expr(expr));
}

}  // namespace support
