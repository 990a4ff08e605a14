#pragma once

#include <string>
#include <vector>

#include "progressio/catalog.hpp"

namespace support {

struct NamedGroup {
  std::string name;
  progressio::FiniteGroup group;
};

std::vector<progressio::harness::CatalogEntry> const& odd_catalog();
std::vector<progressio::harness::CatalogEntry> const& reference_catalog();

/// Built once per process.
std::vector<NamedGroup> const& odd_groups();
std::vector<NamedGroup> const& reference_groups();

progressio::FiniteGroup group(std::string const& expr);

}  // namespace support
