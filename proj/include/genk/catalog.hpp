#pragma once

#include <string>
#include <vector>

namespace genk {

struct CatalogEntry {
  std::string name;
  std::string tier;
  std::string anchor;
};

/// Every certification the CLI can run, in execution order.
const std::vector<CatalogEntry>& check_catalog();
/// Throws InvalidInput for unknown names.
const CatalogEntry& catalog_entry(const std::string& name);
inline const std::string& check_anchor(const std::string& name) { return catalog_entry(name).anchor; }

}  // namespace genk
