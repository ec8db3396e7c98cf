#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "pqsurf/presentation.hpp"

namespace pqsurf {

// One registered group: (order, id) key as printed in the output tables,
// display name, defining presentation, and its verified realization.
struct CatalogEntry {
  int order = 0;
  int id = 0;
  std::string name;
  Presentation presentation;
  std::shared_ptr<const PermGroup> realized;

  // raw relator text, kept for cache keys
  std::vector<std::string> relator_text;
};

class CatalogError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Registry of all finite groups the search can touch, keyed by (order, id).
// Verified on load: every presentation realizes its declared order, keys are
// unique, entries of equal order are pairwise non-isomorphic, and for every
// order in the completeness ledger the entry count matches the declared
// isomorphism-class count.
class Catalog {
 public:
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  bool covers(int order) const { return ledger_.count(order) > 0; }
  const std::map<int, int>& ledger() const { return ledger_; }

  // All entries with the given order, in id order.
  // Throws CatalogError("catalog incomplete for order N") when N is not in
  // the completeness ledger: the search must never silently skip groups.
  std::vector<const CatalogEntry*> groups_of_order(int order) const;

  const CatalogEntry* find(int order, int id) const;  // nullptr if absent

  friend Catalog load_catalog(const std::string& path);

 private:
  std::vector<CatalogEntry> entries_;
  std::map<int, int> ledger_;  // order -> declared isomorphism-class count
};

// Parse, realize and verify a catalog file. See docs/file-formats.md for the
// exact grammar. Throws CatalogError on any verification failure.
Catalog load_catalog(const std::string& path);

}  // namespace pqsurf
