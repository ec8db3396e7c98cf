#include "pqsurf/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace pqsurf {

std::vector<const CatalogEntry*> Catalog::groups_of_order(int order) const {
  if (!covers(order))
    throw CatalogError("catalog incomplete for order " + std::to_string(order));
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_)
    if (e.order == order) out.push_back(&e);
  std::sort(out.begin(), out.end(),
            [](const CatalogEntry* a, const CatalogEntry* b) { return a->id < b->id; });
  return out;
}

const CatalogEntry* Catalog::find(int order, int id) const {
  for (const auto& e : entries_)
    if (e.order == order && e.id == id) return &e;
  return nullptr;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

}  // namespace

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw CatalogError("cannot open catalog file: " + path);

  Catalog cat;
  std::string line;
  int lineno = 0;
  CatalogEntry cur;
  bool in_group = false;

  auto fail = [&](const std::string& msg) {
    throw CatalogError(path + ":" + std::to_string(lineno) + ": " + msg);
  };

  auto finish_group = [&]() {
    if (!in_group) return;
    cur.presentation.relators.clear();
    for (const auto& t : cur.relator_text)
      cur.presentation.relators.push_back(parse_word(t, cur.presentation.n_gens));
    PermGroup g = realize(cur.presentation);
    if (g.order() != cur.order)
      fail("presentation does not realize declared order for (" + std::to_string(cur.order) +
           "," + std::to_string(cur.id) + "): got " + std::to_string(g.order()));
    cur.realized = std::make_shared<PermGroup>(std::move(g));
    cat.entries_.push_back(cur);
    cur = CatalogEntry{};
    in_group = false;
  };

  while (std::getline(in, line)) {
    ++lineno;
    std::string s = trim(line);
    if (s.empty() || s[0] == '#') continue;
    std::istringstream ss(s);
    std::string kw;
    ss >> kw;
    if (kw == "ledger") {
      int order = 0, count = 0;
      if (!(ss >> order >> count) || order < 1 || count < 1) fail("bad ledger line");
      if (cat.ledger_.count(order)) fail("duplicate ledger entry for order " + std::to_string(order));
      cat.ledger_[order] = count;
    } else if (kw == "group") {
      finish_group();
      in_group = true;
      std::string name;
      if (!(ss >> cur.order >> cur.id)) fail("bad group header");
      std::getline(ss, name);
      cur.name = trim(name);
      if (cur.name.empty()) fail("group needs a display name");
    } else if (kw == "gens") {
      if (!in_group) fail("gens outside group");
      if (!(ss >> cur.presentation.n_gens) || cur.presentation.n_gens < 1 ||
          cur.presentation.n_gens > 6)
        fail("bad generator count");
    } else if (kw == "rel") {
      if (!in_group) fail("rel outside group");
      std::string w;
      std::getline(ss, w);
      w = trim(w);
      if (w.empty()) fail("empty relator");
      cur.relator_text.push_back(w);
    } else if (kw == "end") {
      if (!in_group) fail("end outside group");
      finish_group();
    } else {
      fail("unknown keyword: " + kw);
    }
  }
  finish_group();

  // duplicate keys
  std::map<std::pair<int, int>, int> seen;
  for (const auto& e : cat.entries_) {
    auto key = std::make_pair(e.order, e.id);
    if (seen.count(key))
      throw CatalogError("duplicate catalog key (" + std::to_string(e.order) + "," +
                         std::to_string(e.id) + ")");
    seen[key] = 1;
  }

  // ledger counts
  std::map<int, int> counts;
  for (const auto& e : cat.entries_) ++counts[e.order];
  for (auto [order, declared] : cat.ledger_) {
    int have = counts.count(order) ? counts[order] : 0;
    if (have != declared)
      throw CatalogError("ledger violation for order " + std::to_string(order) + ": declared " +
                         std::to_string(declared) + " classes, file has " + std::to_string(have));
  }
  for (auto [order, have] : counts) {
    (void)have;
    if (!cat.ledger_.count(order))
      throw CatalogError("order " + std::to_string(order) + " has entries but no ledger line");
  }

  // pairwise non-isomorphism within each order
  for (auto [order, declared] : cat.ledger_) {
    (void)declared;
    std::vector<const CatalogEntry*> same;
    for (const auto& e : cat.entries_)
      if (e.order == order) same.push_back(&e);
    for (std::size_t i = 0; i < same.size(); ++i)
      for (std::size_t j = i + 1; j < same.size(); ++j)
        if (is_isomorphic(*same[i]->realized, *same[j]->realized))
          throw CatalogError("catalog entries (" + std::to_string(order) + "," +
                             std::to_string(same[i]->id) + ") and (" + std::to_string(order) +
                             "," + std::to_string(same[j]->id) + ") are isomorphic");
  }

  return cat;
}

}  // namespace pqsurf
