#include <algorithm>
#include <cctype>
#include <deque>
#include <stdexcept>

#include "pqsurf/presentation.hpp"

namespace pqsurf {

namespace {
constexpr const char* kLetters = "xyzwuv";

int letter_index(char c) {
  for (int i = 0; kLetters[i]; ++i)
    if (kLetters[i] == c) return i;
  return -1;
}
}  // namespace

void Presentation::check() const {
  for (const auto& rel : relators)
    for (int s : rel) {
      int idx = s >= 0 ? s : -s - 1;
      if (idx >= n_gens) throw std::invalid_argument("relator references unknown generator");
    }
}

std::vector<int> parse_word(const std::string& text, int n_gens) {
  std::vector<int> word;
  std::size_t i = 0;
  while (i < text.size()) {
    char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    int gi = letter_index(c);
    if (gi < 0 || gi >= n_gens) throw std::invalid_argument("bad generator letter in word: " + text);
    ++i;
    long exp = 1;
    if (i < text.size() && (text[i] == '-' || std::isdigit(static_cast<unsigned char>(text[i])))) {
      bool neg = text[i] == '-';
      if (neg) ++i;
      long v = 0;
      bool any = false;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        ++i;
        any = true;
      }
      if (!any) throw std::invalid_argument("dangling sign in word: " + text);
      exp = neg ? -v : v;
    }
    int sym = exp >= 0 ? gi : -gi - 1;
    for (long k = 0; k < std::labs(exp); ++k) word.push_back(sym);
  }
  return word;
}

std::string word_to_string(const std::vector<int>& word) {
  std::string out;
  std::size_t i = 0;
  while (i < word.size()) {
    int s = word[i];
    std::size_t j = i;
    while (j < word.size() && word[j] == s) ++j;
    long run = static_cast<long>(j - i);
    int gi = s >= 0 ? s : -s - 1;
    long exp = s >= 0 ? run : -run;
    out += kLetters[gi];
    if (exp != 1) out += std::to_string(exp);
    i = j;
  }
  return out;
}

namespace {

// HLT Todd-Coxeter over the trivial subgroup. Columns: 2*g for generator g,
// 2*g+1 for its inverse. Deterministic: cosets numbered in definition order.
class CosetTable {
 public:
  CosetTable(int n_gens, int limit) : ncols_(2 * n_gens), limit_(limit) { add_coset(); }

  int lookup(int coset, int col) const { return table_[static_cast<std::size_t>(coset)][col]; }
  int num_alive() const { return alive_count_; }
  int n_rows() const { return static_cast<int>(table_.size()); }
  bool is_live(int c) const { return rep(c) == c; }

  // Scan `word` at `coset`, defining new cosets to fill the whole gap.
  // Returns true if anything changed.
  bool scan_and_fill(int coset, const std::vector<int>& word) {
    bool changed = false;
    for (;;) {
      coset = rep(coset);
      int f = coset;
      std::size_t fi = 0;
      while (fi < word.size()) {
        int next = lookup(f, col_of(word[fi]));
        if (next < 0) break;
        f = rep(next);
        ++fi;
      }
      if (fi == word.size()) {
        if (f != coset) {
          merge(f, coset);
          changed = true;
        }
        return changed;
      }
      int b = coset;
      std::size_t bi = word.size();
      while (bi > fi) {
        int next = lookup(b, inv_col_of(word[bi - 1]));
        if (next < 0) break;
        b = rep(next);
        --bi;
      }
      if (bi == fi) {
        // scans overlap: f and b name the same coset
        merge(f, b);
        changed = true;
        continue;
      }
      if (bi == fi + 1) {
        set_entry(f, col_of(word[fi]), b);
        process();
        changed = true;
        continue;  // rescan to confirm closure
      }
      int nc = add_coset();
      if (nc < 0) throw std::runtime_error("presentation too large / non-terminating within bound");
      set_entry(f, col_of(word[fi]), nc);
      process();
      changed = true;
    }
  }

  void fill_gen(int coset, int g) {
    if (lookup(coset, 2 * g) >= 0) return;
    int nc = add_coset();
    if (nc < 0) throw std::runtime_error("presentation too large / non-terminating within bound");
    set_entry(coset, 2 * g, nc);
    process();
  }

  bool complete() const {
    for (int c = 0; c < n_rows(); ++c) {
      if (!is_live(c)) continue;
      for (int col = 0; col < ncols_; ++col) {
        int t = table_[static_cast<std::size_t>(c)][col];
        if (t < 0) return false;
      }
    }
    return true;
  }

  void canonicalize() {
    std::vector<int> newid(table_.size(), -1);
    int next = 0;
    for (int c = 0; c < n_rows(); ++c)
      if (is_live(c)) newid[static_cast<std::size_t>(c)] = next++;
    std::vector<std::vector<int>> fresh(static_cast<std::size_t>(next),
                                        std::vector<int>(ncols_, -1));
    for (int c = 0; c < n_rows(); ++c) {
      if (newid[static_cast<std::size_t>(c)] < 0) continue;
      for (int col = 0; col < ncols_; ++col) {
        int t = table_[static_cast<std::size_t>(c)][col];
        fresh[static_cast<std::size_t>(newid[static_cast<std::size_t>(c)])][col] =
            t < 0 ? -1 : newid[static_cast<std::size_t>(rep(t))];
      }
    }
    table_ = std::move(fresh);
    parent_.resize(table_.size());
    for (std::size_t i = 0; i < table_.size(); ++i) parent_[i] = static_cast<int>(i);
    alive_count_ = static_cast<int>(table_.size());
  }

  static int col_of(int sym) { return sym >= 0 ? 2 * sym : 2 * (-sym - 1) + 1; }
  static int inv_col_of(int sym) { return col_of(sym) ^ 1; }

  int rep(int c) const {
    while (parent_[static_cast<std::size_t>(c)] != c) c = parent_[static_cast<std::size_t>(c)];
    return c;
  }

 private:
  int add_coset() {
    if (static_cast<int>(table_.size()) >= limit_) return -1;
    table_.emplace_back(ncols_, -1);
    parent_.push_back(static_cast<int>(table_.size()) - 1);
    ++alive_count_;
    return static_cast<int>(table_.size()) - 1;
  }

  void set_entry(int c, int col, int t) {
    c = rep(c);
    t = rep(t);
    int existing = table_[static_cast<std::size_t>(c)][col];
    if (existing >= 0 && rep(existing) != t) pending_.push_back({rep(existing), t});
    table_[static_cast<std::size_t>(c)][col] = t;
    int back = table_[static_cast<std::size_t>(t)][col ^ 1];
    if (back >= 0 && rep(back) != c) pending_.push_back({rep(back), c});
    table_[static_cast<std::size_t>(t)][col ^ 1] = c;
  }

  void merge(int a, int b) {
    pending_.push_back({a, b});
    process();
  }

  void process() {
    while (!pending_.empty()) {
      auto [a, b] = pending_.front();
      pending_.pop_front();
      a = rep(a);
      b = rep(b);
      if (a == b) continue;
      if (a > b) std::swap(a, b);
      parent_[static_cast<std::size_t>(b)] = a;
      --alive_count_;
      for (int col = 0; col < ncols_; ++col) {
        int tb = table_[static_cast<std::size_t>(b)][col];
        if (tb < 0) continue;
        tb = rep(tb);
        int ta = table_[static_cast<std::size_t>(a)][col];
        if (ta >= 0 && rep(ta) != tb) pending_.push_back({rep(ta), tb});
        table_[static_cast<std::size_t>(a)][col] = tb;
        int back = table_[static_cast<std::size_t>(tb)][col ^ 1];
        if (back >= 0 && rep(back) != a) pending_.push_back({rep(back), a});
        table_[static_cast<std::size_t>(tb)][col ^ 1] = a;
      }
    }
  }

  int ncols_;
  int limit_;
  int alive_count_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> parent_;
  std::deque<std::pair<int, int>> pending_;
};

}  // namespace

PermGroup realize(const Presentation& p, int coset_limit) {
  p.check();
  if (p.n_gens == 0) return PermGroup::closure(1, {});

  CosetTable table(p.n_gens, coset_limit);
  for (int round = 0;; ++round) {
    if (round > coset_limit)
      throw std::runtime_error("presentation too large / non-terminating within bound");
    bool changed = false;
    for (int c = 0; c < table.n_rows(); ++c) {
      if (!table.is_live(c)) continue;
      for (const auto& rel : p.relators) {
        if (!table.is_live(c)) break;
        if (table.scan_and_fill(c, rel)) changed = true;
      }
      if (!table.is_live(c)) continue;
      for (int g = 0; g < p.n_gens; ++g) {
        if (!table.is_live(c)) break;
        if (table.lookup(c, 2 * g) < 0) {
          table.fill_gen(c, g);
          changed = true;
        }
      }
    }
    if (table.complete() && !changed) break;
    if (table.complete()) {
      // one confirmation pass with no definitions needed
      bool dirty = false;
      for (int c = 0; c < table.n_rows() && !dirty; ++c) {
        if (!table.is_live(c)) continue;
        for (const auto& rel : p.relators)
          if (table.scan_and_fill(c, rel)) {
            dirty = true;
            break;
          }
      }
      if (!dirty) break;
    }
  }
  table.canonicalize();

  const int n = table.num_alive();
  std::vector<Perm> gens;
  for (int g = 0; g < p.n_gens; ++g) {
    std::vector<std::uint16_t> im(static_cast<std::size_t>(n));
    for (int c = 0; c < n; ++c)
      im[static_cast<std::size_t>(c)] = static_cast<std::uint16_t>(table.lookup(c, 2 * g));
    gens.emplace_back(std::move(im));
  }
  PermGroup grp = PermGroup::closure(n, gens, std::max(n + 1, PermGroup::kDefaultClosureBound));
  // regular representation sanity: order equals the coset count and every
  // relator evaluates to the identity
  if (grp.order() != n) throw std::logic_error("coset enumeration produced non-regular action");
  for (const auto& rel : p.relators) {
    Perm w = Perm::identity(n);
    for (int s : rel) {
      const Perm& g = gens[static_cast<std::size_t>(s >= 0 ? s : -s - 1)];
      w = w * (s >= 0 ? g : g.inverse());
    }
    if (!w.is_identity()) throw std::logic_error("relator not satisfied by realization");
  }
  return grp;
}

}  // namespace pqsurf
