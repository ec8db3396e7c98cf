#include "pqsurf/group.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace pqsurf {

PermGroup PermGroup::closure(int degree, const std::vector<Perm>& gens, int bound) {
  for (const auto& g : gens)
    if (g.degree() != degree) throw std::invalid_argument("generator degree mismatch");

  std::set<Perm> seen;
  std::vector<Perm> queue;
  Perm id = Perm::identity(degree);
  seen.insert(id);
  queue.push_back(id);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    Perm cur = queue[qi];
    for (const auto& g : gens) {
      Perm next = cur * g;
      if (seen.insert(next).second) {
        if (static_cast<int>(seen.size()) > bound) throw std::runtime_error("group too large");
        queue.push_back(std::move(next));
      }
    }
  }

  PermGroup grp;
  grp.degree_ = degree;
  grp.gens_ = gens;
  grp.elements_.assign(seen.begin(), seen.end());  // std::set gives lexicographic order
  grp.build_tables();
  return grp;
}

void PermGroup::build_tables() {
  const std::size_t n = elements_.size();
  std::map<Perm, EltIndex> lookup;
  for (std::size_t i = 0; i < n; ++i) lookup[elements_[i]] = static_cast<EltIndex>(i);

  identity_ = lookup.at(Perm::identity(degree_));
  gen_indices_.clear();
  for (const auto& g : gens_) gen_indices_.push_back(lookup.at(g));

  cayley_.assign(n * n, 0);
  inverse_.assign(n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      cayley_[a * n + b] = lookup.at(elements_[a] * elements_[b]);
    }
  }
  for (std::size_t a = 0; a < n; ++a) inverse_[a] = lookup.at(elements_[a].inverse());

  elt_order_.assign(n, 1);
  for (std::size_t a = 0; a < n; ++a) {
    int k = 1;
    EltIndex p = static_cast<EltIndex>(a);
    while (p != identity_) {
      p = mul(p, static_cast<EltIndex>(a));
      ++k;
    }
    elt_order_[a] = k;
  }

  conj_class_.assign(n, -1);
  classes_.clear();
  for (std::size_t a = 0; a < n; ++a) {
    if (conj_class_[a] >= 0) continue;
    int cls = static_cast<int>(classes_.size());
    std::vector<EltIndex> members;
    for (std::size_t g = 0; g < n; ++g) {
      EltIndex c = conj(static_cast<EltIndex>(g), static_cast<EltIndex>(a));
      if (conj_class_[static_cast<std::size_t>(c)] < 0) {
        conj_class_[static_cast<std::size_t>(c)] = cls;
        members.push_back(c);
      }
    }
    std::sort(members.begin(), members.end());
    classes_.push_back(std::move(members));
  }
  num_classes_ = static_cast<int>(classes_.size());
}

EltIndex PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || !(*it == p)) return -1;
  return static_cast<EltIndex>(it - elements_.begin());
}

EltIndex PermGroup::power(EltIndex a, int k) const {
  int n = elt_order(a);
  k %= n;
  if (k < 0) k += n;
  EltIndex r = identity_;
  for (int i = 0; i < k; ++i) r = mul(r, a);
  return r;
}

int PermGroup::centralizer_order(EltIndex a) const {
  int c = 0;
  for (int g = 0; g < order(); ++g)
    if (mul(g, a) == mul(a, g)) ++c;
  return c;
}

std::vector<EltIndex> PermGroup::elements_of_order(int k) const {
  std::vector<EltIndex> out;
  for (int i = 0; i < order(); ++i)
    if (elt_order_[static_cast<std::size_t>(i)] == k) out.push_back(i);
  return out;
}

std::vector<EltIndex> PermGroup::subgroup_closure(const std::vector<EltIndex>& gens) const {
  std::vector<char> in(static_cast<std::size_t>(order()), 0);
  std::vector<EltIndex> queue;
  in[static_cast<std::size_t>(identity_)] = 1;
  queue.push_back(identity_);
  for (EltIndex g : gens) {
    if (!in[static_cast<std::size_t>(g)]) {
      in[static_cast<std::size_t>(g)] = 1;
      queue.push_back(g);
    }
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (EltIndex g : gens) {
      EltIndex next = mul(queue[qi], g);
      if (!in[static_cast<std::size_t>(next)]) {
        in[static_cast<std::size_t>(next)] = 1;
        queue.push_back(next);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool PermGroup::generates(const std::vector<EltIndex>& gens) const {
  // closure with early exit once every element is hit
  std::vector<char> in(static_cast<std::size_t>(order()), 0);
  std::vector<EltIndex> queue;
  int count = 1;
  in[static_cast<std::size_t>(identity_)] = 1;
  queue.push_back(identity_);
  for (EltIndex g : gens) {
    if (!in[static_cast<std::size_t>(g)]) {
      in[static_cast<std::size_t>(g)] = 1;
      queue.push_back(g);
      ++count;
    }
  }
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    for (EltIndex g : gens) {
      EltIndex next = mul(queue[qi], g);
      if (!in[static_cast<std::size_t>(next)]) {
        in[static_cast<std::size_t>(next)] = 1;
        queue.push_back(next);
        if (++count == order()) return true;
      }
    }
  }
  return count == order();
}

std::vector<EltIndex> PermGroup::conjugacy_closure(const std::vector<EltIndex>& s) const {
  std::vector<char> in(static_cast<std::size_t>(order()), 0);
  std::vector<EltIndex> queue;
  auto add = [&](EltIndex x) {
    if (!in[static_cast<std::size_t>(x)]) {
      in[static_cast<std::size_t>(x)] = 1;
      queue.push_back(x);
    }
  };
  for (EltIndex x : s) add(x);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    EltIndex x = queue[qi];
    add(mul(x, x));  // powers via repeated squaring walk
    add(inv(x));
    for (EltIndex g = 0; g < order(); ++g) add(conj(g, x));
  }
  // close under all powers explicitly (mul(x,x) chain may miss odd powers)
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<EltIndex> snapshot = queue;
    for (EltIndex x : snapshot) {
      EltIndex p = x;
      for (int k = 2; k <= elt_order(x); ++k) {
        p = mul(p, x);
        if (!in[static_cast<std::size_t>(p)]) {
          in[static_cast<std::size_t>(p)] = 1;
          queue.push_back(p);
          changed = true;
        }
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

std::vector<EltIndex> PermGroup::minimal_generating_set() const {
  std::vector<EltIndex> gens;
  std::vector<EltIndex> current = {identity_};
  for (EltIndex i = 0; i < order(); ++i) {
    if (std::binary_search(current.begin(), current.end(), i)) continue;
    gens.push_back(i);
    current = subgroup_closure(gens);
    if (static_cast<int>(current.size()) == order()) break;
  }
  return gens;
}

bool PermGroup::is_abelian() const {
  for (EltIndex g : gen_indices_)
    for (EltIndex h : gen_indices_)
      if (mul(g, h) != mul(h, g)) return false;
  return true;
}

std::vector<EltIndex> PermGroup::center() const {
  std::vector<EltIndex> out;
  for (EltIndex a = 0; a < order(); ++a) {
    bool central = true;
    for (EltIndex g : gen_indices_) {
      if (mul(a, g) != mul(g, a)) {
        central = false;
        break;
      }
    }
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<EltIndex> PermGroup::derived_subgroup() const {
  std::vector<EltIndex> comms;
  for (EltIndex a = 0; a < order(); ++a)
    for (EltIndex b = 0; b < order(); ++b)
      comms.push_back(mul(mul(a, b), mul(inv(a), inv(b))));
  std::sort(comms.begin(), comms.end());
  comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
  return subgroup_closure(comms);
}

std::vector<std::vector<EltIndex>> PermGroup::index_two_subgroups() const {
  // Index-2 subgroups = kernels of epimorphisms to Z/2. Find them by scanning
  // subgroups generated by "even" classes; cheap at these orders: a subgroup H
  // of index 2 is normal and contains every square and the derived subgroup.
  std::vector<EltIndex> base = derived_subgroup();
  std::vector<EltIndex> squares = base;
  for (EltIndex a = 0; a < order(); ++a) squares.push_back(mul(a, a));
  std::sort(squares.begin(), squares.end());
  squares.erase(std::unique(squares.begin(), squares.end()), squares.end());
  std::vector<EltIndex> core = subgroup_closure(squares);
  if (static_cast<int>(core.size()) == order()) return {};  // no index-2 subgroup

  // G/core is elementary abelian 2-group; index-2 subgroups correspond to its
  // index-2 subgroups. Enumerate by adding coset representatives.
  std::vector<EltIndex> reps;
  std::vector<char> covered(static_cast<std::size_t>(order()), 0);
  for (EltIndex x : core) covered[static_cast<std::size_t>(x)] = 1;
  for (EltIndex a = 0; a < order(); ++a) {
    if (covered[static_cast<std::size_t>(a)]) continue;
    reps.push_back(a);
    for (EltIndex x : core) covered[static_cast<std::size_t>(mul(x, a))] = 1;
  }
  // subsets of reps unioned with core that form index-2 subgroups
  std::vector<std::vector<EltIndex>> out;
  std::set<std::vector<EltIndex>> dedup;
  const int r = static_cast<int>(reps.size());
  for (int mask = 0; mask < (1 << r); ++mask) {
    std::vector<EltIndex> gens = core;
    for (int i = 0; i < r; ++i)
      if (mask & (1 << i)) gens.push_back(reps[i]);
    std::vector<EltIndex> sub = subgroup_closure(gens);
    if (static_cast<int>(sub.size()) * 2 == order() && dedup.insert(sub).second)
      out.push_back(std::move(sub));
  }
  return out;
}

const std::vector<std::int64_t>& PermGroup::invariant_key() const {
  if (!invariant_key_.empty()) return invariant_key_;
  std::vector<std::int64_t> key;
  key.push_back(order());
  // element-order histogram
  std::map<int, int> hist;
  for (int i = 0; i < order(); ++i) ++hist[elt_order_[static_cast<std::size_t>(i)]];
  for (auto [o, c] : hist) {
    key.push_back(o);
    key.push_back(c);
  }
  key.push_back(-1);
  key.push_back(num_classes_);
  // class size multiset paired with element order of the class
  std::vector<std::pair<int, int>> cls;
  for (const auto& c : classes_)
    cls.push_back({static_cast<int>(c.size()), elt_order_[static_cast<std::size_t>(c[0])]});
  std::sort(cls.begin(), cls.end());
  for (auto [s, o] : cls) {
    key.push_back(s);
    key.push_back(o);
  }
  key.push_back(-2);
  key.push_back(static_cast<std::int64_t>(center().size()));
  key.push_back(static_cast<std::int64_t>(derived_subgroup().size()));
  invariant_key_ = std::move(key);
  return invariant_key_;
}

namespace {

// Expression of each element as (parent, generator) pairs rooted at identity,
// used to transport generator images to full maps.
struct WordDag {
  std::vector<int> parent;  // -1 for identity
  std::vector<int> via;     // generator index used
  std::vector<EltIndex> bfs_order;
};

WordDag build_word_dag(const PermGroup& g, const std::vector<EltIndex>& gens) {
  WordDag dag;
  dag.parent.assign(static_cast<std::size_t>(g.order()), -2);
  dag.via.assign(static_cast<std::size_t>(g.order()), -1);
  dag.parent[static_cast<std::size_t>(g.identity())] = -1;
  dag.bfs_order.push_back(g.identity());
  for (std::size_t qi = 0; qi < dag.bfs_order.size(); ++qi) {
    EltIndex cur = dag.bfs_order[qi];
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      EltIndex next = g.mul(cur, gens[gi]);
      if (dag.parent[static_cast<std::size_t>(next)] == -2) {
        dag.parent[static_cast<std::size_t>(next)] = cur;
        dag.via[static_cast<std::size_t>(next)] = static_cast<int>(gi);
        dag.bfs_order.push_back(next);
      }
    }
  }
  return dag;
}

}  // namespace

std::optional<std::vector<EltIndex>> extend_homomorphism(const PermGroup& g,
                                                         const std::vector<EltIndex>& g_gens,
                                                         const PermGroup& h,
                                                         const std::vector<EltIndex>& images) {
  WordDag dag = build_word_dag(g, g_gens);
  if (dag.bfs_order.size() != static_cast<std::size_t>(g.order())) return std::nullopt;
  std::vector<EltIndex> map(static_cast<std::size_t>(g.order()), -1);
  map[static_cast<std::size_t>(g.identity())] = h.identity();
  for (EltIndex e : dag.bfs_order) {
    if (e == g.identity()) continue;
    EltIndex p = dag.parent[static_cast<std::size_t>(e)];
    int gi = dag.via[static_cast<std::size_t>(e)];
    map[static_cast<std::size_t>(e)] =
        h.mul(map[static_cast<std::size_t>(p)], images[static_cast<std::size_t>(gi)]);
  }
  // verify on the full multiplication relation set
  for (EltIndex a = 0; a < g.order(); ++a) {
    for (EltIndex b = 0; b < g.order(); ++b) {
      if (h.mul(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]) !=
          map[static_cast<std::size_t>(g.mul(a, b))])
        return std::nullopt;
    }
  }
  return map;
}

namespace {

// Backtracking over candidate images of g's minimal generating set inside h.
// Visitor receives each bijective homomorphism found; return false to stop.
template <typename Visitor>
void search_isomorphisms(const PermGroup& g, const PermGroup& h, Visitor&& visit) {
  std::vector<EltIndex> gens = g.minimal_generating_set();
  const std::size_t k = gens.size();
  if (k == 0) {  // trivial group
    if (h.order() == 1) visit(std::vector<EltIndex>{h.identity()}, std::vector<EltIndex>{});
    return;
  }
  // candidate images grouped by element order
  std::vector<std::vector<EltIndex>> candidates(k);
  for (std::size_t i = 0; i < k; ++i)
    candidates[i] = h.elements_of_order(g.elt_order(gens[i]));

  std::vector<EltIndex> chosen(k, -1);
  bool stop = false;

  auto rec = [&](auto&& self, std::size_t depth) -> void {
    if (stop) return;
    if (depth == k) {
      auto map = extend_homomorphism(g, gens, h, chosen);
      if (map) {
        // bijectivity
        std::vector<char> hit(static_cast<std::size_t>(h.order()), 0);
        bool bij = true;
        for (EltIndex m : *map) {
          if (hit[static_cast<std::size_t>(m)]) {
            bij = false;
            break;
          }
          hit[static_cast<std::size_t>(m)] = 1;
        }
        if (bij && !visit(*map, chosen)) stop = true;
      }
      return;
    }
    // prune: partial images must generate a subgroup no larger than needed and
    // the full set must be able to generate h
    for (EltIndex cand : candidates[depth]) {
      chosen[depth] = cand;
      if (depth + 1 == k) {
        std::vector<EltIndex> partial(chosen.begin(), chosen.begin() + static_cast<long>(k));
        if (!h.generates(partial)) continue;
      }
      self(self, depth + 1);
      if (stop) return;
    }
    chosen[depth] = -1;
  };
  rec(rec, 0);
}

}  // namespace

std::vector<Automorphism> automorphisms(const PermGroup& g) {
  std::vector<Automorphism> out;
  search_isomorphisms(g, g, [&](const std::vector<EltIndex>& map, const std::vector<EltIndex>&) {
    Automorphism a;
    a.map = map;
    for (EltIndex gi : g.gen_indices()) a.gen_images.push_back(map[static_cast<std::size_t>(gi)]);
    out.push_back(std::move(a));
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_isomorphic(const PermGroup& g, const PermGroup& h) {
  if (g.order() != h.order()) return false;
  if (g.invariant_key() != h.invariant_key()) return false;
  bool found = false;
  search_isomorphisms(g, h, [&](const std::vector<EltIndex>&, const std::vector<EltIndex>&) {
    found = true;
    return false;  // stop at first
  });
  return found;
}

}  // namespace pqsurf
