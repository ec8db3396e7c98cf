#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "pqsurf/perm.hpp"

namespace pqsurf {

using EltIndex = int;  // index into PermGroup::elements()

// Finite permutation group carried as its full, canonically ordered element
// list (lexicographic on image sequences). All downstream enumeration iterates
// in that order, so runs are reproducible across platforms.
//
// Groups in scope have order <= 84; the closure safety bound guards against
// malformed catalog input. Immutable after construction.
class PermGroup {
 public:
  static constexpr int kDefaultClosureBound = 10000;

  // Generate the closure of `gens` acting on `degree` points.
  // Throws std::runtime_error("group too large") past `bound` elements.
  static PermGroup closure(int degree, const std::vector<Perm>& gens,
                           int bound = kDefaultClosureBound);

  int degree() const { return degree_; }
  int order() const { return static_cast<int>(elements_.size()); }
  const std::vector<Perm>& elements() const { return elements_; }
  const std::vector<Perm>& gens() const { return gens_; }
  const std::vector<EltIndex>& gen_indices() const { return gen_indices_; }

  const Perm& elt(EltIndex i) const { return elements_[static_cast<std::size_t>(i)]; }
  EltIndex index_of(const Perm& p) const;  // -1 if absent
  bool contains(const Perm& p) const { return index_of(p) >= 0; }

  EltIndex identity() const { return identity_; }
  EltIndex mul(EltIndex a, EltIndex b) const {
    return cayley_[static_cast<std::size_t>(a) * elements_.size() + static_cast<std::size_t>(b)];
  }
  EltIndex inv(EltIndex a) const { return inverse_[static_cast<std::size_t>(a)]; }
  EltIndex conj(EltIndex g, EltIndex x) const {  // g^-1 x g
    return mul(mul(inv(g), x), g);
  }
  EltIndex power(EltIndex a, int k) const;
  int elt_order(EltIndex a) const { return elt_order_[static_cast<std::size_t>(a)]; }

  // Conjugacy structure.
  int conj_class_of(EltIndex a) const { return conj_class_[static_cast<std::size_t>(a)]; }
  int num_conj_classes() const { return num_classes_; }
  const std::vector<std::vector<EltIndex>>& conj_classes() const { return classes_; }
  int centralizer_order(EltIndex a) const;

  // Elements of a given order, in canonical order.
  std::vector<EltIndex> elements_of_order(int k) const;

  // Subgroup generated by the given elements, as a sorted index list.
  std::vector<EltIndex> subgroup_closure(const std::vector<EltIndex>& gens) const;
  bool generates(const std::vector<EltIndex>& gens) const;

  // Smallest subset of G containing S closed under conjugation and powers.
  // Always contains the identity once S is nonempty (powers reach it).
  std::vector<EltIndex> conjugacy_closure(const std::vector<EltIndex>& s) const;

  // Greedy minimal generating set: shortest prefix of the canonical element
  // order whose non-redundant members generate G.
  std::vector<EltIndex> minimal_generating_set() const;

  // Structural fingerprint used to pre-screen isomorphism tests.
  const std::vector<std::int64_t>& invariant_key() const;

  bool is_abelian() const;
  std::vector<EltIndex> center() const;
  std::vector<EltIndex> derived_subgroup() const;
  // All subgroups of index 2 (as sorted element-index lists).
  std::vector<std::vector<EltIndex>> index_two_subgroups() const;

 private:
  int degree_ = 0;
  std::vector<Perm> gens_;
  std::vector<EltIndex> gen_indices_;
  std::vector<Perm> elements_;
  EltIndex identity_ = 0;
  std::vector<EltIndex> cayley_;
  std::vector<EltIndex> inverse_;
  std::vector<int> elt_order_;
  std::vector<int> conj_class_;
  int num_classes_ = 0;
  std::vector<std::vector<EltIndex>> classes_;
  mutable std::vector<std::int64_t> invariant_key_;

  void build_tables();
};

// Automorphism of a PermGroup, stored as the full index map together with the
// images of the group's stored generators.
struct Automorphism {
  std::vector<EltIndex> map;         // map[i] = image of element i
  std::vector<EltIndex> gen_images;  // images of group.gens()

  bool operator==(const Automorphism& o) const { return map == o.map; }
  bool operator<(const Automorphism& o) const { return map < o.map; }
};

// Complete automorphism list, deterministic: backtracking over candidate
// images of the minimal generating set, pruned by order preservation, then
// verified on the full multiplication table.
std::vector<Automorphism> automorphisms(const PermGroup& g);

// True iff a generator-image search finds a bijective homomorphism.
bool is_isomorphic(const PermGroup& g, const PermGroup& h);

// Helper: extend gen-set images to a full homomorphism map if one exists
// (images live in `h`); returns std::nullopt when inconsistent.
std::optional<std::vector<EltIndex>> extend_homomorphism(
    const PermGroup& g, const std::vector<EltIndex>& g_gens, const PermGroup& h,
    const std::vector<EltIndex>& images);

}  // namespace pqsurf
