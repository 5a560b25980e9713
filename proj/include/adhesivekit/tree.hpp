#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "adhesivekit/finset.hpp"

namespace adk {

// A finite poset in which the down-set of every element is a chain; stored by
// its immediate-predecessor (parent) map, roots having no entry.
struct TreeOrder {
  FinSet carrier;
  std::map<std::string, std::string> parent;

  TreeOrder() = default;
  TreeOrder(FinSet carrier, std::map<std::string, std::string> parent);

  std::optional<std::string> parent_of(const std::string& e) const;
  // The full down-set of e as a chain, root first, e last.
  std::vector<std::string> predecessors(const std::string& e) const;
  int depth(const std::string& e) const { return int(predecessors(e).size()) - 1; }
  int height() const;  // number of nonempty levels
  bool leq(const std::string& x, const std::string& y) const;

  friend bool operator==(const TreeOrder&, const TreeOrder&) = default;
};

// Builds a tree order from an arbitrary list of order pairs (x <= y); the
// relation is reflexively/transitively closed on load, then checked to be
// antisymmetric with chain down-sets.
TreeOrder tree_from_leq(FinSet carrier,
                        const std::vector<std::pair<std::string, std::string>>& leq_pairs);

// k-fold immediate predecessor; nullopt once the chain runs out.
std::optional<std::string> iterated_parent(const TreeOrder& t, const std::string& e, int k);

bool is_monotone(const TreeOrder& dom, const TreeOrder& cod, const FinFunction& map);
// Monotone and preserving immediate predecessors (roots go to roots).
bool is_strict(const TreeOrder& dom, const TreeOrder& cod, const FinFunction& map);

struct TreeMorphism {
  TreeOrder dom, cod;
  FinFunction map;

  TreeMorphism();
  TreeMorphism(TreeOrder dom, TreeOrder cod, FinFunction map);  // requires strictness
  static TreeMorphism identity(const TreeOrder& t);

  friend bool operator==(const TreeMorphism&, const TreeMorphism&) = default;
};

TreeMorphism compose(const TreeMorphism& g, const TreeMorphism& f);

// The equivalent presentation as a family of levels with restriction maps
// (level n holds the elements of depth n, restriction takes the parent).
struct TreePresheaf {
  std::vector<FinSet> levels;
  std::vector<FinFunction> restrict;  // restrict[n] : levels[n+1] -> levels[n]

  friend bool operator==(const TreePresheaf&, const TreePresheaf&) = default;
};

TreePresheaf to_presheaf(const TreeOrder& t);
// Inverse construction; level tokens are kept when globally unique, otherwise
// all are prefixed with their level.
TreeOrder from_presheaf(const TreePresheaf& p);

struct TreePushout {
  TreeOrder apex;
  TreeMorphism from_c, from_b;
};
// Span C <-m- A -f-> B, computed levelwise through the presheaf presentation.
TreePushout pushout_tree(const TreeMorphism& m, const TreeMorphism& f);

struct TreePullback {
  TreeOrder apex;
  TreeMorphism to_c, to_b;
};
TreePullback pullback_tree(const TreeMorphism& g, const TreeMorphism& n);

struct TreeEqualizer {
  TreeOrder apex;
  TreeMorphism include;
};
TreeEqualizer equalizer_tree(const TreeMorphism& f, const TreeMorphism& g);

struct TreeCoproduct {
  TreeOrder apex;
  TreeMorphism from_left, from_right;
};
TreeCoproduct coproduct_tree(const TreeOrder& a, const TreeOrder& b);

struct TreeProduct {
  TreeOrder apex;
  TreeMorphism to_left, to_right;
};
// Levelwise pairs (the product in the presheaf presentation).
TreeProduct product_tree(const TreeOrder& a, const TreeOrder& b);

std::vector<TreeMorphism> tree_homs(const TreeOrder& a, const TreeOrder& b);

// Equal keys iff isomorphic (classic rooted-forest encoding).
std::string tree_canonical_key(const TreeOrder& t);

// All tree orders with up to max_elems elements, one per isomorphism class,
// with canonical element names.
std::vector<TreeOrder> all_tree_orders(int max_elems);

}  // namespace adk
