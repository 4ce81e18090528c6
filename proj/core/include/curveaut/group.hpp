#ifndef CURVEAUT_GROUP_HPP
#define CURVEAUT_GROUP_HPP

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "curveaut/transform.hpp"

namespace curveaut {

template <class F>
struct Group {
  std::vector<Element<F>> elems;  // BFS enumeration order, identity first
  std::map<std::string, size_t> index;
  std::vector<size_t> generator_indices;

  size_t order() const { return elems.size(); }
  bool contains(const Element<F>& e) const { return index.count(e.key()) > 0; }
};

// Breadth-first saturation over generator products. Finite order of every
// element makes product closure sufficient (inverses are powers).
template <class F>
Group<F> closure(const std::vector<Element<F>>& gens, size_t cap = 1024) {
  require(!gens.empty(), Err::Input, "closure needs at least one generator");
  Group<F> g;
  Element<F> id = gens[0].identity_like();
  g.elems.push_back(id);
  g.index.emplace(id.key(), 0);
  for (const auto& x : gens)
    require(x.is_proj() == gens[0].is_proj() && x.is_bimoebius() == gens[0].is_bimoebius() &&
                x.dimension() == gens[0].dimension(),
            Err::Shape, "generators of mixed kind");
  size_t head = 0;
  while (head < g.elems.size()) {
    Element<F> cur = g.elems[head++];
    for (const auto& gen : gens) {
      Element<F> prod = compose(cur, gen);
      if (g.index.count(prod.key())) continue;
      require(g.elems.size() < cap, Err::GroupCap, "closure exceeded the element cap");
      g.index.emplace(prod.key(), g.elems.size());
      g.elems.push_back(std::move(prod));
    }
  }
  for (const auto& x : gens) g.generator_indices.push_back(g.index.at(x.key()));
  return g;
}

template <class F>
std::map<long, long> order_histogram(const Group<F>& g, long cap = 256) {
  std::map<long, long> h;
  for (const auto& e : g.elems) h[projective_order(e, cap).order] += 1;
  return h;
}

template <class F>
size_t element_index(const Group<F>& g, const Element<F>& e) {
  auto it = g.index.find(e.key());
  require(it != g.index.end(), Err::Input, "element not in group");
  return it->second;
}

template <class F>
Element<F> group_inverse(const Group<F>& g, const Element<F>& e) {
  Element<F> inv = inverse(e);
  require(g.contains(inv), Err::Inconsistency, "group not closed under inverse");
  return inv;
}

enum class GroupKind { Cyclic, KleinFour, Dihedral, Tetrahedral, Octahedral, Icosahedral, Other };

struct Classification {
  GroupKind kind = GroupKind::Other;
  long order = 0;
  bool abelian = false;
  std::map<long, long> histogram;

  std::string name() const {
    switch (kind) {
      case GroupKind::Cyclic:
        return "cyclic";
      case GroupKind::KleinFour:
        return "klein4";
      case GroupKind::Dihedral:
        return "dihedral";
      case GroupKind::Tetrahedral:
        return "tetrahedral";
      case GroupKind::Octahedral:
        return "octahedral";
      case GroupKind::Icosahedral:
        return "icosahedral";
      case GroupKind::Other:
        return "other";
    }
    return "other";
  }
};

template <class F>
bool is_abelian(const Group<F>& g) {
  // commuting generators suffice
  for (size_t i : g.generator_indices)
    for (size_t j : g.generator_indices) {
      if (compose(g.elems[i], g.elems[j]) != compose(g.elems[j], g.elems[i])) return false;
    }
  return true;
}

// Decision table over (order, abelian flag, order histogram). Total: falls
// through to Other with the invariants attached.
template <class F>
Classification classify(const Group<F>& g, long cap = 256) {
  Classification c;
  c.order = static_cast<long>(g.order());
  c.abelian = is_abelian(g);
  c.histogram = order_histogram(g, cap);
  long n = c.order;
  auto count_of = [&](long k) {
    auto it = c.histogram.find(k);
    return it == c.histogram.end() ? 0L : it->second;
  };
  if (c.abelian && count_of(n) > 0) {
    c.kind = GroupKind::Cyclic;
    return c;
  }
  if (n == 4 && count_of(2) == 3) {
    c.kind = GroupKind::KleinFour;
    return c;
  }
  if (n == 12 && count_of(2) == 3 && count_of(3) == 8) {
    c.kind = GroupKind::Tetrahedral;
    return c;
  }
  if (n == 24 && count_of(2) == 9 && count_of(3) == 8 && count_of(4) == 6) {
    c.kind = GroupKind::Octahedral;
    return c;
  }
  if (n == 60 && count_of(2) == 15 && count_of(3) == 20 && count_of(5) == 24) {
    c.kind = GroupKind::Icosahedral;
    return c;
  }
  if (n % 2 == 0 && n >= 6) {
    long half = n / 2;
    long involutions = count_of(2);
    long needed = (half % 2 == 0) ? half + 1 : half;
    if (count_of(half) > 0 && involutions == needed) {
      c.kind = GroupKind::Dihedral;
      return c;
    }
  }
  c.kind = GroupKind::Other;
  return c;
}

template <class F>
bool is_normal(const Group<F>& h, const Group<F>& g) {
  for (const auto& e : h.elems)
    require(g.contains(e), Err::Input, "subgroup elements must belong to the ambient group");
  for (size_t gi : g.generator_indices) {
    const Element<F>& x = g.elems[gi];
    Element<F> xinv = inverse(x);
    for (const auto& e : h.elems) {
      Element<F> conj = compose(compose(x, e), xinv);
      if (!h.contains(conj)) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Induced permutation action on a list of projective subspaces.

template <class F>
struct BlockAction {
  std::vector<std::vector<int>> perms;  // aligned with group.elems
  long image_order = 0;
  long kernel_order = 0;
};

// blocks: each a list of spanning points (rows). The whole list must be
// setwise invariant; otherwise Err::Invariance.
template <class F>
BlockAction<F> action_on_blocks(const Group<F>& g, const std::vector<Mat<F>>& blocks) {
  require(!blocks.empty(), Err::Input, "no blocks supplied");
  std::map<std::string, int> block_index;
  for (size_t i = 0; i < blocks.size(); ++i) {
    auto key = row_space_key(blocks[i]);
    require(!block_index.count(key), Err::Input, "duplicate block in list");
    block_index.emplace(key, static_cast<int>(i));
  }
  BlockAction<F> out;
  std::set<std::string> distinct;
  long kernel = 0;
  for (const auto& e : g.elems) {
    require(e.is_proj(), Err::Shape, "block action needs projective maps (convert first)");
    const Mat<F>& m = e.proj_payload().m;
    std::vector<int> perm(blocks.size(), -1);
    for (size_t b = 0; b < blocks.size(); ++b) {
      Mat<F> image = blocks[b] * m.transpose();  // rows are points; act by m
      auto key = row_space_key(image);
      auto it = block_index.find(key);
      require(it != block_index.end(), Err::Invariance,
              "a group element does not permute the blocks");
      perm[b] = it->second;
    }
    bool is_id = true;
    for (size_t b = 0; b < blocks.size(); ++b)
      if (perm[b] != static_cast<int>(b)) is_id = false;
    if (is_id) ++kernel;
    std::string pk;
    for (int v : perm) pk += std::to_string(v) + ",";
    distinct.insert(pk);
    out.perms.push_back(std::move(perm));
  }
  out.image_order = static_cast<long>(distinct.size());
  out.kernel_order = kernel;
  return out;
}

// ---------------------------------------------------------------------------
// Plain permutation closure on k letters (k <= 12).

inline long perm_closure_order(const std::vector<std::vector<int>>& gens) {
  require(!gens.empty(), Err::Input, "no permutation generators");
  size_t k = gens[0].size();
  require(k <= 12, Err::Input, "permutation degree too large");
  std::vector<int> id(k);
  for (size_t i = 0; i < k; ++i) id[i] = static_cast<int>(i);
  std::set<std::vector<int>> seen{id};
  std::vector<std::vector<int>> queue{id};
  size_t head = 0;
  while (head < queue.size()) {
    auto cur = queue[head++];
    for (const auto& gp : gens) {
      require(gp.size() == k, Err::Input, "permutation generators of mixed degree");
      std::vector<int> nxt(k);
      for (size_t i = 0; i < k; ++i) nxt[i] = gp[cur[i]];
      if (seen.insert(nxt).second) queue.push_back(nxt);
    }
  }
  return static_cast<long>(seen.size());
}

}  // namespace curveaut

#endif
