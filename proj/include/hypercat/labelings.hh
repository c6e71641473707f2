#ifndef HYPERCAT_LABELINGS_HH
#define HYPERCAT_LABELINGS_HH

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include <hypercat/numeric.hh>
#include <hypercat/plane_tree.hh>

namespace hypercat {

  // Partition of the non-root vertices of a plane tree into blocks of size m.
  // Blocks are stored sorted, and sorted among themselves by smallest member,
  // so equal labelings compare equal regardless of how they were produced.
  struct MLabeling {
    unsigned m = 0;
    std::vector<std::vector<unsigned>> blocks;

    void normalize()
    {
      for (auto& b : blocks)
        std::sort(b.begin(), b.end());
      std::sort(blocks.begin(), blocks.end());
    }

    friend bool operator==(const MLabeling& a, const MLabeling& b)
    {
      return a.m == b.m && a.blocks == b.blocks;
    }
  };

  // A labeling is admissible when every block sits inside one level of the
  // tree and the parents of a block's members all fall in a single block
  // (or are all the root).
  inline bool is_admissible(const PlaneTree& t, const MLabeling& lab)
  {
    if (lab.m == 0 || t.k == 0)
      return false;
    if ((t.k - 1) % lab.m != 0 || lab.blocks.size() != (t.k - 1) / lab.m)
      return false;
    std::vector<unsigned> block_of(t.k, 0); // root keeps sentinel id 0
    for (std::size_t j = 0; j < lab.blocks.size(); ++j) {
      const auto& b = lab.blocks[j];
      if (b.size() != lab.m)
        return false;
      for (unsigned v : b) {
        if (v == 0 || v >= t.k || block_of[v] != 0)
          return false;
        block_of[v] = static_cast<unsigned>(j) + 1;
      }
    }
    for (const auto& b : lab.blocks) {
      for (unsigned v : b) {
        if (t.level[v] != t.level[b[0]])
          return false;
        if (block_of[t.parent[v]] != block_of[t.parent[b[0]]])
          return false;
      }
    }
    return true;
  }

  namespace detail {

    // Partition `pool` into blocks of size m, one block at a time; the block
    // always contains the smallest remaining element, which kills duplicate
    // orderings.  `ok` vets a candidate block before recursing.
    template <typename Ok, typename Done>
    void for_each_block_partition(std::vector<unsigned>& pool, unsigned m,
                                  std::vector<std::vector<unsigned>>& acc,
                                  const Ok& ok, const Done& done)
    {
      if (pool.empty()) {
        done(acc);
        return;
      }
      std::vector<unsigned> block{pool[0]};
      std::vector<unsigned> rest(pool.begin() + 1, pool.end());
      std::vector<std::size_t> pick;
      std::function<void(std::size_t)> choose = [&](std::size_t from) {
        if (block.size() == m) {
          if (!ok(block))
            return;
          std::vector<unsigned> next;
          std::vector<bool> used(rest.size(), false);
          for (std::size_t i : pick)
            used[i] = true;
          for (std::size_t i = 0; i < rest.size(); ++i)
            if (!used[i])
              next.push_back(rest[i]);
          acc.push_back(block);
          for_each_block_partition(next, m, acc, ok, done);
          acc.pop_back();
          return;
        }
        for (std::size_t i = from; i < rest.size(); ++i) {
          block.push_back(rest[i]);
          pick.push_back(i);
          choose(i + 1);
          pick.pop_back();
          block.pop_back();
        }
      };
      choose(0);
    }

  } // namespace detail

  // Visit every admissible labeling of t, building level by level so that the
  // parent-block constraint prunes the search as early as possible.
  template <typename Fn>
  void for_each_admissible_labeling(const PlaneTree& t, unsigned m, Fn&& fn)
  {
    if (m == 0)
      throw std::invalid_argument("m must be >= 1");
    if (t.k == 1) {
      MLabeling lab{m, {}};
      fn(lab);
      return;
    }
    if ((t.k - 1) % m != 0)
      return;

    unsigned depth = *std::max_element(t.level.begin(), t.level.end());
    std::vector<std::vector<unsigned>> by_level(depth + 1);
    for (unsigned v = 1; v < t.k; ++v)
      by_level[t.level[v]].push_back(v);
    for (unsigned l = 1; l <= depth; ++l)
      if (by_level[l].size() % m != 0)
        return;

    std::vector<unsigned> block_of(t.k, 0);
    std::vector<std::vector<unsigned>> acc;

    std::function<void(unsigned)> per_level = [&](unsigned l) {
      if (l > depth) {
        MLabeling lab{m, acc};
        lab.normalize();
        fn(lab);
        return;
      }
      std::size_t base = acc.size(); // blocks of levels below l
      auto ok = [&](const std::vector<unsigned>& block) {
        unsigned want = block_of[t.parent[block[0]]];
        for (std::size_t i = 1; i < block.size(); ++i)
          if (block_of[t.parent[block[i]]] != want)
            return false;
        return true;
      };
      auto done = [&](const std::vector<std::vector<unsigned>>& all_blocks) {
        for (std::size_t j = base; j < all_blocks.size(); ++j)
          for (unsigned v : all_blocks[j])
            block_of[v] = static_cast<unsigned>(j) + 1;
        per_level(l + 1);
        for (std::size_t j = base; j < all_blocks.size(); ++j)
          for (unsigned v : all_blocks[j])
            block_of[v] = 0;
      };
      detail::for_each_block_partition(by_level[l], m, acc, ok, done);
    };
    per_level(1);
  }

  inline Int count_admissible_labelings(const PlaneTree& t, unsigned m)
  {
    Int count = 0;
    for_each_admissible_labeling(t, m, [&](const MLabeling&) { ++count; });
    return count;
  }

  // Sum of admissible-labeling counts over all plane trees with n*m + 1
  // vertices.  Exhaustive, so only sensible at desk scale.
  inline Int hypercatalan_via_labelings(unsigned n, unsigned m, unsigned max_nm = 12)
  {
    if (m == 0)
      throw std::invalid_argument("m must be >= 1");
    if (n == 0)
      return 1;
    if (n * m > max_nm)
      throw resource_error("labeling enumeration bound exceeded");
    Int total = 0;
    for (const PlaneTree& t : enumerate_plane_trees(n * m + 1))
      total += count_admissible_labelings(t, m);
    return total;
  }

} // namespace hypercat

#endif // HYPERCAT_LABELINGS_HH
