#ifndef HYPERCAT_GLUING_HH
#define HYPERCAT_GLUING_HH

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <hypercat/catalan_series.hh>
#include <hypercat/labelings.hh>
#include <hypercat/numeric.hh>
#include <hypercat/tours.hh>

namespace hypercat {

  // Partition of the sides 0..r-1 of an r-gon into blocks of equal even size.
  // Orientations are fixed by convention, not stored: within a block (read in
  // increasing side order) odd-numbered members run clockwise and even ones
  // counterclockwise, and all block members are identified respecting that.
  struct Gluing {
    unsigned r = 0;
    unsigned block_size = 0;
    std::vector<std::vector<unsigned>> blocks;
  };

  namespace detail {

    inline void validate_gluing(const Gluing& g)
    {
      if (g.block_size < 2 || g.block_size % 2 != 0)
        throw std::invalid_argument("block size must be even and at least 2");
      if (g.r == 0 || g.r % g.block_size != 0 || g.blocks.size() != g.r / g.block_size)
        throw std::invalid_argument("blocks must cover the polygon in equal parts");
      std::vector<bool> seen(g.r, false);
      for (const auto& b : g.blocks) {
        if (b.size() != g.block_size)
          throw std::invalid_argument("every block must have the declared size");
        for (unsigned e : b) {
          if (e >= g.r || seen[e])
            throw std::invalid_argument("blocks must partition the polygon sides");
          seen[e] = true;
        }
      }
    }

  } // namespace detail

  // Number of distinct polygon corners after the identification.  Side e runs
  // from corner e to corner e+1 (mod r); gluing a block merges the
  // orientation-start corners of its sides into one class and the
  // orientation-end corners into another.
  inline unsigned vertex_classes(const Gluing& g)
  {
    detail::validate_gluing(g);
    std::vector<unsigned> up(g.r);
    std::iota(up.begin(), up.end(), 0);
    auto find = [&](unsigned x) {
      while (up[x] != x)
        x = up[x] = up[up[x]];
      return x;
    };
    auto unite = [&](unsigned a, unsigned b) { up[find(a)] = find(b); };

    for (auto block : g.blocks) {
      std::sort(block.begin(), block.end());
      unsigned s0 = block[0], e0 = (block[0] + 1) % g.r;
      for (std::size_t j = 1; j < block.size(); ++j) {
        bool clockwise = j % 2 == 0;
        unsigned s = clockwise ? block[j] : (block[j] + 1) % g.r;
        unsigned e = clockwise ? (block[j] + 1) % g.r : block[j];
        unite(s0, s);
        unite(e0, e);
      }
    }
    unsigned classes = 0;
    for (unsigned v = 0; v < g.r; ++v)
      classes += find(v) == v;
    return classes;
  }

  // Visit all ways to group the r sides into blocks of size 2m, in a fixed
  // order (each block is anchored at its smallest member).
  template <typename Fn>
  void for_each_gluing(unsigned r, unsigned m, Fn&& fn)
  {
    if (m == 0)
      throw std::invalid_argument("m must be >= 1");
    if (r < 2 * m || r % (2 * m) != 0)
      throw std::invalid_argument("side count must be a positive multiple of the block size");
    std::vector<unsigned> pool(r);
    std::iota(pool.begin(), pool.end(), 0);
    std::vector<std::vector<unsigned>> acc;
    Gluing g{r, 2 * m, {}};
    detail::for_each_block_partition(pool, 2 * m, acc,
                                     [](const std::vector<unsigned>&) { return true; },
                                     [&](const std::vector<std::vector<unsigned>>& blocks) {
                                       g.blocks = blocks;
                                       fn(std::as_const(g));
                                     });
  }

  inline std::vector<Gluing> enumerate_gluings(unsigned r, unsigned m,
                                               unsigned long limit = 200'000)
  {
    if (m == 0)
      throw std::invalid_argument("m must be >= 1");
    if (block_partition_count(2 * m, r) > limit)
      throw resource_error("gluing enumeration bound exceeded");
    std::vector<Gluing> out;
    for_each_gluing(r, m, [&](const Gluing& g) { out.push_back(g); });
    return out;
  }

  // Polynomial in the matrix dimension N with integer coefficients, kept in
  // descending exponent order.
  struct NPolynomial {
    std::map<unsigned, Int, std::greater<unsigned>> coeffs; // no zero entries

    unsigned degree() const { return coeffs.empty() ? 0 : coeffs.begin()->first; }

    Int eval(const Int& n) const
    {
      Int total = 0;
      for (const auto& [e, c] : coeffs)
        total += c * pow_ui(n, e);
      return total;
    }

    std::string str() const
    {
      if (coeffs.empty())
        return "0";
      std::ostringstream out;
      bool first = true;
      for (const auto& [e, c] : coeffs) {
        if (!first)
          out << " + ";
        first = false;
        if (e == 0) {
          out << c;
          continue;
        }
        if (c != 1)
          out << c << "*";
        out << "N";
        if (e > 1)
          out << "^" << e;
      }
      return out.str();
    }

    friend bool operator==(const NPolynomial&, const NPolynomial&) = default;
  };

  namespace detail {

    // Orientation assignments for one block, encoded as bitmasks over the
    // block's members in increasing side order (set bit = reversed).  The
    // first member is always positive, fixing the two-fold relabelling of
    // the glued edge's endpoints, and the number of reversed members must
    // have the parity of m: entry cumulants vanish for the other patterns.
    inline std::vector<unsigned> orientation_splits(unsigned block_size)
    {
      internal_check(block_size >= 2 && block_size < 31, "unsupported block size");
      std::vector<unsigned> masks;
      for (unsigned mask = 0; mask < 1u << block_size; ++mask)
        if (!(mask & 1u) && std::popcount(mask) % 2 == (block_size / 2) % 2)
          masks.push_back(mask);
      return masks;
    }

    // Canonical form of the side-to-block map under rotations and
    // reflections of the polygon; weighted orientation sums are invariant
    // under both, so they can be shared across a symmetry class.
    inline std::string rotation_class_key(const Gluing& g)
    {
      std::vector<unsigned> of(g.r);
      for (unsigned b = 0; b < g.blocks.size(); ++b)
        for (unsigned e : g.blocks[b])
          of[e] = b;
      std::string best;
      std::vector<int> relabel(g.blocks.size());
      for (int dir : {1, -1})
        for (unsigned s = 0; s < g.r; ++s) {
          std::string key(g.r, '\0');
          std::fill(relabel.begin(), relabel.end(), -1);
          int next = 0;
          for (unsigned t = 0; t < g.r; ++t) {
            unsigned side = dir > 0 ? (s + t) % g.r : (s + g.r - t) % g.r;
            int& slot = relabel[of[side]];
            if (slot < 0)
              slot = next++;
            key[t] = static_cast<char>(slot);
          }
          if (best.empty() || key < best)
            best = std::move(key);
        }
      return best;
    }

  } // namespace detail

  // The weighted sum over orientation assignments for one side partition:
  // each admissible split contributes N^(corner classes), and an extra
  // "collapsed" term (all corners of a block merged, weight 1 minus the
  // split count) compensates for the assignments counting a block glued
  // onto a single point once per split.  This is the cumulant expansion of
  // the trace integral; for pair blocks it reduces to N^(corner classes)
  // of the unique opposite-orientation gluing.
  inline NPolynomial trace_contribution(const Gluing& g)
  {
    detail::validate_gluing(g);
    const std::vector<unsigned> splits = detail::orientation_splits(g.block_size);
    const long long collapse_weight = 1ll - static_cast<long long>(splits.size());
    const unsigned nb = static_cast<unsigned>(g.blocks.size());
    const unsigned choices = static_cast<unsigned>(splits.size()) + (collapse_weight != 0);

    std::vector<std::vector<unsigned>> blocks = g.blocks;
    for (auto& b : blocks)
      std::sort(b.begin(), b.end());

    std::vector<unsigned> up(g.r);
    auto find = [&](unsigned x) {
      while (up[x] != x)
        x = up[x] = up[up[x]];
      return x;
    };

    std::map<unsigned, long long> acc;
    std::vector<unsigned> choice(nb, 0);
    while (true) {
      std::iota(up.begin(), up.end(), 0);
      long long w = 1;
      for (unsigned b = 0; b < nb; ++b) {
        if (choice[b] == splits.size()) { // collapse
          w *= collapse_weight;
          unsigned anchor = blocks[b][0];
          for (unsigned e : blocks[b]) {
            up[find(e)] = find(anchor);
            up[find((e + 1) % g.r)] = find(anchor);
          }
          continue;
        }
        unsigned mask = splits[choice[b]];
        // chain the orientation-start corners together, likewise the ends
        unsigned x0 = blocks[b][0], y0 = (blocks[b][0] + 1) % g.r;
        for (unsigned j = 1; j < g.block_size; ++j) {
          unsigned e = blocks[b][j];
          bool reversed = mask >> j & 1;
          up[find(reversed ? (e + 1) % g.r : e)] = find(x0);
          up[find(reversed ? e : (e + 1) % g.r)] = find(y0);
        }
      }
      unsigned v = 0;
      for (unsigned c = 0; c < g.r; ++c)
        v += find(c) == c;
      acc[v] += w;

      unsigned i = 0;
      while (i < nb && ++choice[i] == choices)
        choice[i++] = 0;
      if (i == nb)
        break;
    }

    NPolynomial p;
    for (const auto& [e, c] : acc)
      if (c != 0)
        p.coeffs[e] = Int(static_cast<long>(c));
    return p;
  }

  // The trace polynomial: weighted orientation sums accumulated over all
  // side partitions into 2m-blocks.
  inline NPolynomial trace_polynomial(unsigned m, unsigned r,
                                      unsigned long budget = 10'000'000)
  {
    if (m == 0)
      throw std::invalid_argument("m must be >= 1");
    if (r < 2 * m || r % (2 * m) != 0)
      throw std::invalid_argument("side count must be a positive multiple of the block size");
    Int gluings = block_partition_count(2 * m, r);
    if (gluings > Int(budget))
      throw resource_error("gluing enumeration bound exceeded");

    NPolynomial p;
    std::unordered_map<std::string, NPolynomial> memo;
    for_each_gluing(r, m, [&](const Gluing& g) {
      auto [it, fresh] = memo.try_emplace(detail::rotation_class_key(g));
      if (fresh)
        it->second = trace_contribution(g);
      for (const auto& [e, c] : it->second.coeffs)
        p.coeffs[e] += c;
    });
    std::erase_if(p.coeffs, [](const auto& entry) { return entry.second == 0; });

    internal_check(p.eval(1) == gluings, "every gluing contributes once in total");
    unsigned n = r / (2 * m);
    internal_check(p.degree() == n + 1 && p.coeffs.begin()->second == hypercatalan(n, m),
                   "leading term must match the tree-sum count");
    return p;
  }

} // namespace hypercat

#endif // HYPERCAT_GLUING_HH
