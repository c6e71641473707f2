#ifndef HYPERCAT_FREE_TREE_HH
#define HYPERCAT_FREE_TREE_HH

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <hypercat/numeric.hh>

namespace hypercat {

  // An unlabeled tree in canonical form.  Vertices are numbered in preorder of
  // the canonical rooting (root = 0, a centroid); parent_code[i] is the parent
  // of vertex i, with the root listed as its own parent.  Two trees are
  // isomorphic iff their parent codes are equal.
  struct FreeTree {
    unsigned n = 0;
    std::vector<unsigned> parent_code;
    std::vector<unsigned> degrees;
    std::optional<Int> aut_order; // filled by the catalog; computed on demand otherwise

    friend bool operator==(const FreeTree& a, const FreeTree& b)
    {
      return a.n == b.n && a.parent_code == b.parent_code;
    }
  };

  inline std::vector<std::vector<unsigned>> adjacency(const FreeTree& t)
  {
    std::vector<std::vector<unsigned>> adj(t.n);
    for (unsigned i = 1; i < t.n; ++i) {
      adj[i].push_back(t.parent_code[i]);
      adj[t.parent_code[i]].push_back(i);
    }
    return adj;
  }

  namespace detail {

    using Adjacency = std::vector<std::vector<unsigned>>;

    // Depth sequence of a preorder walk -> parent array.  depths[0] must be 0
    // and each later entry at most one deeper than its predecessor.
    inline std::vector<unsigned> parents_from_depths(const std::vector<unsigned>& depths)
    {
      std::vector<unsigned> parent(depths.size(), 0);
      std::vector<unsigned> last_at_depth(depths.size(), 0);
      for (unsigned i = 1; i < depths.size(); ++i) {
        unsigned d = depths[i];
        if (d == 0 || d > depths[i - 1] + 1)
          throw std::invalid_argument("malformed depth sequence");
        parent[i] = last_at_depth[d - 1];
        last_at_depth[d] = i;
      }
      last_at_depth[0] = 0;
      return parent;
    }

    struct RootedCanon {
      std::vector<unsigned> depths; // canonical preorder depth sequence, depths[0] == 0
      std::vector<unsigned> order;  // original vertex at each preorder position
    };

    // Canonical rooted form: at every vertex the child subtree sequences are
    // ordered non-increasingly, which makes the preorder depth sequence the
    // lexicographically largest one attainable.
    inline RootedCanon canonical_rooted(const Adjacency& adj, unsigned v, unsigned parent)
    {
      std::vector<RootedCanon> kids;
      for (unsigned u : adj[v])
        if (u != parent)
          kids.push_back(canonical_rooted(adj, u, v));
      std::sort(kids.begin(), kids.end(),
                [](const RootedCanon& a, const RootedCanon& b) { return a.depths > b.depths; });
      RootedCanon r;
      r.depths.push_back(0);
      r.order.push_back(v);
      for (const RootedCanon& k : kids) {
        for (unsigned d : k.depths)
          r.depths.push_back(d + 1);
        r.order.insert(r.order.end(), k.order.begin(), k.order.end());
      }
      return r;
    }

    // Vertices minimizing the largest component left by their removal; every
    // tree has one centroid or two adjacent ones.
    inline std::vector<unsigned> centroids(const Adjacency& adj)
    {
      unsigned n = static_cast<unsigned>(adj.size());
      if (n == 1)
        return {0};
      std::vector<unsigned> size(n, 1), parent(n, n), order;
      order.reserve(n);
      std::vector<unsigned> stack = {0};
      parent[0] = 0;
      while (!stack.empty()) {
        unsigned v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (unsigned u : adj[v])
          if (parent[u] == n) {
            parent[u] = v;
            stack.push_back(u);
          }
      }
      for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (*it != 0)
          size[parent[*it]] += size[*it];
      std::vector<unsigned> max_comp(n);
      for (unsigned v = 0; v < n; ++v) {
        unsigned m = n - size[v];
        for (unsigned u : adj[v])
          if (u != parent[v] && parent[u] == v)
            m = std::max(m, size[u]);
        max_comp[v] = m;
      }
      unsigned best = *std::min_element(max_comp.begin(), max_comp.end());
      std::vector<unsigned> cents;
      for (unsigned v = 0; v < n; ++v)
        if (max_comp[v] == best)
          cents.push_back(v);
      internal_check(cents.size() == 1 || cents.size() == 2, "centroid count");
      return cents;
    }

  } // namespace detail

  struct CanonicalTree {
    FreeTree tree;
    std::vector<unsigned> to_canonical; // original vertex id -> canonical id
  };

  // Canonical form of an arbitrary tree given by its edge list.
  inline CanonicalTree from_edges(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& edges)
  {
    if (n == 0)
      throw std::invalid_argument("empty tree");
    if (edges.size() + 1 != n)
      throw std::invalid_argument("edge count must be n - 1");
    detail::Adjacency adj(n);
    for (auto [a, b] : edges) {
      if (a >= n || b >= n || a == b)
        throw std::invalid_argument("bad edge");
      adj[a].push_back(b);
      adj[b].push_back(a);
    }
    std::vector<unsigned> cents = detail::centroids(adj);
    detail::RootedCanon best = detail::canonical_rooted(adj, cents[0], cents[0]);
    if (cents.size() == 2) {
      detail::RootedCanon alt = detail::canonical_rooted(adj, cents[1], cents[1]);
      if (alt.depths > best.depths)
        best = std::move(alt);
    }
    internal_check(best.order.size() == n, "canonical preorder covers the tree");

    CanonicalTree out;
    out.tree.n = n;
    out.tree.parent_code = detail::parents_from_depths(best.depths);
    out.tree.degrees.resize(n);
    out.to_canonical.resize(n);
    for (unsigned pos = 0; pos < n; ++pos) {
      out.tree.degrees[pos] = static_cast<unsigned>(adj[best.order[pos]].size());
      out.to_canonical[best.order[pos]] = pos;
    }
    return out;
  }

  namespace detail {

    // Successor in the constant-amortized-time level-sequence generation of
    // canonical rooted trees, in decreasing lexicographic order: find the last
    // vertex deeper than 1, reattach it one level up, and replicate the block
    // ending before it.  Starts from the path, ends at the star.
    inline bool next_rooted_depths(std::vector<unsigned>& d)
    {
      unsigned n = static_cast<unsigned>(d.size());
      unsigned p = n;
      for (unsigned i = n; i-- > 0;)
        if (d[i] >= 2) {
          p = i;
          break;
        }
      if (p == n)
        return false;
      unsigned q = p;
      for (unsigned i = p; i-- > 0;)
        if (d[i] == d[p] - 1) {
          q = i;
          break;
        }
      for (unsigned i = p; i < n; ++i)
        d[i] = d[i - (p - q)];
      return true;
    }

    inline std::vector<std::pair<unsigned, unsigned>> edges_from_parents(const std::vector<unsigned>& parent)
    {
      std::vector<std::pair<unsigned, unsigned>> e;
      for (unsigned i = 1; i < parent.size(); ++i)
        e.emplace_back(parent[i], i);
      return e;
    }

  } // namespace detail

  // All isomorphism classes of trees on n vertices, in the generation order of
  // the level-sequence successor (decreasing lexicographic canonical codes).
  // Each class appears exactly once: a generated rooted tree is kept iff its
  // rooting coincides with the centroid-canonical form of its own tree.
  inline std::vector<FreeTree> enumerate_free_trees(unsigned n, unsigned max_n = 24)
  {
    if (n == 0)
      throw std::invalid_argument("n must be >= 1");
    if (n > max_n)
      throw resource_error("free-tree enumeration bound exceeded");
    std::vector<FreeTree> out;
    if (n == 1) {
      out.push_back(FreeTree{1, {0}, {0}, std::nullopt});
      return out;
    }
    std::vector<unsigned> depths(n);
    for (unsigned i = 0; i < n; ++i)
      depths[i] = i;
    do {
      std::vector<unsigned> parent = detail::parents_from_depths(depths);
      CanonicalTree c = from_edges(n, detail::edges_from_parents(parent));
      if (c.tree.parent_code == parent)
        out.push_back(std::move(c.tree));
    } while (detail::next_rooted_depths(depths));
    return out;
  }

  namespace detail {

    inline Int rooted_aut(const Adjacency& adj, unsigned v, unsigned parent)
    {
      struct Kid {
        std::vector<unsigned> code;
        Int aut;
      };
      std::vector<Kid> kids;
      for (unsigned u : adj[v])
        if (u != parent) {
          Kid k;
          k.aut = rooted_aut(adj, u, v);
          k.code = canonical_rooted(adj, u, v).depths;
          kids.push_back(std::move(k));
        }
      std::sort(kids.begin(), kids.end(), [](const Kid& a, const Kid& b) { return a.code > b.code; });
      Int a = 1;
      for (std::size_t i = 0; i < kids.size();) {
        std::size_t j = i;
        while (j < kids.size() && kids[j].code == kids[i].code)
          ++j;
        a *= factorial(static_cast<unsigned long>(j - i));
        for (std::size_t k = i; k < j; ++k)
          a *= kids[k].aut;
        i = j;
      }
      return a;
    }

  } // namespace detail

  // |Aut(t)| — product over vertices of k! per family of k isomorphic child
  // subtrees, doubled when the tree is bicentral with isomorphic halves.
  inline Int automorphism_order(const FreeTree& t)
  {
    if (t.aut_order)
      return *t.aut_order;
    if (t.n == 1)
      return 1;
    detail::Adjacency adj = adjacency(t);
    Int a = detail::rooted_aut(adj, 0, 0);
    std::vector<unsigned> cents = detail::centroids(adj);
    if (cents.size() == 2) {
      std::vector<unsigned> h1 = detail::canonical_rooted(adj, cents[0], cents[1]).depths;
      std::vector<unsigned> h2 = detail::canonical_rooted(adj, cents[1], cents[0]).depths;
      if (h1 == h2)
        a *= 2;
    }
    return a;
  }

} // namespace hypercat

#endif // HYPERCAT_FREE_TREE_HH
