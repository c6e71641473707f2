#ifndef HYPERCAT_PLANE_TREE_HH
#define HYPERCAT_PLANE_TREE_HH

#include <cstdint>
#include <stdexcept>
#include <vector>

#include <hypercat/numeric.hh>

namespace hypercat {

  // Rooted tree with ordered children.  Vertices are numbered in preorder
  // (root = 0), so the numbering itself encodes the plane structure.
  struct PlaneTree {
    unsigned k = 0;
    std::vector<std::vector<unsigned>> children;
    std::vector<unsigned> parent; // parent[0] == 0
    std::vector<unsigned> level;  // root at level 0

    friend bool operator==(const PlaneTree& a, const PlaneTree& b)
    {
      return a.k == b.k && a.children == b.children;
    }
  };

  struct DyckPath {
    std::vector<std::int8_t> steps; // +1 / -1, nonnegative prefixes, sum 0
  };

  struct BallotSequence {
    std::vector<std::int8_t> entries;
  };

  namespace detail {

    inline void validate_pm_sequence(const std::vector<std::int8_t>& s, const char* what)
    {
      long height = 0;
      for (std::int8_t e : s) {
        if (e != 1 && e != -1)
          throw std::invalid_argument(std::string(what) + ": entries must be +1/-1");
        height += e;
        if (height < 0)
          throw std::invalid_argument(std::string(what) + ": prefix sum went negative");
      }
      if (height != 0)
        throw std::invalid_argument(std::string(what) + ": entries do not balance");
    }

  } // namespace detail

  inline BallotSequence ballot_from_dyck(const DyckPath& d)
  {
    detail::validate_pm_sequence(d.steps, "dyck path");
    return BallotSequence{d.steps};
  }

  inline DyckPath dyck_from_ballot(const BallotSequence& b)
  {
    detail::validate_pm_sequence(b.entries, "ballot sequence");
    return DyckPath{b.entries};
  }

  inline PlaneTree plane_from_dyck(const DyckPath& d)
  {
    detail::validate_pm_sequence(d.steps, "dyck path");
    PlaneTree t;
    t.k = static_cast<unsigned>(d.steps.size() / 2) + 1;
    t.children.resize(t.k);
    t.parent.assign(t.k, 0);
    t.level.assign(t.k, 0);
    unsigned cur = 0, next_id = 1;
    for (std::int8_t s : d.steps) {
      if (s == 1) {
        unsigned v = next_id++;
        t.children[cur].push_back(v);
        t.parent[v] = cur;
        t.level[v] = t.level[cur] + 1;
        cur = v;
      } else {
        cur = t.parent[cur];
      }
    }
    internal_check(next_id == t.k, "dyck parse must visit every vertex");
    return t;
  }

  inline DyckPath dyck_from_plane(const PlaneTree& t)
  {
    DyckPath d;
    d.steps.reserve(2 * (t.k - 1));
    std::vector<std::pair<unsigned, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < t.children[v].size()) {
        d.steps.push_back(1);
        stack.emplace_back(t.children[v][i++], 0);
      } else {
        stack.pop_back();
        if (!stack.empty())
          d.steps.push_back(-1);
      }
    }
    return d;
  }

  inline PlaneTree plane_from_ballot(const BallotSequence& b)
  {
    return plane_from_dyck(dyck_from_ballot(b));
  }

  inline BallotSequence ballot_from_plane(const PlaneTree& t)
  {
    return ballot_from_dyck(dyck_from_plane(t));
  }

  namespace detail {

    template <typename Fn>
    void gen_dyck(std::vector<std::int8_t>& buf, unsigned ups_left, unsigned height, Fn&& fn)
    {
      if (ups_left == 0 && height == 0) {
        fn(buf);
        return;
      }
      if (ups_left > 0) { // up before down: lexicographic order
        buf.push_back(1);
        gen_dyck(buf, ups_left - 1, height + 1, fn);
        buf.pop_back();
      }
      if (height > 0) {
        buf.push_back(-1);
        gen_dyck(buf, ups_left, height - 1, fn);
        buf.pop_back();
      }
    }

  } // namespace detail

  // All plane trees on k vertices, in lexicographic order of their Dyck words
  // (up-step before down-step).
  inline std::vector<PlaneTree> enumerate_plane_trees(unsigned k, unsigned max_k = 14)
  {
    if (k == 0)
      throw std::invalid_argument("k must be >= 1");
    if (k > max_k)
      throw resource_error("plane-tree enumeration bound exceeded");
    std::vector<PlaneTree> out;
    std::vector<std::int8_t> buf;
    detail::gen_dyck(buf, k - 1, 0,
                     [&](const std::vector<std::int8_t>& s) { out.push_back(plane_from_dyck(DyckPath{s})); });
    return out;
  }

} // namespace hypercat

#endif // HYPERCAT_PLANE_TREE_HH
