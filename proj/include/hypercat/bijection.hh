#ifndef HYPERCAT_BIJECTION_HH
#define HYPERCAT_BIJECTION_HH

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include <hypercat/free_tree.hh>
#include <hypercat/labelings.hh>
#include <hypercat/numeric.hh>
#include <hypercat/plane_tree.hh>

namespace hypercat {

  // A closed walk on a free tree, recorded as the sequence of vertices
  // visited (so a walk over e edges, each crossed 2m times, has 2me + 1
  // entries).
  struct TourWord {
    std::vector<unsigned> vertices;

    friend bool operator==(const TourWord& a, const TourWord& b) = default;
  };

  // Checks that w is a closed walk on t crossing every edge exactly 2m times.
  inline void validate_tour(const FreeTree& t, const TourWord& w, unsigned m)
  {
    if (m == 0)
      throw std::invalid_argument("m must be >= 1");
    const auto& vs = w.vertices;
    if (vs.size() != 2ull * m * (t.n - 1) + 1)
      throw std::invalid_argument("tour word has the wrong length");
    if (vs.front() != vs.back())
      throw std::invalid_argument("tour word is not closed");
    std::vector<unsigned> crossings(t.n - 1, 0);
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      unsigned u = vs[i], v = vs[i + 1];
      if (u >= t.n || v >= t.n || u == v)
        throw std::invalid_argument("tour word leaves the tree");
      unsigned child;
      if (u != 0 && t.parent_code[u] == v)
        child = u;
      else if (v != 0 && t.parent_code[v] == u)
        child = v;
      else
        throw std::invalid_argument("tour word steps across a non-edge");
      ++crossings[child - 1];
    }
    for (unsigned c : crossings)
      if (c != 2 * m)
        throw std::invalid_argument("tour word must cross every edge exactly 2m times");
  }

  struct LabeledPlaneTree {
    PlaneTree tree;
    MLabeling labeling;
  };

  // Reads a tour word off into a plane tree: steps away from the start
  // become up-steps, steps back become down-steps, and each plane-tree
  // vertex remembers (as its block label) which tree vertex its up-step
  // arrived at.
  inline LabeledPlaneTree tour_to_labeled_tree(const FreeTree& t, const TourWord& w, unsigned m)
  {
    validate_tour(t, w, m);
    const auto& vs = w.vertices;

    std::vector<unsigned> dist(t.n, 0);
    {
      auto adj = adjacency(t);
      std::vector<bool> seen(t.n, false);
      std::vector<unsigned> queue{vs.front()};
      seen[vs.front()] = true;
      for (std::size_t i = 0; i < queue.size(); ++i)
        for (unsigned nb : adj[queue[i]])
          if (!seen[nb]) {
            seen[nb] = true;
            dist[nb] = dist[queue[i]] + 1;
            queue.push_back(nb);
          }
    }

    DyckPath d;
    d.steps.reserve(vs.size() - 1);
    std::vector<unsigned> label{vs.front()}; // label[0] unused beyond the root
    for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
      bool away = dist[vs[i + 1]] == dist[vs[i]] + 1;
      internal_check(away || dist[vs[i + 1]] + 1 == dist[vs[i]],
                     "adjacent vertices must differ by one in distance");
      d.steps.push_back(away ? 1 : -1);
      if (away)
        label.push_back(vs[i + 1]);
    }

    LabeledPlaneTree out;
    out.tree = plane_from_dyck(d);
    internal_check(label.size() == out.tree.k, "one label per created vertex");

    std::map<unsigned, std::vector<unsigned>> groups;
    for (unsigned v = 1; v < out.tree.k; ++v)
      groups[label[v]].push_back(v);
    out.labeling.m = m;
    for (auto& [lbl, members] : groups) {
      internal_check(members.size() == m, "each vertex is reached m times from above");
      out.labeling.blocks.push_back(std::move(members));
    }
    out.labeling.normalize();
    internal_check(is_admissible(out.tree, out.labeling), "tour reading must be admissible");
    return out;
  }

  struct TreeTour {
    FreeTree tree;
    unsigned start = 0; // canonical vertex the walk begins at
    TourWord walk;
  };

  // Collapses an admissibly labeled plane tree: blocks become vertices of a
  // free tree, and the full traversal of the plane tree (revisits included)
  // becomes a tour word crossing every edge 2m times.
  inline TreeTour labeled_tree_to_tour(const PlaneTree& t, const MLabeling& lab)
  {
    if (!is_admissible(t, lab))
      throw std::invalid_argument("labeling is not admissible for this tree");
    MLabeling norm = lab;
    norm.normalize();

    unsigned classes = static_cast<unsigned>(norm.blocks.size()) + 1;
    std::vector<unsigned> class_of(t.k, 0);
    for (unsigned j = 0; j < norm.blocks.size(); ++j)
      for (unsigned v : norm.blocks[j])
        class_of[v] = j + 1;

    std::set<std::pair<unsigned, unsigned>> edges;
    for (unsigned v = 1; v < t.k; ++v)
      edges.insert(std::minmax(class_of[t.parent[v]], class_of[v]));

    CanonicalTree ct = from_edges(classes, {edges.begin(), edges.end()});

    TreeTour out;
    out.tree = ct.tree;
    out.start = ct.to_canonical[0];
    out.walk.vertices.push_back(out.start);
    std::vector<std::pair<unsigned, std::size_t>> stack{{0, 0}};
    while (!stack.empty()) {
      auto& [v, i] = stack.back();
      if (i < t.children[v].size()) {
        unsigned c = t.children[v][i++];
        out.walk.vertices.push_back(ct.to_canonical[class_of[c]]);
        stack.emplace_back(c, 0);
      } else {
        stack.pop_back();
        if (!stack.empty())
          out.walk.vertices.push_back(ct.to_canonical[class_of[stack.back().first]]);
      }
    }
    validate_tour(out.tree, out.walk, lab.m);
    return out;
  }

} // namespace hypercat

#endif // HYPERCAT_BIJECTION_HH
