#ifndef HYPERCAT_TOURS_HH
#define HYPERCAT_TOURS_HH

#include <cstdint>
#include <future>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <hypercat/free_tree.hh>
#include <hypercat/numeric.hh>
#include <hypercat/tree_catalog.hh>

namespace hypercat {

  namespace detail {

    inline void require_tour_args(const FreeTree& t, unsigned m)
    {
      if (m == 0)
        throw std::invalid_argument("m must be >= 1");
      if (t.n < 2)
        throw std::invalid_argument("tree needs at least one edge");
    }

    // (m! )^{2n} with n = edge count; shared denominator of the tour counts.
    inline Int tour_denominator(unsigned edges, unsigned m)
    {
      return pow_ui(factorial(m), 2ul * edges);
    }

    inline Int degree_factorial_product(const FreeTree& t, unsigned m)
    {
      Int p = 1;
      for (unsigned v = 0; v < t.n; ++v)
        p *= factorial(static_cast<unsigned long>(m) * t.degrees[v] - 1);
      return p;
    }

  } // namespace detail

  // Number of closed walks from v traversing every edge exactly 2m times:
  //   m·d(v) · m^n · prod_w (m·d(w) - 1)! / (m!)^{2n},   n = edge count.
  inline Int tour_count_at(const FreeTree& t, unsigned v, unsigned m)
  {
    detail::require_tour_args(t, m);
    if (v >= t.n)
      throw std::invalid_argument("vertex out of range");
    unsigned n = t.n - 1;
    Int num = Int(m) * t.degrees[v] * pow_ui(static_cast<unsigned long>(m), n)
              * detail::degree_factorial_product(t, m);
    Rat q(num, detail::tour_denominator(n, m));
    q.canonicalize();
    return to_integer(q, "per-vertex tour count must be integral");
  }

  // Same total over all start vertices: 2n · m^{n+1} · prod (m·d(v) - 1)! / (m!)^{2n}.
  inline Int tour_total(const FreeTree& t, unsigned m)
  {
    detail::require_tour_args(t, m);
    unsigned n = t.n - 1;
    Int num = Int(2) * n * pow_ui(static_cast<unsigned long>(m), n + 1)
              * detail::degree_factorial_product(t, m);
    Rat q(num, detail::tour_denominator(n, m));
    q.canonicalize();
    return to_integer(q, "tour total must be integral");
  }

  namespace detail {

    struct TourSearch {
      const std::vector<std::vector<std::pair<unsigned, unsigned>>>& inc; // (neighbor, edge id)
      std::vector<unsigned> remaining;
      unsigned start;
      std::uint64_t steps = 0;
      std::uint64_t budget;
      std::uint64_t found = 0;

      void run(unsigned u, unsigned left)
      {
        if (left == 0) {
          internal_check(u == start, "exhausted walk must close");
          ++found;
          return;
        }
        for (auto [w, e] : inc[u]) {
          if (remaining[e] == 0)
            continue;
          if (++steps > budget)
            throw resource_error("tour search step budget exceeded");
          --remaining[e];
          run(w, left - 1);
          ++remaining[e];
        }
      }
    };

  } // namespace detail

  // Exhaustive backtracking count of the same walks; the independent oracle
  // for the closed forms.  Cost is proportional to the number of walks.
  inline Int brute_force_tours(const FreeTree& t, unsigned v, unsigned m,
                               std::uint64_t step_budget = 100'000'000)
  {
    detail::require_tour_args(t, m);
    if (v >= t.n)
      throw std::invalid_argument("vertex out of range");
    std::vector<std::vector<std::pair<unsigned, unsigned>>> inc(t.n);
    for (unsigned i = 1; i < t.n; ++i) {
      inc[i].emplace_back(t.parent_code[i], i - 1);
      inc[t.parent_code[i]].emplace_back(i, i - 1);
    }
    detail::TourSearch s{inc, std::vector<unsigned>(t.n - 1, 2 * m), v, 0, step_budget, 0};
    s.run(v, 2u * m * (t.n - 1));
    return Int(static_cast<unsigned long>(s.found));
  }

  namespace detail {

    inline Rat catalog_tour_sum(const std::vector<FreeTree>& trees, std::size_t lo,
                                std::size_t hi, unsigned m)
    {
      Rat sum = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        Rat c(tour_total(trees[i], m), automorphism_order(trees[i]));
        c.canonicalize();
        sum += c;
      }
      return sum;
    }

  } // namespace detail

  // C_n^(m): tour totals over all trees on n+1 vertices weighted by 1/|Aut|.
  // The per-tree terms are independent; jobs > 1 evaluates them in parallel.
  inline Int hypercatalan(unsigned n, unsigned m, unsigned jobs = 1,
                          const std::optional<std::string>& catalog_cache = {})
  {
    if (m == 0)
      throw std::invalid_argument("m must be >= 1");
    if (n == 0)
      return 1; // single-vertex tree carries the empty tour
    std::vector<FreeTree> trees = tree_catalog(n + 1, catalog_cache);
    Rat sum = 0;
    if (jobs <= 1 || trees.size() < 2 * jobs) {
      sum = detail::catalog_tour_sum(trees, 0, trees.size(), m);
    } else {
      std::vector<std::future<Rat>> parts;
      std::size_t chunk = (trees.size() + jobs - 1) / jobs;
      for (std::size_t lo = 0; lo < trees.size(); lo += chunk) {
        std::size_t hi = std::min(trees.size(), lo + chunk);
        parts.push_back(std::async(std::launch::async, detail::catalog_tour_sum,
                                   std::cref(trees), lo, hi, m));
      }
      for (auto& p : parts)
        sum += p.get();
    }
    return to_integer(sum, "hypergraph Catalan number must be integral");
  }

} // namespace hypercat

#endif // HYPERCAT_TOURS_HH
