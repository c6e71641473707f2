#ifndef HYPERCAT_VERIFY_HH
#define HYPERCAT_VERIFY_HH

#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <hypercat/bijection.hh>
#include <hypercat/catalan_series.hh>
#include <hypercat/gluing.hh>
#include <hypercat/labelings.hh>
#include <hypercat/tours.hh>
#include <hypercat/tree_catalog.hh>

// Cross-verification battery: every number the library produces by one route
// is recomputed by an independent one.  Each check reports pass/fail with a
// short note; a run passes iff every check does.

namespace hypercat {

  struct VerifyOptions {
    unsigned m = 2;     // sequence shown in the per-index route table
    unsigned n_max = 5; // top index of that table
    bool quick = false; // trims the exhaustive-search bounds
    // Test hook: reports every size-2m block-partition count of a 2m-set one
    // too high.  The quadratic series relation must catch this.
    bool fault_wm_off_by_one = false;
    std::optional<std::string> catalog_cache;
  };

  struct CheckResult {
    std::string name;
    bool pass = false;
    std::string note;
  };

  struct RouteRow {
    unsigned n = 0;
    Int via_trees;
    Int via_series;
    std::optional<Int> via_labelings;
    bool agree = false;
  };

  struct VerifyReport {
    std::vector<RouteRow> routes;
    std::vector<CheckResult> checks;

    bool all_pass() const
    {
      for (const RouteRow& r : routes)
        if (!r.agree)
          return false;
      for (const CheckResult& c : checks)
        if (!c.pass)
          return false;
      return true;
    }
  };

  namespace detail {

    template <typename Body>
    CheckResult run_check(std::string name, Body&& body)
    {
      CheckResult r;
      r.name = std::move(name);
      std::ostringstream note;
      r.pass = body(note);
      r.note = note.str();
      return r;
    }

  } // namespace detail

  inline VerifyReport run_verification(const VerifyOptions& opt = {})
  {
    if (opt.m == 0)
      throw std::invalid_argument("verification: m must be >= 1");
    VerifyReport rep;

    // Per-index table for the requested m: tree sum, series coefficient, and
    // (at small n·m) the labeled-plane-tree count.
    {
      const std::vector<Int> gf = hypercatalan_sequence_gf(opt.m, opt.n_max);
      for (unsigned n = 0; n <= opt.n_max; ++n) {
        RouteRow row;
        row.n = n;
        row.via_trees = hypercatalan(n, opt.m, 1, opt.catalog_cache);
        row.via_series = gf[n];
        row.agree = row.via_trees == row.via_series;
        if (n * opt.m <= 12) {
          row.via_labelings = hypercatalan_via_labelings(n, opt.m);
          row.agree = row.agree && *row.via_labelings == row.via_trees;
        }
        rep.routes.push_back(std::move(row));
      }
    }

    rep.checks.push_back(detail::run_check(
        "tree route matches series route", [&](std::ostringstream& note) {
          for (unsigned m = 1; m <= 4; ++m) {
            const std::vector<Int> gf = hypercatalan_sequence_gf(m, 10);
            for (unsigned n = 0; n <= 10; ++n) {
              const Int t = hypercatalan(n, m, 1, opt.catalog_cache);
              if (t != gf[n]) {
                note << "mismatch at m=" << m << " n=" << n << ": trees " << t
                     << " vs series " << gf[n];
                return false;
              }
            }
          }
          note << "m <= 4, n <= 10";
          return true;
        }));

    rep.checks.push_back(detail::run_check(
        "tree route matches labeled plane trees", [&](std::ostringstream& note) {
          for (unsigned m = 1; m <= 8; ++m)
            for (unsigned n = 1; n * m <= 8; ++n) {
              const Int lab = hypercatalan_via_labelings(n, m);
              const Int t = hypercatalan(n, m, 1, opt.catalog_cache);
              if (lab != t) {
                note << "mismatch at m=" << m << " n=" << n << ": labelings "
                     << lab << " vs trees " << t;
                return false;
              }
            }
          note << "n*m <= 8";
          return true;
        }));

    rep.checks.push_back(detail::run_check(
        "closed tour counts match exhaustive search", [&](std::ostringstream& note) {
          const unsigned max_vertices = opt.quick ? 6 : 7;
          for (unsigned v = 2; v <= max_vertices; ++v)
            for (const FreeTree& t : tree_catalog(v, opt.catalog_cache))
              for (unsigned m = 1; m <= 2; ++m)
                for (unsigned s = 0; s < t.n; ++s) {
                  const Int closed = tour_count_at(t, s, m);
                  const Int brute = brute_force_tours(t, s, m, 2'000'000'000);
                  if (closed != brute) {
                    note << "tree on " << v << " vertices, m=" << m << ", start "
                         << s << ": closed form " << closed << " vs search " << brute;
                    return false;
                  }
                }
          note << "trees on <= " << max_vertices << " vertices, m <= 2";
          return true;
        }));

    rep.checks.push_back(detail::run_check(
        "gluing polynomials interpolate the catalog", [&](std::ostringstream& note) {
          for (unsigned m = 1; 2 * m <= 12; ++m)
            for (unsigned r = 2 * m; r <= 12; r += 2 * m) {
              const unsigned n = r / (2 * m);
              const NPolynomial p = trace_polynomial(m, r);
              const Int lead = p.coeffs.empty() ? Int(0) : p.coeffs.begin()->second;
              if (p.degree() != n + 1 || lead != hypercatalan(n, m) ||
                  p.eval(1) != block_partition_count(2 * m, r)) {
                note << "m=" << m << " r=" << r << ": " << p.str();
                return false;
              }
            }
          note << "degree, leading coefficient, and side count for r <= 12";
          return true;
        }));

    rep.checks.push_back(detail::run_check(
        "series satisfy the quadratic relation", [&](std::ostringstream& note) {
          const unsigned order = opt.quick ? 24 : 60;
          auto W = [&](unsigned m, unsigned k) {
            Int w = block_partition_count(m, k);
            if (opt.fault_wm_off_by_one && k == 2 * m)
              w += 1;
            return w;
          };
          for (unsigned m = 1; m <= 8; ++m) {
            const FormalSeries res = detail::gf_relation_residual_with(W, m, order);
            if (!res.is_zero()) {
              note << "f^2 - F + x has a nonzero coefficient for m=" << m
                   << " at order " << order;
              return false;
            }
          }
          note << "f^2 - F + x = 0 through order " << order << ", m <= 8";
          return true;
        }));

    rep.checks.push_back(detail::run_check(
        "tour words reconstruct their labeled trees", [&](std::ostringstream& note) {
          const unsigned cap1 = opt.quick ? 4 : 5; // plane-tree size at m = 1
          const unsigned cap2 = opt.quick ? 3 : 4; // and at m = 2
          for (unsigned m = 1; m <= 2; ++m)
            for (unsigned k = 1; k <= (m == 1 ? cap1 : cap2) * m + 1; ++k)
              for (const PlaneTree& t : enumerate_plane_trees(k)) {
                bool ok = true;
                for_each_admissible_labeling(t, m, [&](const MLabeling& lab) {
                  const TreeTour tour = labeled_tree_to_tour(t, lab);
                  const LabeledPlaneTree back =
                      tour_to_labeled_tree(tour.tree, tour.walk, m);
                  MLabeling norm = lab;
                  norm.normalize();
                  if (!(back.tree == t) || !(back.labeling == norm))
                    ok = false;
                });
                if (!ok) {
                  note << "roundtrip failed on a plane tree with " << k
                       << " vertices at m=" << m;
                  return false;
                }
              }
          note << "all admissible labelings, m <= 2";
          return true;
        }));

    return rep;
  }

} // namespace hypercat

#endif // HYPERCAT_VERIFY_HH
