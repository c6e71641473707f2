#ifndef HYPERCAT_TREE_CATALOG_HH
#define HYPERCAT_TREE_CATALOG_HH

#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <hypercat/free_tree.hh>
#include <hypercat/numeric.hh>

namespace hypercat {

  // Catalog cache format, one file per vertex count n:
  //
  //   #hypercat-trees v1 n=<n> canon=centroid
  //   <n> <comma-separated parent_code> <aut_order>
  //
  // LF line endings, records in enumeration order.

  inline std::string catalog_header(unsigned n)
  {
    return "#hypercat-trees v1 n=" + std::to_string(n) + " canon=centroid";
  }

  inline void write_tree_catalog(std::ostream& os, unsigned n, const std::vector<FreeTree>& trees)
  {
    os << catalog_header(n) << '\n';
    for (const FreeTree& t : trees) {
      os << t.n << ' ';
      for (unsigned i = 0; i < t.n; ++i)
        os << (i ? "," : "") << t.parent_code[i];
      os << ' ' << automorphism_order(t).get_str() << '\n';
    }
  }

  inline std::vector<FreeTree> parse_tree_catalog(std::istream& is, unsigned expected_n)
  {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(is, line))
      throw parse_error("missing catalog header", line_no);
    if (line != catalog_header(expected_n))
      throw parse_error("bad catalog header: '" + line + "'", line_no);

    std::vector<FreeTree> trees;
    while (std::getline(is, line)) {
      ++line_no;
      if (line.empty())
        throw parse_error("blank record", line_no);
      std::istringstream ss(line);
      unsigned n = 0;
      std::string code, aut;
      if (!(ss >> n >> code >> aut) || !(ss >> std::ws).eof())
        throw parse_error("malformed record", line_no);
      if (n != expected_n)
        throw parse_error("record vertex count mismatch", line_no);

      FreeTree t;
      t.n = n;
      std::istringstream cs(code);
      std::string field;
      while (std::getline(cs, field, ',')) {
        std::size_t used = 0;
        unsigned long p = 0;
        try {
          p = std::stoul(field, &used);
        } catch (const std::exception&) {
          throw parse_error("bad parent entry '" + field + "'", line_no);
        }
        if (used != field.size())
          throw parse_error("bad parent entry '" + field + "'", line_no);
        t.parent_code.push_back(static_cast<unsigned>(p));
      }
      if (t.parent_code.size() != n)
        throw parse_error("parent code length mismatch", line_no);
      if (t.parent_code[0] != 0)
        throw parse_error("root must be its own parent", line_no);
      for (unsigned i = 1; i < n; ++i)
        if (t.parent_code[i] >= i)
          throw parse_error("parent code is not preorder", line_no);

      if (aut.empty() || aut.find_first_not_of("0123456789") != std::string::npos)
        throw parse_error("bad automorphism order '" + aut + "'", line_no);
      Int a(aut);
      if (a < 1)
        throw parse_error("automorphism order must be positive", line_no);
      t.aut_order = a;

      t.degrees.assign(n, 0);
      for (unsigned i = 1; i < n; ++i) {
        ++t.degrees[i];
        ++t.degrees[t.parent_code[i]];
      }
      trees.push_back(std::move(t));
    }
    return trees;
  }

  // All trees on n vertices with automorphism orders.  With a cache path the
  // file is parsed if present (strictly — a corrupt cache is an error, never a
  // silent recompute) and written after a fresh enumeration otherwise.
  inline std::vector<FreeTree> tree_catalog(unsigned n,
                                            const std::optional<std::string>& cache_path = {})
  {
    if (cache_path) {
      std::ifstream in(*cache_path);
      if (in)
        return parse_tree_catalog(in, n);
    }
    std::vector<FreeTree> trees = enumerate_free_trees(n);
    for (FreeTree& t : trees)
      t.aut_order = automorphism_order(t);
    if (cache_path) {
      std::ofstream out(*cache_path, std::ios::binary);
      if (!out)
        throw std::runtime_error("cannot write catalog cache: " + *cache_path);
      write_tree_catalog(out, n, trees);
    }
    return trees;
  }

} // namespace hypercat

#endif // HYPERCAT_TREE_CATALOG_HH
