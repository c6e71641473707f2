#ifndef HYPERCAT_BFILE_HH
#define HYPERCAT_BFILE_HH

#include <istream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <hypercat/numeric.hh>

// OEIS b-file support: "<index> <value>" per line, '#' comments and blank
// lines skipped.  Parsing is strict about everything else and reports the
// offending line number.

namespace hypercat {

  inline std::map<long, Int> parse_bfile(std::istream& in)
  {
    std::map<long, Int> entries;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r')
        line.pop_back();
      const std::size_t first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#')
        continue;

      std::istringstream fields(line);
      long index = 0;
      std::string value, extra;
      if (!(fields >> index >> value))
        throw parse_error("b-file line is not \"<index> <value>\"", line_no);
      if (fields >> extra)
        throw parse_error("trailing tokens after the value", line_no);

      Int v;
      if (mpz_set_str(v.get_mpz_t(), value.c_str(), 10) != 0)
        throw parse_error("malformed integer \"" + value + "\"", line_no);
      if (!entries.emplace(index, std::move(v)).second)
        throw parse_error("duplicate index " + std::to_string(index), line_no);
    }
    return entries;
  }

  inline std::string format_bfile(const std::vector<Int>& values, long start = 0)
  {
    std::ostringstream out;
    for (std::size_t i = 0; i < values.size(); ++i)
      out << start + static_cast<long>(i) << ' ' << values[i] << '\n';
    return out.str();
  }

  struct BFileDiff {
    std::size_t compared = 0;
    std::optional<long> first_mismatch;
    Int expected; // file's value at the first mismatch
    Int actual;   // ours
  };

  // Compares values[i] (the term of index start + i) against the file on the
  // overlapping index range; indices only one side knows are ignored.
  inline BFileDiff compare_bfile(const std::map<long, Int>& file,
                                 const std::vector<Int>& values, long start = 0)
  {
    BFileDiff diff;
    for (std::size_t i = 0; i < values.size(); ++i) {
      const auto it = file.find(start + static_cast<long>(i));
      if (it == file.end())
        continue;
      ++diff.compared;
      if (!diff.first_mismatch && it->second != values[i]) {
        diff.first_mismatch = it->first;
        diff.expected = it->second;
        diff.actual = values[i];
      }
    }
    if (diff.compared == 0)
      throw std::invalid_argument("b-file and computed range share no indices");
    return diff;
  }

} // namespace hypercat

#endif // HYPERCAT_BFILE_HH
