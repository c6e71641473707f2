#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <hypercat/acceleration.hh>
#include <hypercat/bfile.hh>
#include <hypercat/catalan_series.hh>
#include <hypercat/gluing.hh>
#include <hypercat/tours.hh>
#include <hypercat/tree_catalog.hh>
#include <hypercat/verify.hh>

// Exit codes: 0 success, 1 a verification/comparison/assertion failed,
// 2 I/O, parse, resource, or usage trouble.

namespace {

  using nlohmann::ordered_json;

  struct SeqConfig {
    unsigned m = 2;
    unsigned n_max = 5;
    std::string via = "tree";
    std::string format = "plain";
    unsigned jobs = 1;
    std::optional<std::string> cache;
    std::optional<std::string> compare;
  };

  int run_seq(const SeqConfig& cfg)
  {
    std::vector<hypercat::Int> values;
    if (cfg.via == "gf") {
      values = hypercat::hypercatalan_sequence_gf(cfg.m, cfg.n_max);
    } else {
      values.reserve(cfg.n_max + 1);
      for (unsigned n = 0; n <= cfg.n_max; ++n)
        values.push_back(hypercat::hypercatalan(n, cfg.m, cfg.jobs, cfg.cache));
    }

    if (cfg.compare) {
      std::ifstream in(*cfg.compare);
      if (!in) {
        std::cerr << "cannot read b-file: " << *cfg.compare << '\n';
        return 2;
      }
      const auto file = hypercat::parse_bfile(in);
      const hypercat::BFileDiff diff = hypercat::compare_bfile(file, values, 0);
      if (diff.first_mismatch) {
        std::cout << "mismatch at index " << *diff.first_mismatch << ": b-file has "
                  << diff.expected << ", computed " << diff.actual << '\n';
        return 1;
      }
      std::cout << "compared " << diff.compared << " indices, all equal\n";
      return 0;
    }

    if (cfg.format == "plain") {
      for (std::size_t i = 0; i < values.size(); ++i)
        std::cout << (i ? " " : "") << values[i];
      std::cout << '\n';
    } else if (cfg.format == "csv") {
      std::cout << "n,value\n";
      for (std::size_t i = 0; i < values.size(); ++i)
        std::cout << i << ',' << values[i] << '\n';
    } else if (cfg.format == "bfile") {
      std::cout << hypercat::format_bfile(values, 0);
    } else {
      ordered_json doc;
      doc["m"] = cfg.m;
      doc["values"] = ordered_json::array();
      for (const auto& v : values)
        doc["values"].push_back(v.get_str());
      doc["route"] = cfg.via;
      doc["version"] = hypercat::version_string;
      std::cout << doc.dump(2) << '\n';
    }
    return 0;
  }

  struct GfConfig {
    unsigned m = 2;
    unsigned order = 8;
    std::string which = "F";
    std::string format = "plain";
  };

  int run_gf(const GfConfig& cfg)
  {
    hypercat::FormalSeries s(0);
    if (cfg.which == "f")
      s = hypercat::solve_f(cfg.m, cfg.order);
    else if (cfg.which == "F")
      s = hypercat::catalan_gf(cfg.m, cfg.order);
    else if (cfg.which == "ell")
      s = hypercat::ell_series(cfg.m, cfg.order);
    else
      s = hypercat::h_series(cfg.m, cfg.order);

    if (cfg.format == "plain") {
      for (unsigned k = 0; k <= s.order(); ++k)
        std::cout << (k ? " " : "") << s[k];
      std::cout << '\n';
    } else if (cfg.format == "csv") {
      std::cout << "k,coefficient\n";
      for (unsigned k = 0; k <= s.order(); ++k)
        std::cout << k << ',' << s[k] << '\n';
    } else {
      ordered_json doc;
      doc["m"] = cfg.m;
      doc["values"] = ordered_json::array();
      for (unsigned k = 0; k <= s.order(); ++k)
        doc["values"].push_back(hypercat::Rat(s[k]).get_str());
      doc["route"] = cfg.which;
      doc["version"] = hypercat::version_string;
      std::cout << doc.dump(2) << '\n';
    }
    return 0;
  }

  struct VerifyConfig {
    hypercat::VerifyOptions opt;
    bool header = true;
  };

  int run_verify(const VerifyConfig& cfg)
  {
    if (cfg.header)
      std::cout << "cross-check battery (m=" << cfg.opt.m << ", n_max=" << cfg.opt.n_max
                << (cfg.opt.quick ? ", quick" : "") << ")\n";

    const hypercat::VerifyReport rep = hypercat::run_verification(cfg.opt);
    for (const hypercat::RouteRow& row : rep.routes) {
      std::cout << "n=" << row.n << " trees=" << row.via_trees
                << " series=" << row.via_series;
      if (row.via_labelings)
        std::cout << " labelings=" << *row.via_labelings;
      std::cout << (row.agree ? " ok" : " MISMATCH") << '\n';
    }
    std::size_t passed = 0;
    for (const hypercat::CheckResult& c : rep.checks) {
      if (c.pass) {
        ++passed;
        std::cout << "PASS " << c.name << " (" << c.note << ")\n";
      } else {
        std::cout << "FAIL " << c.name << ": " << c.note << '\n';
      }
    }
    std::cout << "result: " << passed << '/' << rep.checks.size() << " checks passed\n";
    return rep.all_pass() ? 0 : 1;
  }

  struct AsympConfig {
    unsigned m = 2;
    unsigned terms = 100;
    unsigned k = 16;
    unsigned precision_bits = 512;
    std::optional<double> assert_tol;
    bool header = true;
  };

  int run_asymp(const AsympConfig& cfg)
  {
    const auto prec = static_cast<mpfr_prec_t>(cfg.precision_bits);
    const hypercat::GrowthEstimate est =
        hypercat::estimate_growth(cfg.m, cfg.terms, cfg.k, prec);
    const hypercat::GrowthEstimate conj = hypercat::conjectured_constants(cfg.m, prec);
    const hypercat::Real khat = hypercat::ansatz_constant(cfg.m, prec);

    if (cfg.header)
      std::cout << "growth constants (m=" << cfg.m << ", terms=" << cfg.terms
                << ", k=" << cfg.k << ", " << cfg.precision_bits << " bits)\n";

    bool within = true;
    auto line = [&](const char* name, const hypercat::Real& emp, const hypercat::Real& ref) {
      const hypercat::Real diff = (emp - ref).abs();
      std::cout << name << " empirical " << emp.str(24) << "  conjectured " << ref.str(24)
                << "  |diff| " << diff.str(6) << '\n';
      if (cfg.assert_tol && !(diff < hypercat::Real::of(*cfg.assert_tol, prec)))
        within = false;
    };
    line("A  ", est.A, conj.A);
    line("rho", est.rho, conj.rho);
    line("K  ", est.K, khat);
    std::cout << "note: K column uses the ansatz normalization K_m*A/pi^((m-1)/2); K_"
              << cfg.m << " itself is " << conj.K.str(24) << '\n';

    return within ? 0 : 1;
  }

  struct GluingConfig {
    unsigned m = 2;
    unsigned r = 8;
    std::string format = "plain";
  };

  int run_gluing(const GluingConfig& cfg)
  {
    const hypercat::NPolynomial p = hypercat::trace_polynomial(cfg.m, cfg.r);
    if (cfg.format == "plain") {
      std::cout << p.str() << '\n';
    } else {
      ordered_json doc;
      doc["m"] = cfg.m;
      doc["r"] = cfg.r;
      doc["polynomial"] = p.str();
      doc["version"] = hypercat::version_string;
      std::cout << doc.dump(2) << '\n';
    }
    return 0;
  }

  struct TreesConfig {
    unsigned n = 1;
    std::string format = "plain";
    std::optional<std::string> cache;
  };

  int run_trees(const TreesConfig& cfg)
  {
    const auto catalog = hypercat::tree_catalog(cfg.n, cfg.cache);
    if (cfg.format == "plain") {
      std::cout << catalog.size() << '\n';
    } else {
      ordered_json doc;
      doc["n"] = cfg.n;
      doc["count"] = catalog.size();
      doc["version"] = hypercat::version_string;
      std::cout << doc.dump(2) << '\n';
    }
    return 0;
  }

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"hypergraph Catalan numbers: sequences, series, gluings, growth"};
  app.require_subcommand(1);

  SeqConfig seq;
  CLI::App* seq_cmd = app.add_subcommand("seq", "print a C_n^(m) table");
  seq_cmd->add_option("--m", seq.m, "hyperedge half-size m")->required()->check(CLI::Range(1u, 64u));
  seq_cmd->add_option("--n-max", seq.n_max, "largest index to print")->check(CLI::Range(0u, 100000u));
  seq_cmd->add_option("--via", seq.via, "computation route")
      ->check(CLI::IsMember({"tree", "gf"}));
  seq_cmd->add_option("--format", seq.format, "output format")
      ->check(CLI::IsMember({"plain", "csv", "json", "bfile"}));
  seq_cmd->add_option("--jobs", seq.jobs, "worker threads for the tree route")
      ->check(CLI::Range(1u, 256u));
  seq_cmd->add_option("--cache", seq.cache, "tree catalog cache file");
  seq_cmd->add_option("--compare-bfile", seq.compare,
                      "compare against a local OEIS b-file instead of printing");

  GfConfig gf;
  CLI::App* gf_cmd = app.add_subcommand("gf", "print series coefficients");
  gf_cmd->add_option("--m", gf.m, "hyperedge half-size m")->required()->check(CLI::Range(1u, 64u));
  gf_cmd->add_option("--order", gf.order, "truncation order")->check(CLI::Range(0u, 2000u));
  gf_cmd->add_option("--which", gf.which,
                     "series: f (tree), F (shifted moment), ell, h")
      ->check(CLI::IsMember({"f", "F", "ell", "h"}));
  gf_cmd->add_option("--format", gf.format, "output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  VerifyConfig verify;
  std::string fault;
  CLI::App* verify_cmd = app.add_subcommand("verify", "run the cross-check battery");
  verify_cmd->add_option("--m", verify.opt.m, "sequence shown in the route table")
      ->check(CLI::Range(1u, 16u));
  verify_cmd->add_option("--n-max", verify.opt.n_max, "top index of the route table")
      ->check(CLI::Range(0u, 10u));
  verify_cmd->add_flag("--quick", verify.opt.quick, "trim the exhaustive bounds");
  verify_cmd->add_flag("!--no-header", verify.header, "omit the header line");
  verify_cmd->add_option("--cache", verify.opt.catalog_cache, "tree catalog cache file");
  verify_cmd->add_option("--inject-fault", fault)
      ->check(CLI::IsMember({"wm-off-by-one"}))
      ->group("");

  AsympConfig asymp;
  CLI::App* asymp_cmd = app.add_subcommand("asymp", "estimate growth constants");
  asymp_cmd->add_option("--m", asymp.m, "hyperedge half-size m")->required()->check(CLI::Range(1u, 64u));
  asymp_cmd->add_option("--terms", asymp.terms, "sequence terms to consume");
  asymp_cmd->add_option("--k", asymp.k, "difference-operator power");
  asymp_cmd->add_option("--precision-bits", asymp.precision_bits, "working precision")
      ->check(CLI::Range(64u, 65536u));
  asymp_cmd->add_option("--assert-tol", asymp.assert_tol,
                        "exit 1 when any |empirical - conjectured| exceeds this");
  asymp_cmd->add_flag("!--no-header", asymp.header, "omit the header line");

  GluingConfig gluing;
  CLI::App* gluing_cmd = app.add_subcommand("gluing", "print a vertex-count polynomial");
  gluing_cmd->add_option("--m", gluing.m, "half block size m")->required()->check(CLI::Range(1u, 16u));
  gluing_cmd->add_option("--r", gluing.r, "polygon sides (a multiple of 2m)")->required();
  gluing_cmd->add_option("--format", gluing.format, "output format")
      ->check(CLI::IsMember({"plain", "json"}));

  TreesConfig trees;
  CLI::App* trees_cmd = app.add_subcommand("trees", "count free trees / manage the catalog cache");
  trees_cmd->add_option("--n", trees.n, "vertex count")->required()->check(CLI::Range(1u, 24u));
  trees_cmd->add_option("--cache", trees.cache, "catalog cache file to read or create");
  trees_cmd->add_option("--format", trees.format, "output format")
      ->check(CLI::IsMember({"plain", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  verify.opt.fault_wm_off_by_one = fault == "wm-off-by-one";

  try {
    if (*seq_cmd)
      return run_seq(seq);
    if (*gf_cmd)
      return run_gf(gf);
    if (*verify_cmd)
      return run_verify(verify);
    if (*asymp_cmd)
      return run_asymp(asymp);
    if (*gluing_cmd)
      return run_gluing(gluing);
    return run_trees(trees);
  } catch (const hypercat::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const hypercat::precision_error& e) {
    std::cerr << "precision error: " << e.what() << '\n';
    return 2;
  } catch (const hypercat::resource_error& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
