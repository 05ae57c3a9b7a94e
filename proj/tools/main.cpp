// Command-line front end.
//
// Subcommands:
//   compute  — full report for one fibration (JSON or CSV)
//   catalog  — batch table over a catalog file, one row per manifold
//   check    — internal property suites (dedekind | torsion |
//              regularization | all)
//
// Exit codes: 0 success; 1 failed check or failed catalog row; 2 bad
// input (syntax or semantics); 3 vanishing orbifold Chern number;
// 4 phase-file problem.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "seifertcs/seifertcs.hpp"

namespace {

using namespace seifertcs;

int run_compute(const std::string& seifert_text, long rank, long level, long framing,
                const std::string& phases_spec, const std::string& format,
                unsigned precision) {
  ComputeRequest req(parse_seifert(seifert_text), TorusRank(rank));
  req.level = level;
  req.framing = framing;
  req.precision = precision;
  req.format = format == "csv" ? OutputFormat::csv : OutputFormat::json;
  if (phases_spec == "trivial") {
    req.trivial_phases = true;
  } else if (phases_spec.rfind("file:", 0) == 0) {
    req.trivial_phases = false;
    req.phase_path = phases_spec.substr(5);
    if (req.phase_path.empty())
      throw semantic_error("--phases file: needs a path");
  } else {
    throw semantic_error("--phases must be 'trivial' or 'file:PATH'");
  }

  const auto doc = compute_document(req);
  if (req.format == OutputFormat::json)
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << compute_csv(doc);
  return 0;
}

int run_catalog(const std::string& path, long rank, long level,
                const std::string& format, unsigned precision) {
  if (precision < 20) throw semantic_error("precision must be at least 20 digits");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw semantic_error("cannot open catalog file: " + path);
  const auto lines = read_catalog_lines(in);
  const TorusRank n(rank);

  bool any_error = false;
  if (format == "json") {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& line : lines) {
      const CatalogRow row = catalog_row(line.text, n, level, precision);
      any_error = any_error || !row.error.empty();
      rows.push_back(catalog_json_row(row));
    }
    std::cout << rows.dump(2) << "\n";
  } else {
    std::cout << catalog_csv_header() << "\n";
    for (const auto& line : lines) {
      const CatalogRow row = catalog_row(line.text, n, level, precision);
      any_error = any_error || !row.error.empty();
      std::cout << catalog_csv_line(row) << "\n";
    }
  }
  return any_error ? 1 : 0;
}

int run_check(const std::string& suite, const std::string& catalog_path) {
  bool all_passed = true;

  if (!catalog_path.empty()) {
    // Streaming mode: per-manifold torsion agreement rows from the file.
    std::ifstream in(catalog_path, std::ios::binary);
    if (!in) throw semantic_error("cannot open catalog file: " + catalog_path);
    long passed = 0, failed = 0;
    for (const auto& line : read_catalog_lines(in)) {
      std::string why;
      bool ok = true;
      std::string rendered = line.text;
      try {
        const SeifertData d = parse_seifert(line.text);
        rendered = render_seifert(d);
        for (long n = 1; n <= 3 && ok; ++n)
          ok = torsion_entry_agrees(d, TorusRank(n), &why);
      } catch (const std::exception& e) {
        ok = false;
        why = e.what();
      }
      if (ok) {
        ++passed;
        std::cout << "ok   " << rendered << "\n";
      } else {
        ++failed;
        std::cout << "FAIL " << rendered << ": " << why << "\n";
      }
    }
    std::cout << passed << " passed, " << failed << " failed\n";
    all_passed = failed == 0;
  }

  const auto results = run_check_suite(suite);
  for (const auto& r : results) {
    if (r.passed)
      std::cout << "[PASS] " << r.name << " (" << r.cases << " cases)\n";
    else
      std::cout << "[FAIL] " << r.name << " (after " << r.cases
                << " cases): " << r.detail << "\n";
    all_passed = all_passed && r.passed;
  }
  return all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants and torus Chern-Simons partition data for "
               "Seifert-fibered three-manifolds"};
  app.require_subcommand(1);

  std::string seifert_text;
  std::string phases_spec = "trivial";
  std::string compute_format = "json";
  std::string catalog_format = "csv";
  std::string catalog_path;
  std::string suite;
  std::string check_catalog;
  long rank = 1, level = 1, framing = 0;
  unsigned precision = 50;

  auto* compute =
      app.add_subcommand("compute", "Report invariants for one fibration");
  compute->add_option("--seifert", seifert_text, "Seifert data \"[g, n; (a1,b1), ...]\"")
      ->required();
  compute->add_option("--rank", rank, "gauge torus rank N")->capture_default_str();
  compute->add_option("--level", level, "level k (positive integer)")
      ->capture_default_str();
  compute->add_option("--framing", framing, "framing twist in integer units")
      ->capture_default_str();
  compute->add_option("--phases", phases_spec, "trivial | file:PATH")
      ->capture_default_str();
  compute->add_option("--format", compute_format, "json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  compute->add_option("--precision", precision, "decimal digits, at least 20")
      ->envname("SEIFERTCS_PRECISION")
      ->capture_default_str();

  auto* catalog = app.add_subcommand("catalog", "Batch a catalog file into a table");
  catalog->add_option("path", catalog_path, "one Seifert expression per line")
      ->required();
  catalog->add_option("--rank", rank, "gauge torus rank N")->capture_default_str();
  catalog->add_option("--level", level, "level k (positive integer)")
      ->capture_default_str();
  catalog->add_option("--format", catalog_format, "csv | json")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  catalog->add_option("--precision", precision, "decimal digits, at least 20")
      ->envname("SEIFERTCS_PRECISION")
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Run internal property suites");
  check->add_option("suite", suite, "dedekind | torsion | regularization | all")
      ->required()
      ->check(CLI::IsMember({"dedekind", "torsion", "regularization", "all"}));
  check->add_option("--catalog", check_catalog,
                    "also stream per-manifold torsion rows from this file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (!check_catalog.empty() && suite != "torsion" && suite != "all") {
    std::cerr << "error: --catalog applies to the torsion suite\n";
    return 2;
  }

  try {
    if (*compute)
      return run_compute(seifert_text, rank, level, framing, phases_spec,
                         compute_format, precision);
    if (*catalog)
      return run_catalog(catalog_path, rank, level, catalog_format, precision);
    return run_check(suite, check_catalog);
  } catch (const parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const semantic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const zero_chern_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const phase_assignment_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
