#pragma once
// Document assembly for the command-line front end: the compute report
// (JSON object or flat CSV), the catalog table, and the catalog text
// format (one Seifert expression per line, '#' comments, blank lines
// ignored). Rationals are rendered as "num/den" strings, phases as
// "q*pi"; decimal digits appear only in the *_decimal fields.

#include <istream>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "seifertcs/checks.hpp"
#include "seifertcs/errors.hpp"
#include "seifertcs/hp.hpp"
#include "seifertcs/invariants.hpp"
#include "seifertcs/partition.hpp"
#include "seifertcs/phase_file.hpp"
#include "seifertcs/seifert.hpp"
#include "seifertcs/torsion.hpp"

namespace seifertcs {

enum class OutputFormat { json, csv };

struct ComputeRequest {
  SeifertData seifert;
  TorusRank rank;
  long level = 1;
  long framing = 0;
  bool trivial_phases = true;
  std::string phase_path;  // used when !trivial_phases
  OutputFormat format = OutputFormat::json;
  unsigned precision = 50;

  ComputeRequest(SeifertData d, TorusRank n) : seifert(std::move(d)), rank(n) {}
};

namespace detail {

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

}  // namespace detail

// Full single-manifold report. Throws: semantic/zero_chern/phase errors
// propagate to the caller (the CLI maps them to exit codes).
inline nlohmann::ordered_json compute_document(const ComputeRequest& req) {
  if (req.level < 1) throw semantic_error("level must be a positive integer");
  if (req.precision < 20) throw semantic_error("precision must be at least 20 digits");

  const SeifertData& d = req.seifert;
  const TorusRank& n = req.rank;
  const TorsionReport torsion = homology_report(d, n);
  const std::vector<BundleClassPhase> phases =
      req.trivial_phases ? trivial_phases(torsion) : load_phase_file(req.phase_path);
  const PartitionResult z =
      partition_sum(d, n, req.level, phases, req.framing, req.precision);
  const EtaZero eta = eta0(d, n);

  nlohmann::ordered_json doc;
  doc["seifert"] = render_seifert(d);
  doc["rank"] = n.value();
  doc["level"] = req.level;
  doc["framing"] = req.framing;
  doc["precision"] = req.precision;
  doc["c1"] = chern_number(d).to_string();
  doc["eta0"] = eta.value.to_string();
  doc["m_x"] = m_exponent(d, n).to_string();
  doc["torsion"] = {{"order", torsion.order_closed.get_str()},
                    {"group", nlohmann::ordered_json::array()}};
  for (const auto& f : torsion.group_structure)
    doc["torsion"]["group"].push_back(f.get_str());
  doc["k_x"] = k_normalization(d, n).to_string();
  doc["framing_phase"] = seifert_framing_phase(n, eta).to_string();
  doc["moduli_volume"] = z.moduli_volume.to_string();

  doc["per_class"] = nlohmann::ordered_json::array();
  for (const auto& row : z.per_class) {
    nlohmann::ordered_json item;
    item["class"] = nlohmann::ordered_json::array();
    for (const auto& r : row.label) item["class"].push_back(r.get_str());
    item["q"] = row.cs_q.to_string();
    item["phase"] = row.phase.to_string();
    item["weight"] = row.weight.to_string();
    doc["per_class"].push_back(std::move(item));
  }

  doc["magnitude_exact"] =
      z.magnitude_exact ? nlohmann::ordered_json(z.magnitude_exact->to_string())
                        : nlohmann::ordered_json(nullptr);
  doc["magnitude_decimal"] = hp::decimal_string(z.magnitude, req.precision);
  doc["phase_pi_decimal"] =
      z.phase_over_pi
          ? nlohmann::ordered_json(hp::decimal_string(*z.phase_over_pi, req.precision))
          : nlohmann::ordered_json(nullptr);
  return doc;
}

// Flat CSV rendering of the same document: scalar field,value lines, then
// a per-class block with its own header.
inline std::string compute_csv(const nlohmann::ordered_json& doc) {
  std::string out = "field,value\n";
  for (const auto& [key, value] : doc.items()) {
    if (key == "per_class" || key == "torsion") continue;
    std::string rendered;
    if (value.is_null())
      rendered = "";
    else if (value.is_string())
      rendered = value.get<std::string>();
    else
      rendered = value.dump();
    out += key + "," + detail::csv_escape(rendered) + "\n";
  }
  out += "torsion_order," + doc["torsion"]["order"].get<std::string>() + "\n";
  std::string group;
  for (const auto& f : doc["torsion"]["group"]) {
    if (!group.empty()) group += " ";
    group += f.get<std::string>();
  }
  out += "torsion_group," + detail::csv_escape(group) + "\n";
  out += "class,q,phase,weight\n";
  for (const auto& item : doc["per_class"]) {
    std::string label;
    for (const auto& r : item["class"]) {
      if (!label.empty()) label += " ";
      label += r.get<std::string>();
    }
    out += detail::csv_escape(label) + "," + item["q"].get<std::string>() + "," +
           item["phase"].get<std::string>() + "," + item["weight"].get<std::string>() +
           "\n";
  }
  return out;
}

struct CatalogLine {
  std::size_t line_number;
  std::string text;
};

inline std::vector<CatalogLine> read_catalog_lines(std::istream& in) {
  std::vector<CatalogLine> out;
  std::string line;
  std::size_t no = 0;
  while (std::getline(in, line)) {
    ++no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    const auto end = line.find_last_not_of(" \t\r");
    out.push_back(CatalogLine{no, line.substr(begin, end - begin + 1)});
  }
  return out;
}

struct CatalogRow {
  std::string seifert;  // raw input text on error, canonical render on success
  std::string c1, eta0, m_x, torsion_order, k_x, magnitude, magnitude_decimal;
  std::string error;
};

// Evaluates one catalog line with trivial phases. Never throws: failures
// land in the error column.
inline CatalogRow catalog_row(const std::string& text, const TorusRank& n, long k,
                              unsigned precision) {
  CatalogRow row;
  row.seifert = text;
  try {
    const SeifertData d = parse_seifert(text);
    row.seifert = render_seifert(d);
    const TorsionReport torsion = homology_report(d, n);
    const PartitionResult z =
        partition_sum(d, n, k, trivial_phases(torsion), 0, precision);
    row.c1 = chern_number(d).to_string();
    row.eta0 = eta0(d, n).value.to_string();
    row.m_x = m_exponent(d, n).to_string();
    row.torsion_order = torsion.order_closed.get_str();
    row.k_x = k_normalization(d, n).to_string();
    row.magnitude = z.magnitude_exact ? z.magnitude_exact->to_string() : "";
    row.magnitude_decimal = hp::decimal_string(z.magnitude, precision);
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

inline std::string catalog_csv_header() {
  return "seifert,c1,eta0,m_x,torsion_order,k_x,magnitude,magnitude_decimal,error";
}

inline std::string catalog_csv_line(const CatalogRow& r) {
  return detail::csv_escape(r.seifert) + "," + r.c1 + "," + r.eta0 + "," + r.m_x +
         "," + r.torsion_order + "," + detail::csv_escape(r.k_x) + "," +
         detail::csv_escape(r.magnitude) + "," + r.magnitude_decimal + "," +
         detail::csv_escape(r.error);
}

inline nlohmann::ordered_json catalog_json_row(const CatalogRow& r) {
  nlohmann::ordered_json item;
  item["seifert"] = r.seifert;
  item["c1"] = r.c1;
  item["eta0"] = r.eta0;
  item["m_x"] = r.m_x;
  item["torsion_order"] = r.torsion_order;
  item["k_x"] = r.k_x;
  item["magnitude"] = r.magnitude;
  item["magnitude_decimal"] = r.magnitude_decimal;
  item["error"] = r.error;
  return item;
}

}  // namespace seifertcs
