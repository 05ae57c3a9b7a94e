#pragma once
// Loader for externally supplied flat-bundle phase assignments:
// a JSON array of {"class": [residues...], "q": "num/den"} objects.
// Every failure mode (unreadable file, malformed JSON, bad entry) maps to
// phase_assignment_error; coverage against the actual torsion group is
// checked later, inside partition_sum.

#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "seifertcs/errors.hpp"
#include "seifertcs/partition.hpp"
#include "seifertcs/rational.hpp"

namespace seifertcs {

inline std::vector<BundleClassPhase> parse_phase_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw phase_assignment_error(std::string("phase file is not valid JSON: ") + e.what());
  }
  if (!doc.is_array())
    throw phase_assignment_error("phase file must be a JSON array");
  std::vector<BundleClassPhase> out;
  out.reserve(doc.size());
  for (const auto& entry : doc) {
    if (!entry.is_object() || !entry.contains("class") || !entry.contains("q"))
      throw phase_assignment_error(
          "each phase entry needs a \"class\" array and a \"q\" string");
    const auto& label_json = entry["class"];
    if (!label_json.is_array())
      throw phase_assignment_error("\"class\" must be an array of residues");
    std::vector<Integer> label;
    for (const auto& r : label_json) {
      if (r.is_number_integer())
        label.emplace_back(static_cast<long>(r.get<long long>()));
      else if (r.is_string())
        label.emplace_back(r.get<std::string>(), 10);
      else
        throw phase_assignment_error("class residues must be integers");
    }
    Rational q;
    try {
      if (entry["q"].is_string())
        q = Rational::parse(entry["q"].get<std::string>());
      else if (entry["q"].is_number_integer())
        q = Rational(static_cast<long>(entry["q"].get<long long>()));
      else
        throw std::domain_error("q must be a rational string");
    } catch (const std::domain_error& e) {
      throw phase_assignment_error(std::string("bad \"q\" value: ") + e.what());
    }
    out.emplace_back(std::move(label), q);
  }
  return out;
}

inline std::vector<BundleClassPhase> load_phase_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw phase_assignment_error("cannot open phase file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_phase_json(text);
}

}  // namespace seifertcs
