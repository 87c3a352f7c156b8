#include "primform/catalog.hpp"

#include <fstream>
#include <sstream>

#include "primform/error.hpp"
#include "primform/serialize.hpp"

namespace primform {

const CatalogEntry* Catalog::try_find(const std::string& name) const {
  for (const auto& e : entries_)
    if (e.name == name) return &e;
  return nullptr;
}

const CatalogEntry& Catalog::find(const std::string& name) const {
  if (const auto* e = try_find(name)) return *e;
  std::string known;
  for (const auto& e : entries_) known += (known.empty() ? "" : ", ") + e.name;
  throw Rejection("unknown singularity '" + name + "' (catalog has: " + known + ")");
}

std::vector<const CatalogEntry*> Catalog::family(const std::string& family) const {
  std::vector<const CatalogEntry*> out;
  for (const auto& e : entries_)
    if (e.family == family) out.push_back(&e);
  return out;
}

Catalog parse_catalog(const std::string& text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("catalog is not valid JSON: ") + e.what());
  }
  if (!doc.contains("entries") || !doc.at("entries").is_array()) throw ParseError("catalog needs an 'entries' array");
  std::vector<CatalogEntry> entries;
  for (const auto& j : doc.at("entries")) {
    try {
      CatalogEntry e;
      e.name = j.at("name").get<std::string>();
      e.family = j.value("family", "");
      e.variables = j.at("variables").get<std::vector<std::string>>();
      for (const auto& w : j.at("weights")) e.weights.push_back(rational_from_json(w));
      e.polynomial = poly_from_json(j.at("polynomial"), e.variables.size());
      if (j.contains("expected")) {
        const auto& x = j.at("expected");
        if (x.contains("central_charge")) e.expected.central_charge = rational_from_json(x.at("central_charge"));
        if (x.contains("milnor_number")) e.expected.milnor_number = x.at("milnor_number").get<long>();
        if (x.contains("transpose_name")) e.expected.transpose_name = x.at("transpose_name").get<std::string>();
      }
      entries.push_back(std::move(e));
    } catch (const nlohmann::json::exception& ex) {
      throw ParseError("malformed catalog entry " + j.dump() + ": " + ex.what());
    }
  }
  return Catalog(std::move(entries));
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open catalog file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_catalog(ss.str());
}

}  // namespace primform
