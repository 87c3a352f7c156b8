#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primform/weighted.hpp"

namespace primform {

struct ExpectedValues {
  std::optional<Rational> central_charge;
  std::optional<long> milnor_number;
  std::optional<std::string> transpose_name;
};

struct CatalogEntry {
  std::string name;
  /// "exceptional", "ADE" or "simple-elliptic".
  std::string family;
  std::vector<std::string> variables;
  std::vector<Rational> weights;
  Poly polynomial;
  ExpectedValues expected;

  /// Validates weights against the polynomial (throws Rejection).
  WeightedPolynomial weighted() const { return WeightedPolynomial(variables, weights, polynomial); }
};

class Catalog {
 public:
  explicit Catalog(std::vector<CatalogEntry> entries) : entries_(std::move(entries)) {}
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  /// Throws Rejection listing the known names when `name` is absent.
  const CatalogEntry& find(const std::string& name) const;
  const CatalogEntry* try_find(const std::string& name) const;
  std::vector<const CatalogEntry*> family(const std::string& family) const;

 private:
  std::vector<CatalogEntry> entries_;
};

/// Reads a catalog file (JSON). Throws ParseError.
Catalog load_catalog(const std::string& path);
Catalog parse_catalog(const std::string& text);

}  // namespace primform
