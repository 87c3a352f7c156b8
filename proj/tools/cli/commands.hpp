#pragma once

#include <optional>
#include <string>
#include <vector>

#include "primform/catalog.hpp"
#include "primform/serialize.hpp"
#include "primform/weighted.hpp"

namespace primform::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kInternal = 3 };

struct RunConfig {
  std::string singularity;
  std::string poly;
  std::string weights;
  int order = 4;
  std::string basis;
  std::string format = "json";
  std::string output;
  std::string catalog;
};

/// A polynomial to work on, from the catalog or given inline.
struct Target {
  std::string name;
  WeightedPolynomial f;
  const CatalogEntry* entry = nullptr;
};

struct CommandResult {
  Json record;
  std::string text;
  int exit_code = kOk;
  std::vector<std::string> warnings;
};

/// --catalog, then $PRIMFORM_CATALOG, then the installed default.
std::string catalog_path(const std::string& flag);

/// Throws Rejection / ParseError on bad input.
Target resolve_target(const RunConfig& config, const Catalog& catalog);

CommandResult cmd_info(const Target& target);
CommandResult cmd_compute(const Target& target, const RunConfig& config);
CommandResult cmd_verify(const Json& record);
CommandResult cmd_mirror(const Target& target, const Catalog& catalog);
CommandResult cmd_catalog_selftest(const Catalog& catalog);

}  // namespace primform::cli
