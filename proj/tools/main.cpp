#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cli/commands.hpp"
#include "primform/error.hpp"

using namespace primform;
using namespace primform::cli;

namespace {

int emit(const CommandResult& result, const RunConfig& config) {
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  const std::string body = config.format == "text" ? result.text : result.record.dump(2) + "\n";
  if (config.output.empty()) {
    std::cout << body;
  } else {
    std::ofstream out(config.output);
    if (!out) throw ParseError("cannot write '" + config.output + "'");
    out << body;
  }
  return result.exit_code;
}

Json read_record(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open record '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return Json::parse(ss.str());
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("record '" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Primitive forms and Frobenius manifolds of weighted homogeneous singularities"};
  app.require_subcommand(1);
  RunConfig config;
  std::string record_path;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", config.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("-o,--output", config.output, "write the record here instead of stdout");
    sub->add_option("--catalog", config.catalog, "catalog file (default: $PRIMFORM_CATALOG or the bundled one)");
  };
  auto add_target = [&](CLI::App* sub) {
    sub->add_option("-s,--singularity", config.singularity, "catalog name, e.g. U12");
    sub->add_option("-p,--poly", config.poly, "inline polynomial, e.g. 'x^3+y^3+z^4'");
    sub->add_option("-w,--weights", config.weights, "weights for --poly, e.g. '1/3,1/3,1/4'");
    add_common(sub);
  };

  auto* info = app.add_subcommand("info", "weights, central charge, Milnor basis and pairing");
  add_target(info);
  auto* compute = app.add_subcommand("compute", "primitive form, flat coordinates and prepotential");
  add_target(compute);
  compute->add_option("-n,--order", config.order, "truncation order in s (default 4)")->check(CLI::NonNegativeNumber);
  compute->add_option("-b,--basis", config.basis, "explicit basis, e.g. '1,z,x,y,z^2'");
  auto* verify = app.add_subcommand("verify", "re-run WDVV, Euler and integrability on a stored record");
  verify->add_option("record", record_path, "record written by compute")->required();
  add_common(verify);
  auto* mirror = app.add_subcommand("mirror", "Berglund-Hubsch transpose and diagonal symmetries");
  add_target(mirror);
  auto* selftest = app.add_subcommand("catalog-selftest", "check every catalog entry against its expected values");
  add_common(selftest);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*verify) return emit(cmd_verify(read_record(record_path)), config);
    const Catalog catalog = load_catalog(catalog_path(config.catalog));
    if (*info) return emit(cmd_info(resolve_target(config, catalog)), config);
    if (*compute) return emit(cmd_compute(resolve_target(config, catalog), config), config);
    if (*mirror) return emit(cmd_mirror(resolve_target(config, catalog), catalog), config);
    if (*selftest) return emit(cmd_catalog_selftest(catalog), config);
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
