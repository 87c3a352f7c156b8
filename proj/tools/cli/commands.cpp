#include "cli/commands.hpp"

#include <cstdlib>
#include <sstream>

#include "primform/brieskorn.hpp"
#include "primform/error.hpp"
#include "primform/frobenius.hpp"
#include "primform/milnor.hpp"
#include "primform/mirror.hpp"
#include "primform/parse.hpp"
#include "primform/primitive.hpp"

namespace primform::cli {

namespace {

Json rationals(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

std::string join(const std::vector<std::string>& v, const std::string& sep = ", ") {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + v[i];
  return out;
}

std::vector<std::string> strs(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& r : v) out.push_back(r.str());
  return out;
}

std::vector<std::string> basis_strings(const MilnorData& md) {
  std::vector<std::string> out;
  for (const auto& m : md.basis()) out.push_back(m.str(md.polynomial().variables()));
  return out;
}

const char* verdict(bool ok) { return ok ? "pass" : "fail"; }

std::string matrix_text(const Matrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << "  [";
    for (std::size_t k = 0; k < m.cols(); ++k) os << (k ? " " : "") << m(i, k).str();
    os << "]\n";
  }
  return os.str();
}

struct CheckSet {
  std::vector<CheckReport> reports;

  bool passed() const {
    for (const auto& r : reports)
      if (!r.passed) return false;
    return true;
  }
  Json verdicts() const {
    Json out = Json::object();
    for (const auto& r : reports) out[r.name] = verdict(r.passed);
    return out;
  }
  Json violations() const {
    Json out = Json::object();
    for (const auto& r : reports)
      if (!r.violations.empty()) out[r.name] = r.violations;
    return out;
  }
  std::string text() const {
    std::ostringstream os;
    for (const auto& r : reports) {
      os << "  " << r.name << ": " << verdict(r.passed) << " (" << r.checked << " checked)\n";
      for (const auto& v : r.violations) os << "    " << v << "\n";
    }
    return os.str();
  }
};

/// Integrability in the stored-record sense: the gradient is closed and F0
/// reproduces it.
CheckReport combined_integrability(const SSeries& f0, const std::vector<SSeries>& gradient, int order) {
  CheckReport report = integrability_check(gradient);
  CheckReport consistency = gradient_check(f0, gradient, order);
  report.checked += consistency.checked;
  for (auto& v : consistency.violations) report.fail(std::move(v));
  return report;
}

}  // namespace

std::string catalog_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("PRIMFORM_CATALOG"); env && *env) return env;
  return PRIMFORM_DEFAULT_CATALOG;
}

Target resolve_target(const RunConfig& config, const Catalog& catalog) {
  if (!config.singularity.empty() && !config.poly.empty())
    throw Rejection("give either --singularity or --poly, not both");
  if (!config.singularity.empty()) {
    const CatalogEntry& e = catalog.find(config.singularity);
    return Target{e.name, e.weighted(), &e};
  }
  if (config.poly.empty()) throw Rejection("no singularity given (use --singularity NAME or --poly TEXT)");
  auto vars = detect_variables(config.poly);
  Poly p = parse_poly(config.poly, vars);
  std::vector<Rational> weights;
  if (!config.weights.empty()) {
    weights = parse_rational_list(config.weights);
  } else {
    auto inferred = infer_weights(p);
    if (!inferred) throw Rejection("cannot infer unique weights for '" + config.poly + "'; pass --weights");
    weights = *inferred;
  }
  return Target{config.poly, WeightedPolynomial(vars, weights, p), nullptr};
}

CommandResult cmd_info(const Target& target) {
  const auto& f = target.f;
  const MilnorData md = MilnorData::compute(f);
  CommandResult out;
  out.record = {{"singularity", target.name},
                {"variables", f.variables()},
                {"polynomial", f.str()},
                {"weights", rationals(f.weights())},
                {"central_charge", md.central_charge().str()},
                {"milnor_number", md.mu()},
                {"basis", basis_strings(md)},
                {"degrees", rationals(md.degrees())},
                {"socle", md.socle().str(f.variables())},
                {"eta", to_json(md.eta())}};
  std::ostringstream os;
  os << "singularity:    " << target.name << "\n"
     << "polynomial:     " << f.str() << "\n"
     << "weights:        " << join(strs(f.weights())) << "\n"
     << "central charge: " << md.central_charge() << "\n"
     << "milnor number:  " << md.mu() << "\n"
     << "basis:          " << join(basis_strings(md)) << "\n"
     << "degrees:        " << join(strs(md.degrees())) << "\n"
     << "socle:          " << md.socle().str(f.variables()) << "\n"
     << "eta:\n"
     << matrix_text(md.eta());
  out.text = os.str();
  return out;
}

CommandResult cmd_compute(const Target& target, const RunConfig& config) {
  if (config.order < 0) throw Rejection("--order must be >= 0");
  const auto& f = target.f;
  std::optional<std::vector<Monomial>> basis;
  if (!config.basis.empty()) basis = parse_monomial_list(config.basis, f.variables());
  const MilnorData md = MilnorData::compute(f, basis);
  const UnfoldingState state = build_unfolding(f, md, config.order);
  const Reducer reducer(md);
  const PrimitiveFormResult result = solve_star(state, reducer);

  CheckSet checks;
  const FrobeniusData fd = build_frobenius(result, md);
  checks.reports.push_back(wdvv_check(fd.prepotential, md.eta(), config.order));
  checks.reports.push_back(euler_check(fd.prepotential, fd.flat_degrees, md.central_charge()));
  checks.reports.push_back(combined_integrability(fd.prepotential, fd.gradient, config.order));
  {
    CheckReport defect;
    defect.name = "defect";
    defect.checked = 1;
    if (!star_defect(state, result).is_zero()) defect.fail("e^{(F-f)/z} zeta - J is nonzero");
    checks.reports.push_back(defect);
  }
  {
    CheckReport grading;
    grading.name = "grading";
    grading.checked = 1;
    for (auto& v : grading_violations(state, result)) grading.fail(std::move(v));
    checks.reports.push_back(grading);
  }
  checks.reports.push_back(origin_ring_check(fd.prepotential, md));

  Json flat = Json::array(), grad = Json::array();
  for (const auto& t : fd.t_of_s) flat.push_back(to_json(t));
  for (const auto& g : fd.gradient) grad.push_back(to_json(g));

  CommandResult out;
  out.record = {{"singularity", target.name},
                {"variables", f.variables()},
                {"polynomial", f.str()},
                {"weights", rationals(f.weights())},
                {"central_charge", md.central_charge().str()},
                {"order", config.order},
                {"basis", basis_strings(md)},
                {"flat_degrees", rationals(fd.flat_degrees)},
                {"eta", to_json(md.eta())},
                {"terms", to_json(fd.prepotential)},
                {"flat_coordinates", std::move(flat)},
                {"gradient", std::move(grad)},
                {"checks", checks.verdicts()}};
  if (!checks.passed()) out.record["violations"] = checks.violations();

  const auto t_names = indexed_names("t", md.mu());
  const auto s_names = indexed_names("s", md.mu());
  std::ostringstream os;
  os << "singularity:  " << target.name << " = " << f.str() << "\n"
     << "order:        " << config.order << "\n"
     << "basis:        " << join(basis_strings(md)) << "\n"
     << "flat degrees: " << join(strs(fd.flat_degrees)) << "\n"
     << "flat coordinates:\n";
  for (std::size_t a = 0; a < fd.t_of_s.size(); ++a)
    os << "  " << t_names[a] << " = " << fd.t_of_s[a].str(s_names) << "\n";
  os << "F0 = " << fd.prepotential.str(t_names) << "\n"
     << "checks:\n"
     << checks.text();
  out.text = os.str();
  out.exit_code = checks.passed() ? kOk : kCheckFailed;
  return out;
}

CommandResult cmd_verify(const Json& record) {
  CommandResult out;
  if (!record.is_object()) throw ParseError("record must be a JSON object");
  if (record.empty() || !record.contains("terms") || record.at("terms").empty()) {
    out.warnings.push_back("record has no prepotential terms; all checks pass vacuously");
    out.record = {{"checks", {{"wdvv", "pass"}, {"euler", "pass"}, {"integrability", "pass"}}}};
    out.text = "checks:\n  wdvv: pass (vacuous)\n  euler: pass (vacuous)\n  integrability: pass (vacuous)\n";
    return out;
  }
  for (const char* key : {"order", "eta", "flat_degrees", "central_charge"})
    if (!record.contains(key)) throw ParseError(std::string("record is missing '") + key + "'");
  const int order = record.at("order").get<int>();
  const Matrix eta = matrix_from_json(record.at("eta"));
  const std::size_t mu = eta.rows();
  std::vector<Rational> degrees;
  for (const auto& d : record.at("flat_degrees")) degrees.push_back(rational_from_json(d));
  if (degrees.size() != mu) throw ParseError("flat_degrees and eta disagree in size");
  const Rational c_hat = rational_from_json(record.at("central_charge"));
  const SSeries f0 = sseries_from_json(record.at("terms"), mu, order);

  CheckSet checks;
  checks.reports.push_back(wdvv_check(f0, eta, order));
  checks.reports.push_back(euler_check(f0, degrees, c_hat));
  if (record.contains("gradient")) {
    std::vector<SSeries> gradient;
    for (const auto& g : record.at("gradient")) gradient.push_back(sseries_from_json(g, mu, std::max(order - 1, 0)));
    if (gradient.size() != mu) throw ParseError("gradient has the wrong number of components");
    checks.reports.push_back(combined_integrability(f0, gradient, order));
  } else {
    out.warnings.push_back("record has no gradient; integrability is checked on F0 alone");
    CheckReport r;
    r.name = "integrability";
    checks.reports.push_back(r);
  }
  out.record = {{"singularity", record.value("singularity", "")}, {"order", order}, {"checks", checks.verdicts()}};
  if (!checks.passed()) out.record["violations"] = checks.violations();
  out.text = "checks:\n" + checks.text();
  out.exit_code = checks.passed() ? kOk : kCheckFailed;
  return out;
}

CommandResult cmd_mirror(const Target& target, const Catalog& catalog) {
  const auto& f = target.f;
  const auto w = InvertiblePolynomial::from_poly(f.poly(), f.variables());
  const auto wt = transpose(w);
  const auto group = diagonal_symmetries(w);

  std::optional<std::string> wt_name;
  for (const auto& e : catalog.entries()) {
    if (e.variables.size() != wt.size()) continue;
    if (equal_up_to_permutation(e.polynomial, wt.to_poly())) {
      wt_name = e.name;
      break;
    }
  }
  std::vector<Rational> wt_weights;
  std::optional<std::string> wt_error;
  try {
    wt_weights = weights_from_matrix(wt);
  } catch (const Rejection& e) {
    wt_error = e.what();
  }

  Json e_w = Json::array(), gens = Json::array();
  for (const auto& row : w.exponents()) e_w.push_back(row);
  for (const auto& g : group.generators) gens.push_back(rationals(g));

  CommandResult out;
  out.record = {{"singularity", target.name},
                {"W", w.str()},
                {"E_W", std::move(e_w)},
                {"W^T", wt.str()},
                {"transpose_name", wt_name ? Json(*wt_name) : Json(nullptr)},
                {"weights", rationals(weights_from_matrix(w))},
                {"transpose_weights", wt_error ? Json(nullptr) : rationals(wt_weights)},
                {"central_charge", central_charge(f).str()},
                {"aut_order", group.order},
                {"aut_generators", std::move(gens)},
                {"aut_cyclic_orders", group.cyclic_orders},
                {"j_W", rationals(group.j_w)}};
  std::ostringstream os;
  os << "W:              " << w.str() << "\n"
     << "W^T:            " << wt.str() << (wt_name ? "  (" + *wt_name + ")" : std::string()) << "\n"
     << "weights:        " << join(strs(weights_from_matrix(w))) << "\n"
     << "central charge: " << central_charge(f) << "\n"
     << "|Aut(W)|:       " << group.order << "\n"
     << "J_W:            (" << join(strs(group.j_w)) << ")\n";
  for (const auto& g : group.generators) os << "generator:      (" << join(strs(g)) << ")\n";
  if (wt_error) out.warnings.push_back("W^T is not a weight system in range: " + *wt_error);
  out.text = os.str();
  return out;
}

CommandResult cmd_catalog_selftest(const Catalog& catalog) {
  CommandResult out;
  Json rows = Json::array();
  std::ostringstream os;
  bool all = true;
  for (const auto& e : catalog.entries()) {
    Json row = {{"name", e.name}};
    std::vector<std::string> problems;
    try {
      const auto f = e.weighted();
      const auto inferred = infer_weights(e.polynomial);
      if (!inferred || *inferred != e.weights) problems.push_back("listed weights are not the unique weights");
      const Rational c = central_charge(f);
      row["central_charge"] = c.str();
      if (e.expected.central_charge && *e.expected.central_charge != c)
        problems.push_back("central charge " + c.str() + " != expected " + e.expected.central_charge->str());
      const MilnorData md = MilnorData::compute(f);
      row["milnor_number"] = md.mu();
      if (e.expected.milnor_number && *e.expected.milnor_number != static_cast<long>(md.mu()))
        problems.push_back("milnor number " + std::to_string(md.mu()) + " != expected " +
                           std::to_string(*e.expected.milnor_number));
      if (e.expected.transpose_name) {
        const auto w = InvertiblePolynomial::from_poly(e.polynomial, e.variables);
        const Poly wt = transpose(w).to_poly();
        const CatalogEntry* partner = catalog.try_find(*e.expected.transpose_name);
        if (!partner || !equal_up_to_permutation(partner->polynomial, wt))
          problems.push_back("transpose " + wt.str(e.variables) + " is not " + *e.expected.transpose_name);
        row["transpose_name"] = *e.expected.transpose_name;
      }
    } catch (const std::exception& ex) {
      problems.push_back(ex.what());
    }
    row["status"] = verdict(problems.empty());
    if (!problems.empty()) row["problems"] = problems;
    all = all && problems.empty();
    os << e.name << ": " << verdict(problems.empty());
    if (row.contains("central_charge")) os << "  c=" << row["central_charge"].get<std::string>();
    if (row.contains("milnor_number")) os << "  mu=" << row["milnor_number"].get<std::size_t>();
    os << "\n";
    for (const auto& p : problems) os << "  " << p << "\n";
    rows.push_back(std::move(row));
  }
  out.record = {{"entries", std::move(rows)}, {"status", verdict(all)}};
  out.text = os.str();
  out.exit_code = all ? kOk : kCheckFailed;
  return out;
}

}  // namespace primform::cli
