#include "primform/serialize.hpp"

#include "primform/error.hpp"

namespace primform {

namespace {

Json terms_to_json(const detail::TermMap& terms) {
  Json out = Json::array();
  for (const auto& [m, c] : terms) {
    Json exps = Json::array();
    for (int e : m.exponents()) exps.push_back(e);
    out.push_back({{"exponents", std::move(exps)}, {"coeff", c.str()}});
  }
  return out;
}

template <typename Add>
void terms_from_json(const Json& j, std::size_t n, Add add) {
  if (!j.is_array()) throw ParseError("expected an array of terms");
  for (const auto& t : j) {
    if (!t.is_object() || !t.contains("exponents") || !t.contains("coeff"))
      throw ParseError("term needs 'exponents' and 'coeff'");
    const auto& e = t.at("exponents");
    if (!e.is_array() || e.size() != n)
      throw ParseError("term has " + std::to_string(e.is_array() ? e.size() : 0) + " exponents, expected " +
                       std::to_string(n));
    std::vector<int> exps;
    for (const auto& x : e) {
      if (!x.is_number_integer() || x.get<int>() < 0) throw ParseError("exponent must be a nonnegative integer");
      exps.push_back(x.get<int>());
    }
    add(Monomial(exps), rational_from_json(t.at("coeff")));
  }
}

long get_int(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) throw ParseError(std::string("missing integer '") + key + "'");
  return j.at(key).get<long>();
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw ParseError("rational must be a string \"p/q\"");
  return Rational::parse(j.get<std::string>());
}

Json to_json(const Poly& p) { return terms_to_json(p.terms()); }

Poly poly_from_json(const Json& j, std::size_t nvars) {
  Poly p(nvars);
  terms_from_json(j, nvars, [&](const Monomial& m, const Rational& c) { p.add_term(m, c); });
  return p;
}

Json to_json(const SSeries& s) { return terms_to_json(s.terms()); }

SSeries sseries_from_json(const Json& j, std::size_t nparams, int order) {
  SSeries s(nparams, order);
  terms_from_json(j, nparams, [&](const Monomial& m, const Rational& c) {
    if (static_cast<int>(m.total_degree()) > order) throw ParseError("series term exceeds truncation order");
    s.add_term(m, c);
  });
  return s;
}

Json to_json(const LaurentBlock& b) {
  Json rows = Json::array();
  for (const auto& [m, row] : b.z_terms()) {
    Json comps = Json::array();
    for (const auto& s : row) comps.push_back(to_json(s));
    rows.push_back({{"z", m}, {"components", std::move(comps)}});
  }
  return {{"mu", b.mu()}, {"nparams", b.nparams()}, {"order", b.order()}, {"z_terms", std::move(rows)}};
}

LaurentBlock laurent_from_json(const Json& j) {
  if (!j.is_object()) throw ParseError("Laurent block must be an object");
  const long mu = get_int(j, "mu"), nparams = get_int(j, "nparams"), order = get_int(j, "order");
  if (mu < 0 || nparams < 0 || order < 0) throw ParseError("negative size in Laurent block");
  LaurentBlock b(mu, nparams, order);
  if (!j.contains("z_terms") || !j.at("z_terms").is_array()) throw ParseError("missing 'z_terms'");
  for (const auto& row : j.at("z_terms")) {
    const int m = static_cast<int>(get_int(row, "z"));
    const auto& comps = row.at("components");
    if (!comps.is_array() || comps.size() != static_cast<std::size_t>(mu))
      throw ParseError("z-term row must have mu components");
    for (std::size_t a = 0; a < comps.size(); ++a) b.add(m, a, sseries_from_json(comps[a], nparams, order));
  }
  return b;
}

Json to_json(const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(m(i, k).str());
    rows.push_back(std::move(row));
  }
  return rows;
}

Matrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw ParseError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows ? j[0].size() : 0;
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw ParseError("ragged matrix");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j[i][k]);
  }
  return m;
}

Json to_json(const PrimitiveFormResult& r) {
  return {{"order", r.order}, {"zeta", to_json(r.zeta)}, {"J", to_json(r.J)}};
}

PrimitiveFormResult primitive_result_from_json(const Json& j) {
  PrimitiveFormResult r;
  r.order = static_cast<int>(get_int(j, "order"));
  r.zeta = laurent_from_json(j.at("zeta"));
  r.J = laurent_from_json(j.at("J"));
  return r;
}

}  // namespace primform
