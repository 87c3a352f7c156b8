#include "primform/mirror.hpp"

#include <algorithm>
#include <numeric>

#include "primform/error.hpp"

namespace primform {

namespace {

using IntMatrix = std::vector<std::vector<std::int64_t>>;

IntMatrix identity_int(std::size_t n) {
  IntMatrix m(n, std::vector<std::int64_t>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

}  // namespace

InvertiblePolynomial::InvertiblePolynomial(std::vector<std::string> variables,
                                           std::vector<std::vector<int>> exponents)
    : variables_(std::move(variables)), exponents_(std::move(exponents)) {
  const std::size_t n = variables_.size();
  if (exponents_.size() != n) throw Rejection("invertible polynomial needs as many monomials as variables");
  for (const auto& row : exponents_) {
    if (row.size() != n) throw Rejection("exponent matrix is not square");
    int total = 0, nonzero = 0;
    for (int e : row) {
      if (e < 0) throw Rejection("negative exponent in exponent matrix");
      total += e;
      nonzero += e > 0;
    }
    if (total == 2 && nonzero == 2) throw Rejection("invertible polynomial may not contain a monomial x_i*x_j");
  }
  if (exponent_matrix().determinant().is_zero()) throw Rejection("exponent matrix is singular");
}

InvertiblePolynomial InvertiblePolynomial::from_poly(const Poly& w, std::vector<std::string> variables) {
  const std::size_t n = variables.size();
  if (w.nvars() != n) throw ContractViolation("from_poly: variable-count mismatch");
  if (w.size() != n)
    throw Rejection("polynomial has " + std::to_string(w.size()) + " monomials but " + std::to_string(n) +
                    " variables; not invertible");
  std::vector<std::vector<int>> monos;
  for (const auto& [m, c] : w.terms()) monos.emplace_back(m.exponents().begin(), m.exponents().end());

  // Pair monomial -> variable: maximize the product of paired exponents.
  std::vector<std::size_t> perm(n), best;
  std::iota(perm.begin(), perm.end(), 0);
  long best_score = 0;
  do {
    long score = 1;
    for (std::size_t v = 0; v < n && score > 0; ++v) score *= monos[perm[v]][v];
    if (score > best_score) {
      best_score = score;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  if (best.empty()) throw Rejection("no pairing of monomials with variables; not invertible");

  std::vector<std::vector<int>> rows;
  for (std::size_t v = 0; v < n; ++v) rows.push_back(monos[best[v]]);
  return InvertiblePolynomial(std::move(variables), std::move(rows));
}

Matrix InvertiblePolynomial::exponent_matrix() const {
  const std::size_t n = size();
  Matrix e(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e(i, j) = Rational(exponents_[i][j]);
  return e;
}

Poly InvertiblePolynomial::to_poly() const {
  Poly p(size());
  for (const auto& row : exponents_) p.add_term(Monomial(row), Rational(1));
  return p;
}

InvertiblePolynomial transpose(const InvertiblePolynomial& w) {
  const std::size_t n = w.size();
  std::vector<std::vector<int>> t(n, std::vector<int>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[i][j] = w.exponents()[j][i];
  return InvertiblePolynomial(w.variables(), std::move(t));
}

std::vector<Rational> weights_from_matrix(const InvertiblePolynomial& w) {
  auto inv = w.exponent_matrix().inverse();
  if (!inv) throw Rejection("exponent matrix is singular");
  std::vector<Rational> q = inv->apply(std::vector<Rational>(w.size(), Rational(1)));
  for (std::size_t i = 0; i < q.size(); ++i)
    if (q[i].sign() <= 0 || q[i] > Rational(1, 2))
      throw Rejection("weight " + q[i].str() + " of " + w.variables()[i] + " is outside (0, 1/2]");
  return q;
}

Rational fractional_part(const Rational& r) {
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.gmp().get_num_mpz_t(), r.gmp().get_den_mpz_t());
  return r - Rational(mpq_class(fl));
}

SmithForm smith_normal_form(const IntMatrix& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  SmithForm s{a, identity_int(rows), identity_int(cols)};
  auto& d = s.d;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : d) std::swap(row[i], row[j]);
    for (auto& row : s.v) std::swap(row[i], row[j]);
  };
  // row_i += k * row_j
  auto add_row = [&](std::size_t i, std::size_t j, std::int64_t k) {
    for (std::size_t c = 0; c < cols; ++c) d[i][c] += k * d[j][c];
    for (std::size_t c = 0; c < rows; ++c) s.u[i][c] += k * s.u[j][c];
  };
  auto add_col = [&](std::size_t i, std::size_t j, std::int64_t k) {
    for (std::size_t r = 0; r < rows; ++r) d[r][i] += k * d[r][j];
    for (std::size_t r = 0; r < cols; ++r) s.v[r][i] += k * s.v[r][j];
  };

  const std::size_t n = std::min(rows, cols);
  for (std::size_t t = 0; t < n; ++t) {
    for (;;) {
      // Smallest nonzero |entry| in the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t r = t; r < rows; ++r)
        for (std::size_t c = t; c < cols; ++c)
          if (d[r][c] != 0 && (pr == rows || std::llabs(d[r][c]) < std::llabs(d[pr][pc]))) {
            pr = r;
            pc = c;
          }
      if (pr == rows) return s;
      swap_rows(t, pr);
      swap_cols(t, pc);
      bool clean = true;
      for (std::size_t r = t + 1; r < rows; ++r) {
        add_row(r, t, -(d[r][t] / d[t][t]));
        clean = clean && d[r][t] == 0;
      }
      for (std::size_t c = t + 1; c < cols; ++c) {
        add_col(c, t, -(d[t][c] / d[t][t]));
        clean = clean && d[t][c] == 0;
      }
      if (!clean) continue;
      // Divisibility: the pivot must divide the rest of the block.
      bool divides = true;
      for (std::size_t r = t + 1; r < rows && divides; ++r)
        for (std::size_t c = t + 1; c < cols; ++c)
          if (d[r][c] % d[t][t] != 0) {
            add_row(t, r, 1);
            divides = false;
            break;
          }
      if (divides) break;
    }
    if (d[t][t] < 0) {
      for (std::size_t c = 0; c < cols; ++c) d[t][c] = -d[t][c];
      for (std::size_t c = 0; c < rows; ++c) s.u[t][c] = -s.u[t][c];
    }
  }
  return s;
}

DiagonalSymmetryGroup diagonal_symmetries(const InvertiblePolynomial& w) {
  const std::size_t n = w.size();
  IntMatrix e(n, std::vector<std::int64_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) e[i][j] = w.exponents()[i][j];
  const SmithForm snf = smith_normal_form(e);

  DiagonalSymmetryGroup group;
  // E theta in Z^n  <=>  D (V^-1 theta) in Z^n, so theta = V D^-1 k.
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t di = snf.d[i][i];
    if (di == 0) throw Rejection("exponent matrix is singular");
    group.order *= di;
    if (di == 1) continue;
    std::vector<Rational> theta(n);
    for (std::size_t r = 0; r < n; ++r) theta[r] = fractional_part(Rational(snf.v[r][i], di));
    group.generators.push_back(std::move(theta));
    group.cyclic_orders.push_back(di);
  }
  for (const auto& q : weights_from_matrix(w)) group.j_w.push_back(fractional_part(q));
  return group;
}

bool equal_up_to_permutation(const Poly& a, const Poly& b) {
  if (a.nvars() != b.nvars() || a.size() != b.size()) return false;
  const std::size_t n = a.nvars();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    Poly renamed(n);
    for (const auto& [m, c] : a.terms()) {
      std::vector<int> e(n);
      for (std::size_t i = 0; i < n; ++i) e[perm[i]] = m[i];
      renamed.add_term(Monomial(e), c);
    }
    if (renamed == b) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace primform
