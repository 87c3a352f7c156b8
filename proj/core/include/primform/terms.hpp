#pragma once

#include <map>

#include "primform/monomial.hpp"
#include "primform/rational.hpp"

namespace primform::detail {

/// Sparse coefficient map in canonical (graded-lex ascending) order.
using TermMap = std::map<Monomial, Rational, GrlexLess>;

/// dst[m] += c, erasing the entry when it cancels.
void add_term(TermMap& dst, const Monomial& m, const Rational& c);
void add_scaled(TermMap& dst, const TermMap& src, const Rational& c);
/// Product keeping only terms of total degree <= max_degree (no cap when < 0).
TermMap multiply(const TermMap& a, const TermMap& b, int max_degree);

}  // namespace primform::detail
