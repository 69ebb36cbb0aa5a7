#pragma once

#include <string>
#include <string_view>

#include "multimom/moment_poly.hpp"

namespace multimom {

enum class RenderFormat { text, latex, json };

/// Deterministic rendering in canonical term order.
///   text : "m x1 + 3 m^(2) x1^2" (falling powers as m^(k), ordinary as m^k)
///   latex: "m x_{1} + 3 m^{(2)} x_{1}^{2}"
///   json : single-line object, schema below
///
/// JSON schema (shared by both bases, terms in canonical order):
/// {"pattern":[p1,...],"central":bool,"basis":"falling"|"ordinary",
///  "terms":[{"m_degree":k,"monomial":[e1,...],"coeff":"<decimal string>"},...]}
std::string render(const MomentPoly& poly, RenderFormat format);
std::string render(const OrdinaryPoly& poly, RenderFormat format);

/// Parse a schema JSON document back into a polynomial. Throws
/// std::invalid_argument on malformed documents or a basis mismatch.
MomentPoly moment_poly_from_json(std::string_view json_text);
OrdinaryPoly ordinary_poly_from_json(std::string_view json_text);

}  // namespace multimom
