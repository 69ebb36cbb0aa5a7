#include "multimom/render.hpp"

#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace multimom {

namespace {

void append_m_part(std::string& out, MBasis basis, unsigned degree,
                   bool latex) {
  if (degree == 0) return;
  if (!out.empty()) out += ' ';
  if (degree == 1) {
    out += 'm';
  } else if (basis == MBasis::falling) {
    out += latex ? "m^{(" + std::to_string(degree) + ")}"
                 : "m^(" + std::to_string(degree) + ")";
  } else {
    out += latex ? "m^{" + std::to_string(degree) + "}"
                 : "m^" + std::to_string(degree);
  }
}

void append_x_part(std::string& out, const Monomial& monomial, bool latex) {
  for (std::size_t i = 0; i < monomial.size(); ++i) {
    if (monomial[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += latex ? "x_{" + std::to_string(i + 1) + "}"
                 : "x" + std::to_string(i + 1);
    if (monomial[i] > 1) {
      out += latex ? "^{" + std::to_string(monomial[i]) + "}"
                   : "^" + std::to_string(monomial[i]);
    }
  }
}

template <MBasis Basis>
std::string render_linear(const Poly<Basis>& poly, bool latex) {
  if (poly.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : poly.terms()) {
    const bool negative = coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;

    std::string factors;
    append_m_part(factors, Basis, key.m_degree, latex);
    append_x_part(factors, key.monomial, latex);

    const Integer magnitude = abs(coeff);
    if (magnitude != 1 || factors.empty()) {
      out += magnitude.get_str();
      if (!factors.empty()) out += ' ';
    }
    out += factors;
  }
  return out;
}

template <MBasis Basis>
std::string render_json(const Poly<Basis>& poly) {
  nlohmann::ordered_json doc;
  doc["pattern"] = poly.pattern().exponents();
  doc["central"] = poly.central();
  doc["basis"] = Basis == MBasis::falling ? "falling" : "ordinary";
  doc["terms"] = nlohmann::ordered_json::array();
  for (const auto& [key, coeff] : poly.terms()) {
    nlohmann::ordered_json term;
    term["m_degree"] = key.m_degree;
    term["monomial"] = key.monomial;
    term["coeff"] = coeff.get_str();
    doc["terms"].push_back(std::move(term));
  }
  return doc.dump();
}

template <MBasis Basis>
std::string render_impl(const Poly<Basis>& poly, RenderFormat format) {
  switch (format) {
    case RenderFormat::text:
      return render_linear(poly, /*latex=*/false);
    case RenderFormat::latex:
      return render_linear(poly, /*latex=*/true);
    case RenderFormat::json:
      return render_json(poly);
  }
  throw std::invalid_argument("unknown render format");
}

template <MBasis Basis>
Poly<Basis> poly_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed formula JSON: ") +
                                e.what());
  }
  const std::string want = Basis == MBasis::falling ? "falling" : "ordinary";
  try {
    if (doc.at("basis").get<std::string>() != want) {
      throw std::invalid_argument("formula JSON has basis \"" +
                                  doc.at("basis").get<std::string>() +
                                  "\", expected \"" + want + "\"");
    }
    Pattern pattern(doc.at("pattern").get<std::vector<unsigned>>());
    Poly<Basis> poly(std::move(pattern), doc.at("central").get<bool>());
    for (const auto& term : doc.at("terms")) {
      poly.add(term.at("m_degree").get<unsigned>(),
               term.at("monomial").get<std::vector<unsigned>>(),
               Integer(term.at("coeff").get<std::string>(), 10));
    }
    return poly;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("formula JSON misses a field: ") +
                                e.what());
  }
}

}  // namespace

std::string render(const MomentPoly& poly, RenderFormat format) {
  return render_impl(poly, format);
}

std::string render(const OrdinaryPoly& poly, RenderFormat format) {
  return render_impl(poly, format);
}

MomentPoly moment_poly_from_json(std::string_view json_text) {
  return poly_from_json<MBasis::falling>(json_text);
}

OrdinaryPoly ordinary_poly_from_json(std::string_view json_text) {
  return poly_from_json<MBasis::ordinary>(json_text);
}

}  // namespace multimom
