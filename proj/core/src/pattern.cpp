#include "multimom/pattern.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace multimom {

Pattern::Pattern(std::vector<unsigned> exps) : exps_(std::move(exps)) {
  if (exps_.empty()) {
    throw std::invalid_argument("pattern must have at least one exponent");
  }
  for (unsigned e : exps_) {
    if (e == 0) {
      throw std::invalid_argument(
          "pattern exponents must be positive; drop zero entries instead");
    }
  }
  std::sort(exps_.begin(), exps_.end(), std::greater<>());
}

std::string Pattern::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (i > 0) out += ",";
    out += std::to_string(exps_[i]);
  }
  out += ")";
  return out;
}

namespace {

void emit_partitions(unsigned remaining, unsigned max_part,
                     std::vector<unsigned>& prefix,
                     std::vector<Pattern>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (unsigned part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    emit_partitions(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<Pattern> patterns_up_to(unsigned max_order) {
  std::vector<Pattern> out;
  std::vector<unsigned> prefix;
  for (unsigned order = 1; order <= max_order; ++order) {
    emit_partitions(order, order, prefix, out);
  }
  return out;
}

}  // namespace multimom
