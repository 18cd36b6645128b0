#pragma once

#include <optional>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "forestdist/family.hpp"

namespace forestdist {

/// 9 significant digits; infinity prints as "inf".
std::string format_sig9(double x);

/// Rounds through the 9-significant-digit text form, so CSV and JSON carry
/// identical values.
double quantize_sig9(double x);

struct MatrixLabel {
  std::string kind;
  std::optional<double> alpha;
  std::optional<FamilyConfig> family;
};

/// CSV: header row v1..vn, then n rows of n values at 9 significant digits.
std::string matrix_to_csv(const Matrix& m);

/// JSON object {n, kind, alpha, family, distances}; missing alpha/family
/// encode as null, +infinity as the string "inf".
nlohmann::json matrix_to_json(const Matrix& m, const MatrixLabel& label);

Matrix matrix_from_csv(const std::string& text);
Matrix matrix_from_json(const nlohmann::json& j);

std::string gamma_rule_name(const GammaRule& rule);

}  // namespace forestdist
