#include "forestdist/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

namespace forestdist {

std::string format_sig9(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.9g", x);
  return buf;
}

double quantize_sig9(double x) {
  if (!std::isfinite(x)) return x;
  return std::strtod(format_sig9(x).c_str(), nullptr);
}

std::string matrix_to_csv(const Matrix& m) {
  std::ostringstream out;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    out << (j ? "," : "") << 'v' << (j + 1);
  out << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out << (j ? "," : "") << format_sig9(m(i, j));
    out << '\n';
  }
  return out.str();
}

std::string gamma_rule_name(const GammaRule& rule) {
  switch (rule.kind) {
    case GammaRule::Kind::Formula13: return "formula13";
    case GammaRule::Kind::One: return "one";
    case GammaRule::Kind::Interpolating: return "interpolating:" + format_sig9(rule.param);
    case GammaRule::Kind::Constant: return "constant:" + format_sig9(rule.param);
  }
  return "?";
}

nlohmann::json matrix_to_json(const Matrix& m, const MatrixLabel& label) {
  nlohmann::json j;
  j["n"] = m.rows();
  j["kind"] = label.kind;
  j["alpha"] = label.alpha ? nlohmann::json(*label.alpha) : nlohmann::json(nullptr);
  if (label.family) {
    j["family"] = {{"transform", transform_name(label.family->transform)},
                   {"hvariant", h_variant_name(label.family->h_variant)},
                   {"gamma", gamma_rule_name(label.family->gamma)}};
  } else {
    j["family"] = nullptr;
  }
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index jx = 0; jx < m.cols(); ++jx) {
      const double v = m(i, jx);
      if (std::isinf(v))
        row.push_back("inf");
      else
        row.push_back(quantize_sig9(v));
    }
    rows.push_back(std::move(row));
  }
  j["distances"] = std::move(rows);
  return j;
}

Matrix matrix_from_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::vector<double>> rows;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<double> row;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) {
      if (cell == "inf")
        row.push_back(std::numeric_limits<double>::infinity());
      else
        row.push_back(std::strtod(cell.c_str(), nullptr));
    }
    rows.push_back(std::move(row));
  }
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    if (static_cast<Eigen::Index>(rows[i].size()) != n)
      throw ParseError("csv matrix is not square");
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

Matrix matrix_from_json(const nlohmann::json& j) {
  const auto& rows = j.at("distances");
  const auto n = static_cast<Eigen::Index>(rows.size());
  Matrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto& row = rows.at(i);
    if (static_cast<Eigen::Index>(row.size()) != n)
      throw ParseError("json matrix is not square");
    for (Eigen::Index k = 0; k < n; ++k) {
      const auto& cell = row.at(k);
      m(i, k) = cell.is_string() ? std::numeric_limits<double>::infinity()
                                 : cell.get<double>();
    }
  }
  return m;
}

}  // namespace forestdist
