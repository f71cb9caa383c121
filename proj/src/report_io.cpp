#include "cuntzli/report_io.hpp"

#include <json.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace cuntzli {

namespace {

Int parse_int_token(const std::string& token) {
  if (token.empty()) throw ParseError("empty integer token");
  size_t start = (token[0] == '+' || token[0] == '-') ? 1 : 0;
  if (start == token.size()) throw ParseError("malformed integer '" + token + "'");
  for (size_t i = start; i < token.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(token[i])))
      throw ParseError("malformed integer '" + token + "'");
  }
  return Int(token);
}

IntMatrix parse_matrix_json(const std::string& source) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(source);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("matrix") || !doc["matrix"].is_array())
    throw ParseError("expected a JSON object with a \"matrix\" array");
  const auto& rows = doc["matrix"];
  const Index d = static_cast<Index>(rows.size());
  if (d == 0) throw ParseError("matrix must have at least one row");
  IntMatrix m(d, d);
  for (Index i = 0; i < d; ++i) {
    const auto& row = rows[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != d)
      throw ParseError("matrix must be square with equal-length rows");
    for (Index j = 0; j < d; ++j) {
      const auto& cell = row[static_cast<size_t>(j)];
      if (cell.is_number_integer()) {
        m(i, j) = Int(cell.get<long long>());
      } else if (cell.is_number_unsigned()) {
        m(i, j) = Int(cell.get<unsigned long long>());
      } else if (cell.is_string()) {
        m(i, j) = parse_int_token(cell.get<std::string>());
      } else {
        // floats are rejected: they may have silently lost precision
        throw ParseError("matrix entries must be integers or decimal strings");
      }
    }
  }
  return m;
}

IntMatrix parse_matrix_text(const std::string& source) {
  std::istringstream in(source);
  long long d = 0;
  if (!(in >> d) || d < 1) throw ParseError("first token must be the positive dimension d");
  IntMatrix m(static_cast<Index>(d), static_cast<Index>(d));
  std::string token;
  for (Index i = 0; i < m.rows(); ++i) {
    for (Index j = 0; j < m.cols(); ++j) {
      if (!(in >> token))
        throw ParseError("expected " + std::to_string(d * d) + " matrix entries");
      m(i, j) = parse_int_token(token);
    }
  }
  if (in >> token) throw ParseError("trailing input after matrix entries");
  return m;
}

std::string format_complex(const std::complex<double>& z) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.6g%+.6gi", z.real(), z.imag());
  return buffer;
}

nlohmann::ordered_json group_to_json(const FinAbGroup& g) {
  nlohmann::ordered_json j;
  j["rank"] = g.free_rank;
  auto torsion = nlohmann::ordered_json::array();
  for (const Int& t : g.torsion) torsion.push_back(t.str());
  j["torsion"] = std::move(torsion);
  return j;
}

}  // namespace

IntMatrix parse_input(const std::string& source) {
  for (char c : source) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') return parse_matrix_json(source);
    break;
  }
  return parse_matrix_text(source);
}

IntMatrix load_input(const std::string& path_or_dash) {
  std::string content;
  if (path_or_dash == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    content = buffer.str();
  } else {
    std::ifstream file(path_or_dash);
    if (!file) throw ParseError("cannot read input '" + path_or_dash + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    content = buffer.str();
  }
  return parse_input(content);
}

std::string render_text(const DilationReport& certification, const KTheoryReport* a_form,
                        std::optional<bool> cross_passed) {
  std::ostringstream out;
  const int d = certification.char_poly.degree();
  out << "dimension: " << d << "\n";
  out << "det: " << certification.det.str() << "\n";
  out << "char poly: " << certification.char_poly.to_string() << "\n";
  if (!certification.approx_eigenvalues.empty()) {
    out << "eigenvalues (approx, informational): ";
    for (size_t i = 0; i < certification.approx_eigenvalues.size(); ++i) {
      if (i > 0) out << ", ";
      out << format_complex(certification.approx_eigenvalues[i]);
    }
    out << "\n";
  }
  if (!certification.is_dilation) {
    out << "dilation: rejected (" << to_string(*certification.rejection_reason) << ")\n";
    return out.str();
  }
  out << "dilation: certified (eps = " << (certification.det_sign > 0 ? "+1" : "-1") << ")\n";
  if (a_form != nullptr) {
    out << "per degree, matrix 1 - eps*A_n:\n";
    for (const DegreeEntry& entry : a_form->per_degree) {
      out << "  n=" << entry.n << "  size=" << entry.matrix.rows() << "  invariant factors: [";
      for (size_t i = 0; i < entry.factors.size(); ++i) {
        if (i > 0) out << ", ";
        out << entry.factors[i].str();
      }
      out << "]  coker: " << to_string(entry.coker) << "\n";
    }
    out << "K0 = " << to_string(a_form->k0) << "\n";
    out << "K1 = " << to_string(a_form->k1) << "\n";
  }
  if (cross_passed.has_value()) {
    out << "cross-check (A_n-form vs B_n-form): " << (*cross_passed ? "passed" : "FAILED")
        << "\n";
  }
  return out.str();
}

std::string render_json(const DilationReport& certification, const KTheoryReport* a_form,
                        std::optional<bool> cross_passed, bool emit_matrices) {
  nlohmann::ordered_json j;
  j["dimension"] = certification.char_poly.degree();
  j["det"] = certification.det.str();
  j["det_sign"] = certification.det_sign;
  j["is_dilation"] = certification.is_dilation;
  if (certification.rejection_reason.has_value()) {
    j["rejection_reason"] = to_string(*certification.rejection_reason);
  } else {
    j["rejection_reason"] = nullptr;
  }
  auto eigenvalues = nlohmann::ordered_json::array();
  for (const auto& z : certification.approx_eigenvalues) {
    nlohmann::ordered_json entry;
    entry["re"] = z.real();
    entry["im"] = z.imag();
    eigenvalues.push_back(std::move(entry));
  }
  j["approx_eigenvalues"] = std::move(eigenvalues);

  auto per_degree = nlohmann::ordered_json::array();
  if (a_form != nullptr) {
    for (const DegreeEntry& entry : a_form->per_degree) {
      nlohmann::ordered_json item;
      item["n"] = entry.n;
      item["size"] = entry.matrix.rows();
      if (emit_matrices) {
        auto matrix = nlohmann::ordered_json::array();
        for (Index r = 0; r < entry.matrix.rows(); ++r) {
          auto row = nlohmann::ordered_json::array();
          for (Index c = 0; c < entry.matrix.cols(); ++c) row.push_back(entry.matrix(r, c).str());
          matrix.push_back(std::move(row));
        }
        item["matrix"] = std::move(matrix);
      }
      auto factors = nlohmann::ordered_json::array();
      for (const Int& f : entry.factors) factors.push_back(f.str());
      item["invariant_factors"] = std::move(factors);
      per_degree.push_back(std::move(item));
    }
  }
  j["per_degree"] = std::move(per_degree);
  j["k0"] = a_form != nullptr ? group_to_json(a_form->k0) : nlohmann::ordered_json(nullptr);
  j["k1"] = a_form != nullptr ? group_to_json(a_form->k1) : nlohmann::ordered_json(nullptr);
  nlohmann::ordered_json cross;
  cross["performed"] = cross_passed.has_value();
  cross["passed"] = cross_passed.has_value() ? nlohmann::ordered_json(*cross_passed)
                                             : nlohmann::ordered_json(nullptr);
  j["cross_check"] = std::move(cross);
  return j.dump(2) + "\n";
}

int run_compute(const RunConfig& config, std::ostream& out, std::ostream& err) {
  IntMatrix matrix;
  try {
    matrix = load_input(config.input);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  }

  const int d = static_cast<int>(matrix.rows());
  if (binomial(d, d / 2) > config.max_degree_size) {
    err << "size guard: binomial(" << d << ", " << d / 2 << ") = "
        << binomial(d, d / 2).str() << " exceeds --max-size " << config.max_degree_size << "\n";
    return kExitSizeGuard;
  }

  const auto render = [&](const DilationReport& certification, const KTheoryReport* a_form,
                          std::optional<bool> cross_passed) {
    if (config.format == RunConfig::Format::Json) {
      out << render_json(certification, a_form, cross_passed, config.emit_matrices);
    } else {
      out << render_text(certification, a_form, cross_passed);
    }
  };

  try {
    const CertifiedDilation a = CertifiedDilation::certify(matrix);
    const KTheoryReport a_form = k_groups(a);
    std::optional<bool> cross_passed;
    if (config.with_cross_check) {
      cross_passed = cross_check_reports(a_form, k_groups_via_b(a));
    }
    render(a.report(), &a_form, cross_passed);
    return kExitSuccess;
  } catch (const NotDilationError& e) {
    render(e.report(), nullptr, std::nullopt);
    return kExitRejected;
  }
}

int run_check(const std::string& path_or_dash, std::ostream& out, std::ostream& err) {
  IntMatrix matrix;
  try {
    matrix = load_input(path_or_dash);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParseError;
  }
  const DilationReport report = certify_dilation(matrix);
  out << render_text(report, nullptr, std::nullopt);
  return report.is_dilation ? kExitSuccess : kExitRejected;
}

}  // namespace cuntzli
