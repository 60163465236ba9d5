#include "projcalc/harness/serialize.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "projcalc/errors.hpp"

namespace projcalc::harness {

namespace {

json header(BackendKind kind, std::size_t rows, std::size_t cols) {
  return json{{"schema", kSchema}, {"backend", to_string(kind)}, {"rows", rows}, {"cols", cols}};
}

void check_shape(const json& j, std::size_t& rows, std::size_t& cols) {
  if (!j.is_object() || !j.contains("data")) throw ParseError("matrix object needs a data field");
  if (j.contains("schema") && j.at("schema") != kSchema) throw ParseError("unsupported schema");
  const json& data = j.at("data");
  if (!data.is_array()) throw ParseError("data must be an array of rows");
  rows = data.size();
  cols = rows == 0 ? 0 : data.front().size();
  if (j.contains("rows") && j.at("rows").get<std::size_t>() != rows) throw ParseError("rows field disagrees with data");
  if (j.contains("cols") && j.at("cols").get<std::size_t>() != cols) throw ParseError("cols field disagrees with data");
  for (const auto& row : data) {
    if (!row.is_array() || row.size() != cols) throw ParseError("ragged matrix data");
  }
}

}  // namespace

json to_json(const exact::ExactMatrix& m) {
  json j = header(BackendKind::exact, m.rows(), m.cols());
  json data = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(i, c).to_string());
    data.push_back(std::move(row));
  }
  j["data"] = std::move(data);
  return j;
}

json to_json(const floating::FloatMatrix& m) {
  json j = header(BackendKind::floating, static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  json data = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(json{{"re", m(i, c).real()}, {"im", m(i, c).imag()}});
    data.push_back(std::move(row));
  }
  j["data"] = std::move(data);
  return j;
}

BackendKind parse_backend(std::string_view name) {
  if (name == "exact") return BackendKind::exact;
  if (name == "float") return BackendKind::floating;
  throw ParseError("unknown backend '" + std::string(name) + "'");
}

BackendKind backend_of(const json& matrix) {
  if (!matrix.contains("backend")) throw ParseError("matrix object needs a backend field");
  return parse_backend(matrix.at("backend").get<std::string>());
}

exact::ExactMatrix exact_matrix_from_json(const json& j) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  check_shape(j, rows, cols);
  exact::ExactMatrix m(rows, cols);
  const json& data = j.at("data");
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t c = 0; c < cols; ++c) {
      const json& e = data[i][c];
      if (e.is_string()) {
        m(i, c) = exact::GaussianRational::parse(e.get<std::string>());
      } else if (e.is_number_integer()) {
        m(i, c) = exact::GaussianRational(e.get<long>());
      } else {
        throw ParseError("exact entries must be strings like \"1/2+-3/4i\"");
      }
    }
  }
  return m;
}

floating::FloatMatrix float_matrix_from_json(const json& j) {
  std::size_t rows = 0;
  std::size_t cols = 0;
  check_shape(j, rows, cols);
  floating::FloatMatrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  const json& data = j.at("data");
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t c = 0; c < cols; ++c) {
      const json& e = data[i][c];
      double re = 0.0;
      double im = 0.0;
      if (e.is_object()) {
        re = e.at("re").get<double>();
        im = e.value("im", 0.0);
      } else if (e.is_number()) {
        re = e.get<double>();
      } else {
        throw ParseError("float entries must be {\"re\": x, \"im\": y}");
      }
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(c)) = floating::Complex(re, im);
    }
  }
  if (!floating::all_finite(m)) throw ParseError("float matrix has non-finite entries");
  return m;
}

AnyMatrix matrix_from_json(const json& j) {
  if (backend_of(j) == BackendKind::exact) return exact_matrix_from_json(j);
  return float_matrix_from_json(j);
}

std::string fingerprint(const json& j) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : j.dump()) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

json to_json(const TheoremReport& r) {
  json j{{"schema", kSchema},
         {"kind", "result"},
         {"statement", r.statement_id},
         {"verdict", to_string(r.verdict)},
         {"residuals", r.residuals},
         {"diagnostics", r.diagnostics},
         {"hypothesis_flags", r.hypothesis_flags},
         {"claims", r.claims},
         {"pair_fingerprint", r.pair_fingerprint},
         {"seed_path", r.seed_path}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << j.dump(2) << '\n';
  if (!out) throw Error("write to '" + path + "' failed");
}

}  // namespace projcalc::harness
