#include "synla/matrix_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace synla {

namespace {
using nlohmann::json;
}

MatrixFile parse_matrix_document(const std::string& text,
                                 const TolerancePolicy& tol) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(std::string("matrix file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("matrices") ||
      !doc["n"].is_number_integer() || !doc["matrices"].is_array()) {
    throw ParseError("matrix file: expected {\"n\": int, \"matrices\": [...]}");
  }
  MatrixFile file;
  file.n = doc["n"].get<int>();
  if (file.n < 1) throw ParseError("matrix file: n must be >= 1");

  for (const auto& entry : doc["matrices"]) {
    if (!entry.is_object() || !entry.contains("name") ||
        !entry.contains("rows") || !entry["name"].is_string() ||
        !entry["rows"].is_array()) {
      throw ParseError("matrix file: each matrix needs \"name\" and \"rows\"");
    }
    const auto& rows = entry["rows"];
    if (static_cast<int>(rows.size()) != file.n) {
      throw ParseError("matrix file: matrix '" +
                       entry["name"].get<std::string>() + "' must have " +
                       std::to_string(file.n) + " rows");
    }
    Eigen::MatrixXd m(file.n, file.n);
    for (int i = 0; i < file.n; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (!row.is_array() || static_cast<int>(row.size()) != file.n) {
        throw ParseError("matrix file: ragged rows in '" +
                         entry["name"].get<std::string>() + "'");
      }
      for (int j = 0; j < file.n; ++j) {
        const auto& cell = row[static_cast<std::size_t>(j)];
        if (!cell.is_number()) {
          throw ParseError("matrix file: non-numeric entry in '" +
                           entry["name"].get<std::string>() + "'");
        }
        m(i, j) = cell.get<double>();
      }
    }
    try {
      file.matrices.push_back({entry["name"].get<std::string>(),
                               SymMatrix(m, tol)});
    } catch (const Error& e) {
      throw ParseError("matrix file: '" + entry["name"].get<std::string>() +
                       "': " + e.what());
    }
  }
  return file;
}

MatrixFile load_matrix_file(const std::string& path,
                            const TolerancePolicy& tol) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_matrix_document(buf.str(), tol);
}

std::string matrix_document_text(const MatrixFile& file) {
  json doc;
  doc["n"] = file.n;
  doc["matrices"] = json::array();
  for (const auto& named : file.matrices) {
    json rows = json::array();
    for (int i = 0; i < file.n; ++i) {
      json row = json::array();
      for (int j = 0; j < file.n; ++j) row.push_back(named.matrix(i, j));
      rows.push_back(std::move(row));
    }
    doc["matrices"].push_back({{"name", named.name}, {"rows", std::move(rows)}});
  }
  return doc.dump(2);
}

void save_matrix_file(const std::string& path, const MatrixFile& file) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write matrix file: " + path);
  out << matrix_document_text(file) << "\n";
}

}  // namespace synla
