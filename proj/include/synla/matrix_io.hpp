#ifndef SYNLA_MATRIX_IO_HPP
#define SYNLA_MATRIX_IO_HPP

#include <string>
#include <vector>

#include "synla/symmat.hpp"
#include "synla/vlcert.hpp"

namespace synla {

/// The matrix file document: {"n": <int>, "matrices": [{"name": ...,
/// "rows": [[...], ...]}, ...]}, row-major decimal floats. Symmetry is
/// enforced on load by the SymMatrix construction rule.
struct MatrixFile {
  int n = 0;
  std::vector<NamedMatrix> matrices;
};

MatrixFile load_matrix_file(const std::string& path,
                            const TolerancePolicy& tol = {});
MatrixFile parse_matrix_document(const std::string& text,
                                 const TolerancePolicy& tol = {});

void save_matrix_file(const std::string& path, const MatrixFile& file);
std::string matrix_document_text(const MatrixFile& file);

}  // namespace synla

#endif  // SYNLA_MATRIX_IO_HPP
