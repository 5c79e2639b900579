#pragma once

#include <string>

#include "bmbp/pencils.hpp"
#include "bmbp/polycore.hpp"
#include "bmbp/spectral.hpp"

namespace bmbp {

// JSON text formats. Complex numbers are [re, im] pairs; matrices are lists of
// rows. Readers accept plain real numbers in place of pairs.

std::string polynomial_to_json(const MatrixPolynomial& P);
MatrixPolynomial polynomial_from_json(const std::string& text);

std::string pencil_to_json(const BlockPencil& L);
BlockPencil pencil_from_json(const std::string& text);

std::string matrix_to_json(const Mat& a);
// A bare matrix or {"matrix": ...}.
Mat matrix_from_json(const std::string& text);

// A bare list of points or {"nodes": [...]}.
NodeSet nodes_from_json(const std::string& text);

std::string solution_to_json(const EigenSolution& sol);
std::string basis_to_json(const PolyVectorBasis& basis);
std::string report_to_json(const VerifyReport& rep);
std::string error_to_json(ErrorCode code, const std::string& message);

std::string read_text_file(const std::string& path);
// Writes to a temporary file next to `path` and renames it into place.
void write_text_atomic(const std::string& path, const std::string& text);

}  // namespace bmbp
