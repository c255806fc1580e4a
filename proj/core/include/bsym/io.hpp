#pragma once

#include "bsym/linear_code.hpp"
#include "bsym/matrix_product.hpp"

#include <filesystem>
#include <iosfwd>

// Text formats. '#' starts a comment that runs to the end of the line.
//
// Matrix:   "q rows cols" followed by `rows` lines of `cols` canonical integers;
//           q is written "p^e" for extension fields and as a plain integer otherwise.
// Code:     a tag line "G" (generator) or "H" (parity check) followed by a matrix.
// Product:  a tag line "A" followed by the M x N mixing matrix, then M code blocks.

namespace bsym {

enum class CodeTag { Generator, ParityCheck };

Matrix read_matrix(std::istream& in);
void write_matrix(std::ostream& out, const Matrix& m);

/// Throws ParseError on malformed input or when the file describes the zero code.
LinearCode read_code(std::istream& in);
void write_code(std::ostream& out, const LinearCode& code, CodeTag tag = CodeTag::Generator);

MatrixProductSpec read_matrix_product_spec(std::istream& in);
void write_matrix_product_spec(std::ostream& out, const MatrixProductSpec& spec);

LinearCode load_code(const std::filesystem::path& path);
MatrixProductSpec load_matrix_product_spec(const std::filesystem::path& path);

} // namespace bsym
