#pragma once

// Text matrix files:
//
//   field <real|complex|rational|gf> [p] rows <m> cols <n>
//   a11 a12 ... a1n
//   ...
//   am1 am2 ... amn
//
// Scalars use the syntax of parse_scalar(): -1.25, 3/4, 1-2i, residues.

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "kronroot/matrix.hpp"

namespace kronroot {

/// Parse the `field ...` portion of a header (also used for CLI input).
FieldKind parse_field(std::string_view name, std::string_view modulus = {});

Matrix read_matrix(std::istream& in);
Matrix read_matrix(std::string_view text);
Matrix read_matrix_file(const std::filesystem::path& path);

void write_matrix(std::ostream& out, const Matrix& M);
std::string format_matrix(const Matrix& M);
void write_matrix_file(const std::filesystem::path& path, const Matrix& M);

}  // namespace kronroot
