#include "kronroot/matrix_io.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <vector>

namespace kronroot {
namespace {

std::vector<std::string> split_tokens(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> tokens;
  for (std::string tok; ss >> tok;) tokens.push_back(tok);
  return tokens;
}

Index parse_dimension(const std::string& text, const char* what) {
  if (text.empty() || text.size() > 9 ||
      text.find_first_not_of("0123456789") != std::string::npos) {
    throw ParseError(std::string("invalid ") + what + " count '" + text + "'");
  }
  const Index value = std::stoul(text);
  if (value == 0) throw ParseError(std::string(what) + " count must be positive");
  return value;
}

bool blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

FieldKind parse_field(std::string_view name, std::string_view modulus) {
  if (name == "gf") {
    if (modulus.empty() || modulus.size() > 5 ||
        modulus.find_first_not_of("0123456789") != std::string_view::npos) {
      throw ParseError("field gf requires a decimal modulus");
    }
    const auto p = std::stoul(std::string(modulus));
    try {
      return FieldKind::prime(static_cast<std::uint32_t>(p));
    } catch (const FieldError& e) {
      throw ParseError(e.what());
    }
  }
  if (!modulus.empty()) {
    throw ParseError("field " + std::string(name) + " does not take a modulus");
  }
  if (name == "real") return FieldKind::real();
  if (name == "complex") return FieldKind::complex();
  if (name == "rational") return FieldKind::rational();
  throw ParseError("unknown field '" + std::string(name) + "'");
}

Matrix read_matrix(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty matrix file");
  const auto header = split_tokens(line);
  // field <kind> [p] rows <m> cols <n>
  const bool has_modulus = header.size() == 7;
  if ((header.size() != 6 && header.size() != 7) || header[0] != "field") {
    throw ParseError("malformed header '" + line + "'");
  }
  const std::size_t at = has_modulus ? 3 : 2;
  if (header[at] != "rows" || header[at + 2] != "cols") {
    throw ParseError("malformed header '" + line + "'");
  }
  const FieldKind field = parse_field(header[1], has_modulus ? header[2] : std::string());
  const Index m = parse_dimension(header[at + 1], "row");
  const Index n = parse_dimension(header[at + 3], "column");
  if (n > Matrix::kMaxEntries / m) throw SizeLimitError("matrix file exceeds the entry cap");

  Matrix out(m, n, field);
  Index i = 0;
  while (std::getline(in, line)) {
    if (blank(line)) continue;
    if (i == m) throw ParseError("more than " + std::to_string(m) + " rows");
    const auto tokens = split_tokens(line);
    if (tokens.size() != n) {
      throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(tokens.size()) +
                       " entries, expected " + std::to_string(n));
    }
    for (Index j = 0; j < n; ++j) out.set(i, j, parse_scalar(field, tokens[j]));
    ++i;
  }
  if (i != m) {
    throw ParseError("expected " + std::to_string(m) + " rows, found " + std::to_string(i));
  }
  return out;
}

Matrix read_matrix(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_matrix(in);
}

Matrix read_matrix_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path.string() + "'");
  return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& M) {
  const auto& field = M.field();
  out << "field ";
  if (field.tag() == FieldTag::PrimeField) {
    out << "gf " << field.modulus();
  } else {
    out << field.name();
  }
  out << " rows " << M.rows() << " cols " << M.cols() << '\n';
  for (Index i = 0; i < M.rows(); ++i) {
    for (Index j = 0; j < M.cols(); ++j) {
      if (j > 0) out << ' ';
      out << M(i, j).to_string();
    }
    out << '\n';
  }
}

std::string format_matrix(const Matrix& M) {
  std::ostringstream out;
  write_matrix(out, M);
  return out.str();
}

void write_matrix_file(const std::filesystem::path& path, const Matrix& M) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  write_matrix(out, M);
  if (!out) throw Error("write to '" + path.string() + "' failed");
}

}  // namespace kronroot
