#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "uecsm/matrix.hpp"

namespace uecsm::cli {

enum class InputErrorKind { Parse, NonSquare };

/// Malformed matrix input. Line and column are 1-based; 0 when unknown.
class InputError : public std::runtime_error {
public:
    InputError(InputErrorKind kind, const std::string& message, std::size_t line = 0,
               std::size_t column = 0);

    [[nodiscard]] InputErrorKind kind() const noexcept { return kind_; }
    [[nodiscard]] std::size_t line() const noexcept { return line_; }
    [[nodiscard]] std::size_t column() const noexcept { return column_; }

private:
    InputErrorKind kind_;
    std::size_t line_;
    std::size_t column_;
};

struct MatrixDocument {
    ComplexMatrix matrix;

    [[nodiscard]] std::size_t n() const noexcept { return matrix.dim(); }
};

enum class InputFormat { Auto, Text, Json };

/// Text: rows separated by ';' or newlines, entries by whitespace, '#'
/// starts a comment. Entries are `a`, `bi`, `a+bi`, `a-bi`; `i` alone is 1i.
/// A lone `+`/`-` between two tokens joins them ("1 + 2i").
/// Json: {"n": int, "re": [[...]], "im": [[...]]}; "im" may be omitted.
/// Auto picks Json when the first non-blank character is '{'.
[[nodiscard]] MatrixDocument parse_matrix(std::string_view text, InputFormat format = InputFormat::Auto);

/// Single complex literal; throws InputError (line/column 0).
[[nodiscard]] Complex parse_complex(std::string_view token);

/// Shortest-or-17-digit rendering accepted by parse_complex.
[[nodiscard]] std::string format_complex(Complex z);
[[nodiscard]] std::string format_real(double x);

/// One row per line, ';' terminated; parse_matrix reads it back bit-exactly.
[[nodiscard]] std::string format_matrix_text(const ComplexMatrix& m, std::string_view indent = "");

[[nodiscard]] nlohmann::json matrix_to_json(const ComplexMatrix& m);
[[nodiscard]] ComplexMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace uecsm::cli
