#include "uecsm_cli/matrix_io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <vector>

namespace uecsm::cli {

InputError::InputError(InputErrorKind kind, const std::string& message, std::size_t line,
                       std::size_t column)
    : std::runtime_error(line > 0 ? message + " (line " + std::to_string(line) + ", column " +
                                        std::to_string(column) + ")"
                                  : message),
      kind_(kind),
      line_(line),
      column_(column) {}

namespace {

double parse_real(std::string_view s, std::string_view whole) {
    if (!s.empty() && s.front() == '+') s.remove_prefix(1);
    double value = 0.0;
    const auto* end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, value);
    if (s.empty() || ec != std::errc{} || ptr != end) {
        throw InputError(InputErrorKind::Parse, "invalid number '" + std::string(whole) + "'");
    }
    if (!std::isfinite(value)) {
        throw InputError(InputErrorKind::Parse, "non-finite number '" + std::string(whole) + "'");
    }
    return value;
}

struct Token {
    std::string text;
    std::size_t column = 0;
};

struct Row {
    std::vector<Token> tokens;
    std::size_t line = 0;
};

std::vector<Row> split_rows(std::string_view text) {
    std::vector<Row> rows;
    Row current;
    std::size_t line = 1;
    std::size_t col = 0;
    Token tok;
    bool comment = false;
    auto flush_token = [&] {
        if (!tok.text.empty()) current.tokens.push_back(std::move(tok));
        tok = Token{};
    };
    auto flush_row = [&] {
        flush_token();
        if (!current.tokens.empty()) rows.push_back(std::move(current));
        current = Row{};
    };
    for (const char ch : text) {
        ++col;
        if (ch == '\n') {
            flush_row();
            comment = false;
            ++line;
            col = 0;
            continue;
        }
        if (comment) continue;
        if (ch == '#') {
            comment = true;
            flush_token();
        } else if (ch == ';') {
            flush_row();
        } else if (ch == ' ' || ch == '\t' || ch == '\r' || ch == ',') {
            flush_token();
        } else {
            if (tok.text.empty()) {
                tok.column = col;
                if (current.tokens.empty()) current.line = line;
            }
            tok.text.push_back(ch);
        }
    }
    flush_row();
    return rows;
}

std::vector<Complex> parse_row(const Row& row) {
    std::vector<Complex> out;
    const auto& toks = row.tokens;
    for (std::size_t k = 0; k < toks.size(); ++k) {
        std::string literal = toks[k].text;
        const std::size_t column = toks[k].column;
        while (k + 2 < toks.size() && (toks[k + 1].text == "+" || toks[k + 1].text == "-")) {
            literal += toks[k + 1].text + toks[k + 2].text;
            k += 2;
        }
        if (literal == "+" || literal == "-") {
            throw InputError(InputErrorKind::Parse, "dangling sign", row.line, column);
        }
        try {
            out.push_back(parse_complex(literal));
        } catch (const InputError& e) {
            throw InputError(InputErrorKind::Parse, e.what(), row.line, column);
        }
    }
    return out;
}

ComplexMatrix parse_text(std::string_view text) {
    const std::vector<Row> rows = split_rows(text);
    if (rows.empty()) throw InputError(InputErrorKind::Parse, "empty matrix");
    std::vector<std::vector<Complex>> values;
    for (const auto& row : rows) values.push_back(parse_row(row));
    const std::size_t n = values.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (values[i].size() != n) {
            throw InputError(InputErrorKind::NonSquare,
                             "row " + std::to_string(i + 1) + " has " + std::to_string(values[i].size()) +
                                 " entries, expected " + std::to_string(n),
                             rows[i].line, rows[i].tokens.front().column);
        }
    }
    return ComplexMatrix::from_rows(values);
}

std::vector<std::vector<double>> real_grid(const nlohmann::json& j, const char* key, std::size_t n) {
    const auto& g = j.at(key);
    if (!g.is_array() || g.size() != n) {
        throw InputError(InputErrorKind::NonSquare, std::string("\"") + key + "\" must have n rows");
    }
    std::vector<std::vector<double>> out;
    for (const auto& row : g) {
        if (!row.is_array() || row.size() != n) {
            throw InputError(InputErrorKind::NonSquare, std::string("\"") + key + "\" rows must have n entries");
        }
        std::vector<double> r;
        for (const auto& x : row) {
            if (!x.is_number()) throw InputError(InputErrorKind::Parse, std::string("non-numeric entry in \"") + key + "\"");
            r.push_back(x.get<double>());
        }
        out.push_back(std::move(r));
    }
    return out;
}

}  // namespace

Complex parse_complex(std::string_view s) {
    const std::string_view whole = s;
    if (s.empty()) throw InputError(InputErrorKind::Parse, "empty complex literal");
    if (s.back() != 'i') return {parse_real(s, whole), 0.0};

    s.remove_suffix(1);
    std::size_t split = std::string_view::npos;
    for (std::size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    const std::string_view re_part = split == std::string_view::npos ? std::string_view{} : s.substr(0, split);
    const std::string_view im_part = split == std::string_view::npos ? s : s.substr(split);
    double im = 0.0;
    if (im_part.empty() || im_part == "+") {
        im = 1.0;
    } else if (im_part == "-") {
        im = -1.0;
    } else {
        im = parse_real(im_part, whole);
    }
    const double re = re_part.empty() ? 0.0 : parse_real(re_part, whole);
    return {re, im};
}

std::string format_real(double x) {
    char buf[64];
    // Shortest representation that round-trips.
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    if (ec != std::errc{}) {
        std::snprintf(buf, sizeof(buf), "%.17g", x);
        return buf;
    }
    return std::string(buf, ptr);
}

std::string format_complex(Complex z) {
    if (z.imag() == 0.0 && !std::signbit(z.imag())) return format_real(z.real());
    std::string out = format_real(z.real());
    const std::string im = format_real(z.imag());
    if (im.front() != '-') out += '+';
    return out + im + 'i';
}

std::string format_matrix_text(const ComplexMatrix& m, std::string_view indent) {
    std::string out;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        out += indent;
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j > 0) out += ' ';
            out += format_complex(m(i, j));
        }
        out += ";\n";
    }
    return out;
}

nlohmann::json matrix_to_json(const ComplexMatrix& m) {
    nlohmann::json re = nlohmann::json::array();
    nlohmann::json im = nlohmann::json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        nlohmann::json rr = nlohmann::json::array();
        nlohmann::json ir = nlohmann::json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            rr.push_back(m(i, j).real());
            ir.push_back(m(i, j).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ir));
    }
    return {{"n", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const nlohmann::json& j) {
    try {
        if (!j.is_object()) throw InputError(InputErrorKind::Parse, "matrix must be a JSON object");
        const auto n_signed = j.at("n").get<long long>();
        if (n_signed <= 0) throw InputError(InputErrorKind::Parse, "\"n\" must be positive");
        const auto n = static_cast<std::size_t>(n_signed);
        const auto re = real_grid(j, "re", n);
        const auto im = j.contains("im") ? real_grid(j, "im", n)
                                          : std::vector<std::vector<double>>(n, std::vector<double>(n, 0.0));
        ComplexMatrix m(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) m(r, c) = {re[r][c], im[r][c]};
        if (!m.is_finite()) throw InputError(InputErrorKind::Parse, "non-finite entry");
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw InputError(InputErrorKind::Parse, std::string("bad matrix JSON: ") + e.what());
    }
}

MatrixDocument parse_matrix(std::string_view text, InputFormat format) {
    if (format == InputFormat::Auto) {
        const auto first = text.find_first_not_of(" \t\r\n");
        format = (first != std::string_view::npos && text[first] == '{') ? InputFormat::Json : InputFormat::Text;
    }
    if (format == InputFormat::Text) return {parse_text(text)};

    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InputError(InputErrorKind::Parse, std::string("invalid JSON: ") + e.what());
    }
    return {matrix_from_json(j)};
}

}  // namespace uecsm::cli
