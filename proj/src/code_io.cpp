#include "scdt/code_io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

namespace scdt {

namespace {

struct Token {
  std::string text;
  std::size_t column;  // 1-based
};

struct Line {
  std::size_t number;  // 1-based
  std::string text;
};

std::vector<Token> split_tokens(const std::string& line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i >= line.size()) break;
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

bool is_operator_token(const std::string& t) { return t == "+" || t == "-" || t == "*" || t == "/"; }

bool ends_with_operator(const std::string& t) {
  char c = t.back();
  return c == '+' || c == '-' || c == '*' || c == '/' || c == '(';
}

bool starts_continuation(const std::string& t) {
  return t[0] == '*' || t[0] == '/' || t[0] == ')';
}

// Re-joins literals that were written with interior whitespace.
std::vector<Token> row_entries(const std::string& line) {
  std::vector<Token> raw = split_tokens(line);
  std::vector<Token> out;
  bool join_next = false;
  for (auto& tok : raw) {
    bool join = !out.empty() && (join_next || is_operator_token(tok.text) || starts_continuation(tok.text));
    if (join) {
      out.back().text += tok.text;
    } else {
      out.push_back(tok);
    }
    join_next = ends_with_operator(tok.text);
  }
  return out;
}

class CodeReader {
 public:
  explicit CodeReader(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
      ++number;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      std::size_t first = line.find_first_not_of(" \t");
      if (first == std::string::npos || line[first] == '#') continue;
      lines_.push_back({number, line});
    }
    last_line_ = number;
  }

  SphericalCode read() {
    const Line& magic = next("header 'scdt-code v1'");
    auto mt = split_tokens(magic.text);
    if (mt.size() != 2 || mt[0].text != "scdt-code" || mt[1].text != "v1") {
      throw ParseError(magic.number, 1, "expected header 'scdt-code v1'");
    }

    const Line& label_line = next("'label'");
    std::string label = keyword_rest(label_line, "label");

    int dim = read_int_field("dim");
    int size = read_int_field("size");
    if (dim < 2) throw ParseError(dim_line_, 1, "dim must be at least 2");
    if (size < 2) throw ParseError(size_line_, 1, "size must be at least 2");

    const Line& kind_line = next("'kind'");
    auto kt = split_tokens(kind_line.text);
    if (kt.empty() || kt[0].text != "kind") throw ParseError(kind_line.number, 1, "expected 'kind'");
    if (kt.size() < 2) throw ParseError(kind_line.number, kind_line.text.size() + 1, "expected 'gram' or 'coords'");

    const auto n = static_cast<std::size_t>(size);
    if (kt[1].text == "gram") {
      if (kt.size() != 2) throw ParseError(kind_line.number, kt[2].column, "unexpected token after 'gram'");
      auto rows = read_rows(n, n);
      Matrix gram(n, n);
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) gram(x, y) = rows[x][y];
      }
      expect_end();
      return SphericalCode::from_gram(dim, std::move(gram), label);
    }
    if (kt[1].text == "coords") {
      std::string norm_text;
      for (std::size_t i = 2; i < kt.size(); ++i) norm_text += kt[i].text;
      if (norm_text.empty()) throw ParseError(kind_line.number, kind_line.text.size() + 1, "expected norm2 after 'coords'");
      Rational norm2;
      try {
        norm2 = parse_rational(norm_text);
      } catch (const LiteralError& e) {
        throw ParseError(kind_line.number, kt[2].column + e.position(), e.what());
      }
      auto rows = read_rows(n, static_cast<std::size_t>(dim));
      expect_end();
      return SphericalCode::from_coords(dim, std::move(rows), QuadExt(norm2), label);
    }
    throw ParseError(kind_line.number, kt[1].column, "expected 'gram' or 'coords', got '" + kt[1].text + "'");
  }

 private:
  const Line& next(const std::string& what) {
    if (pos_ >= lines_.size()) throw ParseError(last_line_ + 1, 1, "unexpected end of file, expected " + what);
    return lines_[pos_++];
  }

  static std::string keyword_rest(const Line& line, const std::string& keyword) {
    std::size_t first = line.text.find_first_not_of(" \t");
    if (line.text.compare(first, keyword.size(), keyword) != 0) {
      throw ParseError(line.number, first + 1, "expected '" + keyword + "'");
    }
    std::size_t rest = line.text.find_first_not_of(" \t", first + keyword.size());
    if (rest == std::string::npos) return "";
    if (rest == first + keyword.size()) throw ParseError(line.number, rest + 1, "expected whitespace after '" + keyword + "'");
    std::size_t end = line.text.find_last_not_of(" \t");
    return line.text.substr(rest, end - rest + 1);
  }

  int read_int_field(const std::string& keyword) {
    const Line& line = next("'" + keyword + "'");
    auto toks = split_tokens(line.text);
    if (toks.empty() || toks[0].text != keyword) throw ParseError(line.number, 1, "expected '" + keyword + "'");
    if (toks.size() != 2) throw ParseError(line.number, line.text.size() + 1, "expected one integer after '" + keyword + "'");
    const std::string& v = toks[1].text;
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(v[i]))) {
        throw ParseError(line.number, toks[1].column + i, "expected a nonnegative integer");
      }
    }
    if (v.size() > 6) throw ParseError(line.number, toks[1].column, "value too large");
    if (keyword == "dim") dim_line_ = line.number;
    if (keyword == "size") size_line_ = line.number;
    return std::stoi(v);
  }

  std::vector<std::vector<QuadExt>> read_rows(std::size_t count, std::size_t width) {
    std::vector<std::vector<QuadExt>> rows;
    rows.reserve(count);
    for (std::size_t r = 0; r < count; ++r) {
      const Line& line = next("row " + std::to_string(r + 1) + " of " + std::to_string(count));
      auto entries = row_entries(line.text);
      if (entries.size() != width) {
        throw ParseError(line.number, 1, "row has " + std::to_string(entries.size()) + " entries, expected " +
                                             std::to_string(width));
      }
      std::vector<QuadExt> row;
      row.reserve(width);
      for (const auto& e : entries) {
        try {
          row.push_back(parse_quad(e.text));
        } catch (const LiteralError& err) {
          throw ParseError(line.number, e.column + err.position(), err.what());
        } catch (const FieldError& err) {
          throw ParseError(line.number, e.column, err.what());
        }
      }
      rows.push_back(std::move(row));
    }
    return rows;
  }

  void expect_end() {
    if (pos_ < lines_.size()) throw ParseError(lines_[pos_].number, 1, "unexpected content after the last row");
  }

  std::vector<Line> lines_;
  std::size_t pos_ = 0;
  std::size_t last_line_ = 0;
  std::size_t dim_line_ = 0;
  std::size_t size_line_ = 0;
};

}  // namespace

SphericalCode parse_code(std::string_view text) { return CodeReader(text).read(); }

SphericalCode load_code(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_code(buf.str());
}

std::string emit_code(const SphericalCode& code) {
  std::ostringstream out;
  out << "scdt-code v1\n";
  out << "label " << code.label() << "\n";
  out << "dim " << code.dim() << "\n";
  out << "size " << code.size() << "\n";
  const auto& coords = code.coordinates();
  if (coords && coords->norm2.is_rational()) {
    out << "kind coords " << to_literal(coords->norm2) << "\n";
    for (const auto& p : coords->points) {
      for (std::size_t k = 0; k < p.size(); ++k) out << (k ? " " : "") << to_literal(p[k]);
      out << "\n";
    }
  } else {
    out << "kind gram\n";
    for (std::size_t x = 0; x < code.size(); ++x) {
      for (std::size_t y = 0; y < code.size(); ++y) out << (y ? " " : "") << to_literal(code.gram(x, y));
      out << "\n";
    }
  }
  return out.str();
}

void write_code(const SphericalCode& code, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << emit_code(code);
  if (!out) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace scdt
