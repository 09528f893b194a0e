#include "ssr/io.hpp"

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>

namespace ssr {

ParseError::ParseError(int line, int column, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + what),
      line_(line),
      column_(column) {}

Instance parse_instance(std::string_view text) {
  std::vector<std::int64_t> values;
  int line = 1, col = 1;
  std::size_t i = 0;
  const std::size_t len = text.size();

  auto advance = [&](char c) {
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    ++i;
  };

  while (i < len) {
    char c = text[i];
    if (c == '#') {
      while (i < len && text[i] != '\n') advance(text[i]);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(c);
      continue;
    }
    const int tok_line = line, tok_col = col;
    std::string token;
    while (i < len && !std::isspace(static_cast<unsigned char>(text[i])) &&
           text[i] != '#') {
      token.push_back(text[i]);
      advance(text[i]);
    }
    std::int64_t value = 0;
    bool numeric = !token.empty();
    for (char tc : token) {
      if (!std::isdigit(static_cast<unsigned char>(tc))) {
        numeric = false;
        break;
      }
      // Saturates just past the bound, so oversized tokens can't overflow.
      if (value <= kMaxValue) value = value * 10 + (tc - '0');
    }
    if (!numeric) {
      if (!token.empty() && (token[0] == '-' || token[0] == '+'))
        throw ParseError(tok_line, tok_col, "non-positive entry '" + token + "'");
      throw ParseError(tok_line, tok_col, "non-integer token '" + token + "'");
    }
    if (value < 1)
      throw ParseError(tok_line, tok_col, "non-positive entry '" + token + "'");
    if (value > kMaxValue)
      throw ParseError(tok_line, tok_col,
                       "entry '" + token + "' exceeds bound " + std::to_string(kMaxValue));
    values.push_back(value);
  }

  if (values.empty()) throw ParseError(line, col, "empty input");
  if (values.size() < 2) throw ParseError(line, col, "fewer than 2 entries");
  return normalize_instance(values);
}

Instance parse_instance_stream(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return parse_instance_stream(in);
}

std::string format_values(const std::vector<std::int64_t>& values) {
  std::string out;
  for (std::int64_t v : values) {
    out += std::to_string(v);
    out += '\n';
  }
  return out;
}

}  // namespace ssr
