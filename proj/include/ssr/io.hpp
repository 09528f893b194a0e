#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ssr/instance.hpp"

namespace ssr {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int column, const std::string& what);
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Whitespace-separated positive decimal integers, '#' starts a comment that
/// runs to end of line. Normalized (sorted) on return; all errors carry a
/// 1-based line and column.
Instance parse_instance(std::string_view text);
Instance parse_instance_stream(std::istream& in);
Instance load_instance(const std::string& path);

/// One value per line -- the emit format of the generator, accepted back by
/// parse_instance unchanged.
std::string format_values(const std::vector<std::int64_t>& values);

}  // namespace ssr
