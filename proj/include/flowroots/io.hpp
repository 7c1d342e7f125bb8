#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

#include "flowroots/multigraph.hpp"

namespace flowroots {

/// Malformed input text. Line and column are 1-based; column 0 means the
/// whole line (or end of input).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line, int column)
      : std::runtime_error(what), line_(line), column_(column) {}
  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

/// Edge-list text: `#` comment lines, a first data line `n m`, then m lines
/// `u v` with 0-based vertex ids. Edge order is kept.
MultiGraph parse_edge_list(std::string_view text);

/// One face per line, listing 0-based edge indices separated by spaces.
FaceStructure parse_faces(std::string_view text);

std::string read_text_file(const std::string& path);

/// File loaders; parse errors are re-raised with the path in the message.
MultiGraph load_edge_list(const std::string& path);
FaceStructure load_faces(const std::string& path);

std::string format_edge_list(const MultiGraph& g);
std::string format_faces(const FaceStructure& faces);

}  // namespace flowroots
