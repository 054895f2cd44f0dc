#pragma once

#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "quandle/magma.hpp"

namespace quandle {

/// Parses the ".rack" text format:
///
///   # optional comment lines
///   3
///   0 2 1
///   2 1 0
///   1 0 2
///
/// First data line is the order n; the next n data lines are rows, row x
/// listing x * y for y = 0..n-1. Blank lines and lines starting with '#'
/// are skipped. Errors carry 1-based line and column (entry) positions.
inline magma parse_rack(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t n = 0;
  bool have_order = false;
  std::vector<element> flat;
  std::size_t rows_read = 0;

  auto fail = [&](std::size_t col, const std::string& what) -> structure_error {
    std::string where = "line " + std::to_string(line_no);
    if (col > 0) where += ", column " + std::to_string(col);
    return structure_error(where + ": " + what);
  };

  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;

    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string tok; fields >> tok;) tokens.push_back(tok);

    auto to_number = [&](const std::string& tok, std::size_t col) {
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw fail(col, "not a non-negative integer: '" + tok + "'");
      }
      return value;
    };

    if (!have_order) {
      if (tokens.size() != 1) throw fail(0, "expected the order n alone on the first line");
      n = to_number(tokens[0], 1);
      if (n == 0) throw fail(1, "order must be positive");
      have_order = true;
      flat.reserve(n * n);
      continue;
    }
    if (rows_read == n) throw fail(0, "unexpected extra row (order is " + std::to_string(n) + ")");
    if (tokens.size() != n) {
      throw fail(0, "row has " + std::to_string(tokens.size()) + " entries, expected " + std::to_string(n));
    }
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t v = to_number(tokens[c], c + 1);
      if (v >= n) {
        throw fail(c + 1, "entry out of range: " + std::to_string(v) + " (order " + std::to_string(n) + ")");
      }
      flat.push_back(v);
    }
    ++rows_read;
  }
  if (!have_order) throw structure_error("empty rack file: missing order line");
  if (rows_read != n) {
    throw structure_error("truncated rack file: " + std::to_string(rows_read) + " of " + std::to_string(n) +
                          " rows present");
  }
  return magma(n, std::move(flat));
}

inline magma parse_rack(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_rack(in);
}

inline magma load_rack(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw structure_error("cannot open rack file: " + path);
  return parse_rack(in);
}

inline std::string format_rack(const magma& m) {
  std::string out = std::to_string(m.order()) + "\n";
  for (element x = 0; x < m.order(); ++x) {
    for (element y = 0; y < m.order(); ++y) {
      if (y > 0) out += ' ';
      out += std::to_string(m(x, y));
    }
    out += '\n';
  }
  return out;
}

}  // namespace quandle
