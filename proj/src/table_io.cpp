#include "loopkit/table_io.hpp"

#include <fstream>
#include <sstream>

#include "text_scanner.hpp"

namespace loopkit {

CayleyTable read_table(std::istream &in) {
  detail::TextScanner scan(in);
  scan.require_line("table order");
  scan.expect_count(1, "token (the order)");
  const auto n = scan.non_negative(scan.tokens()[0]);
  if (n == 0)
    scan.fail("table order must be positive", scan.tokens()[0].column);

  std::vector<std::vector<Element>> rows(static_cast<std::size_t>(n));
  for (auto &row : rows) {
    scan.require_line("table row");
    scan.expect_count(std::size_t(n), "entries");
    row.reserve(std::size_t(n));
    for (const auto &t : scan.tokens()) {
      auto v = scan.non_negative(t);
      if (v >= n)
        scan.fail("entry " + std::to_string(v) + " out of range for order " + std::to_string(n),
                  t.column);
      row.push_back(Element(v));
    }
  }
  if (scan.next_line())
    scan.fail("trailing content after table", scan.tokens().front().column);
  return CayleyTable(rows);
}

CayleyTable read_table_file(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw FormatError("cannot open '" + path + "'", 0, 0);
  return read_table(in);
}

void write_table(std::ostream &out, const CayleyTable &table) {
  const auto n = table.order();
  out << n << '\n';
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (y)
        out << ' ';
      out << table.at(x, y);
    }
    out << '\n';
  }
}

std::string format_table(const CayleyTable &table) {
  std::ostringstream s;
  write_table(s, table);
  return s.str();
}

} // namespace loopkit
