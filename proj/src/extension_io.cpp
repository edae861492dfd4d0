#include "loopkit/extension_io.hpp"

#include <fstream>
#include <ostream>

#include "text_scanner.hpp"

namespace loopkit {

namespace {

void write_block(std::ostream &out, const ModMatrix &m) {
  for (std::size_t r = 0; r < m.dim(); ++r) {
    for (std::size_t c = 0; c < m.dim(); ++c)
      out << (c ? " " : "") << m.at(r, c);
    out << '\n';
  }
}

ModMatrix read_block(detail::TextScanner &scan, const AbGroup &kernel) {
  const auto k = kernel.rank();
  std::vector<std::int64_t> entries;
  entries.reserve(k * k);
  for (std::size_t r = 0; r < k; ++r) {
    scan.require_line("matrix row");
    scan.expect_count(k, "matrix entries");
    for (const auto &t : scan.tokens())
      entries.push_back(scan.integer(t));
  }
  return ModMatrix(kernel, std::move(entries));
}

std::ifstream open(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    throw FormatError("cannot open '" + path + "'", 0, 0);
  return in;
}

} // namespace

void write_cocycle(std::ostream &out, const Cocycle &c) {
  const auto n = c.order();
  out << "cocycle n=" << n << " A=" << c.kernel().to_string() << '\n';
  for (Element xi = 0; xi < n; ++xi)
    for (Element eta = 0; eta < n; ++eta) {
      out << "P " << xi << ' ' << eta << '\n';
      write_block(out, c.P(xi, eta));
      out << "Q " << xi << ' ' << eta << '\n';
      write_block(out, c.Q(xi, eta));
    }
}

Cocycle read_cocycle(std::istream &in, const FiniteLoop &base) {
  detail::TextScanner scan(in);
  scan.require_line("cocycle header");
  const auto &h = scan.tokens();
  if (h.size() != 3 || h[0].text != "cocycle" || h[1].text.substr(0, 2) != "n=" ||
      h[2].text.substr(0, 2) != "A=")
    scan.fail("expected header 'cocycle n=<n> A=z<m>^<k>'", 1);
  detail::Token n_tok{h[1].text.substr(2), h[1].column + 2};
  const auto n = scan.non_negative(n_tok);
  if (std::size_t(n) != base.order())
    scan.fail("cocycle is for order " + std::to_string(n) + " but the table has order " +
                  std::to_string(base.order()),
              n_tok.column);
  std::optional<AbGroup> kernel;
  try {
    kernel = AbGroup::parse(h[2].text.substr(2));
  } catch (const StructuralError &e) {
    scan.fail(e.what(), h[2].column + 2);
  }

  std::vector<ModMatrix> p, q;
  for (Element xi = 0; xi < n; ++xi)
    for (Element eta = 0; eta < n; ++eta)
      for (char which : {'P', 'Q'}) {
        scan.require_line("block label");
        const auto &t = scan.tokens();
        const std::string want = std::string(1, which);
        if (t.size() != 3 || t[0].text != want || scan.integer(t[1]) != xi ||
            scan.integer(t[2]) != eta)
          scan.fail("expected block label '" + want + " " + std::to_string(xi) + " " +
                        std::to_string(eta) + "'",
                    t.empty() ? 1 : t[0].column);
        (which == 'P' ? p : q).push_back(read_block(scan, *kernel));
      }
  if (scan.next_line())
    scan.fail("trailing content after cocycle", scan.tokens().front().column);
  return Cocycle(base, *kernel, std::move(p), std::move(q));
}

Cocycle read_cocycle_file(const std::string &path, const FiniteLoop &base) {
  auto in = open(path);
  return read_cocycle(in, base);
}

void write_phi(std::ostream &out, const PhiAssignments &assignments) {
  for (const auto &[perm, mat] : assignments) {
    out << "perm " << perm.to_string() << " -> matrix";
    for (auto v : mat.entries())
      out << ' ' << v;
    out << '\n';
  }
}

PhiAssignments read_phi(std::istream &in, const AbGroup &kernel) {
  detail::TextScanner scan(in);
  PhiAssignments out;
  const auto kk = kernel.rank() * kernel.rank();
  while (scan.next_line()) {
    const auto &t = scan.tokens();
    if (t[0].text != "perm")
      scan.fail("expected 'perm'", t[0].column);
    std::size_t arrow = 1;
    while (arrow < t.size() && t[arrow].text != "->")
      ++arrow;
    if (arrow == t.size())
      scan.fail("missing '->'", int(scan.line().size()) + 1);
    if (arrow + 1 >= t.size() || t[arrow + 1].text != "matrix")
      scan.fail("expected 'matrix' after '->'",
                arrow + 1 < t.size() ? t[arrow + 1].column : int(scan.line().size()) + 1);
    std::vector<Element> images;
    for (std::size_t i = 1; i < arrow; ++i)
      images.push_back(Element(scan.non_negative(t[i])));
    if (t.size() - (arrow + 2) != kk)
      scan.fail("expected " + std::to_string(kk) + " matrix entries for kernel " +
                    kernel.to_string(),
                arrow + 2 < t.size() ? t[arrow + 2].column : int(scan.line().size()) + 1);
    std::vector<std::int64_t> entries;
    for (std::size_t i = arrow + 2; i < t.size(); ++i)
      entries.push_back(scan.integer(t[i]));
    try {
      out.emplace_back(Perm(std::move(images)), ModMatrix(kernel, std::move(entries)));
    } catch (const StructuralError &e) {
      scan.fail(e.what(), t[1].column);
    }
  }
  return out;
}

PhiAssignments read_phi_file(const std::string &path, const AbGroup &kernel) {
  auto in = open(path);
  return read_phi(in, kernel);
}

} // namespace loopkit
