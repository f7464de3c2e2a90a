#include "tridet/matrix_io.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <limits>
#include <sstream>
#include <vector>

namespace tridet {
namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    start = end + 1;
  }
  while (!lines.empty() && lines.back().find_first_not_of(" \t") == std::string_view::npos) {
    lines.pop_back();
  }
  return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

double parse_value(std::string_view tok, int line_no) {
  std::string_view body = tok;
  if (!body.empty() && body.front() == '+') body.remove_prefix(1);
  double x = 0.0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), x);
  if (ec != std::errc() || ptr != body.data() + body.size() || body.empty()) {
    throw ParseError("line " + std::to_string(line_no) + ": not a number: '" + std::string(tok) +
                     "'");
  }
  if (!std::isfinite(x)) {
    throw ParseError("line " + std::to_string(line_no) + ": non-finite value '" +
                     std::string(tok) + "'");
  }
  return x;
}

std::vector<double> parse_row(std::string_view line, std::size_t expected, int line_no) {
  const auto toks = tokens(line);
  if (toks.size() != expected) {
    throw ParseError("line " + std::to_string(line_no) + ": expected " + std::to_string(expected) +
                     " values, found " + std::to_string(toks.size()));
  }
  std::vector<double> out;
  out.reserve(expected);
  for (auto t : toks) out.push_back(parse_value(t, line_no));
  return out;
}

void append_row(std::string& out, std::span<const double> v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i > 0) out += ' ';
    out += format_scalar(v[i]);
  }
  out += '\n';
}

}  // namespace

TridiagonalMatrix parse_matrix(std::string_view text) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("empty input");

  const auto head = tokens(lines[0]);
  if (head.size() != 1) throw ParseError("line 1: expected the matrix order n");
  std::size_t n = 0;
  {
    auto [ptr, ec] = std::from_chars(head[0].data(), head[0].data() + head[0].size(), n);
    if (ec != std::errc() || ptr != head[0].data() + head[0].size() || n == 0) {
      throw ParseError("line 1: order must be a positive integer, got '" + std::string(head[0]) +
                       "'");
    }
  }
  if (lines.size() > 4) throw ParseError("unexpected content after line 4");
  if (lines.size() < 2) throw ParseError("missing line 2 (main diagonal)");
  if (n > 1 && lines.size() < 4) {
    throw ParseError("expected 4 lines for n = " + std::to_string(n) + ", found " +
                     std::to_string(lines.size()));
  }

  std::vector<double> d = parse_row(lines[1], n, 2);
  std::vector<double> a = lines.size() > 2 ? parse_row(lines[2], n - 1, 3) : std::vector<double>{};
  std::vector<double> b = lines.size() > 3 ? parse_row(lines[3], n - 1, 4) : std::vector<double>{};
  try {
    return TridiagonalMatrix(std::move(d), std::move(a), std::move(b));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

TridiagonalMatrix read_matrix(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_matrix(text);
}

std::string format_scalar(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_matrix(const TridiagonalMatrix& m) {
  std::string out = std::to_string(m.order()) + '\n';
  append_row(out, m.diag());
  append_row(out, m.super());
  append_row(out, m.sub());
  return out;
}

std::string format_lu(const LUFactors& f) {
  std::string out = "convention " + std::string(to_string(f.convention)) + '\n';
  out += "L\n" + format_matrix(f.lower());
  out += "U\n" + format_matrix(f.upper());
  return out;
}

}  // namespace tridet
