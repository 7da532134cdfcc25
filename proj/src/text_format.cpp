#include "brb/text_format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

namespace brb
{

namespace
{

struct Line
{
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> meaningful_lines(std::string_view text)
{
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos)
      end = text.size();
    std::string_view raw = text.substr(start, end - start);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos)
      raw = raw.substr(0, hash);
    std::istringstream is{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; is >> tok;)
      line.tokens.push_back(tok);
    if (!line.tokens.empty())
      out.push_back(std::move(line));
    start = end + 1;
  }
  return out;
}

[[noreturn]] void fail(const Line& line, const std::string& why)
{
  throw ParseError("line " + std::to_string(line.number) + ": " + why);
}

std::size_t parse_count(const Line& line, const std::string& tok)
{
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc() || ptr != tok.data() + tok.size())
    fail(line, "expected a nonnegative integer, got '" + tok + "'");
  return v;
}

std::size_t parse_label(const Line& line, const std::string& tok, std::size_t dim)
{
  std::size_t v = parse_count(line, tok);
  if (v == 0 || v > dim)
    throw DimensionError("line " + std::to_string(line.number) + ": index " + tok + " outside 1.." +
                         std::to_string(dim));
  return v - 1;
}

Scalar parse_scalar_at(const Line& line, const std::string& tok)
{
  try {
    return Scalar::parse(tok);
  } catch (const ParseError& e) {
    fail(line, e.what());
  }
}

struct Header
{
  std::string name;
  std::size_t dim = 0;
};

// "<keyword> <name>" then "dim <n>"; returns the index of the next line.
std::size_t parse_header(const std::vector<Line>& lines, const std::string& keyword, Header& h)
{
  if (lines.empty())
    throw ParseError("empty input, expected '" + keyword + " <name>'");
  const Line& first = lines[0];
  if (first.tokens[0] != keyword || first.tokens.size() != 2)
    fail(first, "expected '" + keyword + " <name>'");
  h.name = first.tokens[1];
  if (lines.size() < 2)
    throw ParseError("missing 'dim <n>' line");
  const Line& second = lines[1];
  if (second.tokens[0] != "dim" || second.tokens.size() != 2)
    fail(second, "expected 'dim <n>'");
  h.dim = parse_count(second, second.tokens[1]);
  if (h.dim == 0)
    fail(second, "dimension must be positive");
  return 2;
}

void expect_end(const std::vector<Line>& lines, std::size_t idx)
{
  if (idx >= lines.size())
    throw ParseError("missing 'end'");
  if (idx + 1 != lines.size())
    fail(lines[idx + 1], "content after 'end'");
}

} // namespace

LieAlgebra parse_algebra(std::string_view text)
{
  auto lines = meaningful_lines(text);
  Header h;
  std::size_t idx = parse_header(lines, "alg", h);

  std::vector<Parity> parity(h.dim, Parity::even);
  if (idx < lines.size() && lines[idx].tokens[0] == "parity") {
    const Line& line = lines[idx];
    if (line.tokens.size() != h.dim + 1)
      fail(line, "parity line needs " + std::to_string(h.dim) + " entries");
    for (std::size_t i = 0; i < h.dim; ++i) {
      const auto& tok = line.tokens[i + 1];
      if (tok != "0" && tok != "1")
        fail(line, "parity entries must be 0 or 1");
      parity[i] = tok == "1" ? Parity::odd : Parity::even;
    }
    ++idx;
  }

  LieAlgebra L(h.name, parity);
  for (; idx < lines.size() && lines[idx].tokens[0] != "end"; ++idx) {
    const Line& line = lines[idx];
    if (line.tokens[0] != "b" || line.tokens.size() != 5)
      fail(line, "expected 'b <i> <j> <k> <scalar>' or 'end'");
    std::size_t i = parse_label(line, line.tokens[1], h.dim);
    std::size_t j = parse_label(line, line.tokens[2], h.dim);
    std::size_t k = parse_label(line, line.tokens[3], h.dim);
    L.add(i, j, k, parse_scalar_at(line, line.tokens[4]));
  }
  expect_end(lines, idx);
  if (lines[idx].tokens.size() != 1)
    fail(lines[idx], "expected 'end'");
  return L;
}

std::string render_algebra(const LieAlgebra& L)
{
  std::ostringstream os;
  const std::size_t n = L.dim();
  os << "alg " << L.name() << '\n' << "dim " << n << '\n';
  if (L.is_super()) {
    os << "parity";
    for (auto p : L.parity())
      os << ' ' << (is_odd(p) ? 1 : 0);
    os << '\n';
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      if (i == j && !is_odd(L.parity(i)))
        continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Scalar& s = L.constant(i, j, k);
        if (!s.is_zero())
          os << "b " << i + 1 << ' ' << j + 1 << ' ' << k + 1 << ' ' << s << '\n';
      }
    }
  os << "end\n";
  return os.str();
}

NamedTensor parse_rmatrix(std::string_view text)
{
  auto lines = meaningful_lines(text);
  Header h;
  std::size_t idx = parse_header(lines, "rmat", h);
  Tensor2 r(h.dim);
  for (; idx < lines.size() && lines[idx].tokens[0] != "end"; ++idx) {
    const Line& line = lines[idx];
    const auto& kw = line.tokens[0];
    if ((kw != "t" && kw != "w") || line.tokens.size() != 4)
      fail(line, "expected 't <m> <p> <scalar>', 'w <m> <p> <scalar>' or 'end'");
    std::size_t m = parse_label(line, line.tokens[1], h.dim);
    std::size_t p = parse_label(line, line.tokens[2], h.dim);
    Scalar s = parse_scalar_at(line, line.tokens[3]);
    if (kw == "w") {
      if (m == p)
        fail(line, "wedge of a generator with itself");
      r += wedge(m, p, s, h.dim);
    } else {
      r(m, p) += s;
    }
  }
  expect_end(lines, idx);
  if (lines[idx].tokens.size() != 1)
    fail(lines[idx], "expected 'end'");
  return {h.name, std::move(r)};
}

std::string render_rmatrix(const std::string& name, const Tensor2& r)
{
  std::ostringstream os;
  os << "rmat " << name << '\n' << "dim " << r.dim() << '\n';
  for (std::size_t m = 0; m < r.dim(); ++m)
    for (std::size_t p = 0; p < r.dim(); ++p)
      if (!r(m, p).is_zero())
        os << "t " << m + 1 << ' ' << p + 1 << ' ' << r(m, p) << '\n';
  os << "end\n";
  return os.str();
}

Matrix parse_matrix(std::string_view text)
{
  auto lines = meaningful_lines(text);
  if (lines.empty())
    throw ParseError("empty matrix");
  const std::size_t n = lines.size();
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    const Line& line = lines[r];
    if (line.tokens.size() != n)
      fail(line, "expected " + std::to_string(n) + " entries per row");
    for (std::size_t c = 0; c < n; ++c)
      m(r, c) = parse_scalar_at(line, line.tokens[c]);
  }
  return m;
}

std::string render_matrix(const Matrix& m)
{
  std::ostringstream os;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c)
      os << (c ? " " : "") << m(r, c);
    os << '\n';
  }
  return os.str();
}

namespace
{

std::vector<std::string> split_list(std::string_view text)
{
  std::string s(text);
  for (auto& ch : s)
    if (ch == ',')
      ch = ' ';
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;)
    out.push_back(tok);
  return out;
}

} // namespace

Vector parse_vector(std::string_view text, std::size_t dim)
{
  const Line ctx{1, {}};
  if (text.size() > 1 && text[0] == 'e') {
    std::size_t i = parse_label(ctx, std::string(text.substr(1)), dim);
    return basis_vector(dim, i);
  }
  auto toks = split_list(text);
  if (toks.size() != dim)
    throw DimensionError("vector has " + std::to_string(toks.size()) + " coordinates, algebra has dimension " +
                         std::to_string(dim));
  Vector v;
  for (const auto& t : toks)
    v.push_back(Scalar::parse(t));
  return v;
}

std::vector<std::size_t> parse_index_list(std::string_view text, std::size_t dim)
{
  const Line ctx{1, {}};
  std::vector<std::size_t> out;
  for (const auto& t : split_list(text))
    out.push_back(parse_label(ctx, t, dim));
  return out;
}

std::vector<Scalar> parse_scalar_list(std::string_view text)
{
  std::vector<Scalar> out;
  for (const auto& t : split_list(text))
    out.push_back(Scalar::parse(t));
  return out;
}

std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw ParseError("cannot read '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& content)
{
  std::ofstream out(path, std::ios::binary);
  if (!out)
    throw ParseError("cannot write '" + path + "'");
  out << content;
}

} // namespace brb
