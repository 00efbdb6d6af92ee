#include "prodbasis/text_io.hpp"

#include <charconv>
#include <sstream>

#include "prodbasis/errors.hpp"

namespace prodbasis::text {

namespace {

std::string_view trim(std::string_view s) {
  const auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; };
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    std::size_t end = s.find(sep, start);
    if (end == std::string_view::npos) {
      out.push_back(trim(s.substr(start)));
      return out;
    }
    out.push_back(trim(s.substr(start, end - start)));
    start = end + 1;
  }
}

// Content lines: trimmed, without blanks and '#' comments.
std::vector<std::string_view> content_lines(std::string_view text) {
  std::vector<std::string_view> out;
  for (std::string_view line : split(text, '\n')) {
    if (line.empty() || line.front() == '#') continue;
    out.push_back(line);
  }
  return out;
}

std::size_t parse_size(std::string_view tok) {
  std::size_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return v;
}

// "shape d1 d2 ...; field" prefix shared by vectors and subspace headers.
std::pair<TensorShape, FieldSpec> parse_shape_field(std::string_view shape_part,
                                                    std::string_view field_part) {
  auto toks = tokens(shape_part);
  if (toks.empty() || toks.front() != "shape") throw ParseError("expected 'shape d1 d2 ...'");
  std::vector<std::size_t> dims;
  for (std::size_t i = 1; i < toks.size(); ++i) dims.push_back(parse_size(toks[i]));
  try {
    return {TensorShape(std::move(dims)), FieldSpec::parse(trim(field_part))};
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string shape_words(const TensorShape& shape) {
  std::string out = "shape";
  for (std::size_t d : shape.dims()) out += " " + std::to_string(d);
  return out;
}

void write_rows(std::ostringstream& os, const Matrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << '\n';
  }
}

Matrix read_entries(const FieldSpec& f, std::size_t rows, std::size_t cols,
                    std::span<const std::string_view> lines) {
  std::vector<std::string_view> toks;
  for (std::string_view line : lines) {
    for (std::string_view t : tokens(line)) toks.push_back(t);
  }
  if (toks.size() != rows * cols) {
    throw ParseError("matrix expects " + std::to_string(rows * cols) + " entries, found " +
                     std::to_string(toks.size()));
  }
  Matrix m(f, rows, cols);
  for (std::size_t k = 0; k < toks.size(); ++k) m(k / cols, k % cols) = Scalar::parse(f, toks[k]);
  return m;
}

}  // namespace

std::string format_matrix(const Matrix& m) {
  std::ostringstream os;
  os << m.rows() << ' ' << m.cols() << ' ' << m.field().to_string() << '\n';
  write_rows(os, m);
  return os.str();
}

Matrix parse_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty matrix");
  const auto head = tokens(lines.front());
  if (head.size() != 3) throw ParseError("matrix header must be '<rows> <cols> <field>'");
  const FieldSpec f = FieldSpec::parse(head[2]);
  return read_entries(f, parse_size(head[0]), parse_size(head[1]),
                      std::span(lines).subspan(1));
}

std::string format_sym_matrix(const SymMatrix& m) {
  std::ostringstream os;
  os << "sym " << m.size() << ' ' << m.size() << " Q " << m.shape().to_string() << '\n';
  write_rows(os, m.matrix());
  return os.str();
}

SymMatrix parse_sym_matrix(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("empty symmetric matrix");
  const auto head = tokens(lines.front());
  if (head.size() != 5 || head[0] != "sym") {
    throw ParseError("symmetric matrix header must be 'sym <rows> <cols> Q <shape>'");
  }
  const FieldSpec f = FieldSpec::parse(head[3]);
  Matrix m = read_entries(f, parse_size(head[1]), parse_size(head[2]), std::span(lines).subspan(1));
  try {
    return SymMatrix(TensorShape::parse(head[4]), std::move(m));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

std::string format_vector(const TensorVector& v) {
  std::ostringstream os;
  os << shape_words(v.shape()) << "; " << v.field().to_string() << ";";
  for (const Scalar& s : v.coords()) os << ' ' << s;
  return os.str();
}

TensorVector parse_vector(std::string_view line) {
  const auto parts = split(trim(line), ';');
  if (parts.size() != 3) throw ParseError("vector must be 'shape ...; field; coords'");
  auto [shape, f] = parse_shape_field(parts[0], parts[1]);
  Vec coords;
  for (std::string_view t : tokens(parts[2])) coords.push_back(Scalar::parse(f, t));
  if (coords.size() != shape.total()) {
    throw ParseError("vector has " + std::to_string(coords.size()) + " coordinates, shape " +
                     shape.to_string() + " needs " + std::to_string(shape.total()));
  }
  return TensorVector(std::move(shape), f, std::move(coords));
}

std::string format_vector_list(std::span<const TensorVector> vs) {
  std::string out;
  for (const TensorVector& v : vs) out += format_vector(v) + "\n";
  return out;
}

std::vector<TensorVector> parse_vector_list(std::string_view text) {
  std::vector<TensorVector> out;
  for (std::string_view line : content_lines(text)) out.push_back(parse_vector(line));
  return out;
}

std::string format_factors(std::span<const Vec> factors) {
  std::string out;
  for (std::size_t j = 0; j < factors.size(); ++j) {
    out += j ? " (x) (" : "(";
    for (std::size_t i = 0; i < factors[j].size(); ++i) {
      out += (i ? " " : "") + factors[j][i].to_string();
    }
    out += ")";
  }
  return out;
}

std::string format_product_tuple(const ProductTuple& t) {
  std::string out;
  for (const ProductVector& pv : t.vectors) {
    out += "# factors: " + format_factors(pv.factors) + "\n";
    out += format_vector(pv.embedded) + "\n";
  }
  return out;
}

std::string format_subspace(const Subspace& s) {
  std::ostringstream os;
  os << "subspace " << shape_words(s.shape()) << "; " << s.field().to_string() << '\n';
  os << "# dim " << s.dim() << ", codim " << s.codim() << '\n';
  for (const TensorVector& g : s.generators()) os << "gen " << format_vector(g) << '\n';
  for (const TensorVector& w : s.cogenerators()) os << "cogen " << format_vector(w) << '\n';
  return os.str();
}

Subspace parse_subspace(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty() || !lines.front().starts_with("subspace")) {
    throw ParseError("subspace file must start with 'subspace shape ...; field'");
  }
  const auto head = split(lines.front().substr(8), ';');
  if (head.size() != 2) throw ParseError("subspace header must be 'subspace shape ...; field'");
  auto [shape, f] = parse_shape_field(head[0], head[1]);

  std::vector<TensorVector> gens;
  std::vector<TensorVector> cogens;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::string_view line = lines[i];
    std::vector<TensorVector>* target = nullptr;
    if (line.starts_with("gen ")) {
      target = &gens;
      line.remove_prefix(4);
    } else if (line.starts_with("cogen ")) {
      target = &cogens;
      line.remove_prefix(6);
    } else {
      throw ParseError("subspace line must start with 'gen' or 'cogen'");
    }
    TensorVector v = parse_vector(line);
    if (!(v.shape() == shape) || v.field() != f) throw ParseError("subspace vector does not match header");
    target->push_back(std::move(v));
  }
  try {
    if (!gens.empty() && !cogens.empty()) {
      return Subspace::from_both(shape, f, std::move(gens), std::move(cogens));
    }
    if (!cogens.empty()) return Subspace::from_cogenerators(shape, f, std::move(cogens));
    return Subspace::from_generators(shape, f, std::move(gens));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
}

}  // namespace prodbasis::text
