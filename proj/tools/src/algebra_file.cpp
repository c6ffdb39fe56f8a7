#include "frobcoh_cli/algebra_file.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <vector>

namespace frobcoh::cli {

namespace {

bool is_name_char(char c) {
  return !(c == ' ' || c == '\t' || c == '\r' || c == '*' || c == '+' || c == '=' || c == '#' || c == '(' ||
           c == ')');
}

class LineParser {
 public:
  LineParser(std::string_view line, std::size_t line_no) : text_(line), line_(line_no) {}

  [[noreturn]] void fail(const std::string& what, std::size_t col) const {
    throw Error(ErrorCode::ParseError,
                "line " + std::to_string(line_) + ", column " + std::to_string(col + 1) + ": " + what);
  }
  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\r')) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  std::size_t pos() const { return pos_; }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c, const char* what) {
    if (!accept(c)) fail(std::string("expected ") + what);
  }

  std::string word(const char* what) {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    if (start == pos_) fail(std::string("expected ") + what);
    return std::string(text_.substr(start, pos_ - start));
  }

  void expect_end() {
    if (!at_end()) fail("unexpected trailing text");
  }

  Scalar scalar(const FieldSpec& field) {
    skip_ws();
    const std::size_t start = pos_;
    std::optional<Scalar> s;
    try {
      s = parse_scalar_prefix(text_, pos_, field);
    } catch (const Error& e) {
      fail(std::string("malformed scalar (") + e.what() + ")", start);
    }
    if (!s) fail("expected a scalar");
    return *s;
  }

  std::size_t name_index(const std::vector<std::string>& names) {
    skip_ws();
    const std::size_t start = pos_;
    std::string n = word("a basis name");
    return lookup(names, n, start);
  }

  std::size_t lookup(const std::vector<std::string>& names, const std::string& n, std::size_t col) const {
    auto it = std::find(names.begin(), names.end(), n);
    if (it == names.end()) {
      throw Error(ErrorCode::UnknownBasisName, "line " + std::to_string(line_) + ", column " +
                                                   std::to_string(col + 1) + ": unknown basis name '" + n + "'");
    }
    return static_cast<std::size_t>(it - names.begin());
  }

  /// lincomb := 0 | term (+ term)*, term := [scalar *] name
  Vector lincomb(const FieldSpec& field, const std::vector<std::string>& names) {
    Vector v(names.size(), Scalar::zero(field));
    skip_ws();
    {
      // A lone "0" is the zero element.
      std::size_t save = pos_;
      if (pos_ < text_.size() && text_[pos_] == '0') {
        ++pos_;
        if (at_end()) return v;
      }
      pos_ = save;
    }
    do {
      skip_ws();
      const std::size_t start = pos_;
      std::optional<Scalar> coefficient;
      if (pos_ < text_.size() && (text_[pos_] == '(' || text_[pos_] == '-')) {
        coefficient = scalar(field);
        expect('*', "'*' after coefficient");
      } else {
        std::string token = word("a term");
        if (accept('*')) {
          std::size_t p = 0;
          std::optional<Scalar> s;
          try {
            s = parse_scalar_prefix(token, p, field);
          } catch (const Error& e) {
            fail(std::string("malformed scalar (") + e.what() + ")", start);
          }
          if (!s || p != token.size()) fail("expected a scalar before '*'", start);
          coefficient = *s;
        } else {
          v[lookup(names, token, start)] += Scalar::one(field);
          continue;
        }
      }
      v[name_index(names)] += *coefficient;
    } while (accept('+'));
    expect_end();
    return v;
  }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t pos_ = 0;
};

}  // namespace

AlgebraPresentation parse_algebra_file(std::string_view text, std::string id) {
  std::optional<FieldSpec> field;
  std::vector<std::string> names;
  std::optional<Vector> unit;
  std::vector<std::optional<Vector>> products;
  std::vector<std::optional<Scalar>> counit;

  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    LineParser p(line, line_no);
    if (p.at_end()) continue;
    const std::size_t kw_col = p.pos();
    const std::string keyword = p.word("a keyword");

    if (keyword == "field") {
      if (field) p.fail("duplicate field line", kw_col);
      const std::size_t col = p.pos();
      std::string rest(line.substr(col));
      try {
        field = parse_field(rest);
      } catch (const Error& e) {
        p.skip_ws();
        p.fail(std::string("invalid field (") + e.what() + ")");
      }
      continue;
    }
    if (!field) p.fail("expected 'field' before '" + keyword + "'", kw_col);

    if (keyword == "basis") {
      if (!names.empty()) p.fail("duplicate basis line", kw_col);
      while (!p.at_end()) {
        const std::size_t col = p.pos();
        std::string n = p.word("a basis name");
        if (n == "0") p.fail("'0' cannot be a basis name", col);
        if (std::find(names.begin(), names.end(), n) != names.end()) p.fail("repeated basis name '" + n + "'", col);
        names.push_back(std::move(n));
      }
      if (names.empty()) p.fail("basis needs at least one name");
      products.assign(names.size() * names.size(), std::nullopt);
      counit.assign(names.size(), std::nullopt);
      continue;
    }
    if (names.empty()) p.fail("expected 'basis' before '" + keyword + "'", kw_col);

    if (keyword == "unit") {
      if (unit) p.fail("duplicate unit line", kw_col);
      unit = p.lincomb(*field, names);
    } else if (keyword == "mul") {
      const std::size_t a = p.name_index(names);
      const std::size_t b = p.name_index(names);
      p.expect('=', "'='");
      if (products[a * names.size() + b]) {
        throw Error(ErrorCode::DuplicateMulLine, "line " + std::to_string(line_no) + ": second 'mul " + names[a] +
                                                     " " + names[b] + "' line");
      }
      products[a * names.size() + b] = p.lincomb(*field, names);
    } else if (keyword == "counit") {
      const std::size_t a = p.name_index(names);
      p.expect('=', "'='");
      if (counit[a]) p.fail("duplicate counit line for '" + names[a] + "'", kw_col);
      counit[a] = p.scalar(*field);
      p.expect_end();
    } else {
      p.fail("unknown keyword '" + keyword + "'", kw_col);
    }
  }

  const std::string eof = "line " + std::to_string(line_no) + ": ";
  if (!field) throw Error(ErrorCode::ParseError, eof + "missing 'field' line");
  if (names.empty()) throw Error(ErrorCode::ParseError, eof + "missing 'basis' line");
  if (!unit) throw Error(ErrorCode::ParseError, eof + "missing 'unit' line");
  std::vector<std::string> missing;
  for (std::size_t a = 0; a < names.size(); ++a) {
    for (std::size_t b = 0; b < names.size(); ++b) {
      if (!products[a * names.size() + b]) missing.push_back(names[a] + " " + names[b]);
    }
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + ("'mul " + m + "'");
    throw Error(ErrorCode::ParseError, eof + "missing " + list);
  }

  auto pres = AlgebraPresentation::empty(std::move(id), *field, names);
  const std::size_t d = names.size();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (std::size_t c = 0; c < d; ++c) pres.lambda(a, b, c) = (*products[a * d + b])[c];
    }
  }
  pres.unit_vector = *unit;
  for (std::size_t a = 0; a < d; ++a) {
    if (counit[a]) pres.counit_vector[a] = *counit[a];
  }
  return pres;
}

std::string print_algebra_file(const AlgebraPresentation& pres) {
  std::ostringstream out;
  const FieldSpec& f = pres.field;
  switch (f.kind()) {
    case FieldSpec::Kind::Rationals: out << "field Q\n"; break;
    case FieldSpec::Kind::GaussianRationals: out << "field Qi\n"; break;
    case FieldSpec::Kind::PrimeField: out << "field GF " << f.modulus() << "\n"; break;
  }
  out << "basis";
  for (const auto& n : pres.basis_names) out << ' ' << n;
  out << "\nunit " << format_element(pres, pres.unit_vector) << "\n";
  const std::size_t d = pres.dim();
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      Vector v(pres.mul_constants.begin() + static_cast<std::ptrdiff_t>((a * d + b) * d),
               pres.mul_constants.begin() + static_cast<std::ptrdiff_t>((a * d + b + 1) * d));
      out << "mul " << pres.basis_names[a] << ' ' << pres.basis_names[b] << " = " << format_element(pres, v) << "\n";
    }
  }
  for (std::size_t a = 0; a < d; ++a) {
    if (!pres.counit_vector[a].is_zero()) {
      out << "counit " << pres.basis_names[a] << " = " << to_string(pres.counit_vector[a]) << "\n";
    }
  }
  return out.str();
}

}  // namespace frobcoh::cli
