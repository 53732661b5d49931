#include "grcodes/twod.hpp"

#include "grcodes/error.hpp"

#include <cctype>
#include <charconv>

namespace grcodes {

BivarPoly::BivarPoly(FieldPtr field) : field_(std::move(field)) {
  if (!field_)
    throw Error("polynomial needs a field");
}

BivarPoly BivarPoly::constant(FieldPtr field, Element c) {
  return monomial(std::move(field), 0, 0, c);
}

BivarPoly BivarPoly::monomial(FieldPtr field, std::uint32_t i, std::uint32_t j, Element c) {
  BivarPoly f(std::move(field));
  f.add_term(i, j, c);
  return f;
}

BivarPoly BivarPoly::x_y_cyclic(FieldPtr field, std::uint32_t l, std::uint32_t m) {
  const Element one = field->one(), minus_one = field->neg(one);
  BivarPoly f(std::move(field));
  f.add_term(l, m, one);
  f.add_term(l, 0, minus_one);
  f.add_term(0, m, minus_one);
  f.add_term(0, 0, one);
  return f;
}

Element BivarPoly::coeff(std::uint32_t i, std::uint32_t j) const {
  auto it = terms_.find({i, j});
  return it == terms_.end() ? field_->zero() : it->second;
}

void BivarPoly::add_term(std::uint32_t i, std::uint32_t j, Element c) {
  if (c.is_zero())
    return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (inserted)
    return;
  it->second = field_->add(it->second, c);
  if (it->second.is_zero())
    terms_.erase(it);
}

Monomial BivarPoly::degree() const {
  if (is_zero())
    throw Error("the zero polynomial has no degree");
  Monomial d{0, 0};
  for (const auto &[mono, c] : terms_) {
    d.first = std::max(d.first, mono.first);
    d.second = std::max(d.second, mono.second);
  }
  return d;
}

Monomial BivarPoly::leading_monomial() const {
  if (is_zero())
    throw Error("the zero polynomial has no leading term");
  return terms_.begin()->first;
}

Element BivarPoly::leading_coeff() const {
  if (is_zero())
    throw Error("the zero polynomial has no leading term");
  return terms_.begin()->second;
}

bool operator==(const BivarPoly &a, const BivarPoly &b) {
  return same_field(a.field_, b.field_) && a.terms_ == b.terms_;
}

BivarPoly operator+(const BivarPoly &a, const BivarPoly &b) {
  require_same_field(a.field(), b.field(), "polynomial sum");
  BivarPoly s = a;
  for (const auto &[mono, c] : b.terms())
    s.add_term(mono.first, mono.second, c);
  return s;
}

BivarPoly operator-(const BivarPoly &a, const BivarPoly &b) {
  return a + scale(a.field()->neg(a.field()->one()), b);
}

BivarPoly operator*(const BivarPoly &a, const BivarPoly &b) {
  require_same_field(a.field(), b.field(), "polynomial product");
  const Field &f = *a.field();
  BivarPoly p(a.field());
  for (const auto &[ma, ca] : a.terms())
    for (const auto &[mb, cb] : b.terms())
      p.add_term(ma.first + mb.first, ma.second + mb.second, f.mul(ca, cb));
  return p;
}

BivarPoly scale(Element c, const BivarPoly &f) {
  BivarPoly s(f.field());
  for (const auto &[mono, v] : f.terms())
    s.add_term(mono.first, mono.second, f.field()->mul(c, v));
  return s;
}

BivarPoly reduce(const BivarPoly &f, std::uint32_t l, std::uint32_t m) {
  if (l == 0 || m == 0)
    throw Error("quotient ring needs l, m >= 1");
  BivarPoly r(f.field());
  for (const auto &[mono, c] : f.terms())
    r.add_term(mono.first % l, mono.second % m, c);
  return r;
}

BivarPoly mul_quotient(const BivarPoly &a, const BivarPoly &b, std::uint32_t l,
                       std::uint32_t m) {
  return reduce(a * b, l, m);
}

BivarPoly reciprocal(const BivarPoly &f) {
  const auto [l1, l2] = f.degree();
  BivarPoly r(f.field());
  for (const auto &[mono, c] : f.terms())
    r.add_term(l1 - mono.first, l2 - mono.second, c);
  return r;
}

Division divide(const BivarPoly &f, const BivarPoly &g) {
  require_same_field(f.field(), g.field(), "polynomial division");
  if (g.is_zero())
    throw Error("division by the zero polynomial");
  const Field &fld = *f.field();
  const auto [a, b] = g.leading_monomial();
  const Element lc_inv = fld.inv(g.leading_coeff());
  Division d{BivarPoly(f.field()), BivarPoly(f.field())};
  BivarPoly r = f;
  while (!r.is_zero()) {
    const auto [i, j] = r.leading_monomial();
    const Element c = r.leading_coeff();
    if (i >= a && j >= b) {
      const Element t = fld.mul(c, lc_inv);
      d.quotient.add_term(i - a, j - b, t);
      r = r - BivarPoly::monomial(f.field(), i - a, j - b, t) * g;
    } else {
      d.remainder.add_term(i, j, c);
      r.add_term(i, j, fld.neg(c));
    }
  }
  return d;
}

bool divides(const BivarPoly &g, const BivarPoly &f) { return divide(f, g).exact(); }

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

} // namespace

BivarPoly parse_poly(const FieldPtr &field, std::string_view text) {
  const Field &f = *field;
  BivarPoly out(field);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  auto exponent = [&]() -> std::uint32_t {
    skip();
    bool caret = false, brace = false;
    if (pos < text.size() && text[pos] == '^') {
      caret = true;
      ++pos;
      if (pos < text.size() && text[pos] == '{') {
        brace = true;
        ++pos;
      }
    }
    const std::size_t start = pos;
    while (pos < text.size() && is_digit(text[pos]))
      ++pos;
    if (pos == start) {
      if (caret)
        throw ParseError("missing exponent", pos);
      return 1;
    }
    std::uint32_t e = 0;
    auto [ptr, ec] = std::from_chars(text.data() + start, text.data() + pos, e);
    if (ec != std::errc())
      throw ParseError("exponent out of range", start);
    if (brace) {
      if (pos >= text.size() || text[pos] != '}')
        throw ParseError("expected '}'", pos);
      ++pos;
    }
    return e;
  };

  bool first = true;
  while (true) {
    skip();
    bool negate = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
      negate = text[pos] == '-';
      ++pos;
      skip();
    } else if (!first) {
      if (pos == text.size())
        break;
      throw ParseError("expected '+' or '-'", pos);
    }
    if (pos == text.size())
      throw ParseError(first ? "empty polynomial" : "dangling operator", pos);
    first = false;

    Element c = f.one();
    bool has_coeff = false;
    const std::size_t cstart = pos;
    if (is_digit(text[pos]) || (text[pos] == 'w' && !f.is_prime())) {
      ++pos;
      while (pos < text.size() && is_digit(text[pos]))
        ++pos;
      try {
        c = f.parse_literal(text.substr(cstart, pos - cstart));
      } catch (const Error &) {
        throw ParseError("bad coefficient '" + std::string(text.substr(cstart, pos - cstart)) +
                             "'",
                         cstart);
      }
      has_coeff = true;
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
    }
    std::uint32_t i = 0, j = 0;
    bool has_var = false;
    while (pos < text.size() && (text[pos] == 'x' || text[pos] == 'y')) {
      const char v = text[pos++];
      (v == 'x' ? i : j) += exponent();
      has_var = true;
      skip();
    }
    if (!has_coeff && !has_var)
      throw ParseError("expected a coefficient or monomial", pos);
    out.add_term(i, j, negate ? f.neg(c) : c);
  }
  return out;
}

std::string to_string(const BivarPoly &p) {
  const Field &f = *p.field();
  std::string out;
  for (const auto &[mono, c] : p.terms()) {
    if (!out.empty())
      out += " + ";
    std::string m;
    if (mono.first)
      m += "x" + (mono.first > 1 ? std::to_string(mono.first) : "");
    if (mono.second)
      m += "y" + (mono.second > 1 ? std::to_string(mono.second) : "");
    if (m.empty())
      out += f.to_literal(c);
    else
      out += (c == f.one() ? "" : f.to_literal(c) + "*") + m;
  }
  return out.empty() ? "0" : out;
}

Vector to_vector(const BivarPoly &f, std::uint32_t l, std::uint32_t m) {
  Vector v(static_cast<std::size_t>(l) * m, f.field()->zero());
  for (const auto &[mono, c] : f.terms()) {
    if (mono.first >= l || mono.second >= m)
      throw Error("monomial outside the l x m array; reduce the polynomial first");
    v[mono.first + static_cast<std::size_t>(l) * mono.second] = c;
  }
  return v;
}

BivarPoly from_vector(const FieldPtr &field, const Vector &v, std::uint32_t l,
                      std::uint32_t m) {
  if (v.size() != static_cast<std::size_t>(l) * m)
    throw Error("vector length does not match l*m");
  BivarPoly f(field);
  for (std::size_t p = 0; p < v.size(); ++p)
    f.add_term(static_cast<std::uint32_t>(p % l), static_cast<std::uint32_t>(p / l), v[p]);
  return f;
}

namespace {

// Generator rows x^i y^j g (reduced) for i < l - a, j < m - b; g may have
// degree at the bounds, in which case fewer (possibly no) rows result.
TwoDCode principal_code(std::uint32_t l, std::uint32_t m, const BivarPoly &g) {
  const FieldPtr &field = g.field();
  const auto [a, b] = g.degree();
  const std::uint32_t rx = a < l ? l - a : 0, ry = b < m ? m - b : 0;
  Matrix gen(field, 0, static_cast<std::size_t>(l) * m);
  for (std::uint32_t j = 0; j < ry; ++j)
    for (std::uint32_t i = 0; i < rx; ++i)
      gen.append_row(to_vector(
          mul_quotient(BivarPoly::monomial(field, i, j, field->one()), g, l, m), l, m));
  Matrix all(field, 0, static_cast<std::size_t>(l) * m);
  for (std::uint32_t j = 0; j < m; ++j)
    for (std::uint32_t i = 0; i < l; ++i)
      all.append_row(to_vector(
          mul_quotient(BivarPoly::monomial(field, i, j, field->one()), g, l, m), l, m));
  TwoDCode c{l, m, g, LinearCode(std::move(gen)), static_cast<std::size_t>(rx) * ry,
             all.rank(), {}};
  const std::size_t k = c.code.dimension();
  if (k != c.formula_dimension)
    c.warnings.push_back("rank " + std::to_string(k) + " differs from (l-a)(m-b) = " +
                         std::to_string(c.formula_dimension));
  if (k != c.ideal_dimension)
    c.warnings.push_back("rank " + std::to_string(k) + " differs from the ideal dimension " +
                         std::to_string(c.ideal_dimension));
  return c;
}

void check_sizes(std::uint32_t l, std::uint32_t m) {
  if (l == 0 || m == 0)
    throw Error("2D-cyclic codes need l, m >= 1");
  if (static_cast<std::uint64_t>(l) * m > 4096)
    throw Error("l*m above 4096 is outside the supported range");
}

} // namespace

TwoDCode code_from_g(std::uint32_t l, std::uint32_t m, const BivarPoly &g) {
  check_sizes(l, m);
  if (g.is_zero())
    throw Error("generator polynomial is zero");
  const auto [a, b] = g.degree();
  if (a >= l || b >= m)
    throw Error("generator degree (" + std::to_string(a) + ", " + std::to_string(b) +
                ") must be below (l, m) = (" + std::to_string(l) + ", " + std::to_string(m) +
                ")");
  if (!divides(g, BivarPoly::x_y_cyclic(g.field(), l, m)))
    throw Error("g does not divide (x^l - 1)(y^m - 1)");
  return principal_code(l, m, g);
}

DualStar dual_star(std::uint32_t l, std::uint32_t m, const BivarPoly &g) {
  const TwoDCode c = code_from_g(l, m, g);
  if (c.code.dimension() == 0)
    throw Error("C* is only defined when dim C > 0");
  Division d = divide(BivarPoly::x_y_cyclic(g.field(), l, m), g);
  BivarPoly hs = reciprocal(d.quotient);
  TwoDCode cs = principal_code(l, m, hs);
  if (!dual_euclidean(c.code).contains(cs.code))
    throw Error("internal: C* is not contained in the dual of C");
  return {std::move(d.quotient), std::move(hs), std::move(cs)};
}

TwoDVerdict check_dual_containing(std::uint32_t l, std::uint32_t m, const BivarPoly &g) {
  const DualStar ds = dual_star(l, m, g);
  const TwoDCode c = code_from_g(l, m, g);
  TwoDVerdict v;
  v.algebraic = divides(g * reciprocal(g), BivarPoly::x_y_cyclic(g.field(), l, m));
  v.matrix = c.code.contains(ds.code.code);
  return v;
}

TwoDVerdict check_self_orthogonal(std::uint32_t l, std::uint32_t m, const BivarPoly &g) {
  const TwoDCode c = code_from_g(l, m, g);
  if (c.code.dimension() == 0)
    throw Error("self-orthogonality test needs dim C > 0");
  TwoDVerdict v;
  v.algebraic = divides(BivarPoly::x_y_cyclic(g.field(), l, m), g * reciprocal(g));
  const Matrix &gen = c.code.generator();
  v.matrix = (gen * gen.transpose()).is_zero();
  return v;
}

bool shift_closed(const TwoDCode &c) {
  const FieldPtr &field = c.g.field();
  const BivarPoly x = BivarPoly::monomial(field, 1, 0, field->one());
  const BivarPoly y = BivarPoly::monomial(field, 0, 1, field->one());
  for (std::size_t r = 0; r < c.code.dimension(); ++r) {
    const BivarPoly w = from_vector(field, c.code.basis().row(r), c.l, c.m);
    if (!c.code.contains(to_vector(mul_quotient(x, w, c.l, c.m), c.l, c.m)) ||
        !c.code.contains(to_vector(mul_quotient(y, w, c.l, c.m), c.l, c.m)))
      return false;
  }
  return true;
}

} // namespace grcodes
