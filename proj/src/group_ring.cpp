#include "grcodes/group_ring.hpp"

#include "grcodes/error.hpp"

#include <algorithm>
#include <cctype>

namespace grcodes {

GroupRingElement::GroupRingElement(FieldPtr field, GroupPtr group)
    : field_(std::move(field)), group_(std::move(group)) {
  if (!field_ || !group_)
    throw Error("group ring element needs a field and a group");
  coeffs_.assign(group_->order(), field_->zero());
}

GroupRingElement::GroupRingElement(FieldPtr field, GroupPtr group, Vector coeffs)
    : GroupRingElement(std::move(field), std::move(group)) {
  if (coeffs.size() != coeffs_.size())
    throw Error("expected " + std::to_string(coeffs_.size()) + " coefficients, got " +
                std::to_string(coeffs.size()));
  for (auto c : coeffs)
    if (c.rep >= field_->order())
      throw Error("coefficient outside the field");
  coeffs_ = std::move(coeffs);
}

GroupRingElement GroupRingElement::identity(FieldPtr field, GroupPtr group) {
  const std::size_t id = group->identity();
  const Element one = field->one();
  return monomial(std::move(field), std::move(group), id, one);
}

GroupRingElement GroupRingElement::monomial(FieldPtr field, GroupPtr group,
                                            std::size_t index, Element coeff) {
  GroupRingElement a(std::move(field), std::move(group));
  a.set_coeff(index, coeff);
  return a;
}

std::vector<std::size_t> GroupRingElement::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero())
      s.push_back(i);
  return s;
}

std::size_t GroupRingElement::weight() const { return hamming_weight(coeffs_); }

bool GroupRingElement::is_zero() const { return weight() == 0; }

bool operator==(const GroupRingElement &a, const GroupRingElement &b) {
  return same_field(a.field_, b.field_) && same_group(a.group_, b.group_) &&
         a.coeffs_ == b.coeffs_;
}

namespace {

void require_compatible(const GroupRingElement &a, const GroupRingElement &b,
                        const char *op) {
  require_same_field(a.field(), b.field(), op);
  if (!same_group(a.group(), b.group()))
    throw Error(std::string(op) + ": operands belong to different groups");
}

} // namespace

GroupRingElement operator+(const GroupRingElement &a, const GroupRingElement &b) {
  require_compatible(a, b, "group ring sum");
  Vector c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.field()->add(a.coeff(i), b.coeff(i));
  return {a.field(), a.group(), std::move(c)};
}

GroupRingElement operator-(const GroupRingElement &a, const GroupRingElement &b) {
  require_compatible(a, b, "group ring difference");
  Vector c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.field()->sub(a.coeff(i), b.coeff(i));
  return {a.field(), a.group(), std::move(c)};
}

GroupRingElement operator-(const GroupRingElement &a) {
  Vector c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.field()->neg(a.coeff(i));
  return {a.field(), a.group(), std::move(c)};
}

GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b) {
  require_compatible(a, b, "group ring product");
  const Field &f = *a.field();
  const GroupTable &g = *a.group();
  Vector c(a.size(), f.zero());
  const auto sb = b.support();
  for (auto i : a.support())
    for (auto j : sb) {
      auto &dst = c[g.mul(i, j)];
      dst = f.add(dst, f.mul(a.coeff(i), b.coeff(j)));
    }
  return {a.field(), a.group(), std::move(c)};
}

GroupRingElement scale(Element lambda, const GroupRingElement &a) {
  Vector c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.field()->mul(lambda, a.coeff(i));
  return {a.field(), a.group(), std::move(c)};
}

GroupRingElement transpose(const GroupRingElement &a) {
  Vector c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.coeff(a.group()->inverse(i));
  return {a.field(), a.group(), std::move(c)};
}

GroupRingElement frobenius_power(const GroupRingElement &a) {
  Vector c(a.size());
  for (std::size_t i = 0; i < c.size(); ++i)
    c[i] = a.field()->frobenius(a.coeff(i));
  return {a.field(), a.group(), std::move(c)};
}

Matrix sigma(const GroupRingElement &a) {
  const GroupTable &g = *a.group();
  const std::size_t n = g.order();
  Matrix m(a.field(), n, n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t ii = g.inverse(i);
    for (std::size_t j = 0; j < n; ++j)
      m.at(i, j) = a.coeff(g.mul(ii, j));
  }
  return m;
}

Matrix circ(const FieldPtr &field, const Vector &row) {
  const std::size_t n = row.size();
  Matrix m(field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m.at(r, c) = row[(c + n - r) % n];
  return m;
}

Matrix revcirc(const FieldPtr &field, const Vector &row) {
  const std::size_t n = row.size();
  Matrix m(field, n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      m.at(r, c) = row[(c + r) % n];
  return m;
}

namespace {

Matrix block_pattern(const std::vector<Matrix> &blocks, bool reverse) {
  if (blocks.empty())
    throw Error("block matrix needs at least one block");
  const std::size_t b = blocks[0].rows();
  for (const auto &blk : blocks) {
    if (blk.rows() != b || blk.cols() != b)
      throw Error("blocks must be square and of equal size");
    require_same_field(blk.field(), blocks[0].field(), "block matrix");
  }
  const std::size_t m = blocks.size();
  Matrix out(blocks[0].field(), m * b, m * b);
  for (std::size_t br = 0; br < m; ++br)
    for (std::size_t bc = 0; bc < m; ++bc) {
      const Matrix &blk = blocks[reverse ? (bc + br) % m : (bc + m - br) % m];
      for (std::size_t r = 0; r < b; ++r)
        for (std::size_t c = 0; c < b; ++c)
          out.at(br * b + r, bc * b + c) = blk.at(r, c);
    }
  return out;
}

} // namespace

Matrix block_circ(const std::vector<Matrix> &blocks) { return block_pattern(blocks, false); }

Matrix block_revcirc(const std::vector<Matrix> &blocks) { return block_pattern(blocks, true); }

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)); }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }
bool is_alpha(char c) { return std::isalpha(static_cast<unsigned char>(c)); }

} // namespace

GroupRingElement parse_element(const FieldPtr &field, const GroupPtr &group,
                               std::string_view text) {
  const Field &f = *field;
  GroupRingElement acc(field, group);
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < text.size() && is_space(text[pos]))
      ++pos;
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
      throw ParseError(first ? "empty element expression" : "dangling operator", pos);
    first = false;

    Element coeff = f.one();
    bool has_coeff = false;
    const std::size_t cstart = pos;
    if (is_digit(text[pos])) {
      while (pos < text.size() && is_digit(text[pos]))
        ++pos;
      has_coeff = true;
    } else if (text[pos] == 'w' && !f.is_prime()) {
      ++pos;
      while (pos < text.size() && is_digit(text[pos]))
        ++pos;
      has_coeff = true;
    }
    if (has_coeff) {
      try {
        coeff = f.parse_literal(text.substr(cstart, pos - cstart));
      } catch (const Error &e) {
        throw ParseError("bad coefficient '" + std::string(text.substr(cstart, pos - cstart)) +
                             "'",
                         cstart);
      }
      skip();
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip();
      }
    }

    std::size_t index = group->identity();
    const std::size_t wstart = pos;
    while (pos < text.size() && (is_alpha(text[pos]) || text[pos] == '^' ||
                                 (pos > wstart && is_digit(text[pos]))))
      ++pos;
    if (pos > wstart) {
      const auto word = text.substr(wstart, pos - wstart);
      try {
        index = group->index_of(word);
      } catch (const ParseError &e) {
        throw ParseError("bad group word '" + std::string(word) + "'",
                         wstart + e.position());
      }
    } else if (!has_coeff) {
      throw ParseError("expected a coefficient or group word", pos);
    }
    if (negate)
      coeff = f.neg(coeff);
    acc.set_coeff(index, f.add(acc.coeff(index), coeff));
  }
  return acc;
}

std::string to_string(const GroupRingElement &a) {
  const Field &f = *a.field();
  std::string out;
  for (auto i : a.support()) {
    if (!out.empty())
      out += " + ";
    const Element c = a.coeff(i);
    if (c != f.one())
      out += f.to_literal(c) + "*";
    out += a.group()->word(i);
  }
  return out.empty() ? "0" : out;
}

} // namespace grcodes
