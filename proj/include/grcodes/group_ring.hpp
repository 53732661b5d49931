#pragma once

#include "grcodes/field.hpp"
#include "grcodes/group.hpp"
#include "grcodes/matrix.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace grcodes {

/// a = sum_i alpha_i g_i in F_q G; coefficient i belongs to listing position i.
class GroupRingElement {
public:
  /// The zero element.
  GroupRingElement(FieldPtr field, GroupPtr group);
  GroupRingElement(FieldPtr field, GroupPtr group, Vector coeffs);

  static GroupRingElement identity(FieldPtr field, GroupPtr group);
  /// coeff * g_index.
  static GroupRingElement monomial(FieldPtr field, GroupPtr group, std::size_t index,
                                   Element coeff);

  const FieldPtr &field() const noexcept { return field_; }
  const GroupPtr &group() const noexcept { return group_; }
  const Vector &coeffs() const noexcept { return coeffs_; }
  Element coeff(std::size_t i) const { return coeffs_.at(i); }
  void set_coeff(std::size_t i, Element c) { coeffs_.at(i) = c; }
  std::size_t size() const noexcept { return coeffs_.size(); }

  std::vector<std::size_t> support() const;
  std::size_t weight() const;
  bool is_zero() const;

  friend bool operator==(const GroupRingElement &a, const GroupRingElement &b);

private:
  FieldPtr field_;
  GroupPtr group_;
  Vector coeffs_;
};

GroupRingElement operator+(const GroupRingElement &a, const GroupRingElement &b);
GroupRingElement operator-(const GroupRingElement &a, const GroupRingElement &b);
GroupRingElement operator-(const GroupRingElement &a);
/// Convolution: coefficient of g' is sum over gh = g' of alpha_g beta_h.
GroupRingElement operator*(const GroupRingElement &a, const GroupRingElement &b);
GroupRingElement scale(Element lambda, const GroupRingElement &a);

/// a^T = sum alpha_i g_i^{-1}.
GroupRingElement transpose(const GroupRingElement &a);
/// Coefficientwise Frobenius a^p.
GroupRingElement frobenius_power(const GroupRingElement &a);

/// sigma(a)[i][j] = alpha at g_i^{-1} g_j; row i holds the coefficients of g_i a.
Matrix sigma(const GroupRingElement &a);

/// Row r is `row` shifted right by r.
Matrix circ(const FieldPtr &field, const Vector &row);
/// Row r is `row` shifted left by r.
Matrix revcirc(const FieldPtr &field, const Vector &row);
/// Block (r, c) is blocks[(c - r) mod m].
Matrix block_circ(const std::vector<Matrix> &blocks);
/// Block (r, c) is blocks[(c + r) mod m].
Matrix block_revcirc(const std::vector<Matrix> &blocks);

/**
 * Parses `term ('+' | '-' term)*` where a term is `[coeff ['*']] word`, a
 * bare coefficient (a multiple of e), or `e`. Words are generator powers
 * such as `x2y` or `ab^3`; coefficients are field literals. Repeated words
 * accumulate.
 */
GroupRingElement parse_element(const FieldPtr &field, const GroupPtr &group,
                               std::string_view text);
/// Inverse of parse_element: terms in listing order, `c*word` for c != 1,
/// and `0` for the zero element.
std::string to_string(const GroupRingElement &a);

} // namespace grcodes
