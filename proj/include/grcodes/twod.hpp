#pragma once

#include "grcodes/field.hpp"
#include "grcodes/linear_code.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace grcodes {

/// Exponent pair (i, j) of x^i y^j.
using Monomial = std::pair<std::uint32_t, std::uint32_t>;

/// Lex order with x > y: (i, j) > (k, l) iff i > k, or i = k and j > l.
/// std::pair already compares this way.
inline bool lex_greater(const Monomial &a, const Monomial &b) { return a > b; }

/// Sparse polynomial in F_q[x, y]. Zero coefficients are never stored.
class BivarPoly {
public:
  using Terms = std::map<Monomial, Element, std::greater<Monomial>>;

  explicit BivarPoly(FieldPtr field);
  static BivarPoly constant(FieldPtr field, Element c);
  static BivarPoly monomial(FieldPtr field, std::uint32_t i, std::uint32_t j, Element c);
  /// (x^l - 1)(y^m - 1).
  static BivarPoly x_y_cyclic(FieldPtr field, std::uint32_t l, std::uint32_t m);

  const FieldPtr &field() const noexcept { return field_; }
  /// Terms in descending lex order.
  const Terms &terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  Element coeff(std::uint32_t i, std::uint32_t j) const;
  /// Adds c x^i y^j.
  void add_term(std::uint32_t i, std::uint32_t j, Element c);

  /// Componentwise maxima (deg_x, deg_y); throws on zero.
  Monomial degree() const;
  /// Lex-largest monomial; throws on zero.
  Monomial leading_monomial() const;
  Element leading_coeff() const;

  friend bool operator==(const BivarPoly &a, const BivarPoly &b);

private:
  FieldPtr field_;
  Terms terms_;
};

BivarPoly operator+(const BivarPoly &a, const BivarPoly &b);
BivarPoly operator-(const BivarPoly &a, const BivarPoly &b);
BivarPoly operator*(const BivarPoly &a, const BivarPoly &b);
BivarPoly scale(Element c, const BivarPoly &f);

/// Exponents reduced modulo l (x) and m (y).
BivarPoly reduce(const BivarPoly &f, std::uint32_t l, std::uint32_t m);
/// f1 f2 mod (x^l - 1, y^m - 1).
BivarPoly mul_quotient(const BivarPoly &a, const BivarPoly &b, std::uint32_t l,
                       std::uint32_t m);
/// Sum f_ij x^{l1-i} y^{l2-j} with (l1, l2) = degree(f); throws on zero.
BivarPoly reciprocal(const BivarPoly &f);

struct Division {
  BivarPoly quotient;
  BivarPoly remainder;
  bool exact() const { return remainder.is_zero(); }
};
/// Lex division of f by the single divisor g: f = g*quotient + remainder with
/// no remainder term divisible by the leading monomial of g. The remainder
/// is zero exactly when g divides f.
Division divide(const BivarPoly &f, const BivarPoly &g);
bool divides(const BivarPoly &g, const BivarPoly &f);

/// `+`/`-` separated terms `[coeff ['*']] x<i>y<j>`, with optional `^` and
/// braces around exponents, and `1` or a bare literal for constants.
BivarPoly parse_poly(const FieldPtr &field, std::string_view text);
/// Terms in descending lex order, e.g. `x4y4 + x4y2 + 1`; `0` if zero.
std::string to_string(const BivarPoly &f);

/// Coefficient of x^i y^j goes to position i + l*j. Exponents must be reduced.
Vector to_vector(const BivarPoly &f, std::uint32_t l, std::uint32_t m);
BivarPoly from_vector(const FieldPtr &field, const Vector &v, std::uint32_t l,
                      std::uint32_t m);

/// Principal code <g> in F_q[x,y]/(x^l - 1, y^m - 1).
struct TwoDCode {
  std::uint32_t l = 0, m = 0;
  BivarPoly g;
  /// Rows x^i y^j g for i < l - a, j < m - b, (a, b) = degree(g).
  LinearCode code;
  /// (l - a)(m - b).
  std::size_t formula_dimension = 0;
  /// Rank of all lm shifts of g, i.e. the dimension of the ideal.
  std::size_t ideal_dimension = 0;
  std::vector<std::string> warnings;
};

/// Requires deg_x(g) < l, deg_y(g) < m and g | (x^l-1)(y^m-1).
TwoDCode code_from_g(std::uint32_t l, std::uint32_t m, const BivarPoly &g);

struct DualStar {
  BivarPoly h;      // (x^l-1)(y^m-1) / g
  BivarPoly h_star; // reciprocal(h)
  TwoDCode code;    // <h*> in the quotient ring
};
/// C* = <h*>. Requires g | (x^l-1)(y^m-1) and dim <g> > 0.
DualStar dual_star(std::uint32_t l, std::uint32_t m, const BivarPoly &g);

/// An algebraic criterion next to the direct matrix check it predicts.
struct TwoDVerdict {
  bool algebraic = false;
  bool matrix = false;
  bool agree() const { return algebraic == matrix; }
};

/// C* in C: g g* | (x^l-1)(y^m-1), against row-space containment.
/// A zero C* is trivially contained.
TwoDVerdict check_dual_containing(std::uint32_t l, std::uint32_t m, const BivarPoly &g);
/// C in its Euclidean dual: (x^l-1)(y^m-1) | g g*, against G G^T = O.
/// Requires dim C > 0.
TwoDVerdict check_self_orthogonal(std::uint32_t l, std::uint32_t m, const BivarPoly &g);

/// Whether every basis codeword stays in the code under the row and column
/// cyclic shifts of its l x m array.
bool shift_closed(const TwoDCode &c);

} // namespace grcodes
