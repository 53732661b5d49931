#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace grcodes {

/// A field element in packed power-basis coordinates: rep = sum c_i p^i,
/// where c_i is the coefficient of X^i in the residue modulo the field
/// modulus. For prime fields rep is just the integer value.
struct Element {
  std::uint32_t rep = 0;

  constexpr bool is_zero() const noexcept { return rep == 0; }
  friend constexpr auto operator<=>(Element, Element) = default;
};

/// Default upper bound on field order accepted by Field::make.
inline constexpr std::uint64_t kMaxFieldOrder = 1u << 16;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/**
 * Finite field GF(p^k) realised as F_p[X]/(modulus).
 *
 * Immutable after construction. Multiplication goes through exp/log tables
 * built from the designated primitive element; for q <= 256 full addition
 * and multiplication tables are also built so the enumeration hot loops are
 * a single lookup.
 */
class Field {
public:
  /// Validates p (prime), k >= 1 and the modulus (monic, degree k,
  /// irreducible). When the modulus is omitted: k = 1 uses F_p, GF(9) uses
  /// X^2 + 2X + 2, and other extensions take the first primitive polynomial
  /// in coefficient order. Coefficients are listed c0, c1, ..., ck.
  static FieldPtr make(std::uint32_t p, std::uint32_t k,
                       std::optional<std::vector<std::uint32_t>> modulus = {},
                       std::uint64_t max_order = kMaxFieldOrder);

  std::uint32_t characteristic() const noexcept { return p_; }
  std::uint32_t degree() const noexcept { return k_; }
  std::uint32_t order() const noexcept { return q_; }
  bool is_prime() const noexcept { return k_ == 1; }
  const std::vector<std::uint32_t> &modulus() const noexcept { return modulus_; }

  Element zero() const noexcept { return {0}; }
  Element one() const noexcept { return {1}; }
  Element primitive() const noexcept { return primitive_; }
  /// primitive^e, e taken modulo q - 1.
  Element primitive_power(std::int64_t e) const;
  /// Image of an integer in the prime subfield.
  Element from_int(std::int64_t v) const;
  /// The i-th element in rep order, 0 <= i < q.
  Element element(std::uint32_t i) const;

  Element add(Element a, Element b) const;
  Element sub(Element a, Element b) const;
  Element neg(Element a) const;
  Element mul(Element a, Element b) const;
  /// Throws grcodes::Error on zero.
  Element inv(Element a) const;
  Element div(Element a, Element b) const { return mul(a, inv(b)); }
  Element pow(Element a, std::uint64_t e) const;
  /// a -> a^p.
  Element frobenius(Element a) const { return frob_[a.rep]; }
  /// Discrete log base primitive(); nullopt for zero.
  std::optional<std::uint32_t> log(Element a) const;
  /// Multiplicative order of a nonzero element.
  std::uint32_t multiplicative_order(Element a) const;

  std::vector<std::uint32_t> coords(Element a) const;
  Element from_coords(const std::vector<std::uint32_t> &c) const;

  /// Literal syntax: prime fields print 0..p-1; extension fields print 0, 1
  /// or w<e> (primitive^e). The parser additionally accepts prime-subfield
  /// integers and a bare `w` in extension fields.
  std::string to_literal(Element a) const;
  Element parse_literal(std::string_view text) const;

  /// `GF(q)` when the modulus is the default, otherwise
  /// `GF(p^k;modulus=c0,...,ck)`.
  std::string spec_string() const;

  friend bool operator==(const Field &a, const Field &b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

private:
  Field() = default;
  Element mul_poly(Element a, Element b) const;
  Element add_digits(Element a, Element b) const;

  std::uint32_t p_ = 0, k_ = 0, q_ = 0;
  std::vector<std::uint32_t> modulus_;
  bool default_modulus_ = true;
  Element primitive_{};
  std::vector<std::uint32_t> exp_; // length 2(q-1)
  std::vector<std::uint32_t> log_; // log_[0] unused
  std::vector<Element> frob_;
  std::vector<Element> neg_;
  // Full tables only for q <= kSmallField.
  static constexpr std::uint32_t kSmallField = 256;
  std::vector<std::uint16_t> add_tab_, mul_tab_;
};

bool same_field(const FieldPtr &a, const FieldPtr &b);
/// Throws grcodes::Error when the fields differ.
void require_same_field(const FieldPtr &a, const FieldPtr &b,
                        std::string_view context);

/// Parses `GF(q)`, `GF(p^k)` or `GF(p^k;modulus=c0,...,ck)`.
FieldPtr parse_field(std::string_view text);

bool is_prime(std::uint64_t n);

/// Monic polynomial over F_p with coefficients c0..ck has no factor of
/// degree 1..k/2 (exhaustive trial division).
bool is_irreducible(const std::vector<std::uint32_t> &coeffs, std::uint32_t p);

/// Field element bound to its field; arithmetic checks that both operands
/// come from the same field.
class FieldElement {
public:
  FieldElement(FieldPtr field, Element value)
      : field_(std::move(field)), value_(value) {}

  const FieldPtr &field() const noexcept { return field_; }
  Element value() const noexcept { return value_; }
  bool is_zero() const noexcept { return value_.is_zero(); }

  FieldElement inverse() const;
  FieldElement frobenius() const;
  FieldElement operator-() const;

  friend FieldElement operator+(const FieldElement &a, const FieldElement &b);
  friend FieldElement operator-(const FieldElement &a, const FieldElement &b);
  friend FieldElement operator*(const FieldElement &a, const FieldElement &b);
  friend bool operator==(const FieldElement &a, const FieldElement &b);

  std::string to_string() const { return field_->to_literal(value_); }

private:
  FieldPtr field_;
  Element value_;
};

} // namespace grcodes
