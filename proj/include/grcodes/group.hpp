#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace grcodes {

enum class GroupKind { Cyclic, Dihedral, Quaternion, Semidirect, Product };

/// Default upper bound on group order accepted by build_group.
inline constexpr std::size_t kMaxGroupOrder = 4096;

/**
 * A group presentation together with the element listing g_1..g_n.
 *
 * Parameters by kind:
 *   Cyclic(n)            x^n = e
 *   Dihedral(n)          a^n = b^2 = e, ba = a^{-1}b              (order 2n)
 *   Quaternion(n)        a^{2n} = e, b^2 = a^n, ba = a^{-1}b       (order 4n)
 *   Semidirect(n, m, k)  x^n = y^m = e, yx = x^k y                 (order nm)
 *   Product(factors)     componentwise
 *
 * Listing forms:
 *   Dihedral   f1 {a^i, ba^i}   f2 {a^i, a^ib}   f3 {a^i, ba^i interleaved}
 *              f4 {a^i, a^ib interleaved}
 *   Quaternion f1 {a^i, a^ib}   f2 {a^i, ba^i}
 *   Semidirect f1 x innermost   f2 y innermost
 *   Product    loop_order lists factor positions from innermost to
 *              outermost; each factor keeps its own form.
 */
struct GroupSpec {
  GroupKind kind = GroupKind::Cyclic;
  std::uint32_t n = 1;
  std::uint32_t m = 0;
  std::uint32_t k = 0;
  std::string form = "f1";
  std::vector<GroupSpec> factors;
  std::vector<std::size_t> loop_order; // 0-based, innermost first
  /// Generator names; empty means the family default (x; a,b; x,y; and
  /// x,y,z,u,v,s,t across product factors).
  std::vector<std::string> gens;

  static GroupSpec cyclic(std::uint32_t n);
  static GroupSpec dihedral(std::uint32_t n, std::string form = "f1");
  static GroupSpec quaternion(std::uint32_t n, std::string form = "f1");
  static GroupSpec semidirect(std::uint32_t l, std::uint32_t m, std::uint32_t k,
                              std::string form = "f1");
  static GroupSpec product(std::vector<GroupSpec> factors,
                           std::vector<std::size_t> loop_order = {});

  std::size_t order() const;
};

/// Parses `C<n>`, `D<m>`, `Q<4n>`, `C<l>sd<k>C<m>` and `x`-separated
/// products, followed by `:`-separated options `form=fN`, `inner=<i>`,
/// `order=i,j,...`, `forms=fA,fB,...` and `gens=a,b,...` (factor indices
/// 1-based).
GroupSpec parse_group_spec(std::string_view text);
/// Canonical text form; parse_group_spec(to_string(s)) rebuilds s.
std::string to_string(const GroupSpec &spec);

struct Generator {
  std::string name;
  std::size_t index; // listing index of the generator
};

/**
 * Finite group as a multiplication table over a fixed listing. Indices are
 * 0-based listing positions; the listing's g_i is index i - 1.
 */
class GroupTable {
public:
  std::size_t order() const noexcept { return n_; }
  std::size_t identity() const noexcept { return id_; }
  std::size_t mul(std::size_t i, std::size_t j) const { return mul_[i * n_ + j]; }
  std::size_t inverse(std::size_t i) const { return inv_[i]; }
  /// Display word of the element at listing position i.
  const std::string &word(std::size_t i) const { return words_[i]; }
  const std::vector<Generator> &generators() const noexcept { return gens_; }
  const std::string &description() const noexcept { return description_; }

  /// Listing index of the product of a generator-power word such as
  /// `x2y`, `ba^3` or `e`. Throws ParseError on unknown symbols.
  std::size_t index_of(std::string_view word) const;

  friend bool operator==(const GroupTable &a, const GroupTable &b) {
    return a.n_ == b.n_ && a.mul_ == b.mul_ && a.words_ == b.words_;
  }

private:
  friend class GroupTableBuilder;
  std::size_t n_ = 0;
  std::size_t id_ = 0;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::string> words_;
  std::vector<Generator> gens_;
  std::string description_;
};

using GroupPtr = std::shared_ptr<const GroupTable>;

/// Builds the table for a spec. Throws grcodes::Error on invalid parameters
/// or when the order exceeds max_order.
GroupPtr build_group(const GroupSpec &spec, std::size_t max_order = kMaxGroupOrder);

inline GroupPtr build_group(std::string_view text,
                            std::size_t max_order = kMaxGroupOrder) {
  return build_group(parse_group_spec(text), max_order);
}

bool same_group(const GroupPtr &a, const GroupPtr &b);

} // namespace grcodes
