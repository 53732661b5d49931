#pragma once
// Reference implementations used to check the library. They share no code
// with it beyond the Element/Field types used to carry values in and out.

#include "grcodes/group_ring.hpp"
#include "grcodes/linear_code.hpp"
#include "grcodes/twod.hpp"

#include <cstdint>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace oracle {

// Arithmetic on coefficient vectors c0..c(k-1) over F_p modulo a monic
// polynomial, by schoolbook multiplication and long division.
struct PolyField {
  std::uint32_t p, k;
  std::vector<std::uint32_t> modulus; // c0..ck, monic

  using Poly = std::vector<std::uint32_t>;

  Poly add(const Poly &a, const Poly &b) const {
    Poly r(k);
    for (std::uint32_t i = 0; i < k; ++i)
      r[i] = (a[i] + b[i]) % p;
    return r;
  }
  Poly mul(const Poly &a, const Poly &b) const {
    std::vector<std::uint64_t> t(2 * k, 0);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j)
        t[i + j] = (t[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    for (std::size_t d = 2 * k - 1; d >= k; --d) {
      const std::uint64_t c = t[d];
      if (c == 0)
        continue;
      for (std::uint32_t i = 0; i <= k; ++i)
        t[d - k + i] = (t[d - k + i] + (p - c) * modulus[i]) % p;
    }
    return Poly(t.begin(), t.begin() + k);
  }
  Poly pow(Poly a, std::uint64_t e) const {
    Poly r(k, 0);
    r[0] = 1;
    while (e) {
      if (e & 1)
        r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
};

inline PolyField poly_field(const grcodes::Field &f) {
  return {f.characteristic(), f.degree(), f.modulus()};
}

// Dihedral group of order 2n as permutations of the n-gon vertices:
// rotation r(v) = v + 1, reflection s(v) = -v.
struct DihedralPerm {
  std::uint32_t n;
  using Perm = std::vector<std::uint32_t>;
  Perm rotation(std::uint32_t i) const {
    Perm p(n);
    for (std::uint32_t v = 0; v < n; ++v)
      p[v] = (v + i) % n;
    return p;
  }
  Perm reflection() const {
    Perm p(n);
    for (std::uint32_t v = 0; v < n; ++v)
      p[v] = (n - v) % n;
    return p;
  }
  // (f*g)(v) = f(g(v)): apply g first.
  static Perm compose(const Perm &f, const Perm &g) {
    Perm r(g.size());
    for (std::size_t v = 0; v < g.size(); ++v)
      r[v] = f[g[v]];
    return r;
  }
};

// Minimum Hamming (or symplectic) weight over nonzero combinations of the
// rows of `basis`, by counting through all q^k messages in base q and
// forming each codeword from scratch.
inline std::size_t naive_min_weight(const grcodes::Matrix &basis, bool symplectic = false,
                                    const grcodes::LinearCode *exclude = nullptr) {
  const grcodes::Field &f = *basis.field();
  const std::size_t k = basis.rows(), n = basis.cols();
  std::vector<std::uint32_t> msg(k, 0);
  std::size_t best = std::numeric_limits<std::size_t>::max();
  while (true) {
    std::size_t i = 0;
    while (i < k && ++msg[i] == f.order())
      msg[i++] = 0;
    if (i == k)
      break;
    grcodes::Vector cw(n, f.zero());
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < n; ++c)
        cw[c] = f.add(cw[c], f.mul(f.element(msg[r]), basis.at(r, c)));
    if (exclude && exclude->contains(cw))
      continue;
    std::size_t w = 0;
    if (symplectic) {
      for (std::size_t c = 0; c < n / 2; ++c)
        w += !(cw[c].is_zero() && cw[c + n / 2].is_zero());
    } else {
      for (const auto &e : cw)
        w += !e.is_zero();
    }
    if (w > 0 && w < best)
      best = w;
  }
  return best;
}

// Number of vectors in F_q^n orthogonal to every row of g under `form`.
inline std::uint64_t count_orthogonal(
    const grcodes::Matrix &g,
    const std::function<grcodes::Element(const grcodes::Vector &, const grcodes::Vector &)> &form) {
  const grcodes::Field &f = *g.field();
  const std::size_t n = g.cols();
  std::vector<std::uint32_t> digits(n, 0);
  std::uint64_t count = 0;
  while (true) {
    grcodes::Vector v(n);
    for (std::size_t i = 0; i < n; ++i)
      v[i] = f.element(digits[i]);
    bool ok = true;
    for (std::size_t r = 0; r < g.rows() && ok; ++r)
      ok = form(g.row(r), v).is_zero();
    count += ok;
    std::size_t i = 0;
    while (i < n && ++digits[i] == f.order())
      digits[i++] = 0;
    if (i == n)
      break;
  }
  return count;
}

// Whitespace-separated integer grid.
inline std::vector<std::vector<int>> read_grid(const std::string &path) {
  std::ifstream in(path);
  std::vector<std::vector<int>> grid;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<int> row;
    for (int v; ls >> v;)
      row.push_back(v);
    if (!row.empty())
      grid.push_back(std::move(row));
  }
  return grid;
}

inline grcodes::GroupRingElement random_element(const grcodes::FieldPtr &f,
                                                const grcodes::GroupPtr &g, std::mt19937_64 &rng) {
  grcodes::Vector c(g->order());
  for (auto &e : c)
    e = f->element(static_cast<std::uint32_t>(rng() % f->order()));
  return grcodes::GroupRingElement(f, g, c);
}

inline grcodes::Matrix random_matrix(const grcodes::FieldPtr &f, std::size_t rows,
                                     std::size_t cols, std::mt19937_64 &rng) {
  grcodes::Matrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      m.at(r, c) = f->element(static_cast<std::uint32_t>(rng() % f->order()));
  return m;
}

inline grcodes::BivarPoly random_poly(const grcodes::FieldPtr &f, std::uint32_t dx,
                                      std::uint32_t dy, std::mt19937_64 &rng) {
  grcodes::BivarPoly p(f);
  for (std::uint32_t i = 0; i <= dx; ++i)
    for (std::uint32_t j = 0; j <= dy; ++j)
      if (rng() % 2)
        p.add_term(i, j, f->element(static_cast<std::uint32_t>(rng() % f->order())));
  return p;
}

// x (or y) times a codeword of length l*m, by moving array entries directly.
inline grcodes::Vector shift_2d(const grcodes::Vector &v, std::uint32_t l, std::uint32_t m,
                                bool along_x) {
  grcodes::Vector out(v.size());
  for (std::uint32_t j = 0; j < m; ++j)
    for (std::uint32_t i = 0; i < l; ++i) {
      const std::uint32_t ni = along_x ? (i + 1) % l : i;
      const std::uint32_t nj = along_x ? j : (j + 1) % m;
      out[ni + l * nj] = v[i + l * j];
    }
  return out;
}

// Row and column shifts of every basis codeword stay in the code.
inline bool shift_closed(const grcodes::LinearCode &c, std::uint32_t l, std::uint32_t m) {
  for (std::size_t r = 0; r < c.dimension(); ++r)
    for (bool along_x : {true, false})
      if (!c.contains(shift_2d(c.basis().row(r), l, m, along_x)))
        return false;
  return true;
}

} // namespace oracle
