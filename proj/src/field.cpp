#include "grcodes/field.hpp"

#include "grcodes/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace grcodes {

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

namespace {

using Poly = std::vector<std::uint32_t>; // c0..cd over F_p

void trim(Poly &a) {
  while (!a.empty() && a.back() == 0)
    a.pop_back();
}

// Remainder of a modulo monic b over F_p.
Poly poly_mod(Poly a, const Poly &b, std::uint32_t p) {
  trim(a);
  const std::size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (std::size_t i = 0; i <= db; ++i)
      a[shift + i] = (a[shift + i] + (p - lead) * b[i]) % p;
    trim(a);
  }
  return a;
}

} // namespace

bool is_irreducible(const std::vector<std::uint32_t> &coeffs, std::uint32_t p) {
  Poly f = coeffs;
  trim(f);
  if (f.size() < 2 || f.back() != 1)
    return false;
  const std::size_t deg = f.size() - 1;
  // Try every monic divisor of degree 1..deg/2.
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i)
      count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
      Poly g(d + 1, 0);
      g[d] = 1;
      std::uint64_t v = idx;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (poly_mod(f, g, p).empty())
        return false;
    }
  }
  return true;
}

Element Field::add_digits(Element a, Element b) const {
  if (p_ == 2)
    return {a.rep ^ b.rep};
  std::uint32_t out = 0, scale = 1, x = a.rep, y = b.rep;
  for (std::uint32_t i = 0; i < k_; ++i) {
    out += ((x % p_ + y % p_) % p_) * scale;
    x /= p_;
    y /= p_;
    scale *= p_;
  }
  return {out};
}

Element Field::mul_poly(Element a, Element b) const {
  const auto ca = coords(a), cb = coords(b);
  Poly prod(2 * k_, 0);
  for (std::uint32_t i = 0; i < k_; ++i)
    for (std::uint32_t j = 0; j < k_; ++j)
      prod[i + j] = (prod[i + j] + ca[i] * cb[j]) % p_;
  Poly r = poly_mod(prod, modulus_, p_);
  r.resize(k_, 0);
  return from_coords(r);
}

FieldPtr Field::make(std::uint32_t p, std::uint32_t k,
                     std::optional<std::vector<std::uint32_t>> modulus,
                     std::uint64_t max_order) {
  if (!grcodes::is_prime(p))
    throw Error("field characteristic " + std::to_string(p) + " is not prime");
  if (k < 1)
    throw Error("field extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < k; ++i) {
    q *= p;
    if (q > max_order)
      throw Error("field order " + std::to_string(p) + "^" + std::to_string(k) +
                  " exceeds the configured bound " + std::to_string(max_order));
  }

  std::shared_ptr<Field> f(new Field());
  f->p_ = p;
  f->k_ = k;
  f->q_ = static_cast<std::uint32_t>(q);

  // Order of X in F_p[X]/(mod) must be q - 1 (k >= 2 only).
  auto x_is_primitive = [&](const Poly &mod) {
    f->modulus_ = mod;
    const Element x{p};
    Element acc = f->one();
    for (std::uint64_t i = 1; i < q; ++i) {
      acc = f->mul_poly(acc, x);
      if (acc == f->one())
        return i == q - 1;
    }
    return false;
  };

  if (modulus) {
    Poly mod = *modulus;
    for (auto c : mod)
      if (c >= p)
        throw Error("modulus coefficient out of range for F_" + std::to_string(p));
    trim(mod);
    if (mod.size() != k + 1 || mod.back() != 1)
      throw Error("modulus must be monic of degree " + std::to_string(k));
    if (!is_irreducible(mod, p))
      throw Error("modulus is reducible over F_" + std::to_string(p));
    f->modulus_ = mod;
    f->default_modulus_ = k == 1 || (p == 3 && k == 2 && mod == Poly{2, 2, 1});
  } else if (k == 1) {
    f->modulus_ = {0, 1};
  } else if (p == 3 && k == 2) {
    f->modulus_ = {2, 2, 1};
  } else {
    bool found = false;
    for (std::uint64_t low = 1; low < q && !found; ++low) {
      Poly mod(k + 1, 0);
      mod[k] = 1;
      std::uint64_t v = low;
      for (std::uint32_t i = 0; i < k; ++i) {
        mod[i] = static_cast<std::uint32_t>(v % p);
        v /= p;
      }
      if (mod[0] == 0 || !is_irreducible(mod, p))
        continue;
      found = x_is_primitive(mod);
    }
    if (!found)
      throw Error("no primitive modulus found");
  }
  // Primitive element: class of X when it generates, else smallest generator.
  auto order_of = [&](Element a) {
    Element acc = a;
    std::uint32_t ord = 1;
    while (acc != f->one()) {
      acc = f->mul_poly(acc, a);
      ++ord;
    }
    return ord;
  };
  std::optional<Element> prim;
  if (k > 1 && order_of(Element{p}) == q - 1)
    prim = Element{p};
  for (std::uint32_t r = 1; !prim && r < q; ++r)
    if (order_of(Element{r}) == q - 1)
      prim = Element{r};
  f->primitive_ = *prim;

  const std::uint32_t n1 = f->q_ - 1;
  f->exp_.assign(2 * static_cast<std::size_t>(n1), 0);
  f->log_.assign(f->q_, 0);
  Element acc = f->one();
  for (std::uint32_t i = 0; i < n1; ++i) {
    f->exp_[i] = f->exp_[i + n1] = acc.rep;
    f->log_[acc.rep] = i;
    acc = f->mul_poly(acc, f->primitive_);
  }

  f->neg_.resize(f->q_);
  for (std::uint32_t r = 0; r < f->q_; ++r) {
    auto c = f->coords(Element{r});
    for (auto &v : c)
      v = (p - v) % p;
    f->neg_[r] = f->from_coords(c);
  }

  if (f->q_ <= kSmallField) {
    const std::size_t qq = f->q_;
    f->add_tab_.resize(qq * qq);
    f->mul_tab_.resize(qq * qq);
    for (std::uint32_t a = 0; a < qq; ++a)
      for (std::uint32_t b = 0; b < qq; ++b) {
        f->add_tab_[a * qq + b] =
            static_cast<std::uint16_t>(f->add_digits({a}, {b}).rep);
        std::uint32_t m = 0;
        if (a != 0 && b != 0)
          m = f->exp_[f->log_[a] + f->log_[b]];
        f->mul_tab_[a * qq + b] = static_cast<std::uint16_t>(m);
      }
  }

  f->frob_.resize(f->q_);
  for (std::uint32_t r = 0; r < f->q_; ++r)
    f->frob_[r] = f->pow(Element{r}, p);
  return f;
}

Element Field::add(Element a, Element b) const {
  if (!add_tab_.empty())
    return {add_tab_[a.rep * q_ + b.rep]};
  return add_digits(a, b);
}

Element Field::neg(Element a) const { return neg_[a.rep]; }

Element Field::sub(Element a, Element b) const { return add(a, neg_[b.rep]); }

Element Field::mul(Element a, Element b) const {
  if (!mul_tab_.empty())
    return {mul_tab_[a.rep * q_ + b.rep]};
  if (a.is_zero() || b.is_zero())
    return zero();
  return {exp_[log_[a.rep] + log_[b.rep]]};
}

Element Field::inv(Element a) const {
  if (a.is_zero())
    throw Error("inverse of zero in " + spec_string());
  const std::uint32_t n1 = q_ - 1;
  return {exp_[(n1 - log_[a.rep]) % n1]};
}

Element Field::pow(Element a, std::uint64_t e) const {
  if (e == 0)
    return one();
  if (a.is_zero())
    return zero();
  const std::uint64_t n1 = q_ - 1;
  return {exp_[static_cast<std::size_t>((log_[a.rep] * (e % n1)) % n1)]};
}

Element Field::primitive_power(std::int64_t e) const {
  const std::int64_t n1 = q_ - 1;
  return {exp_[static_cast<std::size_t>(((e % n1) + n1) % n1)]};
}

Element Field::from_int(std::int64_t v) const {
  const std::int64_t p = p_;
  return {static_cast<std::uint32_t>(((v % p) + p) % p)};
}

Element Field::element(std::uint32_t i) const {
  if (i >= q_)
    throw Error("element index out of range");
  return {i};
}

std::optional<std::uint32_t> Field::log(Element a) const {
  if (a.is_zero())
    return std::nullopt;
  return log_[a.rep];
}

std::uint32_t Field::multiplicative_order(Element a) const {
  if (a.is_zero())
    throw Error("zero has no multiplicative order");
  const std::uint32_t n1 = q_ - 1;
  std::uint32_t l = log_[a.rep];
  std::uint32_t g = n1;
  for (std::uint32_t x = l; x != 0;) {
    std::uint32_t t = g % x;
    g = x;
    x = t;
  }
  return n1 / g;
}

std::vector<std::uint32_t> Field::coords(Element a) const {
  std::vector<std::uint32_t> c(k_);
  std::uint32_t v = a.rep;
  for (std::uint32_t i = 0; i < k_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

Element Field::from_coords(const std::vector<std::uint32_t> &c) const {
  std::uint32_t out = 0, scale = 1;
  for (std::uint32_t i = 0; i < k_ && i < c.size(); ++i) {
    out += (c[i] % p_) * scale;
    scale *= p_;
  }
  return {out};
}

std::string Field::to_literal(Element a) const {
  if (k_ == 1)
    return std::to_string(a.rep);
  if (a.is_zero())
    return "0";
  if (a == one())
    return "1";
  return "w" + std::to_string(log_[a.rep]);
}

Element Field::parse_literal(std::string_view text) const {
  if (text.empty())
    throw ParseError("empty field literal", 0);
  if (text[0] == 'w') {
    if (k_ == 1)
      throw ParseError("w-literals need an extension field", 0);
    if (text.size() == 1)
      return primitive_;
    std::int64_t e = 0;
    auto [ptr, ec] = std::from_chars(text.data() + 1, text.data() + text.size(), e);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw ParseError("bad exponent in field literal '" + std::string(text) + "'", 1);
    return primitive_power(e);
  }
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ParseError("bad field literal '" + std::string(text) + "'", 0);
  if (v >= p_)
    throw ParseError("field literal " + std::to_string(v) + " out of range for " +
                         spec_string(),
                     0);
  return {static_cast<std::uint32_t>(v)};
}

std::string Field::spec_string() const {
  if (default_modulus_)
    return "GF(" + std::to_string(q_) + ")";
  std::string s = "GF(" + std::to_string(p_) + "^" + std::to_string(k_) + ";modulus=";
  for (std::size_t i = 0; i < modulus_.size(); ++i) {
    if (i)
      s += ",";
    s += std::to_string(modulus_[i]);
  }
  return s + ")";
}

bool same_field(const FieldPtr &a, const FieldPtr &b) {
  return a == b || (a && b && *a == *b);
}

void require_same_field(const FieldPtr &a, const FieldPtr &b, std::string_view context) {
  if (!same_field(a, b))
    throw Error(std::string(context) + ": operands come from different fields");
}

FieldPtr parse_field(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  if (s.size() < 5 || s.substr(0, 3) != "GF(" || s.back() != ')')
    throw ParseError("field spec must look like GF(q) or GF(p^k;modulus=...)", 0);
  std::string_view body(s);
  body = body.substr(3, body.size() - 4);

  std::optional<std::vector<std::uint32_t>> modulus;
  if (auto semi = body.find(';'); semi != std::string_view::npos) {
    std::string_view opt = body.substr(semi + 1);
    body = body.substr(0, semi);
    constexpr std::string_view key = "modulus=";
    if (opt.substr(0, key.size()) != key)
      throw ParseError("unknown field option", 3 + semi + 1);
    opt.remove_prefix(key.size());
    std::vector<std::uint32_t> coeffs;
    while (!opt.empty()) {
      auto comma = opt.find(',');
      auto tok = opt.substr(0, comma);
      std::uint32_t v = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw ParseError("bad modulus coefficient", 3 + semi + 1 + key.size());
      coeffs.push_back(v);
      if (comma == std::string_view::npos)
        break;
      opt.remove_prefix(comma + 1);
    }
    modulus = coeffs;
  }

  auto parse_uint = [&](std::string_view tok, std::size_t pos) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size() || v == 0)
      throw ParseError("bad number in field spec", pos);
    return v;
  };

  std::uint64_t p = 0, k = 0;
  if (auto caret = body.find('^'); caret != std::string_view::npos) {
    p = parse_uint(body.substr(0, caret), 3);
    k = parse_uint(body.substr(caret + 1), 3 + caret + 1);
  } else {
    std::uint64_t q = parse_uint(body, 3);
    if (q < 2)
      throw Error("field order must be at least 2");
    for (std::uint64_t d = 2; d <= q; ++d)
      if (q % d == 0) {
        p = d;
        break;
      }
    k = 0;
    for (std::uint64_t t = q; t > 1; t /= p) {
      if (t % p != 0)
        throw Error("field order " + std::to_string(q) + " is not a prime power");
      ++k;
    }
  }
  if (p > UINT32_MAX || k > 64)
    throw Error("field spec out of range");
  return Field::make(static_cast<std::uint32_t>(p), static_cast<std::uint32_t>(k),
                     modulus);
}

FieldElement FieldElement::inverse() const { return {field_, field_->inv(value_)}; }

FieldElement FieldElement::frobenius() const {
  return {field_, field_->frobenius(value_)};
}

FieldElement FieldElement::operator-() const { return {field_, field_->neg(value_)}; }

FieldElement operator+(const FieldElement &a, const FieldElement &b) {
  require_same_field(a.field_, b.field_, "field addition");
  return {a.field_, a.field_->add(a.value_, b.value_)};
}

FieldElement operator-(const FieldElement &a, const FieldElement &b) {
  require_same_field(a.field_, b.field_, "field subtraction");
  return {a.field_, a.field_->sub(a.value_, b.value_)};
}

FieldElement operator*(const FieldElement &a, const FieldElement &b) {
  require_same_field(a.field_, b.field_, "field multiplication");
  return {a.field_, a.field_->mul(a.value_, b.value_)};
}

bool operator==(const FieldElement &a, const FieldElement &b) {
  return same_field(a.field_, b.field_) && a.value_ == b.value_;
}

} // namespace grcodes
