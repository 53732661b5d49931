#include "grcodes/group.hpp"

#include "grcodes/error.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>

namespace grcodes {

GroupSpec GroupSpec::cyclic(std::uint32_t n) {
  GroupSpec s;
  s.kind = GroupKind::Cyclic;
  s.n = n;
  return s;
}

GroupSpec GroupSpec::dihedral(std::uint32_t n, std::string form) {
  GroupSpec s;
  s.kind = GroupKind::Dihedral;
  s.n = n;
  s.form = std::move(form);
  return s;
}

GroupSpec GroupSpec::quaternion(std::uint32_t n, std::string form) {
  GroupSpec s;
  s.kind = GroupKind::Quaternion;
  s.n = n;
  s.form = std::move(form);
  return s;
}

GroupSpec GroupSpec::semidirect(std::uint32_t l, std::uint32_t m, std::uint32_t k,
                                std::string form) {
  GroupSpec s;
  s.kind = GroupKind::Semidirect;
  s.n = l;
  s.m = m;
  s.k = k;
  s.form = std::move(form);
  return s;
}

GroupSpec GroupSpec::product(std::vector<GroupSpec> factors,
                             std::vector<std::size_t> loop_order) {
  GroupSpec s;
  s.kind = GroupKind::Product;
  s.factors = std::move(factors);
  if (loop_order.empty()) {
    loop_order.resize(s.factors.size());
    std::iota(loop_order.begin(), loop_order.end(), 0);
  }
  s.loop_order = std::move(loop_order);
  return s;
}

std::size_t GroupSpec::order() const {
  switch (kind) {
  case GroupKind::Cyclic:
    return n;
  case GroupKind::Dihedral:
    return 2 * static_cast<std::size_t>(n);
  case GroupKind::Quaternion:
    return 4 * static_cast<std::size_t>(n);
  case GroupKind::Semidirect:
    return static_cast<std::size_t>(n) * m;
  case GroupKind::Product: {
    std::size_t o = 1;
    for (const auto &f : factors)
      o *= f.order();
    return o;
  }
  }
  return 0;
}

namespace {

std::size_t generator_count(const GroupSpec &s) {
  switch (s.kind) {
  case GroupKind::Cyclic:
    return 1;
  case GroupKind::Product: {
    std::size_t c = 0;
    for (const auto &f : s.factors)
      c += generator_count(f);
    return c;
  }
  default:
    return 2;
  }
}

std::string join(const std::vector<std::string> &v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + v[i];
  return s;
}

std::uint32_t parse_u32(std::string_view tok, std::size_t pos, std::string_view what) {
  std::uint32_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
    throw ParseError("expected a number for " + std::string(what), pos);
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  while (true) {
    auto p = s.find(sep);
    out.push_back(s.substr(0, p));
    if (p == std::string_view::npos)
      break;
    s.remove_prefix(p + 1);
  }
  return out;
}

GroupSpec parse_atom(std::string_view tok, std::size_t pos) {
  if (tok.empty())
    throw ParseError("empty group factor", pos);
  const char kind = tok[0];
  std::string_view rest = tok.substr(1);
  switch (kind) {
  case 'C': {
    if (auto sd = rest.find("sd"); sd != std::string_view::npos) {
      auto l = parse_u32(rest.substr(0, sd), pos + 1, "semidirect l");
      auto after = rest.substr(sd + 2);
      auto c = after.find('C');
      if (c == std::string_view::npos)
        throw ParseError("semidirect product must look like C<l>sd<k>C<m>", pos);
      auto k = parse_u32(after.substr(0, c), pos + 1 + sd + 2, "semidirect k");
      auto m = parse_u32(after.substr(c + 1), pos + 1 + sd + 2 + c + 1, "semidirect m");
      return GroupSpec::semidirect(l, m, k);
    }
    return GroupSpec::cyclic(parse_u32(rest, pos + 1, "cyclic order"));
  }
  case 'D':
    return GroupSpec::dihedral(parse_u32(rest, pos + 1, "dihedral n"));
  case 'Q': {
    auto o = parse_u32(rest, pos + 1, "quaternion order");
    if (o % 4 != 0)
      throw ParseError("quaternion order must be a multiple of 4", pos + 1);
    return GroupSpec::quaternion(o / 4);
  }
  default:
    throw ParseError("unknown group family '" + std::string(1, kind) + "'", pos);
  }
}

// Loop orders for the listing forms of two- and three-factor products.
std::vector<std::size_t> preset_order(std::size_t factors, int form, std::size_t pos) {
  if (factors == 2 && form >= 1 && form <= 4)
    return form % 2 == 1 ? std::vector<std::size_t>{0, 1} : std::vector<std::size_t>{1, 0};
  if (factors == 3 && form >= 1 && form <= 6) {
    static const std::size_t table[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                                            {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    return {table[form - 1][0], table[form - 1][1], table[form - 1][2]};
  }
  if (form == 1) {
    std::vector<std::size_t> o(factors);
    std::iota(o.begin(), o.end(), 0);
    return o;
  }
  throw ParseError("listing form f" + std::to_string(form) + " is not defined for a " +
                       std::to_string(factors) + "-factor product",
                   pos);
}

int form_number(std::string_view f, std::size_t pos) {
  if (f.size() < 2 || f[0] != 'f')
    throw ParseError("listing form must be f<N>", pos);
  return static_cast<int>(parse_u32(f.substr(1), pos + 1, "form number"));
}

} // namespace

GroupSpec parse_group_spec(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c)))
      s += c;
  std::string_view sv(s);
  auto parts = split(sv, ':');
  std::string_view body = parts[0];

  GroupSpec spec;
  {
    auto toks = split(body, 'x');
    std::size_t pos = 0;
    std::vector<GroupSpec> factors;
    for (auto t : toks) {
      factors.push_back(parse_atom(t, pos));
      pos += t.size() + 1;
    }
    spec = factors.size() == 1 ? factors[0] : GroupSpec::product(std::move(factors));
  }

  std::size_t pos = body.size() + 1;
  for (std::size_t p = 1; p < parts.size(); ++p) {
    auto opt = parts[p];
    auto eq = opt.find('=');
    if (eq == std::string_view::npos)
      throw ParseError("group option must be key=value", pos);
    auto key = opt.substr(0, eq);
    auto val = opt.substr(eq + 1);
    const std::size_t vpos = pos + eq + 1;
    const bool product = spec.kind == GroupKind::Product;
    if (key == "form") {
      int f = form_number(val, vpos);
      if (product) {
        spec.loop_order = preset_order(spec.factors.size(), f, vpos);
        if (spec.factors.size() == 2 && f >= 3)
          for (auto &fac : spec.factors)
            if (fac.kind != GroupKind::Cyclic)
              fac.form = "f2";
      } else {
        spec.form = std::string(val);
      }
    } else if (key == "inner") {
      if (!product)
        throw ParseError("inner= applies to direct products only", pos);
      auto i = parse_u32(val, vpos, "inner factor");
      if (i < 1 || i > spec.factors.size())
        throw ParseError("inner factor index out of range", vpos);
      spec.loop_order = {i - 1};
      for (std::size_t f = 0; f < spec.factors.size(); ++f)
        if (f != i - 1)
          spec.loop_order.push_back(f);
    } else if (key == "order") {
      if (!product)
        throw ParseError("order= applies to direct products only", pos);
      spec.loop_order.clear();
      for (auto t : split(val, ','))
        spec.loop_order.push_back(parse_u32(t, vpos, "loop order") - 1);
    } else if (key == "forms") {
      if (!product)
        throw ParseError("forms= applies to direct products only", pos);
      auto fs = split(val, ',');
      if (fs.size() != spec.factors.size())
        throw ParseError("forms= needs one entry per factor", vpos);
      for (std::size_t f = 0; f < fs.size(); ++f)
        spec.factors[f].form = std::string(fs[f]);
    } else if (key == "gens") {
      spec.gens.clear();
      for (auto t : split(val, ','))
        spec.gens.emplace_back(t);
    } else {
      throw ParseError("unknown group option '" + std::string(key) + "'", pos);
    }
    pos += opt.size() + 1;
  }
  return spec;
}

namespace {

std::string atom_string(const GroupSpec &s) {
  switch (s.kind) {
  case GroupKind::Cyclic:
    return "C" + std::to_string(s.n);
  case GroupKind::Dihedral:
    return "D" + std::to_string(s.n);
  case GroupKind::Quaternion:
    return "Q" + std::to_string(4 * s.n);
  case GroupKind::Semidirect:
    return "C" + std::to_string(s.n) + "sd" + std::to_string(s.k) + "C" +
           std::to_string(s.m);
  case GroupKind::Product:
    break;
  }
  throw Error("nested products must be flattened");
}

} // namespace

std::string to_string(const GroupSpec &spec) {
  std::string out;
  if (spec.kind != GroupKind::Product) {
    out = atom_string(spec);
    if (spec.form != "f1")
      out += ":form=" + spec.form;
  } else {
    std::vector<std::string> forms;
    bool custom_forms = false;
    for (std::size_t i = 0; i < spec.factors.size(); ++i) {
      out += (i ? "x" : "") + atom_string(spec.factors[i]);
      forms.push_back(spec.factors[i].form);
      custom_forms |= spec.factors[i].form != "f1";
    }
    bool default_order = true;
    for (std::size_t i = 0; i < spec.loop_order.size(); ++i)
      default_order &= spec.loop_order[i] == i;
    if (!default_order) {
      out += ":order=";
      for (std::size_t i = 0; i < spec.loop_order.size(); ++i)
        out += (i ? "," : "") + std::to_string(spec.loop_order[i] + 1);
    }
    if (custom_forms)
      out += ":forms=" + join(forms);
  }
  if (!spec.gens.empty())
    out += ":gens=" + join(spec.gens);
  return out;
}

class GroupTableBuilder {
public:
  // Assembles a table from a listing of normal forms and their product rule.
  template <class NF, class Mul>
  static GroupTable from_listing(const std::vector<NF> &listing,
                                 const std::vector<std::string> &words, Mul mul,
                                 const std::vector<std::pair<std::string, NF>> &gens) {
    GroupTable t;
    t.n_ = listing.size();
    std::map<NF, std::size_t> pos;
    for (std::size_t i = 0; i < listing.size(); ++i)
      pos.emplace(listing[i], i);
    if (pos.size() != listing.size())
      throw Error("internal: listing repeats an element");
    t.mul_.resize(t.n_ * t.n_);
    for (std::size_t i = 0; i < t.n_; ++i)
      for (std::size_t j = 0; j < t.n_; ++j)
        t.mul_[i * t.n_ + j] =
            static_cast<std::uint32_t>(pos.at(mul(listing[i], listing[j])));
    t.words_ = words;
    for (const auto &[name, nf] : gens)
      t.gens_.push_back({name, pos.at(nf)});
    finish(t);
    return t;
  }

  static GroupTable product(const std::vector<GroupTable> &fs,
                            const std::vector<std::size_t> &loop_order) {
    const std::size_t r = fs.size();
    std::vector<std::size_t> stride(r, 0);
    std::size_t n = 1;
    for (auto f : loop_order) {
      stride[f] = n;
      n *= fs[f].n_;
    }
    GroupTable t;
    t.n_ = n;
    auto digits = [&](std::size_t idx) {
      std::vector<std::size_t> d(r);
      for (std::size_t f = 0; f < r; ++f)
        d[f] = (idx / stride[f]) % fs[f].n_;
      return d;
    };
    std::vector<std::vector<std::size_t>> dig(n);
    for (std::size_t i = 0; i < n; ++i)
      dig[i] = digits(i);
    t.mul_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::size_t idx = 0;
        for (std::size_t f = 0; f < r; ++f)
          idx += fs[f].mul(dig[i][f], dig[j][f]) * stride[f];
        t.mul_[i * n + j] = static_cast<std::uint32_t>(idx);
      }
    t.words_.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      std::string w;
      for (std::size_t f = 0; f < r; ++f)
        if (dig[i][f] != fs[f].id_)
          w += fs[f].words_[dig[i][f]];
      t.words_[i] = w.empty() ? "e" : w;
    }
    for (std::size_t f = 0; f < r; ++f) {
      std::size_t base = 0;
      for (std::size_t g = 0; g < r; ++g)
        if (g != f)
          base += fs[g].id_ * stride[g];
      for (const auto &gen : fs[f].gens_)
        t.gens_.push_back({gen.name, base + gen.index * stride[f]});
    }
    finish(t);
    return t;
  }

  static void set_description(GroupTable &t, std::string d) { t.description_ = std::move(d); }

private:
  static void finish(GroupTable &t) {
    const std::size_t n = t.n_;
    t.id_ = n;
    for (std::size_t i = 0; i < n && t.id_ == n; ++i) {
      bool ok = true;
      for (std::size_t j = 0; j < n && ok; ++j)
        ok = t.mul_[i * n + j] == j;
      if (ok)
        t.id_ = i;
    }
    if (t.id_ == n)
      throw Error("internal: no identity in group table");
    t.inv_.assign(n, static_cast<std::uint32_t>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (t.mul_[i * n + j] == t.id_) {
          t.inv_[i] = static_cast<std::uint32_t>(j);
          break;
        }
  }
};

namespace {

std::string power_word(const std::string &name, std::uint32_t e) {
  if (e == 0)
    return "";
  return e == 1 ? name : name + std::to_string(e);
}

std::string or_e(std::string w) { return w.empty() ? "e" : w; }

using NF = std::pair<std::uint32_t, std::uint32_t>;

GroupTable build_cyclic(const GroupSpec &s, const std::vector<std::string> &names) {
  if (s.n < 1)
    throw Error("cyclic group order must be at least 1");
  if (s.form != "f1")
    throw Error("cyclic groups have only listing form f1");
  const std::uint32_t n = s.n;
  std::vector<NF> listing;
  std::vector<std::string> words;
  for (std::uint32_t i = 0; i < n; ++i) {
    listing.push_back({i, 0});
    words.push_back(or_e(power_word(names[0], i)));
  }
  auto mul = [n](NF a, NF b) { return NF{(a.first + b.first) % n, 0}; };
  return GroupTableBuilder::from_listing(listing, words, mul,
                                         {{names[0], NF{1 % n, 0}}});
}

// Dihedral and generalized quaternion share the normal form a^i b^j.
GroupTable build_metacyclic(const GroupSpec &s, const std::vector<std::string> &names) {
  const bool quat = s.kind == GroupKind::Quaternion;
  if (quat && s.n < 2)
    throw Error("quaternion group Q_{4n} needs n >= 2");
  if (!quat && s.n < 1)
    throw Error("dihedral group D_n needs n >= 1");
  const std::uint32_t rot = quat ? 2 * s.n : s.n; // order of a
  const std::uint32_t half = s.n;                 // b^2 = a^half for Q
  auto mul = [=](NF x, NF y) {
    const std::uint32_t i2 = x.second ? (rot - y.first) % rot : y.first;
    std::uint32_t i = (x.first + i2) % rot;
    if (quat && x.second && y.second)
      i = (i + half) % rot;
    return NF{i, (x.second + y.second) % 2};
  };
  const std::string &a = names[0], &b = names[1];
  // b a^i = a^{-i} b
  auto b_first = [&](std::uint32_t i) { return NF{(rot - i) % rot, 1}; };

  std::vector<NF> listing;
  std::vector<std::string> words;
  auto push = [&](NF nf, std::string w) {
    listing.push_back(nf);
    words.push_back(or_e(std::move(w)));
  };
  const std::string &f = s.form;
  const bool ok = f == "f1" || f == "f2" || (!quat && (f == "f3" || f == "f4"));
  if (!ok)
    throw Error("unknown listing form '" + f + "' for " +
                std::string(quat ? "quaternion" : "dihedral") + " group");
  // Forms where the reflection-type coset is written b a^i.
  const bool ba_style = quat ? f == "f2" : (f == "f1" || f == "f3");
  const bool interleave = f == "f3" || f == "f4";
  auto coset = [&](std::uint32_t i) {
    if (ba_style)
      push(b_first(i), b + power_word(a, i));
    else
      push(NF{i, 1}, power_word(a, i) + b);
  };
  if (interleave) {
    for (std::uint32_t i = 0; i < rot; ++i) {
      push(NF{i, 0}, power_word(a, i));
      coset(i);
    }
  } else {
    for (std::uint32_t i = 0; i < rot; ++i)
      push(NF{i, 0}, power_word(a, i));
    for (std::uint32_t i = 0; i < rot; ++i)
      coset(i);
  }
  return GroupTableBuilder::from_listing(listing, words, mul,
                                         {{a, NF{1 % rot, 0}}, {b, NF{0, 1}}});
}

GroupTable build_semidirect(const GroupSpec &s, const std::vector<std::string> &names) {
  const std::uint32_t l = s.n, m = s.m, k = s.k;
  if (l < 1 || m < 1)
    throw Error("semidirect product needs l, m >= 1");
  if (std::gcd(k, l) != 1)
    throw Error("semidirect product needs gcd(k, l) = 1");
  std::vector<std::uint32_t> kp(m + 1, 1 % l); // k^j mod l
  for (std::uint32_t j = 1; j <= m; ++j)
    kp[j] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(kp[j - 1]) * k) % l);
  if (kp[m] != 1 % l)
    throw Error("semidirect product needs k^m = 1 (mod l)");
  // y^j x^i = x^{i k^j} y^j
  auto mul = [=](NF a, NF b) {
    const std::uint64_t shifted = static_cast<std::uint64_t>(b.first) * kp[a.second];
    return NF{static_cast<std::uint32_t>((a.first + shifted) % l), (a.second + b.second) % m};
  };
  if (s.form != "f1" && s.form != "f2")
    throw Error("unknown listing form '" + s.form + "' for semidirect product");
  std::vector<NF> listing;
  std::vector<std::string> words;
  const bool x_inner = s.form == "f1";
  for (std::uint32_t outer = 0; outer < (x_inner ? m : l); ++outer)
    for (std::uint32_t inner = 0; inner < (x_inner ? l : m); ++inner) {
      const std::uint32_t i = x_inner ? inner : outer, j = x_inner ? outer : inner;
      listing.push_back({i, j});
      words.push_back(or_e(power_word(names[0], i) + power_word(names[1], j)));
    }
  return GroupTableBuilder::from_listing(listing, words, mul,
                                         {{names[0], NF{1 % l, 0}}, {names[1], NF{0, 1 % m}}});
}

GroupTable build_atom(const GroupSpec &s, const std::vector<std::string> &names) {
  switch (s.kind) {
  case GroupKind::Cyclic:
    return build_cyclic(s, names);
  case GroupKind::Dihedral:
  case GroupKind::Quaternion:
    return build_metacyclic(s, names);
  case GroupKind::Semidirect:
    return build_semidirect(s, names);
  case GroupKind::Product:
    break;
  }
  throw Error("nested products are not supported; list all factors at one level");
}

std::vector<std::string> default_names(const GroupSpec &s) {
  switch (s.kind) {
  case GroupKind::Cyclic:
    return {"x"};
  case GroupKind::Dihedral:
  case GroupKind::Quaternion:
    return {"a", "b"};
  case GroupKind::Semidirect:
    return {"x", "y"};
  case GroupKind::Product:
    break;
  }
  static const char *pool[] = {"x", "y", "z", "u", "v", "s", "t"};
  const std::size_t c = generator_count(s);
  if (c > std::size(pool))
    throw Error("too many generators for default names; pass gens=");
  return {pool, pool + c};
}

} // namespace

GroupPtr build_group(const GroupSpec &spec, std::size_t max_order) {
  const std::size_t order = spec.order();
  if (order == 0 || order > max_order)
    throw Error("group order " + std::to_string(order) + " outside 1.." +
                std::to_string(max_order));
  std::vector<std::string> names = spec.gens.empty() ? default_names(spec) : spec.gens;
  if (names.size() != generator_count(spec))
    throw Error("gens= must name exactly " + std::to_string(generator_count(spec)) +
                " generators");
  for (std::size_t i = 0; i < names.size(); ++i) {
    const auto &nm = names[i];
    if (nm.size() != 1 || !std::isalpha(static_cast<unsigned char>(nm[0])) || nm == "e" ||
        nm == "w")
      throw Error("generator names must be single letters other than e and w");
    for (std::size_t j = 0; j < i; ++j)
      if (names[j] == nm)
        throw Error("duplicate generator name '" + nm + "'");
  }

  GroupTable table;
  if (spec.kind == GroupKind::Product) {
    if (spec.factors.empty())
      throw Error("product needs at least one factor");
    auto sorted = spec.loop_order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted.size() != spec.factors.size() || sorted[i] != i)
        throw Error("loop order must be a permutation of the factors");
    std::vector<GroupTable> fs;
    std::size_t used = 0;
    for (const auto &f : spec.factors) {
      const std::size_t c = generator_count(f);
      std::vector<std::string> sub(names.begin() + used, names.begin() + used + c);
      used += c;
      fs.push_back(build_atom(f, sub));
    }
    table = GroupTableBuilder::product(fs, spec.loop_order);
  } else {
    table = build_atom(spec, names);
  }
  GroupTableBuilder::set_description(table, to_string(spec));
  return std::make_shared<const GroupTable>(std::move(table));
}

std::size_t GroupTable::index_of(std::string_view word) const {
  std::size_t pos = 0;
  auto skip = [&] {
    while (pos < word.size() && std::isspace(static_cast<unsigned char>(word[pos])))
      ++pos;
  };
  skip();
  if (pos == word.size())
    throw ParseError("empty group word", pos);
  std::size_t acc = id_;
  bool any = false;
  while (pos < word.size()) {
    skip();
    if (pos == word.size())
      break;
    const char c = word[pos];
    if (c == 'e') {
      ++pos;
      any = true;
      continue;
    }
    auto g = std::find_if(gens_.begin(), gens_.end(),
                          [&](const Generator &gen) { return gen.name[0] == c; });
    if (g == gens_.end())
      throw ParseError("unknown generator '" + std::string(1, c) + "'", pos);
    ++pos;
    if (pos < word.size() && word[pos] == '^')
      ++pos;
    std::size_t start = pos;
    while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos])))
      ++pos;
    std::uint64_t e = 1;
    if (pos > start)
      e = parse_u32(word.substr(start, pos - start), start, "exponent");
    else if (start > 0 && word[start - 1] == '^')
      throw ParseError("missing exponent after '^'", start);
    for (std::uint64_t t = 0; t < e % (n_ * 1ull); ++t)
      acc = mul(acc, g->index);
    any = true;
  }
  if (!any)
    throw ParseError("empty group word", 0);
  return acc;
}

bool same_group(const GroupPtr &a, const GroupPtr &b) { return a == b || (a && b && *a == *b); }

} // namespace grcodes
