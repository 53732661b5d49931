#include "grcodes/linear_code.hpp"

#include "grcodes/error.hpp"
#include "grcodes/parallel.hpp"
#include "grcodes/rng.hpp"

#include <algorithm>
#include <limits>

namespace grcodes {

LinearCode::LinearCode(Matrix generator)
    : generator_(std::move(generator)), basis_(generator_.field(), 0, generator_.cols()) {
  basis_ = generator_.rref(&pivots_);
}

bool LinearCode::contains(const Vector &v) const {
  if (v.size() != length())
    throw Error("vector length " + std::to_string(v.size()) + " does not match code length " +
                std::to_string(length()));
  const Field &f = *field();
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    const Element c = r[pivots_[i]];
    if (c.is_zero())
      continue;
    const Element *row = basis_.row_data(i);
    for (std::size_t j = 0; j < r.size(); ++j)
      if (!row[j].is_zero())
        r[j] = f.sub(r[j], f.mul(c, row[j]));
  }
  return std::all_of(r.begin(), r.end(), [](Element e) { return e.is_zero(); });
}

bool LinearCode::contains(const LinearCode &sub) const {
  require_same_field(field(), sub.field(), "code containment");
  if (sub.length() != length())
    return false;
  for (std::size_t i = 0; i < sub.dimension(); ++i)
    if (!contains(sub.basis().row(i)))
      return false;
  return true;
}

bool operator==(const LinearCode &a, const LinearCode &b) {
  return a.length() == b.length() && a.basis_ == b.basis_;
}

LinearCode dual_euclidean(const LinearCode &c) { return LinearCode(c.generator().kernel()); }

LinearCode dual_hermitian(const LinearCode &c) {
  if (c.field()->degree() != 2)
    throw Error("Hermitian dual needs a field of order p^2");
  return LinearCode(c.generator().frobenius().kernel());
}

LinearCode dual_symplectic(const LinearCode &c) {
  if (c.length() % 2)
    throw Error("symplectic dual needs even length");
  return LinearCode((c.generator() * Matrix::omega(c.field(), c.length() / 2)).kernel());
}

std::string to_string(Metric m) { return m == Metric::Hamming ? "hamming" : "symplectic"; }

namespace {

constexpr std::size_t kNoWeight = std::numeric_limits<std::size_t>::max();

std::size_t weight_of(const Vector &v, Metric m) {
  return m == Metric::Hamming ? hamming_weight(v) : symplectic_weight(v);
}

void check_metric(const LinearCode &c, Metric m) {
  if (m == Metric::Symplectic && c.length() % 2)
    throw Error("symplectic metric needs even length");
}

// Basis of `code` whose first rows span `exclude`.
std::vector<Vector> extended_basis(const LinearCode &code, const LinearCode *exclude,
                                   std::size_t *excluded_rows) {
  std::vector<Vector> rows;
  Matrix span(code.field(), 0, code.length());
  if (exclude) {
    require_same_field(code.field(), exclude->field(), "minimum weight");
    if (!code.contains(*exclude))
      throw Error("excluded code is not a subcode of the searched code");
    for (std::size_t i = 0; i < exclude->dimension(); ++i) {
      rows.push_back(exclude->basis().row(i));
      span.append_row(rows.back());
    }
  }
  *excluded_rows = rows.size();
  for (std::size_t i = 0; i < code.dimension() && rows.size() < code.dimension(); ++i) {
    Vector r = code.basis().row(i);
    Matrix trial = span;
    trial.append_row(r);
    if (trial.rank() == rows.size() + 1) {
      rows.push_back(r);
      span = std::move(trial);
    }
  }
  return rows;
}

struct Best {
  std::size_t weight = kNoWeight;
  std::uint64_t order = std::numeric_limits<std::uint64_t>::max();
  Vector word;

  void offer(std::size_t w, std::uint64_t ord, const Vector &v) {
    if (w < weight || (w == weight && ord < order)) {
      weight = w;
      order = ord;
      word = v;
    }
  }
};

// Walks messages t in [begin, end) in q-ary Gray order: going from t to t + 1
// bumps digit i (the lowest nonzero base-q digit of t + 1) to its next value,
// which adds a precomputed multiple of basis row i.
class GrayWalker {
public:
  GrayWalker(const Field &f, const std::vector<Vector> &rows, std::size_t free_from, Metric m)
      : f_(f), rows_(rows), free_from_(free_from), metric_(m), q_(f.order()),
        n_(rows.empty() ? 0 : rows[0].size()) {
    support_.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = 0; j < n_; ++j)
        if (!rows[i][j].is_zero())
          support_[i].push_back(j);
    // step_[d] = element(d + 1) - element(d), the multiplier used when a digit
    // moves from value d to d + 1 (mod q).
    for (std::uint32_t d = 0; d < q_; ++d)
      step_.push_back(f.sub(f.element((d + 1) % q_), f.element(d)));
  }

  Best run(std::uint64_t begin, std::uint64_t end) const {
    const std::size_t k = rows_.size();
    std::vector<std::uint32_t> digit(k, 0), tdig(k + 1, 0);
    {
      std::uint64_t t = begin;
      for (std::size_t i = 0; i < k; ++i) {
        tdig[i] = static_cast<std::uint32_t>(t % q_);
        t /= q_;
      }
    }
    Vector word(n_, f_.zero());
    std::size_t free_nonzero = 0;
    for (std::size_t i = 0; i < k; ++i) {
      digit[i] = (tdig[i] + q_ - tdig[i + 1]) % q_;
      if (digit[i] == 0)
        continue;
      free_nonzero += i >= free_from_;
      const Element c = f_.element(digit[i]);
      for (auto j : support_[i])
        word[j] = f_.add(word[j], f_.mul(c, rows_[i][j]));
    }
    const std::size_t half = n_ / 2;
    std::vector<std::uint8_t> pair_nz;
    std::size_t weight = 0;
    if (metric_ == Metric::Hamming) {
      weight = hamming_weight(word);
    } else {
      pair_nz.assign(half, 0);
      for (std::size_t j = 0; j < n_; ++j)
        pair_nz[j % half] += !word[j].is_zero();
      for (auto c : pair_nz)
        weight += c != 0;
    }

    Best best;
    std::uint64_t t = begin;
    while (true) {
      if (free_nonzero > 0 && weight > 0 && weight < best.weight)
        best.offer(weight, t, word);
      if (++t >= end)
        break;
      std::size_t i = 0;
      for (std::uint64_t u = t; u % q_ == 0; u /= q_)
        ++i;
      const std::uint32_t old = digit[i];
      digit[i] = (old + 1) % q_;
      if (i >= free_from_)
        free_nonzero += (digit[i] != 0) - (old != 0);
      const Element c = step_[old];
      for (auto j : support_[i]) {
        const bool was = !word[j].is_zero();
        word[j] = f_.add(word[j], f_.mul(c, rows_[i][j]));
        const bool now = !word[j].is_zero();
        if (was == now)
          continue;
        if (metric_ == Metric::Hamming) {
          weight += now ? 1 : -1;
        } else {
          auto &cnt = pair_nz[j % half];
          const bool before = cnt != 0;
          cnt += now ? 1 : -1;
          weight += (cnt != 0) - before;
        }
      }
    }
    return best;
  }

private:
  const Field &f_;
  const std::vector<Vector> &rows_;
  std::size_t free_from_;
  Metric metric_;
  std::uint32_t q_;
  std::size_t n_;
  std::vector<std::vector<std::size_t>> support_;
  std::vector<Element> step_;
};

} // namespace

CodeParams min_weight(const LinearCode &c, const WeightOptions &opts) {
  check_metric(c, opts.metric);
  std::size_t excluded = 0;
  const auto rows = extended_basis(c, opts.exclude, &excluded);
  const std::size_t k = rows.size();
  if (k == excluded)
    throw Error(opts.exclude ? "no codewords outside the excluded subcode"
                             : "the zero code has no nonzero codewords");
  const std::uint64_t q = c.field()->order();
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > opts.budget / q)
      throw BudgetExceeded("enumerating " + std::to_string(q) + "^" + std::to_string(k) +
                           " codewords exceeds the budget of " + std::to_string(opts.budget));
    total *= q;
  }
  if (total > opts.budget)
    throw BudgetExceeded("enumerating " + std::to_string(total) +
                         " codewords exceeds the budget of " + std::to_string(opts.budget));

  GrayWalker walker(*c.field(), rows, excluded, opts.metric);
  const unsigned threads = resolve_threads(opts.threads);
  const std::uint64_t chunks =
      std::min<std::uint64_t>(total, std::max<std::uint64_t>(1, threads * 8ull));
  std::vector<Best> part(chunks);
  parallel_for(chunks, threads, [&](std::size_t i) {
    const std::uint64_t b = total * i / chunks, e = total * (i + 1) / chunks;
    part[i] = walker.run(b, e);
  });
  Best best;
  for (const auto &p : part)
    if (p.weight != kNoWeight)
      best.offer(p.weight, p.order, p.word);

  CodeParams out;
  out.n = opts.metric == Metric::Hamming ? c.length() : c.length() / 2;
  out.k = c.dimension();
  out.d = best.weight;
  out.metric = opts.metric;
  out.exact = true;
  out.witness = std::move(best.word);
  return out;
}

namespace {

struct SampleResult {
  std::size_t weight = kNoWeight;
  Vector word;
};

SampleResult isd_sample(const Field &f, const Matrix &basis, const LinearCode *exclude,
                        Metric metric, std::uint64_t seed) {
  const std::size_t n = basis.cols(), k = basis.rows();
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i)
    perm[i] = i;
  for (std::size_t i = n; i > 1; --i)
    std::swap(perm[i - 1], perm[uniform_below(rng, i)]);

  // Systematic form with pivots taken in permuted column order.
  std::vector<Vector> m(k);
  for (std::size_t i = 0; i < k; ++i)
    m[i] = basis.row(i);
  std::size_t r = 0;
  for (std::size_t pi = 0; pi < n && r < k; ++pi) {
    const std::size_t col = perm[pi];
    std::size_t p = r;
    while (p < k && m[p][col].is_zero())
      ++p;
    if (p == k)
      continue;
    std::swap(m[p], m[r]);
    const Element s = f.inv(m[r][col]);
    for (auto &e : m[r])
      e = f.mul(e, s);
    for (std::size_t i = 0; i < k; ++i) {
      if (i == r || m[i][col].is_zero())
        continue;
      const Element factor = m[i][col];
      for (std::size_t j = 0; j < n; ++j)
        if (!m[r][j].is_zero())
          m[i][j] = f.sub(m[i][j], f.mul(factor, m[r][j]));
    }
    ++r;
  }

  SampleResult best;
  auto consider = [&](const Vector &v) {
    const std::size_t w = weight_of(v, metric);
    if (w == 0 || w >= best.weight)
      return;
    if (exclude && exclude->contains(v))
      return;
    best.weight = w;
    best.word = v;
  };
  Vector v(n);
  for (std::size_t i = 0; i < k; ++i) {
    consider(m[i]);
    for (std::size_t j = i + 1; j < k; ++j)
      for (std::uint32_t c = 1; c < f.order(); ++c) {
        const Element lambda = f.element(c);
        for (std::size_t t = 0; t < n; ++t)
          v[t] = f.add(m[i][t], f.mul(lambda, m[j][t]));
        consider(v);
      }
  }
  return best;
}

} // namespace

CodeParams min_weight_random(const LinearCode &c, const RandomWeightOptions &opts,
                             std::uint64_t *samples_used) {
  check_metric(c, opts.metric);
  if (c.dimension() == 0)
    throw Error("the zero code has no nonzero codewords");
  if (opts.exclude) {
    require_same_field(c.field(), opts.exclude->field(), "minimum weight");
    if (!c.contains(*opts.exclude))
      throw Error("excluded code is not a subcode of the searched code");
    if (opts.exclude->dimension() == c.dimension())
      throw Error("no codewords outside the excluded subcode");
  }
  constexpr std::uint64_t kBatch = 16;
  SampleResult best;
  std::uint64_t used = 0;
  while (used < opts.samples) {
    const std::uint64_t batch = std::min(kBatch, opts.samples - used);
    std::vector<SampleResult> res(batch);
    parallel_for(batch, opts.threads, [&](std::size_t i) {
      res[i] = isd_sample(*c.field(), c.basis(), opts.exclude, opts.metric,
                          stream_seed(opts.seed, used + i));
    });
    for (auto &r : res)
      if (r.weight < best.weight)
        best = std::move(r);
    used += batch;
    if (best.weight <= opts.target)
      break;
  }
  if (samples_used)
    *samples_used = used;
  CodeParams out;
  out.n = opts.metric == Metric::Hamming ? c.length() : c.length() / 2;
  out.k = c.dimension();
  out.d = best.weight == kNoWeight ? 0 : best.weight;
  out.metric = opts.metric;
  out.exact = false;
  out.witness = std::move(best.word);
  return out;
}

} // namespace grcodes
