#include "grcodes/search.hpp"

#include "grcodes/error.hpp"
#include "grcodes/parallel.hpp"
#include "grcodes/rng.hpp"

#include <algorithm>
#include <cstdio>

namespace grcodes {

std::string to_string(SearchMode m) {
  return m == SearchMode::ExhaustiveByWeight ? "exhaustive-by-weight" : "random";
}

SearchMode parse_search_mode(std::string_view text) {
  if (text == "exhaustive-by-weight" || text == "exhaustive")
    return SearchMode::ExhaustiveByWeight;
  if (text == "random")
    return SearchMode::Random;
  throw ParseError("unknown search mode '" + std::string(text) + "'", 0);
}

std::string canonical_string(const SearchConfig &c) {
  return "field=" + parse_field(c.field)->spec_string() +
         ";group=" + to_string(parse_group_spec(c.group)) + ";kind=" + to_string(c.kind) +
         ";mode=" + to_string(c.mode) + ";max_weight=" + std::to_string(c.max_weight) +
         ";seed=" + std::to_string(c.seed) + ";budget=" + std::to_string(c.budget) +
         ";distance_budget=" + std::to_string(c.distance_budget);
}

std::string config_hash(const SearchConfig &c) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : canonical_string(c)) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::uint64_t exhaustive_space_size(std::size_t positions, std::uint32_t q,
                                    std::size_t max_weight) {
  constexpr std::uint64_t kCap = std::uint64_t{1} << 62;
  std::uint64_t total = 0, binom = 1, coeffs = 1;
  for (std::size_t w = 1; w <= std::min(max_weight, positions); ++w) {
    // binom = C(positions, w), coeffs = (q-1)^(w-1)
    const long double b = static_cast<long double>(binom) * (positions - w + 1) / w;
    if (b > kCap)
      return kCap;
    binom = static_cast<std::uint64_t>(b + 0.5L);
    if (w > 1) {
      if (coeffs > kCap / (q - 1))
        return kCap;
      coeffs *= q - 1;
    }
    if (binom > kCap / coeffs || total > kCap - binom * coeffs)
      return kCap;
    total += binom * coeffs;
  }
  return total;
}

namespace {

struct Candidate {
  std::vector<std::size_t> support;
  std::vector<std::uint32_t> coeffs; // element reps, first is 1
};

// Supports of size w in lex order, each with every coefficient tuple whose
// first entry is 1 (later entries vary fastest).
class ExhaustiveSource {
public:
  ExhaustiveSource(std::size_t positions, std::uint32_t q, std::size_t max_weight)
      : n_(positions), q_(q), max_w_(std::min(max_weight, positions)) {
    start_weight(1);
  }

  bool next(Candidate &c) {
    if (w_ > max_w_ || w_ == 0)
      return false;
    c.support = support_;
    c.coeffs = coeffs_;
    advance();
    return true;
  }

private:
  void start_weight(std::size_t w) {
    w_ = w;
    support_.resize(w);
    for (std::size_t i = 0; i < w; ++i)
      support_[i] = i;
    coeffs_.assign(w, 1);
  }

  void advance() {
    for (std::size_t i = w_; i-- > 1;) {
      if (++coeffs_[i] < q_)
        return;
      coeffs_[i] = 1;
    }
    for (std::size_t i = w_; i-- > 0;) {
      if (support_[i] < n_ - w_ + i) {
        ++support_[i];
        for (std::size_t j = i + 1; j < w_; ++j)
          support_[j] = support_[j - 1] + 1;
        return;
      }
    }
    start_weight(w_ + 1);
  }

  std::size_t n_;
  std::uint32_t q_;
  std::size_t max_w_, w_ = 0;
  std::vector<std::size_t> support_;
  std::vector<std::uint32_t> coeffs_;
};

Candidate random_candidate(std::size_t positions, std::uint32_t q, std::size_t max_weight,
                           std::uint64_t seed, std::uint64_t index) {
  std::mt19937_64 rng(stream_seed(seed, index));
  const std::size_t w = 1 + uniform_below(rng, std::min(max_weight, positions));
  std::vector<std::size_t> pool(positions);
  for (std::size_t i = 0; i < positions; ++i)
    pool[i] = i;
  for (std::size_t i = 0; i < w; ++i)
    std::swap(pool[i], pool[i + uniform_below(rng, positions - i)]);
  Candidate c;
  c.support.assign(pool.begin(), pool.begin() + w);
  std::sort(c.support.begin(), c.support.end());
  c.coeffs.push_back(1);
  for (std::size_t i = 1; i < w; ++i)
    c.coeffs.push_back(static_cast<std::uint32_t>(1 + uniform_below(rng, q - 1)));
  return c;
}

struct Outcome {
  bool certified = false;
  bool skipped = false;
  SearchRecord record;
};

Outcome evaluate(const SearchConfig &cfg, const FieldPtr &field, const GroupPtr &group,
                 const Candidate &cand, std::uint64_t index) {
  const std::size_t n = group->order();
  const bool pair = cfg.kind == OrthoKind::SymplecticPair;
  Vector va(n, field->zero()), vb(n, field->zero());
  for (std::size_t t = 0; t < cand.support.size(); ++t) {
    const std::size_t p = cand.support[t];
    (p < n ? va[p] : vb[p - n]) = field->element(cand.coeffs[t]);
  }
  GroupRingElement a(field, group, va), b(field, group, vb);

  Outcome out;
  OrthoCertificate cert;
  Matrix gen = sigma(a);
  switch (cfg.kind) {
  case OrthoKind::Euclidean:
    cert = check_euclidean(a);
    break;
  case OrthoKind::Hermitian:
    cert = check_hermitian(a);
    break;
  case OrthoKind::Symplectic:
    cert = check_symplectic(a);
    break;
  case OrthoKind::SymplecticPair:
    cert = check_symplectic_pair(a, b);
    gen = hconcat(gen, sigma(b));
    break;
  }
  if (!cert.holds)
    return out;
  out.certified = true;
  const LinearCode code(std::move(gen));
  if (code.dimension() == 0)
    return out;
  DistanceOptions opts;
  opts.budget = cfg.distance_budget;
  opts.threads = 1;
  try {
    out.record.qecc = derive_qecc(code, cert, opts);
  } catch (const BudgetExceeded &) {
    out.skipped = true;
    return out;
  }
  out.record.index = index;
  out.record.element = to_string(a);
  if (pair)
    out.record.element_b = to_string(b);
  return out;
}

} // namespace

SearchResult run_search(const SearchConfig &cfg) {
  const FieldPtr field = parse_field(cfg.field);
  const GroupPtr group = build_group(cfg.group);
  if (cfg.kind == OrthoKind::Hermitian && field->degree() != 2)
    throw Error("Hermitian search needs a field of order p^2");
  if (cfg.kind == OrthoKind::Symplectic && group->order() % 2)
    throw Error("symplectic search needs a group of even order");
  if (cfg.max_weight == 0)
    throw Error("max weight must be at least 1");
  const std::size_t positions =
      cfg.kind == OrthoKind::SymplecticPair ? 2 * group->order() : group->order();

  SearchResult result;
  if (cfg.budget == 0)
    return result;
  std::uint64_t total = cfg.budget;
  if (cfg.mode == SearchMode::ExhaustiveByWeight) {
    total = exhaustive_space_size(positions, field->order(), cfg.max_weight);
    if (total > cfg.budget)
      throw BudgetExceeded("exhaustive search space of " + std::to_string(total) +
                           " candidates exceeds the budget of " + std::to_string(cfg.budget));
  }

  ExhaustiveSource source(positions, field->order(), cfg.max_weight);
  constexpr std::uint64_t kBlock = 4096;
  std::vector<SearchRecord> records;
  for (std::uint64_t begin = 0; begin < total; begin += kBlock) {
    const std::uint64_t count = std::min(kBlock, total - begin);
    std::vector<Candidate> cands(count);
    for (std::uint64_t i = 0; i < count; ++i) {
      if (cfg.mode == SearchMode::ExhaustiveByWeight)
        source.next(cands[i]);
      else
        cands[i] =
            random_candidate(positions, field->order(), cfg.max_weight, cfg.seed, begin + i);
    }
    std::vector<Outcome> outs(count);
    parallel_for(count, cfg.threads, [&](std::size_t i) {
      outs[i] = evaluate(cfg, field, group, cands[i], begin + i);
    });
    for (auto &o : outs) {
      result.certified += o.certified;
      result.skipped += o.skipped;
      if (!o.record.element.empty())
        records.push_back(std::move(o.record));
    }
    result.candidates += count;
  }
  std::sort(records.begin(), records.end(), [](const SearchRecord &x, const SearchRecord &y) {
    if (x.qecc.k != y.qecc.k)
      return x.qecc.k > y.qecc.k;
    if (x.qecc.d != y.qecc.d)
      return x.qecc.d > y.qecc.d;
    return x.index < y.index;
  });
  result.records = std::move(records);
  return result;
}

} // namespace grcodes
