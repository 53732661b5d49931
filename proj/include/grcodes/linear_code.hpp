#pragma once

#include "grcodes/matrix.hpp"

#include <cstdint>
#include <optional>
#include <string>

namespace grcodes {

/// Row space of a generator matrix over F_q.
class LinearCode {
public:
  explicit LinearCode(Matrix generator);

  const FieldPtr &field() const noexcept { return generator_.field(); }
  std::size_t length() const noexcept { return generator_.cols(); }
  std::size_t dimension() const noexcept { return basis_.rows(); }
  const Matrix &generator() const noexcept { return generator_; }
  /// Reduced row echelon basis.
  const Matrix &basis() const noexcept { return basis_; }
  const std::vector<std::size_t> &pivots() const noexcept { return pivots_; }

  /// Membership in the row space.
  bool contains(const Vector &v) const;
  bool contains(const LinearCode &sub) const;
  /// Same row space.
  friend bool operator==(const LinearCode &a, const LinearCode &b);

private:
  Matrix generator_;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

LinearCode dual_euclidean(const LinearCode &c);
/// Dual under sum x_i y_i^p; needs a field of order p^2.
LinearCode dual_hermitian(const LinearCode &c);
/// Dual under x Omega y^T; needs even length.
LinearCode dual_symplectic(const LinearCode &c);

enum class Metric { Hamming, Symplectic };
std::string to_string(Metric m);

struct CodeParams {
  std::size_t n = 0, k = 0, d = 0;
  Metric metric = Metric::Hamming;
  bool exact = true;
  /// A codeword attaining d.
  Vector witness;
};

struct WeightOptions {
  Metric metric = Metric::Hamming;
  /// Codewords of this subcode are skipped.
  const LinearCode *exclude = nullptr;
  /// Upper bound on enumerated codewords.
  std::uint64_t budget = std::uint64_t{1} << 24;
  /// 0 picks the hardware concurrency.
  unsigned threads = 0;
};

/// Exact minimum weight over nonzero codewords outside `exclude`, by Gray
/// code enumeration of all q^k messages. Throws BudgetExceeded when q^k is
/// over budget, and Error when nothing is left to search.
CodeParams min_weight(const LinearCode &c, const WeightOptions &opts = {});

struct RandomWeightOptions {
  Metric metric = Metric::Hamming;
  const LinearCode *exclude = nullptr;
  std::uint64_t seed = 0;
  std::uint64_t samples = 1000;
  /// Stop after the batch in which a codeword of weight <= target is seen.
  std::size_t target = 0;
  unsigned threads = 0;
};

/// Upper bound on the minimum weight by information-set sampling (every
/// combination of at most two information positions per sample). Results
/// depend only on the seed and sample count, not on the thread count.
/// `samples_used` receives the number of samples drawn.
CodeParams min_weight_random(const LinearCode &c, const RandomWeightOptions &opts,
                             std::uint64_t *samples_used = nullptr);

} // namespace grcodes
