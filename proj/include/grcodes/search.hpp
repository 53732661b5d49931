#pragma once

#include "grcodes/ortho.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grcodes {

enum class SearchMode { ExhaustiveByWeight, Random };
std::string to_string(SearchMode m);
SearchMode parse_search_mode(std::string_view text);

struct SearchConfig {
  std::string field = "GF(2)";
  std::string group = "C3";
  OrthoKind kind = OrthoKind::Euclidean;
  SearchMode mode = SearchMode::ExhaustiveByWeight;
  std::size_t max_weight = 1;
  std::uint64_t seed = 0;
  /// Number of candidates to evaluate (random) or the most the exhaustive
  /// space may hold.
  std::uint64_t budget = 10000;
  std::uint64_t distance_budget = std::uint64_t{1} << 20;
  /// Not part of the configuration identity.
  unsigned threads = 0;
};

/// Text form of every field that affects results, in a fixed order.
std::string canonical_string(const SearchConfig &c);
/// FNV-1a 64 of canonical_string, as 16 hex digits.
std::string config_hash(const SearchConfig &c);

struct SearchRecord {
  std::uint64_t index = 0;
  std::string element;
  std::string element_b; // symplectic-pair only
  QeccParams qecc;
};

struct SearchResult {
  std::uint64_t candidates = 0;
  std::uint64_t certified = 0;
  /// Certified candidates whose distance computation was over budget.
  std::uint64_t skipped = 0;
  /// Sorted by quantum k (desc), d (desc), then candidate index.
  std::vector<SearchRecord> records;
};

/// Size of the exhaustive space: supports of size 1..max_weight over n
/// positions (2n for pairs) with the first coefficient fixed to 1.
std::uint64_t exhaustive_space_size(std::size_t positions, std::uint32_t q,
                                    std::size_t max_weight);

/// Enumerates or samples elements, keeps those whose certificate holds and
/// computes their parameters. Output depends only on the configuration, not
/// on the thread count. Throws BudgetExceeded when an exhaustive space is
/// larger than a nonzero budget.
SearchResult run_search(const SearchConfig &config);

} // namespace grcodes
