#pragma once

#include <cstdint>
#include <vector>

namespace infoq {

inline constexpr int kMeetInMiddleLimit = 40;

struct SubsetSumInstance {
  std::vector<std::int64_t> weights;

  /// Throws DomainError on a zero weight.
  void validate() const;
};

/// Exact multiplicities of every subset sum, sorted by sum.
struct SumHistogram {
  std::vector<std::int64_t> sums;
  std::vector<std::uint64_t> counts;

  std::uint64_t total() const;
  std::uint64_t count_of(std::int64_t sum) const;

  friend bool operator==(const SumHistogram&, const SumHistogram&) = default;
};

/// All 2^n subsets, enumerated one by one in Gray-code order. n <= 26.
SumHistogram exhaustive_histogram(const SubsetSumInstance& s);

/// Histogram from the sorted half-sum histograms of the two halves of the
/// weight list, combined pairwise. n <= 40; refuses when the number of
/// distinct-sum pairs exceeds max_pairs.
SumHistogram meet_in_middle_histogram(const SubsetSumInstance& s, std::uint64_t max_pairs = std::uint64_t{1} << 30);

/// Number of subsets summing to zero (the empty one included), from the two
/// sorted half histograms with a two-pointer scan.
std::uint64_t zero_sum_count(const SubsetSumInstance& s);

}  // namespace infoq
