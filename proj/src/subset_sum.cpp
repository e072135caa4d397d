#include "infoq/subset_sum.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <span>

#include "infoq/cnf.hpp"
#include "infoq/error.hpp"

namespace infoq {

namespace {

constexpr std::uint64_t kDenseRangeLimit = std::uint64_t{1} << 24;
constexpr int kChunkBits = 20;

void check_size(const SubsetSumInstance& s, int limit) {
  s.validate();
  if (s.weights.size() > static_cast<std::size_t>(limit)) {
    throw DomainError("subset-sum enumeration refused: " + std::to_string(s.weights.size()) + " weights exceeds " +
                      std::to_string(limit));
  }
}

SumHistogram from_sorted(const std::vector<std::int64_t>& sorted) {
  SumHistogram h;
  for (std::int64_t v : sorted) {
    if (!h.sums.empty() && h.sums.back() == v) {
      ++h.counts.back();
    } else {
      h.sums.push_back(v);
      h.counts.push_back(1);
    }
  }
  return h;
}

SumHistogram merge(const SumHistogram& a, const SumHistogram& b) {
  SumHistogram out;
  std::size_t i = 0, j = 0;
  while (i < a.sums.size() || j < b.sums.size()) {
    if (j == b.sums.size() || (i < a.sums.size() && a.sums[i] < b.sums[j])) {
      out.sums.push_back(a.sums[i]);
      out.counts.push_back(a.counts[i++]);
    } else if (i == a.sums.size() || b.sums[j] < a.sums[i]) {
      out.sums.push_back(b.sums[j]);
      out.counts.push_back(b.counts[j++]);
    } else {
      out.sums.push_back(a.sums[i]);
      out.counts.push_back(a.counts[i++] + b.counts[j++]);
    }
  }
  return out;
}

// Sums of all subsets of w, sorted, via the sorted-merge doubling trick.
SumHistogram half_histogram(std::span<const std::int64_t> w) {
  std::vector<std::int64_t> sums{0};
  for (std::int64_t x : w) {
    std::vector<std::int64_t> shifted(sums.size());
    std::transform(sums.begin(), sums.end(), shifted.begin(), [x](std::int64_t v) { return v + x; });
    std::vector<std::int64_t> next(sums.size() * 2);
    std::merge(sums.begin(), sums.end(), shifted.begin(), shifted.end(), next.begin());
    sums = std::move(next);
  }
  return from_sorted(sums);
}

}  // namespace

void SubsetSumInstance::validate() const {
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] == 0) {
      throw DomainError("weight " + std::to_string(i + 1) + " is zero; weights must be nonzero integers");
    }
  }
}

std::uint64_t SumHistogram::total() const {
  std::uint64_t t = 0;
  for (std::uint64_t c : counts) {
    t += c;
  }
  return t;
}

std::uint64_t SumHistogram::count_of(std::int64_t sum) const {
  const auto it = std::lower_bound(sums.begin(), sums.end(), sum);
  return it != sums.end() && *it == sum ? counts[static_cast<std::size_t>(it - sums.begin())] : 0;
}

SumHistogram exhaustive_histogram(const SubsetSumInstance& s) {
  check_size(s, kExhaustiveLimit);
  const auto n = static_cast<int>(s.weights.size());
  std::int64_t lo = 0, hi = 0;
  for (std::int64_t w : s.weights) {
    (w < 0 ? lo : hi) += w;
  }
  const std::uint64_t total = std::uint64_t{1} << n;
  const auto range = static_cast<std::uint64_t>(hi - lo) + 1;

  // Gray code: step t flips the weight at the position of t's lowest set bit.
  std::vector<bool> in(static_cast<std::size_t>(n), false);
  std::int64_t sum = 0;
  auto step = [&](std::uint64_t t) {
    const int bit = std::countr_zero(t);
    sum += in[bit] ? -s.weights[bit] : s.weights[bit];
    in[bit] = !in[bit];
  };

  if (range <= kDenseRangeLimit) {
    std::vector<std::uint32_t> dense(range, 0);
    ++dense[static_cast<std::size_t>(sum - lo)];
    for (std::uint64_t t = 1; t < total; ++t) {
      step(t);
      ++dense[static_cast<std::size_t>(sum - lo)];
    }
    SumHistogram h;
    for (std::uint64_t i = 0; i < range; ++i) {
      if (dense[i] != 0) {
        h.sums.push_back(lo + static_cast<std::int64_t>(i));
        h.counts.push_back(dense[i]);
      }
    }
    return h;
  }

  SumHistogram acc;
  std::vector<std::int64_t> chunk;
  const std::uint64_t chunk_size = std::uint64_t{1} << kChunkBits;
  chunk.reserve(std::min(total, chunk_size));
  chunk.push_back(sum);
  for (std::uint64_t t = 1; t <= total; ++t) {
    if (chunk.size() == chunk_size || t == total) {
      std::sort(chunk.begin(), chunk.end());
      acc = merge(acc, from_sorted(chunk));
      chunk.clear();
    }
    if (t < total) {
      step(t);
      chunk.push_back(sum);
    }
  }
  return acc;
}

SumHistogram meet_in_middle_histogram(const SubsetSumInstance& s, std::uint64_t max_pairs) {
  check_size(s, kMeetInMiddleLimit);
  const std::size_t half = s.weights.size() / 2;
  const std::span<const std::int64_t> all(s.weights);
  const SumHistogram left = half_histogram(all.first(half));
  const SumHistogram right = half_histogram(all.subspan(half));
  __extension__ using u128 = unsigned __int128;
  const auto pairs = static_cast<u128>(left.sums.size()) * right.sums.size();
  if (pairs > max_pairs) {
    throw DomainError("meet-in-the-middle refused: " + std::to_string(static_cast<std::uint64_t>(pairs)) +
                      " half-sum pairs exceeds the limit " + std::to_string(max_pairs));
  }
  // k-way merge: one cursor per left sum walking the sorted right sums.
  using Cursor = std::pair<std::int64_t, std::size_t>;  // (current sum, left index)
  std::priority_queue<Cursor, std::vector<Cursor>, std::greater<>> heap;
  std::vector<std::size_t> pos(left.sums.size(), 0);
  for (std::size_t i = 0; i < left.sums.size(); ++i) {
    heap.emplace(left.sums[i] + right.sums[0], i);
  }
  SumHistogram out;
  while (!heap.empty()) {
    const auto [value, i] = heap.top();
    heap.pop();
    const std::uint64_t c = left.counts[i] * right.counts[pos[i]];
    if (!out.sums.empty() && out.sums.back() == value) {
      out.counts.back() += c;
    } else {
      out.sums.push_back(value);
      out.counts.push_back(c);
    }
    if (++pos[i] < right.sums.size()) {
      heap.emplace(left.sums[i] + right.sums[pos[i]], i);
    }
  }
  return out;
}

std::uint64_t zero_sum_count(const SubsetSumInstance& s) {
  check_size(s, kMeetInMiddleLimit);
  const std::size_t half = s.weights.size() / 2;
  const std::span<const std::int64_t> all(s.weights);
  const SumHistogram left = half_histogram(all.first(half));
  const SumHistogram right = half_histogram(all.subspan(half));
  std::uint64_t count = 0;
  std::size_t i = 0;
  std::size_t j = right.sums.size();
  while (i < left.sums.size() && j > 0) {
    const std::int64_t v = left.sums[i] + right.sums[j - 1];
    if (v == 0) {
      count += left.counts[i++] * right.counts[--j];
    } else if (v < 0) {
      ++i;
    } else {
      --j;
    }
  }
  return count;
}

}  // namespace infoq
