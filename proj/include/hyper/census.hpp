#pragma once

#include <array>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hyper/hyperop.hpp"

namespace hyper::census {

using BigCount = boost::multiprecision::cpp_int;

inline constexpr std::size_t kMaxFullOrder = 3;
inline constexpr std::size_t kMaxSampleOrder = 8;
inline constexpr std::size_t kMaxDedupOrder = 2;
inline constexpr std::uint64_t kDefaultSeed = 0x5eed'4a11'0c8e'11abULL;

// (2^n - 1)^(n^2)
BigCount table_count(std::size_t order);

// Walks every table of a given order exactly once. Each cell is a digit in
// [1, 2^n - 1] read as a subset mask; cell (0, 0) is the most significant
// digit and (n-1, n-1) varies fastest, so tables appear in lexicographic
// order of their row-major cell lists.
class TableOdometer {
 public:
  // Full range. Throws UsageError for n > 3.
  explicit TableOdometer(std::size_t order);
  // Tables with index in [first, last).
  TableOdometer(std::size_t order, std::uint64_t first, std::uint64_t last);

  std::size_t order() const noexcept { return order_; }
  std::uint64_t index() const noexcept { return index_; }
  bool done() const noexcept { return index_ >= last_; }
  std::span<const SubsetMask> cells() const noexcept { return cells_; }
  HyperOp table() const;
  void advance() noexcept;

 private:
  std::size_t order_;
  std::uint64_t index_;
  std::uint64_t last_;
  std::uint64_t max_digit_;
  std::vector<SubsetMask> cells_;
};

// Visits every table of order n (n <= 3) in odometer order.
void enumerate_tables(std::size_t order,
                      const std::function<void(const HyperOp&)>& visit);

// The k-th table of the deterministic sample: each cell drawn uniformly from
// the non-empty subsets by a generator seeded with seed + k.
std::vector<SubsetMask> sample_table(std::size_t order, std::uint64_t seed,
                                     std::uint64_t k);

struct TableFlags {
  bool reproduction = false;
  bool associative = false;
  bool weakly_associative = false;
  bool commutative = false;
  ClassLabel label = ClassLabel::hypergroupoid;
};

// Axiom flags for a raw row-major table. For n <= 4 the subset products
// x . M and M . z are tabulated over all masks M first, so each triple costs
// two lookups and a compare.
TableFlags classify_cells(std::span<const SubsetMask> cells, std::size_t order);

struct Counts {
  std::array<std::uint64_t, 5> per_label{};  // indexed by ClassLabel
  std::uint64_t reproduction = 0;
  std::uint64_t associative = 0;
  std::uint64_t weakly_associative = 0;
  std::uint64_t commutative = 0;

  std::uint64_t& operator[](ClassLabel l) {
    return per_label[static_cast<std::size_t>(l)];
  }
  std::uint64_t operator[](ClassLabel l) const {
    return per_label[static_cast<std::size_t>(l)];
  }
  std::uint64_t total() const noexcept;
  void add(const TableFlags& f) noexcept;
  Counts& operator+=(const Counts& o) noexcept;

  friend bool operator==(const Counts&, const Counts&) = default;
};

struct Options {
  std::size_t order = 1;
  bool dedup = false;
  // Classify this many sampled tables instead of the full scan.
  std::optional<std::uint64_t> sample;
  std::uint64_t seed = kDefaultSeed;
  unsigned workers = 1;
  // Called roughly once a second with the number of tables classified.
  std::function<void(std::uint64_t processed, std::uint64_t planned)> progress;
};

struct Report {
  std::size_t order = 0;
  BigCount total_tables;
  std::uint64_t scanned = 0;
  bool sampled = false;
  Counts counts;  // over scanned tables
  // Dedup mode: labels counted once per isomorphism class.
  std::optional<std::uint64_t> isomorphism_classes;
  std::optional<Counts> class_counts;
  std::chrono::milliseconds elapsed{0};

  // Everything except elapsed time.
  bool same_result(const Report& o) const;
};

Report run_census(const Options& options);

}  // namespace hyper::census
