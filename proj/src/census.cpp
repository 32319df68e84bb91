#include "hyper/census.hpp"

#include <algorithm>
#include <atomic>
#include <random>
#include <thread>

#include "hyper/error.hpp"
#include "hyper/morphisms.hpp"

namespace hyper::census {

namespace {

std::uint64_t mask_count(std::size_t order) {
  return (std::uint64_t{1} << order) - 1;
}

std::uint64_t full_count(std::size_t order) {
  std::uint64_t total = 1;
  for (std::size_t c = 0; c < order * order; ++c) {
    total *= mask_count(order);
  }
  return total;
}

void check_full_order(std::size_t order) {
  if (order == 0) {
    throw UsageError("census order must be at least 1");
  }
  if (order > kMaxFullOrder) {
    throw UsageError("refusing to enumerate all " +
                     table_count(order).str() + " tables of order " +
                     std::to_string(order) +
                     "; full scans stop at order 3 (use sampling)");
  }
}

// Products with an arbitrary mask, tabulated per table.
template <std::size_t MaxOrder>
struct ProductTables {
  static constexpr std::size_t kMasks = std::size_t{1} << MaxOrder;
  std::array<std::uint64_t, kMasks * MaxOrder> right{};  // [M][z] = M . z
  std::array<std::uint64_t, MaxOrder * kMasks> left{};   // [x][M] = x . M

  void build(const std::uint64_t* cells, std::size_t n) {
    const std::size_t masks = std::size_t{1} << n;
    for (std::size_t z = 0; z < n; ++z) {
      right[z] = 0;
      left[z * kMasks] = 0;
    }
    for (std::size_t m = 1; m < masks; ++m) {
      const std::size_t low = static_cast<std::size_t>(std::countr_zero(m));
      const std::size_t rest = m & (m - 1);
      for (std::size_t z = 0; z < n; ++z) {
        right[m * MaxOrder + z] = right[rest * MaxOrder + z] | cells[low * n + z];
        left[z * kMasks + m] = left[z * kMasks + rest] | cells[z * n + low];
      }
    }
  }
};

TableFlags classify_small(const std::uint64_t* cells, std::size_t n) {
  constexpr std::size_t kMax = 4;
  ProductTables<kMax> p;
  p.build(cells, n);
  constexpr std::size_t kMasks = decltype(p)::kMasks;
  TableFlags f;
  f.associative = true;
  f.weakly_associative = true;
  for (std::size_t x = 0; x < n && f.weakly_associative; ++x) {
    for (std::size_t y = 0; y < n && f.weakly_associative; ++y) {
      const std::uint64_t xy = cells[x * n + y];
      for (std::size_t z = 0; z < n; ++z) {
        const std::uint64_t l = p.right[xy * kMax + z];
        const std::uint64_t r = p.left[x * kMasks + cells[y * n + z]];
        f.associative &= l == r;
        if ((l & r) == 0) {
          f.weakly_associative = false;
          f.associative = false;
          break;
        }
      }
    }
  }
  return f;
}

TableFlags classify_large(const std::uint64_t* cells, std::size_t n) {
  auto right_times = [&](std::uint64_t s, std::size_t z) {
    std::uint64_t out = 0;
    for (Element u : SubsetMask(s)) {
      out |= cells[u * n + z];
    }
    return out;
  };
  auto left_times = [&](std::size_t x, std::uint64_t s) {
    std::uint64_t out = 0;
    for (Element v : SubsetMask(s)) {
      out |= cells[x * n + v];
    }
    return out;
  };
  TableFlags f;
  f.associative = true;
  f.weakly_associative = true;
  for (std::size_t x = 0; x < n && f.weakly_associative; ++x) {
    for (std::size_t y = 0; y < n && f.weakly_associative; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        const std::uint64_t l = right_times(cells[x * n + y], z);
        const std::uint64_t r = left_times(x, cells[y * n + z]);
        f.associative &= l == r;
        if ((l & r) == 0) {
          f.weakly_associative = false;
          f.associative = false;
          break;
        }
      }
    }
  }
  return f;
}

}  // namespace

BigCount table_count(std::size_t order) {
  BigCount base = (BigCount(1) << order) - 1;
  return boost::multiprecision::pow(base, static_cast<unsigned>(order * order));
}

TableOdometer::TableOdometer(std::size_t order)
    : TableOdometer(order, 0,
                    (check_full_order(order), full_count(order))) {}

TableOdometer::TableOdometer(std::size_t order, std::uint64_t first,
                             std::uint64_t last)
    : order_(order),
      index_(first),
      last_(last),
      max_digit_(0),
      cells_(order * order, SubsetMask(1)) {
  check_full_order(order);
  max_digit_ = mask_count(order);
  const std::uint64_t total = full_count(order);
  if (first > last || last > total) {
    throw UsageError("odometer range [" + std::to_string(first) + ", " +
                     std::to_string(last) + ") outside [0, " +
                     std::to_string(total) + ")");
  }
  // Digit d of the index (base 2^n - 1) selects mask d + 1.
  std::uint64_t rest = first;
  for (std::size_t c = cells_.size(); c-- > 0;) {
    cells_[c] = SubsetMask(rest % max_digit_ + 1);
    rest /= max_digit_;
  }
}

HyperOp TableOdometer::table() const {
  return HyperOp(numbered_universe(order_),
                 std::vector<SubsetMask>(cells_.begin(), cells_.end()));
}

void TableOdometer::advance() noexcept {
  ++index_;
  for (std::size_t c = cells_.size(); c-- > 0;) {
    if (cells_[c].bits() < max_digit_) {
      cells_[c] = SubsetMask(cells_[c].bits() + 1);
      return;
    }
    cells_[c] = SubsetMask(1);
  }
}

void enumerate_tables(std::size_t order,
                      const std::function<void(const HyperOp&)>& visit) {
  for (TableOdometer it(order); !it.done(); it.advance()) {
    visit(it.table());
  }
}

std::vector<SubsetMask> sample_table(std::size_t order, std::uint64_t seed,
                                     std::uint64_t k) {
  if (order == 0 || order > kMaxSampleOrder) {
    throw UsageError("sampling supports orders 1 to 8, got " +
                     std::to_string(order));
  }
  std::mt19937_64 rng(seed + k);
  std::uniform_int_distribution<std::uint64_t> digit(1, mask_count(order));
  std::vector<SubsetMask> cells(order * order);
  for (auto& c : cells) {
    c = SubsetMask(digit(rng));
  }
  return cells;
}

TableFlags classify_cells(std::span<const SubsetMask> cells,
                          std::size_t order) {
  const std::size_t n = order;
  std::array<std::uint64_t, 64> small{};
  std::vector<std::uint64_t> large;
  const std::uint64_t* raw = nullptr;
  if (n * n <= small.size()) {
    for (std::size_t c = 0; c < n * n; ++c) {
      small[c] = cells[c].bits();
    }
    raw = small.data();
  } else {
    large.resize(n * n);
    for (std::size_t c = 0; c < n * n; ++c) {
      large[c] = cells[c].bits();
    }
    raw = large.data();
  }

  TableFlags f = n <= 4 ? classify_small(raw, n) : classify_large(raw, n);

  const std::uint64_t all = SubsetMask::full(n).bits();
  f.reproduction = true;
  f.commutative = true;
  for (std::size_t x = 0; x < n; ++x) {
    std::uint64_t row = 0;
    std::uint64_t column = 0;
    for (std::size_t y = 0; y < n; ++y) {
      row |= raw[x * n + y];
      column |= raw[y * n + x];
      f.commutative &= raw[x * n + y] == raw[y * n + x];
    }
    f.reproduction &= row == all && column == all;
  }
  f.label = label_for(f.reproduction, f.associative, f.weakly_associative);
  return f;
}

std::uint64_t Counts::total() const noexcept {
  std::uint64_t t = 0;
  for (auto c : per_label) {
    t += c;
  }
  return t;
}

void Counts::add(const TableFlags& f) noexcept {
  ++(*this)[f.label];
  reproduction += f.reproduction;
  associative += f.associative;
  weakly_associative += f.weakly_associative;
  commutative += f.commutative;
}

Counts& Counts::operator+=(const Counts& o) noexcept {
  for (std::size_t i = 0; i < per_label.size(); ++i) {
    per_label[i] += o.per_label[i];
  }
  reproduction += o.reproduction;
  associative += o.associative;
  weakly_associative += o.weakly_associative;
  commutative += o.commutative;
  return *this;
}

bool Report::same_result(const Report& o) const {
  return order == o.order && total_tables == o.total_tables &&
         scanned == o.scanned && sampled == o.sampled && counts == o.counts &&
         isomorphism_classes == o.isomorphism_classes &&
         class_counts == o.class_counts;
}

namespace {

// Splits [0, planned) into contiguous per-worker ranges; each worker fills
// its own Counts, summed in worker order afterwards.
Counts parallel_count(
    std::uint64_t planned, unsigned workers, const Options& options,
    const std::function<void(std::uint64_t, std::uint64_t, Counts&,
                             std::atomic<std::uint64_t>&)>& work) {
  const std::uint64_t w =
      std::max<std::uint64_t>(1, std::min<std::uint64_t>(workers, planned));
  std::vector<Counts> partial(w);
  std::atomic<std::uint64_t> processed{0};
  std::atomic<std::uint64_t> finished{0};
  {
    std::vector<std::jthread> threads;
    for (std::uint64_t k = 0; k < w; ++k) {
      const std::uint64_t first = planned / w * k + std::min(k, planned % w);
      const std::uint64_t last =
          planned / w * (k + 1) + std::min(k + 1, planned % w);
      threads.emplace_back([&, k, first, last] {
        work(first, last, partial[k], processed);
        ++finished;
      });
    }
    if (options.progress) {
      auto last_report = std::chrono::steady_clock::now();
      while (finished.load() < w) {
        std::this_thread::sleep_for(std::chrono::milliseconds(100));
        const auto now = std::chrono::steady_clock::now();
        if (now - last_report >= std::chrono::seconds(1)) {
          last_report = now;
          options.progress(processed.load(), planned);
        }
      }
    }
  }
  Counts total;
  for (const Counts& c : partial) {
    total += c;
  }
  return total;
}

constexpr std::uint64_t kProgressStride = std::uint64_t{1} << 16;

void dedup(const Options& options, Report& report) {
  std::vector<HyperOp> representatives;
  Counts classes;
  enumerate_tables(options.order, [&](const HyperOp& op) {
    for (const HyperOp& rep : representatives) {
      if (find_isomorphism(rep, op)) {
        return;
      }
    }
    representatives.push_back(op);
    classes.add(classify_cells(op.cells(), op.order()));
  });
  report.isomorphism_classes = representatives.size();
  report.class_counts = classes;
}

}  // namespace

Report run_census(const Options& options) {
  const auto start = std::chrono::steady_clock::now();
  const std::size_t n = options.order;
  Report report;
  report.order = n;
  report.total_tables = table_count(n);
  report.sampled = options.sample.has_value();

  if (options.sample) {
    if (options.dedup) {
      throw UsageError("--dedup is only available for full scans");
    }
    (void)sample_table(n, options.seed, 0);  // order check
    const std::uint64_t seed = options.seed;
    report.scanned = *options.sample;
    report.counts = parallel_count(
        *options.sample, options.workers, options,
        [n, seed](std::uint64_t first, std::uint64_t last, Counts& counts,
                  std::atomic<std::uint64_t>& processed) {
          for (std::uint64_t k = first; k < last; ++k) {
            counts.add(classify_cells(sample_table(n, seed, k), n));
            if ((k - first + 1) % kProgressStride == 0) {
              processed += kProgressStride;
            }
          }
        });
  } else {
    check_full_order(n);
    if (options.dedup && n > kMaxDedupOrder) {
      throw UsageError("--dedup is limited to order 2");
    }
    report.scanned = full_count(n);
    report.counts = parallel_count(
        report.scanned, options.workers, options,
        [n](std::uint64_t first, std::uint64_t last, Counts& counts,
            std::atomic<std::uint64_t>& processed) {
          std::uint64_t since = 0;
          for (TableOdometer it(n, first, last); !it.done(); it.advance()) {
            counts.add(classify_cells(it.cells(), n));
            if (++since == kProgressStride) {
              processed += since;
              since = 0;
            }
          }
        });
    if (options.dedup) {
      dedup(options, report);
    }
  }
  report.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
      std::chrono::steady_clock::now() - start);
  return report;
}

}  // namespace hyper::census
