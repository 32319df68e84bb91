#include "hyper/hyperop.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

#include "hyper/error.hpp"

namespace hyper {

bool is_valid_symbol(std::string_view symbol) noexcept {
  if (symbol.empty()) {
    return false;
  }
  return std::all_of(symbol.begin(), symbol.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

Universe::Universe(std::vector<std::string> symbols)
    : symbols_(std::move(symbols)) {
  if (symbols_.empty()) {
    throw UsageError("universe must contain at least one element");
  }
  if (symbols_.size() > kMaxOrder) {
    throw UsageError("universe has " + std::to_string(symbols_.size()) +
                     " elements; at most 64 are supported");
  }
  std::unordered_set<std::string_view> seen;
  for (const auto& s : symbols_) {
    if (!is_valid_symbol(s)) {
      throw UsageError("invalid element symbol '" + s +
                       "' (allowed characters: A-Z a-z 0-9 _)");
    }
    if (!seen.insert(s).second) {
      throw UsageError("duplicate element symbol '" + s + "'");
    }
  }
}

std::optional<Element> Universe::find(std::string_view symbol) const {
  auto it = std::find(symbols_.begin(), symbols_.end(), symbol);
  if (it == symbols_.end()) {
    return std::nullopt;
  }
  return static_cast<Element>(it - symbols_.begin());
}

std::string Universe::format(SubsetMask set) const {
  std::string out = "{";
  bool first = true;
  for (Element e : set) {
    if (!first) {
      out += ", ";
    }
    out += symbol(e);
    first = false;
  }
  out += '}';
  return out;
}

Universe numbered_universe(std::size_t n) {
  std::vector<std::string> symbols;
  symbols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    symbols.push_back(std::to_string(i));
  }
  return Universe(std::move(symbols));
}

HyperOp::HyperOp(Universe universe, std::vector<SubsetMask> cells)
    : universe_(std::move(universe)), cells_(std::move(cells)) {
  const std::size_t n = universe_.size();
  if (cells_.size() != n * n) {
    throw UsageError("hyperoperation on " + std::to_string(n) +
                     " elements needs " + std::to_string(n * n) +
                     " cells, got " + std::to_string(cells_.size()));
  }
  const SubsetMask all = universe_.all();
  for (std::size_t c = 0; c < cells_.size(); ++c) {
    const auto& s = universe_.symbols();
    if (cells_[c].empty()) {
      throw UsageError("empty product " + s[c / n] + " . " + s[c % n]);
    }
    if (!cells_[c].subset_of(all)) {
      throw UsageError("product " + s[c / n] + " . " + s[c % n] +
                       " references an element outside the universe");
    }
  }
}

HyperOp HyperOp::total(Universe universe) {
  const std::size_t n = universe.size();
  const SubsetMask all = universe.all();
  return HyperOp(std::move(universe), std::vector<SubsetMask>(n * n, all));
}

std::string_view to_string(ClassLabel label) noexcept {
  switch (label) {
    case ClassLabel::hypergroupoid:
      return "hypergroupoid";
    case ClassLabel::semihypergroup:
      return "semihypergroup";
    case ClassLabel::quasihypergroup:
      return "quasihypergroup";
    case ClassLabel::hypergroup:
      return "hypergroup";
    case ClassLabel::hv_group_only:
      return "hv_group_only";
  }
  return "hypergroupoid";
}

ClassLabel label_for(bool reproduction, bool associative,
                     bool weakly_associative) noexcept {
  if (reproduction) {
    if (associative) {
      return ClassLabel::hypergroup;
    }
    return weakly_associative ? ClassLabel::hv_group_only
                              : ClassLabel::quasihypergroup;
  }
  return associative ? ClassLabel::semihypergroup : ClassLabel::hypergroupoid;
}

namespace {

void check_index(const HyperOp& op, Element e) {
  if (e >= op.order()) {
    throw UsageError("element index " + std::to_string(e) +
                     " out of range for order " + std::to_string(op.order()));
  }
}

void check_operand(const HyperOp& op, SubsetMask s, const char* side) {
  if (s.empty()) {
    throw UsageError(std::string(side) +
                     " operand of a subset product must be non-empty");
  }
  if (!s.subset_of(op.universe().all())) {
    throw UsageError(std::string(side) +
                     " operand references an element outside the universe");
  }
}

// x . S, no argument checks
SubsetMask left_times(const HyperOp& op, Element x, SubsetMask s) {
  SubsetMask out;
  for (Element v : s) {
    out |= op.cell(x, v);
  }
  return out;
}

// S . z, no argument checks
SubsetMask right_times(const HyperOp& op, SubsetMask s, Element z) {
  SubsetMask out;
  for (Element u : s) {
    out |= op.cell(u, z);
  }
  return out;
}

TripleWitness triple(const HyperOp& op, Element x, Element y, Element z) {
  return TripleWitness{x, y, z, right_times(op, op.cell(x, y), z),
                       left_times(op, x, op.cell(y, z))};
}

using TriplePredicate = bool (*)(SubsetMask, SubsetMask);

// First failing triple with first coordinate in [begin, end).
std::optional<TripleWitness> scan_range(const HyperOp& op, Element begin,
                                        Element end, TriplePredicate ok) {
  const std::size_t n = op.order();
  for (Element x = begin; x < end; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        TripleWitness w = triple(op, x, y, z);
        if (!ok(w.left, w.right)) {
          return w;
        }
      }
    }
  }
  return std::nullopt;
}

TripleResult scan_triples(const HyperOp& op, ScanOptions options,
                          TriplePredicate ok) {
  const std::size_t n = op.order();
  const std::size_t workers =
      std::clamp<std::size_t>(options.workers, 1, n);
  if (workers == 1) {
    auto w = scan_range(op, 0, n, ok);
    return TripleResult{!w.has_value(), w};
  }
  // Contiguous x-ranges; the earliest range with a failure wins.
  std::vector<std::optional<TripleWitness>> found(workers);
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::size_t k = 0; k < workers; ++k) {
    const Element begin = n * k / workers;
    const Element end = n * (k + 1) / workers;
    threads.emplace_back([&op, &found, k, begin, end, ok] {
      found[k] = scan_range(op, begin, end, ok);
    });
  }
  threads.clear();
  for (auto& w : found) {
    if (w) {
      return TripleResult{false, w};
    }
  }
  return TripleResult{};
}

}  // namespace

SubsetMask product_elements(const HyperOp& op, Element x, Element y) {
  check_index(op, x);
  check_index(op, y);
  return op.cell(x, y);
}

SubsetMask product_subsets(const HyperOp& op, SubsetMask lhs, SubsetMask rhs) {
  check_operand(op, lhs, "left");
  check_operand(op, rhs, "right");
  SubsetMask out;
  for (Element a : lhs) {
    out |= left_times(op, a, rhs);
  }
  return out;
}

TripleWitness evaluate_triple(const HyperOp& op, Element x, Element y,
                              Element z) {
  check_index(op, x);
  check_index(op, y);
  check_index(op, z);
  return triple(op, x, y, z);
}

ReproductionResult check_reproduction(const HyperOp& op) {
  const SubsetMask all = op.universe().all();
  for (Element x = 0; x < op.order(); ++x) {
    if (left_times(op, x, all) != all || right_times(op, all, x) != all) {
      return ReproductionResult{false, x};
    }
  }
  return ReproductionResult{};
}

TripleResult check_associative(const HyperOp& op, ScanOptions options) {
  return scan_triples(op, options,
                      [](SubsetMask l, SubsetMask r) { return l == r; });
}

TripleResult check_weak_associative(const HyperOp& op, ScanOptions options) {
  return scan_triples(op, options,
                      [](SubsetMask l, SubsetMask r) { return l.intersects(r); });
}

CommutativityResult check_commutative(const HyperOp& op) {
  for (Element x = 0; x < op.order(); ++x) {
    for (Element y = x + 1; y < op.order(); ++y) {
      if (op.cell(x, y) != op.cell(y, x)) {
        return CommutativityResult{false, std::pair{x, y}};
      }
    }
  }
  return CommutativityResult{};
}

ClassificationReport classify(const HyperOp& op, ScanOptions options) {
  ClassificationReport report;
  report.reproduction = check_reproduction(op);
  report.associative = check_associative(op, options);
  report.weakly_associative = check_weak_associative(op, options);
  report.commutative = check_commutative(op);
  report.class_label =
      label_for(report.reproduction.holds, report.associative.holds,
                report.weakly_associative.holds);
  return report;
}

}  // namespace hyper
