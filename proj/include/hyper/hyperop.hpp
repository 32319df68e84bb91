#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hyper/subset_mask.hpp"

namespace hyper {

// The carrier set: an ordered list of distinct element names. Names are
// non-empty and drawn from [A-Za-z0-9_] so they survive every output format.
class Universe {
 public:
  explicit Universe(std::vector<std::string> symbols);

  std::size_t size() const noexcept { return symbols_.size(); }
  const std::string& symbol(Element e) const { return symbols_.at(e); }
  const std::vector<std::string>& symbols() const noexcept { return symbols_; }
  std::optional<Element> find(std::string_view symbol) const;
  SubsetMask all() const noexcept { return SubsetMask::full(size()); }

  // "{Ao, A2}" style rendering of a subset.
  std::string format(SubsetMask set) const;

  friend bool operator==(const Universe&, const Universe&) = default;

 private:
  std::vector<std::string> symbols_;
};

bool is_valid_symbol(std::string_view symbol) noexcept;

// Indices 0..n-1 named "0", "1", ...; used for anonymous tables.
Universe numbered_universe(std::size_t n);

// A hyperoperation: an n x n table whose cells are non-empty subsets of the
// universe. Immutable once built.
class HyperOp {
 public:
  // cells are row-major, cells[i * n + j] = i . j. Throws UsageError if a
  // cell is empty or references an element outside the universe.
  HyperOp(Universe universe, std::vector<SubsetMask> cells);

  static HyperOp total(Universe universe);

  const Universe& universe() const noexcept { return universe_; }
  std::size_t order() const noexcept { return universe_.size(); }
  SubsetMask cell(Element x, Element y) const noexcept {
    return cells_[x * order() + y];
  }
  std::span<const SubsetMask> cells() const noexcept { return cells_; }

  // Same universe and cell-for-cell equality.
  friend bool operator==(const HyperOp&, const HyperOp&) = default;

 private:
  Universe universe_;
  std::vector<SubsetMask> cells_;
};

// Both bracketings of x . y . z.
struct TripleWitness {
  Element x = 0;
  Element y = 0;
  Element z = 0;
  SubsetMask left;   // (x . y) . z
  SubsetMask right;  // x . (y . z)

  friend bool operator==(const TripleWitness&, const TripleWitness&) = default;
};

struct ReproductionResult {
  bool holds = true;
  std::optional<Element> failing;
};

struct TripleResult {
  bool holds = true;
  std::optional<TripleWitness> witness;
};

struct CommutativityResult {
  bool holds = true;
  std::optional<std::pair<Element, Element>> failing;
};

enum class ClassLabel {
  hypergroupoid,
  semihypergroup,
  quasihypergroup,
  hypergroup,
  hv_group_only,
};

inline constexpr ClassLabel kAllLabels[] = {
    ClassLabel::hypergroupoid, ClassLabel::semihypergroup,
    ClassLabel::quasihypergroup, ClassLabel::hypergroup,
    ClassLabel::hv_group_only};

std::string_view to_string(ClassLabel label) noexcept;

// Label from the three axiom outcomes. Every hypergroup is also an
// H_v-group; hv_group_only marks the ones that are not fully associative.
ClassLabel label_for(bool reproduction, bool associative,
                     bool weakly_associative) noexcept;

constexpr bool is_hv_group(ClassLabel label) noexcept {
  return label == ClassLabel::hypergroup || label == ClassLabel::hv_group_only;
}

struct ClassificationReport {
  ReproductionResult reproduction;
  TripleResult associative;
  TripleResult weakly_associative;
  CommutativityResult commutative;
  ClassLabel class_label = ClassLabel::hypergroupoid;
};

// Options for the O(n^3) triple scans. The scan is split by x across
// `workers` threads; the reported witness is always the first failing triple
// in lexicographic (x, y, z) order.
struct ScanOptions {
  unsigned workers = 1;
};

SubsetMask product_elements(const HyperOp& op, Element x, Element y);

// Union of a . b over a in lhs, b in rhs. Both operands must be non-empty.
SubsetMask product_subsets(const HyperOp& op, SubsetMask lhs, SubsetMask rhs);

// Both sides of the associativity equation for one triple.
TripleWitness evaluate_triple(const HyperOp& op, Element x, Element y,
                              Element z);

ReproductionResult check_reproduction(const HyperOp& op);
TripleResult check_associative(const HyperOp& op, ScanOptions options = {});
TripleResult check_weak_associative(const HyperOp& op,
                                    ScanOptions options = {});
CommutativityResult check_commutative(const HyperOp& op);

ClassificationReport classify(const HyperOp& op, ScanOptions options = {});

}  // namespace hyper
