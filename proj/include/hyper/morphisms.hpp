#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hyper/hyperop.hpp"

namespace hyper {

// A bijection on element indices, image[i] = r(i).
class Relabeling {
 public:
  // Throws UsageError unless image is a permutation of 0..n-1.
  explicit Relabeling(std::vector<Element> image);

  static Relabeling identity(std::size_t n);

  std::size_t size() const noexcept { return image_.size(); }
  Element operator()(Element i) const { return image_.at(i); }
  const std::vector<Element>& image() const noexcept { return image_; }

  SubsetMask apply(SubsetMask s) const;
  Relabeling inverse() const;
  // (this o first)(i) = this(first(i))
  Relabeling after(const Relabeling& first) const;

  friend bool operator==(const Relabeling&, const Relabeling&) = default;
  friend auto operator<=>(const Relabeling&, const Relabeling&) = default;

 private:
  std::vector<Element> image_;
};

struct ElementProfile {
  std::size_t diagonal = 0;             // |x . x|
  std::vector<std::size_t> row_sizes;   // sorted |x . y| over y
  std::vector<std::size_t> column_sizes;  // sorted |y . x| over y

  friend bool operator==(const ElementProfile&,
                         const ElementProfile&) = default;
  friend auto operator<=>(const ElementProfile&,
                          const ElementProfile&) = default;
};

// Relabeling-invariant summary used to prune isomorphism search.
struct InvariantSignature {
  std::vector<std::size_t> cell_cardinalities;  // sorted over all n^2 cells
  std::vector<ElementProfile> profiles;         // indexed by element
  std::vector<ElementProfile> sorted_profiles;  // multiset of the above

  // Compares only the relabeling-invariant parts.
  friend bool operator==(const InvariantSignature& a,
                         const InvariantSignature& b) {
    return a.cell_cardinalities == b.cell_cardinalities &&
           a.sorted_profiles == b.sorted_profiles;
  }
};

// op'.cell(r(i), r(j)) = r(op.cell(i, j)) over target_universe.
HyperOp apply_relabeling(const HyperOp& op, const Relabeling& r,
                         Universe target_universe);

InvariantSignature invariant_signature(const HyperOp& op);

// Lexicographically least r with apply_relabeling(a, r) == b cell-for-cell
// (element names are ignored).
std::optional<Relabeling> find_isomorphism(const HyperOp& a, const HyperOp& b);

inline constexpr std::size_t kMaxAutomorphismOrder = 10;

// Every automorphism in lexicographic order; order capped at 10.
std::vector<Relabeling> automorphisms(const HyperOp& op);

}  // namespace hyper
