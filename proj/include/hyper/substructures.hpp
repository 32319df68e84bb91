#pragma once

#include <optional>
#include <vector>

#include "hyper/hyperop.hpp"

namespace hyper {

// A non-empty K with a . K = K . a = K for every a in K. The same condition
// defines subhypergroups and H_v-subgroups; which one applies follows from
// classifying the restricted table.
struct SubstructureRecord {
  SubsetMask members;
  bool is_proper = false;   // members != H
  bool is_trivial = false;  // members == H

  friend bool operator==(const SubstructureRecord&,
                         const SubstructureRecord&) = default;
};

struct ClosureResult {
  bool holds = true;
  std::optional<Element> failing;
};

inline constexpr std::size_t kMaxSubstructureScanOrder = 20;

ClosureResult is_closed_substructure(const HyperOp& op, SubsetMask k);

// All closed substructures in ascending mask order. Order capped at 20.
std::vector<SubstructureRecord> enumerate_substructures(const HyperOp& op);

// Induced table on a closed K; the universe keeps K's members in their
// original order.
HyperOp restrict(const HyperOp& op, SubsetMask k);

}  // namespace hyper
