#include "hyper/substructures.hpp"

#include "hyper/error.hpp"

namespace hyper {

namespace {

bool closed_at(const HyperOp& op, Element a, SubsetMask k) {
  SubsetMask left;
  SubsetMask right;
  for (Element b : k) {
    left |= op.cell(a, b);
    right |= op.cell(b, a);
  }
  return left == k && right == k;
}

ClosureResult closure(const HyperOp& op, SubsetMask k) {
  for (Element a : k) {
    if (!closed_at(op, a, k)) {
      return ClosureResult{false, a};
    }
  }
  return ClosureResult{};
}

}  // namespace

ClosureResult is_closed_substructure(const HyperOp& op, SubsetMask k) {
  if (k.empty()) {
    throw UsageError("substructure candidate must be non-empty");
  }
  if (!k.subset_of(op.universe().all())) {
    throw UsageError(
        "substructure candidate references an element outside the universe");
  }
  return closure(op, k);
}

std::vector<SubstructureRecord> enumerate_substructures(const HyperOp& op) {
  const std::size_t n = op.order();
  if (n > kMaxSubstructureScanOrder) {
    throw UsageError("substructure enumeration scans 2^n - 1 subsets; order " +
                     std::to_string(n) + " exceeds the limit of 20");
  }
  const SubsetMask all = op.universe().all();
  std::vector<SubstructureRecord> out;
  for (std::uint64_t bits = 1; bits <= all.bits(); ++bits) {
    const SubsetMask k(bits);
    if (closure(op, k).holds) {
      out.push_back(SubstructureRecord{k, k != all, k == all});
    }
  }
  return out;
}

HyperOp restrict(const HyperOp& op, SubsetMask k) {
  const ClosureResult closed = is_closed_substructure(op, k);
  if (!closed.holds) {
    throw UsageError("cannot restrict to " + op.universe().format(k) +
                     ": not closed at element " +
                     op.universe().symbol(*closed.failing));
  }
  // old index -> new index
  std::vector<Element> position(op.order(), 0);
  std::vector<std::string> symbols;
  for (Element e : k) {
    position[e] = symbols.size();
    symbols.push_back(op.universe().symbol(e));
  }
  std::vector<SubsetMask> cells;
  cells.reserve(symbols.size() * symbols.size());
  for (Element a : k) {
    for (Element b : k) {
      SubsetMask image;
      for (Element u : op.cell(a, b)) {
        image |= SubsetMask::singleton(position[u]);
      }
      cells.push_back(image);
    }
  }
  return HyperOp(Universe(std::move(symbols)), std::move(cells));
}

}  // namespace hyper
