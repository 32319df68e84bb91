#include "hyper/morphisms.hpp"

#include <algorithm>
#include <functional>

#include "hyper/error.hpp"

namespace hyper {

Relabeling::Relabeling(std::vector<Element> image) : image_(std::move(image)) {
  std::vector<bool> hit(image_.size(), false);
  for (Element e : image_) {
    if (e >= image_.size() || hit[e]) {
      throw UsageError("relabeling is not a permutation of 0.." +
                       std::to_string(image_.size()) + "-1");
    }
    hit[e] = true;
  }
}

Relabeling Relabeling::identity(std::size_t n) {
  std::vector<Element> image(n);
  for (std::size_t i = 0; i < n; ++i) {
    image[i] = i;
  }
  return Relabeling(std::move(image));
}

SubsetMask Relabeling::apply(SubsetMask s) const {
  SubsetMask out;
  for (Element e : s) {
    out |= SubsetMask::singleton(image_.at(e));
  }
  return out;
}

Relabeling Relabeling::inverse() const {
  std::vector<Element> inv(image_.size());
  for (std::size_t i = 0; i < image_.size(); ++i) {
    inv[image_[i]] = i;
  }
  return Relabeling(std::move(inv));
}

Relabeling Relabeling::after(const Relabeling& first) const {
  if (first.size() != size()) {
    throw UsageError("cannot compose relabelings of different sizes");
  }
  std::vector<Element> out(size());
  for (std::size_t i = 0; i < size(); ++i) {
    out[i] = image_[first.image_[i]];
  }
  return Relabeling(std::move(out));
}

HyperOp apply_relabeling(const HyperOp& op, const Relabeling& r,
                         Universe target_universe) {
  const std::size_t n = op.order();
  if (r.size() != n || target_universe.size() != n) {
    throw UsageError("relabeling size mismatch: table has " +
                     std::to_string(n) + " elements, relabeling " +
                     std::to_string(r.size()) + ", target universe " +
                     std::to_string(target_universe.size()));
  }
  std::vector<SubsetMask> cells(n * n);
  for (Element i = 0; i < n; ++i) {
    for (Element j = 0; j < n; ++j) {
      cells[r(i) * n + r(j)] = r.apply(op.cell(i, j));
    }
  }
  return HyperOp(std::move(target_universe), std::move(cells));
}

InvariantSignature invariant_signature(const HyperOp& op) {
  const std::size_t n = op.order();
  InvariantSignature sig;
  sig.cell_cardinalities.reserve(n * n);
  for (SubsetMask c : op.cells()) {
    sig.cell_cardinalities.push_back(c.size());
  }
  std::sort(sig.cell_cardinalities.begin(), sig.cell_cardinalities.end());
  sig.profiles.resize(n);
  for (Element x = 0; x < n; ++x) {
    ElementProfile& p = sig.profiles[x];
    p.diagonal = op.cell(x, x).size();
    for (Element y = 0; y < n; ++y) {
      p.row_sizes.push_back(op.cell(x, y).size());
      p.column_sizes.push_back(op.cell(y, x).size());
    }
    std::sort(p.row_sizes.begin(), p.row_sizes.end());
    std::sort(p.column_sizes.begin(), p.column_sizes.end());
  }
  sig.sorted_profiles = sig.profiles;
  std::sort(sig.sorted_profiles.begin(), sig.sorted_profiles.end());
  return sig;
}

namespace {

// Backtracking over partial maps source -> target, assigning source elements
// in index order and trying targets in ascending order, so solutions come out
// lexicographically.
class IsomorphismSearch {
 public:
  IsomorphismSearch(const HyperOp& a, const HyperOp& b)
      : a_(a),
        b_(b),
        n_(a.order()),
        sig_a_(invariant_signature(a)),
        sig_b_(invariant_signature(b)),
        image_(n_, 0),
        used_(n_, false) {}

  bool compatible() const {
    return a_.order() == b_.order() && sig_a_ == sig_b_;
  }

  // Calls visit for each complete mapping until it returns false.
  void run(const std::function<bool(const Relabeling&)>& visit) {
    if (!compatible()) {
      return;
    }
    visit_ = &visit;
    extend(0);
  }

 private:
  bool extend(Element k) {
    if (k == n_) {
      return (*visit_)(Relabeling(image_));
    }
    for (Element t = 0; t < n_; ++t) {
      if (used_[t] || sig_a_.profiles[k] != sig_b_.profiles[t]) {
        continue;
      }
      image_[k] = t;
      used_[t] = true;
      if (consistent(k) && !extend(k + 1)) {
        return false;
      }
      used_[t] = false;
    }
    return true;
  }

  // Checks every cell among elements 0..k against the images assigned so
  // far: cardinalities match and membership of assigned elements agrees.
  bool consistent(Element k) const {
    for (Element i = 0; i <= k; ++i) {
      if (!cell_matches(i, k, k) || !cell_matches(k, i, k)) {
        return false;
      }
    }
    // The new element may occur in cells between earlier elements.
    for (Element i = 0; i < k; ++i) {
      for (Element j = 0; j < k; ++j) {
        if (a_.cell(i, j).contains(k) !=
            b_.cell(image_[i], image_[j]).contains(image_[k])) {
          return false;
        }
      }
    }
    return true;
  }

  bool cell_matches(Element i, Element j, Element k) const {
    const SubsetMask src = a_.cell(i, j);
    const SubsetMask dst = b_.cell(image_[i], image_[j]);
    if (src.size() != dst.size()) {
      return false;
    }
    for (Element u = 0; u <= k; ++u) {
      if (src.contains(u) != dst.contains(image_[u])) {
        return false;
      }
    }
    return true;
  }

  const HyperOp& a_;
  const HyperOp& b_;
  std::size_t n_;
  InvariantSignature sig_a_;
  InvariantSignature sig_b_;
  std::vector<Element> image_;
  std::vector<bool> used_;
  const std::function<bool(const Relabeling&)>* visit_ = nullptr;
};

}  // namespace

std::optional<Relabeling> find_isomorphism(const HyperOp& a,
                                           const HyperOp& b) {
  std::optional<Relabeling> found;
  IsomorphismSearch search(a, b);
  search.run([&found](const Relabeling& r) {
    found = r;
    return false;
  });
  return found;
}

std::vector<Relabeling> automorphisms(const HyperOp& op) {
  if (op.order() > kMaxAutomorphismOrder) {
    throw UsageError("automorphism search is limited to order 10, got " +
                     std::to_string(op.order()));
  }
  std::vector<Relabeling> out;
  IsomorphismSearch search(op, op);
  search.run([&out](const Relabeling& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

}  // namespace hyper
