#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>

namespace hyper {

using Element = std::size_t;

inline constexpr std::size_t kMaxOrder = 64;

// A subset of {0, ..., n-1} stored as one machine word. The universe size is
// not carried; callers keep bits below n.
class SubsetMask {
 public:
  constexpr SubsetMask() noexcept = default;
  constexpr explicit SubsetMask(std::uint64_t bits) noexcept : bits_(bits) {}
  constexpr SubsetMask(std::initializer_list<Element> elements) noexcept {
    for (Element e : elements) {
      bits_ |= std::uint64_t{1} << e;
    }
  }

  static constexpr SubsetMask singleton(Element e) noexcept {
    return SubsetMask(std::uint64_t{1} << e);
  }

  // {0, ..., n-1}
  static constexpr SubsetMask full(std::size_t n) noexcept {
    return SubsetMask(n >= 64 ? ~std::uint64_t{0}
                              : (std::uint64_t{1} << n) - 1);
  }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  constexpr bool empty() const noexcept { return bits_ == 0; }
  constexpr std::size_t size() const noexcept {
    return static_cast<std::size_t>(std::popcount(bits_));
  }
  constexpr bool contains(Element e) const noexcept {
    return e < 64 && ((bits_ >> e) & 1U) != 0;
  }
  constexpr bool subset_of(SubsetMask other) const noexcept {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr bool intersects(SubsetMask other) const noexcept {
    return (bits_ & other.bits_) != 0;
  }
  // Index of the highest member plus one; 0 for the empty set.
  constexpr std::size_t span() const noexcept {
    return 64 - static_cast<std::size_t>(std::countl_zero(bits_));
  }

  constexpr SubsetMask& operator|=(SubsetMask o) noexcept {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr SubsetMask& operator&=(SubsetMask o) noexcept {
    bits_ &= o.bits_;
    return *this;
  }
  friend constexpr SubsetMask operator|(SubsetMask a, SubsetMask b) noexcept {
    return a |= b;
  }
  friend constexpr SubsetMask operator&(SubsetMask a, SubsetMask b) noexcept {
    return a &= b;
  }
  friend constexpr bool operator==(SubsetMask, SubsetMask) noexcept = default;
  friend constexpr auto operator<=>(SubsetMask, SubsetMask) noexcept = default;

  // Forward iteration over members in ascending index order.
  class iterator {
   public:
    using value_type = Element;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() noexcept = default;
    constexpr explicit iterator(std::uint64_t rest) noexcept : rest_(rest) {}
    constexpr Element operator*() const noexcept {
      return static_cast<Element>(std::countr_zero(rest_));
    }
    constexpr iterator& operator++() noexcept {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) noexcept {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend constexpr bool operator==(iterator, iterator) noexcept = default;

   private:
    std::uint64_t rest_ = 0;
  };

  constexpr iterator begin() const noexcept { return iterator(bits_); }
  constexpr iterator end() const noexcept { return iterator(0); }

 private:
  std::uint64_t bits_ = 0;
};

}  // namespace hyper
