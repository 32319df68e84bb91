#pragma once

#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "hyper/hyperop.hpp"
#include "hyper/table_io.hpp"

namespace fixtures {

inline std::string path(const std::string& name) {
  return std::string(HYPER_FIXTURE_DIR) + "/" + name;
}

inline std::string read(const std::string& name) {
  std::ifstream in(path(name), std::ios::binary);
  if (!in) {
    throw std::runtime_error("missing fixture " + name);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline hyper::HyperOp load(const std::string& name) {
  return hyper::parse_table(read(name));
}

// The chain-reaction table over Ao Bo A2 B2 AB.
inline hyper::HyperOp ab_table() { return load("ab_table.hop"); }
// Hydrogen/iodine table with the misprints corrected.
inline hyper::HyperOp hi_table() { return load("hi_table.hop"); }
// Hydrogen/iodine table exactly as printed.
inline hyper::HyperOp hi_table_printed() { return load("hi_table_printed.hop"); }

// Subset of op's universe from symbol names.
inline hyper::SubsetMask set_of(const hyper::HyperOp& op,
                                std::initializer_list<const char*> names) {
  hyper::SubsetMask out;
  for (const char* n : names) {
    auto e = op.universe().find(n);
    if (!e) {
      throw std::runtime_error(std::string("no element ") + n);
    }
    out |= hyper::SubsetMask::singleton(*e);
  }
  return out;
}

inline hyper::Element elem(const hyper::HyperOp& op, const char* name) {
  return *op.universe().find(name);
}

inline hyper::HyperOp from_cells(std::size_t n,
                                 std::vector<hyper::SubsetMask> cells) {
  return hyper::HyperOp(hyper::numbered_universe(n), std::move(cells));
}

// Uniform random table; when reactant_containing, cell (x, y) includes x, y.
inline hyper::HyperOp random_table(std::mt19937_64& rng, std::size_t n,
                                   bool reactant_containing = false) {
  std::uniform_int_distribution<std::uint64_t> digit(1, (1ULL << n) - 1);
  std::vector<hyper::SubsetMask> cells(n * n);
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      hyper::SubsetMask c(digit(rng));
      if (reactant_containing) {
        c |= hyper::SubsetMask{x, y};
      }
      cells[x * n + y] = c;
    }
  }
  return from_cells(n, std::move(cells));
}

// Random table biased towards associativity: cell (x, y) = {f(x, y)} for a
// random binary operation, widened to bigger cells occasionally. Plain
// uniform tables are almost never associative, which would make the
// implication checks vacuous.
inline hyper::HyperOp random_structured_table(std::mt19937_64& rng,
                                              std::size_t n) {
  std::uniform_int_distribution<int> coin(0, 3);
  std::vector<hyper::SubsetMask> cells(n * n);
  switch (coin(rng)) {
    case 0:  // cyclic group
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          cells[x * n + y] = hyper::SubsetMask::singleton((x + y) % n);
        }
      }
      break;
    case 1:  // left-zero semigroup
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          cells[x * n + y] = hyper::SubsetMask::singleton(x);
        }
      }
      break;
    case 2:  // x . y = {max(x, y), ..., n-1}
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          const std::size_t lo = std::max(x, y);
          cells[x * n + y] = hyper::SubsetMask(
              hyper::SubsetMask::full(n).bits() & ~((1ULL << lo) - 1));
        }
      }
      break;
    default:
      return random_table(rng, n);
  }
  return from_cells(n, std::move(cells));
}

}  // namespace fixtures
