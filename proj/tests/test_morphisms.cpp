#include <doctest.h>

#include <map>

#include "fixtures.hpp"
#include "hyper/error.hpp"
#include "hyper/morphisms.hpp"

using namespace hyper;

namespace {

// Ao->Ho, Bo->Io, A2->H2, B2->I2, AB->HI keeps positions.
const Relabeling kKindPreserving = Relabeling::identity(5);
const Relabeling kSwapKinds({1, 0, 3, 2, 4});

}  // namespace

TEST_CASE("relabeling must be a permutation") {
  CHECK_THROWS_AS(Relabeling({0, 0}), UsageError);
  CHECK_THROWS_AS(Relabeling({0, 2}), UsageError);
  const Relabeling r({2, 0, 1});
  CHECK(r.inverse().after(r) == Relabeling::identity(3));
  CHECK(r.apply(SubsetMask{0, 1}) == SubsetMask{0, 2});
}

TEST_CASE("apply_relabeling") {
  const HyperOp ab = fixtures::ab_table();
  const HyperOp hi = fixtures::hi_table();
  CHECK(apply_relabeling(ab, kKindPreserving, hi.universe()) == hi);
  CHECK(apply_relabeling(ab, Relabeling::identity(5), ab.universe()) == ab);

  const Relabeling r({3, 0, 4, 1, 2});
  const HyperOp there = apply_relabeling(ab, r, ab.universe());
  CHECK(apply_relabeling(there, r.inverse(), ab.universe()) == ab);

  CHECK_THROWS_AS(apply_relabeling(ab, Relabeling::identity(4), ab.universe()),
                  UsageError);
  CHECK_THROWS_AS(
      apply_relabeling(ab, Relabeling::identity(5), numbered_universe(4)),
      UsageError);
}

TEST_CASE("invariant signature") {
  const auto sig = invariant_signature(fixtures::ab_table());
  std::map<std::size_t, std::size_t> tally;
  for (std::size_t c : sig.cell_cardinalities) {
    ++tally[c];
  }
  // Counted from the printed table.
  CHECK(tally == std::map<std::size_t, std::size_t>{{2, 8}, {3, 2}, {4, 12},
                                                    {5, 3}});

  const auto total = invariant_signature(HyperOp::total(numbered_universe(3)));
  CHECK(total.cell_cardinalities == std::vector<std::size_t>(9, 3));

  const HyperOp a = fixtures::from_cells(2, {SubsetMask{0}, SubsetMask{1},
                                             SubsetMask{1}, SubsetMask{0}});
  const HyperOp b = HyperOp::total(numbered_universe(2));
  CHECK_FALSE(invariant_signature(a) == invariant_signature(b));
}

TEST_CASE("find_isomorphism") {
  const HyperOp ab = fixtures::ab_table();
  const HyperOp hi = fixtures::hi_table();

  // kKindPreserving and kSwapKinds both work; the identity is lex-least.
  const auto r = find_isomorphism(ab, hi);
  REQUIRE(r.has_value());
  CHECK(*r == kKindPreserving);

  CHECK(find_isomorphism(ab, ab) == Relabeling::identity(5));
  CHECK_FALSE(find_isomorphism(ab, HyperOp::total(numbered_universe(5))));
  CHECK_FALSE(find_isomorphism(ab, fixtures::hi_table_printed()));
  CHECK_FALSE(find_isomorphism(ab, HyperOp::total(numbered_universe(4))));

  const Relabeling shuffle({4, 2, 0, 1, 3});
  const HyperOp shuffled = apply_relabeling(ab, shuffle, ab.universe());
  const auto found = find_isomorphism(ab, shuffled);
  REQUIRE(found);
  CHECK(apply_relabeling(ab, *found, shuffled.universe()) == shuffled);
  // shuffle and shuffle o swap are the only candidates
  CHECK(*found == std::min(shuffle, shuffle.after(kSwapKinds)));
}

TEST_CASE("automorphisms") {
  CHECK(automorphisms(HyperOp::total(numbered_universe(3))).size() == 6);
  CHECK(automorphisms(fixtures::from_cells(1, {SubsetMask{0}})) ==
        std::vector<Relabeling>{Relabeling::identity(1)});

  // Exhaustive over the 120 permutations: only the identity and the A/B swap.
  const auto auts = automorphisms(fixtures::ab_table());
  CHECK(auts == std::vector<Relabeling>{Relabeling::identity(5), kSwapKinds});

  CHECK_THROWS_AS(automorphisms(HyperOp::total(numbered_universe(11))),
                  UsageError);
}

TEST_CASE("automorphisms form a group") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 20; ++round) {
    const HyperOp op = fixtures::random_structured_table(rng, 4);
    const auto auts = automorphisms(op);
    REQUIRE_FALSE(auts.empty());
    CHECK(auts.front() == Relabeling::identity(4));
    CHECK(std::is_sorted(auts.begin(), auts.end()));
    for (const Relabeling& a : auts) {
      CHECK(std::find(auts.begin(), auts.end(), a.inverse()) != auts.end());
      for (const Relabeling& b : auts) {
        CHECK(std::find(auts.begin(), auts.end(), a.after(b)) != auts.end());
      }
    }
  }
}
