#include "hyper/chemgen.hpp"

#include <algorithm>
#include <cctype>

#include "hyper/error.hpp"

namespace hyper::chem {

Species Species::radical(Atom a) { return Species({a, a}, 1); }

Species Species::molecule(Atom a, Atom b) {
  return Species({std::min(a, b), std::max(a, b)}, 2);
}

std::array<std::size_t, 2> Species::atom_tally() const noexcept {
  std::array<std::size_t, 2> tally{0, 0};
  for (std::size_t i = 0; i < atom_count_; ++i) {
    ++tally[static_cast<std::size_t>(atoms_[i])];
  }
  return tally;
}

std::string_view to_string(ChannelKind kind) noexcept {
  switch (kind) {
    case ChannelKind::recombination:
      return "recombination";
    case ChannelKind::abstraction_exchange:
      return "abstraction_exchange";
    case ChannelKind::collision_homolysis:
      return "collision_homolysis";
    case ChannelKind::metathesis:
      return "metathesis";
  }
  return "recombination";
}

namespace {

std::array<std::size_t, 2> tally(std::span<const Species> side) {
  std::array<std::size_t, 2> total{0, 0};
  for (const Species& s : side) {
    const auto t = s.atom_tally();
    total[0] += t[0];
    total[1] += t[1];
  }
  return total;
}

std::vector<Species> sorted(std::vector<Species> v) {
  std::sort(v.begin(), v.end());
  return v;
}

void recombination(const Species& r1, const Species& r2,
                   std::vector<ReactionChannel>& out) {
  out.push_back({ChannelKind::recombination,
                 {r1, r2},
                 {Species::molecule(r1.atom(0), r2.atom(0))}});
}

// The radical bonds to one atom of the molecule and frees the other.
void abstraction(const Species& radical, const Species& molecule,
                 std::vector<ReactionChannel>& out) {
  // Homonuclear molecules give the same channel for either atom.
  const std::size_t choices = molecule.atom(0) == molecule.atom(1) ? 1 : 2;
  for (std::size_t taken = 0; taken < choices; ++taken) {
    out.push_back({ChannelKind::abstraction_exchange,
                   {radical, molecule},
                   {Species::molecule(radical.atom(0), molecule.atom(taken)),
                    Species::radical(molecule.atom(1 - taken))}});
  }
}

// The collision partner supplies the energy to split both molecules.
void homolysis(const Species& m1, const Species& m2,
               std::vector<ReactionChannel>& out) {
  out.push_back({ChannelKind::collision_homolysis,
                 {m1, m2},
                 {Species::radical(m1.atom(0)), Species::radical(m1.atom(1)),
                  Species::radical(m2.atom(0)), Species::radical(m2.atom(1))}});
}

// Re-pairs the four atoms; only pairings that yield a species not already
// among the reactants count.
void metathesis(const Species& m1, const Species& m2,
                std::vector<ReactionChannel>& out) {
  const std::array<Atom, 4> atoms = {m1.atom(0), m1.atom(1), m2.atom(0),
                                     m2.atom(1)};
  const auto reactants = sorted({m1, m2});
  std::vector<std::vector<Species>> seen;
  // Partner of atom 0 is atom p; the remaining two form the other molecule.
  for (std::size_t p = 1; p < 4; ++p) {
    std::array<std::size_t, 2> rest{};
    std::size_t r = 0;
    for (std::size_t i = 1; i < 4; ++i) {
      if (i != p) {
        rest[r++] = i;
      }
    }
    auto products =
        sorted({Species::molecule(atoms[0], atoms[p]),
                Species::molecule(atoms[rest[0]], atoms[rest[1]])});
    const bool novel = std::any_of(
        products.begin(), products.end(), [&](const Species& s) {
          return std::find(reactants.begin(), reactants.end(), s) ==
                 reactants.end();
        });
    if (!novel || std::find(seen.begin(), seen.end(), products) != seen.end()) {
      continue;
    }
    seen.push_back(products);
    out.push_back({ChannelKind::metathesis, {m1, m2}, std::move(products)});
  }
}

std::string canonical_halogen(std::string_view name) {
  for (std::string_view h : kHalogens) {
    if (h.size() == name.size() &&
        std::equal(h.begin(), h.end(), name.begin(), [](char a, char b) {
          return std::tolower(static_cast<unsigned char>(a)) ==
                 std::tolower(static_cast<unsigned char>(b));
        })) {
      return std::string(h);
    }
  }
  throw UsageError("unknown halogen '" + std::string(name) +
                   "' (valid: F, Cl, Br, I)");
}

}  // namespace

bool ReactionChannel::atom_balanced() const {
  return tally(reactants) == tally(products);
}

SpeciesModel::SpeciesModel(AtomKind first, AtomKind second)
    : kinds_{std::move(first), std::move(second)},
      species_{Species::radical(Atom::first), Species::radical(Atom::second),
               Species::molecule(Atom::first, Atom::first),
               Species::molecule(Atom::second, Atom::second),
               Species::molecule(Atom::first, Atom::second)} {
  for (const AtomKind& k : kinds_) {
    if (!is_valid_symbol(k.name)) {
      throw UsageError("invalid atom kind name '" + k.name +
                       "' (allowed characters: A-Z a-z 0-9 _)");
    }
  }
  if (kinds_[0] == kinds_[1]) {
    throw UsageError("atom kinds must be distinct, got '" + kinds_[0].name +
                     "' twice");
  }
  // Rejects models whose derived names collide, e.g. kinds "A" and "A2".
  (void)universe();
}

std::string SpeciesModel::symbol(const Species& s) const {
  const std::string& a = kinds_[static_cast<std::size_t>(s.atom(0))].name;
  if (s.is_radical()) {
    return a + "o";
  }
  const std::string& b = kinds_[static_cast<std::size_t>(s.atom(1))].name;
  return a == b ? a + "2" : a + b;
}

Element SpeciesModel::index_of(const Species& s) const {
  auto it = std::find(species_.begin(), species_.end(), s);
  if (it == species_.end()) {
    throw UsageError("species is not part of the model");
  }
  return static_cast<Element>(it - species_.begin());
}

Universe SpeciesModel::universe() const {
  std::vector<std::string> symbols;
  for (const Species& s : species_) {
    symbols.push_back(symbol(s));
  }
  return Universe(std::move(symbols));
}

SpeciesModel enumerate_species(const AtomKind& first, const AtomKind& second) {
  return SpeciesModel(first, second);
}

std::vector<ReactionChannel> channels(const Species& x, const Species& y) {
  std::vector<ReactionChannel> out;
  if (x.is_radical() && y.is_radical()) {
    recombination(x, y, out);
  } else if (x.is_radical()) {
    abstraction(x, y, out);
  } else if (y.is_radical()) {
    abstraction(y, x, out);
  } else {
    homolysis(x, y, out);
    metathesis(x, y, out);
  }
  return out;
}

SubsetMask collide(const SpeciesModel& model, const Species& x,
                   const Species& y) {
  SubsetMask out = SubsetMask::singleton(model.index_of(x)) |
                   SubsetMask::singleton(model.index_of(y));
  for (const ReactionChannel& ch : channels(x, y)) {
    for (const Species& p : ch.products) {
      out |= SubsetMask::singleton(model.index_of(p));
    }
  }
  return out;
}

HyperOp generate_table(const SpeciesModel& model) {
  const auto& species = model.species();
  std::vector<SubsetMask> cells;
  cells.reserve(species.size() * species.size());
  for (const Species& x : species) {
    for (const Species& y : species) {
      cells.push_back(collide(model, x, y));
    }
  }
  return HyperOp(model.universe(), std::move(cells));
}

SpeciesModel halogen_preset(std::string_view halogen_name) {
  return SpeciesModel(AtomKind{"H"}, AtomKind{canonical_halogen(halogen_name)});
}

}  // namespace hyper::chem
