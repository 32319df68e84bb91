#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "hyper/hyperop.hpp"

namespace hyper::chem {

struct AtomKind {
  std::string name;

  friend bool operator==(const AtomKind&, const AtomKind&) = default;
};

// Which of the model's two kinds an atom is.
enum class Atom : std::uint8_t { first = 0, second = 1 };

// A radical (one atom) or a diatomic molecule (two atoms). Atoms are kept
// sorted so equal compositions compare equal.
class Species {
 public:
  static Species radical(Atom a);
  static Species molecule(Atom a, Atom b);

  bool is_radical() const noexcept { return atom_count_ == 1; }
  std::size_t atom_count() const noexcept { return atom_count_; }
  Atom atom(std::size_t i) const { return atoms_.at(i); }
  // Atoms of each kind, {first, second}.
  std::array<std::size_t, 2> atom_tally() const noexcept;

  friend bool operator==(const Species&, const Species&) = default;
  friend auto operator<=>(const Species&, const Species&) = default;

 private:
  Species(std::array<Atom, 2> atoms, std::uint8_t count)
      : atoms_(atoms), atom_count_(count) {}

  std::array<Atom, 2> atoms_{};
  std::uint8_t atom_count_ = 0;
};

enum class ChannelKind {
  recombination,         // radical + radical -> molecule
  abstraction_exchange,  // radical + molecule -> molecule + radical
  collision_homolysis,   // molecule + molecule -> radical fragments
  metathesis,            // molecule + molecule -> new molecule pair
};

std::string_view to_string(ChannelKind kind) noexcept;

struct ReactionChannel {
  ChannelKind kind;
  std::array<Species, 2> reactants;
  std::vector<Species> products;  // with multiplicity

  // Atoms of each kind on both sides agree.
  bool atom_balanced() const;
};

// Two atom kinds and the five species they form, in canonical order:
// first radical, second radical, first homonuclear, second homonuclear,
// heteronuclear.
class SpeciesModel {
 public:
  SpeciesModel(AtomKind first, AtomKind second);

  const std::array<AtomKind, 2>& kinds() const noexcept { return kinds_; }
  const std::array<Species, 5>& species() const noexcept { return species_; }
  // Ao / A2 / AB style names.
  std::string symbol(const Species& s) const;
  Element index_of(const Species& s) const;
  Universe universe() const;

 private:
  std::array<AtomKind, 2> kinds_;
  std::array<Species, 5> species_;
};

SpeciesModel enumerate_species(const AtomKind& first, const AtomKind& second);

// Every single-collision channel with reactants {x, y}; order-independent.
std::vector<ReactionChannel> channels(const Species& x, const Species& y);

// {x, y} plus the products of every applicable channel.
SubsetMask collide(const SpeciesModel& model, const Species& x,
                   const Species& y);

HyperOp generate_table(const SpeciesModel& model);

inline constexpr std::array<std::string_view, 4> kHalogens = {"F", "Cl", "Br",
                                                              "I"};

// Hydrogen paired with a halogen; the name is matched case-insensitively.
SpeciesModel halogen_preset(std::string_view halogen_name);

}  // namespace hyper::chem
