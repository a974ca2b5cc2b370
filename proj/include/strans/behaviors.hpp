#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "strans/monoid.hpp"
#include "strans/sequential.hpp"
#include "strans/twodft.hpp"

namespace strans {

/// Binary relation on {0..n-1} as a dense boolean matrix.
struct Relation {
  std::size_t n = 0;
  std::vector<std::uint8_t> bits;

  Relation() = default;
  explicit Relation(std::size_t size) : n(size), bits(size * size) {}
  static Relation identity(std::size_t size);

  bool has(StateId p, StateId q) const { return bits[p * n + q] != 0; }
  void set(StateId p, StateId q) { bits[p * n + q] = 1; }
  bool empty() const;
  std::vector<std::pair<StateId, StateId>> pairs() const;

  auto operator<=>(const Relation&) const = default;
};

/// r;s = {(p,r) | ∃q. (p,q) ∈ r ∧ (q,r) ∈ s}
Relation then(const Relation& r, const Relation& s);
Relation unite(const Relation& r, const Relation& s);
/// Reflexive-transitive closure.
Relation star(const Relation& r);

/// How a run can enter and leave a word: ll enters on the first letter and
/// exits on the left, lr exits on the right; rl and rr enter on the last
/// letter. Pairs are (entry state, exit state).
struct BehaviorQuadruple {
  Relation ll, lr, rl, rr;

  auto operator<=>(const BehaviorQuadruple&) const = default;
};

BehaviorQuadruple empty_behavior(std::size_t states);

/// Behavior of one letter; endmarkers are accepted and treated as ordinary
/// letters. Move-0 chains are followed inside the cell.
BehaviorQuadruple letter_behavior(const TwoDFT& machine, Letter a);

/// Behavior of uv from those of u and v.
BehaviorQuadruple compose_behaviors(const BehaviorQuadruple& bu, const BehaviorQuadruple& bv);

BehaviorQuadruple word_behavior(const TwoDFT& machine, const Word& w);

/// A^*/∼_T generated by the letters of the input alphabet.
MonoidClosure<BehaviorQuadruple> transition_monoid_2dft(
    const TwoDFT& machine, std::size_t element_cap = kDefaultElementCap);

/// State map of a word in a one-way machine: entry q holds the state reached
/// from q, or -1 when the run dies. Composition is left to right.
using StateMap = std::vector<std::int32_t>;

StateMap compose_state_maps(const StateMap& u, const StateMap& v);

/// Transition monoid of the underlying DFA of a relabeler. For right-to-left
/// machines letters act in reading order, so the monoid is that of the
/// reversed language; aperiodicity is unaffected.
MonoidClosure<StateMap> transition_monoid_sequential(
    const SequentialTransducer& machine, std::size_t element_cap = kDefaultElementCap);

}  // namespace strans
