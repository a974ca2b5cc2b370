#include "strans/behaviors.hpp"

#include <algorithm>

namespace strans {

Relation Relation::identity(std::size_t size) {
  Relation r(size);
  for (StateId p = 0; p < size; ++p) r.set(p, p);
  return r;
}

bool Relation::empty() const {
  return std::none_of(bits.begin(), bits.end(), [](std::uint8_t b) { return b != 0; });
}

std::vector<std::pair<StateId, StateId>> Relation::pairs() const {
  std::vector<std::pair<StateId, StateId>> out;
  for (StateId p = 0; p < n; ++p)
    for (StateId q = 0; q < n; ++q)
      if (has(p, q)) out.emplace_back(p, q);
  return out;
}

Relation then(const Relation& r, const Relation& s) {
  Relation out(r.n);
  for (StateId p = 0; p < r.n; ++p)
    for (StateId q = 0; q < r.n; ++q)
      if (r.has(p, q))
        for (StateId t = 0; t < r.n; ++t)
          if (s.has(q, t)) out.set(p, t);
  return out;
}

Relation unite(const Relation& r, const Relation& s) {
  Relation out = r;
  for (std::size_t i = 0; i < out.bits.size(); ++i) out.bits[i] |= s.bits[i];
  return out;
}

Relation star(const Relation& r) {
  Relation out = unite(Relation::identity(r.n), r);
  // Warshall
  for (StateId k = 0; k < r.n; ++k)
    for (StateId p = 0; p < r.n; ++p)
      if (out.has(p, k))
        for (StateId q = 0; q < r.n; ++q)
          if (out.has(k, q)) out.set(p, q);
  return out;
}

BehaviorQuadruple empty_behavior(std::size_t states) {
  return {Relation(states), Relation::identity(states), Relation::identity(states),
          Relation(states)};
}

BehaviorQuadruple letter_behavior(const TwoDFT& machine, Letter a) {
  const std::size_t n = machine.num_states();
  BehaviorQuadruple b{Relation(n), Relation(n), Relation(n), Relation(n)};
  for (StateId p = 0; p < n; ++p) {
    StateId q = p;
    for (std::size_t steps = 0; steps <= n; ++steps) {
      const auto& t = machine.transition(q, a);
      if (!t) break;
      if (t->move == Move::Right) {
        b.lr.set(p, t->target);
        b.rr.set(p, t->target);
        break;
      }
      if (t->move == Move::Left) {
        b.ll.set(p, t->target);
        b.rl.set(p, t->target);
        break;
      }
      q = t->target;
    }
  }
  return b;
}

BehaviorQuadruple compose_behaviors(const BehaviorQuadruple& bu, const BehaviorQuadruple& bv) {
  const Relation loop_v = star(then(bv.ll, bu.rr));
  const Relation loop_u = star(then(bu.rr, bv.ll));
  BehaviorQuadruple out;
  out.lr = then(then(bu.lr, loop_v), bv.lr);
  out.ll = unite(bu.ll, then(then(then(bu.lr, loop_v), bv.ll), bu.rl));
  out.rr = unite(bv.rr, then(then(then(bv.rl, loop_u), bu.rr), bv.lr));
  out.rl = then(then(bv.rl, loop_u), bu.rl);
  return out;
}

BehaviorQuadruple word_behavior(const TwoDFT& machine, const Word& w) {
  BehaviorQuadruple b = empty_behavior(machine.num_states());
  for (Symbol a : w) b = compose_behaviors(b, letter_behavior(machine, a));
  return b;
}

MonoidClosure<BehaviorQuadruple> transition_monoid_2dft(const TwoDFT& machine,
                                                        std::size_t element_cap) {
  std::vector<BehaviorQuadruple> gens;
  for (Symbol a = 0; a < machine.input_alphabet.size(); ++a)
    gens.push_back(letter_behavior(machine, a));
  return generate_closure<BehaviorQuadruple>(gens, compose_behaviors,
                                             empty_behavior(machine.num_states()), element_cap);
}

StateMap compose_state_maps(const StateMap& u, const StateMap& v) {
  StateMap out(u.size(), -1);
  for (std::size_t q = 0; q < u.size(); ++q)
    if (u[q] >= 0) out[q] = v[static_cast<std::size_t>(u[q])];
  return out;
}

MonoidClosure<StateMap> transition_monoid_sequential(const SequentialTransducer& machine,
                                                     std::size_t element_cap) {
  const std::size_t n = machine.num_states();
  StateMap id(n);
  for (std::size_t q = 0; q < n; ++q) id[q] = static_cast<std::int32_t>(q);
  std::vector<StateMap> gens;
  for (Symbol a = 0; a < machine.input_alphabet.size(); ++a) {
    StateMap g(n, -1);
    for (StateId q = 0; q < n; ++q)
      if (const auto& t = machine.transition(q, a)) g[q] = static_cast<std::int32_t>(t->target);
    gens.push_back(std::move(g));
  }
  return generate_closure<StateMap>(gens, compose_state_maps, id, element_cap);
}

}  // namespace strans
