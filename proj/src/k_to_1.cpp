#include "strans/k_to_1.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <tuple>

#include "strans/errors.hpp"

namespace strans {

OneBoundedConversion k_to_1_detailed(const SST& machine, Coefficient k,
                                     std::size_t element_cap) {
  if (!check_k_bounded(machine, k, element_cap))
    throw NotBounded("machine is not " + std::to_string(k) + "-bounded");
  const auto ftm = ftm_closure(machine, k, element_cap);
  const std::size_t size = ftm.size();
  const std::size_t l = machine.num_variables();
  const std::size_t n = machine.num_states();

  // Canonical element order: rank[i] is the position of element i.
  std::vector<std::uint32_t> by_rank(size);
  std::iota(by_rank.begin(), by_rank.end(), 0);
  std::sort(by_rank.begin(), by_rank.end(),
            [&](std::uint32_t a, std::uint32_t b) { return ftm.element(a) < ftm.element(b); });
  std::vector<std::uint32_t> rank(size);
  for (std::uint32_t r = 0; r < size; ++r) rank[by_rank[r]] = r;

  auto final_state = [&](StateId q) { return machine.is_final(q) && machine.output[q]; };
  std::vector<Coefficient> useful(n * size * l, 0);
  for (StateId q = 0; q < n; ++q)
    for (std::size_t m = 0; m < size; ++m) {
      if (ftm.element(m).target[q] < 0) continue;
      for (VarId x = 0; x < l; ++x)
        useful[(q * size + m) * l + x] = useful_count(machine, ftm.element(m), q, x);
    }
  auto uses = [&](StateId q, std::size_t m, VarId x) { return useful[(q * size + m) * l + x]; };

  // Products η(a)·m, indexed like useful.
  std::vector<std::vector<std::size_t>> left(machine.input_alphabet.size());
  for (Symbol a = 0; a < left.size(); ++a)
    for (std::size_t m = 0; m < size; ++m) left[a].push_back(ftm.multiply(ftm.generator(a), m));

  using Key = std::tuple<VarId, std::uint32_t, Coefficient>;  // (X, rank of m, copy)
  std::map<Key, VarId> var_ids;
  std::vector<Key> var_keys;
  auto var = [&](VarId x, std::size_t m, Coefficient i) {
    Key key{x, rank[m], i};
    auto [it, fresh] = var_ids.emplace(key, static_cast<VarId>(var_keys.size()));
    if (fresh) var_keys.push_back(key);
    return it->second;
  };

  using LState = std::pair<StateId, std::vector<std::uint32_t>>;  // S as sorted ranks
  std::map<LState, StateId> ids;
  std::vector<LState> states;
  std::deque<LState> queue;
  auto intern = [&](LState s) {
    auto [it, fresh] = ids.emplace(s, static_cast<StateId>(states.size()));
    if (fresh) {
      states.push_back(s);
      queue.push_back(std::move(s));
    }
    return it->second;
  };
  LState start{machine.initial, {}};
  for (std::size_t m = 0; m < size; ++m) {
    const auto t = ftm.element(m).target[machine.initial];
    if (t >= 0 && final_state(static_cast<StateId>(t))) start.second.push_back(rank[m]);
  }
  std::sort(start.second.begin(), start.second.end());
  intern(start);

  struct Edge {
    StateId from;
    Symbol a;
    StateId to;
    std::vector<std::pair<VarId, ItemString>> images;
  };
  std::vector<Edge> edges;
  while (!queue.empty()) {
    const LState cur = queue.front();
    queue.pop_front();
    const auto& [q, s] = cur;
    const StateId from = ids.at(cur);
    for (Symbol a = 0; a < machine.input_alphabet.size(); ++a) {
      const auto& next = machine.next(q, a);
      const auto& sigma = machine.update(q, a);
      if (!next || !sigma) continue;
      LState succ{*next, {}};
      for (std::uint32_t r = 0; r < size; ++r)
        if (std::binary_search(s.begin(), s.end(), rank[left[a][by_rank[r]]]))
          succ.second.push_back(r);
      Edge e{from, a, 0, {}};
      for (std::uint32_t r : succ.second) {
        const std::size_t target_element = by_rank[r];
        const std::size_t source_element = left[a][target_element];
        std::vector<Coefficient> counter(l, 0);
        for (VarId x = 0; x < l; ++x)
          for (Coefficient i = 1; i <= uses(*next, target_element, x); ++i) {
            ItemString img;
            for (const Item& it : sigma->images[x]) {
              if (!it.is_var) {
                img.push_back(it);
                continue;
              }
              // Copies of Y under η(a)n were allocated by the previous step
              // exactly as often as the suffix uses them.
              const Coefficient j = ++counter[it.id];
              if (j > uses(q, source_element, it.id))
                throw CounterOverflow("copy index exceeds the useful count");
              img.push_back(Item::var(var(it.id, source_element, j)));
            }
            e.images.emplace_back(var(x, target_element, i), std::move(img));
          }
      }
      e.to = intern(std::move(succ));
      edges.push_back(std::move(e));
    }
  }

  // Output functions use the identity element.
  std::vector<std::optional<ItemString>> outputs(states.size());
  for (StateId id = 0; id < states.size(); ++id) {
    const auto& [q, s] = states[id];
    if (!final_state(q) || !std::binary_search(s.begin(), s.end(), rank[ftm.identity()]))
      continue;
    std::vector<Coefficient> counter(l, 0);
    ItemString out;
    for (const Item& it : *machine.output[q])
      out.push_back(it.is_var ? Item::var(var(it.id, ftm.identity(), ++counter[it.id])) : it);
    outputs[id] = std::move(out);
  }

  OneBoundedConversion c;
  c.monoid_size = size;
  std::vector<std::string> var_names;
  for (const auto& [x, r, i] : var_keys)
    var_names.push_back(machine.variables[x] + "_" + std::to_string(i) + "^m" + std::to_string(r));
  std::vector<std::string> state_names;
  for (const auto& [q, s] : states) {
    std::string name = machine.states[q] + "{";
    for (std::size_t i = 0; i < s.size(); ++i) name += (i ? ",m" : "m") + std::to_string(s[i]);
    state_names.push_back(name + "}");
    c.lookahead.push_back(s);
  }
  c.sst = SST(machine.input_alphabet, machine.output_alphabet, state_names, 0, {}, var_names);
  for (auto& e : edges) {
    Substitution sigma = Substitution::reset(var_names.size());
    for (auto& [x, img] : e.images) sigma.images[x] = std::move(img);
    c.sst.set_transition(e.from, e.a, e.to, std::move(sigma));
  }
  for (StateId id = 0; id < states.size(); ++id)
    if (outputs[id]) {
      c.sst.finals.insert(id);
      c.sst.output[id] = std::move(outputs[id]);
    }
  return c;
}

SST k_to_1(const SST& machine, Coefficient k, std::size_t element_cap) {
  return k_to_1_detailed(machine, k, element_cap).sst;
}

}  // namespace strans
