#include "strans/sst_to_2dft.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <set>

#include "strans/errors.hpp"
#include "strans/sst_analysis.hpp"

namespace strans {

namespace {

std::string set_name(const SST& m, std::uint64_t s) {
  std::string out = "{";
  bool first = true;
  for (VarId x = 0; x < m.num_variables(); ++x) {
    if (!(s >> x & 1)) continue;
    if (!first) out += ",";
    out += m.variables[x];
    first = false;
  }
  return out + "}";
}

std::uint64_t vars_of(const ItemString& text) {
  std::uint64_t s = 0;
  for (const Item& it : text)
    if (it.is_var) s |= std::uint64_t{1} << it.id;
  return s;
}

/// Output symbols before the first variable, and that variable.
std::pair<Word, std::optional<VarId>> leading(const ItemString& text) {
  Word u;
  for (const Item& it : text) {
    if (it.is_var) return {u, it.id};
    u.push_back(it.id);
  }
  return {u, std::nullopt};
}

/// Output symbols following the single occurrence of X, and the variable
/// after them (nullopt when the text ends first).
std::pair<Word, std::optional<VarId>> following(const ItemString& text, VarId x) {
  auto it = std::find(text.begin(), text.end(), Item::var(x));
  Word u;
  for (++it; it != text.end(); ++it) {
    if (it->is_var) return {u, it->id};
    u.push_back(it->id);
  }
  return {u, std::nullopt};
}

std::string unique_name(const std::vector<std::string>& taken, std::string name) {
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "'";
  return name;
}

/// Letters of A′'s output: (a, q) with the end token as column |A|.
std::vector<EnrichedSymbol> prev_symbols(const SST& m) {
  std::vector<EnrichedSymbol> out;
  for (Symbol a = 0; a <= m.input_alphabet.size(); ++a)
    for (StateId q = 0; q < m.num_states(); ++q) {
      EnrichedSymbol e;
      if (a < m.input_alphabet.size()) e.base = a;
      e.prev = q;
      out.push_back(e);
    }
  return out;
}

Alphabet alphabet_of(const SST& m, const std::vector<EnrichedSymbol>& symbols) {
  std::vector<std::string> names;
  for (const auto& e : symbols) names.push_back(enriched_name(m, e));
  return Alphabet(std::move(names));
}

struct UsefulVarsMachine {
  std::vector<std::string> states;
  std::vector<EnrichedSymbol> symbols;
  // (from, input symbol index in A′ output, output symbol index, to)
  std::vector<std::array<std::size_t, 4>> transitions;
};

UsefulVarsMachine explore_useful_vars(const SST& m) {
  if (m.num_variables() > 64) throw PreconditionFailed("more than 64 variables");
  const std::size_t n = m.num_states();
  const std::size_t end_col = m.input_alphabet.size();
  UsefulVarsMachine out;
  std::map<EnrichedSymbol, std::size_t> symbol_ids;
  auto symbol = [&](const EnrichedSymbol& e) {
    auto [it, fresh] = symbol_ids.emplace(e, out.symbols.size());
    if (fresh) out.symbols.push_back(e);
    return it->second;
  };
  std::map<std::uint64_t, std::size_t> state_ids;
  std::deque<std::uint64_t> queue;
  out.states.push_back("init");
  auto state = [&](std::uint64_t s) {
    auto [it, fresh] = state_ids.emplace(s, out.states.size());
    if (fresh) {
      out.states.push_back(set_name(m, s));
      queue.push_back(s);
    }
    return it->second;
  };
  for (StateId q = 0; q < n; ++q) {
    std::uint64_t seed = 0;
    if (m.is_final(q) && m.output[q]) seed = vars_of(*m.output[q]);
    const std::size_t sym = symbol({std::nullopt, q, 0});
    out.transitions.push_back({0, end_col * n + q, sym, state(seed)});
  }
  while (!queue.empty()) {
    const std::uint64_t s = queue.front();
    queue.pop_front();
    const std::size_t from = state_ids.at(s);
    for (Symbol a = 0; a < m.input_alphabet.size(); ++a)
      for (StateId q = 0; q < n; ++q) {
        const auto& sigma = m.update(q, a);
        if (!sigma || !m.next(q, a)) continue;
        std::uint64_t next = 0;
        for (VarId y = 0; y < m.num_variables(); ++y)
          if (s >> y & 1) next |= vars_of(sigma->images[y]);
        const std::size_t sym = symbol({a, q, s});
        out.transitions.push_back({from, a * n + q, sym, state(next)});
      }
  }
  return out;
}

void require_followable(const SST& m) {
  if (!check_k_bounded(m, 1)) throw NotOneBounded("machine is not 1-bounded");
  if (output_multiplicity(m, ftm_closure(m, 1)) > 1)
    throw NotOneBounded("the output copies some variable value more than once");
}

TwoDFT follower(const SST& m, const std::vector<EnrichedSymbol>& symbols) {
  const std::size_t l = m.num_variables();
  std::vector<std::string> names;
  for (VarId x = 0; x < l; ++x) {
    names.push_back(m.variables[x] + ".in");
    names.push_back(m.variables[x] + ".out");
  }
  const auto p0 = static_cast<StateId>(names.size());
  names.push_back(unique_name(names, "p0"));
  const auto f = static_cast<StateId>(names.size());
  names.push_back(unique_name(names, "f"));
  auto in = [](VarId x) { return static_cast<StateId>(2 * x); };
  auto out = [](VarId x) { return static_cast<StateId>(2 * x + 1); };

  TwoDFT b(alphabet_of(m, symbols), m.output_alphabet, names, p0, {f});
  b.set_transition(p0, kBeginMarker, {{}, p0, Move::Right});
  for (VarId x = 0; x < l; ++x) b.set_transition(in(x), kBeginMarker, {{}, out(x), Move::Right});

  for (Symbol c = 0; c < symbols.size(); ++c) {
    const EnrichedSymbol& e = symbols[c];
    const StateId q = e.prev;
    if (!e.base) {
      if (!m.is_final(q) || !m.output[q]) continue;
      const ItemString& F = *m.output[q];
      auto [u, first] = leading(F);
      b.set_transition(p0, c, first ? TwoWayTransition{u, in(*first), Move::Left}
                                    : TwoWayTransition{u, f, Move::Right});
      for (VarId x = 0; x < l; ++x) {
        if (count_var(F, x) != 1) continue;
        auto [v, next] = following(F, x);
        b.set_transition(out(x), c, next ? TwoWayTransition{v, in(*next), Move::Left}
                                         : TwoWayTransition{v, f, Move::Right});
      }
      continue;
    }
    b.set_transition(p0, c, {{}, p0, Move::Right});
    const auto& sigma = m.update(q, *e.base);
    if (!sigma || !m.next(q, *e.base)) continue;
    for (VarId x = 0; x < l; ++x) {
      auto [u, first] = leading(sigma->images[x]);
      b.set_transition(in(x), c, first ? TwoWayTransition{u, in(*first), Move::Left}
                                       : TwoWayTransition{u, out(x), Move::Right});
    }
    for (VarId x = 0; x < l; ++x) {
      std::optional<VarId> owner;
      bool ambiguous = false;
      for (VarId y = 0; y < l; ++y) {
        if (e.useful && !(*e.useful >> y & 1)) continue;
        const std::size_t occ = count_var(sigma->images[y], x);
        if (occ == 0) continue;
        if (owner || occ > 1) ambiguous = true;
        owner = y;
      }
      // No owner: X is dead here. Ambiguous owners never occur on inputs
      // produced by the enrichers for a followable machine.
      if (!owner || ambiguous) continue;
      auto [v, next] = following(sigma->images[*owner], x);
      b.set_transition(out(x), c, next ? TwoWayTransition{v, in(*next), Move::Left}
                                       : TwoWayTransition{v, out(*owner), Move::Right});
    }
  }
  return b;
}

}  // namespace

std::string enriched_name(const SST& m, const EnrichedSymbol& e) {
  std::string out = "(";
  out += e.base ? m.input_alphabet.name(*e.base) : std::string(kEndToken);
  out += "," + m.states[e.prev];
  if (e.useful) out += "," + set_name(m, *e.useful);
  return out + ")";
}

SequentialTransducer build_prev_enricher(const SST& m) {
  auto in_names = m.input_alphabet.names();
  in_names.emplace_back(kEndToken);
  auto states = m.states;
  const auto f = static_cast<StateId>(states.size());
  states.push_back(unique_name(m.states, "f"));
  const auto symbols = prev_symbols(m);
  SequentialTransducer a(Direction::LeftToRight, Alphabet(in_names), alphabet_of(m, symbols),
                         states, m.initial);
  const std::size_t n = m.num_states();
  const auto end = static_cast<Symbol>(m.input_alphabet.size());
  for (StateId q = 0; q < n; ++q) {
    for (Symbol s = 0; s < end; ++s)
      if (const auto& next = m.next(q, s))
        a.set_transition(q, s, {*next, static_cast<Symbol>(s * n + q)});
    a.set_transition(q, end, {f, static_cast<Symbol>(end * n + q)});
  }
  return a;
}

SequentialTransducer build_useful_vars_enricher(const SST& m) {
  const auto explored = explore_useful_vars(m);
  SequentialTransducer a(Direction::RightToLeft, alphabet_of(m, prev_symbols(m)),
                         alphabet_of(m, explored.symbols), explored.states, 0);
  for (const auto& [from, read, write, to] : explored.transitions)
    a.set_transition(static_cast<StateId>(from), static_cast<Symbol>(read),
                     {static_cast<StateId>(to), static_cast<Symbol>(write)});
  return a;
}

TwoDFT build_output_follower(const SST& m) {
  require_followable(m);
  return follower(m, explore_useful_vars(m).symbols);
}

TwoDFT build_output_follower_copyless(const SST& m) {
  if (!check_copyless(m)) throw NotCopyless("machine is not copyless");
  require_followable(m);
  return follower(m, prev_symbols(m));
}

Pipeline sst_to_2dft(const SST& m, bool skip_useful_vars) {
  std::vector<Stage> stages;
  if (skip_useful_vars) {
    TwoDFT b = build_output_follower_copyless(m);
    stages.emplace_back(build_prev_enricher(m));
    stages.emplace_back(std::move(b));
  } else {
    TwoDFT b = build_output_follower(m);
    stages.emplace_back(build_prev_enricher(m));
    stages.emplace_back(build_useful_vars_enricher(m));
    stages.emplace_back(std::move(b));
  }
  return Pipeline(std::move(stages), std::string(kEndToken));
}

std::optional<OutputStructure> build_output_structure(const SST& m, const Word& w) {
  using Node = OutputStructure::Node;
  using Tag = OutputStructure::Tag;
  std::vector<StateId> run{m.initial};
  for (Symbol a : w) {
    const auto& next = m.next(run.back(), a);
    if (!next || !m.update(run.back(), a)) return std::nullopt;
    run.push_back(*next);
  }
  const std::size_t n = w.size();
  const StateId last = run.back();
  if (!m.is_final(last) || !m.output[last]) return std::nullopt;

  std::vector<OutputStructure::Edge> edges;
  const Node start{0, 0, Tag::Start};
  const Node end{0, n + 1, Tag::End};
  auto link_after = [&](const ItemString& text, std::size_t j, const Node& terminal) {
    std::vector<std::size_t> positions;
    for (std::size_t i = 0; i < text.size(); ++i)
      if (text[i].is_var) positions.push_back(i);
    for (std::size_t k = 0; k < positions.size(); ++k) {
      const VarId x = text[positions[k]].id;
      const std::size_t stop = k + 1 < positions.size() ? positions[k + 1] : text.size();
      Word u;
      for (std::size_t i = positions[k] + 1; i < stop; ++i) u.push_back(text[i].id);
      const Node to = k + 1 < positions.size() ? Node{text[stop].id, j - 1, Tag::In} : terminal;
      edges.push_back({Node{x, j, Tag::Out}, u, to});
    }
  };

  for (VarId x = 0; x < m.num_variables(); ++x)
    edges.push_back({Node{x, 0, Tag::In}, {}, Node{x, 1, Tag::Out}});
  for (std::size_t j = 1; j <= n; ++j) {
    const Substitution& sigma = *m.update(run[j - 1], w[j - 1]);
    for (VarId x = 0; x < m.num_variables(); ++x) {
      const auto& img = sigma.images[x];
      auto [u, first] = leading(img);
      edges.push_back({Node{x, j, Tag::In}, u,
                       first ? Node{*first, j - 1, Tag::In} : Node{x, j + 1, Tag::Out}});
      link_after(img, j, Node{x, j + 1, Tag::Out});
    }
  }
  const ItemString& F = *m.output[last];
  auto [u, first] = leading(F);
  edges.push_back({start, u, first ? Node{*first, n, Tag::In} : end});
  link_after(F, n + 1, end);

  std::map<Node, std::vector<std::size_t>> succ, pred;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    succ[edges[i].from].push_back(i);
    pred[edges[i].to].push_back(i);
  }
  auto closure = [&](const Node& root, auto& adj, bool forward) {
    std::set<Node> seen{root};
    std::deque<Node> queue{root};
    while (!queue.empty()) {
      Node v = queue.front();
      queue.pop_front();
      for (std::size_t i : adj[v]) {
        const Node& next = forward ? edges[i].to : edges[i].from;
        if (seen.insert(next).second) queue.push_back(next);
      }
    }
    return seen;
  };
  const auto reach = closure(start, succ, true);
  const auto coreach = closure(end, pred, false);

  OutputStructure s;
  Node at = start;
  s.nodes.push_back(at);
  for (std::size_t steps = 0; !(at == end); ++steps) {
    if (steps > edges.size()) throw InvariantViolation("output structure contains a cycle");
    std::optional<std::size_t> chosen;
    for (std::size_t i : succ[at]) {
      const Node& to = edges[i].to;
      if (!reach.contains(to) || !coreach.contains(to)) continue;
      if (chosen) throw InvariantViolation("output structure path is not unique");
      chosen = i;
    }
    if (!chosen) throw InvariantViolation("output structure path is broken");
    const auto& e = edges[*chosen];
    s.edges.push_back(e);
    s.output.insert(s.output.end(), e.label.begin(), e.label.end());
    at = e.to;
    s.nodes.push_back(at);
  }
  return s;
}

}  // namespace strans
