#include "strans/twodft_to_sst.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <map>
#include <set>

#include "strans/errors.hpp"

namespace strans {

namespace {

bool canonical_less(StateSet a, StateSet b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  // Lexicographic on sorted member lists: the first differing member wins
  // for the set that holds the smaller one.
  const StateSet diff = a ^ b;
  if (diff == 0) return false;
  const StateSet lowest = diff & (~diff + 1);
  return (a & lowest) != 0;
}

std::string set_name(StateSet s, const TwoDFT& m) {
  std::string out = "{";
  bool first = true;
  for (StateId q = 0; q < m.num_states(); ++q) {
    if (!(s >> q & 1)) continue;
    if (!first) out += ",";
    out += m.states[q];
    first = false;
  }
  return out + "}";
}

struct BeginChain {
  StateId target;
  Word output;
};

/// Follows move-0 transitions on ⊢ until the head leaves it.
std::optional<BeginChain> resolve_begin(const TwoDFT& m, StateId p) {
  std::set<StateId> seen;
  Word out;
  StateId q = p;
  while (seen.insert(q).second) {
    const auto& t = m.transition(q, kBeginMarker);
    if (!t || t->move == Move::Left) return std::nullopt;
    out.insert(out.end(), t->output.begin(), t->output.end());
    if (t->move == Move::Right) return BeginChain{t->target, out};
    q = t->target;
  }
  return std::nullopt;
}

std::string unique_name(const std::vector<std::string>& taken, std::string name) {
  while (std::find(taken.begin(), taken.end(), name) != taken.end()) name += "'";
  return name;
}

}  // namespace

TwoDFT normalize_2dft(const TwoDFT& m) {
  const bool begin_silent = [&] {
    for (StateId q = 0; q < m.num_states(); ++q)
      if (const auto& t = m.transition(q, kBeginMarker); t && !t->output.empty()) return false;
    return true;
  }();
  if (m.start_side == StartSide::Right && begin_silent) return m;

  const std::size_t n = m.num_states();
  std::vector<std::string> names = m.states;
  std::map<std::pair<StateId, Word>, StateId> annotated;
  std::vector<std::optional<TwoWayTransition>> begin(n);
  auto annotate = [&](StateId q, const Word& v) {
    auto [it, fresh] = annotated.emplace(std::make_pair(q, v), 0);
    if (fresh) {
      it->second = static_cast<StateId>(names.size());
      names.push_back(unique_name(names, "<" + m.states[q] + "|" +
                                             format_word(m.output_alphabet, v) + ">"));
    }
    return it->second;
  };
  for (StateId p = 0; p < n; ++p) {
    const auto& t = m.transition(p, kBeginMarker);
    if (!t) continue;
    const auto chain = resolve_begin(m, p);
    if (!chain) continue;
    if (chain->output.empty())
      begin[p] = *t;
    else
      begin[p] = TwoWayTransition{{}, annotate(chain->target, chain->output), Move::Right};
  }
  std::optional<StateId> rewind;
  if (m.start_side == StartSide::Left) {
    rewind = static_cast<StateId>(names.size());
    names.push_back(unique_name(names, "rewind"));
  }

  TwoDFT out(m.input_alphabet, m.output_alphabet, names, rewind ? *rewind : m.initial, m.finals,
             StartSide::Right);
  for (StateId p = 0; p < n; ++p) {
    for (Symbol a = 0; a < m.input_alphabet.size(); ++a)
      if (const auto& t = m.transition(p, a)) out.set_transition(p, a, *t);
    if (const auto& t = m.transition(p, kEndMarker)) out.set_transition(p, kEndMarker, *t);
    if (begin[p]) out.set_transition(p, kBeginMarker, *begin[p]);
  }
  for (const auto& [key, id] : annotated) {
    const auto& [q, v] = key;
    auto prefixed = [&v](TwoWayTransition t) {
      t.output.insert(t.output.begin(), v.begin(), v.end());
      return t;
    };
    for (Symbol a = 0; a < m.input_alphabet.size(); ++a)
      if (const auto& t = m.transition(q, a)) out.set_transition(id, a, prefixed(*t));
    if (m.is_final(q))
      out.set_transition(id, kEndMarker, TwoWayTransition{v, q, Move::Stay});
    else if (const auto& t = m.transition(q, kEndMarker))
      out.set_transition(id, kEndMarker, prefixed(*t));
  }
  if (rewind) {
    for (Symbol a = 0; a < m.input_alphabet.size(); ++a)
      out.set_transition(*rewind, a, {{}, *rewind, Move::Left});
    out.set_transition(*rewind, kEndMarker, {{}, *rewind, Move::Left});
    if (begin[m.initial]) out.set_transition(*rewind, kBeginMarker, *begin[m.initial]);
  }
  return out;
}

std::optional<std::size_t> smallest_vertex(const SstState& s, StateId q) {
  std::optional<std::size_t> best;
  for (std::size_t v = 0; v < s.vertices.size(); ++v)
    if ((s.vertices[v] >> q & 1) &&
        (!best || std::popcount(s.vertices[v]) < std::popcount(s.vertices[*best])))
      best = v;
  return best;
}

std::optional<std::size_t> parent_vertex(const SstState& s, std::size_t v) {
  std::optional<std::size_t> best;
  const StateSet me = s.vertices[v];
  for (std::size_t u = 0; u < s.vertices.size(); ++u) {
    const StateSet other = s.vertices[u];
    if (other == me || (other & me) != me) continue;
    if (!best || std::popcount(other) < std::popcount(s.vertices[*best])) best = u;
  }
  return best;
}

ItemString label_path(const SstState& s, std::size_t v) {
  ItemString out;
  for (std::optional<std::size_t> at = v; at; at = parent_vertex(s, *at))
    out.push_back(Item::var(static_cast<VarId>(*at)));
  return out;
}

void check_forest(const SstState& s) {
  if (s.phi.size() != s.vertices.size()) throw InvariantViolation("phi is not aligned");
  for (std::size_t i = 0; i < s.vertices.size(); ++i) {
    if (s.vertices[i] == 0) throw InvariantViolation("empty forest vertex");
    if (i > 0 && !canonical_less(s.vertices[i - 1], s.vertices[i]))
      throw InvariantViolation("forest vertices are not in canonical order");
    for (std::size_t j = i + 1; j < s.vertices.size(); ++j) {
      const StateSet a = s.vertices[i], b = s.vertices[j];
      const StateSet both = a & b;
      if (both != 0 && both != a && both != b)
        throw InvariantViolation("forest vertices overlap without nesting");
      if (both != 0 && s.phi[i] != s.phi[j])
        throw InvariantViolation("phi differs inside one tree");
    }
  }
  std::set<StateId> targets;
  for (std::size_t v = 0; v < s.vertices.size(); ++v)
    if (!parent_vertex(s, v) && !targets.insert(s.phi[v]).second)
      throw InvariantViolation("phi is not injective on roots");
}

StepResult forest_step(const SstState& s, Letter letter, const TwoDFT& m, StateSet tracked,
                       std::size_t pool) {
  const std::size_t nv = s.vertices.size();
  const std::size_t n = m.num_states();
  const std::size_t in0 = nv, out0 = nv + n, total = nv + 2 * n;
  constexpr std::int64_t kDead = -1, kTerminal = -2;

  // Phase one and two: the unique successor of every node.
  std::vector<std::int64_t> succ(total, kTerminal);
  std::vector<Word> label(total);
  for (std::size_t v = 0; v < nv; ++v) {
    const auto parent = parent_vertex(s, v);
    succ[v] = parent ? static_cast<std::int64_t>(*parent)
                     : static_cast<std::int64_t>(in0 + s.phi[v]);
  }
  for (StateId p = 0; p < n; ++p) {
    const auto& t = m.transition(p, letter);
    if (!t) {
      succ[in0 + p] = kDead;
      continue;
    }
    label[in0 + p] = t->output;
    switch (t->move) {
      case Move::Right: succ[in0 + p] = static_cast<std::int64_t>(out0 + t->target); break;
      case Move::Stay: succ[in0 + p] = static_cast<std::int64_t>(in0 + t->target); break;
      case Move::Left: {
        const auto v = smallest_vertex(s, t->target);
        succ[in0 + p] = v ? static_cast<std::int64_t>(*v) : kDead;
        break;
      }
    }
  }

  // Phase three: out(s) and in(s).
  std::vector<std::optional<StateId>> out(total);
  for (std::size_t v = 0; v < total; ++v) {
    std::int64_t at = static_cast<std::int64_t>(v);
    for (std::size_t steps = 0; steps <= total; ++steps) {
      if (succ[at] == kTerminal) {
        if (static_cast<std::size_t>(at) >= out0) out[v] = static_cast<StateId>(at - out0);
        break;
      }
      if (succ[at] == kDead) break;
      at = succ[at];
    }
  }
  std::vector<StateSet> in(total, 0);
  auto walk = [&](StateId p, auto&& visit) {
    std::vector<bool> seen(total);
    for (std::int64_t at = static_cast<std::int64_t>(in0 + p); at >= 0 && !seen[at];
         at = succ[at]) {
      seen[at] = true;
      visit(static_cast<std::size_t>(at));
    }
  };
  for (StateId p = 0; p < n; ++p)
    if (tracked >> p & 1) walk(p, [&](std::size_t v) { in[v] |= StateSet{1} << p; });

  std::set<StateSet> fresh;
  for (std::size_t v = 0; v < total; ++v)
    if (out[v] && in[v] != 0) fresh.insert(in[v]);
  std::vector<StateSet> vertices(fresh.begin(), fresh.end());
  std::sort(vertices.begin(), vertices.end(), canonical_less);
  if (vertices.size() > pool) throw InvariantViolation("merge forest outgrew the variable pool");

  StepResult r;
  r.next.vertices = vertices;
  r.update = Substitution::reset(pool);
  for (std::size_t j = 0; j < vertices.size(); ++j) {
    const StateSet t = vertices[j];
    const auto p = static_cast<StateId>(std::countr_zero(t));
    ItemString mu;
    std::optional<StateId> target;
    walk(p, [&](std::size_t v) {
      if (in[v] != t || !out[v]) return;
      target = out[v];
      if (v < nv) mu.push_back(Item::var(static_cast<VarId>(v)));
      for (Symbol b : label[v]) mu.push_back(Item::sym(b));
    });
    r.next.phi.push_back(*target);
    r.update.images[j] = std::move(mu);
  }
  check_forest(r.next);
  if (!is_copyless(r.update)) throw InvariantViolation("forest step produced a copying update");
  return r;
}

std::string forest_name(const SstState& s, const TwoDFT& m) {
  std::string out = "[";
  for (std::size_t v = 0; v < s.vertices.size(); ++v) {
    if (v) out += " ";
    out += set_name(s.vertices[v], m) + ":" + m.states[s.phi[v]];
  }
  return out + "]";
}

CopylessConversion twodft_to_copyless_sst_detailed(const TwoDFT& machine) {
  CopylessConversion c;
  c.normalized = normalize_2dft(machine);
  const TwoDFT& m = c.normalized;
  const std::size_t n = m.num_states();
  if (n > 64) throw PreconditionFailed("more than 64 states after normalization");
  for (std::size_t cell = 0; cell < m.delta.size(); ++cell)
    if (const auto& t = m.delta[cell]; t && t->move == Move::Left)
      c.tracked |= StateSet{1} << t->target;
  const std::size_t pool = std::max(1, 2 * std::popcount(c.tracked) - 1);

  // (2n)^{2n}, saturating.
  long double bound = 1;
  for (std::size_t i = 0; i < 2 * n; ++i) bound *= 2.0L * static_cast<long double>(n);

  std::map<SstState, StateId> ids;
  std::deque<SstState> queue;
  auto intern = [&](const SstState& st) {
    auto [it, fresh] = ids.emplace(st, static_cast<StateId>(c.states.size()));
    if (fresh) {
      if (static_cast<long double>(c.states.size() + 1) > bound)
        throw StateCapExceeded("more than (2n)^(2n) merge-forest states");
      c.states.push_back(st);
      queue.push_back(st);
      c.max_vertices = std::max(c.max_vertices, st.vertices.size());
    }
    return it->second;
  };
  const StepResult first = forest_step({}, kBeginMarker, m, c.tracked, pool);
  for (const auto& img : first.update.images)
    if (!img.empty()) throw InvariantViolation("left endmarker produced output");
  intern(first.next);

  struct Edge {
    StateId from;
    Symbol a;
    StateId to;
    Substitution sigma;
  };
  std::vector<Edge> edges;
  while (!queue.empty()) {
    const SstState st = queue.front();
    queue.pop_front();
    const StateId from = ids.at(st);
    for (Symbol a = 0; a < m.input_alphabet.size(); ++a) {
      StepResult r = forest_step(st, a, m, c.tracked, pool);
      const StateId to = intern(r.next);
      edges.push_back({from, a, to, std::move(r.update)});
    }
  }

  // Trim the pool to the variables actually used.
  const std::size_t vars = c.max_vertices;
  std::vector<std::string> var_names;
  for (std::size_t j = 0; j < vars; ++j) var_names.push_back("X" + std::to_string(j + 1));
  std::vector<std::string> state_names;
  for (const auto& st : c.states) state_names.push_back(forest_name(st, m));
  c.sst = SST(m.input_alphabet, m.output_alphabet, state_names, 0, {}, var_names);
  for (auto& e : edges) {
    e.sigma.images.resize(vars);
    c.sst.set_transition(e.from, e.a, e.to, std::move(e.sigma));
  }

  // Output: iterate the run of the initial state parked on ⊣.
  for (StateId id = 0; id < c.states.size(); ++id) {
    const SstState& st = c.states[id];
    ItemString expr;
    std::set<StateId> seen;
    StateId q = m.initial;
    bool accepted = false;
    while (seen.insert(q).second) {
      if (m.is_final(q)) {
        accepted = true;
        break;
      }
      const auto& t = m.transition(q, kEndMarker);
      if (!t) break;
      for (Symbol b : t->output) expr.push_back(Item::sym(b));
      if (t->move == Move::Stay) {
        q = t->target;
        continue;
      }
      const auto v = smallest_vertex(st, t->target);
      if (!v) break;
      const ItemString path = label_path(st, *v);
      expr.insert(expr.end(), path.begin(), path.end());
      q = st.phi[*v];
    }
    if (!accepted) continue;
    c.sst.finals.insert(id);
    c.sst.output[id] = std::move(expr);
  }
  return c;
}

SST twodft_to_copyless_sst(const TwoDFT& machine) {
  return twodft_to_copyless_sst_detailed(machine).sst;
}

}  // namespace strans
