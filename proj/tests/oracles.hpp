#pragma once

// Independent reference implementations used by the tests. Nothing here
// calls into the code under test except for plain data accessors.

#include <algorithm>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "strans/behaviors.hpp"
#include "strans/sst.hpp"
#include "strans/twodft.hpp"

namespace oracle {

using namespace strans;

// f(a^{k0} b a^{k1} b … b a^{kn}) = a^{k0} b^{k0} … a^{kn} b^{kn}, on plain text.
inline std::string block_double(const std::string& w) {
  std::string out;
  std::size_t run = 0;
  auto flush = [&] {
    out += std::string(run, 'a') + std::string(run, 'b');
    run = 0;
  };
  for (char c : w) {
    if (c == 'a')
      ++run;
    else
      flush();
  }
  flush();
  return out;
}

inline std::string text(const Word& w) {
  std::string s;
  for (Symbol x : w) s += static_cast<char>('a' + x);
  return s;
}

// Result of running a two-way machine on a bare segment u (no endmarkers).
struct Exit {
  bool right = false;
  StateId state = 0;
  Word output;
};

// Enters u at its first (from_left) or last letter in state p and runs
// until the head leaves the segment.
inline std::optional<Exit> run_segment(const TwoDFT& m, const std::vector<Letter>& u, StateId p,
                                       bool from_left) {
  const long long n = static_cast<long long>(u.size());
  long long pos = from_left ? 0 : n - 1;
  StateId q = p;
  Exit e;
  const std::size_t bound = m.num_states() * u.size() + 1;
  for (std::size_t step = 0; step <= bound; ++step) {
    const auto& t = m.transition(q, u[static_cast<std::size_t>(pos)]);
    if (!t) return std::nullopt;
    e.output.insert(e.output.end(), t->output.begin(), t->output.end());
    q = t->target;
    pos += static_cast<int>(t->move);
    if (pos < 0 || pos >= n) {
      e.right = pos >= n;
      e.state = q;
      return e;
    }
  }
  return std::nullopt;
}

inline BehaviorQuadruple measured_behavior(const TwoDFT& m, const std::vector<Letter>& u) {
  const std::size_t n = m.num_states();
  BehaviorQuadruple b{Relation(n), Relation(n), Relation(n), Relation(n)};
  if (u.empty()) {
    b.lr = Relation::identity(n);
    b.rl = Relation::identity(n);
    return b;
  }
  for (StateId p = 0; p < n; ++p) {
    if (auto e = run_segment(m, u, p, true)) (e->right ? b.lr : b.ll).set(p, e->state);
    if (auto e = run_segment(m, u, p, false)) (e->right ? b.rr : b.rl).set(p, e->state);
  }
  return b;
}

// Right-to-right run over ⊢w entered at the last cell (⊢ itself when w = ε).
inline std::optional<Exit> right_to_right(const TwoDFT& m, const Word& w, StateId p) {
  std::vector<Letter> tape{kBeginMarker};
  tape.insert(tape.end(), w.begin(), w.end());
  auto e = run_segment(m, tape, p, false);
  if (!e || !e->right) return std::nullopt;
  return e;
}

// Valuation semantics of σ1σ2: first σ1, then σ2 reads the updated values.
inline std::vector<Word> run_valuation(const std::vector<Word>& v, const Substitution& s) {
  std::vector<Word> out;
  for (const auto& img : s.images) {
    Word w;
    for (const Item& it : img) {
      if (it.is_var)
        w.insert(w.end(), v[it.id].begin(), v[it.id].end());
      else
        w.push_back(it.id);
    }
    out.push_back(std::move(w));
  }
  return out;
}

// Occurrences of variable x in σ_r(y) for the run of w, by symbolic
// expansion of the images as plain occurrence lists.
inline std::optional<std::pair<StateId, std::vector<std::vector<VarId>>>> run_variables(
    const SST& m, StateId from, const Word& w) {
  std::vector<std::vector<VarId>> sigma(m.num_variables());
  for (VarId y = 0; y < m.num_variables(); ++y) sigma[y] = {y};
  StateId q = from;
  for (Symbol a : w) {
    const auto& next = m.next(q, a);
    const auto& step = m.update(q, a);
    if (!next || !step) return std::nullopt;
    std::vector<std::vector<VarId>> fresh(m.num_variables());
    for (VarId y = 0; y < m.num_variables(); ++y)
      for (const Item& it : step->images[y])
        if (it.is_var) fresh[y].insert(fresh[y].end(), sigma[it.id].begin(), sigma[it.id].end());
    sigma = std::move(fresh);
    q = *next;
  }
  return std::make_pair(q, sigma);
}

inline Substitution random_substitution(std::mt19937_64& rng, std::size_t vars,
                                        std::size_t symbols, std::size_t max_len) {
  Substitution s = Substitution::reset(vars);
  for (auto& img : s.images) {
    const std::size_t len = rng() % (max_len + 1);
    for (std::size_t i = 0; i < len; ++i) {
      if (rng() % 2 == 0)
        img.push_back(Item::var(static_cast<VarId>(rng() % vars)));
      else
        img.push_back(Item::sym(static_cast<Symbol>(rng() % symbols)));
    }
  }
  return s;
}

// Each variable of the new valuation picks a random subset of old
// variables; with copyless = true, every old variable is used at most once.
inline Substitution random_update(std::mt19937_64& rng, std::size_t vars, bool copyless) {
  Substitution s = Substitution::reset(vars);
  std::vector<VarId> pool;
  for (VarId x = 0; x < vars; ++x) pool.push_back(x);
  std::shuffle(pool.begin(), pool.end(), rng);
  for (VarId y = 0; y < vars; ++y) {
    ItemString img;
    const std::size_t uses = rng() % 3;
    for (std::size_t i = 0; i < uses; ++i) {
      if (copyless) {
        if (pool.empty()) break;
        img.push_back(Item::var(pool.back()));
        pool.pop_back();
      } else {
        img.push_back(Item::var(static_cast<VarId>(rng() % vars)));
      }
    }
    const std::size_t letters = rng() % 2;
    for (std::size_t i = 0; i < letters; ++i)
      img.insert(img.begin() + static_cast<long>(rng() % (img.size() + 1)),
                 Item::sym(static_cast<Symbol>(rng() % 2)));
    s.images[y] = std::move(img);
  }
  return s;
}

inline SST random_sst(std::mt19937_64& rng, std::size_t max_states, std::size_t max_vars,
                      bool copyless) {
  const std::size_t n = 1 + rng() % max_states;
  const std::size_t l = 1 + rng() % max_vars;
  std::vector<std::string> states, vars;
  for (std::size_t i = 0; i < n; ++i) states.push_back("q" + std::to_string(i));
  for (std::size_t i = 0; i < l; ++i) vars.push_back(std::string(1, static_cast<char>('X' + i)));
  std::set<StateId> finals;
  for (StateId q = 0; q < n; ++q)
    if (q == 0 || rng() % 2 == 0) finals.insert(q);
  SST m(Alphabet({"a", "b"}), Alphabet({"a", "b"}), states, 0, finals, vars);
  for (StateId q = 0; q < n; ++q)
    for (Symbol a = 0; a < 2; ++a)
      if (rng() % 8 != 0)
        m.set_transition(q, a, static_cast<StateId>(rng() % n), random_update(rng, l, copyless));
  for (StateId q : finals) {
    ItemString out;
    std::vector<VarId> order;
    for (VarId x = 0; x < l; ++x)
      if (rng() % 3 != 0) order.push_back(x);
    std::shuffle(order.begin(), order.end(), rng);
    for (VarId x : order) out.push_back(Item::var(x));
    if (rng() % 2 == 0) out.push_back(Item::sym(static_cast<Symbol>(rng() % 2)));
    m.output[q] = out;
  }
  return m;
}

// Random partial 2DFT over {a,b}; ⊢-outputs and move-0 steps included.
inline TwoDFT random_2dft(std::mt19937_64& rng, std::size_t max_states) {
  const std::size_t n = 1 + rng() % max_states;
  std::vector<std::string> states;
  for (std::size_t i = 0; i < n; ++i) states.push_back(std::to_string(i + 1));
  std::set<StateId> finals{static_cast<StateId>(rng() % n)};
  TwoDFT m(Alphabet({"a", "b"}), Alphabet({"a", "b"}), states, 0, finals);
  const std::vector<Letter> letters{0, 1, kBeginMarker, kEndMarker};
  for (StateId q = 0; q < n; ++q)
    for (Letter x : letters) {
      if (rng() % 6 == 0) continue;
      int move = static_cast<int>(rng() % 3) - 1;
      if (x == kBeginMarker && move < 0) move = 1;
      if (x == kEndMarker && move > 0) move = -1;
      Word out;
      const std::size_t len = rng() % 3;
      for (std::size_t i = 0; i < len; ++i) out.push_back(static_cast<Symbol>(rng() % 2));
      m.set_transition(q, x, {out, static_cast<StateId>(rng() % n), static_cast<Move>(move)});
    }
  return m;
}

}  // namespace oracle
