#include <doctest.h>

#include "oracles.hpp"
#include "strans/behaviors.hpp"
#include "strans/corpus.hpp"

using namespace strans;

namespace {

using Pairs = std::vector<std::pair<StateId, StateId>>;

// States 1, 2, 3 of the fig2 machine are ids 0, 1, 2.
Pairs pairs(std::initializer_list<std::pair<int, int>> l) {
  Pairs out;
  for (auto [p, q] : l) out.emplace_back(p - 1, q - 1);
  return out;
}

TwoDFT erase_outputs(TwoDFT t) {
  for (auto& cell : t.delta)
    if (cell) cell->output.clear();
  return t;
}

std::vector<Letter> letters(const Word& w) { return {w.begin(), w.end()}; }

}  // namespace

TEST_CASE("letter behaviors of fig2") {
  const TwoDFT t = corpus::fig2_2dft();
  const auto a = letter_behavior(t, 0);
  CHECK(a.lr.pairs() == pairs({{1, 1}, {3, 3}}));
  CHECK(a.rr.pairs() == pairs({{1, 1}, {3, 3}}));
  CHECK(a.ll.pairs() == pairs({{2, 2}}));
  CHECK(a.rl.pairs() == pairs({{2, 2}}));

  const auto b = letter_behavior(t, 1);
  CHECK(b.lr.pairs() == pairs({{2, 3}, {3, 1}}));
  CHECK(b.rr.pairs() == pairs({{2, 3}, {3, 1}}));
  CHECK(b.ll.pairs() == pairs({{1, 2}}));
  CHECK(b.rl.pairs() == pairs({{1, 2}}));
}

TEST_CASE("move-0 self-loop gives the empty behavior") {
  TwoDFT t(Alphabet({"a"}), Alphabet({"a"}), {"q"}, 0, {0});
  t.add("q", "a", "", "q", 0);
  const auto b = letter_behavior(t, 0);
  CHECK(b.ll.empty());
  CHECK(b.lr.empty());
  CHECK(b.rl.empty());
  CHECK(b.rr.empty());
}

TEST_CASE("aa behavior of fig2") {
  const TwoDFT t = corpus::fig2_2dft();
  const auto a = letter_behavior(t, 0);
  const auto aa = compose_behaviors(a, a);
  CHECK(aa.lr.pairs() == pairs({{1, 1}, {3, 3}}));
  CHECK(aa.ll.pairs() == pairs({{2, 2}}));
  CHECK(aa.rl.pairs() == pairs({{2, 2}}));
  CHECK(aa.rr.pairs() == pairs({{1, 1}, {3, 3}}));
}

TEST_CASE("empty behavior is a two-sided identity and composition is associative") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const TwoDFT t = oracle::random_2dft(rng, 4);
    const auto e = empty_behavior(t.num_states());
    std::vector<BehaviorQuadruple> bs{letter_behavior(t, 0), letter_behavior(t, 1)};
    for (const auto& b : bs) {
      CHECK(compose_behaviors(e, b) == b);
      CHECK(compose_behaviors(b, e) == b);
    }
    for (const auto& x : bs)
      for (const auto& y : bs)
        for (const auto& z : bs)
          CHECK(compose_behaviors(compose_behaviors(x, y), z) ==
                compose_behaviors(x, compose_behaviors(y, z)));
  }
}

TEST_CASE("folded behaviors match direct run simulation") {
  const TwoDFT fig2 = corpus::fig2_2dft();
  for (const Word& w : all_words(2, 5)) CHECK(word_behavior(fig2, w) == oracle::measured_behavior(fig2, letters(w)));

  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 30; ++trial) {
    const TwoDFT t = oracle::random_2dft(rng, 4);
    for (const Word& w : all_words(2, 4)) CHECK(word_behavior(t, w) == oracle::measured_behavior(t, letters(w)));
  }
}

TEST_CASE("transition monoids") {
  const auto fig2 = transition_monoid_2dft(corpus::fig2_2dft());
  CHECK(aperiodicity_index(fig2).has_value());

  const auto right = transition_monoid_2dft(corpus::right_mover_2dft());
  CHECK(right.size() <= 2);
  CHECK(aperiodicity_index(right).has_value());

  CHECK_FALSE(aperiodicity_index(transition_monoid_2dft(corpus::swap_2dft())));
}

TEST_CASE("transition monoid does not depend on outputs") {
  for (const TwoDFT& t : {corpus::fig2_2dft(), corpus::reverse_2dft(), corpus::swap_2dft()}) {
    const auto m = transition_monoid_2dft(t);
    const auto e = transition_monoid_2dft(erase_outputs(t));
    CHECK(m.elements() == e.elements());
  }
}

TEST_CASE("sequential transition monoids") {
  CHECK(transition_monoid_sequential(corpus::identity_relabeler()).size() == 1);
  const auto parity = transition_monoid_sequential(corpus::parity_relabeler());
  CHECK(parity.size() == 2);
  CHECK_FALSE(aperiodicity_index(parity));
}
