#include <doctest.h>

#include <bit>

#include "oracles.hpp"
#include "strans/corpus.hpp"
#include "strans/equiv.hpp"
#include "strans/sst_analysis.hpp"
#include "strans/twodft_to_sst.hpp"

using namespace strans;

namespace {

constexpr StateSet bit(StateId q) { return StateSet{1} << q; }

std::size_t pool_for(StateSet tracked) {
  return static_cast<std::size_t>(std::max(1, 2 * std::popcount(tracked) - 1));
}

// Walks the forest along ⊢w and checks both induction properties against
// simulated right-to-right runs of the normalized machine.
void check_p1_p2(const TwoDFT& t, std::size_t max_len) {
  const auto conv = twodft_to_copyless_sst_detailed(t);
  const TwoDFT& m = conv.normalized;
  const std::size_t pool = pool_for(conv.tracked);
  for (const Word& w : all_words(m.input_alphabet.size(), max_len)) {
    StepResult r = forest_step({}, kBeginMarker, m, conv.tracked, pool);
    std::vector<Word> values = oracle::run_valuation(std::vector<Word>(pool), r.update);
    for (Symbol a : w) {
      r = forest_step(r.next, a, m, conv.tracked, pool);
      values = oracle::run_valuation(values, r.update);
      check_forest(r.next);
      CHECK(is_copyless(r.update));
    }
    for (StateId p = 0; p < m.num_states(); ++p) {
      if (!(conv.tracked & bit(p))) continue;
      const auto run = oracle::right_to_right(m, w, p);
      const auto v = smallest_vertex(r.next, p);
      CHECK(run.has_value() == v.has_value());
      if (!run || !v) continue;
      CHECK(r.next.phi[*v] == run->state);
      CHECK(evaluate(values, label_path(r.next, *v)) == run->output);
    }
  }
}

TwoDFT with_begin_output(TwoDFT t, const std::string& out) {
  auto cell = *t.transition(t.initial, kBeginMarker);
  cell.output = parse_word(t.output_alphabet, out);
  t.set_transition(t.initial, kBeginMarker, cell);
  return t;
}

}  // namespace

TEST_CASE("normalization") {
  const TwoDFT fig2 = corpus::fig2_2dft();
  const TwoDFT n = normalize_2dft(fig2);
  CHECK(n.start_side == StartSide::Right);
  CHECK(check_equiv(n, fig2, 8).equal);
  CHECK(normalize_2dft(n) == n);

  const TwoDFT loud = with_begin_output(corpus::right_mover_2dft(), "b");
  const TwoDFT ln = normalize_2dft(loud);
  CHECK(check_equiv(ln, loud, 6).equal);
  for (StateId q = 0; q < ln.num_states(); ++q)
    if (const auto& tr = ln.transition(q, kBeginMarker)) CHECK(tr->output.empty());
}

TEST_CASE("normalization on random machines") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 60; ++trial) {
    const TwoDFT t = oracle::random_2dft(rng, 3);
    CAPTURE(trial);
    CHECK(check_equiv(normalize_2dft(t), t, 6).equal);
  }
}

TEST_CASE("forest step at the left endmarker of fig2") {
  // Raw machine, every state tracked: 1 exits right in 1, 2 exits right in 3.
  const TwoDFT t = corpus::fig2_2dft();
  const auto r = forest_step({}, kBeginMarker, t, bit(0) | bit(1) | bit(2), 5);
  CHECK(r.next.vertices == std::vector<StateSet>{bit(0), bit(1)});
  CHECK(r.next.phi == std::vector<StateId>{0, 2});
}

TEST_CASE("merging runs acquire a common parent") {
  TwoDFT t(Alphabet({"a"}), Alphabet({"a", "b"}), {"1", "2", "3"}, 0, {2});
  t.add("1", "BEGIN", "a", "1", +1);
  t.add("2", "BEGIN", "b", "2", +1);
  t.add("1", "a", "a", "3", +1);
  t.add("2", "a", "b", "3", +1);
  const StateSet all = bit(0) | bit(1) | bit(2);
  const auto r0 = forest_step({}, kBeginMarker, t, all, 5);
  const auto r1 = forest_step(r0.next, 0, t, all, 5);
  const auto& v = r1.next.vertices;
  CHECK(std::find(v.begin(), v.end(), bit(0) | bit(1)) != v.end());
  const auto s1 = smallest_vertex(r1.next, 0);
  const auto s2 = smallest_vertex(r1.next, 1);
  REQUIRE(s1);
  REQUIRE(s2);
  CHECK(parent_vertex(r1.next, *s1) == parent_vertex(r1.next, *s2));
  CHECK(r1.next.phi[*parent_vertex(r1.next, *s1)] == 2);
}

TEST_CASE("one-way machines give singleton forests") {
  const TwoDFT t = corpus::right_mover_2dft();
  const auto r0 = forest_step({}, kBeginMarker, t, bit(0), 1);
  const auto r1 = forest_step(r0.next, 0, t, bit(0), 1);
  CHECK(r1.next.vertices == std::vector<StateSet>{bit(0)});
  CHECK(r1.update.images[0] == ItemString{Item::sym(0)});

  const auto conv = twodft_to_copyless_sst_detailed(t);
  for (const auto& s : conv.states)
    for (StateSet v : s.vertices) CHECK(std::popcount(v) == 1);
  CHECK(check_equiv(conv.sst, t, 8).equal);
}

TEST_CASE("induction properties hold along every prefix") {
  check_p1_p2(corpus::fig2_2dft(), 6);
  check_p1_p2(corpus::reverse_2dft(), 6);
  check_p1_p2(with_begin_output(corpus::swap_2dft(), "ab"), 5);
  std::mt19937_64 rng(71);
  for (int trial = 0; trial < 25; ++trial) {
    CAPTURE(trial);
    check_p1_p2(oracle::random_2dft(rng, 3), 4);
  }
}

TEST_CASE("fig2 copyless conversion") {
  const TwoDFT t = corpus::fig2_2dft();
  const auto conv = twodft_to_copyless_sst_detailed(t);
  CHECK(conv.sst.num_variables() <= 5);
  CHECK(check_copyless(conv.sst));
  CHECK(conv.max_vertices <= 5);
  for (const auto& s : conv.states) CHECK(s.vertices.size() <= 5);
  CHECK(check_equiv(conv.sst, t, 8).equal);
}

TEST_CASE("copyless conversion on the corpus and random machines") {
  for (const auto& [name, m] : corpus::all()) {
    auto* t = std::get_if<TwoDFT>(&m);
    if (!t) continue;
    INFO(name);
    const SST s = twodft_to_copyless_sst(*t);
    CHECK(check_copyless(s));
    CHECK(s.num_variables() <= 2 * t->num_states() - 1);
    CHECK(check_equiv(s, *t, 8).equal);
  }
  std::mt19937_64 rng(81);
  for (int trial = 0; trial < 80; ++trial) {
    const TwoDFT t = oracle::random_2dft(rng, 3);
    CAPTURE(trial);
    const SST s = twodft_to_copyless_sst(t);
    CHECK(check_copyless(s));
    CHECK(check_equiv(s, t, 6).equal);
  }
}

TEST_CASE("aperiodic 2DFTs give aperiodic copyless SSTs") {
  for (const TwoDFT& t : {corpus::fig2_2dft(), corpus::right_mover_2dft(), corpus::reverse_2dft()}) {
    const SST s = twodft_to_copyless_sst(t);
    CHECK(aperiodicity_index(ftm_closure(s, 1)));
    CHECK(aperiodicity_index(stm_closure(s, 1)));
  }
}
