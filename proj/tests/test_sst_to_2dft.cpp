#include <doctest.h>

#include "oracles.hpp"
#include "strans/behaviors.hpp"
#include "strans/corpus.hpp"
#include "strans/equiv.hpp"
#include "strans/errors.hpp"
#include "strans/sst_analysis.hpp"
#include "strans/sst_to_2dft.hpp"

using namespace strans;

namespace {

std::string relabel(const SequentialTransducer& t, const std::string& input) {
  auto out = eval_sequential(t, parse_word(t.input_alphabet, input));
  REQUIRE(out);
  return format_word(t.output_alphabet, *out);
}

std::vector<std::pair<std::string, SST>> one_bounded_corpus() {
  std::vector<std::pair<std::string, SST>> out;
  for (auto& [name, m] : corpus::all())
    if (auto* s = std::get_if<SST>(&m); s && check_k_bounded(*s, 1)) out.emplace_back(name, *s);
  return out;
}

// "(a,q,{X,Y})" -> {"a", "q"}; the set part is not needed here.
std::pair<std::string, std::string> base_and_state(const std::string& name) {
  const auto c1 = name.find(',');
  const auto c2 = name.find_first_of(",)", c1 + 1);
  return {name.substr(1, c1 - 1), name.substr(c1 + 1, c2 - c1 - 1)};
}

}  // namespace

TEST_CASE("prev enricher") {
  const auto a = build_prev_enricher(corpus::fig2_sst());
  CHECK(relabel(a, "ab⊣") == "(a,q) (b,q) (⊣,q)");
  CHECK(relabel(a, "⊣") == "(⊣,q)");
  CHECK(relabel(build_prev_enricher(corpus::alternating_sst()), "aa⊣") == "(a,p) (a,q) (⊣,p)");
}

TEST_CASE("useful-variables enricher") {
  const SST t = corpus::fig2_sst();
  const auto a1 = build_prev_enricher(t);
  const auto a2 = build_useful_vars_enricher(t);
  const auto run = [&](const std::string& w) {
    auto mid = eval_sequential(a1, parse_word(a1.input_alphabet, w));
    REQUIRE(mid);
    auto out = eval_sequential(a2, *mid);
    REQUIRE(out);
    return format_word(a2.output_alphabet, *out);
  };
  CHECK(run("ab⊣") == "(a,q,{X,Y}) (b,q,{X,Y}) (⊣,q,{})");
  CHECK(run("⊣") == "(⊣,q,{})");

  // F = Y and Y:=X on a: only the copy of X taken at an a stays useful.
  const SST cd = corpus::copy_discard_sst();
  const auto c1 = build_prev_enricher(cd);
  const auto c2 = build_useful_vars_enricher(cd);
  auto mid = eval_sequential(c1, parse_word(c1.input_alphabet, "bab⊣"));
  auto out = eval_sequential(c2, *mid);
  CHECK(format_word(c2.output_alphabet, *out) == "(b,q,{X}) (a,q,{Y}) (b,q,{Y}) (⊣,q,{})");
}

TEST_CASE("output follower shape") {
  for (const auto& [name, t] : one_bounded_corpus()) {
    INFO(name);
    const TwoDFT b = build_output_follower(t);
    CHECK(b.num_states() == 2 * t.num_variables() + 2);
    // An in-state moves right only when the image it reads has no variable.
    for (VarId x = 0; x < t.num_variables(); ++x)
      for (Symbol c = 0; c < b.input_alphabet.size(); ++c) {
        const auto& tr = b.transition(2 * x, c);
        if (!tr || tr->move != Move::Right) continue;
        const auto [base, state] = base_and_state(b.input_alphabet.name(c));
        REQUIRE(base != "⊣");
        const auto& img = t.update(t.state_id(state), t.input_alphabet.at(base))->images[x];
        CHECK(erase_symbols(img).empty());
        CHECK(tr->target == 2 * x + 1);
      }
  }
}

TEST_CASE("fig2 pipelines") {
  const SST t = corpus::fig2_sst();
  const Pipeline full = sst_to_2dft(t);
  CHECK(full.stages().size() == 3);
  CHECK(eval_pipeline(full, parse_word(full.input_alphabet(), "aab")) ==
        parse_word(t.output_alphabet, "aabb"));
  CHECK(eval_pipeline(full, {}) == Word{});
  CHECK(check_equiv(full, t, 8).equal);

  const Pipeline skip = sst_to_2dft(t, true);
  CHECK(skip.stages().size() == 2);
  CHECK(check_equiv(skip, t, 8).equal);
}

TEST_CASE("pipeline preconditions") {
  CHECK_THROWS_AS(sst_to_2dft(corpus::two_bounded_sst()), NotOneBounded);
  CHECK_THROWS_AS(sst_to_2dft(corpus::copy_discard_sst(), true), NotCopyless);
}

TEST_CASE("pipelines are equivalent on the 1-bounded corpus") {
  for (const auto& [name, t] : one_bounded_corpus()) {
    INFO(name);
    CHECK(check_equiv(sst_to_2dft(t), t, 8).equal);
    if (check_copyless(t)) CHECK(check_equiv(sst_to_2dft(t, true), t, 8).equal);
  }
}

TEST_CASE("pipelines are equivalent on random copyless machines") {
  std::mt19937_64 rng(55);
  for (int trial = 0; trial < 40; ++trial) {
    const SST t = oracle::random_sst(rng, 3, 3, true);
    CAPTURE(trial);
    CHECK(check_equiv(sst_to_2dft(t), t, 6).equal);
    CHECK(check_equiv(sst_to_2dft(t, true), t, 6).equal);
  }
}

TEST_CASE("pipeline stages stay aperiodic") {
  for (const auto& [name, t] : one_bounded_corpus()) {
    if (!aperiodicity_index(ftm_closure(t, 1))) continue;
    INFO(name);
    const Pipeline p = sst_to_2dft(t);
    for (const Stage& s : p.stages()) {
      if (auto* q = std::get_if<SequentialTransducer>(&s))
        CHECK(aperiodicity_index(transition_monoid_sequential(*q)));
      else
        CHECK(aperiodicity_index(transition_monoid_2dft(std::get<TwoDFT>(s))));
    }
  }
}

TEST_CASE("output structures") {
  const SST t = corpus::fig2_sst();
  const auto ab = build_output_structure(t, parse_word(t.input_alphabet, "ab"));
  REQUIRE(ab);
  CHECK(format_word(t.output_alphabet, ab->output) == "ab");

  const auto empty = build_output_structure(t, {});
  REQUIRE(empty);
  CHECK(empty->output.empty());
  for (const auto& e : empty->edges) CHECK(e.label.empty());

  SST partial = corpus::alternating_sst();
  partial.finals = {0};
  partial.output[1].reset();
  CHECK_FALSE(build_output_structure(partial, parse_word(partial.input_alphabet, "a")));
}

TEST_CASE("output structure traversal equals the SST and the follower") {
  for (const auto& [name, t] : one_bounded_corpus()) {
    INFO(name);
    const Pipeline p = sst_to_2dft(t);
    for (const Word& w : all_words(t.input_alphabet.size(), 6)) {
      const auto expected = eval_sst(t, w);
      const auto s = build_output_structure(t, w);
      CHECK(s.has_value() == expected.has_value());
      if (!s) continue;
      Word path;
      for (const auto& e : s->edges) path.insert(path.end(), e.label.begin(), e.label.end());
      CHECK(path == *expected);
      CHECK(s->output == *expected);
      CHECK(eval_pipeline(p, w) == expected);
    }
  }
}
