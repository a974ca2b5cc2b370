#include <doctest.h>

#include "strans/corpus.hpp"
#include "strans/equiv.hpp"
#include "strans/errors.hpp"

using namespace strans;

TEST_CASE("fig2 pair is equal") {
  const auto v = check_equiv(corpus::fig2_2dft(), corpus::fig2_sst(), 8);
  CHECK(v.equal);
  CHECK(v.words_checked == 511);
}

TEST_CASE("output order is detected") {
  const Machine xy = corpus::fig2_sst(), yx = corpus::fig2_sst_yx();
  const auto v = check_equiv(xy, yx, 3);
  REQUIRE_FALSE(v.equal);
  // "" agrees; "a" gives X = a, Y = b.
  CHECK(v.witness == Word{0});
  CHECK(v.left == Word{0, 1});
  CHECK(v.right == Word{1, 0});
  CHECK(evaluate(xy, v.witness) == v.left);
  CHECK(evaluate(yx, v.witness) == v.right);

  const auto back = check_equiv(yx, xy, 3);
  CHECK(back.witness == v.witness);
  CHECK(back.left == v.right);
  CHECK(back.right == v.left);
}

TEST_CASE("equivalence is reflexive and monotone in the length bound") {
  for (const auto& [name, m] : corpus::all()) {
    INFO(name);
    CHECK(check_equiv(m, m, 5).equal);
  }
  const Machine a = corpus::swap_sst(), b = corpus::copy_discard_sst();
  std::optional<std::size_t> first;
  for (std::size_t len = 0; len <= 5; ++len)
    if (!check_equiv(a, b, len).equal && !first) first = len;
  REQUIRE(first);
  for (std::size_t len = *first; len <= 5; ++len) CHECK_FALSE(check_equiv(a, b, len).equal);
}

TEST_CASE("reject against output is a disagreement") {
  SST partial = corpus::fig2_sst();
  partial.delta[partial.index(0, 1)].reset();
  partial.rho[partial.index(0, 1)].reset();
  const auto v = check_equiv(Machine(partial), Machine(corpus::fig2_sst()), 2);
  REQUIRE_FALSE(v.equal);
  CHECK(v.witness == Word{1});
  CHECK_FALSE(v.left);
}

TEST_CASE("enumeration order and alphabet checks") {
  std::vector<Word> seen;
  for_each_word(2, 2, [&](const Word& w) {
    seen.push_back(w);
    return true;
  });
  CHECK(seen == std::vector<Word>{{}, {0}, {1}, {0, 0}, {0, 1}, {1, 0}, {1, 1}});
  CHECK_THROWS_AS(check_equiv(corpus::fig2_sst(), corpus::two_bounded_sst(), 2), AlphabetMismatch);
}

TEST_CASE("sampling is reproducible") {
  const Machine xy = corpus::fig2_sst(), yx = corpus::fig2_sst_yx();
  CHECK(check_equiv_sampled(corpus::fig2_2dft(), xy, 200, 9, 30).equal);
  const auto v1 = check_equiv_sampled(xy, yx, 50, 5, 20);
  const auto v2 = check_equiv_sampled(xy, yx, 50, 5, 20);
  CHECK_FALSE(v1.equal);
  CHECK(v1.witness == v2.witness);
}
