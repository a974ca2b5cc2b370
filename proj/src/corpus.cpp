#include "strans/corpus.hpp"

namespace strans::corpus {

namespace {

Alphabet ab() { return Alphabet({"a", "b"}); }

}  // namespace

TwoDFT fig2_2dft() {
  // Only state 3 is final: with 1 final too, "aba" would stop at the first ⊣.
  TwoDFT t(ab(), ab(), {"1", "2", "3"}, 0, {2});
  t.add("1", "a", "a", "1", +1);
  t.add("1", "BEGIN", "", "1", +1);
  t.add("1", "b", "", "2", -1);
  t.add("1", "END", "", "2", -1);
  t.add("2", "a", "b", "2", -1);
  t.add("2", "b", "", "3", +1);
  t.add("2", "BEGIN", "", "3", +1);
  t.add("3", "a", "", "3", +1);
  t.add("3", "b", "", "1", +1);
  return t;
}

SST fig2_sst() {
  SST t(ab(), ab(), {"q"}, 0, {0}, {"X", "Y"});
  t.add("q", "a", "q", {{"X", "${X}a"}, {"Y", "${Y}b"}});
  t.add("q", "b", "q", {{"X", "${X}${Y}"}});
  t.set_output("q", "${X}${Y}");
  return t;
}

SST fig2_sst_yx() {
  SST t = fig2_sst();
  t.set_output("q", "${Y}${X}");
  return t;
}

SST doubling_sst() {
  SST t(ab(), ab(), {"q"}, 0, {0}, {"X"});
  t.add("q", "a", "q", {{"X", "${X}${X}"}});
  t.add("q", "b", "q", {{"X", "${X}b"}});
  t.set_output("q", "${X}");
  return t;
}

SST two_bounded_sst() {
  SST t(Alphabet({"a"}), Alphabet({"a"}), {"q"}, 0, {0}, {"X", "Y"});
  t.add("q", "a", "q", {{"X", "${X}a"}, {"Y", "${X}${X}"}});
  t.set_output("q", "${Y}");
  return t;
}

SST swap_sst() {
  SST t(ab(), ab(), {"q"}, 0, {0}, {"X", "Y"});
  t.add("q", "a", "q", {{"X", "${Y}"}, {"Y", "${X}"}});
  t.add("q", "b", "q", {{"X", "${X}b"}, {"Y", "${Y}"}});
  t.set_output("q", "${X}${Y}");
  return t;
}

SST copy_discard_sst() {
  SST t(ab(), ab(), {"q"}, 0, {0}, {"X", "Y"});
  t.add("q", "a", "q", {{"X", "${X}a"}, {"Y", "${X}"}});
  t.add("q", "b", "q", {{"X", "${X}b"}, {"Y", "${Y}b"}});
  t.set_output("q", "${Y}");
  return t;
}

SST alternating_sst() {
  SST t(ab(), ab(), {"p", "q"}, 0, {0, 1}, {"X"});
  t.add("p", "a", "q", {{"X", "${X}a"}});
  t.add("q", "a", "p", {{"X", "a${X}"}});
  t.add("p", "b", "p", {{"X", "${X}b"}});
  t.add("q", "b", "q", {{"X", "b${X}"}});
  t.set_output("p", "${X}");
  t.set_output("q", "${X}b");
  return t;
}

TwoDFT right_mover_2dft() {
  TwoDFT t(ab(), ab(), {"s"}, 0, {0});
  t.add("s", "BEGIN", "", "s", +1);
  t.add("s", "a", "a", "s", +1);
  t.add("s", "b", "b", "s", +1);
  return t;
}

TwoDFT swap_2dft() {
  TwoDFT t(ab(), ab(), {"p", "q"}, 0, {0});
  t.add("p", "BEGIN", "", "p", +1);
  t.add("p", "a", "a", "q", +1);
  t.add("q", "a", "a", "p", +1);
  t.add("p", "b", "b", "p", +1);
  t.add("q", "b", "b", "q", +1);
  return t;
}

TwoDFT reverse_2dft() {
  TwoDFT t(ab(), ab(), {"s", "r", "t"}, 0, {2});
  t.add("s", "BEGIN", "", "s", +1);
  t.add("s", "a", "", "s", +1);
  t.add("s", "b", "", "s", +1);
  t.add("s", "END", "", "r", -1);
  t.add("r", "a", "a", "r", -1);
  t.add("r", "b", "b", "r", -1);
  t.add("r", "BEGIN", "", "t", +1);
  t.add("t", "a", "", "t", +1);
  t.add("t", "b", "", "t", +1);
  return t;
}

SequentialTransducer identity_relabeler() {
  SequentialTransducer t(Direction::LeftToRight, ab(), ab(), {"q"}, 0);
  t.add("q", "a", "a", "q");
  t.add("q", "b", "b", "q");
  return t;
}

SequentialTransducer parity_relabeler() {
  SequentialTransducer t(Direction::RightToLeft, ab(), Alphabet({"(a,0)", "(a,1)", "(b,0)", "(b,1)"}),
                         {"0", "1"}, 0);
  t.add("0", "a", "(a,0)", "0");
  t.add("1", "a", "(a,1)", "1");
  t.add("0", "b", "(b,0)", "1");
  t.add("1", "b", "(b,1)", "0");
  return t;
}

std::vector<std::pair<std::string, Machine>> all() {
  return {
      {"fig2-2dft", fig2_2dft()},
      {"fig2-sst", fig2_sst()},
      {"fig2-sst-yx", fig2_sst_yx()},
      {"doubling-sst", doubling_sst()},
      {"two-bounded-sst", two_bounded_sst()},
      {"swap-sst", swap_sst()},
      {"copy-discard-sst", copy_discard_sst()},
      {"alternating-sst", alternating_sst()},
      {"right-mover-2dft", right_mover_2dft()},
      {"swap-2dft", swap_2dft()},
      {"reverse-2dft", reverse_2dft()},
      {"identity-relabeler", identity_relabeler()},
      {"parity-relabeler", parity_relabeler()},
  };
}

std::optional<Machine> find(std::string_view name) {
  for (auto& [n, m] : all())
    if (n == name) return m;
  return std::nullopt;
}

}  // namespace strans::corpus
