#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "strans/machine.hpp"

namespace strans::corpus {

/// The 2DFT copying each a-block and then writing as many b.
TwoDFT fig2_2dft();
/// The same function as a one-state copyless SST.
SST fig2_sst();
/// fig2_sst with output YX.
SST fig2_sst_yx();
/// One state, a: X:=XX, b: X:=Xb. Not bounded.
SST doubling_sst();
/// One state over {a}, X:=Xa, Y:=XX, output Y. 2-bounded.
SST two_bounded_sst();
/// a swaps X and Y, b appends to X. Copyless, not aperiodic.
SST swap_sst();
/// a: X:=Xa, Y:=X; b: X:=Xb, Y:=Yb; output Y. 1-bounded, not copyless.
SST copy_discard_sst();
/// Two states alternating on a, single variable.
SST alternating_sst();
/// Copies its input left to right.
TwoDFT right_mover_2dft();
/// Two right-moving states swapped by a; accepts an even number of a.
TwoDFT swap_2dft();
/// Outputs the reversal of its input.
TwoDFT reverse_2dft();
SequentialTransducer identity_relabeler();
/// Right to left: tags each letter with the parity of the b's to its right.
SequentialTransducer parity_relabeler();

/// Every documented machine under its CLI name.
std::vector<std::pair<std::string, Machine>> all();
std::optional<Machine> find(std::string_view name);

}  // namespace strans::corpus
