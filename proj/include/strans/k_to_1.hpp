#pragma once

#include <cstdint>
#include <vector>

#include "strans/sst.hpp"
#include "strans/sst_analysis.hpp"

namespace strans {

struct OneBoundedConversion {
  SST sst;
  std::size_t monoid_size = 0;
  /// Lookahead set of each produced state, as ranks in the canonical
  /// element order.
  std::vector<std::vector<std::uint32_t>> lookahead;
};

/// Lookahead construction keeping, for each variable and suffix class, only
/// as many copies as the output will use. That is at most k copies unless an
/// output expression reads a value several times. Throws NotBounded unless
/// the machine is k-bounded, and CounterOverflow should a copy index pass
/// the number of copies allocated.
OneBoundedConversion k_to_1_detailed(const SST& machine, Coefficient k,
                                     std::size_t element_cap = kDefaultElementCap);
SST k_to_1(const SST& machine, Coefficient k, std::size_t element_cap = kDefaultElementCap);

}  // namespace strans
