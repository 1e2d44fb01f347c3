#pragma once

#include <span>

#include "bogauge/grid.hpp"

namespace bogauge::detail {

// Unnormalized DFTs: forward out_m = sum_j in_j e^{-2 pi i jm/n},
// backward out_j = sum_m in_m e^{+2 pi i jm/n}. `in` and `out` may alias.
void dft_forward(std::span<const cplx> in, std::span<cplx> out);
void dft_backward(std::span<const cplx> in, std::span<cplx> out);

}  // namespace bogauge::detail
