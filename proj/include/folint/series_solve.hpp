#pragma once

#include "folint/series.hpp"

namespace folint {

struct DualSeries {
    TruncSeries value;
    TruncSeries eps;
};

// Powers [Y^0, ..., Y^d] of the series solution of y' = F(x,y) at (x0,y0),
// each truncated at order sigma. Throws SingularPoint when den F vanishes.
std::vector<TruncSeries> sol_series(const QRat2& F, const Rat& x0, const Rat& y0,
                                    int sigma, int d);

// Same along (x0, y0 + eps) mod eps^2; eps part of Y_1 is exp(int dF/dy dx).
std::vector<DualSeries> dual_sol_series(const QRat2& F, const Rat& x0, const Rat& y0,
                                        int sigma, int d);

// [Y^0..Y^d] from Y^1 via squarings (odd powers use the half-cost identity).
std::vector<TruncSeries> power_list_extend(const TruncSeries& y1, int d);

// Solution series Y_1 only (plus the eps part when requested).
TruncSeries sol_series_y1(const QRat2& F, const Rat& x0, const Rat& y0, int sigma,
                          TruncSeries* eps_out);

} // namespace folint
