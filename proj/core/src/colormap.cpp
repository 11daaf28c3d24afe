#include "vline/colormap.hpp"

#include <algorithm>
#include <cmath>

namespace vline {

namespace {

// viridis at 9 evenly spaced stops
const unsigned char kAnchors[9][3] = {
    {68, 1, 84},    {71, 45, 123},  {54, 92, 141},  {39, 127, 142}, {31, 161, 135},
    {74, 194, 109}, {159, 218, 58}, {223, 227, 24}, {253, 231, 37},
};

}  // namespace

void colormap(double t, unsigned char rgb[3]) {
    t = std::clamp(t, 0.0, 1.0);
    const double pos = t * 8.0;
    const int lo = std::min(static_cast<int>(pos), 7);
    const double frac = pos - lo;
    for (int c = 0; c < 3; ++c) {
        const double v = (1.0 - frac) * kAnchors[lo][c] + frac * kAnchors[lo + 1][c];
        rgb[c] = static_cast<unsigned char>(std::lround(v));
    }
}

}  // namespace vline
