#pragma once

namespace vline {

/// Perceptually uniform dark-blue-to-yellow ramp (viridis anchors, linear
/// interpolation). t is clamped to [0, 1].
void colormap(double t, unsigned char rgb[3]);

}  // namespace vline
