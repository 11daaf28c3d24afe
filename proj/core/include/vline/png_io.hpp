#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vline/grid.hpp"

namespace vline {

/// 8-bit RGB raster, pixels row-major from the top-left corner.
struct ImageRGB {
    int width = 0;
    int height = 0;
    std::vector<unsigned char> pixels;  // 3 bytes per pixel

    unsigned char* px(int col, int row) {
        return &pixels[3 * (static_cast<std::size_t>(row) * width + col)];
    }
    const unsigned char* px(int col, int row) const {
        return &pixels[3 * (static_cast<std::size_t>(row) * width + col)];
    }
};

/// Reads an 8-bit RGB or RGBA PNG (alpha dropped).
ImageRGB read_png_rgb(const std::string& path);
void write_png_rgb(const std::string& path, const ImageRGB& image);

/// Value range mapped onto the colormap.
struct ColormapBounds {
    double lo = 0.0;
    double hi = 1.0;
};

/// Renders a scalar field through the colormap (x right, y up). Bounds
/// default to the field's min/max; the bounds actually used are returned.
ColormapBounds write_scalar_png(const std::string& path, const ScalarField& field,
                                std::optional<ColormapBounds> bounds = std::nullopt);

/// Both components side by side (shared bounds), separated by a white gutter.
ColormapBounds write_components_png(const std::string& path, const VectorField& field);

/// Arrow plot on a coarse sub-lattice; stride <= 0 picks ~24 arrows per side.
void write_quiver_png(const std::string& path, const VectorField& field, int stride = 0);

/// Writes the field as an RGB image: R = f1, G = f2 (clamped to [0,1]), B = 0.
void write_field_rgb_png(const std::string& path, const VectorField& field);

}  // namespace vline
