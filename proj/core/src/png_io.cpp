#include "vline/png_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <memory>

#include <png.h>

#include "vline/colormap.hpp"
#include "vline/errors.hpp"

namespace vline {

namespace {

struct FileCloser {
    void operator()(std::FILE* f) const {
        if (f) std::fclose(f);
    }
};
using FilePtr = std::unique_ptr<std::FILE, FileCloser>;

}  // namespace

ImageRGB read_png_rgb(const std::string& path) {
    FilePtr fp(std::fopen(path.c_str(), "rb"));
    if (!fp) throw ConfigError("cannot open image: " + path);

    png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw NumericError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_read_struct(&png, nullptr, nullptr);
        throw NumericError("libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_read_struct(&png, &info, nullptr);
        throw ConfigError("cannot decode PNG: " + path);
    }
    png_init_io(png, fp.get());
    png_read_info(png, info);

    const png_uint_32 width = png_get_image_width(png, info);
    const png_uint_32 height = png_get_image_height(png, info);
    const int color_type = png_get_color_type(png, info);
    const int bit_depth = png_get_bit_depth(png, info);

    // normalize everything to 8-bit RGB
    if (bit_depth == 16) png_set_strip_16(png);
    if (color_type == PNG_COLOR_TYPE_PALETTE) png_set_palette_to_rgb(png);
    if (color_type == PNG_COLOR_TYPE_GRAY && bit_depth < 8) png_set_expand_gray_1_2_4_to_8(png);
    if (png_get_valid(png, info, PNG_INFO_tRNS)) png_set_tRNS_to_alpha(png);
    if (color_type == PNG_COLOR_TYPE_GRAY || color_type == PNG_COLOR_TYPE_GRAY_ALPHA)
        png_set_gray_to_rgb(png);
    png_set_strip_alpha(png);
    png_read_update_info(png, info);

    ImageRGB img;
    img.width = static_cast<int>(width);
    img.height = static_cast<int>(height);
    img.pixels.resize(static_cast<std::size_t>(width) * height * 3);
    std::vector<png_bytep> rows(height);
    for (png_uint_32 r = 0; r < height; ++r) rows[r] = img.pixels.data() + 3 * width * r;
    png_read_image(png, rows.data());
    png_read_end(png, nullptr);
    png_destroy_read_struct(&png, &info, nullptr);
    return img;
}

void write_png_rgb(const std::string& path, const ImageRGB& image) {
    FilePtr fp(std::fopen(path.c_str(), "wb"));
    if (!fp) throw ConfigError("cannot open for writing: " + path);

    png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr, nullptr);
    if (!png) throw NumericError("libpng init failed");
    png_infop info = png_create_info_struct(png);
    if (!info) {
        png_destroy_write_struct(&png, nullptr);
        throw NumericError("libpng init failed");
    }
    if (setjmp(png_jmpbuf(png))) {
        png_destroy_write_struct(&png, &info);
        throw ConfigError("cannot encode PNG: " + path);
    }
    png_init_io(png, fp.get());
    png_set_IHDR(png, info, image.width, image.height, 8, PNG_COLOR_TYPE_RGB,
                 PNG_INTERLACE_NONE, PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
    png_write_info(png, info);
    std::vector<png_bytep> rows(image.height);
    for (int r = 0; r < image.height; ++r)
        rows[r] = const_cast<png_bytep>(image.pixels.data() +
                                        3 * static_cast<std::size_t>(image.width) * r);
    png_write_image(png, rows.data());
    png_write_end(png, nullptr);
    png_destroy_write_struct(&png, &info);
}

namespace {

ColormapBounds field_bounds(const ScalarField& f) {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    for (double v : f.values()) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (!(hi > lo)) hi = lo + 1.0;  // constant image
    return {lo, hi};
}

// field (i, j) -> image (col = i, row = n-1-j) so +y points up
void blit_field(ImageRGB& img, const ScalarField& f, int col0, const ColormapBounds& b) {
    const int n = f.n();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            const double t = (f.at(i, j) - b.lo) / (b.hi - b.lo);
            colormap(t, img.px(col0 + i, n - 1 - j));
        }
}

void draw_line(ImageRGB& img, int x0, int y0, int x1, int y1, unsigned char r, unsigned char g,
               unsigned char b) {
    const int dx = std::abs(x1 - x0), sx = x0 < x1 ? 1 : -1;
    const int dy = -std::abs(y1 - y0), sy = y0 < y1 ? 1 : -1;
    int err = dx + dy;
    for (;;) {
        if (x0 >= 0 && x0 < img.width && y0 >= 0 && y0 < img.height) {
            unsigned char* p = img.px(x0, y0);
            p[0] = r;
            p[1] = g;
            p[2] = b;
        }
        if (x0 == x1 && y0 == y1) break;
        const int e2 = 2 * err;
        if (e2 >= dy) {
            err += dy;
            x0 += sx;
        }
        if (e2 <= dx) {
            err += dx;
            y0 += sy;
        }
    }
}

}  // namespace

ColormapBounds write_scalar_png(const std::string& path, const ScalarField& field,
                                std::optional<ColormapBounds> bounds) {
    const ColormapBounds b = bounds ? *bounds : field_bounds(field);
    ImageRGB img;
    img.width = field.n();
    img.height = field.n();
    img.pixels.assign(static_cast<std::size_t>(img.width) * img.height * 3, 255);
    blit_field(img, field, 0, b);
    write_png_rgb(path, img);
    return b;
}

ColormapBounds write_components_png(const std::string& path, const VectorField& field) {
    const ColormapBounds b1 = field_bounds(field.f1());
    const ColormapBounds b2 = field_bounds(field.f2());
    const ColormapBounds b{std::min(b1.lo, b2.lo), std::max(b1.hi, b2.hi)};
    const int n = field.grid().n;
    const int gutter = 4;
    ImageRGB img;
    img.width = 2 * n + gutter;
    img.height = n;
    img.pixels.assign(static_cast<std::size_t>(img.width) * img.height * 3, 255);
    blit_field(img, field.f1(), 0, b);
    blit_field(img, field.f2(), n + gutter, b);
    write_png_rgb(path, img);
    return b;
}

void write_quiver_png(const std::string& path, const VectorField& field, int stride) {
    const Grid2D& g = field.grid();
    const int n = g.n;
    if (stride <= 0) stride = std::max(1, n / 24);
    const int scale_px = std::max(1, 512 / n);
    const int size = n * scale_px;

    ImageRGB img;
    img.width = size;
    img.height = size;
    img.pixels.assign(static_cast<std::size_t>(size) * size * 3, 255);

    double max_norm = 0.0;
    for (int i = 0; i < n; i += stride)
        for (int j = 0; j < n; j += stride)
            max_norm = std::max(max_norm, Vec2{field.f1().at(i, j), field.f2().at(i, j)}.norm());
    if (max_norm == 0.0) max_norm = 1.0;
    const double arrow_len = 0.9 * stride * scale_px;

    for (int i = stride / 2; i < n; i += stride)
        for (int j = stride / 2; j < n; j += stride) {
            const Vec2 f{field.f1().at(i, j), field.f2().at(i, j)};
            const double len = f.norm() / max_norm * arrow_len;
            if (len < 0.5) continue;
            const Vec2 d{f.x / f.norm(), f.y / f.norm()};
            const int x0 = i * scale_px + scale_px / 2;
            const int y0 = size - 1 - (j * scale_px + scale_px / 2);
            const int x1 = x0 + static_cast<int>(std::lround(d.x * len));
            const int y1 = y0 - static_cast<int>(std::lround(d.y * len));
            draw_line(img, x0, y0, x1, y1, 20, 20, 90);
            // arrowhead: two short strokes at +-150 degrees from the shaft
            for (const double a : {2.6179938779914944, -2.6179938779914944}) {
                const double ca = std::cos(a), sa = std::sin(a);
                const Vec2 hd{d.x * ca - d.y * sa, d.x * sa + d.y * ca};
                const int hx = x1 + static_cast<int>(std::lround(hd.x * 0.3 * len));
                const int hy = y1 - static_cast<int>(std::lround(hd.y * 0.3 * len));
                draw_line(img, x1, y1, hx, hy, 20, 20, 90);
            }
        }
    write_png_rgb(path, img);
}

void write_field_rgb_png(const std::string& path, const VectorField& field) {
    const int n = field.grid().n;
    ImageRGB img;
    img.width = n;
    img.height = n;
    img.pixels.assign(static_cast<std::size_t>(n) * n * 3, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            unsigned char* p = img.px(i, n - 1 - j);
            p[0] = static_cast<unsigned char>(
                std::lround(std::clamp(field.f1().at(i, j), 0.0, 1.0) * 255.0));
            p[1] = static_cast<unsigned char>(
                std::lround(std::clamp(field.f2().at(i, j), 0.0, 1.0) * 255.0));
            p[2] = 0;
        }
    write_png_rgb(path, img);
}

}  // namespace vline
