#include "zgame/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <ostream>
#include <stdexcept>

#include "zgame/bitseq.hpp"
#include "zgame/errors.hpp"

namespace zgame {

namespace {

uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

Rgb hsv_to_rgb(double h, double s, double v) {
    const double c = v * s;
    const double hp = h / 60.0;
    const double x = c * (1.0 - std::fabs(std::fmod(hp, 2.0) - 1.0));
    double r = 0, g = 0, b = 0;
    switch (static_cast<int>(hp)) {
        case 0: r = c; g = x; break;
        case 1: r = x; g = c; break;
        case 2: g = c; b = x; break;
        case 3: g = x; b = c; break;
        case 4: r = x; b = c; break;
        default: r = c; b = x; break;
    }
    const double m = v - c;
    auto to8 = [](double f) {
        return static_cast<uint8_t>(std::lround(std::clamp(f, 0.0, 1.0) * 255.0));
    };
    return {to8(r + m), to8(g + m), to8(b + m)};
}

}  // namespace

Palette::Palette(uint64_t seed) : seed_(seed) {
    std::iota(hue_order_.begin(), hue_order_.end(), uint8_t(0));
    uint64_t state = seed;
    for (size_t i = hue_order_.size() - 1; i > 0; --i)
        std::swap(hue_order_[i], hue_order_[splitmix64(state) % (i + 1)]);
}

Rgb Palette::color(uint64_t value) const {
    const unsigned hue_idx = hue_order_[value & 63];
    const unsigned tier = (value >> 6) & 3;
    const double hue = (hue_idx + 0.5) * (360.0 / 64.0);
    return hsv_to_rgb(hue, 0.78, 0.95 - 0.13 * tier);
}

CellGrid p_slice_grid(uint32_t k, size_t size, GridLayout layout) {
    if (k == 0) throw std::invalid_argument("p_slice_grid: prime index is 1-based");
    if (size == 0) throw std::invalid_argument("p_slice_grid: size must be positive");
    CellGrid grid;
    grid.rows = size;
    grid.cols = size;
    grid.layout = layout;
    for (uint64_t m = 0; m < size; ++m) {
        for (uint64_t r : sierpinski_row(m).offsets) {
            if (r >= k) break;  // needs column n = k - r >= 1
            const uint64_t n = k - r;
            if (n <= size - m) grid.cells.push_back({m, n - 1, m});
        }
    }
    // offsets descend in column order; keep cells sorted by (row, col)
    std::sort(grid.cells.begin(), grid.cells.end(), [](const GridCell& a, const GridCell& b) {
        return a.row != b.row ? a.row < b.row : a.col < b.col;
    });
    return grid;
}

CellGrid delta_square_grid(unsigned t) {
    if (t < 1) throw std::invalid_argument("delta_square_grid: order must be at least 1");
    if (t > 10) throw limit_error("delta_square_grid: order above 10 exceeds the resource bound");
    const size_t side = size_t(1) << t;
    CellGrid grid;
    grid.rows = side;
    grid.cols = side;
    grid.layout = GridLayout::Square;
    grid.cells.reserve(side * side);
    for (uint64_t i = 0; i < side; ++i)
        for (uint64_t j = 0; j < side; ++j)
            grid.cells.push_back({i, j, hamming_delta((i << t) + j)});
    return grid;
}

CellGrid omega_triangle_grid(size_t depth, GridLayout layout) {
    if (depth == 0) throw std::invalid_argument("omega_triangle_grid: depth must be positive");
    CellGrid grid;
    grid.rows = depth;
    grid.cols = depth;
    grid.layout = layout;
    for (uint64_t m = 0; m < depth; ++m) {
        const uint64_t omega = uint64_t(1) << hamming_delta(m);
        for (uint64_t col = 0; col < depth - m; ++col) grid.cells.push_back({m, col, omega});
    }
    return grid;
}

RasterImage rasterize(const CellGrid& grid, const Palette& palette, unsigned cell_px) {
    if (cell_px == 0) throw std::invalid_argument("rasterize: cell size must be positive");
    if (grid.layout == GridLayout::Offset && cell_px % 2 != 0)
        throw std::invalid_argument("rasterize: offset layout needs an even cell size");
    RasterImage img;
    img.width = grid.cols * cell_px;
    img.height = grid.rows * cell_px;
    img.pixels.assign(img.width * img.height, Rgb{255, 255, 255});
    for (const GridCell& cell : grid.cells) {
        const size_t x0 = cell.col * cell_px +
                          (grid.layout == GridLayout::Offset ? cell.row * (cell_px / 2) : 0);
        const size_t y0 = cell.row * cell_px;
        const Rgb c = palette.color(cell.value);
        for (size_t dy = 0; dy < cell_px; ++dy)
            for (size_t dx = 0; dx < cell_px; ++dx) img.at(x0 + dx, y0 + dy) = c;
    }
    return img;
}

std::string to_svg(const CellGrid& grid, const Palette& palette, unsigned cell_px) {
    if (cell_px == 0) throw std::invalid_argument("to_svg: cell size must be positive");
    if (grid.layout == GridLayout::Offset && cell_px % 2 != 0)
        throw std::invalid_argument("to_svg: offset layout needs an even cell size");
    if (grid.rows > 256 || grid.cols > 256)
        throw limit_error("to_svg: grids above 256 cells per side are raster-only");
    const size_t w = grid.cols * cell_px;
    const size_t h = grid.rows * cell_px;
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
           "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) +
           " " + std::to_string(h) + "\" shape-rendering=\"crispEdges\">\n";
    out += "<rect width=\"" + std::to_string(w) + "\" height=\"" + std::to_string(h) +
           "\" fill=\"#ffffff\"/>\n";
    char hex[8];
    for (const GridCell& cell : grid.cells) {
        const size_t x0 = cell.col * cell_px +
                          (grid.layout == GridLayout::Offset ? cell.row * (cell_px / 2) : 0);
        const size_t y0 = cell.row * cell_px;
        const Rgb c = palette.color(cell.value);
        std::snprintf(hex, sizeof hex, "#%02x%02x%02x", c.r, c.g, c.b);
        out += "<rect x=\"" + std::to_string(x0) + "\" y=\"" + std::to_string(y0) +
               "\" width=\"" + std::to_string(cell_px) + "\" height=\"" +
               std::to_string(cell_px) + "\" fill=\"" + hex + "\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

RasterImage render_p_slice(uint32_t k, size_t size, const Palette& palette,
                           unsigned cell_px, GridLayout layout) {
    return rasterize(p_slice_grid(k, size, layout), palette, cell_px);
}

RasterImage render_delta_square(unsigned t, const Palette& palette, unsigned cell_px) {
    return rasterize(delta_square_grid(t), palette, cell_px);
}

RasterImage render_omega_triangle(size_t depth, const Palette& palette, unsigned cell_px,
                                  GridLayout layout) {
    return rasterize(omega_triangle_grid(depth, layout), palette, cell_px);
}

std::string ppm_bytes(const RasterImage& image) {
    std::string out = "P6\n" + std::to_string(image.width) + " " +
                      std::to_string(image.height) + "\n255\n";
    out.reserve(out.size() + image.pixels.size() * 3);
    for (const Rgb& p : image.pixels) {
        out.push_back(static_cast<char>(p.r));
        out.push_back(static_cast<char>(p.g));
        out.push_back(static_cast<char>(p.b));
    }
    return out;
}

void write_ppm(const RasterImage& image, std::ostream& out) {
    const std::string bytes = ppm_bytes(image);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
}

uint64_t fnv1a64(const void* data, size_t size) {
    const auto* bytes = static_cast<const unsigned char*>(data);
    uint64_t h = 0xcbf29ce484222325ull;
    for (size_t i = 0; i < size; ++i) {
        h ^= bytes[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

std::string hex64(uint64_t value) {
    static const char digits[] = "0123456789abcdef";
    std::string out(16, '0');
    for (int i = 15; i >= 0; --i) {
        out[i] = digits[value & 0xf];
        value >>= 4;
    }
    return out;
}

}  // namespace zgame
