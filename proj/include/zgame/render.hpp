#ifndef ZGAME_RENDER_HPP
#define ZGAME_RENDER_HPP

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace zgame {

struct Rgb {
    uint8_t r = 0, g = 0, b = 0;
    bool operator==(const Rgb&) const = default;
};

// Seeded value -> color map: a 64-hue wheel in seed-shuffled order plus a
// brightness tier every 64 values, so any set of up to 64 distinct values
// below 256 gets pairwise distinct colors. Same seed, same mapping.
class Palette {
public:
    explicit Palette(uint64_t seed);
    uint64_t seed() const { return seed_; }
    Rgb color(uint64_t value) const;

private:
    uint64_t seed_;
    std::array<uint8_t, 64> hue_order_{};
};

enum class GridLayout { Offset, Square };

// Shared cell model of the figures: logical (row, col0) plus the integer
// fed to the palette. Offset layout shifts row m right by m/2 cells when
// drawn; that is presentation only and does not change the cell list.
struct GridCell {
    uint64_t row = 0;
    uint64_t col = 0;  // 0-based within the row
    uint64_t value = 0;
};

struct CellGrid {
    size_t rows = 0;
    size_t cols = 0;
    GridLayout layout = GridLayout::Square;
    std::vector<GridCell> cells;
};

// Divisibility pattern of the k-th prime over the prime-start triangle:
// cell (m, n-1) present iff k-n is in sierpinski_row(m); its value is the
// generation index m.
CellGrid p_slice_grid(uint32_t k, size_t size, GridLayout layout = GridLayout::Offset);

// Binary-weight square of order t: dense 2^t x 2^t, value delta(2^t*i+j).
CellGrid delta_square_grid(unsigned t);  // 1 <= t <= 10

// Prime-start triangle colored by omega via the closed form; every row
// is a single value 2^delta(m).
CellGrid omega_triangle_grid(size_t depth, GridLayout layout = GridLayout::Offset);

struct RasterImage {
    size_t width = 0, height = 0;
    std::vector<Rgb> pixels;  // row-major

    Rgb& at(size_t x, size_t y) { return pixels[y * width + x]; }
    const Rgb& at(size_t x, size_t y) const { return pixels[y * width + x]; }
    bool operator==(const RasterImage&) const = default;
};

// cell_px must be even for offset layouts (half-cell shifts stay integral).
RasterImage rasterize(const CellGrid& grid, const Palette& palette, unsigned cell_px = 8);

// One rect per cell over a white background; grids above 256 cells per
// side are refused.
std::string to_svg(const CellGrid& grid, const Palette& palette, unsigned cell_px = 8);

RasterImage render_p_slice(uint32_t k, size_t size, const Palette& palette,
                           unsigned cell_px = 8, GridLayout layout = GridLayout::Offset);
RasterImage render_delta_square(unsigned t, const Palette& palette, unsigned cell_px = 8);
RasterImage render_omega_triangle(size_t depth, const Palette& palette,
                                  unsigned cell_px = 8,
                                  GridLayout layout = GridLayout::Offset);

// Binary PPM (P6, maxval 255).
std::string ppm_bytes(const RasterImage& image);
void write_ppm(const RasterImage& image, std::ostream& out);

uint64_t fnv1a64(const void* data, size_t size);
std::string hex64(uint64_t value);

}  // namespace zgame

#endif  // ZGAME_RENDER_HPP
