#pragma once

#include "termirial/numbers.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace termirial::fractal {

inline constexpr int kMaxOrder = 12;
inline constexpr std::uint64_t kDefaultCellBudget = 10'000'000;

struct Cell {
    std::uint64_t x;
    std::uint64_t y;  // grows upward

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// Grey cells of the order-p figure for n, on a grid of 2^p cells per base
/// square side.
///
/// Layout: the order-0 figure is a row of n cells. The order-p figure
/// stacks the order-(p-1) figures for k = 1..n, each scaled by 1/2, as
/// horizontal bands from the bottom up, left-aligned at x = 0.
struct FractalFigure {
    std::uint64_t n = 0;
    int p = 0;
    Rational cell_side;            // 1 / 2^p, in base-square units
    std::vector<Cell> grey_cells;  // sorted, distinct
    std::uint64_t width = 0;       // bounding box, in cells
    std::uint64_t height = 0;

    std::uint64_t grey_count() const noexcept { return grey_cells.size(); }
};

/// Domain n >= 1, 0 <= p <= kMaxOrder. Throws GuardExceeded when the figure
/// would hold more than `cell_budget` cells.
FractalFigure build(std::uint64_t n, int p, std::uint64_t cell_budget = kDefaultCellBudget);

/// Total grey area, cell_side^2 * |grey_cells|, in base-square units.
Rational surface(const FractalFigure& fig);

struct SurfaceReport {
    std::uint64_t n = 0;
    int p = 0;
    /// Closed form 4(p+n)/(p+1).
    Rational ratio;
    /// log2(ratio).
    double dimension_estimate = 0.0;

    /// Measured from built figures: S_{p-1} (order p-1, cells twice the side)
    /// over S_p. Absent when either figure is outside the build guard.
    std::optional<Rational> measured_ratio;
    std::optional<Rational> surface_prev;
    std::optional<Rational> surface_curr;
    std::optional<double> measured_dimension;

    /// True when the measured ratio is present and equals the closed form.
    bool consistent() const { return measured_ratio && *measured_ratio == ratio; }
};

/// Domain n >= 1, p >= 1.
SurfaceReport surface_report(std::uint64_t n, int p, std::uint64_t cell_budget = kDefaultCellBudget);

/// 4(p+n)/(p+1) as an exact rational.
Rational closed_form_ratio(std::uint64_t n, int p);

enum class Format { svg, ascii };

/// Deterministic text rendering; cells are emitted in sorted order.
std::string render(const FractalFigure& fig, Format format);

}  // namespace termirial::fractal
