#include "termirial/fractal.hpp"

#include "termirial/core.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace termirial::fractal {

namespace {

// heights[q][k] = height in cells of the order-q figure for k.
using HeightTable = std::vector<std::vector<std::uint64_t>>;

HeightTable band_heights(std::uint64_t n, int p) {
    HeightTable h(static_cast<std::size_t>(p) + 1, std::vector<std::uint64_t>(n + 1, 0));
    for (std::uint64_t k = 1; k <= n; ++k) h[0][k] = 1;
    for (int q = 1; q <= p; ++q) {
        for (std::uint64_t k = 1; k <= n; ++k) h[q][k] = h[q][k - 1] + h[q - 1][k];
    }
    return h;
}

void emit(std::uint64_t k, int q, std::uint64_t y0, const HeightTable& heights, std::vector<Cell>& out) {
    if (q == 0) {
        for (std::uint64_t x = 0; x < k; ++x) out.push_back({x, y0});
        return;
    }
    std::uint64_t y = y0;
    for (std::uint64_t j = 1; j <= k; ++j) {
        emit(j, q - 1, y, heights, out);
        y += heights[q - 1][j];
    }
}

double log2_of(const Rational& r) {
    using boost::multiprecision::denominator;
    using boost::multiprecision::numerator;
    return std::log2(static_cast<double>(numerator(r))) - std::log2(static_cast<double>(denominator(r)));
}

Rational pow2_inverse(int p) {
    return Rational(Natural(1), Natural(1) << p);
}

}  // namespace

FractalFigure build(std::uint64_t n, int p, std::uint64_t cell_budget) {
    if (n < 1) throw std::invalid_argument("fractal needs n >= 1");
    if (p < 0) throw std::invalid_argument("fractal needs order >= 0");
    if (p > kMaxOrder) throw GuardExceeded("fractal order must be <= " + std::to_string(kMaxOrder));
    const Natural expected = termirial_p(n, Order(p));
    if (expected > cell_budget) {
        throw GuardExceeded("figure would have " + to_decimal(expected) + " cells, budget is " +
                            std::to_string(cell_budget));
    }

    FractalFigure fig;
    fig.n = n;
    fig.p = p;
    fig.cell_side = pow2_inverse(p);
    const HeightTable heights = band_heights(n, p);
    fig.grey_cells.reserve(static_cast<std::size_t>(expected));
    emit(n, p, 0, heights, fig.grey_cells);
    std::sort(fig.grey_cells.begin(), fig.grey_cells.end());
    fig.width = n;
    fig.height = heights[static_cast<std::size_t>(p)][n];
    return fig;
}

Rational surface(const FractalFigure& fig) {
    return fig.cell_side * fig.cell_side * Rational(fig.grey_count());
}

Rational closed_form_ratio(std::uint64_t n, int p) {
    return Rational(Natural(4) * (Natural(p) + n), Natural(p + 1));
}

SurfaceReport surface_report(std::uint64_t n, int p, std::uint64_t cell_budget) {
    if (n < 1) throw std::invalid_argument("surface report needs n >= 1");
    if (p < 1) throw std::invalid_argument("surface report needs order >= 1");

    SurfaceReport report;
    report.n = n;
    report.p = p;
    report.ratio = closed_form_ratio(n, p);
    report.dimension_estimate = log2_of(report.ratio);

    const bool buildable = p <= kMaxOrder && termirial_p(n, Order(p)) <= cell_budget;
    if (buildable) {
        const FractalFigure coarse = build(n, p - 1, cell_budget);
        const FractalFigure fine = build(n, p, cell_budget);
        report.surface_prev = surface(coarse);
        report.surface_curr = surface(fine);
        report.measured_ratio = *report.surface_prev / *report.surface_curr;
        report.measured_dimension = log2_of(*report.measured_ratio);
    }
    return report;
}

std::string render(const FractalFigure& fig, Format format) {
    std::ostringstream out;
    if (format == Format::ascii) {
        std::vector<std::string> rows(fig.height, std::string(fig.width, '.'));
        for (const Cell& c : fig.grey_cells) rows[fig.height - 1 - c.y][c.x] = '#';
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r != 0) out << '\n';
            out << rows[r];
        }
        return out.str();
    }

    constexpr int kPixelsPerCell = 8;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fig.width * kPixelsPerCell
        << "\" height=\"" << fig.height * kPixelsPerCell << "\" viewBox=\"0 0 " << fig.width << ' ' << fig.height
        << "\">\n"
        << "<g fill=\"#808080\" stroke=\"#000000\" stroke-width=\"1\" vector-effect=\"non-scaling-stroke\">\n";
    for (const Cell& c : fig.grey_cells) {
        out << "<rect x=\"" << c.x << "\" y=\"" << fig.height - 1 - c.y
            << "\" width=\"1\" height=\"1\" vector-effect=\"non-scaling-stroke\"/>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace termirial::fractal
