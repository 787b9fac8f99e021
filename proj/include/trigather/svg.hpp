#pragma once

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <vector>

#include "trigather/config.hpp"

namespace trigather {

/// Deterministic SVG snapshot of a configuration: lattice edges around the
/// occupied region, one circle per occupied vertex, a numeral for
/// multiplicities above one, and optionally the bounding polygon outline.
inline std::string emit_svg(const Configuration& c,
                            const BoundingPolygon* polygon = nullptr) {
    constexpr double kScale = 48.0;  // pixels per Euclidean unit
    constexpr int kMarginCols = 2;
    constexpr int kMarginHrows = 4;

    std::vector<GridPoint> occupied;
    for (const auto& [p, count] : c.occupancy()) occupied.push_back(p);
    std::sort(occupied.begin(), occupied.end());

    int col_lo = occupied.front().col, col_hi = col_lo;
    int hrow_lo = occupied.front().hrow, hrow_hi = hrow_lo;
    for (GridPoint p : occupied) {
        col_lo = std::min(col_lo, p.col);
        col_hi = std::max(col_hi, p.col);
        hrow_lo = std::min(hrow_lo, p.hrow);
        hrow_hi = std::max(hrow_hi, p.hrow);
    }
    if (polygon) {
        const Ser& s = polygon->ser;
        col_lo = std::min(col_lo, s.col_min);
        col_hi = std::max(col_hi, s.col_max);
        hrow_hi = std::max(hrow_hi, s.hrow_max + 1);
        hrow_lo = std::min({hrow_lo, s.c.hrow,
                            s.hrow_min - (s.col_max - s.col_min + 1) / 2});
    }
    col_lo -= kMarginCols;
    col_hi += kMarginCols;
    hrow_lo -= kMarginHrows;
    hrow_hi += kMarginHrows;

    // SVG y grows downward; flip the Euclidean y. Extent corners may be
    // off-lattice, so this skips the validity check.
    auto px = [&](GridPoint p) {
        constexpr double kColPitch = 0.8660254037844386467637231707529362;
        return std::pair<double, double>{p.col * kColPitch * kScale,
                                         -p.hrow * 0.5 * kScale};
    };

    std::ostringstream out;
    out << std::fixed << std::setprecision(2);
    const auto [x0, y1] = px({col_lo, hrow_lo});
    const auto [x1, y0] = px({col_hi, hrow_hi});
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << (x0 - 24)
        << " " << (y0 - 24) << " " << (x1 - x0 + 48) << " " << (y1 - y0 + 48)
        << "\">\n";

    out << "<g stroke=\"#d0d0d0\" stroke-width=\"1\">\n";
    for (int col = col_lo; col <= col_hi; ++col) {
        for (int hrow = hrow_lo; hrow <= hrow_hi; ++hrow) {
            const GridPoint p{col, hrow};
            if (!is_valid(p)) continue;
            // draw each edge once: only the three rightward/upward directions
            for (Direction d : {Direction::Up, Direction::UpRight, Direction::DownRight}) {
                const GridPoint q = step_towards(p, d);
                if (q.col > col_hi || q.hrow > hrow_hi || q.hrow < hrow_lo) continue;
                const auto [ax, ay] = px(p);
                const auto [bx, by] = px(q);
                out << "<line x1=\"" << ax << "\" y1=\"" << ay << "\" x2=\"" << bx
                    << "\" y2=\"" << by << "\"/>\n";
            }
        }
    }
    out << "</g>\n";

    if (polygon) {
        const Ser& s = polygon->ser;
        const auto [ax, ay] = px(s.a);
        const auto [bx, by] = px(s.b);
        const auto [cx, cy] = px(s.c);
        const auto [dx, dy] = px(s.d);
        const Vec2 apex = polygon->apex();
        out << "<path d=\"M " << ax << " " << ay << " L " << bx << " " << by
            << " L " << apex.x * kScale << " " << -apex.y * kScale << " L " << cx
            << " " << cy << " L " << dx << " " << dy
            << " Z\" fill=\"none\" stroke=\"#c03030\" stroke-width=\"2\" "
               "stroke-dasharray=\"6 4\"/>\n";
    }

    for (GridPoint p : occupied) {
        const auto [x, y] = px(p);
        out << "<circle cx=\"" << x << "\" cy=\"" << y
            << "\" r=\"9\" fill=\"#3a6ea5\" stroke=\"#1d3c5c\"/>\n";
        const int count = c.count_at(p);
        if (count > 1) {
            out << "<text x=\"" << x << "\" y=\"" << (y + 4)
                << "\" font-size=\"11\" text-anchor=\"middle\" fill=\"#ffffff\">"
                << count << "</text>\n";
        }
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace trigather
