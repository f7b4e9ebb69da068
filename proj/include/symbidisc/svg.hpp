#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "symbidisc/geodesic.hpp"

// SVG rendering of the real slice {pi(x, y) : x, y in (-1, 1)} of G with its
// foliations.  All five geodesic families leave real traces here: the royal
// parabola s^2 = 4p, the flat lines s = beta (1 + p) for real beta, the
// leaves B_{b_r} orthogonal to F^0 for real r, and distinguished Xi traces
// of conjugated purely balanced geodesics.

namespace symbidisc::svg {

struct PlotOptions {
    int leaves = 12;       // orthogonal-leaf curves (>= 10 by default)
    int beta_lines = 9;    // flat traces
    int width = 840;
    int height = 480;
};

namespace detail {

struct Mapper {
    double width, height;
    // math window
    static constexpr double s_lo = -2.1, s_hi = 2.1;
    static constexpr double p_lo = -1.15, p_hi = 1.2;

    double x(double s) const { return (s - s_lo) / (s_hi - s_lo) * width; }
    double y(double p) const { return (p_hi - p) / (p_hi - p_lo) * height; }
};

inline std::string polyline(const Mapper& m, const std::vector<std::pair<double, double>>& pts,
                            const std::string& stroke, const std::string& extra = "") {
    std::ostringstream os;
    os << "    <polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1\" ";
    if (!extra.empty()) os << extra << " ";
    os << "points=\"";
    for (size_t i = 0; i < pts.size(); ++i) {
        if (i) os << " ";
        os << m.x(pts[i].first) << "," << m.y(pts[i].second);
    }
    os << "\"/>\n";
    return os.str();
}

inline std::vector<std::pair<double, double>> trace_h(const MoebiusAut& m,
                                                      const MoebiusAut& post) {
    std::vector<std::pair<double, double>> pts;
    const int n = 240;
    for (int i = 0; i <= n; ++i) {
        const double x = -0.999 + 1.998 * i / n;
        const Complex z = post(Complex{x, 0.0});
        const Complex w = post(m(Complex{x, 0.0}));
        pts.emplace_back(std::real(z + w), std::real(z * w));
    }
    return pts;
}

} // namespace detail

inline std::string render_real_slice(const PlotOptions& opt = {}) {
    const detail::Mapper map{double(opt.width), double(opt.height)};
    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
       << "width=\"" << opt.width << "\" height=\"" << opt.height << "\" "
       << "viewBox=\"0 0 " << opt.width << " " << opt.height << "\">\n"
       << "  <title>real slice of the symmetrized bidisc</title>\n";

    // region boundary: parabola above, the two edge lines p = s - 1, p = -s - 1 below
    os << "  <g id=\"boundary\">\n";
    {
        std::vector<std::pair<double, double>> par, lo1, lo2;
        for (int i = 0; i <= 200; ++i) {
            const double s = -2.0 + 4.0 * i / 200;
            par.emplace_back(s, 0.25 * s * s);
        }
        for (int i = 0; i <= 50; ++i) {
            const double s = 2.0 * i / 50;
            lo1.emplace_back(s, s - 1.0);
            lo2.emplace_back(-s, s - 1.0);
        }
        os << detail::polyline(map, par, "#888");
        os << detail::polyline(map, lo1, "#888");
        os << detail::polyline(map, lo2, "#888");
    }
    os << "  </g>\n";

    os << "  <g id=\"royal\">\n";
    {
        std::vector<std::pair<double, double>> par;
        for (int i = 0; i <= 240; ++i) {
            const double z = -0.999 + 1.998 * i / 240;
            par.emplace_back(2.0 * z, z * z);
        }
        os << detail::polyline(map, par, "#c0392b", "stroke-width=\"1.6\"");
    }
    os << "  </g>\n";

    os << "  <g id=\"flats\">\n";
    for (int k = 0; k < opt.beta_lines; ++k) {
        const double beta = -0.9 + 1.8 * k / std::max(1, opt.beta_lines - 1);
        std::vector<std::pair<double, double>> line;
        for (int i = 0; i <= 100; ++i) {
            const double p = -0.999 + 1.998 * i / 100;
            line.emplace_back(beta * (1.0 + p), p);
        }
        os << detail::polyline(map, line, "#2980b9");
    }
    os << "  </g>\n";

    // leaves of the foliation orthogonal to F^0: B_{b_r} for real r
    os << "  <g id=\"ortho-leaves\">\n";
    {
        const int half = (opt.leaves + 1) / 2;
        for (int k = 1; k <= half; ++k) {
            const double r = 0.97 * k / (half + 0.25);
            os << detail::polyline(map,
                                   detail::trace_h(MoebiusAut::blaschke(Complex{r, 0.0}),
                                                   MoebiusAut::identity()),
                                   "#27ae60");
            os << detail::polyline(map,
                                   detail::trace_h(MoebiusAut::blaschke(Complex{-r, 0.0}),
                                                   MoebiusAut::identity()),
                                   "#27ae60");
        }
    }
    os << "  </g>\n";

    // distinguished Xi traces: real conjugates gamma_{b_t}(B_{b_r})
    os << "  <g id=\"distinguished\">\n";
    for (const double t : {-0.45, 0.45}) {
        for (const double r : {0.35, 0.7}) {
            const MoebiusAut bt = MoebiusAut::blaschke(Complex{t, 0.0});
            os << detail::polyline(map, detail::trace_h(MoebiusAut::blaschke(Complex{r, 0.0}), bt),
                                   "#8e44ad", "stroke-dasharray=\"4 3\"");
        }
    }
    os << "  </g>\n";

    os << "</svg>\n";
    return os.str();
}

} // namespace symbidisc::svg
