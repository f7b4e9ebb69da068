#pragma once

#include <algorithm>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "symbidisc/json.hpp"
#include "symbidisc/svg.hpp"

// Command-line surface: distance, classification, direction typing,
// projection and chart queries with JSON output, and SVG rendering of the
// real slice.  Exit codes: 0 success, 2 domain error (e.g. a point outside
// G), 3 parse error.

namespace symbidisc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 2;
inline constexpr int kExitParse = 3;

inline int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"hyperbolic geometry of the symmetrized bidisc G"};
    app.name("symbidisc");
    app.fallthrough();
    double eps = -1.0;
    app.add_option("--eps", eps,
                   "override every tolerance knob with one value")
        ->envname("SYMB_EPS");

    std::string a_text, b_text, at_text, v_text, beta_text, mu_text;
    std::string eta1_text, eta2_text, out_path;
    double t = 0.0, u = 0.0;
    int leaves = 12, beta_lines = 9;
    bool infinitesimal = false;

    CLI::App* dist = app.add_subcommand("dist", "hyperbolic distance of a datum");
    dist->add_option("--a", a_text, "first point [[re,im],[re,im]]")->required();
    dist->add_option("--b", b_text, "second point, or tangent pair with --infinitesimal")
        ->required();
    dist->add_flag("--infinitesimal", infinitesimal,
                   "treat --b as a tangent vector at --a");

    CLI::App* classify_cmd = app.add_subcommand("classify", "geodesic through two points");
    classify_cmd->add_option("--a", a_text)->required();
    classify_cmd->add_option("--b", b_text)->required();

    CLI::App* direction = app.add_subcommand("direction", "type of a direction at a point");
    direction->add_option("--at", at_text)->required();
    direction->add_option("--v", v_text, "tangent pair [[re,im],[re,im]]")->required();

    CLI::App* project = app.add_subcommand("project", "closest point on a flat geodesic");
    project->add_option("--beta", beta_text, "flat coordinate [re,im]")->required();
    project->add_option("--mu", mu_text)->required();

    CLI::App* chart_cmd = app.add_subcommand("chart", "distinguished-geodesic coordinates");
    chart_cmd->add_option("--at", at_text)->required();

    CLI::App* unchart_cmd = app.add_subcommand("unchart", "invert the chart");
    unchart_cmd->add_option("--eta1", eta1_text)->required();
    unchart_cmd->add_option("--eta2", eta2_text)->required();
    unchart_cmd->add_option("--t", t)->required();
    unchart_cmd->add_option("--u", u)->required();

    CLI::App* plot = app.add_subcommand("plot-real-slice", "SVG of the real slice");
    plot->add_option("--out", out_path, "output SVG path")->required();
    plot->add_option("--leaves", leaves, "number of orthogonal-leaf curves");
    plot->add_option("--beta-lines", beta_lines, "number of flat traces");

    app.require_subcommand(1);

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitParse;
    }

    const Tolerances tol = eps > 0.0 ? Tolerances::uniform(eps) : Tolerances{};
    const auto need_member = [&](const GPoint& g, const char* name) {
        if (!contains(g, tol)) {
            err << name << ": point is not in G\n";
            return false;
        }
        return true;
    };

    try {
        if (*dist) {
            const GPoint a = io::parse_gpoint(a_text);
            if (!need_member(a, "--a")) return kExitDomain;
            Datum d;
            if (infinitesimal) {
                const auto [v1, v2] = io::parse_pair(b_text);
                d = Datum::tangent(a, v1, v2);
            } else {
                const GPoint b = io::parse_gpoint(b_text);
                if (!need_member(b, "--b")) return kExitDomain;
                d = Datum::discrete(a, b);
            }
            out << io::to_json(caratheodory(d, tol)).dump() << "\n";
        } else if (*classify_cmd) {
            const GPoint a = io::parse_gpoint(a_text);
            const GPoint b = io::parse_gpoint(b_text);
            if (!need_member(a, "--a") || !need_member(b, "--b")) return kExitDomain;
            out << io::to_json(connect(a, b, tol)).dump() << "\n";
        } else if (*direction) {
            const GPoint at = io::parse_gpoint(at_text);
            if (!need_member(at, "--at")) return kExitDomain;
            const auto [v1, v2] = io::parse_pair(v_text);
            out << io::to_json(direction_type(at, Direction(v1, v2), tol)).dump() << "\n";
        } else if (*project) {
            const Complex beta = io::parse_complex(beta_text);
            const GPoint mu = io::parse_gpoint(mu_text);
            if (!need_member(mu, "--mu")) return kExitDomain;
            if (std::abs(beta) >= 1.0) {
                err << "--beta: flat coordinate must lie in the unit disc\n";
                return kExitDomain;
            }
            const OrthoLeaf leaf = orthogonal_geodesic(beta, mu, tol);
            out << io::to_json(leaf).dump() << "\n";
        } else if (*chart_cmd) {
            const GPoint at = io::parse_gpoint(at_text);
            if (!need_member(at, "--at")) return kExitDomain;
            out << io::to_json(chart(at, tol)).dump() << "\n";
        } else if (*unchart_cmd) {
            ChartCoord cc;
            cc.eta1 = io::parse_complex(eta1_text);
            cc.eta2 = io::parse_complex(eta2_text);
            cc.t = t;
            cc.u = u;
            out << io::to_json(unchart(cc, tol)).dump() << "\n";
        } else if (*plot) {
            svg::PlotOptions opt;
            opt.leaves = leaves;
            opt.beta_lines = beta_lines;
            std::ofstream file(out_path);
            if (!file) {
                err << "cannot open " << out_path << " for writing\n";
                return kExitParse;
            }
            file << svg::render_real_slice(opt);
        }
    } catch (const nlohmann::json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::domain_error& e) {
        err << e.what() << "\n";
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << e.what() << "\n";
        return kExitDomain;
    }
    return kExitOk;
}

} // namespace symbidisc::cli
