#include "posh/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "posh/errors.hpp"

namespace posh {

namespace {

// log2 of a positive integer from its top bits, fine for any size
double log2_big(const BigInt& x) {
    const unsigned bits = msb(x) + 1;
    if (bits <= 60) return std::log2(static_cast<double>(x));
    const BigInt top = x >> (bits - 53);
    return std::log2(static_cast<double>(top)) + static_cast<double>(bits - 53);
}

double to_display_x(const Rational& x) {
    // columns are small integers; anything else is still a modest rational
    return static_cast<double>(x);
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Frame {
    double min_x = 0, max_x = 1, min_y = 0, max_y = 1;
    int width, height;
    double margin = 24;

    void fit(const std::vector<std::pair<double, double>>& pts) {
        if (pts.empty()) return;
        min_x = max_x = pts[0].first;
        min_y = max_y = pts[0].second;
        for (auto [x, y] : pts) {
            min_x = std::min(min_x, x);
            max_x = std::max(max_x, x);
            min_y = std::min(min_y, y);
            max_y = std::max(max_y, y);
        }
        if (max_x - min_x < 1e-9) max_x = min_x + 1;
        if (max_y - min_y < 1e-9) max_y = min_y + 1;
    }
    std::string sx(double x) const { return fmt(margin + (x - min_x) / (max_x - min_x) * (width - 2 * margin)); }
    std::string sy(double y) const { return fmt(height - margin - (y - min_y) / (max_y - min_y) * (height - 2 * margin)); }
};

std::string header(int w, int h) {
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w
        << ' ' << h << "\">\n"
        << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
    return out.str();
}

}  // namespace

double display_y(const Rational& y) {
    if (y == 0) return 0;
    const Rational a = abs(y);
    double l;
    if (a < Rational(1LL << 50))
        l = std::log2(1.0 + static_cast<double>(a));
    else
        l = log2_big(numerator(a)) - log2_big(denominator(a));  // 1 + |y| is |y| at this size
    return y < 0 ? -l : l;
}

std::string render_svg(const MultiGraph& g, const Drawing& d, const SvgOptions& opt) {
    if (!d.certified && !opt.force) throw PreconditionError("render: drawing is not certified (use force)");
    const int n = g.num_vertices();
    if (static_cast<int>(d.placement.size()) < n) throw StructuralError("render: drawing misses vertices");
    auto at = [](const RatPoint& p) { return std::pair{to_display_x(p.x), display_y(p.y)}; };

    std::vector<std::pair<double, double>> all;
    for (VertexId v = 0; v < n; ++v) {
        if (!d.placement[v]) throw StructuralError("render: vertex " + std::to_string(v) + " is not placed");
        all.push_back(at(*d.placement[v]));
    }
    for (const auto& [e, pts] : d.bends)
        for (const auto& p : pts) all.push_back(at(p));
    if (opt.points)
        for (PointRef r : opt.points->refs()) all.push_back(at(to_rational(opt.points->at(r))));
    Frame f{.width = opt.width, .height = opt.height};
    f.fit(all);

    std::ostringstream out;
    out << header(opt.width, opt.height);
    if (opt.points) {
        out << "<g class=\"points\" fill=\"#bbbbbb\">\n";
        for (PointRef r : opt.points->refs()) {
            auto [x, y] = at(to_rational(opt.points->at(r)));
            out << "<circle class=\"point\" cx=\"" << f.sx(x) << "\" cy=\"" << f.sy(y) << "\" r=\"2\"/>\n";
        }
        out << "</g>\n";
    }
    out << "<g class=\"edges\" fill=\"none\" stroke-width=\"1.5\">\n";
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const EdgeTone tone = e < static_cast<EdgeId>(opt.tones.size()) ? opt.tones[e] : EdgeTone::Plain;
        const char* color = tone == EdgeTone::Red ? "#c0392b" : tone == EdgeTone::Blue ? "#2e5fa8" : "#333333";
        std::vector<std::pair<double, double>> line = {at(*d.placement[g.edge(e).u])};
        if (auto it = d.bends.find(e); it != d.bends.end())
            for (const auto& p : it->second) line.push_back(at(p));
        line.push_back(at(*d.placement[g.edge(e).v]));
        out << "<polyline class=\"edge\" stroke=\"" << color << "\" points=\"";
        for (std::size_t i = 0; i < line.size(); ++i)
            out << (i ? " " : "") << f.sx(line[i].first) << ',' << f.sy(line[i].second);
        out << "\"/>\n";
    }
    out << "</g>\n<g class=\"vertices\">\n";
    for (VertexId v = 0; v < n; ++v) {
        auto [x, y] = at(*d.placement[v]);
        std::string cls = "vertex";
        const char* fill = "#000000";
        if (v < static_cast<VertexId>(opt.inside.size())) {
            cls += opt.inside[v] ? " inner" : " outer";
            fill = opt.inside[v] ? "#e67e22" : "#16a085";
        }
        out << "<circle class=\"" << cls << "\" cx=\"" << f.sx(x) << "\" cy=\"" << f.sy(y) << "\" r=\"4\" fill=\""
            << fill << "\"/>\n";
        if (opt.labels)
            out << "<text x=\"" << f.sx(x) << "\" y=\"" << f.sy(y) << "\" dx=\"5\" dy=\"-5\" font-size=\"10\">" << v
                << "</text>\n";
    }
    out << "</g>\n</svg>\n";
    return out.str();
}

std::string render_pointset_svg(const PointSet& ps, int width, int height) {
    std::vector<std::pair<double, double>> pts;
    for (PointRef r : ps.refs()) {
        const RatPoint p = to_rational(ps.at(r));
        pts.push_back({to_display_x(p.x), display_y(p.y)});
    }
    Frame f{.width = width, .height = height};
    f.fit(pts);
    std::ostringstream out;
    out << header(width, height) << "<g class=\"points\">\n";
    const auto refs = ps.refs();
    for (std::size_t i = 0; i < refs.size(); ++i)
        out << "<circle class=\"point\" cx=\"" << f.sx(pts[i].first) << "\" cy=\"" << f.sy(pts[i].second)
            << "\" r=\"3\"><title>" << refs[i].name() << "</title></circle>\n";
    out << "</g>\n</svg>\n";
    return out.str();
}

}  // namespace posh
