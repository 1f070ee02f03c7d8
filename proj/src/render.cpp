#include "cae/render.hpp"

#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>

namespace cae {

namespace {

constexpr double kPi = 3.14159265358979323846;

std::string fmt(double v)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

struct Layout {
    double cx, cy, radius;
    int n;

    /* Monotone squashing of offsets into (0, 1): large offsets approach the
     * anticlockwise end of the segment, large negative ones the clockwise end. */
    static double squash(long long k)
    {
        return 1.0 / (1.0 + std::exp(-0.35 * static_cast<double>(k)));
    }

    double angle(const MarkedPoint& p) const
    {
        const double base = 2.0 * kPi / n;
        if (p.is_acc())
            return base * p.index;
        return base * (p.index + squash(p.offset));
    }

    /* Model angles increase anticlockwise; flip y so the screen agrees. */
    std::pair<double, double> at_angle(double a, double r) const
    {
        return {cx + r * std::cos(a), cy - r * std::sin(a)};
    }

    std::pair<double, double> point(const MarkedPoint& p) const
    {
        return at_angle(angle(p), radius);
    }
};

void emit_block_shade(std::ostringstream& out, const Layout& lay, const Surface& surface,
                      std::uint64_t mask)
{
    // Angular interval per site in the block, sorted by start angle.
    const double seg = 2.0 * kPi / lay.n;
    const double pad = 0.06 * seg;
    std::vector<std::pair<double, double>> spans;
    for (int num = 1; num <= surface.sites(); ++num) {
        if (!(mask & (1ULL << (num - 1))))
            continue;
        const Site site = site_from_number(num, surface);
        const double base = seg * site.index;
        if (site.accumulation)
            spans.emplace_back(base - pad, base + pad);
        else
            spans.emplace_back(base + pad, base + seg - pad);
    }
    if (spans.empty())
        return;
    std::sort(spans.begin(), spans.end());

    std::ostringstream d;
    const auto start = lay.at_angle(spans[0].first, lay.radius);
    d << "M " << fmt(start.first) << " " << fmt(start.second);
    for (std::size_t i = 0; i < spans.size(); ++i) {
        const auto from = lay.at_angle(spans[i].first, lay.radius);
        const auto to = lay.at_angle(spans[i].second, lay.radius);
        if (i > 0)
            d << " L " << fmt(from.first) << " " << fmt(from.second);
        const int large = (spans[i].second - spans[i].first) > kPi ? 1 : 0;
        d << " A " << fmt(lay.radius) << " " << fmt(lay.radius) << " 0 " << large << " 0 "
          << fmt(to.first) << " " << fmt(to.second);
    }
    d << " Z";
    out << "  <path d=\"" << d.str() << "\" fill=\"#888888\" fill-opacity=\"0.25\" stroke=\"none\"/>\n";
}

}  // namespace

std::string render_svg(const RenderSpec& spec)
{
    const Surface& surface = spec.surface;
    if (spec.shaded && spec.shaded->m != surface.sites())
        throw_domain("BadInput", "shaded partition ground set must be [2n]");

    const double w = spec.width, h = spec.height;
    const Layout lay{w / 2.0, h / 2.0, 0.42 * std::min(w, h), surface.n()};

    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << spec.width
        << "\" height=\"" << spec.height << "\" viewBox=\"0 0 " << spec.width << " " << spec.height
        << "\">\n";

    if (spec.shaded)
        for (std::uint64_t mask : spec.shaded->blocks)
            emit_block_shade(out, lay, surface, mask);

    out << "  <circle cx=\"" << fmt(lay.cx) << "\" cy=\"" << fmt(lay.cy) << "\" r=\""
        << fmt(lay.radius) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1.5\"/>\n";

    for (const RenderArc& ra : spec.arcs) {
        const auto p1 = lay.point(ra.arc.a);
        const auto p2 = lay.point(ra.arc.b);
        // Quadratic chord pulled toward the centre.
        const double mx = (p1.first + p2.first) / 2.0, my = (p1.second + p2.second) / 2.0;
        const double qx = lay.cx + (mx - lay.cx) * 0.55, qy = lay.cy + (my - lay.cy) * 0.55;
        out << "  <path d=\"M " << fmt(p1.first) << " " << fmt(p1.second) << " Q " << fmt(qx)
            << " " << fmt(qy) << " " << fmt(p2.first) << " " << fmt(p2.second)
            << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
        if (!ra.label.empty()) {
            const double tx = 0.25 * p1.first + 0.5 * qx + 0.25 * p2.first;
            const double ty = 0.25 * p1.second + 0.5 * qy + 0.25 * p2.second;
            out << "  <text x=\"" << fmt(tx) << "\" y=\"" << fmt(ty)
                << "\" font-size=\"11\" font-family=\"serif\">" << ra.label << "</text>\n";
        }
    }

    std::set<std::pair<long long, long long>> drawn;
    for (const RenderArc& ra : spec.arcs)
        for (const MarkedPoint& p : {ra.arc.a, ra.arc.b}) {
            if (p.is_acc())
                continue;
            if (!drawn.insert(linear_key(p)).second)
                continue;
            const auto xy = lay.point(p);
            out << "  <circle cx=\"" << fmt(xy.first) << "\" cy=\"" << fmt(xy.second)
                << "\" r=\"2.5\" fill=\"black\"/>\n";
        }

    // Open circles mark the accumulation points.
    for (int i = 0; i < surface.n(); ++i) {
        const auto xy = lay.point(acc_point(surface, i));
        out << "  <circle cx=\"" << fmt(xy.first) << "\" cy=\"" << fmt(xy.second)
            << "\" r=\"5\" fill=\"white\" stroke=\"black\" stroke-width=\"1.2\"/>\n";
    }

    out << "</svg>\n";
    return out.str();
}

}  // namespace cae
