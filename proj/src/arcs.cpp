#include "cae/arcs.hpp"

#include <algorithm>
#include <array>

namespace cae {

const char* to_string(ArcKind k)
{
    switch (k) {
        case ArcKind::Short: return "short";
        case ArcKind::Long: return "long";
        case ArcKind::Limit: return "limit";
        case ArcKind::DoubleLimit: return "double_limit";
    }
    return "?";
}

bool valid_arc_pair(const MarkedPoint& p, const MarkedPoint& q)
{
    if (p == q)
        return false;
    if (p.is_reg() && q.is_reg() && p.index == q.index) {
        const long long d = p.offset - q.offset;
        return d <= -2 || d >= 2;
    }
    return true;
}

Arc make_arc(const MarkedPoint& p, const MarkedPoint& q)
{
    if (!valid_arc_pair(p, q))
        throw_domain("InvalidArc", "endpoints are equal or adjacent");
    if (point_lt(p, q))
        return Arc{p, q};
    return Arc{q, p};
}

std::optional<Arc> try_make_arc(const MarkedPoint& p, const MarkedPoint& q)
{
    if (!valid_arc_pair(p, q))
        return std::nullopt;
    if (point_lt(p, q))
        return Arc{p, q};
    return Arc{q, p};
}

ArcKind classify(const Arc& x)
{
    const bool aa = x.a.is_acc();
    const bool ba = x.b.is_acc();
    if (aa && ba)
        return ArcKind::DoubleLimit;
    if (aa || ba)
        return ArcKind::Limit;
    return x.a.index == x.b.index ? ArcKind::Short : ArcKind::Long;
}

Arc suspend(const Arc& x, long long j)
{
    auto move = [j](MarkedPoint p) {
        if (p.is_acc())
            return p;
        p.offset -= j;  // [1] is the clockwise rotation {a-, b-}
        return p;
    };
    MarkedPoint p = move(x.a), q = move(x.b);
    return point_lt(p, q) ? Arc{p, q} : Arc{q, p};
}

bool crosses(const Arc& x, const Arc& y)
{
    if (x.a == y.a || x.a == y.b || x.b == y.a || x.b == y.b)
        return false;
    const bool in1 = cyclic_lt(x.a, y.a, x.b);
    const bool in2 = cyclic_lt(x.a, y.b, x.b);
    return in1 != in2;
}

namespace {

/* Shared endpoint of two distinct arcs, if any. */
std::optional<MarkedPoint> shared_endpoint(const Arc& x, const Arc& y)
{
    if (x.a == y.a || x.a == y.b)
        return x.a;
    if (x.b == y.a || x.b == y.b)
        return x.b;
    return std::nullopt;
}

MarkedPoint other_endpoint(const Arc& x, const MarkedPoint& p)
{
    return x.a == p ? x.b : x.a;
}

/* l_Y is a strict anticlockwise rotation of l_X about a shared accumulation
 * endpoint. */
bool limit_rotation(const Arc& x, const Arc& y)
{
    if (x == y)
        return false;
    auto s = shared_endpoint(x, y);
    if (!s || !s->is_acc())
        return false;
    const MarkedPoint fx = other_endpoint(x, *s);
    const MarkedPoint fy = other_endpoint(y, *s);
    return cyclic_lt(*s, fx, fy);
}

}  // namespace

int ext1_dim(const Arc& x, const Arc& y)
{
    if (crosses(x, y))
        return 1;
    return limit_rotation(x, y) ? 1 : 0;
}

int hom_dim(const Arc& x, const Arc& y)
{
    return ext1_dim(x, suspend(y, -1));
}

ConeData extension_middle(const Arc& x, const Arc& y)
{
    if (ext1_dim(y, x) != 1)
        throw_domain("NoExtension", "Ext^1(Y, X) = 0: no triangle X -> M -> Y -> X[1]");

    ConeData cone;
    if (crosses(x, y)) {
        cone.kind = TriangleKind::CrossingPair;
        // Label so that x0 < y0 < x1 < y1 anticlockwise; the middle of
        // X -> M -> Y -> X[1] is then {x0, y1} + {y0, x1}.
        const MarkedPoint x0 = x.a, x1 = x.b;
        MarkedPoint y0 = y.a, y1 = y.b;
        if (!cyclic_lt(x0, y0, x1))
            std::swap(y0, y1);
        if (auto m = try_make_arc(x0, y1))
            cone.middle.push_back(*m);
        if (auto m = try_make_arc(y0, x1))
            cone.middle.push_back(*m);
    } else {
        cone.kind = TriangleKind::LimitRotation;
        const auto s = shared_endpoint(x, y);
        // l_X is an anticlockwise rotation of l_Y about *s; the middle is the
        // arc on the two free endpoints.
        if (auto m = try_make_arc(other_endpoint(x, *s), other_endpoint(y, *s)))
            cone.middle.push_back(*m);
    }
    std::sort(cone.middle.begin(), cone.middle.end());
    return cone;
}

namespace {

/* Travelling anticlockwise from `start`, the points appear in the listed
 * order.  A point may coincide with its predecessor in the list only where
 * allow_eq_prev permits; coinciding with `start` again means the chain
 * wrapped the full circle and fails. */
bool chain_in_order(const MarkedPoint& start, const std::vector<MarkedPoint>& pts,
                    const std::vector<bool>& allow_eq_prev)
{
    MarkedPoint prev = start;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i] == prev) {
            if (!allow_eq_prev[i])
                return false;
            continue;
        }
        if (pts[i] == start)
            return false;
        if (prev != start && !cyclic_lt(start, prev, pts[i]))
            return false;
        prev = pts[i];
    }
    return true;
}

}  // namespace

bool factors_through(const Arc& x, const Arc& y, const Arc& s)
{
    if (hom_dim(x, y) != 1)
        throw_domain("NoMorphism", "Hom(X, Y) = 0");

    const std::array<std::pair<MarkedPoint, MarkedPoint>, 2> xl = {
        std::pair{x.a, x.b}, std::pair{x.b, x.a}};
    const std::array<std::pair<MarkedPoint, MarkedPoint>, 2> yl = {
        std::pair{y.a, y.b}, std::pair{y.b, y.a}};
    const std::array<std::pair<MarkedPoint, MarkedPoint>, 2> sl = {
        std::pair{s.a, s.b}, std::pair{s.b, s.a}};

    for (const auto& [x0, x1] : xl)
        for (const auto& [y0, y1] : yl)
            for (const auto& [s0, s1] : sl) {
                // x0 <= s0 <= y0 < x1 <= s1 <= y1 < x0
                if (chain_in_order(x0, {s0, y0, x1, s1, y1},
                                   {true, true, false, true, true}))
                    return true;
            }
    return false;
}

MarkedPoint localize_point(const MarkedPoint& p, const Surface& source)
{
    if (source.n() % 2 != 0)
        throw_domain("BadInput", "localisation source needs an even number of accumulation points");
    const Surface target(source.n() / 2);
    if (p.is_acc()) {
        const int i = p.index % 2 == 0 ? p.index / 2 : (p.index - 1) / 2;
        return acc_point(target, i);
    }
    if (p.index % 2 == 0)
        return acc_point(target, p.index / 2);
    return reg_point(target, (p.index - 1) / 2, p.offset);
}

std::optional<Arc> localize(const Arc& x, const Surface& source)
{
    return try_make_arc(localize_point(x.a, source), localize_point(x.b, source));
}

std::vector<Site> orbit(const Arc& x)
{
    std::vector<Site> sites{site_of(x.a), site_of(x.b)};
    if (sites[0] == sites[1])
        sites.pop_back();
    return sites;
}

std::vector<int> orbit_numbers(const Arc& x, const Surface& surface)
{
    std::vector<int> nums;
    for (const Site& s : orbit(x))
        nums.push_back(site_number(s, surface));
    std::sort(nums.begin(), nums.end());
    return nums;
}

}  // namespace cae
