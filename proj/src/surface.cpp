#include "cae/surface.hpp"

namespace cae {

bool cyclic_lt(const MarkedPoint& x, const MarkedPoint& y, const MarkedPoint& z)
{
    if (x == y || y == z || x == z)
        return false;
    const bool xy = point_before(x, y);
    const bool yz = point_before(y, z);
    const bool zx = point_before(z, x);
    // x < y < z linearly, or a rotation of that pattern.
    return (xy && yz) || (yz && zx) || (zx && xy);
}

MarkedPoint successor(const MarkedPoint& p)
{
    if (p.is_acc())
        return p;
    return MarkedPoint{MarkedPoint::Kind::Reg, p.index, p.offset + 1};
}

MarkedPoint predecessor(const MarkedPoint& p)
{
    if (p.is_acc())
        return p;
    return MarkedPoint{MarkedPoint::Kind::Reg, p.index, p.offset - 1};
}

Site site_of(const MarkedPoint& p)
{
    return Site{p.is_acc(), p.index};
}

int site_number(const Site& s, const Surface& surface)
{
    const int m = surface.sites();
    int raw = s.accumulation ? 2 * s.index : 2 * s.index + 1;
    raw %= m;
    return raw == 0 ? m : raw;
}

Site site_from_number(int number, const Surface& surface)
{
    const int m = surface.sites();
    if (number < 1 || number > m)
        throw_domain("BadInput", "site number out of [1, 2n]");
    if (number % 2 == 0)
        return Site{true, surface.reduce(number / 2)};
    return Site{false, surface.reduce((number - 1) / 2)};
}

}  // namespace cae
