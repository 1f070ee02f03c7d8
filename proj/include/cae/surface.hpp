#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "cae/error.hpp"

namespace cae {

/* The marked circle: an anticlockwise-oriented circle with n accumulation
 * points acc(0), ..., acc(n-1) and, between acc(i) and acc(i+1), a segment
 * of regular marked points order-isomorphic to Z.  Segment i is the open
 * interval (acc(i), acc(i+1)); offsets increase anticlockwise and the
 * segment accumulates at both of its ends.
 *
 * Indices are integers mod n; all constructors reduce them to [0, n).
 */
class Surface {
public:
    explicit Surface(int n) : n_(n)
    {
        if (n < 1)
            throw_domain("BadInput", "surface needs at least one accumulation point");
    }

    int n() const { return n_; }
    int sites() const { return 2 * n_; }

    int reduce(long long i) const
    {
        long long r = i % n_;
        return static_cast<int>(r < 0 ? r + n_ : r);
    }

    friend bool operator==(const Surface&, const Surface&) = default;

private:
    int n_;
};

struct MarkedPoint {
    enum class Kind : std::uint8_t { Acc, Reg };

    Kind kind = Kind::Acc;
    int index = 0;          // segment or accumulation index, reduced mod n
    long long offset = 0;   // 0 for accumulation points

    bool is_acc() const { return kind == Kind::Acc; }
    bool is_reg() const { return kind == Kind::Reg; }

    friend bool operator==(const MarkedPoint&, const MarkedPoint&) = default;
};

inline MarkedPoint acc_point(const Surface& s, long long i)
{
    return MarkedPoint{MarkedPoint::Kind::Acc, s.reduce(i), 0};
}

inline MarkedPoint reg_point(const Surface& s, long long i, long long k)
{
    return MarkedPoint{MarkedPoint::Kind::Reg, s.reduce(i), k};
}

/* Linear position anchored just before acc(0): acc(i) sits at band 2i, the
 * points of segment i at band 2i+1 ordered by offset.  Distinct points get
 * distinct keys, and key order is the anticlockwise order starting at acc(0). */
inline std::pair<long long, long long> linear_key(const MarkedPoint& p)
{
    return {2LL * p.index + (p.is_reg() ? 1 : 0), p.offset};
}

inline bool point_before(const MarkedPoint& a, const MarkedPoint& b)
{
    return linear_key(a) < linear_key(b);
}

/* Canonical order used to normalise arcs and sort summands. */
inline bool point_lt(const MarkedPoint& a, const MarkedPoint& b)
{
    return linear_key(a) < linear_key(b);
}

/* True iff travelling anticlockwise from x one reaches y strictly before z.
 * False whenever the three points are not pairwise distinct. */
bool cyclic_lt(const MarkedPoint& x, const MarkedPoint& y, const MarkedPoint& z);

/* Successor/predecessor in the anticlockwise order.  Accumulation points are
 * their own neighbours (a- = a+ = a). */
MarkedPoint successor(const MarkedPoint& p);
MarkedPoint predecessor(const MarkedPoint& p);

/* One of the 2n orbit sites: a whole segment or a single accumulation point. */
struct Site {
    bool accumulation = false;
    int index = 0;

    friend bool operator==(const Site&, const Site&) = default;
};

Site site_of(const MarkedPoint& p);

/* Sites are numbered into [2n] = {1, ..., 2n} respecting the cyclic order:
 * segment i -> 2i+1 and acc(i) -> 2i, both taken mod 2n with representative
 * in [1, 2n].  Even numbers are accumulation points, odd numbers segments. */
int site_number(const Site& s, const Surface& surface);
Site site_from_number(int number, const Surface& surface);

}  // namespace cae
