#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cae/surface.hpp"

namespace cae {

enum class ArcKind { Short, Long, Limit, DoubleLimit };

const char* to_string(ArcKind k);

/* An arc {a, b}: an unordered pair of non-adjacent marked points, stored with
 * a <= b in the fixed linear order so arcs work as set and map keys. */
struct Arc {
    MarkedPoint a, b;

    friend bool operator==(const Arc&, const Arc&) = default;
};

inline bool operator<(const Arc& x, const Arc& y)
{
    if (x.a != y.a)
        return point_lt(x.a, y.a);
    if (x.b != y.b)
        return point_lt(x.b, y.b);
    return false;
}

/* Validity: q must differ from p and from both neighbours of p.  Since
 * accumulation points are their own neighbours, the only excluded pairs are
 * equal points and same-segment regular points with |k1 - k2| <= 1. */
bool valid_arc_pair(const MarkedPoint& p, const MarkedPoint& q);

Arc make_arc(const MarkedPoint& p, const MarkedPoint& q);  // throws InvalidArc
std::optional<Arc> try_make_arc(const MarkedPoint& p, const MarkedPoint& q);

ArcKind classify(const Arc& x);

/* Suspension [j]: j steps clockwise for j > 0 (predecessor on both endpoints),
 * anticlockwise for j < 0.  Accumulation endpoints stay fixed. */
Arc suspend(const Arc& x, long long j);

/* Strict interleaving of endpoints in the cyclic order; arcs that share an
 * endpoint never cross. */
bool crosses(const Arc& x, const Arc& y);

/* dim Ext^1(X, Y): 1 iff the arcs cross, or both have an accumulation point
 * as a shared endpoint and l_Y is a strict anticlockwise rotation of l_X
 * about it.  This is the degree-1 rule obtained from the Hom rule below by
 * substituting Y |-> Y[1]. */
int ext1_dim(const Arc& x, const Arc& y);

/* dim Hom(X, Y): the crossing-or-rotation rule applied to (l_X, l_{Y[-1]}).
 * The off-identity rule only; identity morphisms are never reported here. */
int hom_dim(const Arc& x, const Arc& y);

enum class TriangleKind { CrossingPair, LimitRotation };

/* Middle term of a distinguished triangle X -> M -> Y -> X[1].  Recombined
 * endpoint pairs that violate arc validity are dropped (zero summands), so
 * the middle has 0, 1 or 2 arcs. */
struct ConeData {
    TriangleKind kind = TriangleKind::CrossingPair;
    std::vector<Arc> middle;  // canonically sorted
};

/* Requires ext1_dim(Y, X) = 1, i.e. a connecting morphism Y -> X[1].
 * Throws NoExtension otherwise. */
ConeData extension_middle(const Arc& x, const Arc& y);

/* Whether the (unique up to scalar) morphism X -> Y factors through S:
 * x0 <= s0 <= y0 < x1 and x1 <= s1 <= y1 < x0 in the cyclic order, for some
 * consistent labelling of the endpoints.  Throws NoMorphism when
 * hom_dim(X, Y) = 0. */
bool factors_through(const Arc& x, const Arc& y, const Arc& s);

/* Endpoint map of the Verdier localisation from the 2n-accumulation-point
 * surface: the closed region [acc(2i), acc(2i+1)] (both accumulation points
 * and all of segment 2i) collapses to target acc(i); segment 2i+1 maps to
 * target segment i preserving offsets. */
MarkedPoint localize_point(const MarkedPoint& p, const Surface& source);

/* Image arc under the localisation, or nullopt (the zero object) when the
 * mapped endpoints violate arc validity.  source.n() must be even. */
std::optional<Arc> localize(const Arc& x, const Surface& source);

/* Sites swept by the suspensions of the arc: regular endpoints contribute
 * their whole segment, accumulation endpoints the single point. */
std::vector<Site> orbit(const Arc& x);

/* Site numbers of orbit(x), sorted ascending. */
std::vector<int> orbit_numbers(const Arc& x, const Surface& surface);

}  // namespace cae
