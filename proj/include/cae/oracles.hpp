#pragma once

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "cae/homology.hpp"

namespace cae {

/* Desk-scale truncation of the category: every valid arc whose regular
 * offsets lie in [-window, window]. */
struct FiniteUniverse {
    Surface surface;
    long long window;
    std::vector<Arc> arcs;

    static FiniteUniverse build(const Surface& surface, long long window);
    bool contains(const Arc& a) const;
};

/* Least fixpoint inside the finite universe containing the summands of G,
 * closed under suspension (both directions, while in-universe) and under
 * taking middle-term summands of triangles between members.  Requires all
 * summand offsets within window/2. */
std::set<Arc> brute_closure(const DirectSum& g, long long window);

/* BFS connectivity between the shifts of X and the shifts of Y in the graph
 * on in-window shifts with degree-1 edges in either direction. */
bool ext_graph_connected(const Surface& surface, const Arc& x, const Arc& y, long long window);

/* Shortest zig-zag length from X to Y through in-window shifts of the
 * context object's summands (plus X and Y themselves); nullopt = no zig-zag
 * within the window. */
std::optional<long long> zigzag_distance(const DirectSum& context, const Arc& x, const Arc& y,
                                         long long window);

/* Two-arc convenience overload: context = X + Y. */
std::optional<long long> zigzag_distance(const Surface& surface, const Arc& x, const Arc& y,
                                         long long window);

/* Shortest zig-zag realised as a node path, for counterexample reports. */
std::optional<ZigZag> zigzag_path(const DirectSum& context, const Arc& x, const Arc& y,
                                  long long window);

/* Deterministic random objects for verification sweeps. */
std::vector<DirectSum> sample_objects(const Surface& surface, int count, int max_summands,
                                      long long max_offset, unsigned seed);

/* Deterministic random arc with offsets in [-max_offset, max_offset]. */
Arc sample_arc(const Surface& surface, long long max_offset, std::mt19937& rng);

}  // namespace cae
