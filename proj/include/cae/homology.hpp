#pragma once

#include <deque>
#include <optional>
#include <set>
#include <vector>

#include "cae/arcs.hpp"

namespace cae {

/* A finite multiset of arcs: an object of the category up to isomorphism.
 * Summands are kept canonically sorted. */
struct DirectSum {
    DirectSum(Surface surface, std::vector<Arc> summands);

    const Surface& surface() const { return surface_; }
    const std::vector<Arc>& summands() const { return summands_; }

    DirectSum without(std::size_t index) const;
    DirectSum plus(const Arc& extra) const;

    friend bool operator==(const DirectSum&, const DirectSum&) = default;

private:
    Surface surface_;
    std::vector<Arc> summands_;
};

struct HcComponent {
    std::vector<Arc> summands;
    std::vector<Site> orbit_sites;  // sorted by site number
};

/* Two indecomposables admit a zig-zag iff their orbits meet or their orbit
 * site pairs strictly interleave around the circle. */
bool hc_connected_pair(const Arc& x, const Arc& y, const Surface& surface);

/* Connected components of the summand graph with hc_connected_pair edges,
 * in a deterministic canonical order. */
std::vector<HcComponent> hc_decompose(const DirectSum& g);

bool is_hom_connected(const DirectSum& g);

std::vector<Site> orbit(const DirectSum& g);
bool has_complete_orbit(const DirectSum& g);

/* Max over node pairs of the shortest zig-zag length on the shift graph of
 * <G>_1 truncated to offsets in [-W, W], stabilised by agreement between
 * windows W and 2W.  nullopt means Unstable (no agreement, or a window's
 * graph is disconnected).  Throws NotConnected when G is not homologically
 * connected. */
std::optional<long long> homological_length(const DirectSum& g, long long window);

/* A zig-zag: consecutive nodes carry a non-zero degree-1 morphism in at
 * least one direction. */
struct ZigZag {
    std::vector<std::pair<Arc, long long>> nodes;  // (arc, shift it was found at)

    long long length() const
    {
        return nodes.empty() ? 0 : static_cast<long long>(nodes.size()) - 1;
    }
};

bool is_valid_zigzag(const ZigZag& z);

/* Window-truncated star-product levels <G>_1, <G>_2, ...: level 1 holds all
 * in-window shifts of the summands, level r+1 adds every middle-term summand
 * of a triangle between a level-r arc and a level-1 arc (both orders). */
class LevelSets {
public:
    LevelSets(DirectSum g, long long window);

    const std::set<Arc>& level(int r);  // r >= 1
    bool fixpoint_reached() const { return fixpoint_; }

private:
    void extend_once();

    DirectSum g_;
    long long window_;
    std::deque<std::set<Arc>> levels_;  // stable references across growth
    bool fixpoint_ = false;
};

bool level_membership(const Arc& target, const DirectSum& g, int r, long long window);

struct GenerationTime {
    bool exact = false;  // false: lower bound only (window too small)
    int steps = 0;
};

/* Smallest m with every valid arc inside the safety margin (window/2) in
 * <G>_{m+1}; reports a lower bound when the window levels reach a fixpoint
 * before covering the margin.  Throws NotAGenerator. */
GenerationTime generation_time(const DirectSum& g, long long window);

/* Classical generator test: homologically connected with a complete orbit. */
bool is_generator(const DirectSum& g);

/* No single summand can be dropped without breaking the generator test.
 * Throws NotAGenerator. */
bool is_minimal_generator(const DirectSum& g);

/* The fan generator E(n): limit arcs {acc(1), reg(i, 0)} for each segment i
 * plus the double limit arcs {acc(1), acc(j+1)}, j = 1..n-1. */
DirectSum standard_generator_E(int n);

/* The inductive family M_d, 1 <= d <= 2n-2: starting from E(n), step 2k
 * replaces Y_k by {reg(k, 0), acc(k+1)} and step 2k+1 replaces X_{k+1} by
 * {acc(k+1), reg(k+1, 0)}.  Throws OutOfRange. */
DirectSum generator_M(int n, int d);

/* All valid arcs whose regular offsets lie in [-max_offset, max_offset]. */
std::vector<Arc> all_valid_arcs(const Surface& surface, long long max_offset);

}  // namespace cae
