#pragma once

#include <json.hpp>

#include "cae/homology.hpp"
#include "cae/partitions.hpp"

namespace cae {

using Json = nlohmann::json;

/* Wire formats:
 *   surface    {"n": n}
 *   point      {"acc": i} | {"seg": i, "k": k}
 *   arc        {"a": <point>, "b": <point>}
 *   object     {"n": n, "arcs": [<arc>, ...]}
 *   cone       {"middle": [<arc>, ...]}
 *   partition  {"m": m, "blocks": [[...], ...]}
 * Indices are reduced mod n on input. */

Json to_json(const Surface& s);
Surface surface_from_json(const Json& j);

Json to_json(const MarkedPoint& p);
MarkedPoint point_from_json(const Json& j, const Surface& surface);

Json to_json(const Arc& a);
Arc arc_from_json(const Json& j, const Surface& surface);

Json to_json(const DirectSum& g);
DirectSum direct_sum_from_json(const Json& j);

Json to_json(const ConeData& c);

Json to_json(const Partition& p);
Partition partition_from_json(const Json& j);

Json to_json(const Site& s, const Surface& surface);

}  // namespace cae
