#include "cae/json_io.hpp"

namespace cae {

namespace {

[[noreturn]] void bad(const std::string& what)
{
    throw_domain("BadInput", what);
}

long long get_int(const Json& j, const char* key)
{
    if (!j.contains(key) || !j.at(key).is_number_integer())
        bad(std::string("expected integer field \"") + key + "\"");
    return j.at(key).get<long long>();
}

}  // namespace

Json to_json(const Surface& s)
{
    return Json{{"n", s.n()}};
}

Surface surface_from_json(const Json& j)
{
    if (!j.is_object())
        bad("surface must be an object");
    return Surface(static_cast<int>(get_int(j, "n")));
}

Json to_json(const MarkedPoint& p)
{
    if (p.is_acc())
        return Json{{"acc", p.index}};
    return Json{{"seg", p.index}, {"k", p.offset}};
}

MarkedPoint point_from_json(const Json& j, const Surface& surface)
{
    if (!j.is_object())
        bad("point must be an object");
    if (j.contains("acc"))
        return acc_point(surface, get_int(j, "acc"));
    if (j.contains("seg"))
        return reg_point(surface, get_int(j, "seg"), get_int(j, "k"));
    bad("point needs \"acc\" or \"seg\"");
}

Json to_json(const Arc& a)
{
    return Json{{"a", to_json(a.a)}, {"b", to_json(a.b)}};
}

Arc arc_from_json(const Json& j, const Surface& surface)
{
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
        bad("arc needs fields \"a\" and \"b\"");
    return make_arc(point_from_json(j.at("a"), surface), point_from_json(j.at("b"), surface));
}

Json to_json(const DirectSum& g)
{
    Json arcs = Json::array();
    for (const Arc& a : g.summands())
        arcs.push_back(to_json(a));
    return Json{{"n", g.surface().n()}, {"arcs", arcs}};
}

DirectSum direct_sum_from_json(const Json& j)
{
    if (!j.is_object())
        bad("object must be a JSON object");
    const Surface surface(static_cast<int>(get_int(j, "n")));
    if (!j.contains("arcs") || !j.at("arcs").is_array())
        bad("object needs an \"arcs\" array");
    std::vector<Arc> arcs;
    for (const Json& a : j.at("arcs"))
        arcs.push_back(arc_from_json(a, surface));
    return DirectSum(surface, std::move(arcs));
}

Json to_json(const ConeData& c)
{
    Json mid = Json::array();
    for (const Arc& a : c.middle)
        mid.push_back(to_json(a));
    return Json{{"middle", mid}};
}

Json to_json(const Partition& p)
{
    Json blocks = Json::array();
    for (const auto& blk : block_elements(p))
        blocks.push_back(blk);
    return Json{{"m", p.m}, {"blocks", blocks}};
}

Partition partition_from_json(const Json& j)
{
    if (!j.is_object())
        bad("partition must be an object");
    const int m = static_cast<int>(get_int(j, "m"));
    if (!j.contains("blocks") || !j.at("blocks").is_array())
        bad("partition needs a \"blocks\" array");
    std::vector<std::vector<int>> blocks;
    for (const Json& blk : j.at("blocks")) {
        if (!blk.is_array())
            bad("each block must be an array of integers");
        blocks.push_back(blk.get<std::vector<int>>());
    }
    return make_partition(m, blocks);
}

Json to_json(const Site& s, const Surface& surface)
{
    return Json{{"site", site_number(s, surface)},
                {"kind", s.accumulation ? "acc" : "seg"},
                {"index", s.index}};
}

}  // namespace cae
