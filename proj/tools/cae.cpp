/* cae: command-line front end for the arc model of the completed discrete
 * cluster category.  Machine mode prints JSON on every code path; --human
 * pretty-prints.  Exit codes: 0 success, 1 domain error, 2 usage error. */

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "cae/json_io.hpp"
#include "cae/oracles.hpp"
#include "cae/render.hpp"

using namespace cae;

namespace {

bool human_mode = false;

Json load_json_arg(const std::string& arg)
{
    try {
        if (arg == "-") {
            std::ostringstream buf;
            buf << std::cin.rdbuf();
            return Json::parse(buf.str());
        }
        if (!arg.empty() && (arg.front() == '{' || arg.front() == '['))
            return Json::parse(arg);
        std::ifstream in(arg);
        if (!in)
            throw_domain("BadInput", "cannot open " + arg);
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw_domain("BadInput", std::string("invalid JSON: ") + e.what());
    }
}

void emit(const Json& j)
{
    if (human_mode)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << j.dump() << "\n";
}

long long window_default()
{
    if (const char* env = std::getenv("CAE_WINDOW"))
        return std::atoll(env);
    return 8;
}

Arc arc_arg(const std::string& arg, const Surface& s)
{
    return arc_from_json(load_json_arg(arg), s);
}

Json object_report(const DirectSum& g)
{
    Json comps = Json::array();
    for (const HcComponent& c : hc_decompose(g)) {
        Json arcs = Json::array();
        for (const Arc& a : c.summands)
            arcs.push_back(to_json(a));
        Json sites = Json::array();
        for (const Site& s : c.orbit_sites)
            sites.push_back(site_number(s, g.surface()));
        comps.push_back(Json{{"arcs", arcs}, {"sites", sites}});
    }
    return Json{{"components", comps}};
}

Json verify_closure(int n, long long window)
{
    const Surface s(n);
    Json fails = Json::array();
    int objects = 0, probes = 0;
    std::vector<DirectSum> suite = sample_objects(s, 25, 4, window / 4, 7u + static_cast<unsigned>(n));
    for (const Arc& a : all_valid_arcs(s, 1))
        suite.emplace_back(s, std::vector<Arc>{a});
    for (const DirectSum& g : suite) {
        ++objects;
        const auto closure = brute_closure(g, window);
        const Partition part = thick_closure(g);
        for (const Arc& probe : all_valid_arcs(s, window / 2)) {
            ++probes;
            const bool oracle = closure.count(probe) > 0;
            const bool analytic = thick_membership(probe, part, s);
            if (oracle != analytic && fails.size() < 10)
                fails.push_back(Json{{"object", to_json(g)},
                                     {"arc", to_json(probe)},
                                     {"oracle", oracle},
                                     {"analytic", analytic}});
        }
    }
    return Json{{"check", "closure"}, {"objects", objects}, {"probes", probes},
                {"pass", fails.empty()}, {"failures", fails}};
}

Json verify_pairs(int n, long long window)
{
    const Surface s(n);
    Json fails = Json::array();
    const auto arcs = all_valid_arcs(s, window / 2);
    long long pairs = 0;
    for (std::size_t i = 0; i < arcs.size(); ++i)
        for (std::size_t j = i; j < arcs.size(); ++j) {
            ++pairs;
            const bool rule = hc_connected_pair(arcs[i], arcs[j], s);
            const bool oracle = ext_graph_connected(s, arcs[i], arcs[j], window);
            if (rule != oracle && fails.size() < 10)
                fails.push_back(Json{{"x", to_json(arcs[i])},
                                     {"y", to_json(arcs[j])},
                                     {"rule", rule},
                                     {"oracle", oracle}});
        }
    return Json{{"check", "pairs"}, {"pairs", pairs}, {"pass", fails.empty()},
                {"failures", fails}};
}

bool share_regular_endpoint(const Arc& u, const Arc& v)
{
    for (const MarkedPoint& p : {u.a, u.b})
        if (p.is_reg() && (p == v.a || p == v.b))
            return true;
    return false;
}

Json verify_distances(int n, long long window)
{
    const Surface s(n);
    Json fails = Json::array();
    std::mt19937 rng(2024u + static_cast<unsigned>(n));
    int checked = 0;
    for (int trial = 0; trial < 4000 && checked < 200; ++trial) {
        const Arc x = sample_arc(s, window / 2, rng);
        const Arc y = sample_arc(s, window / 2, rng);
        const Arc z = sample_arc(s, window / 2, rng);
        if (x == z)  // X -- Y -- X is not a minimal zig-zag
            continue;
        if (classify(x) == ArcKind::Limit && (y == suspend(x, 1) || y == suspend(x, -1)))
            continue;
        // The reduction statement needs the endpoints of Z away from those of
        // X; a shared regular endpoint admits no degree-1 morphism at all.
        if (share_regular_endpoint(x, z))
            continue;
        const bool xy = ext1_dim(x, y) || ext1_dim(y, x);
        const bool yz = ext1_dim(y, z) || ext1_dim(z, y);
        const bool xz = ext1_dim(x, z) || ext1_dim(z, x);
        if (!xy || !yz || xz)
            continue;
        ++checked;
        std::vector<Arc> middles;
        if (ext1_dim(y, x))
            for (const Arc& m : extension_middle(x, y).middle)
                middles.push_back(m);
        if (ext1_dim(x, y))
            for (const Arc& m : extension_middle(y, x).middle)
                middles.push_back(m);
        bool reduced = false;
        for (const Arc& m : middles)
            reduced = reduced || m == z || ext1_dim(m, z) || ext1_dim(z, m);
        if (!reduced && fails.size() < 10)
            fails.push_back(Json{{"x", to_json(x)}, {"y", to_json(y)}, {"z", to_json(z)}});
        // Distance symmetry on the same sample.
        const DirectSum ctx(s, {x, y, z});
        const auto dxz = zigzag_distance(ctx, x, z, window);
        const auto dzx = zigzag_distance(ctx, z, x, window);
        if (dxz != dzx && fails.size() < 10)
            fails.push_back(Json{{"x", to_json(x)}, {"z", to_json(z)}, {"asymmetric", true}});
    }
    return Json{{"check", "distances"}, {"zigzags", checked}, {"pass", fails.empty()},
                {"failures", fails}};
}

RenderSpec render_spec_from_json(const Json& j)
{
    RenderSpec spec{surface_from_json(j), {}, std::nullopt,
                    j.value("width", 480), j.value("height", 480)};
    if (j.contains("arcs"))
        for (const Json& entry : j.at("arcs")) {
            if (entry.contains("arc"))
                spec.arcs.push_back(RenderArc{arc_from_json(entry.at("arc"), spec.surface),
                                              entry.value("label", std::string{})});
            else
                spec.arcs.push_back(RenderArc{arc_from_json(entry, spec.surface), {}});
        }
    if (j.contains("partition"))
        spec.shaded = partition_from_json(j.at("partition"));
    return spec;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"arc combinatorics of the completed discrete cluster category"};
    app.require_subcommand(1);
    app.add_flag("--human", human_mode, "pretty-print output");

    std::string arg_a, arg_b, arg_obj, arg_kind, arg_out;
    int opt_n = 1, opt_d = 1, opt_m = 0, opt_cap = 10;
    long long opt_j = 1;
    long long opt_window = window_default();

    // arc classify|suspend|cross|ext|cone|localize
    auto* arc_cmd = app.add_subcommand("arc", "operations on single arcs");
    arc_cmd->require_subcommand(1);
    auto add_arc_sub = [&](const char* name, const char* help, bool two_arcs) {
        auto* sub = arc_cmd->add_subcommand(name, help);
        sub->add_option("--n", opt_n, "accumulation points of the surface")->required();
        sub->add_option("first", arg_a, "arc (JSON file, inline JSON, or -)")->required();
        if (two_arcs)
            sub->add_option("second", arg_b, "second arc")->required();
        return sub;
    };
    auto* arc_classify = add_arc_sub("classify", "arc kind", false);
    auto* arc_suspend = add_arc_sub("suspend", "rotate an arc", false);
    arc_suspend->add_option("--j", opt_j, "suspension power (clockwise for j > 0)");
    auto* arc_cross = add_arc_sub("cross", "whether two arcs cross", true);
    auto* arc_ext = add_arc_sub("ext", "degree-1 and hom dimensions X -> Y", true);
    auto* arc_cone = add_arc_sub("cone", "middle of the triangle X -> M -> Y -> X[1]", true);
    auto* arc_localize = add_arc_sub("localize", "image under the localisation (n = source)", false);

    auto add_object_sub = [&](const char* name, const char* help, bool windowed) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("object", arg_obj, "object (JSON file, inline JSON, or -)")->required();
        if (windowed)
            sub->add_option("--window", opt_window, "truncation window (env CAE_WINDOW)");
        return sub;
    };
    auto* hc_cmd = add_object_sub("hc-decompose", "hc decomposition of an object", false);
    auto* hl_cmd = add_object_sub("hom-length", "homological length", true);
    auto* gen_cmd = add_object_sub("is-generator", "classical generator test", false);
    auto* min_cmd = add_object_sub("is-minimal", "minimal generator test", false);
    auto* time_cmd = add_object_sub("gen-time", "generation time", true);
    auto* closure_cmd = add_object_sub("thick-closure", "thick closure as an eNNC partition", false);

    auto* make_cmd = app.add_subcommand("make", "build the generators E and M_d");
    make_cmd->add_option("family", arg_kind, "E or M")->required()
        ->check(CLI::IsMember({"E", "M"}));
    make_cmd->add_option("--n", opt_n, "accumulation points")->required();
    make_cmd->add_option("--d", opt_d, "index of M_d");

    auto* lattice_cmd = app.add_subcommand("lattice", "meet and join of partitions");
    lattice_cmd->require_subcommand(1);
    bool even_exclusive = false;
    for (const char* name : {"meet", "join"}) {
        auto* sub = lattice_cmd->add_subcommand(name, name);
        sub->add_option("first", arg_a, "partition")->required();
        sub->add_option("second", arg_b, "partition")->required();
        sub->add_flag("--e", even_exclusive, "even-exclusive lattice operation");
    }

    auto* count_cmd = app.add_subcommand("count", "count NNC or eNNC partitions");
    count_cmd->add_option("family", arg_kind, "nnc or ennc")->required()
        ->check(CLI::IsMember({"nnc", "ennc"}));
    count_cmd->add_option("m", opt_m, "ground set size")->required();

    auto* enum_cmd = app.add_subcommand("enumerate", "list NNC or eNNC partitions");
    enum_cmd->add_option("family", arg_kind, "nnc or ennc")->required()
        ->check(CLI::IsMember({"nnc", "ennc"}));
    enum_cmd->add_option("m", opt_m, "ground set size")->required();
    enum_cmd->add_option("--cap", opt_cap, "enumeration cap");

    auto* member_cmd = app.add_subcommand("member", "arc membership in a partition subcategory");
    member_cmd->add_option("arc", arg_a, "arc")->required();
    member_cmd->add_option("partition", arg_b, "eNNC partition over [2n]")->required();

    auto* render_cmd = app.add_subcommand("render", "SVG arc diagram");
    render_cmd->add_option("spec", arg_obj, "render spec")->required();
    render_cmd->add_option("--out", arg_out, "output file (stdout when omitted)");

    auto* verify_cmd = app.add_subcommand("verify", "oracle cross-validation sweeps");
    verify_cmd->add_option("which", arg_kind, "closure, pairs, or distances")->required()
        ->check(CLI::IsMember({"closure", "pairs", "distances"}));
    verify_cmd->add_option("--n", opt_n, "accumulation points")->required();
    verify_cmd->add_option("--window", opt_window, "truncation window");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n";
        emit(Json{{"error", Json{{"code", "Usage"}, {"message", e.what()}}}});
        return 2;
    }

    try {
        if (arc_classify->parsed()) {
            const Surface s(opt_n);
            emit(Json{{"kind", to_string(classify(arc_arg(arg_a, s)))}});
        } else if (arc_suspend->parsed()) {
            const Surface s(opt_n);
            emit(to_json(suspend(arc_arg(arg_a, s), opt_j)));
        } else if (arc_cross->parsed()) {
            const Surface s(opt_n);
            emit(Json{{"crosses", crosses(arc_arg(arg_a, s), arc_arg(arg_b, s))}});
        } else if (arc_ext->parsed()) {
            const Surface s(opt_n);
            const Arc x = arc_arg(arg_a, s), y = arc_arg(arg_b, s);
            emit(Json{{"ext1", ext1_dim(x, y)}, {"hom", hom_dim(x, y)}});
        } else if (arc_cone->parsed()) {
            const Surface s(opt_n);
            emit(to_json(extension_middle(arc_arg(arg_a, s), arc_arg(arg_b, s))));
        } else if (arc_localize->parsed()) {
            const Surface source(opt_n);
            if (auto img = localize(arc_arg(arg_a, source), source))
                emit(to_json(*img));
            else
                emit(Json{{"zero", true}});
        } else if (hc_cmd->parsed()) {
            emit(object_report(direct_sum_from_json(load_json_arg(arg_obj))));
        } else if (hl_cmd->parsed()) {
            const auto len = homological_length(direct_sum_from_json(load_json_arg(arg_obj)),
                                                opt_window);
            if (len)
                emit(Json{{"length", *len}, {"stable", true}});
            else
                emit(Json{{"length", nullptr}, {"stable", false}});
        } else if (gen_cmd->parsed()) {
            emit(Json{{"generator", is_generator(direct_sum_from_json(load_json_arg(arg_obj)))}});
        } else if (min_cmd->parsed()) {
            emit(Json{{"minimal", is_minimal_generator(direct_sum_from_json(load_json_arg(arg_obj)))}});
        } else if (time_cmd->parsed()) {
            const GenerationTime t =
                generation_time(direct_sum_from_json(load_json_arg(arg_obj)), opt_window);
            emit(Json{{"generation_time", t.steps}, {"exact", t.exact}});
        } else if (closure_cmd->parsed()) {
            emit(to_json(thick_closure(direct_sum_from_json(load_json_arg(arg_obj)))));
        } else if (make_cmd->parsed()) {
            emit(to_json(arg_kind == "E" ? standard_generator_E(opt_n)
                                         : generator_M(opt_n, opt_d)));
        } else if (lattice_cmd->parsed()) {
            const Partition p = partition_from_json(load_json_arg(arg_a));
            const Partition q = partition_from_json(load_json_arg(arg_b));
            const bool meet = lattice_cmd->get_subcommands().front()->get_name() == "meet";
            Partition result = meet ? (even_exclusive ? meet_e(p, q) : meet_nnc(p, q))
                                    : (even_exclusive ? join_e(p, q) : join_nnc(p, q));
            emit(to_json(result));
        } else if (count_cmd->parsed()) {
            const BigInt value = arg_kind == "nnc" ? nnc_count(opt_m) : ennc_count(opt_m);
            // Raw decimal output; arbitrarily large values stay exact.
            std::cout << value.str() << "\n";
        } else if (enum_cmd->parsed()) {
            const auto list = arg_kind == "nnc" ? enumerate_nnc(opt_m, opt_cap)
                                                : enumerate_ennc(opt_m, opt_cap);
            // Streamed: the full list can run to millions of partitions.
            std::cout << "{\"count\":" << list.size() << ",\"partitions\":[";
            for (std::size_t i = 0; i < list.size(); ++i) {
                if (i)
                    std::cout << ",";
                std::cout << to_json(list[i]).dump();
            }
            std::cout << "]}\n";
        } else if (member_cmd->parsed()) {
            const Partition p = partition_from_json(load_json_arg(arg_b));
            if (p.m % 2 != 0)
                throw_domain("BadInput", "partition ground set must be [2n]");
            const Surface s(p.m / 2);
            emit(Json{{"member", thick_membership(arc_arg(arg_a, s), p, s)}});
        } else if (render_cmd->parsed()) {
            const std::string svg = render_svg(render_spec_from_json(load_json_arg(arg_obj)));
            if (arg_out.empty()) {
                std::cout << svg;
            } else {
                std::ofstream out(arg_out);
                if (!out)
                    throw_domain("BadInput", "cannot write " + arg_out);
                out << svg;
            }
        } else if (verify_cmd->parsed()) {
            Json report;
            if (arg_kind == "closure")
                report = verify_closure(opt_n, opt_window);
            else if (arg_kind == "pairs")
                report = verify_pairs(opt_n, opt_window);
            else
                report = verify_distances(opt_n, opt_window);
            emit(report);
            return report.at("pass").get<bool>() ? 0 : 1;
        }
        return 0;
    } catch (const DomainError& e) {
        emit(Json{{"error", Json{{"code", e.code()}, {"message", e.what()}}}});
        return 1;
    } catch (const std::exception& e) {
        emit(Json{{"error", Json{{"code", "Internal"}, {"message", e.what()}}}});
        return 1;
    }
}
