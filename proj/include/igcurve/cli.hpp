#pragma once

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "igcurve/curve_nbhd.hpp"
#include "igcurve/indexing.hpp"
#include "igcurve/moment_graph.hpp"
#include "igcurve/weyl.hpp"

namespace igcurve::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kMismatch = 3, kResource = 4 };

using Json = nlohmann::ordered_json;

inline std::vector<int> parse_ints(const std::string& text) {
    std::vector<int> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("malformed integer list: '" + text + "'");
        }
        if (used != item.size()) throw std::invalid_argument("malformed integer list: '" + text + "'");
        out.push_back(v);
    }
    return out;
}

inline std::string join(const std::vector<int>& xs) {
    std::string s;
    for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? "," : "") + std::to_string(xs[i]);
    return s;
}

inline std::vector<int> bc_padded(const SpaceParams& s, const BCPartition& p) { return detail::padded(p.parts, s.k); }

inline Json space_json(const SpaceParams& s) { return Json{{"k", s.k}, {"n", s.n}}; }

struct Config {
    int k = 0;
    int n = 0;
    int d = 0;
    int dmax = 0;
    int jobs = 1;
    std::string index = "weyl";
    std::string format = "text";
    std::string flavor = "odd";
    std::string value;
    bool check = false;
    std::uint64_t max_vertices = 200000;

    SpaceParams space() const {
        SpaceParams s{k, n};
        s.validate();
        return s;
    }

    Indexation indexation() const {
        if (index == "weyl") return Indexation::Weyl;
        if (index == "bc") return Indexation::BC;
        if (index == "bkt") return Indexation::BKT;
        throw std::invalid_argument("unknown indexation '" + index + "'");
    }

    SchubertId id() const { return SchubertId{space(), indexation(), parse_ints(value)}; }
};

inline Json component_json(const SpaceParams& s, const Component& c) {
    return Json{{"weyl", signed_window(c.weyl)},
                {"bc", bc_padded(s, c.bc)},
                {"bkt", c.bkt.parts},
                {"orbit", to_string(c.orbit)}};
}

inline Json result_json(const NeighborhoodResult& r) {
    Json j{{"space", space_json(r.input.space)},
           {"input", {{"indexation", to_string(r.input.indexation)}, {"value", r.input.value}}},
           {"d", r.d},
           {"components", Json::array()},
           {"method", to_string(r.method)}};
    for (const auto& c : r.components) j["components"].push_back(component_json(r.input.space, c));
    return j;
}

inline void print_result_text(std::ostream& out, const NeighborhoodResult& r) {
    const auto& s = r.input.space;
    out << "space: " << space_name(s) << "\n";
    out << "input: " << to_string(r.input.indexation) << " " << join(r.input.value) << "\n";
    out << "d: " << r.d << "\n";
    out << "method: " << to_string(r.method) << "\n";
    out << "components: " << r.components.size() << "\n";
    for (const auto& c : r.components)
        out << "  [" << to_string(c.orbit) << "] weyl: " << join(signed_window(c.weyl))
            << "  bc: " << join(bc_padded(s, c.bc)) << "  bkt: " << join(c.bkt.parts) << "\n";
}

inline int cmd_convert(const Config& cfg, std::ostream& out) {
    const auto s = cfg.space();
    const CosetRep w = resolve(cfg.id());
    const auto bc = weyl_to_bc(w);
    const auto bkt = weyl_to_bkt(w);
    const char* orbit = w.in_closed_orbit() ? "Z" : "Y";
    if (cfg.format == "json") {
        Json j{{"space", space_json(s)},
               {"weyl", signed_window(w)},
               {"bc", bc_padded(s, bc)},
               {"bkt", bkt.parts},
               {"codim", codim(w)},
               {"orbit", orbit}};
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "space: " << space_name(s) << "\n";
    out << "weyl: " << join(signed_window(w)) << "\n";
    out << "bc: " << join(bc_padded(s, bc)) << "\n";
    out << "bkt: " << join(bkt.parts) << "\n";
    out << "codim: " << codim(w) << "\n";
    out << "orbit: " << orbit << "\n";
    return kOk;
}

inline int cmd_nbhd(const Config& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.d < 0) throw std::invalid_argument("d must be nonnegative");
    const auto id = cfg.id();
    const auto r = nbhd_formula(id, cfg.d);
    int code = kOk;
    std::string verdict;
    if (cfg.check) {
        const auto o = nbhd_oracle(id, cfg.d, cfg.max_vertices);
        if (o.cosets() == r.cosets()) {
            verdict = "ok";
        } else {
            verdict = "mismatch";
            code = kMismatch;
            err << "formula and oracle disagree\n";
        }
    }
    if (cfg.format == "json") {
        Json j = result_json(r);
        if (cfg.check) j["check"] = verdict;
        out << j.dump(2) << "\n";
    } else {
        print_result_text(out, r);
        if (cfg.check) out << "check: " << verdict << "\n";
    }
    return code;
}

inline int cmd_comp(const Config& cfg, std::ostream& out) {
    const auto s = cfg.space();
    if (cfg.d < 1) throw std::invalid_argument("Comp sets are defined for d >= 1");
    const bool bkt = cfg.index == "bkt";
    if (!bkt && cfg.index != "bc" && cfg.index != "weyl") throw std::invalid_argument("unknown indexation");
    const MomentGraph g(s, Flavor::Odd, cfg.max_vertices);
    std::vector<std::vector<int>> members;
    for (const auto& w : g.vertices()) {
        if (!w.in_closed_orbit()) continue;
        if (!comp_member(s, weyl_to_bc(w), cfg.d)) continue;
        if (cfg.index == "weyl")
            members.push_back(signed_window(w));
        else if (bkt)
            members.push_back(weyl_to_bkt(w).parts);
        else
            members.push_back(bc_padded(s, weyl_to_bc(w)));
    }
    if (cfg.format == "json") {
        Json j{{"space", space_json(s)}, {"d", cfg.d}, {"indexation", cfg.index}, {"members", members}};
        out << j.dump(2) << "\n";
        return kOk;
    }
    out << "space: " << space_name(s) << "\n";
    out << "d: " << cfg.d << "\n";
    out << "members: " << members.size() << "\n";
    for (const auto& m : members) out << "  " << join(m) << "\n";
    return kOk;
}

inline Json graph_json(const MomentGraph& g) {
    Json j{{"space", space_json(g.space())},
           {"flavor", to_string(g.flavor())},
           {"vertex_count", g.size()},
           {"edge_count", g.edges().size()},
           {"vertices", Json::array()},
           {"edges", Json::array()}};
    for (int u = 0; u < g.size(); ++u)
        j["vertices"].push_back(Json{{"id", u},
                                     {"window", signed_window(g.vertex(u))},
                                     {"orbit", to_string(vertex_kind(g.vertex(u)))},
                                     {"barred", barred_count(g.vertex(u))}});
    for (const auto& e : g.edges())
        j["edges"].push_back(Json{{"source", e.u}, {"target", e.v}, {"degree", e.degree}, {"root", to_string(e.root)}});
    return j;
}

inline int cmd_graph(const Config& cfg, std::ostream& out) {
    Flavor flavor;
    if (cfg.flavor == "odd")
        flavor = Flavor::Odd;
    else if (cfg.flavor == "even")
        flavor = Flavor::Even;
    else
        throw std::invalid_argument("unknown flavor '" + cfg.flavor + "'");
    const MomentGraph g(cfg.space(), flavor, cfg.max_vertices);
    if (cfg.format == "json")
        out << graph_json(g).dump(2) << "\n";
    else if (cfg.format == "dot")
        out << to_dot(g);
    else
        throw std::invalid_argument("graph output format must be dot or json");
    return kOk;
}

inline int cmd_verify(const Config& cfg, std::ostream& out) {
    const auto report = verify_sweep(cfg.space(), cfg.dmax, cfg.jobs, cfg.max_vertices);
    Json j{{"space", space_json(report.space)},
           {"dmax", report.dmax},
           {"classes", report.classes},
           {"cases", report.cases},
           {"checks", report.checks},
           {"mismatches", report.mismatches},
           {"clean", report.clean()}};
    out << j.dump(2) << "\n";
    return report.clean() ? kOk : kMismatch;
}

inline int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Curve neighborhoods of Schubert varieties in odd symplectic Grassmannians", "igcurve"};
    app.require_subcommand(1);
    Config cfg;

    auto add_space = [&](CLI::App* sub) {
        sub->add_option("--k", cfg.k, "dimension of the isotropic subspaces")->required();
        sub->add_option("--n", cfg.n, "the space is IG(k,2n+1)")->required();
        sub->add_option("--max-vertices", cfg.max_vertices, "vertex bound for exhaustive graphs");
    };
    auto add_class = [&](CLI::App* sub) {
        sub->add_option("--index", cfg.index, "indexation of VALUE")->check(CLI::IsMember({"weyl", "bc", "bkt"}));
        sub->add_option("value", cfg.value, "comma-separated window (bars as negatives) or partition");
    };

    auto* convert = app.add_subcommand("convert", "show a class in all indexations");
    add_space(convert);
    add_class(convert);
    convert->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    auto* nbhd = app.add_subcommand("nbhd", "curve neighborhood of degree d");
    add_space(nbhd);
    add_class(nbhd);
    nbhd->add_option("--d", cfg.d, "curve degree")->required();
    nbhd->add_flag("--check", cfg.check, "compare with the moment-graph oracle");
    nbhd->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    auto* comp = app.add_subcommand("comp", "closed-orbit classes with two-component neighborhoods");
    add_space(comp);
    comp->add_option("--d", cfg.d, "curve degree")->required();
    comp->add_option("--index", cfg.index)->check(CLI::IsMember({"weyl", "bc", "bkt"}));
    comp->add_option("--format", cfg.format)->check(CLI::IsMember({"text", "json"}));

    auto* graph = app.add_subcommand("graph", "export the moment graph");
    add_space(graph);
    graph->add_option("--flavor", cfg.flavor)->check(CLI::IsMember({"even", "odd"}));
    graph->add_option("--format", cfg.format)->check(CLI::IsMember({"dot", "json"}));

    auto* verify = app.add_subcommand("verify", "check every formula against the oracle");
    add_space(verify);
    verify->add_option("--dmax", cfg.dmax, "largest degree")->required();
    verify->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    try {
        if (*convert) return cmd_convert(cfg, out);
        if (*nbhd) return cmd_nbhd(cfg, out, err);
        if (*comp) return cmd_comp(cfg, out);
        if (*graph) {
            if (cfg.format == "text") cfg.format = "dot";
            return cmd_graph(cfg, out);
        }
        if (*verify) return cmd_verify(cfg, out);
    } catch (const ResourceLimit& e) {
        err << "error: " << e.what() << "\n";
        return kResource;
    } catch (const ContainmentFailure& e) {
        err << "error: " << e.what() << "\n";
        return kMismatch;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
    return kInputError;
}

}  // namespace igcurve::cli
