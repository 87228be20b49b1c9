#include "aztec/harness.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace aztec;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::vector<WeightPoint> parse_points(const std::string& text) {
    std::vector<WeightPoint> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        std::stringstream is(item);
        std::string tok;
        std::vector<long> v;
        while (std::getline(is, tok, ',')) {
            try {
                v.push_back(std::stol(tok));
            } catch (const std::exception&) {
                throw Error(ErrorCode::BadSpec, "bad probe point '" + item + "'");
            }
        }
        if (v.size() != 3) throw Error(ErrorCode::BadSpec, "probe point needs three coordinates: '" + item + "'");
        out.push_back({Rat(v[0]), Rat(v[1]), Rat(v[2])});
    }
    return out;
}

json factored_json(const FactoredCount& f) {
    return {{"prefactor", f.prefactor}, {"2", f.exp2}, {"3", f.exp3}, {"5", f.exp5}, {"11", f.exp11}};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Perfect matchings of grid-B regions: build, count, compare with closed forms"};
    app.require_subcommand(1);

    std::string spec_text, svg_out, method = "auto", config_path, suite, report_out, points_text;
    bool show_json = false, show_weights = false;

    auto* gen = app.add_subcommand("gen", "Build a graph from a spec string");
    gen->add_option("spec", spec_text, "e.g. A1:9,8,2, TR:2,6, AR:2,2@full")->required();
    gen->add_option("--svg", svg_out, "Write an SVG drawing");
    gen->add_flag("--json", show_json, "Print the graph as JSON");
    gen->add_flag("--weights", show_weights, "Label x/y/z cross weights in the SVG (grid B only)");

    auto* count = app.add_subcommand("count", "Count perfect matchings");
    count->add_option("spec", spec_text)->required();
    count->add_option("--method", method)->check(CLI::IsMember({"fkt", "brute", "auto"}));
    count->add_option("--config", config_path, "JSON suite config");

    auto* formula = app.add_subcommand("formula", "Evaluate the closed form for a spec");
    formula->add_option("spec", spec_text)->required();

    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    verify->add_option("--config", config_path, "JSON suite config");
    verify->add_option("--report", report_out, "Write JSON-lines records here (default stdout)");

    auto* probe = app.add_subcommand("probe", "Fit the weighted product form on an A or F graph");
    probe->add_option("spec", spec_text)->required();
    probe->add_option("--points", points_text, "x,y,z;x,y,z;... (default: first four screened points)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    }

    try {
        SuiteConfig cfg;
        if (!config_path.empty()) cfg = load_config(config_path);

        if (*gen) {
            FamilySpec spec = parse_spec(spec_text);
            Graph g = build_spec(spec);
            if (show_json) {
                std::cout << to_json(g) << '\n';
            } else {
                auto [c0, c1] = g.class_sizes();
                std::cout << to_string(spec) << ": " << g.size() << " vertices, " << g.edges.size()
                          << " edges, classes " << c0 << "/" << c1 << ", hash " << graph_hash_hex(g) << '\n';
            }
            if (!svg_out.empty()) {
                SvgOptions opt;
                if (show_weights) {
                    g = assign_cross_weights(g, {Rat(2), Rat(3), Rat(5)});
                    opt.show_weights = true;
                }
                render_svg(g, svg_out, opt);
            }
            return kExitPass;
        }

        if (*count) {
            Graph g = build_spec(parse_spec(spec_text));
            const std::string cache_path = effective_cache_path(cfg);
            std::unique_ptr<CountCache> cache;
            if (!cache_path.empty()) cache = std::make_unique<CountCache>(cache_path);
            CountResult r = count_graph(g, parse_method(method), cfg, cache.get());
            std::cout << count_report_json(g, r) << '\n';
            return kExitPass;
        }

        if (*formula) {
            FamilySpec spec = parse_spec(spec_text);
            json j = {{"spec", to_string(spec)}};
            if (auto f = expected_factored(spec)) {
                j["factored"] = factored_json(*f);
                j["text"] = f->to_string();
            }
            auto v = expected_count(spec);
            if (!v) {
                std::cerr << "no closed form for " << to_string(spec) << '\n';
                return kExitUsage;
            }
            j["value"] = v->get_str();
            std::cout << j.dump() << '\n';
            return kExitPass;
        }

        if (*verify) {
            SuiteReport rep = run_suite(suite, cfg);
            if (report_out.empty()) {
                std::cout << rep.to_jsonl();
            } else {
                std::ofstream out(report_out);
                if (!out) throw Error(ErrorCode::IoError, "cannot write " + report_out);
                out << rep.to_jsonl();
            }
            std::cerr << suite << ": " << rep.records.size() - rep.failures() << "/" << rep.records.size()
                      << " checks passed\n";
            return rep.passed() ? kExitPass : kExitFail;
        }

        if (*probe) {
            FamilySpec spec = parse_spec(spec_text);
            if (spec.kind != SpecKind::A && spec.kind != SpecKind::F)
                throw Error(ErrorCode::BadSpec, "probe takes an A or F spec");
            std::vector<WeightPoint> pts = points_text.empty() ? default_probe_points(4) : parse_points(points_text);
            const FamilyKind k = spec.kind == SpecKind::A ? FamilyKind::A : FamilyKind::F;
            ProbeResult pr = conjecture_probe(k, spec.index, spec.params[0], spec.params[1], spec.params[2], pts,
                                              cfg.vertex_cap_fkt);
            json j = {{"spec", to_string(spec)}, {"consistent", pr.consistent}, {"residues", pr.residues}};
            json per = json::array();
            for (const auto& e : pr.per_point)
                per.push_back({{"X", e.X}, {"Y", e.Y}, {"Z", e.Z}, {"T", e.T}, {"Q", e.Q}, {"K", e.K}});
            j["per_point"] = per;
            std::cout << j.dump() << '\n';
            return pr.consistent ? kExitPass : kExitFail;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.code()) {
        case ErrorCode::BadSpec:
        case ErrorCode::InvalidParams:
        case ErrorCode::HypothesisViolated:
        case ErrorCode::BadProbePoint:
        case ErrorCode::IoError:
        case ErrorCode::TooLarge:
        case ErrorCode::CountTooLarge: return kExitUsage;
        default: return kExitFail;
        }
    }
    return kExitUsage;
}
