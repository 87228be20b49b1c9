#include "aztec/harness.hpp"

#include "doctest.h"
#include "oracle.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <regex>
#include <set>

using namespace aztec;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return ErrorCode::BadSpec;
}

std::string temp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / ("aztec_test_" + name)).string();
}

std::size_t count_of(const std::string& s, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1)) ++n;
    return n;
}

} // namespace

TEST_CASE("spec strings round trip") {
    for (const char* s : {"A1:9,8,2", "F3:5,8,4", "TR:2,6", "TA:5,7,4,3", "TB:4,6,3,4", "AR:2,2@full", "AAR:3,3@b"})
        CHECK(to_string(parse_spec(s)) == s);
    CHECK(to_string(parse_spec("AR:2,3")) == "AR:2,3@b");
    FamilySpec f = parse_spec("AR:2,2@full");
    CHECK(f.lattice == LatticeKind::FullGrid);
    for (const char* bad : {"", "A:1,2,3", "A4:1,2,3", "TR1:2,4", "A1:9,8", "Q:1", "A1:9,8,2@full", "TR:2,x",
                            "TA:5,7,4"})
        CHECK(code_of([&] { build_spec(parse_spec(bad)); }) == ErrorCode::BadSpec);
}

TEST_CASE("expected values for spec strings") {
    CHECK(expected_count(parse_spec("A1:9,8,2")).value() == Rat(302500000000L));
    CHECK(expected_count(parse_spec("TR:2,6")).value() == Rat(12100000000L));
    CHECK(expected_count(parse_spec("AR:2,2@full")).value() == 8);
    CHECK(expected_count(parse_spec("AAR:2,2@full")).value() == 13);
}

TEST_CASE("Delannoy numbers") {
    for (int m = 0; m <= 6; ++m)
        for (int n = 0; n <= 6; ++n) CHECK(Rat(delannoy(m, n)) == oracle::delannoy_paths(m, n));
    CHECK(delannoy(3, 3) == 63);
}

TEST_CASE("count methods") {
    SuiteConfig cfg;
    Graph g = build_A(1, 2, 3, 1);
    REQUIRE(g.size() <= 44);
    CountResult a = count_graph(g, Method::auto_, cfg);
    CHECK(a.cross_checked);
    CHECK(a.count == count_fkt(g));
    CHECK(count_graph(g, Method::brute, cfg).method == "brute");
    CHECK(count_graph(g, Method::fkt, cfg).method == "fkt");
    Graph big = build_A(1, 9, 8, 2);
    CountResult b = count_graph(big, Method::auto_, cfg);
    CHECK(b.method == "fkt");
    CHECK_FALSE(b.cross_checked);
    CHECK(code_of([&] { count_graph(big, Method::brute, cfg); }) == ErrorCode::TooLarge);
    CHECK(parse_method("auto") == Method::auto_);
    CHECK(code_of([] { parse_method("magic"); }) == ErrorCode::BadSpec);

    const std::string json = count_report_json(g, a);
    CHECK(json.find("\"count\"") != std::string::npos);
    CHECK(json.find("\"graph_hash\"") != std::string::npos);
    CHECK(json.find("\"factors\"") != std::string::npos);
}

TEST_CASE("count cache") {
    const std::string path = temp_path("cache.jsonl");
    std::filesystem::remove(path);
    SuiteConfig cfg;
    Graph g = build_A(1, 4, 4, 1);
    {
        CountCache cache(path);
        CHECK(cache.size() == 0);
        CountResult first = count_graph(g, Method::auto_, cfg, &cache);
        CHECK_FALSE(first.from_cache);
        CountResult second = count_graph(g, Method::auto_, cfg, &cache);
        CHECK(second.from_cache);
        CHECK(second.count == first.count);
        CHECK(code_of([&] { cache.put(graph_hash_hex(g), first.count + 1, "fkt"); }) == ErrorCode::CacheCorrupt);
    }
    {
        CountCache reloaded(path);
        CHECK(reloaded.size() == 1);
        CHECK(reloaded.get(graph_hash_hex(g)).value() == count_fkt(g));
        CHECK_FALSE(reloaded.get("0000000000000000").has_value());
    }
    {
        std::ofstream out(path, std::ios::app);
        out << "not json\n";
    }
    CHECK(code_of([&] { CountCache broken(path); }) == ErrorCode::CacheCorrupt);
    std::filesystem::remove(path);
    CountCache missing(temp_path("absent.jsonl"));
    CHECK(missing.size() == 0);
}

TEST_CASE("configuration files") {
    const std::string path = temp_path("config.json");
    {
        std::ofstream out(path);
        out << R"({"perimeter_cap": 20, "seed": 5})";
    }
    SuiteConfig cfg = load_config(path);
    CHECK(cfg.perimeter_cap == 20);
    CHECK(cfg.seed == 5);
    {
        std::ofstream out(path);
        out << R"({"perimeter": 20})";
    }
    CHECK(code_of([&] { load_config(path); }) == ErrorCode::BadSpec);
    {
        std::ofstream out(path);
        out << "{";
    }
    CHECK(code_of([&] { load_config(path); }) == ErrorCode::BadSpec);
    std::filesystem::remove(path);
    SuiteConfig bad;
    bad.perimeter_cap = -1;
    CHECK_THROWS_AS(validate_config(bad), Error);
}

TEST_CASE("SVG output") {
    const std::string empty = svg_string(Graph{});
    CHECK(empty.find("<svg") != std::string::npos);
    CHECK(empty.find("</svg>") != std::string::npos);

    Graph tr = build_TR(2, 6);
    const std::string s = svg_string(tr);
    CHECK(count_of(s, "<circle") == 316);
    CHECK(count_of(s, "<line") == tr.edges.size());

    Graph w = assign_cross_weights(build_A(1, 4, 4, 1), {Rat(3), Rat(5), Rat(7)});
    SvgOptions opt;
    opt.show_weights = true;
    std::size_t weighted = 0;
    for (const Rat& r : w.weights) weighted += r != 1;
    CHECK(count_of(svg_string(w, opt), "<text") == weighted);

    opt.show_removed = true;
    opt.removed = {w.vertices[0]};
    Graph h = w.without(opt.removed);
    CHECK(count_of(svg_string(h, opt), "<circle") == h.size() + 1);
}

TEST_CASE("probe point screen") {
    CHECK_FALSE(point_passes_screen({Rat(1), Rat(1), Rat(1)}));
    CHECK_FALSE(point_passes_screen({Rat(5), Rat(2), Rat(3)}));
    CHECK_FALSE(point_passes_screen({Rat(3, 2), Rat(5), Rat(7)}));
    CHECK(code_of([] { screen_point({Rat(5), Rat(2), Rat(3)}); }) == ErrorCode::BadProbePoint);
    std::vector<WeightPoint> pts = default_probe_points(4);
    REQUIRE(pts.size() == 4);
    for (const WeightPoint& w : pts) CHECK(point_passes_screen(w));
    CHECK(default_probe_points(4)[3].x == pts[3].x);
}

TEST_CASE("exponent extraction") {
    const WeightPoint w = default_probe_points(1)[0];
    ConjectureExponents e{1, -2, 3, 0, 4, 2};
    Rat res;
    CHECK(extract_exponents(reconstruct(e, Rat(1), w), w, res) == e);
    CHECK(res == 1);
    ConjectureExponents zero;
    CHECK(extract_exponents(reconstruct(zero, Rat(13), w), w, res) == zero);
    CHECK(res == 13);
}

TEST_CASE("conjecture probe") {
    std::vector<WeightPoint> pts = default_probe_points(4);
    ProbeResult r = conjecture_probe(FamilyKind::A, 1, 4, 4, 1, pts);
    CHECK(r.consistent);
    CHECK(r.per_point.size() == 4);
    CHECK(r.exponents == ConjectureExponents{1, 3, 0, 6, 8, 2});
    SUBCASE("fitted exponents predict a held-out point") {
        ProbeResult fit = conjecture_probe(FamilyKind::F, 2, 4, 4, 1, {pts[0], pts[1], pts[2]});
        REQUIRE(fit.consistent);
        Graph g = assign_cross_weights(build_F(2, 4, 4, 1), pts[3]);
        CHECK(reconstruct(fit.exponents, beta_w(4, 4, 1, pts[3]), pts[3]) == count_fkt(g));
    }
}

TEST_CASE("random Kuo tuples") {
    Graph g = build_A(1, 4, 4, 1);
    std::mt19937_64 r1(9), r2(9);
    std::vector<KuoTuple> a = random_kuo_tuples(g, r1, 10), b = random_kuo_tuples(g, r2, 10);
    REQUIRE(a.size() == 10);
    CHECK(a == b);
    for (const KuoTuple& t : a) CHECK(kuo_vertices_valid(g, t[0], t[1], t[2], t[3]));
}

TEST_CASE("TR split pieces") {
    TrSplit s = tr_split(2, 6);
    CHECK(s.g1.size() == 136);
    CHECK(s.g2.size() == 68);
    CHECK(s.g3.size() == 112);
    CHECK(s.g1.size() == build_A(3, 4, 6, 4).size());
    CHECK(s.g3.size() == build_F(3, 4, 6, 4).size());
    Graph tr = build_TR(2, 6);
    SplitReport first = split_check(tr, s.g1);
    CHECK(first.equal);
    CHECK(first.separating);
    CHECK(split_check(tr.without(s.g1), s.g3).equal);
}

TEST_CASE("suites") {
    SuiteConfig cfg;
    cfg.threads = 2;
    SuiteReport a = run_suite("sanity", cfg), b = run_suite("sanity", cfg);
    CHECK(a.passed());
    CHECK(a.to_jsonl() == b.to_jsonl());
    CHECK(code_of([&] { run_suite("nonsense", cfg); }) == ErrorCode::BadSpec);
    const std::regex line(R"(^\{.*"pass":(true|false).*\}$)");
    std::size_t lines = 0;
    std::istringstream in(a.to_jsonl());
    for (std::string l; std::getline(in, l); ++lines) CHECK(std::regex_match(l, line));
    CHECK(lines == a.records.size());
}

TEST_CASE("parallel_for visits every index once") {
    std::vector<int> hits(1000, 0);
    parallel_for(hits.size(), 4, [&](std::size_t i) { ++hits[i]; });
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    parallel_for(0, 4, [](std::size_t) { FAIL("called"); });
}
