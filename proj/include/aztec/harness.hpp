#pragma once

#include "aztec/families.hpp"
#include "aztec/formulas.hpp"
#include "aztec/matchcount.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace aztec {

struct SuiteConfig {
    int perimeter_cap = 28;
    int vertex_cap_brute = kDefaultBruteCap;
    int vertex_cap_fkt = kDefaultFktCap;
    int recurrence_grid = 20;
    std::string cache_path;  // empty: no cache
    std::uint64_t seed = 20240601;
    int threads = 0;         // 0: hardware concurrency
};

// Reads a JSON object with any of the SuiteConfig field names. Throws BadSpec.
SuiteConfig load_config(const std::string& path);
void validate_config(const SuiteConfig& cfg);
// AZTEC_CACHE overrides the configured cache path.
std::string effective_cache_path(const SuiteConfig& cfg);

// ---- family spec strings ----

enum class SpecKind { A, F, TR, TA, TB, AR, AAR };

struct FamilySpec {
    SpecKind kind = SpecKind::A;
    int index = 0;               // 1..3 for A/F
    std::vector<int> params;
    LatticeKind lattice = LatticeKind::GridB;
};

// "A1:9,8,2", "F3:5,8,4", "TR:2,6", "TA:5,7,4,3", "TB:4,6,3,4", "AR:2,2@full", "AAR:3,3@b".
FamilySpec parse_spec(const std::string& text);
std::string to_string(const FamilySpec& spec);
Graph build_spec(const FamilySpec& spec);
// Closed-form value for the spec, when one is known.
std::optional<Rat> expected_count(const FamilySpec& spec);
std::optional<FactoredCount> expected_factored(const FamilySpec& spec);

// Lattice paths with N, NE, E steps.
Int delannoy(int m, int n);

// ---- counting ----

enum class Method { fkt, brute, auto_ };

Method parse_method(const std::string& name);
const char* method_name(Method m);

class CountCache {
public:
    CountCache() = default;
    // Loads an existing JSON-lines file; throws CacheCorrupt on disagreeing duplicates.
    explicit CountCache(std::string path);

    std::optional<Rat> get(const std::string& key) const;
    void put(const std::string& key, const Rat& count, const std::string& method);
    std::size_t size() const;

private:
    std::string path_;
    mutable std::mutex mu_;
    std::map<std::string, Rat> entries_;
};

struct CountResult {
    Rat count;
    std::string method;      // "fkt" or "brute"
    bool cross_checked = false;
    bool from_cache = false;
};

// auto: brute force up to the brute cap, cross-checked against FKT; FKT above it.
// Throws TooLarge past the caps and OracleMismatch when the two routes disagree.
CountResult count_graph(const Graph& g, Method method, const SuiteConfig& cfg, CountCache* cache = nullptr);

std::string count_report_json(const Graph& g, const CountResult& r);

// ---- rendering ----

struct SvgOptions {
    bool show_weights = false;
    std::vector<Point> removed;  // drawn hollow when show_removed
    bool show_removed = false;
    double scale = 20.0;
};

std::string svg_string(const Graph& g, const SvgOptions& opt = {});
void render_svg(const Graph& g, const std::string& out, const SvgOptions& opt = {});

// ---- conjecture probe ----

struct ConjectureExponents {
    long long X = 0, Y = 0, Z = 0, T = 0, Q = 0, K = 0;
    bool operator==(const ConjectureExponents&) const = default;
};

struct ProbeResult {
    bool consistent = false;
    ConjectureExponents exponents;
    std::vector<ConjectureExponents> per_point;
    std::vector<std::string> residues;  // decimal residue per point after extraction
};

// Throws BadProbePoint unless 2, x, y, z, x^2+2xyz+2y^2z^2, 2x^2+5xyz+4y^2z^2 are
// pairwise coprime integers greater than 1.
void screen_point(const WeightPoint& w);
bool point_passes_screen(const WeightPoint& w);
// First n screened points in a fixed enumeration order.
std::vector<WeightPoint> default_probe_points(int n);
ConjectureExponents extract_exponents(const Rat& value, const WeightPoint& w, Rat& residue);
Rat reconstruct(const ConjectureExponents& e, const Rat& prefactor, const WeightPoint& w);
ProbeResult conjecture_probe(FamilyKind family, int i, int a, int b, int c,
                             const std::vector<WeightPoint>& points, int fkt_cap = kDefaultFktCap);

// ---- Kuo tuples and the TR split ----

using KuoTuple = std::array<Point, 4>;

// Class-alternating 4-tuples in cyclic order on faces with at least four boundary vertices.
std::vector<KuoTuple> random_kuo_tuples(const Graph& g, std::mt19937_64& rng, int count);

struct TrSplit {
    std::vector<Point> g1, g2, g3;
};

// Two diagonal cuts of TR_{a,b}: g1 is the west piece with the vertex count of
// A3_{2a,3a,2a}, g3 the east piece with the vertex count of F3_{2a,3a,2a}.
TrSplit tr_split(int a, int b);

// ---- suites ----

struct CheckRecord {
    std::string suite;
    std::string check;
    std::string spec;        // enough to rebuild the instance
    bool pass = false;
    std::string computed;
    std::string expected;
    std::string detail;
};

struct SuiteReport {
    std::vector<CheckRecord> records;
    bool passed() const;
    std::size_t failures() const;
    std::string to_jsonl() const;
};

void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

// Individual check groups; run_suite composes them.
std::vector<CheckRecord> check_aztec_diamonds(const SuiteConfig& cfg);
std::vector<CheckRecord> check_null_rectangles(const SuiteConfig& cfg);
std::vector<CheckRecord> check_delannoy(const SuiteConfig& cfg);
std::vector<CheckRecord> check_oracle_equivalence(const SuiteConfig& cfg);
std::vector<CheckRecord> check_family_counts(const SuiteConfig& cfg, int max_b = 6);
std::vector<CheckRecord> check_trimmed_augmented(const SuiteConfig& cfg);
std::vector<CheckRecord> check_trimmed_rectangles(const SuiteConfig& cfg);
std::vector<CheckRecord> check_kuo(const SuiteConfig& cfg, int tuples = 50, int max_vertices = 60);
std::vector<CheckRecord> check_formula_recurrences(const SuiteConfig& cfg);
std::vector<CheckRecord> check_graph_recurrences(const SuiteConfig& cfg, int perimeter_cap = 20);
std::vector<CheckRecord> check_tr_split(const SuiteConfig& cfg);
std::vector<CheckRecord> check_conjecture(const SuiteConfig& cfg, int perimeter_cap = 16);

const std::vector<std::string>& suite_names();
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);

} // namespace aztec
