#pragma once

#include "aztec/graph.hpp"
#include "aztec/region.hpp"

namespace aztec {

struct FamilyParams {
    int a = 0, b = 0, c = 0;
    int d = 0, e = 0, f = 0;
    int perimeter = 0;
    bool case_tall = false;  // a > c + d
};

FamilyParams derive_params(int a, int b, int c);
bool valid_params(int a, int b, int c);

enum class CrossAlignment { EastmostEdgeOfCross, WestmostEdgeOfCross };

enum class TrimVariant { TA, TB };

struct TrimRectParams {
    int m = 0, n = 0, h1 = 0, h2 = 0;
    TrimVariant variant = TrimVariant::TA;
};

// Hypothesis floor((h1+1)/2) + floor((h2+1)/2) = 2(n-m) plus the shape domain
// (both cuts stay strictly above/below the east corner).
bool valid_trim_params(const TrimRectParams& p);

enum class FamilyKind { A, F };

// Half-unit position of the east corner of a rectangle aligned to the crosses.
HalfPoint east_corner(const LatticeSpec& lat, CrossAlignment alignment);
// Start corner of the six-sided contours.
HalfPoint contour_origin(const LatticeSpec& lat);

Graph build_aztec_rectangle(const LatticeSpec& lat, int m, int n,
                            CrossAlignment alignment = CrossAlignment::EastmostEdgeOfCross);
Graph build_augmented_aztec(const LatticeSpec& lat, int m, int n,
                            CrossAlignment alignment = CrossAlignment::EastmostEdgeOfCross);
Graph build_TR(int a, int b);
Graph build_TA(const TrimRectParams& p);
Graph build_TB(const TrimRectParams& p);

ContourSpec family_contour(int i, int a, int b, int c, HalfPoint start);
// Region inside the contour before any stripping or trimming.
Graph build_region(int i, int a, int b, int c);
Graph build_family(FamilyKind kind, int i, int a, int b, int c);
inline Graph build_A(int i, int a, int b, int c) { return build_family(FamilyKind::A, i, a, b, c); }
inline Graph build_F(int i, int a, int b, int c) { return build_family(FamilyKind::F, i, a, b, c); }

enum class Axis { vertical, horizontal };

Graph reflect(const Graph& g, Axis axis);
// True when h is a translate of g (vertices, edges and weights).
bool is_translate(const Graph& g, const Graph& h);

enum class CrossWeight { one, x, y, z };
CrossWeight cross_weight_class(const LatticeSpec& lat, Point p, Point q);
Graph assign_cross_weights(const Graph& g, const WeightPoint& w);

} // namespace aztec
