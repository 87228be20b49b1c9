#pragma once

#include <gmpxx.h>

#include <compare>
#include <stdexcept>
#include <string>

namespace aztec {

using Int = mpz_class;
using Rat = mpq_class;

enum class ErrorCode {
    NonClosing,
    SelfIntersecting,
    NotHorizontalSide,
    InvalidParams,
    HypothesisViolated,
    NotGridB,
    NonPlanarEmbedding,
    TooLarge,
    BadVertexSelection,
    ConditionsViolated,
    NonIntegerTau,
    NotInteger,
    BadProbePoint,
    CountTooLarge,
    CacheCorrupt,
    IoError,
    BadSpec,
    OracleMismatch,
};

const char* error_name(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(std::string(error_name(code)) + ": " + what), code_(code) {}
    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

// Lattice vertex, unit grid coordinates (east = +x, north = +y).
struct Point {
    int x = 0;
    int y = 0;
    auto operator<=>(const Point&) const = default;
};

// Half-unit coordinates. Lattice vertices are (even, even), square centers (odd, odd).
// Contour corners and cross centers live at square centers.
struct HalfPoint {
    int x = 0;
    int y = 0;
    auto operator<=>(const HalfPoint&) const = default;
};

inline HalfPoint doubled(Point p) { return {2 * p.x, 2 * p.y}; }

// 0 or 1; edges always join opposite classes.
inline int color(Point p) { return ((p.x + p.y) % 2 + 2) % 2; }

struct WeightPoint {
    Rat x{1};
    Rat y{1};
    Rat z{1};
};

} // namespace aztec
