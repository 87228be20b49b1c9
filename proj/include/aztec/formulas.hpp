#pragma once

#include "aztec/types.hpp"

#include <functional>
#include <string>

namespace aztec {

long long floor_div(long long a, long long b);

long long g_fn(long long a, long long b, long long c);
long long q_fn(long long a, long long b, long long c);
int alpha_fn(long long a, long long b, long long c);
int beta_fn(long long a, long long b, long long c);
// Parity cases are read from u and v themselves.
long long tau_fn(long long u, long long v);

struct FactoredCount {
    int prefactor = 1;
    long long exp2 = 0, exp3 = 0, exp5 = 0, exp11 = 0;

    Rat value() const;
    bool has_negative_exponent() const { return exp2 < 0 || exp3 < 0 || exp5 < 0 || exp11 < 0; }
    std::string to_string() const;
};

FactoredCount phi(int i, long long a, long long b, long long c);
FactoredCount psi(int i, long long a, long long b, long long c);

// Parameter substitution used for the trimmed rectangles.
enum class TaMapping { Statement, Proof };
enum class TbMapping { Resolved, Printed };

struct Triple {
    long long a = 0, b = 0, c = 0;
};
Triple ta_triple(int m, int n, int h1, int h2, TaMapping mapping = TaMapping::Statement);
Triple tb_triple(int m, int n, int h1, int h2, TbMapping mapping = TbMapping::Resolved);

FactoredCount thm_TR(int a, int b);
FactoredCount thm_TA(int m, int n, int h1, int h2, TaMapping mapping = TaMapping::Statement);
FactoredCount thm_TB(int m, int n, int h1, int h2, TbMapping mapping = TbMapping::Resolved);

enum class RecurrenceId { R1, R2, R3, R4, R5, R6 };

using TripleFn = std::function<Rat(long long, long long, long long)>;

struct RecurrenceReport {
    Rat lhs, rhs;
    bool equal = false;
};

// R5 and R6 couple two functions; for them `diamond` must be given (first equation of the pair).
RecurrenceReport recurrence_check(RecurrenceId r, const TripleFn& star, const TripleFn& diamond,
                                  long long a, long long b, long long c);
RecurrenceReport recurrence_check(RecurrenceId r, const TripleFn& star, long long a, long long b,
                                  long long c);

TripleFn phi_fn(int i);
TripleFn psi_fn(int i);

enum class ReflectionKind { vertical, horizontal, switch_ };

bool reflection_check(ReflectionKind kind, int i, long long a, long long b, long long c);

struct SmallFactors {
    long long exp2 = 0, exp3 = 0, exp5 = 0, exp11 = 0;
    Int cofactor{1};
};

SmallFactors factor_small(const Rat& n);

Rat alpha_w(long long a, long long b, long long c, const WeightPoint& w);
Rat beta_w(long long a, long long b, long long c, const WeightPoint& w);

} // namespace aztec
