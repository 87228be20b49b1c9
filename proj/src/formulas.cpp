#include "aztec/formulas.hpp"

#include <sstream>

namespace aztec {

namespace {

long long mod(long long a, long long m) { return ((a % m) + m) % m; }

Rat pow_rat(long base, long long e) {
    Int p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e < 0 ? -e : e));
    return e < 0 ? Rat(Int(1), p) : Rat(p);
}

FactoredCount base(int pre, long long e2, long long a, long long b, long long c) {
    FactoredCount f;
    f.prefactor = pre;
    f.exp2 = e2;
    f.exp5 = g_fn(a, b, c);
    f.exp11 = q_fn(a, b, c);
    return f;
}

int sigma(int i) { return i == 1 ? 1 : 5 - i; }

} // namespace

long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long g_fn(long long a, long long b, long long c) {
    return (b - a) * (b - c) + floor_div((a - c) * (a - c), 3);
}

long long q_fn(long long a, long long b, long long c) {
    return floor_div((a - b + c) * (a - b + c), 4);
}

int alpha_fn(long long a, long long b, long long c) {
    switch (mod(3 * b + a - c, 6)) {
    case 1: return 2;
    case 5: return 3;
    default: return 1;
    }
}

int beta_fn(long long a, long long b, long long c) {
    switch (mod(3 * b + a - c, 6)) {
    case 1: return 3;
    case 5: return 2;
    default: return 1;
    }
}

long long tau_fn(long long u, long long v) {
    const bool ue = mod(u, 2) == 0, ve = mod(v, 2) == 0;
    long long num = 0;
    if (ue && ve) num = u + v;
    else if (ue) num = u;
    else if (ve) num = v;
    if (mod(num, 2) != 0) throw Error(ErrorCode::NonIntegerTau, "tau half is fractional");
    return num / 2;
}

Rat FactoredCount::value() const {
    return Rat(prefactor) * pow_rat(2, exp2) * pow_rat(3, exp3) * pow_rat(5, exp5) * pow_rat(11, exp11);
}

std::string FactoredCount::to_string() const {
    std::ostringstream os;
    os << prefactor << "*2^" << exp2 << "*3^" << exp3 << "*5^" << exp5 << "*11^" << exp11;
    return os.str();
}

FactoredCount phi(int i, long long a, long long b, long long c) {
    const int al = alpha_fn(a, b, c);
    switch (i) {
    case 1: return base(al, g_fn(a, b, c + 1), a, b, c);
    case 2: return base(al, g_fn(a, b, c - 1) - floor_div(a - c + 1, 3) + (a - b), a, b, c);
    case 3: return base(al, g_fn(a, b, c - 1) - floor_div(a - c + 1, 3), a, b, c);
    }
    throw Error(ErrorCode::InvalidParams, "family index must be 1, 2 or 3");
}

FactoredCount psi(int i, long long a, long long b, long long c) {
    const int be = beta_fn(a, b, c);
    switch (i) {
    case 1: return base(be, g_fn(a, b, c - 1), a, b, c);
    case 2: return base(be, g_fn(a, b, c + 1) + floor_div(a - c + 1, 3) - (a - b), a, b, c);
    case 3: return base(be, g_fn(a, b, c + 1) + floor_div(a - c + 1, 3), a, b, c);
    }
    throw Error(ErrorCode::InvalidParams, "family index must be 1, 2 or 3");
}

Triple ta_triple(int m, int n, int h1, int h2, TaMapping mapping) {
    const int k1 = (h1 + 1) / 2, k2 = (h2 + 1) / 2;
    if (mapping == TaMapping::Statement) return {m - k1 + 1, n - k1 + 1, k2};
    return {n - k2 + 1, m - k2 + 1, k1};
}

Triple tb_triple(int m, int n, int h1, int h2, TbMapping mapping) {
    const int k1 = (h1 + 1) / 2, k2 = (h2 + 1) / 2;
    const int shift = mapping == TbMapping::Printed ? 1 : 0;
    return {m - k1 + shift, n - k1 + shift, k2};
}

FactoredCount thm_TR(int a, int b) {
    if (a < 1 || b < 2 * a) throw Error(ErrorCode::HypothesisViolated, "TR needs a >= 1 and b >= 2a");
    FactoredCount f;
    const long long k = a / 2;
    if (a % 2 == 0) {
        f.exp2 = f.exp5 = 8 * k * k;
        f.exp11 = 2 * k * k;
    } else {
        f.exp2 = f.exp5 = 2LL * a * a;
        f.exp11 = 2 * k * (k + 1);
    }
    return f;
}

namespace {

void check_trim_hypothesis(int m, int n, int h1, int h2) {
    if (h1 < 0 || h2 < 0 || (h1 + 1) / 2 + (h2 + 1) / 2 != 2 * (n - m))
        throw Error(ErrorCode::HypothesisViolated, "floor((h1+1)/2) + floor((h2+1)/2) != 2(n-m)");
}

} // namespace

FactoredCount thm_TA(int m, int n, int h1, int h2, TaMapping mapping) {
    check_trim_hypothesis(m, n, h1, h2);
    Triple t = ta_triple(m, n, h1, h2, mapping);
    FactoredCount f = base(alpha_fn(t.a, t.b, t.c), g_fn(t.a, t.b, t.c + 1), t.a, t.b, t.c);
    f.exp3 = tau_fn(h1, h2);
    return f;
}

FactoredCount thm_TB(int m, int n, int h1, int h2, TbMapping mapping) {
    check_trim_hypothesis(m, n, h1, h2);
    Triple t = tb_triple(m, n, h1, h2, mapping);
    FactoredCount f = base(beta_fn(t.a, t.b, t.c), g_fn(t.a, t.b, t.c - 1), t.a, t.b, t.c);
    f.exp3 = tau_fn(h1 + 1, h2 + 1);
    return f;
}

RecurrenceReport recurrence_check(RecurrenceId r, const TripleFn& s, const TripleFn& dia,
                                  long long a, long long b, long long c) {
    const TripleFn& d = dia ? dia : s;
    RecurrenceReport rep;
    switch (r) {
    case RecurrenceId::R1:
        rep.lhs = s(a, b, c) * s(a - 3, b - 3, c - 2);
        rep.rhs = s(a - 2, b - 1, c) * s(a - 1, b - 2, c - 2) + s(a - 1, b - 1, c - 1) * s(a - 2, b - 2, c - 1);
        break;
    case RecurrenceId::R2: {
        Rat mid = s(a - 1, b - 1, c);
        rep.lhs = s(a, b, c) * s(a - 2, b - 2, c);
        rep.rhs = mid * mid + s(a, b, c + 1) * s(a - 2, b - 2, c - 1);
        break;
    }
    case RecurrenceId::R3:
    case RecurrenceId::R6: {
        const TripleFn& other = r == RecurrenceId::R3 ? s : d;
        Rat mid = s(a - 1, b - 1, 0);
        rep.lhs = s(a, b, 0) * s(a - 2, b - 2, 0);
        rep.rhs = mid * mid + s(a, b, 1) * other(3 * b - 2 * a, 2 * b - a, 1);
        break;
    }
    case RecurrenceId::R4:
        rep.lhs = s(a, b, c) * s(a - 2, b - 3, c - 2);
        rep.rhs = s(a - 1, b - 1, c) * s(a - 1, b - 2, c - 2) + s(a - 2, b - 2, c - 1) * s(a, b - 1, c - 1);
        break;
    case RecurrenceId::R5:
        rep.lhs = s(a, b, c) * s(a - 2, b - 3, c - 2);
        rep.rhs = d(c, b - 1, a - 1) * s(a - 1, b - 2, c - 2) + s(a - 2, b - 2, c - 1) * s(a, b - 1, c - 1);
        break;
    }
    rep.equal = rep.lhs == rep.rhs;
    return rep;
}

RecurrenceReport recurrence_check(RecurrenceId r, const TripleFn& star, long long a, long long b, long long c) {
    return recurrence_check(r, star, TripleFn{}, a, b, c);
}

TripleFn phi_fn(int i) {
    return [i](long long a, long long b, long long c) { return phi(i, a, b, c).value(); };
}

TripleFn psi_fn(int i) {
    return [i](long long a, long long b, long long c) { return psi(i, a, b, c).value(); };
}

bool reflection_check(ReflectionKind kind, int i, long long a, long long b, long long c) {
    const long long d = 2 * b - a - 2 * c, e = 3 * b - 2 * a - 2 * c;
    const long long f = 2 * a - 2 * b + c < 0 ? -(2 * a - 2 * b + c) : 2 * a - 2 * b + c;
    auto P = [](int j, long long x, long long y, long long z) { return phi(j, x, y, z).value(); };
    auto S = [](int j, long long x, long long y, long long z) { return psi(j, x, y, z).value(); };
    switch (kind) {
    case ReflectionKind::vertical:
        return P(i, a, b, c) == S(4 - i, f, e, d) && S(i, a, b, c) == P(4 - i, f, e, d);
    case ReflectionKind::horizontal:
        return P(i, a, b, c) == P(sigma(i), b, a, f) && S(i, a, b, c) == S(sigma(i), b, a, f);
    case ReflectionKind::switch_:
        return S(i, a - 1, b - 1, c) == P(4 - i, c, b - 1, a - 1) &&
               P(i, a - 1, b - 1, c) == S(4 - i, c, b - 1, a - 1);
    }
    return false;
}

SmallFactors factor_small(const Rat& n) {
    if (n.get_den() != 1 || n <= 0) throw Error(ErrorCode::NotInteger, "expected a positive integer");
    SmallFactors out;
    Int v = n.get_num();
    auto strip = [&](unsigned long p, long long& e) {
        while (mpz_divisible_ui_p(v.get_mpz_t(), p)) {
            mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), p);
            ++e;
        }
    };
    strip(2, out.exp2);
    strip(3, out.exp3);
    strip(5, out.exp5);
    strip(11, out.exp11);
    out.cofactor = v;
    return out;
}

Rat alpha_w(long long a, long long b, long long c, const WeightPoint& w) {
    const Rat yz = w.y * w.z;
    switch (mod(3 * b + a - c, 6)) {
    case 5: return (w.x + 2 * yz) * yz / (w.x * w.x);
    case 3: return yz / w.x;
    case 1: return (w.x + yz) / w.x;
    default: return 1;
    }
}

Rat beta_w(long long a, long long b, long long c, const WeightPoint& w) {
    const Rat yz = w.y * w.z;
    switch (mod(3 * b + a - c, 6)) {
    case 1: return (w.x + 2 * yz) / yz;
    case 3: return w.x / yz;
    case 5: return (w.x + yz) * w.x / (yz * yz);
    default: return 1;
    }
}

} // namespace aztec
