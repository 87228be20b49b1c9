#include "aztec/formulas.hpp"

#include "doctest.h"

using namespace aztec;

namespace {

int mod6(long long v) { return static_cast<int>(((v % 6) + 6) % 6); }

} // namespace

TEST_CASE("exponent functions") {
    CHECK(g_fn(9, 8, 2) == 10);
    CHECK(q_fn(9, 8, 2) == 2);
    CHECK(floor_div(-7, 3) == -3);
    CHECK(floor_div(7, 3) == 2);
    for (int a = -5; a <= 5; ++a)
        for (int b = -5; b <= 5; ++b)
            for (int d : {-1, 0, 1}) CHECK(q_fn(a, b, b - a + d) == 0);
}

TEST_CASE("prefactors") {
    CHECK(alpha_fn(9, 8, 2) == 2);
    CHECK(beta_fn(9, 8, 2) == 3);
    for (int a = -8; a <= 8; ++a)
        for (int b = -8; b <= 8; ++b)
            for (int c = -8; c <= 8; ++c) {
                const int al = alpha_fn(a, b, c), be = beta_fn(a, b, c);
                CHECK(((al == 2 && be == 3) || (al == 3 && be == 2) || (al == 1 && be == 1)));
                CHECK((al == 2) == (mod6(3 * b + a - c) == 1));
            }
}

TEST_CASE("tau reads its own parities") {
    CHECK(tau_fn(4, 3) == 2);
    CHECK(tau_fn(1, 1) == 0);
    CHECK(tau_fn(4, 2) == 3);
    CHECK(tau_fn(3, 6) == 3);
}

TEST_CASE("closed forms for the families") {
    CHECK(phi(1, 9, 8, 2).value() == Rat(302500000000L));
    CHECK(psi(1, 5, 8, 4).value() == Rat(48000000000000L));
    for (int i = 1; i <= 3; ++i) {
        CHECK(phi(i, 4, 4, 1).exp3 == 0);
        CHECK(psi(i, 4, 4, 1).exp3 == 0);
    }
    CHECK_THROWS_AS(phi(4, 1, 1, 1), Error);
    SUBCASE("negative exponents stay exact") {
        FactoredCount f = phi(1, 0, 5, 0);
        if (f.has_negative_exponent()) CHECK(f.value().get_den() != 1);
        CHECK(f.value() > 0);
    }
}

TEST_CASE("closed forms for the trimmed regions") {
    for (int b = 2; b <= 6; ++b) CHECK(thm_TR(1, b).value() == 100);
    CHECK(thm_TR(2, 4).value() == Rat(12100000000L));
    CHECK(thm_TR(2, 9).value() == Rat(12100000000L));
    try {
        thm_TR(2, 3);
        FAIL("expected HypothesisViolated");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::HypothesisViolated);
    }
    FactoredCount ta = thm_TA(5, 7, 4, 3);
    CHECK(ta.value() == Rat(1125000000L));
    CHECK(factor_small(ta.value()).cofactor == 1);
    Triple t = ta_triple(5, 7, 4, 3);
    CHECK(t.a == 4);
    CHECK(t.b == 6);
    CHECK(t.c == 2);
    Triple p = ta_triple(5, 7, 4, 3, TaMapping::Proof);
    CHECK(p.a == 6);
    CHECK(p.b == 4);
    CHECK(p.c == 2);
    CHECK_THROWS_AS(thm_TB(4, 7, 3, 6), Error);
}

TEST_CASE("prefactor identity behind the first recurrence") {
    // b even and a - c divisible by 6.
    for (int b = 0; b <= 12; b += 2)
        for (int c = 0; c <= 6; ++c) {
            const int a = c + 6;
            CHECK(11 * alpha_fn(a, b, c) * alpha_fn(a - 3, b - 3, c - 2) ==
                  2 * alpha_fn(a - 2, b - 1, c) * alpha_fn(a - 1, b - 2, c - 2) +
                      alpha_fn(a - 1, b - 1, c - 1) * alpha_fn(a - 2, b - 2, c - 1));
            CHECK(alpha_fn(a, b, c) == 1);
            CHECK(alpha_fn(a - 2, b - 1, c) == 2);
        }
}

TEST_CASE("recurrences on a small box") {
    const int n = 8;
    for (int a = 0; a <= n; ++a)
        for (int b = 0; b <= n; ++b) {
            for (int c = 0; c <= n; ++c)
                for (int i = 1; i <= 3; ++i) {
                    CHECK(recurrence_check(RecurrenceId::R1, phi_fn(i), a, b, c).equal);
                    CHECK(recurrence_check(RecurrenceId::R1, psi_fn(i), a, b, c).equal);
                    CHECK(recurrence_check(RecurrenceId::R2, phi_fn(i), a, b, c).equal);
                    CHECK(recurrence_check(RecurrenceId::R4, psi_fn(i), a, b, c).equal);
                    CHECK(recurrence_check(RecurrenceId::R5, phi_fn(i), psi_fn(4 - i), a, b, c).equal);
                    CHECK(recurrence_check(RecurrenceId::R5, psi_fn(i), phi_fn(4 - i), a, b, c).equal);
                }
            CHECK(recurrence_check(RecurrenceId::R3, phi_fn(1), a, b, 0).equal);
            CHECK(recurrence_check(RecurrenceId::R6, phi_fn(2), phi_fn(3), a, b, 0).equal);
            CHECK(recurrence_check(RecurrenceId::R6, psi_fn(3), psi_fn(2), a, b, 0).equal);
            CHECK(phi(1, a - 2, b - 2, -1).value() == phi(1, 3 * b - 2 * a, 2 * b - a, 1).value());
        }
    SUBCASE("R2 for psi2 at (9,8,2)") {
        RecurrenceReport r = recurrence_check(RecurrenceId::R2, psi_fn(2), 9, 8, 2);
        CHECK(r.equal);
        CHECK(r.lhs == r.rhs);
    }
    SUBCASE("a non-solution is caught") {
        TripleFn sq = [](long long a, long long b, long long c) { return Rat(static_cast<long>((a + b + c) * (a + b + c) + 1)); };
        CHECK_FALSE(recurrence_check(RecurrenceId::R1, sq, 5, 5, 5).equal);
    }
}

TEST_CASE("reflection identities") {
    CHECK(phi(1, 5, 8, 4).value() == psi(3, 2, 6, 3).value());
    CHECK(reflection_check(ReflectionKind::vertical, 1, 5, 8, 4));
    CHECK(phi(2, 9, 8, 2).value() == phi(3, 8, 9, 4).value());
    CHECK(reflection_check(ReflectionKind::horizontal, 2, 9, 8, 2));
    CHECK(psi(2, 4, 7, 4).value() == phi(2, 4, 7, 4).value());
    CHECK(reflection_check(ReflectionKind::switch_, 2, 5, 8, 4));
    for (int a = 0; a <= 12; ++a)
        for (int b = 0; b <= 12; ++b)
            for (int c = 0; c <= 12; ++c)
                for (int i = 1; i <= 3; ++i) {
                    CHECK(reflection_check(ReflectionKind::switch_, i, a, b, c));
                    const long long d = 2 * b - a - 2 * c, e = 3 * b - 2 * a - 2 * c;
                    if (d < 0 || e < 0) continue;
                    if (a <= c + d) CHECK(reflection_check(ReflectionKind::vertical, i, a, b, c));
                    else CHECK(reflection_check(ReflectionKind::horizontal, i, a, b, c));
                }
}

TEST_CASE("perimeter parity") {
    for (int a = -10; a <= 10; ++a)
        for (int b = -10; b <= 10; ++b)
            for (int c = -10; c <= 10; ++c) {
                const long long d = 2 * b - a - 2 * c, e = 3 * b - 2 * a - 2 * c;
                if (d < 0 || e < 0) continue;
                const long long f = std::abs(2 * a - 2 * b + c);
                CHECK((a + b + c + d + e + f) % 2 == 0);
            }
}

TEST_CASE("small-prime factorisation") {
    SmallFactors f = factor_small(Rat(12100000000L));
    CHECK(f.exp2 == 8);
    CHECK(f.exp5 == 8);
    CHECK(f.exp11 == 2);
    CHECK(f.exp3 == 0);
    CHECK(f.cofactor == 1);
    SmallFactors one = factor_small(Rat(1));
    CHECK(one.exp2 == 0);
    CHECK(one.cofactor == 1);
    SmallFactors s = factor_small(Rat(98));
    CHECK(s.exp2 == 1);
    CHECK(s.cofactor == 49);
    CHECK_THROWS_AS(factor_small(Rat(1, 2)), Error);
}

TEST_CASE("weighted prefactors reduce to the plain ones") {
    const WeightPoint unit{};
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; b <= 6; ++b)
            for (int c = 0; c <= 6; ++c) {
                CHECK(alpha_w(a, b, c, unit) == alpha_fn(a, b, c));
                CHECK(beta_w(a, b, c, unit) == beta_fn(a, b, c));
            }
    const WeightPoint w{Rat(3), Rat(5), Rat(7)};
    // residue 1: (x + yz)/x and (x + 2yz)/(yz)
    CHECK(alpha_w(9, 8, 2, w) == Rat(38, 3));
    CHECK(beta_w(9, 8, 2, w) == Rat(73, 35));
    CHECK(alpha_w(0, 0, 0, w) == 1);
}
