#include "aztec/matchcount.hpp"

#include <cstdint>
#include <mutex>

namespace aztec {

namespace {

using u64 = std::uint64_t;

u64 pow_mod(u64 b, u64 e, u64 m) {
    u64 r = 1;
    b %= m;
    while (e) {
        if (e & 1) r = r * b % m;
        b = b * b % m;
        e >>= 1;
    }
    return r;
}

bool is_prime32(u64 n) {
    if (n < 2) return false;
    for (u64 p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull})
        if (n % p == 0) return n == p;
    u64 d = n - 1;
    int s = 0;
    while (d % 2 == 0) {
        d /= 2;
        ++s;
    }
    for (u64 a : {2ull, 7ull, 61ull}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s && composite; ++i) {
            x = x * x % n;
            if (x == n - 1) composite = false;
        }
        if (composite) return false;
    }
    return true;
}

// Descending primes below 2^31.
u64 nth_prime(std::size_t k) {
    static std::mutex mu;
    static std::vector<u64> primes;
    std::lock_guard<std::mutex> lock(mu);
    u64 cand = primes.empty() ? (1ull << 31) - 1 : primes.back() - 2;
    while (primes.size() <= k) {
        while (!is_prime32(cand)) cand -= 2;
        primes.push_back(cand);
        cand -= 2;
    }
    return primes[k];
}

u64 det_mod(std::vector<u64> m, int n, u64 p) {
    u64 det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (m[static_cast<std::size_t>(r) * n + col]) {
                piv = r;
                break;
            }
        if (piv < 0) return 0;
        u64* pr = &m[static_cast<std::size_t>(piv) * n];
        if (piv != col) {
            u64* cr = &m[static_cast<std::size_t>(col) * n];
            for (int j = col; j < n; ++j) std::swap(pr[j], cr[j]);
            pr = cr;
            det = (p - det) % p;
        }
        det = det * pr[col] % p;
        const u64 inv = pow_mod(pr[col], p - 2, p);
        for (int r = col + 1; r < n; ++r) {
            u64* row = &m[static_cast<std::size_t>(r) * n];
            if (!row[col]) continue;
            const u64 f = (p - row[col] * inv % p) % p;
            for (int j = col; j < n; ++j)
                if (pr[j]) row[j] = (row[j] + f * pr[j]) % p;
        }
    }
    return det;
}

} // namespace

Int exact_determinant(const std::vector<Int>& a, int n) {
    if (n == 0) return 1;
    // Hadamard: |det| <= prod of row norms <= 2^bits
    std::size_t bits = 1;
    for (int r = 0; r < n; ++r) {
        Int normsq = 0;
        for (int c = 0; c < n; ++c) normsq += a[static_cast<std::size_t>(r) * n + c] * a[static_cast<std::size_t>(r) * n + c];
        if (normsq == 0) return 0;
        bits += (mpz_sizeinbase(normsq.get_mpz_t(), 2) + 1) / 2;
    }
    Int x = 0, modulus = 1;
    std::vector<u64> reduced(a.size());
    for (std::size_t k = 0; mpz_sizeinbase(modulus.get_mpz_t(), 2) <= bits + 1; ++k) {
        const u64 p = nth_prime(k);
        for (std::size_t i = 0; i < a.size(); ++i)
            reduced[i] = mpz_fdiv_ui(a[i].get_mpz_t(), static_cast<unsigned long>(p));
        const u64 r = det_mod(reduced, n, p);
        const u64 xm = mpz_fdiv_ui(x.get_mpz_t(), static_cast<unsigned long>(p));
        const u64 mm = mpz_fdiv_ui(modulus.get_mpz_t(), static_cast<unsigned long>(p));
        const u64 t = (r + p - xm) % p * pow_mod(mm, p - 2, p) % p;
        x += modulus * static_cast<unsigned long>(t);
        modulus *= static_cast<unsigned long>(p);
    }
    if (2 * x > modulus) x -= modulus;
    return x;
}

} // namespace aztec
