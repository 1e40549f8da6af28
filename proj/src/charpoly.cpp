#include <cstdint>
#include <stdexcept>
#include <vector>

#include "zetagraph/matrix.hpp"

namespace zg {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((u128(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a % n, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

std::vector<u64> primes_below_2_62(size_t count) {
    std::vector<u64> ps;
    u64 c = (1ull << 62) - 1;
    while (ps.size() < count) {
        if (is_prime_u64(c)) ps.push_back(c);
        c -= 2;
    }
    return ps;
}

// char poly of an upper Hessenberg matrix mod p, ascending coefficients.
std::vector<u64> hessenberg_charpoly_modp(const std::vector<std::vector<u64>>& h, u64 p) {
    const int n = static_cast<int>(h.size());
    // polys[m] = char poly of leading m x m block.
    std::vector<std::vector<u64>> polys(n + 1);
    polys[0] = {1};
    for (int m = 1; m <= n; ++m) {
        const std::vector<u64>& pm1 = polys[m - 1];
        std::vector<u64> cur(m + 1, 0);
        // (x - h[m-1][m-1]) * p_{m-1}
        u64 diag = h[m - 1][m - 1] % p;
        for (int i = 0; i < m; ++i) {
            cur[i + 1] = (cur[i + 1] + pm1[i]) % p;
            cur[i] = (cur[i] + p - mulmod(diag, pm1[i], p)) % p;
        }
        // - sum over subdiagonal chains
        u64 chain = 1;
        for (int k = 1; k <= m - 1; ++k) {
            chain = mulmod(chain, h[m - k][m - k - 1] % p, p);
            if (chain == 0) break;
            u64 f = mulmod(h[m - 1 - k][m - 1] % p, chain, p);
            if (f == 0) continue;
            const std::vector<u64>& pk = polys[m - 1 - k];
            for (size_t i = 0; i < pk.size(); ++i)
                cur[i] = (cur[i] + p - mulmod(f, pk[i], p)) % p;
        }
        polys[m] = std::move(cur);
    }
    return polys[n];
}

std::vector<u64> charpoly_modp(const IntMatrix& a, u64 p) {
    const int n = a.rows();
    std::vector<std::vector<u64>> h(n, std::vector<u64>(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            h[i][j] = mpz_fdiv_ui(a.at(i, j).get_mpz_t(), p);
    // similarity reduction to upper Hessenberg
    for (int k = 0; k + 2 < n; ++k) {
        int piv = -1;
        for (int i = k + 1; i < n; ++i)
            if (h[i][k] != 0) { piv = i; break; }
        if (piv < 0) continue;
        if (piv != k + 1) {
            std::swap(h[piv], h[k + 1]);
            for (int i = 0; i < n; ++i) std::swap(h[i][piv], h[i][k + 1]);
        }
        u64 inv = invmod(h[k + 1][k], p);
        for (int i = k + 2; i < n; ++i) {
            if (h[i][k] == 0) continue;
            u64 f = mulmod(h[i][k], inv, p);
            for (int j = k; j < n; ++j)
                h[i][j] = (h[i][j] + p - mulmod(f, h[k + 1][j], p)) % p;
            for (int r = 0; r < n; ++r)
                h[r][k + 1] = (h[r][k + 1] + mulmod(f, h[r][i], p)) % p;
        }
    }
    return hessenberg_charpoly_modp(h, p);
}

}  // namespace

IntPoly char_poly(const IntMatrix& a) {
    if (!a.square()) throw std::invalid_argument("char_poly of non-square matrix");
    const int n = a.rows();
    if (n == 0) return IntPoly(1);

    // |coeff| <= C(n,k) * prod of row 2-norms (principal-minor Hadamard bound)
    size_t bits = n + 64;
    for (int i = 0; i < n; ++i) {
        BigInt norm_sq(0);
        for (int j = 0; j < n; ++j) norm_sq += a.at(i, j) * a.at(i, j);
        if (norm_sq > 1) bits += mpz_sizeinbase(norm_sq.get_mpz_t(), 2) / 2 + 1;
    }
    size_t count = bits / 61 + 1;
    std::vector<u64> primes = primes_below_2_62(count);

    std::vector<std::vector<u64>> residues(count);
    for (size_t i = 0; i < count; ++i) residues[i] = charpoly_modp(a, primes[i]);

    // incremental CRT into the symmetric range
    std::vector<BigInt> coeffs(n + 1);
    BigInt modulus;
    for (size_t i = 0; i < count; ++i) {
        BigInt p(primes[i]);
        if (i == 0) {
            for (int c = 0; c <= n; ++c) coeffs[c] = BigInt(residues[0][c]);
            modulus = p;
            continue;
        }
        u64 m_mod_p = mpz_fdiv_ui(modulus.get_mpz_t(), primes[i]);
        u64 minv = invmod(m_mod_p, primes[i]);
        for (int c = 0; c <= n; ++c) {
            u64 cur = mpz_fdiv_ui(coeffs[c].get_mpz_t(), primes[i]);
            u64 delta = residues[i][c] >= cur ? residues[i][c] - cur : residues[i][c] + primes[i] - cur;
            coeffs[c] += modulus * BigInt(mulmod(delta, minv, primes[i]));
        }
        modulus *= p;
    }
    BigInt half = modulus / 2;
    for (auto& c : coeffs)
        if (c > half) c -= modulus;
    return IntPoly(std::move(coeffs));
}

}  // namespace zg
