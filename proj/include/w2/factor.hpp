#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "w2/errors.hpp"
#include "w2/rational.hpp"
#include "w2/univariate.hpp"

namespace w2 {

namespace detail {

// ---------------------------------------------------------------------------
// Dense polynomials over F_p, p a word-sized prime.  Coefficients are kept
// in [0, p); vectors are trimmed so the top entry is non-zero.
// ---------------------------------------------------------------------------

using ZpPoly = std::vector<long>;

inline void zp_trim(ZpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int zp_deg(const ZpPoly& a) { return static_cast<int>(a.size()) - 1; }

inline long zp_pow_scalar(long b, long e, long p) {
    long r = 1 % p;
    b %= p;
    while (e > 0) {
        if (e & 1) r = (r * b) % p;
        b = (b * b) % p;
        e >>= 1;
    }
    return r;
}

inline long zp_inv_scalar(long a, long p) { return zp_pow_scalar(((a % p) + p) % p, p - 2, p); }

inline ZpPoly zp_sub(const ZpPoly& a, const ZpPoly& b, long p) {
    ZpPoly c(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) c[i] = ((c[i] - b[i]) % p + p) % p;
    zp_trim(c);
    return c;
}

inline ZpPoly zp_mul(const ZpPoly& a, const ZpPoly& b, long p) {
    if (a.empty() || b.empty()) return {};
    ZpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    zp_trim(c);
    return c;
}

inline ZpPoly zp_scale(const ZpPoly& a, long s, long p) {
    ZpPoly c = a;
    for (auto& v : c) v = (v * (s % p)) % p;
    zp_trim(c);
    return c;
}

// Quotient and remainder of a by b; b must have an invertible leading entry.
inline std::pair<ZpPoly, ZpPoly> zp_divmod(ZpPoly a, const ZpPoly& b, long p) {
    check(!b.empty(), "zp_divmod by zero");
    const long inv = zp_inv_scalar(b.back(), p);
    ZpPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    while (zp_deg(a) >= zp_deg(b)) {
        const long c = (a.back() * inv) % p;
        const std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = ((a[shift + i] - c * b[i]) % p + p) % p;
        zp_trim(a);
        if (a.empty()) break;
    }
    zp_trim(q);
    return {std::move(q), std::move(a)};
}

inline ZpPoly zp_rem(ZpPoly a, const ZpPoly& b, long p) {
    return zp_divmod(std::move(a), b, p).second;
}

inline ZpPoly zp_monic(const ZpPoly& a, long p) {
    if (a.empty()) return a;
    return zp_scale(a, zp_inv_scalar(a.back(), p), p);
}

inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b, long p) {
    while (!b.empty()) {
        ZpPoly r = zp_rem(std::move(a), b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return zp_monic(a, p);
}

inline ZpPoly zp_deriv(const ZpPoly& a, long p) {
    if (a.size() <= 1) return {};
    ZpPoly c(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) c[i - 1] = (a[i] * static_cast<long>(i % p)) % p;
    zp_trim(c);
    return c;
}

inline ZpPoly zp_powmod(ZpPoly base, const Int& e, const ZpPoly& mod, long p) {
    ZpPoly r = {1 % p};
    base = zp_rem(std::move(base), mod, p);
    Int exp = e;
    while (exp > 0) {
        if (mpz_odd_p(exp.get_mpz_t())) r = zp_rem(zp_mul(r, base, p), mod, p);
        base = zp_rem(zp_mul(base, base, p), mod, p);
        exp >>= 1;
    }
    return r;
}

// Extended Euclid in F_p[t]: returns (s, t) with s*a + t*b = 1 for coprime
// a, b.  The usual degree bounds deg s < deg b, deg t < deg a hold.
inline std::pair<ZpPoly, ZpPoly> zp_bezout(const ZpPoly& a, const ZpPoly& b, long p) {
    ZpPoly r0 = a, r1 = b;
    ZpPoly s0 = {1}, s1 = {};
    ZpPoly t0 = {}, t1 = {1};
    while (!r1.empty()) {
        auto [q, r2] = zp_divmod(r0, r1, p);
        ZpPoly s2 = zp_sub(s0, zp_mul(q, s1, p), p);
        ZpPoly t2 = zp_sub(t0, zp_mul(q, t1, p), p);
        r0 = std::move(r1); r1 = std::move(r2);
        s0 = std::move(s1); s1 = std::move(s2);
        t0 = std::move(t1); t1 = std::move(t2);
    }
    check(zp_deg(r0) == 0, "bezout of non-coprime polynomials");
    const long inv = zp_inv_scalar(r0[0], p);
    return {zp_scale(s0, inv, p), zp_scale(t0, inv, p)};
}

/**
 * Berlekamp factorization of a squarefree monic polynomial over F_p.
 * Builds the Frobenius matrix, extracts a basis of the fixed algebra by
 * elimination, and splits with gcd(f, v - s) over all basis vectors v and
 * shifts s until the factor count matches the nullity.  Everything is
 * deterministic, so repeated runs agree.
 */
inline std::vector<ZpPoly> berlekamp(const ZpPoly& g, long p) {
    const int n = zp_deg(g);
    check(n >= 1, "berlekamp needs positive degree");
    if (n == 1) return {g};
    const auto idx = [](int i) { return static_cast<std::size_t>(i); };

    // rows[i] = t^(p*i) mod g
    std::vector<ZpPoly> rows(idx(n));
    rows[0] = {1};
    const ZpPoly xp = zp_powmod({0, 1}, Int(p), g, p);
    for (int i = 1; i < n; ++i) rows[idx(i)] = zp_rem(zp_mul(rows[idx(i - 1)], xp, p), g, p);

    // Fixed vectors satisfy v Q = v; solve (Q - I)^T v^T = 0.
    std::vector<std::vector<long>> m(idx(n), std::vector<long>(idx(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            long q = j <= zp_deg(rows[idx(i)]) ? rows[idx(i)][idx(j)] : 0;
            if (i == j) q = ((q - 1) % p + p) % p;
            m[idx(j)][idx(i)] = q;
        }

    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
        int pr = row;
        while (pr < n && m[idx(pr)][idx(col)] == 0) ++pr;
        if (pr == n) continue;
        std::swap(m[idx(pr)], m[idx(row)]);
        const long inv = zp_inv_scalar(m[idx(row)][idx(col)], p);
        for (int j = 0; j < n; ++j) m[idx(row)][idx(j)] = (m[idx(row)][idx(j)] * inv) % p;
        for (int i = 0; i < n; ++i) {
            if (i == row) continue;
            const long f = m[idx(i)][idx(col)];
            if (f == 0) continue;
            for (int j = 0; j < n; ++j)
                m[idx(i)][idx(j)] = ((m[idx(i)][idx(j)] - f * m[idx(row)][idx(j)]) % p + p) % p;
        }
        pivot_col.push_back(col);
        ++row;
    }
    std::vector<ZpPoly> basis;
    for (int col = 0; col < n; ++col) {
        if (std::find(pivot_col.begin(), pivot_col.end(), col) != pivot_col.end()) continue;
        ZpPoly v(idx(n), 0);
        v[idx(col)] = 1;
        for (std::size_t r = 0; r < pivot_col.size(); ++r)
            v[idx(pivot_col[r])] = ((-m[r][idx(col)]) % p + p) % p;
        zp_trim(v);
        basis.push_back(std::move(v));
    }

    const std::size_t target = basis.size();
    std::vector<ZpPoly> factors = {zp_monic(g, p)};
    for (const ZpPoly& v : basis) {
        if (factors.size() == target) break;
        if (zp_deg(v) <= 0) continue;  // constant vectors never split anything
        for (long s = 0; s < p && factors.size() < target; ++s) {
            ZpPoly vs = v;
            vs[0] = ((vs[0] - s) % p + p) % p;
            zp_trim(vs);
            std::vector<ZpPoly> next;
            for (const ZpPoly& f : factors) {
                if (zp_deg(f) <= 1) {
                    next.push_back(f);
                    continue;
                }
                ZpPoly d = zp_gcd(f, vs, p);
                if (zp_deg(d) > 0 && zp_deg(d) < zp_deg(f)) {
                    ZpPoly q = zp_monic(zp_divmod(f, d, p).first, p);
                    next.push_back(std::move(d));
                    next.push_back(std::move(q));
                } else {
                    next.push_back(f);
                }
            }
            factors = std::move(next);
        }
    }
    check(factors.size() == target, "berlekamp splitting incomplete");
    std::sort(factors.begin(), factors.end(), [](const ZpPoly& a, const ZpPoly& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    return factors;
}

// ---------------------------------------------------------------------------
// Dense polynomials over Z/mZ for a big modulus m (a prime power during
// lifting).  Coefficients are mpz values reduced to [0, m).
// ---------------------------------------------------------------------------

using ZmPoly = std::vector<Int>;

inline void zm_trim(ZmPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline int zm_deg(const ZmPoly& a) { return static_cast<int>(a.size()) - 1; }

inline ZmPoly zm_reduce(ZmPoly a, const Int& m) {
    for (auto& c : a) {
        c %= m;
        if (c < 0) c += m;
    }
    zm_trim(a);
    return a;
}

inline ZmPoly zm_add(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly c(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) {
        c[i] += b[i];
        if (c[i] >= m) c[i] -= m;
    }
    zm_trim(c);
    return c;
}

inline ZmPoly zm_sub(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    ZmPoly c(std::max(a.size(), b.size()), Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) {
        c[i] -= b[i];
        if (c[i] < 0) c[i] += m;
    }
    zm_trim(c);
    return c;
}

inline ZmPoly zm_mul(const ZmPoly& a, const ZmPoly& b, const Int& m) {
    if (a.empty() || b.empty()) return {};
    ZmPoly c(a.size() + b.size() - 1, Int(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
    }
    return zm_reduce(std::move(c), m);
}

// Division with remainder by a monic divisor.
inline std::pair<ZmPoly, ZmPoly> zm_divmod_monic(ZmPoly a, const ZmPoly& b, const Int& m) {
    check(!b.empty() && b.back() == 1, "zm division needs a monic divisor");
    ZmPoly q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, Int(0));
    while (zm_deg(a) >= zm_deg(b)) {
        const Int c = a.back();
        const std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t i = 0; i < b.size(); ++i) {
            a[shift + i] -= c * b[i];
            a[shift + i] %= m;
            if (a[shift + i] < 0) a[shift + i] += m;
        }
        zm_trim(a);
        if (a.empty()) break;
    }
    zm_trim(q);
    return {std::move(q), std::move(a)};
}

inline ZmPoly zp_to_zm(const ZpPoly& a) {
    ZmPoly c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
    return c;
}

/**
 * One quadratic Hensel step.  Input data satisfy, modulo m:
 *   f = g*h,  s*g + t*h = 1,  h monic,  deg f = deg g + deg h,
 *   deg s < deg h,  deg t < deg g.
 * Output (g*, h*, s*, t*) satisfies the same relations modulo m^2.
 */
struct HenselPair {
    ZmPoly g, h, s, t;
};

inline HenselPair hensel_step(const ZmPoly& f, const HenselPair& in, const Int& m) {
    const Int m2 = m * m;
    const ZmPoly f2 = zm_reduce(f, m2);
    ZmPoly g = zm_reduce(in.g, m2), h = zm_reduce(in.h, m2);
    ZmPoly s = zm_reduce(in.s, m2), t = zm_reduce(in.t, m2);

    ZmPoly e = zm_sub(f2, zm_mul(g, h, m2), m2);
    auto [q, r] = zm_divmod_monic(zm_mul(s, e, m2), h, m2);
    ZmPoly g1 = zm_add(g, zm_add(zm_mul(t, e, m2), zm_mul(q, g, m2), m2), m2);
    ZmPoly h1 = zm_add(h, r, m2);

    ZmPoly b = zm_sub(zm_add(zm_mul(s, g1, m2), zm_mul(t, h1, m2), m2), ZmPoly{Int(1)}, m2);
    auto [c, d] = zm_divmod_monic(zm_mul(s, b, m2), h1, m2);
    ZmPoly s1 = zm_sub(s, d, m2);
    ZmPoly t1 = zm_sub(t, zm_add(zm_mul(t, b, m2), zm_mul(c, g1, m2), m2), m2);
    return {std::move(g1), std::move(h1), std::move(s1), std::move(t1)};
}

// Lift the mod-p splitting f = g0*h0 (h0 monic, lc(g0) = lc(f) mod p) to a
// splitting modulo at least `target`, doubling the modulus each round.
inline std::pair<ZmPoly, ZmPoly> hensel_lift_pair(const ZmPoly& f, const ZpPoly& g0,
                                                  const ZpPoly& h0, long p, const Int& target) {
    auto [s0, t0] = zp_bezout(g0, h0, p);
    HenselPair cur{zp_to_zm(g0), zp_to_zm(h0), zp_to_zm(s0), zp_to_zm(t0)};
    Int m(p);
    while (m < target) {
        cur = hensel_step(f, cur, m);
        m *= m;
    }
    return {zm_reduce(cur.g, m), zm_reduce(cur.h, m)};
}

// Lift all modular factors of f (an integer polynomial with
// f = lc(f) * prod(parts) mod p, each part monic mod p) to monic factors
// modulo `target`, recursing on a balanced split of the list.
inline void hensel_tree(const ZmPoly& f, const std::vector<ZpPoly>& parts, long p,
                        const Int& target, std::vector<ZmPoly>& out) {
    check(!parts.empty(), "hensel_tree with no factors");
    if (parts.size() == 1) {
        // Make the node value monic: its leading entry is a unit mod target.
        ZmPoly v = zm_reduce(f, target);
        check(!v.empty(), "hensel_tree leaf vanished");
        Int inv;
        const int ok = mpz_invert(inv.get_mpz_t(), v.back().get_mpz_t(), target.get_mpz_t());
        check(ok != 0, "leading entry not invertible in hensel_tree");
        for (auto& c : v) {
            c *= inv;
            c %= target;
            if (c < 0) c += target;
        }
        out.push_back(std::move(v));
        return;
    }
    const std::size_t half = parts.size() / 2;
    std::vector<ZpPoly> left(parts.begin(), parts.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<ZpPoly> right(parts.begin() + static_cast<std::ptrdiff_t>(half), parts.end());

    // g0 carries the leading coefficient, h0 is the monic product.
    const ZmPoly fr = zm_reduce(f, Int(p));
    check(!fr.empty(), "hensel_tree node vanished mod p");
    ZpPoly g0 = {static_cast<long>(fr.back().get_si())};
    for (const ZpPoly& part : left) g0 = zp_mul(g0, part, p);
    ZpPoly h0 = {1};
    for (const ZpPoly& part : right) h0 = zp_mul(h0, part, p);

    auto [g, h] = hensel_lift_pair(f, g0, h0, p, target);
    hensel_tree(g, left, p, target, out);
    hensel_tree(h, right, p, target, out);
}

// ---------------------------------------------------------------------------
// Integer-level helpers for the Zassenhaus driver.
// ---------------------------------------------------------------------------

// Univariate rational polynomial -> integer coefficient vector.  Requires
// integral coefficients (callers normalize first).
inline std::vector<Int> to_int_vector(const UnivariatePolynomial& f) {
    std::vector<Int> v(static_cast<std::size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) {
        const Rat c = f.coeff(i);
        check(c.get_den() == 1, "expected integer coefficients");
        v[static_cast<std::size_t>(i)] = c.get_num();
    }
    return v;
}

inline UnivariatePolynomial from_int_vector(const std::vector<Int>& v) {
    std::vector<Rat> c(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) c[i] = Rat(v[i]);
    return UnivariatePolynomial::from_coeffs(std::move(c));
}

// Symmetric representative in (-m/2, m/2].
inline Int symmetric_mod(Int c, const Int& m) {
    c %= m;
    if (c < 0) c += m;
    if (2 * c > m) c -= m;
    return c;
}

/**
 * Factor a primitive squarefree integer polynomial of degree >= 1 with
 * positive leading coefficient into irreducible primitive integer factors.
 * Classic Zassenhaus: pick a prime keeping the polynomial squarefree,
 * factor mod p with Berlekamp, lift by Hensel past the coefficient bound,
 * recombine subsets by trial division.
 */
inline std::vector<std::vector<Int>> factor_squarefree_integer(const std::vector<Int>& g) {
    const int n = static_cast<int>(g.size()) - 1;
    check(n >= 1 && g.back() > 0, "factor_squarefree_integer input malformed");
    if (n == 1) return {g};

    // Prime selection: p must not divide lc(g) and g must stay squarefree
    // mod p.  Only finitely many primes fail, so the scan terminates.
    long p = 0;
    ZpPoly gp;
    for (Int cand(2);; mpz_nextprime(cand.get_mpz_t(), cand.get_mpz_t())) {
        const long pc = cand.get_si();
        if (g.back() % pc == 0) continue;
        ZpPoly red(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            Int c = g[i] % pc;
            if (c < 0) c += pc;
            red[i] = c.get_si();
        }
        zp_trim(red);
        if (zp_deg(red) != n) continue;
        if (zp_deg(zp_gcd(red, zp_deriv(red, pc), pc)) != 0) continue;
        p = pc;
        gp = std::move(red);
        break;
    }

    const std::vector<ZpPoly> modular = berlekamp(zp_monic(gp, p), p);
    if (modular.size() == 1) return {g};

    // Coefficient bound: factors of lc(g)*g have height at most
    // 2^n * sqrt(n+1) * H(g) * |lc(g)|; lift until p^k exceeds twice that.
    Int height(0);
    for (const Int& c : g) {
        const Int a = abs(c);
        if (a > height) height = a;
    }
    Int bound = height * abs(g.back()) * (n + 1);
    bound <<= static_cast<unsigned>(n);
    Int target(p);
    while (target <= 2 * bound) target *= p;

    std::vector<ZmPoly> lifted;
    {
        ZmPoly f(g.begin(), g.end());
        hensel_tree(f, modular, p, target, lifted);
    }
    {
        // Safety net for the trickiest code path: lc(g) times the monic
        // lifts must multiply back to g modulo the lifted modulus.
        ZmPoly prod = {Int(g.back() % target)};
        for (const ZmPoly& f : lifted) prod = zm_mul(prod, f, target);
        check(zm_reduce(ZmPoly(g.begin(), g.end()), target) == prod,
              "hensel lift does not multiply back");
    }

    // Subset recombination by cardinality.
    std::vector<std::vector<Int>> result;
    std::vector<Int> rem = g;
    std::vector<ZmPoly> pool = std::move(lifted);
    std::size_t card = 1;
    while (2 * card <= pool.size()) {
        // Enumerate cardinality-`card` subsets of the pool in lexicographic
        // index order; restart at the same cardinality after a hit.
        std::vector<std::size_t> pick(card);
        for (std::size_t i = 0; i < card; ++i) pick[i] = i;
        bool hit = false;
        for (;;) {
            ZmPoly prod = {rem.back() % target};
            for (std::size_t i : pick) prod = zm_mul(prod, pool[i], target);
            std::vector<Int> cand(prod.size());
            for (std::size_t i = 0; i < prod.size(); ++i) cand[i] = symmetric_mod(prod[i], target);
            UnivariatePolynomial cp = from_int_vector(cand).normalized();
            const auto quot = exact_divide(from_int_vector(rem), cp);
            if (quot) {
                result.push_back(to_int_vector(cp));
                rem = to_int_vector(quot->normalized());
                std::vector<ZmPoly> next_pool;
                for (std::size_t i = 0; i < pool.size(); ++i)
                    if (std::find(pick.begin(), pick.end(), i) == pick.end())
                        next_pool.push_back(std::move(pool[i]));
                pool = std::move(next_pool);
                hit = true;
                break;
            }
            // advance the combination
            std::size_t j = card;
            while (j > 0) {
                --j;
                if (pick[j] != pool.size() - card + j) {
                    ++pick[j];
                    for (std::size_t k = j + 1; k < card; ++k) pick[k] = pick[k - 1] + 1;
                    break;
                }
                if (j == 0) {
                    j = card + 1;  // exhausted marker
                    break;
                }
            }
            if (j == card + 1) break;
        }
        if (!hit) ++card;
        if (pool.empty()) break;
    }
    if (static_cast<int>(rem.size()) - 1 >= 1) result.push_back(rem);
    return result;
}

}  // namespace detail

/**
 * Yun squarefree decomposition of a non-constant polynomial over the
 * rationals: returns pairwise coprime squarefree monic parts with their
 * multiplicities, so f = lc * prod part_i^mult_i.
 */
inline std::vector<std::pair<UnivariatePolynomial, unsigned>> squarefree_decomposition(
    const UnivariatePolynomial& f) {
    if (f.is_zero()) throw domain_error("squarefree decomposition of zero");
    std::vector<std::pair<UnivariatePolynomial, unsigned>> out;
    if (f.degree() == 0) return out;
    const auto quot = [](const UnivariatePolynomial& a, const UnivariatePolynomial& b) {
        const auto q = exact_divide(a, b);
        detail::check(q.has_value(), "inexact division in squarefree decomposition");
        return *q;
    };
    const UnivariatePolynomial g = f.monic();
    const UnivariatePolynomial gp = g.derivative();
    const UnivariatePolynomial u = gcd(g, gp);
    UnivariatePolynomial v = quot(g, u);
    UnivariatePolynomial w = quot(gp, u);
    unsigned i = 1;
    while (v.degree() > 0) {
        const UnivariatePolynomial h = gcd(v, w - v.derivative());
        if (h.degree() > 0) out.emplace_back(h, i);
        w = quot(w - v.derivative(), h);
        v = quot(v, h);
        ++i;
    }
    return out;
}

/**
 * Complete factorization over the rationals.  Returns the monic irreducible
 * factors with multiplicities, sorted by degree and then coefficients, so
 * f = lc(f) * prod factor_i^mult_i.  Constants factor into the empty list.
 */
inline std::vector<std::pair<UnivariatePolynomial, unsigned>> univariate_factor(
    const UnivariatePolynomial& f) {
    if (f.is_zero()) throw domain_error("cannot factor the zero polynomial");
    std::vector<std::pair<UnivariatePolynomial, unsigned>> out;
    for (const auto& [part, mult] : squarefree_decomposition(f)) {
        const std::vector<Int> g = detail::to_int_vector(part.normalized());
        for (const auto& factor : detail::factor_squarefree_integer(g))
            out.emplace_back(detail::from_int_vector(factor).monic(), mult);
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
        for (int i = 0; i <= a.first.degree(); ++i) {
            if (a.first.coeff(i) != b.first.coeff(i)) return a.first.coeff(i) < b.first.coeff(i);
        }
        return a.second < b.second;
    });
    return out;
}

}  // namespace w2
