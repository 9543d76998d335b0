#!/usr/bin/env python3
"""Regenerate src/conway_table.inc.

Computes Conway polynomials C(p, m) for all prime powers p^m <= 512:
the lexicographically smallest monic primitive polynomial of degree m
over GF(p) (under the standard alternating-sign word order) that is
norm-compatible with C(p, d) for every proper divisor d of m.
"""
import sys
from sympy import primerange, isprime

CAP = 512


def poly_mulmod(a, b, mod, p):
    res = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                res[i + j] = (res[i + j] + ai * bj) % p
    return poly_rem(res, mod, p)


def poly_rem(a, mod, p):
    a = a[:]
    dm = len(mod) - 1
    inv_lead = pow(mod[-1], -1, p)
    for i in range(len(a) - 1, dm - 1, -1):
        if a[i]:
            c = (a[i] * inv_lead) % p
            for j in range(dm + 1):
                a[i - dm + j] = (a[i - dm + j] - c * mod[j]) % p
    a = a[:dm]
    while len(a) > 1 and a[-1] == 0:
        a.pop()
    return a


def poly_powmod(base, e, mod, p):
    result = [1]
    base = poly_rem(base, mod, p)
    while e:
        if e & 1:
            result = poly_mulmod(result, base, mod, p)
        base = poly_mulmod(base, base, mod, p)
        e >>= 1
    return result


def prime_factors(n):
    fs, d = set(), 2
    while d * d <= n:
        while n % d == 0:
            fs.add(d)
            n //= d
        d += 1
    if n > 1:
        fs.add(n)
    return fs


def x_order_is_full(f, p, m):
    """order of x in GF(p)[x]/(f) equals p^m - 1 (implies f irreducible+primitive)"""
    group = p ** m - 1
    if poly_powmod([0, 1], group, f, p) != [1]:
        return False
    for r in prime_factors(group):
        if poly_powmod([0, 1], group // r, f, p) == [1]:
            return False
    return True


def compatible(f, p, m, table):
    """C(p,d)(x^((p^m-1)/(p^d-1))) == 0 mod f for maximal proper divisors d"""
    for ell in prime_factors(m):
        d = m // ell
        sub = table[(p, d)]
        e = (p ** m - 1) // (p ** d - 1)
        xe = poly_powmod([0, 1], e, f, p)
        acc = [0]
        for c in reversed(sub):
            acc = poly_mulmod(acc, xe, f, p)
            acc = [(u + (c if k == 0 else 0)) % p for k, u in enumerate(acc)] \
                if acc else [c % p]
            while len(acc) > 1 and acc[-1] == 0:
                acc.pop()
        if acc != [0]:
            return False
    return True


def candidates(p, m):
    """monic degree-m polynomials in Conway word order"""
    def rec(word):
        if len(word) == m:
            yield word
            return
        for digit in range(p):
            yield from rec(word + [digit])
    for word in rec([]):
        # word[t] corresponds to coefficient a_{m-1-t} via a = (-1)^(m-(m-1-t)) * b
        coeffs = [0] * (m + 1)
        coeffs[m] = 1
        for t, b in enumerate(word):
            deg = m - 1 - t
            sign = -1 if ((m - deg) % 2) else 1
            coeffs[deg] = (sign * b) % p
        yield coeffs


def conway(p, m, table):
    if m == 1:
        # x - g for the smallest primitive root g
        for g in range(1, p):
            ok = all(pow(g, (p - 1) // r, p) != 1 for r in prime_factors(p - 1))
            if ok:
                return [(-g) % p, 1]
        raise RuntimeError
    for f in candidates(p, m):
        if x_order_is_full(f, p, m) and compatible(f, p, m, table):
            return f
    raise RuntimeError((p, m))


def main():
    table = {}
    entries = []
    for p in primerange(2, CAP + 1):
        m = 1
        while p ** m <= CAP:
            table[(p, m)] = conway(p, m, table)
            entries.append((p ** m, p, m, table[(p, m)]))
            m += 1
    entries.sort()
    out = ["// Generated by scripts/make_conway_table.py; do not edit by hand.",
           "// Monic modulus coefficients, lowest degree first."]
    for order, p, m, f in entries:
        coeffs = ", ".join(str(c) for c in f)
        out.append(f"{{{p}, {m}, {{{coeffs}}}}},   // GF({order})")
    sys.stdout.write("\n".join(out) + "\n")


if __name__ == "__main__":
    main()
