#!/usr/bin/env python3
"""Regenerate include/hirzebruch/detail/exceptional_data.hpp.

The exceptional reflection arrangements are produced once, offline, and
shipped as exact coefficient tables.  Each arrangement is the set of mirrors
of a finite subgroup of PGL(3) given by explicit generators over a cyclotomic
field; a mirror is read off an involution g as any nonzero row of
g - trace(g) * I (rank one for involutions in these groups).

Usage: python3 tools/gen_exceptional_data.py > include/hirzebruch/detail/exceptional_data.hpp
"""
from fractions import Fraction
from functools import lru_cache
import itertools
import json
import sys


# ---------------------------------------------------------------- polynomials
def pdivmod(num, den):
    num = list(num)
    q = [Fraction(0)] * max(1, len(num) - len(den) + 1)
    while len(num) >= len(den) and any(num):
        shift = len(num) - len(den)
        c = num[-1] / den[-1]
        q[shift] = c
        for i, d in enumerate(den):
            num[i + shift] -= c * d
        while num and num[-1] == 0:
            num.pop()
    return q, num


@lru_cache(None)
def cyclotomic(m):
    poly = [Fraction(-1)] + [Fraction(0)] * (m - 1) + [Fraction(1)]
    for d in range(1, m):
        if m % d == 0:
            poly, r = pdivmod(poly, cyclotomic(d))
            assert not any(r)
    while poly[-1] == 0:
        poly.pop()
    return tuple(poly)


class Field:
    def __init__(self, m):
        self.m = m
        self.phi = cyclotomic(m)
        self.deg = len(self.phi) - 1

    def reduce(self, c):
        c = list(c)
        for k in range(len(c) - 1, self.deg - 1, -1):
            t = c[k]
            if t:
                for i in range(self.deg + 1):
                    c[k - self.deg + i] -= t * self.phi[i]
        c = c[: self.deg] + [Fraction(0)] * (self.deg - len(c[: self.deg]))
        return tuple(c)

    def elt(self, coeffs):
        return self.reduce([Fraction(x) for x in coeffs])

    def zeta(self, k):
        k %= self.m
        return self.reduce([Fraction(0)] * k + [Fraction(1)])

    def zero(self):
        return tuple([Fraction(0)] * self.deg)

    def one(self):
        return self.elt([1])

    def add(self, a, b):
        return tuple(x + y for x, y in zip(a, b))

    def sub(self, a, b):
        return tuple(x - y for x, y in zip(a, b))

    def scale(self, a, r):
        return tuple(x * r for x in a)

    def mul(self, a, b):
        out = [Fraction(0)] * (2 * self.deg)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    if y:
                        out[i + j] += x * y
        return self.reduce(out)

    def inv(self, a):
        # extended Euclid of a(x) against phi(x)
        r0, r1 = list(self.phi), [x for x in a]
        while r1 and r1[-1] == 0:
            r1.pop()
        s0, s1 = [Fraction(0)], [Fraction(1)]
        while len(r1) > 1:
            q, r = pdivmod(r0, r1)
            s = polysub(s0, polymul(q, s1))
            r0, r1, s0, s1 = r1, r, s1, s
            while r1 and r1[-1] == 0:
                r1.pop()
        assert len(r1) == 1 and r1[0] != 0
        return self.reduce([x / r1[0] for x in s1])

    def is_zero(self, a):
        return not any(a)


def polymul(a, b):
    out = [Fraction(0)] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def polysub(a, b):
    n = max(len(a), len(b))
    a = a + [Fraction(0)] * (n - len(a))
    b = b + [Fraction(0)] * (n - len(b))
    return [x - y for x, y in zip(a, b)]


# ------------------------------------------------------------------ matrices
def matmul(F, A, B):
    return tuple(
        tuple(
            F.add(F.add(F.mul(A[i][0], B[0][j]), F.mul(A[i][1], B[1][j])), F.mul(A[i][2], B[2][j]))
            for j in range(3)
        )
        for i in range(3)
    )


def normalize_matrix(F, M):
    flat = [e for row in M for e in row]
    lead = next(e for e in flat if not F.is_zero(e))
    li = F.inv(lead)
    return tuple(tuple(F.mul(e, li) for e in row) for row in M)


def normalize_vec(F, v):
    lead = next(e for e in v if not F.is_zero(e))
    li = F.inv(lead)
    return tuple(F.mul(e, li) for e in v)


def generate_group(F, gens, cap):
    gens = [normalize_matrix(F, g) for g in gens]
    ident = normalize_matrix(F, tuple(tuple(F.one() if i == j else F.zero() for j in range(3)) for i in range(3)))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for h in gens:
                p = normalize_matrix(F, matmul(F, g, h))
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
                    if len(seen) > cap:
                        return None
        frontier = nxt
    return seen


def mirrors(F, group):
    ident = normalize_matrix(F, tuple(tuple(F.one() if i == j else F.zero() for j in range(3)) for i in range(3)))
    lines = set()
    for g in group:
        if g == ident:
            continue
        g2 = normalize_matrix(F, matmul(F, g, g))
        if g2 != ident:
            continue
        tr = F.add(F.add(g[0][0], g[1][1]), g[2][2])
        M = [[F.sub(g[i][j], tr) if i == j else g[i][j] for j in range(3)] for i in range(3)]
        rows = [r for r in M if any(not F.is_zero(e) for e in r)]
        base = normalize_vec(F, rows[0])
        for r in rows[1:]:
            assert normalize_vec(F, r) == base, "involution is not a homology"
        lines.add(base)
    return sorted(lines)


# ------------------------------------------------------------- verification
def cross(F, u, v):
    return (
        F.sub(F.mul(u[1], v[2]), F.mul(u[2], v[1])),
        F.sub(F.mul(u[2], v[0]), F.mul(u[0], v[2])),
        F.sub(F.mul(u[0], v[1]), F.mul(u[1], v[0])),
    )


def signature(F, lines):
    points = {}
    for i, j in itertools.combinations(range(len(lines)), 2):
        p = normalize_vec(F, cross(F, lines[i], lines[j]))
        points.setdefault(p, set()).update((i, j))
    mult = sorted(len(s) for s in points.values())
    per_line = [sum(1 for s in points.values() if i in s) for i in range(len(lines))]
    return mult, per_line


def fmt(x):
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def to_json(name, m, lines):
    return json.dumps(
        {"name": name, "cyclotomic_order": m, "lines": [[[fmt(c) for c in e] for e in l] for l in lines]},
        separators=(",", ":"),
    )


# ---------------------------------------------------------------- groups
def icosahedral_group(F, phi, phi_inv):
    z, o = F.zero(), F.one()
    half = Fraction(1, 2)
    neg = lambda a: F.scale(a, -1)
    P = ((z, o, z), (z, z, o), (o, z, z))
    S = ((neg(o), z, z), (z, neg(o), z), (z, z, o))
    R = tuple(
        tuple(F.scale(e, half) for e in row)
        for row in ((o, neg(phi), phi_inv), (phi, phi_inv, neg(o)), (phi_inv, o, phi))
    )
    return [P, S, R]


def build_icosahedral():
    F = Field(5)
    # golden ratio 1 + zeta + zeta^4, inverse zeta + zeta^4
    phi = F.add(F.one(), F.add(F.zeta(1), F.zeta(4)))
    phi_inv = F.add(F.zeta(1), F.zeta(4))
    assert F.mul(phi, phi_inv) == F.one()
    group = generate_group(F, icosahedral_group(F, phi, phi_inv), 200)
    assert group is not None and len(group) == 60, len(group or [])
    return "icosahedral", 5, mirrors(F, group)


def build_klein():
    F = Field(7)
    z, o = F.zero(), F.one()
    S = ((F.zeta(4), z, z), (z, F.zeta(2), z), (z, z, F.zeta(1)))
    T = ((z, o, z), (z, z, o), (o, z, z))
    a = F.sub(F.zeta(1), F.zeta(6))
    b = F.sub(F.zeta(2), F.zeta(5))
    c = F.sub(F.zeta(4), F.zeta(3))
    R = ((a, b, c), (b, c, a), (c, a, b))
    group = generate_group(F, [S, T, R], 400)
    assert group is not None and len(group) == 168, len(group or [])
    return "klein", 7, mirrors(F, group)


def build_hesse():
    F = Field(3)
    z, o = F.zero(), F.one()
    lines = [(o, z, z), (z, o, z), (z, z, o)]
    for a in range(3):
        for b in range(3):
            lines.append((o, F.zeta(a), F.zeta(b)))
    return "hesse", 3, sorted(normalize_vec(F, l) for l in lines)


def build_g26():
    F = Field(3)
    _, _, hesse = build_hesse()
    z, o = F.zero(), F.one()
    neg = lambda a: F.scale(a, -1)
    extra = []
    for k in range(3):
        extra.append((o, neg(F.zeta(k)), z))
        extra.append((z, o, neg(F.zeta(k))))
        extra.append((neg(F.zeta(k)), z, o))
    return "g26", 3, sorted(set(hesse) | {normalize_vec(F, l) for l in extra})


def build_valentiner():
    F = Field(15)
    # sqrt5 = zeta5 - zeta5^2 - zeta5^3 + zeta5^4 with zeta5 = zeta15^3
    z5 = lambda k: F.zeta(3 * k)
    phi_inv = F.add(z5(1), z5(4))
    phi = F.add(F.one(), phi_inv)
    ico = icosahedral_group(F, phi, phi_inv)
    z, o = F.zero(), F.one()
    neg = lambda a: F.scale(a, -1)
    w = lambda k: F.zeta(5 * k)
    swaps = {
        "12": ((z, o, z), (o, z, z), (z, z, o)),
        "13": ((z, z, o), (z, o, z), (o, z, z)),
        "23": ((o, z, z), (z, z, o), (z, o, z)),
    }
    for (sname, sw), a, b, sgn in itertools.product(swaps.items(), range(3), range(3), (1, -1)):
        D = ((o, z, z), (z, w(a), z), (z, z, F.scale(w(b), sgn)))
        g = matmul(F, sw, D)
        group = generate_group(F, ico + [g], 400)
        if group is not None and len(group) == 360:
            print(f"valentiner: swap {sname}, omega^{a}, {sgn}*omega^{b}", file=sys.stderr)
            return "valentiner", 15, mirrors(F, group)
    raise RuntimeError("no Valentiner generator found")


EXPECTED = {
    # line count, multiplicity multiset, per-line point count
    "icosahedral": (15, {2: 15, 3: 10, 5: 6}, 6),
    "klein": (21, {3: 28, 4: 21}, 8),
    "hesse": (12, {2: 12, 4: 9}, 5),
    "g26": (21, {2: 36, 4: 9, 5: 12}, 8),
    "valentiner": (45, {3: 120, 4: 45, 5: 36}, 16),
}


def main():
    out = []
    for build in (build_icosahedral, build_klein, build_hesse, build_g26, build_valentiner):
        name, m, lines = build()
        F = Field(m)
        mult, per_line = signature(F, lines)
        hist = {}
        for k in mult:
            hist[k] = hist.get(k, 0) + 1
        n_lines, exp_hist, exp_pl = EXPECTED[name]
        print(f"{name}: {len(lines)} lines, multiplicities {hist}, per-line {set(per_line)}", file=sys.stderr)
        assert len(lines) == n_lines and hist == exp_hist and set(per_line) == {exp_pl}, name
        out.append((name, to_json(name, m, lines)))

    print("// Generated by tools/gen_exceptional_data.py; do not edit by hand.")
    print("#pragma once\n")
    print("#include <string_view>\n")
    print("namespace hirzebruch::detail {\n")
    for name, js in out:
        print(f'inline constexpr std::string_view k_{name}_json = R"json({js})json";\n')
    print("}  // namespace hirzebruch::detail")


if __name__ == "__main__":
    main()
