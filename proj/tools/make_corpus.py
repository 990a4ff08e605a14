#!/usr/bin/env python3
"""Regenerates corpus/odd.cat and corpus/reference.cat.

Usage: python3 tools/make_corpus.py [corpus-dir]
"""

import sys
from pathlib import Path


def factor(n):
    out, p = {}, 2
    while p * p <= n:
        while n % p == 0:
            out[p] = out.get(p, 0) + 1
            n //= p
        p += 1
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def partitions(k, largest=None):
    largest = k if largest is None else largest
    if k == 0:
        yield []
        return
    for first in range(min(k, largest), 0, -1):
        for rest in partitions(k - first, first):
            yield [first] + rest


def abelian_types(n):
    """Invariant factor lists d1 | d2 | ... for every abelian group of order n."""
    per_prime = [[(p, part) for part in partitions(e)] for p, e in sorted(factor(n).items())]
    combos = [[]]
    for options in per_prime:
        combos = [c + [o] for c in combos for o in options]
    for combo in combos:
        width = max(len(part) for _, part in combo)
        factors = [1] * width
        for p, part in combo:
            for i, e in enumerate(part):
                factors[width - 1 - i] *= p ** e
        yield [f for f in factors if f > 1]


def dp(*exprs):
    acc = exprs[-1]
    for e in reversed(exprs[:-1]):
        acc = f"DP({e},{acc})"
    return acc


def stanza(name, tags, expr=None, degree=None, gens=()):
    lines = ["[group]", f"name = {name}"]
    if expr is not None:
        lines.append(f"expr = {expr}")
    else:
        lines.append(f"degree = {degree}")
        lines += [f"gen = {g}" for g in gens]
    lines.append("tags = " + ", ".join(tags))
    return "\n".join(lines) + "\n"


# Explicit permutation generators, 0-based images, for groups the expression
# language cannot reach.

def perm_to_cycles(img):
    seen, out = set(), []
    for i in range(len(img)):
        if i in seen or img[i] == i:
            continue
        c, j = [], i
        while j not in seen:
            seen.add(j)
            c.append(j + 1)
            j = img[j]
        out.append("(" + " ".join(map(str, c)) + ")")
    return "".join(out) or "()"


def affine(m, mult, add, offset, degree):
    img = list(range(degree))
    for x in range(m):
        img[offset + x] = offset + (mult * x + add) % m
    return img


def ncycle(n, offset, degree):
    img = list(range(degree))
    for i in range(n):
        img[offset + i] = offset + (i + 1) % n
    return img


def combine(*imgs):
    """Product of permutations with disjoint supports."""
    degree = len(imgs[0])
    out = list(range(degree))
    for img in imgs:
        for i in range(degree):
            if img[i] != i:
                out[i] = img[i]
    return out


def mult_of_order(k, m):
    for r in range(2, m):
        x, e = r % m, 1
        while x != 1:
            x = x * r % m
            e += 1
            if e > m:
                break
        if x == 1 and e == k:
            return r
    raise ValueError((k, m))


def metacyclic(m, n, action_order, extra_cyclic=0):
    """C_m x| C_n where the C_n generator multiplies by a unit of the given order.

    When action_order < n the generator also runs an n-cycle on extra points so
    the group has order m*n. extra_cyclic > 1 adds a direct factor C_extra.
    """
    r = mult_of_order(action_order, m)
    tail = n if action_order < n else 0
    degree = m + tail + (extra_cyclic if extra_cyclic > 1 else 0)
    a = affine(m, 1, 1, 0, degree)
    b = affine(m, r, 0, 0, degree)
    if tail:
        b = combine(b, ncycle(n, m, degree))
    gens = [a, b]
    if extra_cyclic > 1:
        gens.append(ncycle(extra_cyclic, m + tail, degree))
    return degree, [perm_to_cycles(g) for g in gens]


def plane(p, diag):
    """Translations of F_p^2 plus diag(d0, d1)."""
    idx = lambda x, y: x * p + y
    tx = [0] * (p * p)
    ty = [0] * (p * p)
    d = [0] * (p * p)
    for x in range(p):
        for y in range(p):
            tx[idx(x, y)] = idx((x + 1) % p, y)
            ty[idx(x, y)] = idx(x, (y + 1) % p)
            d[idx(x, y)] = idx(diag[0] * x % p, diag[1] * y % p)
    return p * p, [perm_to_cycles(g) for g in (tx, ty, d)]


def c7_by_order27(kind):
    """C7 x| P with |P| = 27 acting through a quotient of order 3."""
    lam = 2  # order 3 mod 7
    if kind == "heis":
        # Heis(3) on F_3^2: s = (x+1, y), t = (x, y+x); s acts on C7.
        idx = lambda x, y: 7 + x * 3 + y
        degree = 16
        s = list(range(degree))
        t = list(range(degree))
        for x in range(3):
            for y in range(3):
                s[idx(x, y)] = idx((x + 1) % 3, y)
                t[idx(x, y)] = idx(x, (y + x) % 3)
        s = combine(s, affine(7, lam, 0, 0, degree))
    else:
        # ModMax(3) on Z/9: s = x+1, t = 4x; kind picks which one acts on C7.
        degree = 16
        s = affine(9, 1, 1, 7, degree)
        t = affine(9, 4, 0, 7, degree)
        if kind == "modmax-a":
            s = combine(s, affine(7, lam, 0, 0, degree))
        else:
            t = combine(t, affine(7, lam, 0, 0, degree))
    u = affine(7, 1, 1, 0, degree)
    return degree, [perm_to_cycles(g) for g in (u, s, t)]


def odd_corpus():
    out = [
        "# Odd-order groups of order at most 200.\n"
        "# Generated by tools/make_corpus.py; edit the script, not this file.\n"
        "# Coverage: every abelian type, every nonabelian group of order pq and p^2 q,\n"
        "# both nonabelian groups of order p^3 for p = 3, 5, and a partial list of the\n"
        "# nonabelian groups of orders 81 and 189. Completeness is taken from the\n"
        "# literature on small groups and is not proven here.\n"
    ]

    def add(name, tags, **kw):
        out.append("\n" + stanza(name, ["odd-order", "solvable"] + tags, **kw))

    for n in range(3, 201, 2):
        for factors in abelian_types(n):
            name = "x".join(f"C{f}" for f in factors)
            expr = dp(*(f"C({f})" for f in factors))
            add(name, ["abelian"] + (["cyclic"] if len(factors) == 1 else []), expr=expr)

    pq = [(7, 3), (13, 3), (11, 5), (19, 3), (31, 3), (37, 3), (43, 3), (31, 5), (61, 3)]
    for p, q in pq:
        add(f"F{p * q}", ["nonabelian", "pq"], expr=f"NonAbPQ({p},{q})")

    add("Heis3", ["nonabelian", "p-group", "exponent-p"], expr="Heis(3)")
    add("ModMax3", ["nonabelian", "p-group"], expr="ModMax(3)")
    add("Heis5", ["nonabelian", "p-group", "exponent-p"], expr="Heis(5)")
    add("ModMax5", ["nonabelian", "p-group"], expr="ModMax(5)")
    add("Frob75", ["nonabelian", "frobenius", "cunningham"], expr="Frob(5,3)")

    for name, expr in [
        ("C3xF21", dp("C(3)", "NonAbPQ(7,3)")),
        ("C5xF21", dp("C(5)", "NonAbPQ(7,3)")),
        ("C3xF39", dp("C(3)", "NonAbPQ(13,3)")),
        ("C7xF21", dp("C(7)", "NonAbPQ(7,3)")),
        ("C3xF55", dp("C(3)", "NonAbPQ(11,5)")),
        ("C3xF57", dp("C(3)", "NonAbPQ(19,3)")),
        ("C5xF39", dp("C(5)", "NonAbPQ(13,3)")),
        ("C9xF21", dp("C(9)", "NonAbPQ(7,3)")),
        ("C3xC3xF21", dp("ElemAb(3,2)", "NonAbPQ(7,3)")),
        ("C3xHeis3", dp("C(3)", "Heis(3)")),
        ("C3xModMax3", dp("C(3)", "ModMax(3)")),
        ("C5xHeis3", dp("C(5)", "Heis(3)")),
        ("C5xModMax3", dp("C(5)", "ModMax(3)")),
        ("C7xHeis3", dp("C(7)", "Heis(3)")),
        ("C7xModMax3", dp("C(7)", "ModMax(3)")),
    ]:
        add(name, ["nonabelian", "direct-product"], expr=expr)

    meta = [
        ("C7:C9", metacyclic(7, 9, 3)),
        ("C13:C9", metacyclic(13, 9, 3)),
        ("C19:C9", metacyclic(19, 9, 9)),
        ("C19:C9-k3", metacyclic(19, 9, 3)),
        ("C49:C3", metacyclic(49, 3, 3)),
        ("C9:C9", metacyclic(9, 9, 3)),
        ("C27:C3", metacyclic(27, 3, 3)),
        ("C7:C27", metacyclic(7, 27, 3)),
        ("C3xC7:C9", metacyclic(7, 9, 3, extra_cyclic=3)),
        ("C7^2:C3-scalar", plane(7, (2, 2))),
        ("C7^2:C3-inverse", plane(7, (2, 4))),
        ("C7:Heis3", c7_by_order27("heis")),
        ("C7:ModMax3-a", c7_by_order27("modmax-a")),
        ("C7:ModMax3-b", c7_by_order27("modmax-b")),
    ]
    for name, (degree, gens) in meta:
        tags = ["nonabelian"]
        if name.startswith("C7^2"):
            tags.append("frobenius")
        add(name, tags, degree=degree, gens=gens)

    add("C3wrC3", ["nonabelian", "p-group"], degree=9,
        gens=["(1 2 3)", "(1 4 7)(2 5 8)(3 6 9)"])
    return "".join(out)


def reference_corpus():
    out = [
        "# Even-order and small reference groups for the consecutive-spectrum checks.\n"
        "# Generated by tools/make_corpus.py.\n"
    ]
    refs = [
        ("C2", "C(2)"), ("C3", "C(3)"), ("C5", "C(5)"), ("C7", "C(7)"),
        ("C4", "C(4)"), ("C2^2", "ElemAb(2,2)"), ("S3", "S(3)"), ("C6", "C(6)"),
        ("A4", "A(4)"), ("S4", "S(4)"), ("Q8", "Q8"), ("A5", "A(5)"),
        ("S5", "S(5)"), ("A6", "A(6)"), ("S6", "S(6)"), ("A7", "A(7)"),
    ]
    for name, expr in refs:
        out.append("\n" + stanza(name, ["reference"], expr=expr))
    return "".join(out)


def main():
    root = Path(sys.argv[1]) if len(sys.argv) > 1 else Path(__file__).resolve().parent.parent / "corpus"
    root.mkdir(parents=True, exist_ok=True)
    (root / "odd.cat").write_text(odd_corpus())
    (root / "reference.cat").write_text(reference_corpus())


if __name__ == "__main__":
    main()
