#!/usr/bin/env python3
"""Writes the pre-Lie part of corpus/ and re-checks every member with an
independent pure-Python implementation of the identity and nilpotency.

Brace files are produced afterwards by `plb to-brace` (see README)."""

import json
import sys
from fractions import Fraction
from pathlib import Path

# name -> (dim, [(i, j, k, value)]) with 1-based indices: e_i . e_j += value e_k
MEMBERS = {
    "zero1": (1, []),
    "zero2": (2, []),
    "zero3": (3, []),
    "N2": (2, [(1, 1, 2, 1)]),
    "H3": (3, [(1, 2, 3, 1)]),
    "F4": (4, [(1, 1, 2, 1), (2, 1, 3, 1), (1, 2, 4, 1)]),
    # F4 grown by one more grafting, e1 . (e1 . e1) = e5; class 5.
    "F5": (5, [(1, 1, 2, 1), (2, 1, 3, 1), (1, 2, 4, 1), (1, 4, 5, 1)]),
}
PRIMES = (7, 11)


def product_table(dim, entries):
    t = [[[Fraction(0)] * dim for _ in range(dim)] for _ in range(dim)]
    for i, j, k, v in entries:
        t[i - 1][j - 1][k - 1] += Fraction(v)
    return t


def mul(t, x, y):
    d = len(x)
    out = [Fraction(0)] * d
    for i in range(d):
        if x[i] == 0:
            continue
        for j in range(d):
            if y[j] == 0:
                continue
            for k in range(d):
                out[k] += x[i] * y[j] * t[i][j][k]
    return out


def unit(d, i):
    return [Fraction(int(r == i)) for r in range(d)]


def is_prelie(t):
    d = len(t)
    e = [unit(d, i) for i in range(d)]
    for x in e:
        for y in e:
            for z in e:
                lhs = [a - b for a, b in zip(mul(t, mul(t, x, y), z), mul(t, x, mul(t, y, z)))]
                rhs = [a - b for a, b in zip(mul(t, mul(t, y, x), z), mul(t, y, mul(t, x, z)))]
                if lhs != rhs:
                    return False
    return True


def rank(vectors):
    rows = [list(v) for v in vectors]
    r = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                f = rows[i][c] / rows[r][c]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def nilpotency_class(t):
    """Smallest n with A^n = 0, where A^n is spanned by all products of n elements."""
    d = len(t)
    chain = [None, [unit(d, i) for i in range(d)]]
    for n in range(2, d + 3):
        gens = []
        for j in range(1, n):
            for x in chain[j]:
                for y in chain[n - j]:
                    p = mul(t, x, y)
                    if any(p):
                        gens.append(p)
        if rank(gens) == 0:
            return n
        chain.append(gens)
    raise ValueError("not nilpotent")


def write(path, dim, entries, field):
    doc = {
        "basis": [f"e{i}" for i in range(1, dim + 1)],
        "dim": dim,
        "entries": [[i, j, k, f"{Fraction(v).numerator}/{Fraction(v).denominator}"]
                    for i, j, k, v in sorted(entries)],
        "field": field,
        "format_version": 1,
        "kind": "prelie",
    }
    lines = []
    for key in sorted(doc):
        if key == "entries":
            body = ",\n  ".join(json.dumps(e, separators=(",", ":")) for e in doc[key])
            lines.append(f' "{key}": ' + (f"[\n  {body}\n ]" if body else "[]"))
        else:
            lines.append(f' "{key}": ' + json.dumps(doc[key], separators=(",", ":")))
    path.write_text("{\n" + ",\n".join(lines) + "\n}\n")


def main():
    root = Path(sys.argv[1] if len(sys.argv) > 1 else "corpus")
    (root / "prelie").mkdir(parents=True, exist_ok=True)
    (root / "fixtures").mkdir(parents=True, exist_ok=True)
    for name, (dim, entries) in MEMBERS.items():
        t = product_table(dim, entries)
        assert is_prelie(t), name
        s = nilpotency_class(t)
        print(f"{name}: dim {dim}, class {s}")
        write(root / "prelie" / f"{name}.json", dim, entries, "Q")
        for p in PRIMES:
            if p > s:
                write(root / "prelie" / f"{name}_p{p}.json", dim, entries, {"p": p})

    # F4 with e1 . e3 = e4 added breaks the identity at (e1, e2, e1).
    dim, entries = MEMBERS["F4"]
    tampered = entries + [(1, 3, 4, 1)]
    assert not is_prelie(product_table(dim, tampered))
    write(root / "fixtures" / "F4_tampered.json", dim, tampered, "Q")
    (root / "fixtures" / "malformed.json").write_text(
        '{\n "dim": 2,\n "entries": [[1, 1, 3, "1/1"]],\n "field": "Q",\n'
        ' "format_version": 1,\n "kind": "prelie"\n}\n')


if __name__ == "__main__":
    main()
