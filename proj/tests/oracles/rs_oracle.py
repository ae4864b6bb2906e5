#!/usr/bin/env python3
"""Independent recomputation of the figure-eight data, compared against the CLI.

usage: rs_oracle.py <knotrep binary> <source dir> <scratch dir>

Free-group words are lists of (generator, +1/-1). Permutations are tuples of
0-based images and act on the right, so words are applied left to right.
"""

import json
import math
import os
import re
import subprocess
import sys

import numpy as np

failures = []


def check(name, ok, detail=""):
    print(f"{'ok  ' if ok else 'FAIL'} {name}" + (f": {detail}" if detail else ""))
    if not ok:
        failures.append(name)


# words

def parse(text):
    if text.strip() == "1":
        return []
    out = []
    for tok in text.split():
        m = re.fullmatch(r"([A-Za-z]\w*?)(?:\^(-?\d+))?", tok)
        if not m:
            raise ValueError(tok)
        e = int(m.group(2) or 1)
        out += [(m.group(1), 1 if e > 0 else -1)] * abs(e)
    return reduce(out)


def reduce(w):
    out = []
    for g, e in w:
        if out and out[-1] == (g, -e):
            out.pop()
        else:
            out.append((g, e))
    return out


def inv(w):
    return [(g, -e) for g, e in reversed(w)]


def mul(*ws):
    return reduce([x for w in ws for x in w])


def power(g, k):
    return [(g, 1 if k > 0 else -1)] * abs(k)


def fmt(w):
    if not w:
        return "1"
    parts, i = [], 0
    while i < len(w):
        j = i
        while j < len(w) and w[j] == w[i]:
            j += 1
        k = (j - i) * w[i][1]
        parts.append(w[i][0] if k == 1 else f"{w[i][0]}^{k}")
        i = j
    return " ".join(parts)


def cyclic_class(w):
    """All rotations of the cyclic reduction of w and of its inverse."""
    w = reduce(w)
    while len(w) > 1 and w[0] == (w[-1][0], -w[-1][1]):
        w = w[1:-1]
    out = set()
    for v in (w, inv(w)):
        for i in range(max(len(v), 1)):
            out.add(tuple(v[i:] + v[:i]))
    return out


def substitute(w, images):
    return mul(*[images[g] if e > 0 else inv(images[g]) for g, e in w])


# two-bridge groups

def two_bridge_relator(alpha, beta):
    eps = [(-1) ** math.floor(k * beta / alpha) for k in range(1, alpha)]
    l = [("s" if k % 2 == 1 else "t", eps[k - 1]) for k in range(1, alpha)]
    return mul(l, [("s", 1)], inv(l), [("t", -1)])


def dihedral(alpha):
    n = (alpha - 1) // 2
    s = list(range(alpha))
    for i in range(2, n + 2):
        j = alpha + 2 - i
        s[i - 1], s[j - 1] = j - 1, i - 1
    a = [(i + 1) % alpha for i in range(alpha)]
    return {"s": tuple(s), "a": tuple(a)}


def act(point, w, perms):
    for g, e in w:
        p = perms[g]
        point = p[point] if e > 0 else p.index(point)
    return point


def perm_of(w, perms, degree):
    return tuple(act(i, w, perms) for i in range(degree))


def cycles_text(p):
    seen, out = set(), ""
    for i in range(len(p)):
        if i in seen or p[i] == i:
            continue
        c, j = [], i
        while j not in seen:
            seen.add(j)
            c.append(str(j + 1))
            j = p[j]
        out += "(" + " ".join(c) + ")"
    return out or "()"


# Reidemeister-Schreier for the stabilizer of point 0 with transversal a^i

def schreier(perms, degree, rep, prefix):
    """rep[c] is a word taking 0 to c. Returns the named generators and a rewriter."""
    gens, names = [], {}
    for c in range(degree):
        for g in ("s", "a"):
            d = act(c, [(g, 1)], perms)
            w = mul(rep[c], [(g, 1)], inv(rep[d]))
            if w:
                names[(c, g)] = f"{prefix}{len(gens)}"
                gens.append(w)

    def rewrite(w):
        out, c = [], 0
        for g, e in w:
            if e > 0:
                if (c, g) in names:
                    out.append((names[(c, g)], 1))
                c = act(c, [(g, 1)], perms)
            else:
                c = act(c, [(g, -1)], perms)
                if (c, g) in names:
                    out.append((names[(c, g)], -1))
        assert c == 0, "word not in the subgroup"
        return reduce(out)

    return gens, rewrite


def cli(binary, *args):
    r = subprocess.run([binary, *args], capture_output=True, text=True)
    if r.returncode != 0:
        raise SystemExit(f"{' '.join(args)} exited {r.returncode}: {r.stderr}")
    return r.stdout


def matrix(j):
    return np.array([[complex(*e) if isinstance(e, list) else complex(e) for e in row] for row in j])


def main():
    binary, src, work = sys.argv[1:4]
    os.makedirs(work, exist_ok=True)
    os.chdir(work)

    for alpha, beta in [(3, 1), (5, 3), (7, 3), (9, 5)]:
        cli(binary, "two-bridge", str(alpha), str(beta), "-o", f"st_{alpha}_{beta}.json")
        cli(binary, "two-bridge", str(alpha), str(beta), "--form", "sa", "-o", f"sa_{alpha}_{beta}.json")
        mine = two_bridge_relator(alpha, beta)
        theirs = parse(json.load(open(f"st_{alpha}_{beta}.json"))["relators"][0])
        check(f"({alpha},{beta}) relator", tuple(theirs) in cyclic_class(mine), fmt(theirs))
        sa_mine = substitute(mine, {"s": [("s", 1)], "t": [("a", 1), ("s", 1)]})
        sa_theirs = parse(json.load(open(f"sa_{alpha}_{beta}.json"))["relators"][0])
        check(f"({alpha},{beta}) relator in s, a", tuple(sa_theirs) in cyclic_class(sa_mine), fmt(sa_theirs))
        d = dihedral(alpha)
        check(f"({alpha},{beta}) dihedral relation", perm_of(sa_mine, d, alpha) == tuple(range(alpha)))

    sa = parse(json.load(open("sa_5_3.json"))["relators"][0])
    check("figure-eight relator in s, a", fmt(sa) == "a^-1 s^-1 a s a^-1 s a s^-1 a^-1", fmt(sa))

    delta = dihedral(5)
    stored = json.load(open(os.path.join(src, "data/figure8/delta.json")))["images"]
    check("dihedral images", {g: cycles_text(p) for g, p in delta.items()} == stored, str(stored))

    # H = stabilizer of the first point
    cli(binary, "subgroup", "--presentation", "sa_5_3.json", "--dihedral", "5", "--point", "1", "-o", "H.json")
    H = json.load(open("H.json"))
    rep = [power("a", i) for i in range(5)]
    check("transversal", [act(0, w, delta) for w in rep] == list(range(5)))
    gens, rewrite = schreier(delta, 5, rep, "y")
    theirs = [parse(g["expansion"]) for g in H["generators"]]
    check("H generator count", len(theirs) == 6 == 1 + 5 * (2 - 1), str(len(theirs)))
    check("H generators", sorted(map(fmt, gens)) == sorted(map(fmt, theirs)), ", ".join(map(fmt, gens)))
    expected_gens = [[("s", 1)]] + [mul(power("a", i), [("s", 1)], power("a", i - 5)) for i in range(1, 5)] + [power("a", 5)]
    check("H generators match the expected list", list(map(fmt, theirs)) == list(map(fmt, expected_gens)))

    # rename my generators to the CLI's names before comparing relators
    rename = {f"y{i}": H["generators"][[fmt(t) for t in theirs].index(fmt(g))]["name"] for i, g in enumerate(gens)}
    rels = [[(rename[g], e) for g, e in rewrite(mul(power("a", i), sa, power("a", -i)))] for i in range(5)]
    expected_rels = [
        "y5^-1 y1^-1 y2^2 y1^-1",
        "y0^-1 y1 y3 y2^-1",
        "y4^-1 y5 y0 y5^-1 y4 y3^-1",
        "y3^-1 y4 y0 y4^-1",
        "y2^-1 y3 y1 y5 y0^-1 y5^-1",
    ]
    check("H relators equal the expected ones", list(map(fmt, rels)) == expected_rels, "; ".join(map(fmt, rels)))
    check("H relators equal the CLI output", list(map(fmt, rels)) == [fmt(parse(r)) for r in H["relators"]])
    check("H relators are trivial in the group",
          all(perm_of(substitute(r, {n["name"]: parse(n["expansion"]) for n in H["generators"]}), delta, 5)
              == tuple(range(5)) for r in rels))

    # kernel N
    cli(binary, "subgroup", "--presentation", "sa_5_3.json", "--dihedral", "5", "--kernel", "--prefix", "z",
        "-o", "N.json")
    N = json.load(open("N.json"))
    group, frontier = {tuple(range(5))}, [tuple(range(5))]
    while frontier:
        p = frontier.pop()
        for q in delta.values():
            r = tuple(q[p[i]] for i in range(5))
            if r not in group:
                group.add(r)
                frontier.append(r)
    ident = tuple(range(5))
    check("image of the dihedral representation has order 10", len(group) == 10 == N["index"], str(len(group)))
    check("N generator count", len(N["generators"]) == 1 + 10 * (2 - 1), str(len(N["generators"])))
    check("N generators lie in the kernel",
          all(perm_of(parse(g["expansion"]), delta, 5) == ident for g in N["generators"]))
    y = {f"y{i}": g for i, g in enumerate(expected_gens)}
    listed = [mul(y[f"y{i}"], inv(y["y0"])) for i in range(1, 5)] + [y["y5"], mul(y["y0"], y["y0"])]
    listed += [mul(y["y0"], y[f"y{i}"]) for i in range(1, 5)] + [mul(y["y0"], y["y5"], inv(y["y0"]))]
    check("listed N generators lie in the kernel", all(perm_of(w, delta, 5) == ident for w in listed))
    check("listed N generators match the CLI", sorted(map(fmt, listed)) ==
          sorted(fmt(parse(g["expansion"])) for g in N["generators"]))

    # induced representation
    beta_path = os.path.join(src, "tests/data/beta_sl2.json")
    cli(binary, "induce", "--subgroup", "H.json", "--rep", beta_path,
        "--quotient", os.path.join(src, "data/figure8/psi.json"), "-o", "rho.json")
    bj = json.load(open(beta_path))["images"]
    A, B = matrix(bj["x"]), matrix(bj["y"])
    m = A.shape[0]
    psi = {"y0": None, "y1": A, "y2": A, "y3": None, "y4": B, "y5": None}

    def alpha_of(h):
        out = np.eye(m, dtype=complex)
        for g, e in rewrite(h):
            M = psi[g] if psi[g] is not None else np.eye(m)
            out = out @ (M if e > 0 else np.linalg.inv(M))
        return out

    def induced(g):
        out = np.zeros((5 * m, 5 * m), dtype=complex)
        for i in range(5):
            for j in range(5):
                h = mul(inv(rep[j]), g, rep[i])
                if act(0, h, delta) == 0:
                    out[j * m:(j + 1) * m, i * m:(i + 1) * m] = alpha_of(h)
        return out

    rho = json.load(open("rho.json"))["images"]
    S, Aind = induced([("s", 1)]), induced([("a", 1)])
    dev = max(np.abs(S - matrix(rho["s"])).max(), np.abs(Aind - matrix(rho["a"])).max())
    check("induced matrices equal the CLI output", dev <= 1e-12, f"{dev:.2e}")

    def blocks(pattern):
        I, Z = np.eye(m), np.zeros((m, m))
        lookup = {"I": I, "0": Z, "A": A, "B": B}
        return np.block([[lookup[c] for c in row.split()] for row in pattern])

    rho_s = blocks(["I 0 0 0 0", "0 0 0 0 B", "0 0 0 I 0", "0 0 A 0 0", "0 A 0 0 0"])
    rho_t = blocks(["0 A 0 0 0", "I 0 0 0 0", "0 0 0 0 B", "0 0 0 I 0", "0 0 A 0 0"])
    check("rho(s) block pattern", np.abs(S - rho_s).max() <= 1e-14)
    check("rho(t) = rho(a) rho(s) block pattern", np.abs(Aind @ S - rho_t).max() <= 1e-14)

    def evaluate(w):
        out = np.eye(5 * m, dtype=complex)
        for g, e in w:
            M = {"s": S, "a": Aind}[g]
            out = out @ (M if e > 0 else np.linalg.inv(M))
        return out

    res = np.abs(evaluate(sa) - np.eye(5 * m)).max()
    check("induced relator residual", res <= 1e-12, f"{res:.2e}")
    # Frobenius: trace rho(g) = sum over cosets fixed by g of trace alpha(l^-1 g l)
    rng = np.random.default_rng(5)
    worst = 0.0
    for _ in range(30):
        w = reduce([(str(rng.choice(["s", "a"])), int(rng.choice([1, -1]))) for _ in range(rng.integers(1, 12))])
        tr = sum(np.trace(alpha_of(mul(inv(rep[i]), w, rep[i])))
                 for i in range(5) if act(0, mul(inv(rep[i]), w, rep[i]), delta) == 0)
        worst = max(worst, abs(np.trace(evaluate(w)) - tr))
    check("Frobenius character formula", worst <= 1e-9, f"{worst:.2e}")
    # the coset permutation of s is even and A, B have determinant 1
    det = max(abs(np.linalg.det(S) - 1), abs(np.linalg.det(Aind) - 1))
    check("induced determinants", det <= 1e-12, f"{det:.2e}")

    print(f"{len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
