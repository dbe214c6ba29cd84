"""Search circulant graphs C_n(S) for odd girth >= 7 and small independence number.

    PYTHONPATH=build/python python3 tools/circulant_search.py --n 83 --seconds 60

Connection sets are enumerated up to multiplication by units of Z_n, pruned
by requiring 0 outside the 3- and 5-fold sumsets of S and -S.
"""

import argparse
import math
import time

import hedet


def sumset_free(conn, n):
    full = set(conn) | {n - s for s in conn}
    level = {0}
    for k in range(1, 6):
        level = {(a + b) % n for a in level for b in full}
        if k in (3, 5) and 0 in level:
            return False
    return True


def canonical(conn, n):
    units = [m for m in range(1, n) if math.gcd(m, n) == 1]
    return min(tuple(sorted(min(m * s % n, n - m * s % n) for s in conn)) for m in units)


def circulant(n, conn):
    edges = {tuple(sorted((v, (v + s) % n))) for v in range(n) for s in conn}
    return hedet.Graph(n, sorted(edges))


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n", type=int, default=83)
    ap.add_argument("--seconds", type=float, default=60)
    ap.add_argument("--budget", type=int, default=2_000_000)
    ap.add_argument("--out", help="write the best graph as DIMACS")
    args = ap.parse_args()

    n, start, seen = args.n, time.monotonic(), set()
    best = None

    def grow(conn, lowest):
        nonlocal best
        if time.monotonic() - start > args.seconds:
            return
        if len(conn) >= 3:
            key = canonical(conn, n)
            if key in seen:
                return
            seen.add(key)
            g = circulant(n, conn)
            alpha = hedet.independence_number(g, args.budget)
            if alpha is not None and hedet.odd_girth(g) == 7 and (best is None or alpha < best[0]):
                best = (alpha, list(conn), g)
                print(f"alpha {alpha}  S = {conn}  chi_f = {n}/{alpha}", flush=True)
        for s in range(lowest, n // 2 + 1):
            conn.append(s)
            if sumset_free(conn, n):
                grow(conn, s + 1)
            conn.pop()

    grow([1], 2)
    print(f"{len(seen)} connection sets examined")
    if best and args.out:
        with open(args.out, "w") as out:
            out.write(best[2].to_dimacs())


if __name__ == "__main__":
    main()
