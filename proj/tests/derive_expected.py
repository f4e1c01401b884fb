#!/usr/bin/env python3
"""Brute-force oracle used to derive the frozen expected values in the C++ tests.

Everything here is written directly from the definitions (explicit switching
enumeration, explicit vertex-sequence cycle search) and shares no code with
the C++ library.
"""
import itertools
import math
import sys

import numpy as np


def petersen(n, k):
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    edges += [(n + i, n + (i + k) % n) for i in range(n)]
    return 2 * n, edges


def gn(n):
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += [(i, n + i) for i in range(n)]
    return 2 * n, edges


def k4():
    return 4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]


def cycle(n):
    return n, [(i, (i + 1) % n) for i in range(n)]


def count_cycles(nv, edges, length):
    adj = {v: set() for v in range(nv)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    found = set()
    for seq in itertools.permutations(range(nv), length):
        ok = all(seq[(i + 1) % length] in adj[seq[i]] for i in range(length))
        if ok:
            es = frozenset(frozenset((seq[i], seq[(i + 1) % length])) for i in range(length))
            found.add(es)
    return found


def switch_matrix(nv, edges):
    """Rows: all switchings with vertex 0 fixed; columns: edges; entry 1 iff edge flips."""
    rows = np.arange(1 << (nv - 1), dtype=np.int64) << 1
    bits = ((rows[:, None] >> np.arange(nv)[None, :]) & 1).astype(np.uint8)
    us = np.array([u for u, _ in edges])
    vs = np.array([v for _, v in edges])
    return bits[:, us] ^ bits[:, vs]


def frustration(nv, edges, neg, flips=None):
    if flips is None:
        flips = switch_matrix(nv, edges)
    sig = np.zeros(len(edges), dtype=np.uint8)
    sig[list(neg)] = 1
    return int((flips ^ sig[None, :]).sum(axis=1).min())


def max_frustration(nv, edges):
    """Maximum over ALL 2^m raw signatures, deduplicated by switching orbit."""
    m = len(edges)
    flips = switch_matrix(nv, edges)
    best = 0
    # tree edges: BFS from 0; only non-tree edge patterns matter, but enumerate
    # raw signatures restricted to a fixed complement of a spanning tree computed here
    parent = {0: None}
    order = [0]
    adj = {v: [] for v in range(nv)}
    for idx, (u, v) in enumerate(edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))
    tree = set()
    for x in order:
        for y, idx in adj[x]:
            if y not in parent:
                parent[y] = x
                tree.add(idx)
                order.append(y)
    cotree = [i for i in range(m) if i not in tree]
    for mask in range(1 << len(cotree)):
        neg = [cotree[j] for j in range(len(cotree)) if mask >> j & 1]
        sig = np.zeros(m, dtype=np.uint8)
        sig[neg] = 1
        best = max(best, int((flips ^ sig[None, :]).sum(axis=1).min()))
    return best


def packed_flips(nv, edges):
    """Same as switch_matrix, one uint64 bitmask per switching."""
    rows = np.arange(1 << (nv - 1), dtype=np.uint64) << np.uint64(1)
    out = np.zeros(rows.shape, dtype=np.uint64)
    for idx, (u, v) in enumerate(edges):
        bu = (rows >> np.uint64(u)) & np.uint64(1)
        bv = (rows >> np.uint64(v)) & np.uint64(1)
        out |= (bu ^ bv) << np.uint64(idx)
    return out


def packed_frustration(flips, neg):
    sig = np.uint64(sum(1 << e for e in neg))
    return int(np.bitwise_count(flips ^ sig).min())


def k3_signature(m):
    n = 4 * m - 1
    return [n + i for i in range(0, 4 * m - 3, 2)] + [4 * m - 3]


def balanced_after_deleting(nv, edges, neg, deleted):
    """Two-colouring by DFS over the surviving edges."""
    adj = {v: [] for v in range(nv)}
    for idx, (u, v) in enumerate(edges):
        if idx not in deleted:
            s = 1 if idx in neg else 0
            adj[u].append((v, s))
            adj[v].append((u, s))
    colour = {}
    for r in range(nv):
        if r in colour:
            continue
        colour[r] = 0
        stack = [r]
        while stack:
            x = stack.pop()
            for y, s in adj[x]:
                if y not in colour:
                    colour[y] = colour[x] ^ s
                    stack.append(y)
                elif colour[y] != colour[x] ^ s:
                    return False
    return True


def max_frustration_packed(nv, edges):
    flips = packed_flips(nv, edges)
    parent = {0: None}
    order = [0]
    adj = {v: [] for v in range(nv)}
    for idx, (u, v) in enumerate(edges):
        adj[u].append((v, idx))
        adj[v].append((u, idx))
    tree = set()
    for x in order:
        for y, idx in adj[x]:
            if y not in parent:
                parent[y] = x
                tree.add(idx)
                order.append(y)
    cotree = [i for i in range(len(edges)) if i not in tree]
    best = 0
    for mask in range(1 << len(cotree)):
        best = max(best, packed_frustration(flips, [cotree[j] for j in range(len(cotree)) if mask >> j & 1]))
    return best


def restricted_maxima(n):
    nv, edges = gn(n)
    m = len(edges)
    xs = np.arange(1 << n, dtype=np.int64)
    bits = ((xs[:, None] >> np.arange(n)[None, :]) & 1).astype(np.uint8)
    flips = np.zeros((1 << n, m), dtype=np.uint8)
    for idx, (u, v) in enumerate(edges):
        bu = bits[:, u] if u < n else 0
        bv = bits[:, v] if v < n else 0
        flips[:, idx] = bu ^ bv
    best_pos = best_neg = 0
    for s in range(1 << m):
        sig = np.array([(s >> i) & 1 for i in range(m)], dtype=np.uint8)
        val = int((flips ^ sig[None, :]).sum(axis=1).min())
        negative = sum(sig[:n]) % 2 == 1
        if negative:
            best_neg = max(best_neg, val)
        else:
            best_pos = max(best_pos, val)
    return best_pos, best_neg


def main():
    what = sys.argv[1:] or ["cycles", "restricted", "dmax"]
    if "cycles" in what:
        print("pentagons P5,2", len(count_cycles(*petersen(5, 2), 5)))
        print("quadrangles P7,1", len(count_cycles(*petersen(7, 1), 4)))
        print("hexagons P7,3", len(count_cycles(*petersen(7, 3), 6)))
        for m in range(3, 6):
            print("pentagons P%d,2" % (2 * m + 1), len(count_cycles(*petersen(2 * m + 1, 2), 5)))
        for n in range(3, 9):
            print("quadrangles P%d,1" % n, len(count_cycles(*petersen(n, 1), 4)))
        print("hexagons P11,3", len(count_cycles(*petersen(11, 3), 6)))
    if "restricted" in what:
        for n in range(3, 8):
            print("restricted G%d" % n, restricted_maxima(n))
    if "dmax" in what:
        print("D(K4)", max_frustration(*k4()))
        print("D(C5)", max_frustration(*cycle(5)))
        for n in range(3, 9):
            for k in range(1, n):
                if 2 * k < n:
                    print("D(P%d,%d)" % (n, k), max_frustration(*petersen(n, k)))
    if "k3" in what:
        nv, edges = petersen(11, 3)
        sig = k3_signature(3)
        print("k3 m=3 signature", sig, "frustration", packed_frustration(packed_flips(nv, edges), sig))
        # certificates from the C++ witnesses: deleting them balances the signed graph
        print("k3 m=3 cert", balanced_after_deleting(nv, edges, set(sig), {0, 3, 6, 29, 30}))
        nv, edges = petersen(19, 3)
        print("k3 m=5 cert", balanced_after_deleting(nv, edges, set(k3_signature(5)), {0, 3, 6, 9, 12, 35, 52, 53}))
    if "dmax11" in what:
        print("D(P11,3)", max_frustration_packed(*petersen(11, 3)))
    if "classes" in what:
        for name, (nv, edges) in {"C5": cycle(5), "K4": k4(), "G5": gn(5)}.items():
            flips = switch_matrix(nv, edges)
            orbits = set()
            for s in range(1 << len(edges)):
                sig = np.array([(s >> i) & 1 for i in range(len(edges))], dtype=np.uint8)
                orbit = flips ^ sig[None, :]
                key = min(int("".join(map(str, row[::-1])), 2) for row in orbit)
                orbits.add(key)
            print("classes", name, len(orbits))


if __name__ == "__main__":
    main()
