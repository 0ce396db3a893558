"""Maximum cardinality matching in general graphs.

`maximum_matching` is Edmonds' blossom algorithm (O(V^3)); the pixel-pair
graphs it serves contain odd cycles, so bipartite matching is not enough.
`exhaustive_matching_size` is an independent bitmask-DP oracle for graphs of
at most ~20 vertices, used to certify the blossom implementation.
"""

from __future__ import annotations

from collections import deque


def maximum_matching(n: int, edges: list[tuple[int, int]]) -> list[tuple[int, int]]:
    """Maximum cardinality matching on vertices 0..n-1, deterministic."""
    adj: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        if u == v:
            continue
        adj[u].append(v)
        adj[v].append(u)
    for a in adj:
        a.sort()
    match = [-1] * n

    # deterministic greedy seed speeds up the augmenting phases
    for u in range(n):
        if match[u] == -1:
            for v in adj[u]:
                if match[v] == -1:
                    match[u] = v
                    match[v] = u
                    break

    p = [-1] * n
    base = list(range(n))

    def lca(a: int, b: int) -> int:
        used_path = [False] * n
        while True:
            a = base[a]
            used_path[a] = True
            if match[a] == -1:
                break
            a = p[match[a]]
        while True:
            b = base[b]
            if used_path[b]:
                return b
            b = p[match[b]]

    def mark_path(v: int, b: int, child: int, blossom: list[bool]):
        while base[v] != b:
            blossom[base[v]] = True
            blossom[base[match[v]]] = True
            p[v] = child
            child = match[v]
            v = p[match[v]]

    def find_path(root: int) -> int:
        nonlocal p, base
        used = [False] * n
        p = [-1] * n
        base = list(range(n))
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    curbase = lca(v, to)
                    blossom = [False] * n
                    mark_path(v, curbase, to, blossom)
                    mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        # augment along the alternating path ending at `to`
                        u = to
                        while u != -1:
                            pv = p[u]
                            ppv = match[pv]
                            match[u] = pv
                            match[pv] = u
                            u = ppv
                        return 1
                    used[match[to]] = True
                    q.append(match[to])
        return 0

    for v in range(n):
        if match[v] == -1:
            find_path(v)

    pairs = []
    for u in range(n):
        if match[u] > u:
            pairs.append((u, match[u]))
    return pairs


def exhaustive_matching_size(n: int, edges: list[tuple[int, int]]) -> int:
    """Exact maximum matching size by memoized search over vertex bitmasks.
    Intended for n <= ~20 (test oracle)."""
    nbr = [0] * n
    for u, v in edges:
        if u != v:
            nbr[u] |= 1 << v
            nbr[v] |= 1 << u
    memo: dict[int, int] = {}

    def rec(mask: int) -> int:
        if mask == 0:
            return 0
        if mask in memo:
            return memo[mask]
        v = (mask & -mask).bit_length() - 1
        rest = mask ^ (1 << v)
        best = rec(rest)  # leave v unmatched
        avail = nbr[v] & rest
        while avail:
            u_bit = avail & -avail
            avail ^= u_bit
            u = u_bit.bit_length() - 1
            best = max(best, 1 + rec(rest ^ u_bit))
            if best == bin(mask).count("1") // 2:
                break
        memo[mask] = best
        return best

    return rec((1 << n) - 1)
