"""Shared test fixtures and independent brute-force oracles.

Everything here is deliberately written from first principles (string
bit-twiddling, subset filters, cofactor determinants) so that agreement
with the library is evidence, not circularity.
"""

from __future__ import annotations

from itertools import combinations, permutations

from compedge.graphs import Graph, vertices_of

# ---------------------------------------------------------------- graphs


def graph(n, *edges):
    return Graph.from_edges(n, list(edges))


def path(n):
    return graph(n, *[(i, i + 1) for i in range(1, n)])


def cycle(n):
    return graph(n, *([(i, i + 1) for i in range(1, n)] + [(1, n)]))


def complete(n):
    return graph(n, *combinations(range(1, n + 1), 2))


def two_k2():
    return graph(4, (1, 2), (3, 4))


def star4():
    return graph(4, (1, 2), (1, 3), (1, 4))


def paw():
    return graph(4, (1, 2), (1, 3), (2, 3), (3, 4))


def p3_union_k2():
    return graph(5, (1, 2), (2, 3), (4, 5))


def graph_from_mask(n, mask):
    """Graph from an edge bitmask over lexicographic vertex pairs."""
    pairs = list(combinations(range(1, n + 1), 2))
    return Graph.from_edges(n, [pairs[t] for t in range(len(pairs)) if mask >> t & 1])


def all_graphs(n):
    pairs = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(pairs)):
        yield graph_from_mask(n, mask)


def min_degree_one_count(n):
    """Inclusion-exclusion count of labeled graphs with no isolated vertex."""
    from math import comb

    return sum(
        (-1) ** k * comb(n, k) * 2 ** comb(n - k, 2) for k in range(n + 1)
    )


# ------------------------------------------------------- graph6 (naive)


def naive_graph6_encode(G: Graph) -> str:
    bits = ""
    for j in range(1, G.n):
        for i in range(j):
            bits += "1" if G.adj[i] >> j & 1 else "0"
    while len(bits) % 6:
        bits += "0"
    out = chr(G.n + 63)
    for pos in range(0, len(bits), 6):
        out += chr(int(bits[pos : pos + 6], 2) + 63)
    return out


def naive_graph6_decode(text: str) -> Graph:
    n = ord(text[0]) - 63
    bits = ""
    for ch in text[1:]:
        bits += format(ord(ch) - 63, "06b")
    edges = []
    pos = 0
    for j in range(1, n):
        for i in range(j):
            if bits[pos] == "1":
                edges.append((i + 1, j + 1))
            pos += 1
    return Graph.from_edges(n, edges)


# ------------------------------------------------------ graph predicates


def brute_is_chordal(G: Graph) -> bool:
    """No induced cycle of length four or more, by direct subset search."""
    for size in range(4, G.n + 1):
        for subset in combinations(range(G.n), size):
            degs = []
            inside = set(subset)
            edge_count = 0
            for v in subset:
                d = sum(1 for u in subset if u != v and G.adj[v] >> u & 1)
                degs.append(d)
                edge_count += d
            edge_count //= 2
            if any(d != 2 for d in degs) or edge_count != size:
                continue
            # connected 2-regular graph on the subset = induced cycle
            seen = {subset[0]}
            frontier = [subset[0]]
            while frontier:
                v = frontier.pop()
                for u in inside:
                    if u not in seen and G.adj[v] >> u & 1:
                        seen.add(u)
                        frontier.append(u)
            if len(seen) == size:
                return False
    return True


def brute_triangle_count(G: Graph) -> int:
    count = 0
    for a, b, c in combinations(range(G.n), 3):
        if G.adj[a] >> b & 1 and G.adj[a] >> c & 1 and G.adj[b] >> c & 1:
            count += 1
    return count


# -------------------------------------------------- hypergraph transversals


def brute_minimal_transversals(supports, n) -> list[int]:
    """All subsets filtered for the hitting property, then antichain-reduced."""
    hitting = []
    for mask in range(1, 1 << n):
        if all(s & mask for s in supports):
            hitting.append(mask)
    minimal = [
        m for m in hitting if not any(h != m and h & ~m == 0 for h in hitting)
    ]
    return sorted(minimal, key=lambda m: (bin(m).count("1"), vertices_of(m)))


# -------------------------------------------------------------- complexes


def brute_sr_faces(gen_supports, n) -> set[int]:
    """Faces of the complex with the given minimal non-faces: all subsets
    containing no generator support."""
    return {
        mask
        for mask in range(1 << n)
        if not any(g & ~mask == 0 for g in gen_supports)
    }


# ------------------------------------------------------------ linear algebra


def _det(matrix) -> int:
    """Cofactor-expansion determinant of a small integer matrix."""
    k = len(matrix)
    if k == 0:
        return 1
    if k == 1:
        return matrix[0][0]
    total = 0
    sign = 1
    for c in range(k):
        if matrix[0][c]:
            minor = [row[:c] + row[c + 1 :] for row in matrix[1:]]
            total += sign * matrix[0][c] * _det(minor)
        sign = -sign
    return total


def brute_rank(matrix, char: int) -> int:
    """Largest k with some k-by-k minor of nonzero determinant (mod char)."""
    nrows = len(matrix)
    ncols = len(matrix[0]) if matrix else 0
    for k in range(min(nrows, ncols), 0, -1):
        for rows in combinations(range(nrows), k):
            for cols in combinations(range(ncols), k):
                sub = [[matrix[r][c] for c in cols] for r in rows]
                d = _det(sub)
                if (d % char if char else d) != 0:
                    return k
    return 0


# -------------------------------------------------------- quotient orders


def brute_has_linear_quotient_order(I) -> bool:
    """Literal scan over every permutation of the generators."""
    from compedge.ideals import is_linear_quotient_order

    for perm in permutations(I.gens):
        if is_linear_quotient_order(I, list(perm)):
            return True
    return False
