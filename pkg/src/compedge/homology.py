"""Reduced simplicial homology dimensions over exact coefficient fields.

Dimensions come from exact ranks of the boundary matrices of the augmented
chain complex: over GF(2) rows are bitmask integers eliminated with xor;
over GF(p) rows are integer lists reduced with modular inverses; over the
rationals integer rows go through fraction-free Bareiss elimination, so no
floating point appears anywhere.

Results are memoized per (facet family, characteristic): the sweep layers
evaluate the same small complexes over and over.
"""

from __future__ import annotations

from dataclasses import dataclass

from .complexes import SimplicialComplex
from .graphs import iter_bits, vertices_of


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True, slots=True)
class FieldSpec:
    """Coefficient field: characteristic 0 means exact rationals."""

    characteristic: int

    def __post_init__(self):
        if self.characteristic != 0 and not _is_prime(self.characteristic):
            raise ValueError(f"characteristic {self.characteristic} is not 0 or prime")

    @property
    def label(self) -> str:
        return "QQ" if self.characteristic == 0 else f"GF({self.characteristic})"


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
QQ = FieldSpec(0)


@dataclass
class HomologyDims:
    """dims[k] = dim of reduced homology in degree k, for -1 <= k <= dim."""

    dims: dict[int, int]

    def total(self) -> int:
        return sum(self.dims.values())

    def nonzero(self) -> dict[int, int]:
        return {k: v for k, v in self.dims.items() if v}


def _rank_gf2(rows: list[int]) -> int:
    rank = 0
    pivots: list[tuple[int, int]] = []
    for r in rows:
        for bit, pivot in pivots:
            if r >> bit & 1:
                r ^= pivot
        if r:
            pivots.append((r.bit_length() - 1, r))
            rank += 1
    return rank


def _rank_gfp(rows: list[list[int]], p: int) -> int:
    mat = [row[:] for row in rows]
    ncols = len(mat[0]) if mat else 0
    rank = 0
    for col in range(ncols):
        pivot_row = None
        for r in range(rank, len(mat)):
            if mat[r][col] % p:
                pivot_row = r
                break
        if pivot_row is None:
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        inv = pow(mat[rank][col], -1, p)
        prow = [(x * inv) % p for x in mat[rank]]
        mat[rank] = prow
        for r in range(len(mat)):
            if r != rank and mat[r][col] % p:
                c = mat[r][col] % p
                mat[r] = [(x - c * y) % p for x, y in zip(mat[r], prow)]
        rank += 1
        if rank == len(mat):
            break
    return rank


def _rank_bareiss(rows: list[list[int]]) -> int:
    """Rank of an integer matrix by fraction-free elimination; all divisions
    along the way are exact, so entries stay integers."""
    mat = [row[:] for row in rows]
    nrows = len(mat)
    ncols = len(mat[0]) if mat else 0
    rank = 0
    prev = 1
    col = 0
    while rank < nrows and col < ncols:
        pivot_row = None
        for r in range(rank, nrows):
            if mat[r][col]:
                pivot_row = r
                break
        if pivot_row is None:
            col += 1
            continue
        mat[rank], mat[pivot_row] = mat[pivot_row], mat[rank]
        pivot = mat[rank][col]
        for r in range(rank + 1, nrows):
            factor = mat[r][col]
            row = mat[r]
            prow = mat[rank]
            for c in range(col, ncols):
                row[c] = (pivot * row[c] - factor * prow[c]) // prev
        prev = pivot
        rank += 1
        col += 1
    return rank


def matrix_rank(rows: list[list[int]], field: FieldSpec) -> int:
    """Exact rank of an integer matrix over the chosen field."""
    if not rows or not rows[0]:
        return 0
    p = field.characteristic
    if p == 0:
        return _rank_bareiss(rows)
    if p == 2:
        packed = []
        for row in rows:
            m = 0
            for c, x in enumerate(row):
                if x % 2:
                    m |= 1 << c
            packed.append(m)
        return _rank_gf2(packed)
    return _rank_gfp(rows, p)


def _faces_by_dim(facets: tuple[int, ...]) -> list[list[int]]:
    """levels[k + 1] lists the k-face masks (the empty face is level 0)."""
    seen: set[int] = set()
    for f in facets:
        s = f
        while True:
            seen.add(s)
            if s == 0:
                break
            s = (s - 1) & f
    top = max(f.bit_count() for f in facets)
    levels: list[list[int]] = [[] for _ in range(top + 1)]
    for m in seen:
        levels[m.bit_count()].append(m)
    for level in levels:
        level.sort()
    return levels


_dims_cache: dict[tuple, tuple[tuple[int, int], ...]] = {}


def clear_homology_cache() -> None:
    _dims_cache.clear()


def homology_dims_of_facets(facets, char: int) -> tuple[tuple[int, int], ...]:
    """Nonzero reduced homology (degree, dimension) pairs for an antichain
    of facet masks; () for the void complex."""
    key = (tuple(sorted(facets)), char)
    cached = _dims_cache.get(key)
    if cached is not None:
        return cached
    facets = key[0]
    if not facets:
        result: tuple[tuple[int, int], ...] = ()
    elif facets == (0,):
        result = ((-1, 1),)
    else:
        result = _compute_dims(facets, char)
    _dims_cache[key] = result
    return result


def _compute_dims(facets: tuple[int, ...], char: int) -> tuple[tuple[int, int], ...]:
    levels = _faces_by_dim(facets)
    top = len(levels) - 1
    counts = [len(level) for level in levels]
    # ranks[k] = rank of the boundary map from k-faces to (k-1)-faces;
    # the augmentation map from vertices to the empty face always has rank 1.
    ranks = [0] * (top + 2)
    ranks[1] = 1
    for k in range(2, top + 1):
        lower_index = {m: i for i, m in enumerate(levels[k - 1])}
        if char == 2:
            rows = []
            for m in levels[k]:
                r = 0
                for v in iter_bits(m):
                    r |= 1 << lower_index[m ^ (1 << v)]
                rows.append(r)
            ranks[k] = _rank_gf2(rows)
        else:
            ncols = counts[k - 1]
            rows = []
            for m in levels[k]:
                row = [0] * ncols
                sign = 1
                for v in iter_bits(m):
                    row[lower_index[m ^ (1 << v)]] = sign
                    sign = -sign
                rows.append(row)
            ranks[k] = _rank_bareiss(rows) if char == 0 else _rank_gfp(rows, char)
    out = []
    for k in range(-1, top):
        h = counts[k + 1] - ranks[k + 1] - ranks[k + 2]
        if h:
            out.append((k, h))
    return tuple(out)


def reduced_homology_dims(cx: SimplicialComplex, field: FieldSpec) -> HomologyDims:
    """All reduced homology dimensions of the complex over the field."""
    nonzero = dict(homology_dims_of_facets(cx.facets, field.characteristic))
    dim = cx.dimension
    if dim is None:
        return HomologyDims({})
    return HomologyDims({k: nonzero.get(k, 0) for k in range(-1, dim + 1)})


def boundary_matrix(cx: SimplicialComplex, k: int) -> list[list[int]]:
    """Integer matrix of the boundary map from k-faces to (k-1)-faces.

    Faces index rows and columns in lexicographic order of their sorted
    vertex tuples; the coefficient of the face omitting the t-th smallest
    vertex is (-1)^t.  For k = -1 the target chain group is zero and the
    matrix has no rows.
    """
    if cx.is_void:
        raise ValueError("void complex has no chain groups")
    dim = cx.dimension
    if not -1 <= k <= dim + 1:
        raise ValueError(f"k={k} outside -1..{dim + 1}")
    levels = _faces_by_dim(cx.facets)

    def lex_sorted(level: list[int]) -> list[int]:
        return sorted(level, key=vertices_of)

    cols = lex_sorted(levels[k + 1]) if k + 1 < len(levels) else []
    if k == -1:
        return []
    rows_faces = lex_sorted(levels[k])
    index = {m: i for i, m in enumerate(rows_faces)}
    matrix = [[0] * len(cols) for _ in rows_faces]
    for c, m in enumerate(cols):
        sign = 1
        for v in iter_bits(m):
            matrix[index[m ^ (1 << v)]][c] = sign
            sign = -sign
    return matrix
