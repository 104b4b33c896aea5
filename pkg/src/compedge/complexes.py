"""Simplicial complexes attached to graphs and squarefree ideals.

Facets are vertex masks forming an inclusion antichain.  Two degenerate
complexes are kept distinct: the void complex (no facets, no faces) and
the irrelevant complex whose single facet is the empty set; the latter has
reduced homology in degree -1, which the homology layer relies on.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

from .graphs import Graph, iter_bits, triangles, validate_standing_assumptions, vertices_of
from .ideals import SqfIdeal, minimal_primes, minimal_transversals, support_sort_key

FacetCoverSeq = tuple  # ordered sequence of pairwise distinct facet masks


def maximal_supports(masks) -> tuple[int, ...]:
    """Inclusion-maximal elements of a family of masks, canonically sorted."""
    distinct = sorted(set(masks), key=lambda m: -m.bit_count())
    kept: list[int] = []
    for m in distinct:
        if not any(m & ~k == 0 for k in kept):
            kept.append(m)
    return tuple(sorted(kept, key=support_sort_key))


@dataclass(frozen=True, slots=True)
class SimplicialComplex:
    n: int
    facets: tuple[int, ...]

    @classmethod
    def from_facets(cls, n: int, masks) -> "SimplicialComplex":
        return cls(n, maximal_supports(masks))

    @property
    def is_void(self) -> bool:
        return not self.facets

    @property
    def is_irrelevant(self) -> bool:
        return self.facets == (0,)

    @property
    def vertex_mask(self) -> int:
        m = 0
        for f in self.facets:
            m |= f
        return m

    @property
    def dimension(self):
        """Max facet dimension; -1 for the irrelevant complex, None if void."""
        if self.is_void:
            return None
        return max(f.bit_count() for f in self.facets) - 1

    def face_masks(self) -> set[int]:
        faces = set()
        for f in self.facets:
            s = f
            while True:
                faces.add(s)
                if s == 0:
                    break
                s = (s - 1) & f
        return faces

    def is_face(self, mask: int) -> bool:
        return any(mask & ~f == 0 for f in self.facets)

    def facet_lists(self) -> list[list[int]]:
        """Facets as 1-based vertex lists, the JSON serialization."""
        return [list(vertices_of(f)) for f in self.facets]


def gamma_complex(G: Graph) -> SimplicialComplex:
    """Facets: complements of nonedges and complements of triangles.

    This is the complex whose minimal non-faces are exactly the generators
    of the graph's degree n-2 ideal.
    """
    validate_standing_assumptions(G)
    full = G.full_mask
    facets = []
    for i in range(G.n):
        for j in range(i + 1, G.n):
            if not G.adj[i] >> j & 1:
                facets.append(full ^ (1 << i) ^ (1 << j))
    for t in triangles(G):
        facets.append(full ^ t)
    return SimplicialComplex.from_facets(G.n, facets)


def facet_complex(G: Graph) -> SimplicialComplex:
    """Facets are the generator supports of the graph's ideal."""
    validate_standing_assumptions(G)
    full = G.full_mask
    facets = []
    for i in range(G.n):
        row = G.adj[i] >> (i + 1)
        for j in iter_bits(row):
            facets.append(full ^ (1 << i) ^ (1 << (i + j + 1)))
    return SimplicialComplex.from_facets(G.n, facets)


def stanley_reisner_ideal(cx: SimplicialComplex) -> SqfIdeal:
    """Minimal non-faces of the complex, as an ideal.

    A set is a non-face exactly when it meets the complement of every
    facet, so the minimal non-faces are the minimal transversals of the
    facet complements.
    """
    full = (1 << cx.n) - 1
    gens = minimal_transversals([full ^ f for f in cx.facets], full)
    return SqfIdeal.from_supports(cx.n, gens)


def stanley_reisner_complex(I: SqfIdeal) -> SimplicialComplex:
    """Faces are the squarefree monomials outside I; facets complement the
    minimal primes."""
    if I.is_zero:
        full_simplex = (1 << I.n) - 1
        return SimplicialComplex(I.n, (full_simplex,))
    full = (1 << I.n) - 1
    return SimplicialComplex.from_facets(I.n, [full ^ p for p in minimal_primes(I)])


def induced_subcomplex(cx: SimplicialComplex, W: int) -> SimplicialComplex:
    """Faces of the complex contained in W (the void complex for W = 0)."""
    if W == 0:
        return SimplicialComplex(cx.n, ())
    return SimplicialComplex.from_facets(cx.n, {f & W for f in cx.facets})


def induced_subcollection(cx: SimplicialComplex, W: int) -> SimplicialComplex:
    """Only those whole facets lying inside W."""
    return SimplicialComplex(cx.n, tuple(f for f in cx.facets if f & ~W == 0))


def is_cone(cx: SimplicialComplex):
    """Smallest vertex contained in every facet, or None."""
    if cx.is_void:
        return None
    common = cx.facets[0]
    for f in cx.facets[1:]:
        common &= f
    if common == 0:
        return None
    return (common & -common).bit_length()


def _check_cover_seq(facet_set: frozenset, cover_mask: int, seq) -> bool:
    k = len(seq)
    union = 0
    for f in seq:
        union |= f
    if cover_mask & ~union:
        return False
    # minimality: a proper covering subset would survive one removal
    for i in range(k):
        rest = 0
        for j in range(k):
            if j != i:
                rest |= seq[j]
        if not cover_mask & ~rest:
            return False
    others = facet_set.difference(seq)
    if not others:
        return True
    suffix = [0] * (k + 1)
    for i in range(k - 1, -1, -1):
        suffix[i] = suffix[i + 1] | seq[i]
    for h in others:
        if not any(seq[i] & ~(h | suffix[i + 1]) == 0 for i in range(k - 1)):
            return False
    return True


def is_well_ordered_facet_cover(cx: SimplicialComplex, seq, cover_mask=None) -> bool:
    """Minimal vertex-covering facet sequence with the absorption property:
    every other facet H admits some i < k with F_i inside H union the tail
    F_{i+1}, ..., F_k.

    ``cover_mask`` is the vertex set the cover must span; it defaults to
    the complex's own vertices.  When the complex arose by restricting the
    facets to a multidegree, pass that multidegree: a cover certifying a
    nonzero Betti number there must reach every variable of it, and with
    the default mask a subcollection whose facets miss part of the
    multidegree could wrongly certify.
    """
    seq = tuple(seq)
    facet_set = frozenset(cx.facets)
    for f in seq:
        if f not in facet_set:
            raise ValueError(f"sequence entry {f:#x} is not a facet")
    if len(set(seq)) != len(seq):
        raise ValueError("cover sequence entries must be pairwise distinct")
    if cover_mask is None:
        cover_mask = cx.vertex_mask
    return _check_cover_seq(facet_set, cover_mask, seq)


def find_well_ordered_cover(cx: SimplicialComplex, k_max: int, cover_mask=None):
    """First accepted facet sequence of length <= k_max, scanning lengths in
    increasing order and sequences lexicographically; None if none exists.

    ``cover_mask`` as in :func:`is_well_ordered_facet_cover`.
    """
    facets = cx.facets
    if k_max > len(facets):
        raise ValueError("k_max exceeds the facet count")
    facet_set = frozenset(facets)
    if cover_mask is None:
        cover_mask = cx.vertex_mask
    covering_sets: dict[frozenset, bool] = {}
    for k in range(1, k_max + 1):
        for idxs in permutations(range(len(facets)), k):
            seq = tuple(facets[i] for i in idxs)
            key = frozenset(seq)
            basic = covering_sets.get(key)
            if basic is None:
                union = 0
                for f in seq:
                    union |= f
                basic = not cover_mask & ~union
                covering_sets[key] = basic
            if not basic:
                continue
            if _check_cover_seq(facet_set, cover_mask, seq):
                return seq
    return None
