"""Squarefree monomial ideals over K[x_1, ..., x_n].

A squarefree monomial is stored as the bitmask of its support; an ideal is
its minimal generating set, kept as an inclusion antichain sorted by
(degree, support) so that equal ideals compare equal structurally.

The central constructions here: the ideal with one degree n-2 generator
per graph edge (each generator is the product of all variables except the
edge's endpoints), minimal primes via minimal-transversal enumeration,
Alexander duality, the lcm graph of an equigenerated ideal, and linear
quotient orders with verifiable colon certificates.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .graphs import (
    Graph,
    connected_components,
    iter_bits,
    validate_standing_assumptions,
    vertices_of,
)


class IdealError(Exception):
    """Base class for ideal-level failures."""


class ZeroIdealError(IdealError):
    """Operation undefined on the zero ideal."""


class NotEquigeneratedError(IdealError):
    """Operation requires all generators in one degree."""


class NoOrderExistsError(IdealError):
    """No linear quotient order exists; carries the disconnection witness."""

    def __init__(self, components: list[tuple[int, ...]]):
        parts = ", ".join("{" + ",".join(map(str, c)) + "}" for c in components)
        super().__init__(f"NoOrderExists: components {parts}")
        self.components = components


def support_sort_key(mask: int) -> tuple:
    return (mask.bit_count(), vertices_of(mask))


def minimalize_supports(masks) -> tuple[int, ...]:
    """Inclusion-minimal elements of a family of masks, canonically sorted."""
    distinct = sorted(set(masks), key=support_sort_key)
    kept: list[int] = []
    for m in distinct:
        if not any(k & m == k for k in kept):
            kept.append(m)
    return tuple(kept)


@dataclass(frozen=True, slots=True)
class SqfMonomial:
    """A squarefree monomial: the product of x_i over the support mask."""

    n: int
    support: int

    @property
    def degree(self) -> int:
        return self.support.bit_count()

    def variables(self) -> tuple[int, ...]:
        return vertices_of(self.support)

    def divides(self, other: "SqfMonomial") -> bool:
        return self.support & ~other.support == 0

    def __str__(self) -> str:
        if self.support == 0:
            return "1"
        return "*".join(f"x{v}" for v in self.variables())

    @classmethod
    def from_str(cls, n: int, text: str) -> "SqfMonomial":
        text = text.strip()
        if text == "1":
            return cls(n, 0)
        mask = 0
        for token in text.split("*"):
            token = token.strip()
            if not token.startswith("x") or not token[1:].isdigit():
                raise ValueError(f"bad monomial factor {token!r}")
            v = int(token[1:])
            if not 1 <= v <= n:
                raise ValueError(f"variable x{v} outside x1..x{n}")
            if mask >> (v - 1) & 1:
                raise ValueError(f"repeated variable x{v}")
            mask |= 1 << (v - 1)
        return cls(n, mask)


@dataclass(frozen=True, slots=True)
class SqfIdeal:
    """Minimal generating set of a squarefree monomial ideal in n variables."""

    n: int
    gens: tuple[SqfMonomial, ...]

    @classmethod
    def from_supports(cls, n: int, masks) -> "SqfIdeal":
        gens = tuple(SqfMonomial(n, m) for m in minimalize_supports(masks))
        return cls(n, gens)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def support_masks(self) -> tuple[int, ...]:
        return tuple(g.support for g in self.gens)

    def degrees(self) -> set[int]:
        return {g.degree for g in self.gens}

    def is_equigenerated(self) -> bool:
        return len(self.degrees()) == 1

    def generator_strings(self) -> list[str]:
        return [str(g) for g in self.gens]

    def contains_monomial(self, mask: int) -> bool:
        return any(g.support & ~mask == 0 for g in self.gens)


def complementary_edge_ideal(G: Graph) -> SqfIdeal:
    """One generator per edge: all variables except the edge's endpoints."""
    validate_standing_assumptions(G)
    full = G.full_mask
    supports = []
    for i in range(G.n):
        row = G.adj[i] >> (i + 1)
        for j in iter_bits(row):
            supports.append(full ^ (1 << i) ^ (1 << (i + j + 1)))
    return SqfIdeal.from_supports(G.n, supports)


def minimal_transversals(supports, universe: int) -> list[int]:
    """Inclusion-minimal hitting sets of a family of vertex masks.

    Scans subsets of the union of the supports by increasing cardinality;
    candidates containing an already found transversal are pruned, and the
    scan stops at the first cardinality where every candidate was pruned
    (every larger set then contains a found transversal too).
    """
    supports = list(supports)
    if any(s == 0 for s in supports):
        return []
    if not supports:
        return [0]
    union = 0
    for s in supports:
        union |= s
    bits = list(iter_bits(union & universe))
    found: list[int] = []
    for k in range(1, len(bits) + 1):
        all_pruned = True
        for combo in combinations(bits, k):
            m = 0
            for b in combo:
                m |= 1 << b
            if any(t & m == t for t in found):
                continue
            all_pruned = False
            for s in supports:
                if not s & m:
                    break
            else:
                found.append(m)
        if all_pruned:
            break
    return found


def minimal_primes(I: SqfIdeal) -> list[int]:
    """Vertex masks T of the minimal primes (x_i : i in T), sorted by size."""
    if I.is_zero:
        raise ZeroIdealError("zero ideal has no minimal primes over itself")
    full = (1 << I.n) - 1
    trs = minimal_transversals(I.support_masks(), full)
    return sorted(trs, key=support_sort_key)


def height(I: SqfIdeal) -> int:
    primes = minimal_primes(I)
    return min(p.bit_count() for p in primes)


def is_unmixed(I: SqfIdeal) -> bool:
    primes = minimal_primes(I)
    return len({p.bit_count() for p in primes}) == 1


def alexander_dual(I: SqfIdeal) -> SqfIdeal:
    """Squarefree dual: generators are the minimal prime supports."""
    return SqfIdeal.from_supports(I.n, minimal_primes(I))


def degree_component(I: SqfIdeal, j: int) -> SqfIdeal:
    """The ideal generated by all degree-j squarefree monomials inside I."""
    if j < 1:
        raise ValueError("degree component needs j >= 1")
    full = (1 << I.n) - 1
    out = set()
    for g in I.support_masks():
        d = g.bit_count()
        if d > j:
            continue
        if d == j:
            out.add(g)
            continue
        free = list(iter_bits(full ^ g))
        for combo in combinations(free, j - d):
            m = g
            for b in combo:
                m |= 1 << b
            out.add(m)
    return SqfIdeal.from_supports(I.n, out)


def lcm_graph(I: SqfIdeal) -> Graph:
    """Graph on the generators, adjacent when their lcm has degree d + 1."""
    if I.is_zero:
        raise ZeroIdealError("lcm graph of the zero ideal is undefined")
    if not I.is_equigenerated():
        raise NotEquigeneratedError(f"generators span degrees {sorted(I.degrees())}")
    d = I.gens[0].degree
    masks = I.support_masks()
    m = len(masks)
    adj = [0] * m
    for a in range(m):
        for b in range(a + 1, m):
            if (masks[a] | masks[b]).bit_count() == d + 1:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return Graph(m, tuple(adj))


def is_linearly_related(I: SqfIdeal) -> bool:
    """First syzygies linear: every generator pair is joined by a path of
    generators dividing the pair's lcm, adjacency meaning lcm degree d + 1."""
    LG = lcm_graph(I)
    masks = I.support_masks()
    m = len(masks)
    for a in range(m):
        for b in range(a + 1, m):
            target = masks[a] | masks[b]
            if target.bit_count() == masks[a].bit_count() + 1:
                continue
            allowed = 0
            for w in range(m):
                if masks[w] & ~target == 0:
                    allowed |= 1 << w
            reach = 1 << a
            frontier = reach
            goal = 1 << b
            while frontier and not reach & goal:
                nxt = 0
                for w in iter_bits(frontier):
                    nxt |= LG.adj[w]
                frontier = nxt & allowed & ~reach
                reach |= frontier
            if not reach & goal:
                return False
    return True


def colon_min_gens(prefix_supports, support: int) -> tuple[int, ...]:
    """Minimal generators of (u_1, ..., u_r) : u, as support masks.

    Each lcm(u_i, u) / u has support supp(u_i) minus supp(u); the colon
    ideal is generated by these, minimalized.
    """
    return minimalize_supports(p & ~support for p in prefix_supports)


@dataclass(frozen=True, slots=True)
class MonomialOrderCert:
    """A generator ordering plus the minimal colon generators at each step.

    ``colon_steps[i]`` holds the variable masks generating
    (u_1, ..., u_i) : u_{i+1}; the first entry is the empty tuple.  The
    certificate is valid when every recorded mask has exactly one bit.
    """

    n: int
    order: tuple[SqfMonomial, ...]
    colon_steps: tuple[tuple[int, ...], ...]

    def colon_variables(self) -> list[tuple[int, ...]]:
        """1-based variables per step, for display."""
        return [tuple(m.bit_length() for m in step) for step in self.colon_steps]

    def is_valid_for(self, I: SqfIdeal) -> bool:
        if sorted(self.order, key=lambda g: support_sort_key(g.support)) != list(I.gens):
            return False
        supports = [g.support for g in self.order]
        for i in range(len(supports)):
            expected = colon_min_gens(supports[:i], supports[i])
            if expected != self.colon_steps[i]:
                return False
            if any(m.bit_count() != 1 for m in expected):
                return False
        return True


def is_linear_quotient_order(I: SqfIdeal, order) -> bool:
    """Check that successive colon ideals are generated by variables."""
    seq = [g.support if isinstance(g, SqfMonomial) else g for g in order]
    if sorted(seq, key=support_sort_key) != list(I.support_masks()):
        raise ValueError("order is not a permutation of the generators")
    for i in range(1, len(seq)):
        gens = colon_min_gens(seq[:i], seq[i])
        if any(m.bit_count() != 1 for m in gens):
            return False
    return True


def linear_quotient_order(G: Graph) -> MonomialOrderCert:
    """Deterministic linear quotient order for a connected graph's ideal.

    Starts at the smallest vertex, lists its edges by increasing other
    endpoint, then repeatedly takes the smallest vertex adjacent to the
    processed set that still has unlisted edges and lists those edges by
    increasing other endpoint.  Disconnected graphs admit no such order at
    all and raise :class:`NoOrderExistsError`.
    """
    validate_standing_assumptions(G)
    comps = connected_components(G)
    if len(comps) > 1:
        raise NoOrderExistsError([vertices_of(c) for c in comps])
    full = G.full_mask
    a = 0
    order_edges = [(a, w) for w in iter_bits(G.adj[a])]
    processed = 1 << a
    total = G.edge_count()
    while len(order_edges) < total:
        candidate = None
        for c in range(G.n):
            if processed >> c & 1:
                continue
            if G.adj[c] & processed and G.adj[c] & ~processed:
                candidate = c
                break
        if candidate is None:
            raise AssertionError("connected graph ran out of frontier edges")
        for w in iter_bits(G.adj[candidate] & ~processed):
            order_edges.append((candidate, w))
        processed |= 1 << candidate
    supports = [full ^ (1 << i) ^ (1 << j) for i, j in order_edges]
    steps = tuple(colon_min_gens(supports[:i], supports[i]) for i in range(len(supports)))
    cert = MonomialOrderCert(
        G.n,
        tuple(SqfMonomial(G.n, s) for s in supports),
        steps,
    )
    if any(any(m.bit_count() != 1 for m in step) for step in steps):
        raise AssertionError("constructed order has a nonlinear colon step")
    return cert


def has_linear_quotient_order(I: SqfIdeal, limit: int = 20) -> bool:
    """Exhaustive decision over all generator orderings.

    Whether step i is admissible depends only on the set of earlier
    generators, so searching reachable prefix sets visits every ordering's
    state space; with m generators that is at most 2^m states.
    """
    masks = I.support_masks()
    m = len(masks)
    if m > limit:
        raise ValueError(f"exhaustive order search capped at {limit} generators")
    full = (1 << m) - 1
    reach = {0}
    frontier = [0]
    while frontier:
        state = frontier.pop()
        prefix = [masks[i] for i in iter_bits(state)]
        for i in range(m):
            if state >> i & 1:
                continue
            nxt = state | 1 << i
            if nxt in reach:
                continue
            gens = colon_min_gens(prefix, masks[i])
            if all(g.bit_count() == 1 for g in gens):
                if nxt == full:
                    return True
                reach.add(nxt)
                frontier.append(nxt)
    return m == 0
