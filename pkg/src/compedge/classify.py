"""Graph classification predictions, per-graph verification, and sweeps.

``classify_graph`` predicts every algebraic property from graph structure
alone; ``verify_graph`` computes the same properties from scratch through
the ideal, complex, homology and Betti layers and reports each claim as
match or mismatch.  ``sweep`` runs the verification over every labeled
graph without isolated vertices in a vertex range.

Two prediction modes exist for the projective dimension and regularity
pair.  The literal reading places complete graphs at (1, n-2); the
corrected mode places them at (2, n-2), which is what the computed tables
give (complete graphs have height 3, so their quotients are
Cohen-Macaulay with pd(S/I) = 3).  Corrected is the default; the literal
mode is kept so the discrepancy stays visible.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from itertools import combinations

from . import graphs as g
from . import ideals as idl
from .betti import BettiTable, betti_positions_check, hochster_betti, ring_properties
from .complexes import gamma_complex, stanley_reisner_ideal
from .graphs import Graph, emit_graph, iter_bits, vertices_of
from .homology import GF2, GF3, QQ, FieldSpec

MODE_CORRECTED = "corrected"
MODE_PAPER_LITERAL = "paper-literal"
MODES = (MODE_CORRECTED, MODE_PAPER_LITERAL)

EXHAUSTIVE_ORDER_SEARCH_LIMIT = 12


@dataclass
class ClassificationReport:
    n: int
    mode: str
    connected: bool
    complete: bool
    forest: bool
    tree: bool
    chordal: bool
    triangle_free: bool
    disjoint_union_of_edges: bool
    component_count: int
    has_cycle: bool
    unmixed: bool
    sequentially_cm: bool
    cohen_macaulay: bool
    gorenstein: bool
    linear_resolution: bool
    pure_resolution: bool
    level: bool
    pd: int
    reg: int

    def to_json_dict(self) -> dict:
        return dict(self.__dict__)


def classify_graph(G: Graph, mode: str = MODE_CORRECTED) -> ClassificationReport:
    """Predict every property of the graph's ideal from graph shape alone."""
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    g.validate_standing_assumptions(G)
    n = G.n
    comps = g.connected_components(G)
    connected = len(comps) == 1
    complete = g.is_complete(G)
    forest = g.is_forest(G)
    tree = connected and forest
    duoe = g.is_disjoint_union_of_edges(G)
    if tree or (complete and mode == MODE_PAPER_LITERAL):
        pd, reg = 1, n - 2
    elif complete:
        pd, reg = 2, n - 2
    elif forest:
        pd, reg = 1, n - 1
    elif connected:
        pd, reg = 2, n - 2
    else:
        pd, reg = 2, n - 1
    return ClassificationReport(
        n=n,
        mode=mode,
        connected=connected,
        complete=complete,
        forest=forest,
        tree=tree,
        chordal=g.is_chordal(G),
        triangle_free=g.is_triangle_free(G),
        disjoint_union_of_edges=duoe,
        component_count=len(comps),
        has_cycle=not forest,
        unmixed=complete or g.is_triangle_free(G),
        sequentially_cm=g.is_chordal(G),
        cohen_macaulay=complete or forest,
        gorenstein=duoe and len(comps) == 2,
        linear_resolution=connected,
        pure_resolution=connected or duoe,
        level=complete or tree or duoe,
        pd=pd,
        reg=reg,
    )


def _masks_json(masks) -> list[list[int]]:
    return [list(vertices_of(m)) for m in masks]


@dataclass
class ConsistencyResult:
    graph6: str
    field: str
    mode: str
    claims: dict[str, dict]

    @property
    def mismatches(self) -> list[tuple[str, object, object]]:
        return [
            (name, c["predicted"], c["computed"])
            for name, c in self.claims.items()
            if not c["match"]
        ]

    def all_match(self) -> bool:
        return all(c["match"] for c in self.claims.values())

    def to_json_dict(self) -> dict:
        return {
            "graph6": self.graph6,
            "field": self.field,
            "mode": self.mode,
            "claims": self.claims,
        }


def _nonedge_masks(G: Graph) -> list[int]:
    out = []
    for i in range(G.n):
        for j in range(i + 1, G.n):
            if not G.adj[i] >> j & 1:
                out.append(1 << i | 1 << j)
    return out


def _expected_dual_supports(G: Graph) -> list[int]:
    return sorted(_nonedge_masks(G) + g.triangles(G), key=idl.support_sort_key)


def _lcm_graph_matches_line_graph(G: Graph, I: idl.SqfIdeal) -> bool:
    LG = idl.lcm_graph(I)
    full = G.full_mask
    edge_of = [full ^ s for s in I.support_masks()]
    m = len(edge_of)
    for a in range(m):
        for b in range(a + 1, m):
            expected = bool(edge_of[a] & edge_of[b])
            if bool(LG.adj[a] >> b & 1) != expected:
                return False
    return True


def _linear_quotients_exist(G: Graph, I: idl.SqfIdeal, connected: bool) -> bool:
    if connected:
        cert = idl.linear_quotient_order(G)
        return cert.is_valid_for(I) and idl.is_linear_quotient_order(I, cert.order)
    try:
        idl.linear_quotient_order(G)
        return True
    except idl.NoOrderExistsError:
        pass
    if len(I.gens) <= EXHAUSTIVE_ORDER_SEARCH_LIMIT:
        return idl.has_linear_quotient_order(I)
    return False


def _forest_betti_shape(table: BettiTable, n: int, c: int, duoe: bool) -> tuple[dict, dict]:
    predicted = {
        "rank_0": n - c,
        "top_shift_nonzero": True,
        "middle_shift_nonzero": not duoe,
        "other_positions": [],
    }
    allowed = {(0, n - 2), (1, n - 1), (1, n)}
    computed = {
        "rank_0": table.rank(0, n - 2),
        "top_shift_nonzero": table.rank(1, n) != 0,
        "middle_shift_nonzero": table.rank(1, n - 1) != 0,
        "other_positions": sorted(set(table.entries) - allowed),
    }
    return predicted, computed


def verify_graph(
    G: Graph,
    field: FieldSpec = GF2,
    mode: str = MODE_CORRECTED,
) -> ConsistencyResult:
    """Compute everything honestly and compare with the predictions."""
    cls = classify_graph(G, mode)
    I = idl.complementary_edge_ideal(G)
    primes = idl.minimal_primes(I)
    table = hochster_betti(I, field)
    props = ring_properties(I, field, table=table, primes=primes)
    n = G.n

    claims: dict[str, dict] = {}

    def add(name: str, predicted, computed) -> None:
        claims[name] = {
            "predicted": predicted,
            "computed": computed,
            "match": predicted == computed,
        }

    expected_primes = _expected_dual_supports(G)
    add("minimal_primes", _masks_json(expected_primes), _masks_json(primes))
    add("height", 3 if cls.complete else 2, min(p.bit_count() for p in primes))
    add("unmixed", cls.unmixed, props.unmixed)

    dual = idl.alexander_dual(I)
    add(
        "alexander_dual",
        _masks_json(expected_primes),
        _masks_json(dual.support_masks()),
    )
    add("dual_involution", True, idl.alexander_dual(dual) == I)
    add(
        "stanley_reisner_roundtrip",
        True,
        stanley_reisner_ideal(gamma_complex(G)) == I,
    )
    add("lcm_graph_is_line_graph", True, _lcm_graph_matches_line_graph(G, I))

    add("linear_resolution_iff_connected", cls.connected, props.linear_resolution)
    add("linearly_related_iff_connected", cls.connected, idl.is_linearly_related(I))
    add(
        "linear_quotients_iff_connected",
        cls.connected,
        _linear_quotients_exist(G, I, cls.connected),
    )

    add("betti_positions", True, betti_positions_check(table))
    add(
        "pd_reg_bounds",
        True,
        1 <= table.pd <= 2 and n - 2 <= table.reg <= n - 1,
    )
    add("generator_count", G.edge_count(), table.rank(0, n - 2))
    if cls.forest and not cls.connected:
        predicted, computed = _forest_betti_shape(
            table, n, cls.component_count, cls.disjoint_union_of_edges
        )
        add("disconnected_forest_betti", predicted, computed)

    add("cohen_macaulay", cls.cohen_macaulay, props.cohen_macaulay)
    add("gorenstein", cls.gorenstein, props.gorenstein)
    add("level", cls.level, props.level)
    add("pure_resolution", cls.pure_resolution, props.pure_resolution)
    add(
        "dual_componentwise_linear_iff_chordal",
        cls.chordal,
        props.componentwise_linear_dual,
    )
    add("pd_reg", [cls.pd, cls.reg], [table.pd, table.reg])

    return ConsistencyResult(
        graph6=emit_graph(G),
        field=field.label,
        mode=mode,
        claims=claims,
    )


def edge_pairs(n: int) -> list[tuple[int, int]]:
    """0-based vertex pairs indexing the bits of an edge mask."""
    return list(combinations(range(n), 2))


def graph_from_edge_mask(n: int, mask: int, pairs=None) -> Graph | None:
    """Graph for an edge bitmask, or None if some vertex ends up isolated."""
    if pairs is None:
        pairs = edge_pairs(n)
    adj = [0] * n
    for t in iter_bits(mask):
        i, j = pairs[t]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
    if any(a == 0 for a in adj):
        return None
    return Graph(n, tuple(adj))


def iter_graphs(n: int):
    """All labeled graphs on [n] with minimum degree >= 1, by edge mask."""
    pairs = edge_pairs(n)
    for mask in range(1 << len(pairs)):
        G = graph_from_edge_mask(n, mask, pairs)
        if G is not None:
            yield G


@dataclass
class SweepReport:
    n_min: int
    n_max: int
    field: str
    mode: str
    cross_field: bool
    graph_count: int
    claim_tallies: dict[str, list[int]]
    mismatches: list[dict]
    field_disagreements: list[dict]
    wall_time_s: float

    @property
    def mismatch_count(self) -> int:
        return len(self.mismatches)

    def to_json_dict(self) -> dict:
        """Canonical report content; timing is deliberately left out so
        reruns and different worker counts serialize identically."""
        return {
            "schema": "compedge/sweep/1",
            "n_min": self.n_min,
            "n_max": self.n_max,
            "field": self.field,
            "mode": self.mode,
            "cross_field": self.cross_field,
            "graph_count": self.graph_count,
            "claim_tallies": {k: list(v) for k, v in sorted(self.claim_tallies.items())},
            "mismatches": self.mismatches,
            "field_disagreements": self.field_disagreements,
        }


_CROSS_FIELDS = (GF2, GF3, QQ)


def _verify_into(acc_tallies, acc_mismatches, result: ConsistencyResult) -> None:
    for name, claim in result.claims.items():
        tally = acc_tallies.setdefault(name, [0, 0])
        if claim["match"]:
            tally[0] += 1
        else:
            tally[1] += 1
            acc_mismatches.append(
                {
                    "graph6": result.graph6,
                    "field": result.field,
                    "claim": name,
                    "predicted": claim["predicted"],
                    "computed": claim["computed"],
                }
            )


def _cross_field_check(G: Graph, I: idl.SqfIdeal) -> list[dict]:
    tables = {f.label: hochster_betti(I, f) for f in _CROSS_FIELDS}
    base = tables[GF2.label]
    out = []
    for label, table in tables.items():
        if table.entries != base.entries:
            out.append(
                {
                    "graph6": emit_graph(G),
                    "fields": [GF2.label, label],
                    "tables": [base.to_json_dict(), table.to_json_dict()],
                }
            )
    return out


def _sweep_chunk(args) -> tuple[int, dict, list, list]:
    n, lo, hi, char, mode, cross_field = args
    field = FieldSpec(char)
    pairs = edge_pairs(n)
    count = 0
    tallies: dict[str, list[int]] = {}
    mismatches: list[dict] = []
    disagreements: list[dict] = []
    for mask in range(lo, hi):
        G = graph_from_edge_mask(n, mask, pairs)
        if G is None:
            continue
        count += 1
        result = verify_graph(G, field, mode)
        _verify_into(tallies, mismatches, result)
        if cross_field:
            disagreements.extend(_cross_field_check(G, idl.complementary_edge_ideal(G)))
    return count, tallies, mismatches, disagreements


def sweep(
    n_min: int,
    n_max: int,
    field: FieldSpec = GF2,
    mode: str = MODE_CORRECTED,
    cross_field: bool = False,
    workers: int = 1,
    progress=None,
) -> SweepReport:
    """Verify every labeled graph with min degree >= 1 for each n in range.

    The edge-mask space is split into contiguous chunks; chunk results
    merge in mask order, so the report does not depend on the worker
    count.  ``progress``, if given, receives one line per finished n.
    """
    if not 4 <= n_min <= n_max <= 7:
        raise ValueError("sweep range must satisfy 4 <= n_min <= n_max <= 7")
    if mode not in MODES:
        raise ValueError(f"unknown mode {mode!r}")
    start = time.perf_counter()
    total = 0
    tallies: dict[str, list[int]] = {}
    mismatches: list[dict] = []
    disagreements: list[dict] = []
    for n in range(n_min, n_max + 1):
        nmasks = 1 << len(edge_pairs(n))
        jobs = _chunk_jobs(n, nmasks, field.characteristic, mode, cross_field, workers)
        if workers > 1 and len(jobs) > 1:
            import multiprocessing

            with multiprocessing.Pool(workers) as pool:
                results = pool.map(_sweep_chunk, jobs)
        else:
            results = [_sweep_chunk(job) for job in jobs]
        for count, t, m, d in results:
            total += count
            for name, (ok, bad) in t.items():
                tally = tallies.setdefault(name, [0, 0])
                tally[0] += ok
                tally[1] += bad
            mismatches.extend(m)
            disagreements.extend(d)
        if progress is not None:
            progress(f"n={n}: done ({total} graphs so far)")
    mismatches.sort(key=lambda m: (m["graph6"], m["claim"], m["field"]))
    disagreements.sort(key=lambda d: (d["graph6"], d["fields"]))
    return SweepReport(
        n_min=n_min,
        n_max=n_max,
        field=field.label,
        mode=mode,
        cross_field=cross_field,
        graph_count=total,
        claim_tallies=tallies,
        mismatches=mismatches,
        field_disagreements=disagreements,
        wall_time_s=time.perf_counter() - start,
    )


def _chunk_jobs(n, nmasks, char, mode, cross_field, workers):
    nchunks = max(1, min(nmasks, workers * 4))
    step = (nmasks + nchunks - 1) // nchunks
    jobs = []
    lo = 0
    while lo < nmasks:
        hi = min(nmasks, lo + step)
        jobs.append((n, lo, hi, char, mode, cross_field))
        lo = hi
    return jobs


def gorenstein_census(n: int, field: FieldSpec = GF2) -> list[str]:
    """graph6 strings of all graphs whose quotient ring is Gorenstein."""
    out = []
    for G in iter_graphs(n):
        I = idl.complementary_edge_ideal(G)
        primes = idl.minimal_primes(I)
        table = hochster_betti(I, field)
        ht = min(p.bit_count() for p in primes)
        if table.pd + 1 == ht and table.total(table.pd) == 1:
            out.append(emit_graph(G))
    return sorted(out)
