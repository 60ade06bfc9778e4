"""Objects and morphisms of the alcove category, and translation functors.

An object assigns to finitely many alcoves A a based graded free module M(A)
(stored by its basis degrees) and to pairs (A, beta) a submodule basis
M(A, beta) inside M(A) + M(beta-up A).  Morphisms are per-alcove matrices.

Objects remember how they were built (``provenance``), e.g.
``("Q0", ("T", 0), ("T", 2), ("shift", -2))``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .alcove import (
    Alcove,
    alcove_from_json,
    alcove_to_json,
    down,
    finite_alcoves,
    fundamental_alcove,
    neighbour,
    s_wall,
    up,
)
from .fracring import Element, RootRing, format_fraction
from .lattice import (
    GradedFreeModule,
    Mat,
    SubmoduleBasis,
    basis_from_json,
    basis_to_json,
    check_density,
    determinant,
    direct_sum,
    equal_submodules,
    generators_in_span,
    intersect_block,
    invert,
    is_member,
    mat_mul,
    mat_vec,
    project_block,
    scale_generators,
    span_equals,
)

EMPTY = GradedFreeModule(())


@dataclass(eq=False)
class KObject:
    ring: RootRing
    components: dict[Alcove, GradedFreeModule]
    edges: dict[tuple[Alcove, int], SubmoduleBasis]
    provenance: tuple = ()

    def support(self) -> set[Alcove]:
        return set(self.components)

    def module(self, alcove: Alcove) -> GradedFreeModule:
        return self.components.get(alcove, EMPTY)

    def degrees(self, alcove: Alcove) -> tuple[int, ...]:
        return self.components.get(alcove, EMPTY).degrees

    def rank(self, alcove: Alcove) -> int:
        return len(self.degrees(alcove))

    def edge(self, alcove: Alcove, beta: int) -> SubmoduleBasis:
        """M(A, beta); a basis with no vectors when the submodule is zero."""
        found = self.edges.get((alcove, beta))
        if found is not None:
            return found
        left = self.module(alcove)
        right = self.module(up(beta, alcove))
        return SubmoduleBasis(self.ring, left + right, beta, (), (), left.rank)

    def edge_keys(self) -> set[tuple[Alcove, int]]:
        """All (A, beta) with a nonzero endpoint."""
        keys = set()
        for beta in range(self.ring.nroots):
            for a in self.components:
                keys.add((a, beta))
                keys.add((down(beta, a), beta))
        return keys

    @property
    def datum(self):
        return self.ring.datum

    def __repr__(self) -> str:
        return f"KObject({len(self.components)} alcoves, provenance={self.provenance})"


def _edge(ring: RootRing, left: GradedFreeModule, right: GradedFreeModule, beta: int,
          vectors, degrees) -> SubmoduleBasis:
    return SubmoduleBasis(ring, left + right, beta, tuple(tuple(v) for v in vectors),
                          tuple(degrees), left.rank)


def unit_object(ring: RootRing) -> KObject:
    """P0: S^empty at the fundamental alcove."""
    a_e = fundamental_alcove(ring.datum)
    one = ring.one
    module = GradedFreeModule((0,))
    comps = {a_e: module}
    edges = {}
    for beta in range(ring.nroots):
        edges[(a_e, beta)] = _edge(ring, module, EMPTY, beta, [(one,)], [0])
        edges[(down(beta, a_e), beta)] = _edge(ring, EMPTY, module, beta, [(one,)], [0])
    return KObject(ring, comps, edges, ("P0",))


def q_zero(ring: RootRing) -> KObject:
    """Q0: rank one on the finite Weyl group alcoves, butterfly edges."""
    module = GradedFreeModule((0,))
    alcoves = finite_alcoves(ring.datum)
    comps = {a: module for a in alcoves}
    one, zero = ring.one, ring.zero
    edges = {}
    for beta in range(ring.nroots):
        root = ring.root(beta)
        for a in alcoves:
            if a.strip(beta) < 0:
                edges[(a, beta)] = _edge(ring, module, module, beta, [(root, zero), (one, one)], [2, 0])
                edges[(down(beta, a), beta)] = _edge(ring, EMPTY, module, beta, [(one,)], [0])
            else:
                edges[(a, beta)] = _edge(ring, module, EMPTY, beta, [(root,)], [2])
    return KObject(ring, comps, edges, ("Q0",))


def base_object(ring: RootRing, name: str) -> KObject:
    if name == "P0":
        return unit_object(ring)
    if name == "Q0":
        return q_zero(ring)
    raise ValueError(f"unknown base object {name!r}")


# -- translation --------------------------------------------------------------


def _layout(M: KObject, alcove: Alcove, s: int) -> tuple[dict[Alcove, int], tuple[int, ...]]:
    """Slot offsets of M(A^(s)-) + M(A^(s)+) inside the translated module at A."""
    wall = s_wall(alcove, s)
    lo, hi = wall.minus, wall.plus
    dlo, dhi = M.degrees(lo), M.degrees(hi)
    return {lo: 0, hi: len(dlo)}, dlo + dhi


def translate(s: int, M: KObject, dual: bool = False) -> KObject:
    """The translation functor for the simple affine reflection ``s``.

    With ``dual=True`` this is the variant with up and down interchanged in the
    case where the wall is of type beta and A is on its plus side.
    """
    ring = M.ring
    if not 0 <= s <= ring.datum.rank:
        raise ValueError(f"no simple affine reflection with label {s}")
    zero = ring.zero
    candidates = set()
    for a in M.components:
        candidates.add(a)
        candidates.add(neighbour(a, s))
    layouts = {}
    comps = {}
    for a in candidates:
        slots, degs = _layout(M, a, s)
        layouts[a] = (slots, degs)
        if degs:
            comps[a] = GradedFreeModule(degs)

    def layout(a: Alcove):
        if a not in layouts:
            layouts[a] = _layout(M, a, s)
        return layouts[a]

    edges = {}
    for beta in range(ring.nroots):
        root = ring.root(beta)
        keys = set(comps) | {down(beta, c) for c in comps}
        for a in keys:
            b = up(beta, a)
            lslots, ldegs = layout(a)
            rslots, rdegs = layout(b)
            nl, nr = len(ldegs), len(rdegs)
            if nl + nr == 0:
                continue
            wall = s_wall(a, s)
            vectors, degrees = [], []
            if wall.beta == beta and a == wall.minus:
                old = M.edge(a, beta)
                for g, d in zip(old.vectors, old.degrees):
                    vectors.append(list(g) + list(g))
                    degrees.append(d)
                    vectors.append([root * x for x in g] + [zero] * nr)
                    degrees.append(d + 2)
            elif wall.beta == beta:
                lower = M.edge(down(beta, a), beta)
                upper = M.edge(b, beta)
                lscale = 0 if dual else 1
                for g, d in zip(lower.vectors, lower.degrees):
                    vec = [root * x for x in g] if lscale else list(g)
                    vectors.append(vec + [zero] * nr)
                    degrees.append(d + 2 * lscale)
                for g, d in zip(upper.vectors, upper.degrees):
                    vec = list(g) if lscale else [root * x for x in g]
                    vectors.append([zero] * nl + vec)
                    degrees.append(d + 2 * (1 - lscale))
            else:
                for c in (wall.minus, wall.plus):
                    old = M.edge(c, beta)
                    if not old.vectors:
                        continue
                    target = up(beta, c)
                    if c not in lslots or target not in rslots:
                        raise ArithmeticError("crosswise slot routing failed")
                    lo = lslots[c]
                    ro = nl + rslots[target]
                    m1 = old.split
                    for g, d in zip(old.vectors, old.degrees):
                        vec = [zero] * (nl + nr)
                        vec[lo:lo + m1] = g[:m1]
                        vec[ro:ro + len(g) - m1] = g[m1:]
                        vectors.append(vec)
                        degrees.append(d)
            if vectors:
                edges[(a, beta)] = _edge(ring, GradedFreeModule(ldegs), GradedFreeModule(rdegs),
                                         beta, vectors, degrees)
    tag = ("Tdual", s) if dual else ("T", s)
    return KObject(ring, comps, edges, M.provenance + (tag,))


def translate_dual(s: int, M: KObject) -> KObject:
    return translate(s, M, dual=True)


def shift(M: KObject, amount: int) -> KObject:
    """M{amount}: every degree raised by ``amount``."""
    if amount == 0:
        return M
    comps = {a: m.shift(amount) for a, m in M.components.items()}
    edges = {}
    for key, e in M.edges.items():
        edges[key] = SubmoduleBasis(e.ring, e.ambient.shift(amount), e.beta, e.vectors,
                                    tuple(d + amount for d in e.degrees), e.split, e._inverse, e._det)
    return KObject(M.ring, comps, edges, M.provenance + (("shift", amount),))


def bott_samelson(ring: RootRing, word: Sequence[int], base: str = "P0", n: int = 0) -> KObject:
    """T_{s_r} ... T_{s_1}(base){n} for ``word = (s_1, ..., s_r)``."""
    M = base_object(ring, base)
    for s in word:
        M = translate(s, M)
    return shift(M, n)


def support(M: KObject) -> set[Alcove]:
    return M.support()


def rank_table(M: KObject) -> dict[Alcove, tuple[int, tuple[int, ...]]]:
    return {a: (m.rank, tuple(sorted(m.degrees))) for a, m in M.components.items()}


def objects_equal(M: KObject, N: KObject) -> bool:
    """Same support, same degrees, equal submodules edge by edge."""
    if M.components.keys() != N.components.keys():
        return False
    if any(M.degrees(a) != N.degrees(a) for a in M.components):
        return False
    for key in set(M.edges) | set(N.edges):
        e, f = M.edge(*key), N.edge(*key)
        if e.degrees and not f.degrees or f.degrees and not e.degrees:
            return False
        if not equal_submodules(e, f):
            return False
    return True


def links(M: KObject, alcove: Alcove, beta: int) -> bool:
    """Does the edge M(A, beta) fail to split along its two blocks?"""
    e = M.edge(alcove, beta)
    if not e.vectors:
        raise ValueError("no edge at this alcove and root")
    m1, m2 = e.block_sizes()
    if m1 == 0 or m2 == 0:
        return False
    first, second = intersect_block(e, 1), intersect_block(e, 2)
    if first.rank + second.rank < e.rank:
        return True
    return not equal_submodules(e, direct_sum(first, second))


# -- morphisms ----------------------------------------------------------------


@dataclass(eq=False)
class KMorphism:
    """Per-alcove matrices (rows: target basis, columns: source basis)."""

    source: KObject
    target: KObject
    maps: dict[Alcove, Mat] = field(default_factory=dict)

    def matrix(self, alcove: Alcove) -> Mat:
        found = self.maps.get(alcove)
        if found is not None:
            return found
        zero = self.source.ring.zero
        return [[zero] * self.source.rank(alcove) for _ in range(self.target.rank(alcove))]

    def alcoves(self) -> set[Alcove]:
        return self.source.support() | self.target.support()


@dataclass
class MorphismReport:
    ok: bool
    failures: list = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _apply(f: KMorphism, alcove: Alcove, beta: int, vec) -> list:
    e_split = f.source.rank(alcove)
    zero = f.source.ring.zero
    left = mat_vec(f.matrix(alcove), list(vec[:e_split]), zero)
    right = mat_vec(f.matrix(up(beta, alcove)), list(vec[e_split:]), zero)
    return left + right


def check_morphism(f: KMorphism, max_failures: int = 10) -> MorphismReport:
    """Shapes, degree-0 homogeneity and edge preservation, with failures listed."""
    failures = []
    for a in f.alcoves():
        mat = f.matrix(a)
        ds, dt = f.source.degrees(a), f.target.degrees(a)
        if len(mat) != len(dt) or any(len(row) != len(ds) for row in mat):
            failures.append(("shape", a))
            continue
        for i, row in enumerate(mat):
            for j, x in enumerate(row):
                if not x.is_zero() and x.degree != ds[j] - dt[i]:
                    failures.append(("degree", a, i, j))
    if failures:
        return MorphismReport(False, failures[:max_failures])
    for (a, beta), e in f.source.edges.items():
        target_edge = f.target.edge(a, beta)
        for vec in e.vectors:
            image = _apply(f, a, beta, vec)
            if all(x.is_zero() for x in image):
                continue
            if not target_edge.vectors or not is_member(image, target_edge):
                failures.append(("edge", a, beta))
                break
        if len(failures) >= max_failures:
            break
    return MorphismReport(not failures, failures)


def is_morphism(f: KMorphism) -> bool:
    return check_morphism(f, max_failures=1).ok


def compose(g: KMorphism, f: KMorphism) -> KMorphism:
    """g after f."""
    zero = f.source.ring.zero
    maps = {}
    for a in f.source.support() & g.target.support():
        maps[a] = mat_mul(g.matrix(a), f.matrix(a), zero)
    return KMorphism(f.source, g.target, maps)


def identity_morphism(M: KObject, target: Optional[KObject] = None) -> KMorphism:
    ring = M.ring
    maps = {}
    for a, m in M.components.items():
        n = m.rank
        maps[a] = [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]
    return KMorphism(M, M if target is None else target, maps)


def is_identity(f: KMorphism) -> bool:
    for a in f.alcoves():
        mat = f.matrix(a)
        n = f.source.rank(a)
        if len(mat) != n or f.target.rank(a) != n:
            return False
        for i, row in enumerate(mat):
            for j, x in enumerate(row):
                if not (x == (1 if i == j else 0)):
                    return False
    return True


def inverse_morphism(f: KMorphism) -> Optional[KMorphism]:
    """Componentwise inverse if every f_A is invertible over S^empty."""
    maps = {}
    for a in f.alcoves():
        mat = f.matrix(a)
        if len(mat) != f.source.rank(a):
            return None
        if not mat:
            continue
        try:
            inv, det = invert(mat, f.source.ring)
        except ZeroDivisionError:
            return None
        if not det.is_unit():
            return None
        maps[a] = inv
    return KMorphism(f.target, f.source, maps)


def is_isomorphism(f: KMorphism) -> bool:
    if not is_morphism(f):
        return False
    inv = inverse_morphism(f)
    return inv is not None and is_morphism(inv)


def shift_morphism(f: KMorphism, amount: int, source: Optional[KObject] = None,
                   target: Optional[KObject] = None) -> KMorphism:
    return KMorphism(source or shift(f.source, amount), target or shift(f.target, amount), f.maps)


def _block_diag(blocks: Sequence[Mat], rows: Sequence[int], cols: Sequence[int], zero) -> Mat:
    out = [[zero] * sum(cols) for _ in range(sum(rows))]
    r0 = c0 = 0
    for mat, nr, nc in zip(blocks, rows, cols):
        for i in range(nr):
            for j in range(nc):
                out[r0 + i][c0 + j] = mat[i][j]
        r0 += nr
        c0 += nc
    return out


def translate_morphism(s: int, f: KMorphism, dual: bool = False,
                       source: Optional[KObject] = None, target: Optional[KObject] = None) -> KMorphism:
    """(T f)_A = f_{A^(s)-} + f_{A^(s)+}, block diagonal."""
    src = source or translate(s, f.source, dual)
    tgt = target or translate(s, f.target, dual)
    zero = f.source.ring.zero
    maps = {}
    for a in src.support() | tgt.support():
        wall = s_wall(a, s)
        lo, hi = wall.minus, wall.plus
        maps[a] = _block_diag(
            [f.matrix(lo), f.matrix(hi)],
            [f.target.rank(lo), f.target.rank(hi)],
            [f.source.rank(lo), f.source.rank(hi)],
            zero,
        )
    return KMorphism(src, tgt, maps)


def diagonal_morphism(s: int, Q: KObject, translated: Optional[KObject] = None) -> KMorphism:
    """Delta: Q0 -> T_s Q0 with Delta_A = column (1, 1), for finite ``s``."""
    ring = Q.ring
    if not 0 <= s < ring.datum.rank:
        raise ValueError("the diagonal needs a finite simple reflection")
    target = translated or translate(s, Q)
    maps = {a: [[ring.one], [ring.one]] for a in Q.components}
    for a in Q.components:
        if target.rank(a) != 2 or Q.rank(a) != 1:
            raise ValueError("source must be rank one on finite alcoves, like Q0")
    return KMorphism(Q, target, maps)


def lift_hom(f: KMorphism, s: int, translated_source: Optional[KObject] = None,
             translated_target: Optional[KObject] = None) -> KMorphism:
    """(T_s f) after Delta, for f out of Q0."""
    tq = translated_source or translate(s, f.source)
    delta = diagonal_morphism(s, f.source, tq)
    tf = translate_morphism(s, f, source=tq, target=translated_target)
    return compose(tf, delta)


# -- indecomposability of Q0 -----------------------------------------------


def linking_graph(M: KObject) -> dict[Alcove, set[Alcove]]:
    graph: dict[Alcove, set[Alcove]] = {a: set() for a in M.components}
    for a in M.components:
        for beta in range(M.ring.nroots):
            b = up(beta, a)
            if b in M.components and links(M, a, beta):
                graph[a].add(b)
                graph[b].add(a)
    return graph


def connected_component(graph: dict[Alcove, set[Alcove]], start: Alcove) -> set[Alcove]:
    seen = {start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for b in graph[a]:
            if b not in seen:
                seen.add(b)
                queue.append(b)
    return seen


def q0_indecomposable_check(ring: RootRing, M: Optional[KObject] = None) -> bool:
    """Ranks at most one and a connected linking graph on the support."""
    M = M or q_zero(ring)
    if any(m.rank > 1 for m in M.components.values()):
        return False
    if not M.components:
        return True
    graph = linking_graph(M)
    start = next(iter(graph))
    return connected_component(graph, start) == set(graph)


# -- structural checks on constructed objects -------------------------------


def structure_report(M: KObject, up_equality: bool) -> dict[str, dict[str, int]]:
    """Density, the two projection/intersection identities and beta-stability."""
    report: dict[str, dict[str, int]] = {}

    def record(name: str, ok: bool) -> None:
        entry = report.setdefault(name, {"checked": 0, "failed": 0})
        entry["checked"] += 1
        entry["failed"] += int(not ok)

    for key, e in M.edges.items():
        record("density", check_density(e))
    for a in M.components:
        for beta in range(M.ring.nroots):
            here = M.edge(a, beta)
            below = M.edge(down(beta, a), beta)
            record("image_down", span_equals(project_block(here, 1), intersect_block(below, 2)))
            raised = scale_generators(project_block(below, 2), 1)
            inner = intersect_block(here, 1)
            if up_equality:
                record("image_up_equality", span_equals(raised, inner))
            else:
                record("image_up_inclusion", generators_in_span(raised, inner))
    for key, e in M.edges.items():
        root = M.ring.root(e.beta)
        m1 = e.split
        ok = True
        for v in e.vectors:
            left = [root * x for x in v[:m1]] + [M.ring.zero] * (len(v) - m1)
            right = [M.ring.zero] * m1 + [root * x for x in v[m1:]]
            if not (is_member(left, e) and is_member(right, e)):
                ok = False
                break
        record("beta_times_projection", ok)
    return report


# -- serialisation ------------------------------------------------------------


def object_to_json(M: KObject) -> dict:
    datum = M.ring.datum
    return {
        "type": datum.type_label,
        "field": M.ring.characteristic,
        "provenance": _prov_to_json(M.provenance),
        "components": [
            {"alcove": alcove_to_json(a), "degrees": list(m.degrees)}
            for a, m in sorted(M.components.items(), key=lambda t: (t[0].length, t[0].point))
        ],
        "edges": [
            {"alcove": alcove_to_json(a), "beta": list(datum.positive_roots[beta]),
             "basis": basis_to_json(e)}
            for (a, beta), e in sorted(M.edges.items(), key=lambda t: (t[0][1], t[0][0].length, t[0][0].point))
        ],
    }


def _prov_to_json(prov) -> list:
    return [list(p) if isinstance(p, tuple) else p for p in prov]


def object_from_json(ring: RootRing, data: dict) -> KObject:
    datum = ring.datum
    if data.get("type") != datum.type_label:
        raise ValueError("root system type mismatch")
    comps = {}
    for item in data["components"]:
        a = alcove_from_json(datum, item["alcove"])
        comps[a] = GradedFreeModule(tuple(int(d) for d in item["degrees"]))
    edges = {}
    for item in data["edges"]:
        a = alcove_from_json(datum, item["alcove"])
        beta = datum.index(tuple(item["beta"]))
        basis = basis_from_json(ring, item["basis"])
        if basis.beta != beta:
            raise ValueError("edge root does not match its basis")
        left, right = comps.get(a, EMPTY), comps.get(up(beta, a), EMPTY)
        if basis.ambient.degrees != left.degrees + right.degrees or basis.split != left.rank:
            raise ValueError("edge ambient does not match the components")
        edges[(a, beta)] = basis
    prov = tuple(tuple(p) if isinstance(p, list) else p for p in data.get("provenance", ()))
    return KObject(ring, comps, edges, prov)


def morphism_to_json(f: KMorphism) -> dict:
    return {
        "maps": [
            {"alcove": alcove_to_json(a), "matrix": [[format_fraction(x) for x in row] for row in mat]}
            for a, mat in sorted(f.maps.items(), key=lambda t: (t[0].length, t[0].point))
        ]
    }
