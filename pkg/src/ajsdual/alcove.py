"""Affine Weyl group, alcoves and walls.

Every alcove is pinned by one generic point: the image of the base point
p_e = rho^vee / h of the fundamental alcove.  Points are kept multiplied by the
Coxeter number h, so all side-of-hyperplane tests are integer comparisons.

Simple affine reflections are labelled ``0 .. r-1`` (finite simple
reflections) and ``r`` (the affine reflection s_{theta,1}).
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Iterable, Optional, Union

from .rootsys import (
    Matrix,
    RootDatum,
    Vector,
    WeylElt,
    dot,
    identity_matrix,
    mat_mul,
    mat_vec,
)


@dataclass(frozen=True)
class AffineElt:
    """Affine map v -> finite_part(v) + translation on pairing coordinates."""

    finite_part: WeylElt
    translation: Vector

    def __mul__(self, other: "AffineElt") -> "AffineElt":
        lin = self.finite_part.covector_matrix
        shifted = mat_vec(lin, other.translation)
        return AffineElt(
            self.finite_part * other.finite_part,
            tuple(a + b for a, b in zip(shifted, self.translation)),
        )

    def __call__(self, point):
        return tuple(
            x + t for x, t in zip(self.finite_part.act_covector(point), self.translation)
        )

    def inverse(self) -> "AffineElt":
        inv = self.finite_part.inverse()
        moved = inv.act_covector(self.translation)
        return AffineElt(inv, tuple(-x for x in moved))

    @property
    def datum(self) -> RootDatum:
        return self.finite_part.datum


def affine_reflection(datum: RootDatum, root, level: int) -> AffineElt:
    """s_{root,level}: v -> v - (<root, v> - level) root^vee."""
    root = datum.positive_roots[root] if isinstance(root, int) else tuple(root)
    coroot = datum.coroot(root)
    return AffineElt(datum.reflection(root), tuple(level * c for c in coroot))


def simple_affine_reflection(datum: RootDatum, s: int) -> AffineElt:
    if s < datum.rank:
        return affine_reflection(datum, datum.simple_roots[s], 0)
    if s == datum.rank:
        return affine_reflection(datum, datum.highest_root, 1)
    raise ValueError(f"no simple affine reflection with label {s}")


def weyl_as_affine(w: WeylElt) -> AffineElt:
    return AffineElt(w, (0,) * w.datum.rank)


class Alcove:
    """The alcove A_x = x.A_e, identified by its scaled base point."""

    __slots__ = ("datum", "point", "linear", "translation", "_hash")

    def __init__(self, datum: RootDatum, point: Vector, linear: Matrix, translation: Vector):
        self.datum = datum
        self.point = point
        self.linear = linear
        self.translation = translation
        self._hash = hash(point)

    def __eq__(self, other) -> bool:
        return isinstance(other, Alcove) and self.point == other.point and self.datum is other.datum

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Alcove({self.finite_word()}, t={self.translation})"

    def __reduce__(self):
        return (_alcove_from_point, (self.datum, self.point, self.linear, self.translation))

    @property
    def elt(self) -> AffineElt:
        return AffineElt(self.datum.weyl_element_from_covector(self.linear), self.translation)

    @property
    def representative_point(self) -> tuple[Fraction, ...]:
        h = self.datum.coxeter_number
        return tuple(Fraction(x, h) for x in self.point)

    def finite_word(self) -> tuple[int, ...]:
        return self.datum.weyl_element_from_covector(self.linear).word

    def pairing(self, root: Vector) -> Fraction:
        return Fraction(dot(root, self.point), self.datum.coxeter_number)

    def strip(self, beta: int) -> int:
        """floor(<beta, p>) for the positive root with index ``beta``."""
        return dot(self.datum.positive_roots[beta], self.point) // self.datum.coxeter_number

    @property
    def length(self) -> int:
        h = self.datum.coxeter_number
        return sum(abs(dot(b, self.point) // h) for b in self.datum.positive_roots)

    def is_finite(self) -> bool:
        """True iff the alcove is A_w with w in the finite Weyl group."""
        return not any(self.translation)

    def vertices(self) -> list[tuple[Fraction, ...]]:
        return [self.elt(v) for v in _base_vertices(self.datum)]


def _alcove_from_point(datum, point, linear, translation) -> Alcove:
    return Alcove(datum, point, linear, translation)


def _base_vertices(datum: RootDatum) -> list[tuple[Fraction, ...]]:
    r = datum.rank
    out = [tuple(Fraction(0) for _ in range(r))]
    for i, c in enumerate(datum.highest_root):
        out.append(tuple(Fraction(int(i == j), c) for j in range(r)))
    return out


@lru_cache(maxsize=None)
def fundamental_alcove(datum: RootDatum) -> Alcove:
    r = datum.rank
    return Alcove(datum, (1,) * r, identity_matrix(r), (0,) * r)


def act(g: AffineElt, alcove: Alcove) -> Alcove:
    lin = g.finite_part.covector_matrix
    h = alcove.datum.coxeter_number
    point = tuple(x + h * t for x, t in zip(mat_vec(lin, alcove.point), g.translation))
    trans = tuple(x + t for x, t in zip(mat_vec(lin, alcove.translation), g.translation))
    return Alcove(alcove.datum, point, mat_mul(lin, alcove.linear), trans)


def alcove_of(g: AffineElt) -> Alcove:
    return act(g, fundamental_alcove(g.datum))


def _reflect(alcove: Alcove, beta: int, level: int) -> Alcove:
    datum = alcove.datum
    b = datum.positive_roots[beta]
    c = datum.coroots[beta]
    h = datum.coxeter_number
    k = dot(b, alcove.point) - h * level
    point = tuple(x - k * y for x, y in zip(alcove.point, c))
    kt = dot(b, alcove.translation) - level
    trans = tuple(x - kt * y for x, y in zip(alcove.translation, c))
    r = datum.rank
    lin = alcove.linear
    new_lin = tuple(
        tuple(lin[i][j] - c[i] * sum(b[m] * lin[m][j] for m in range(r)) for j in range(r))
        for i in range(r)
    )
    return Alcove(datum, point, new_lin, trans)


def reflect(alcove: Alcove, root, level: int) -> Alcove:
    """s_{root,level}.alcove."""
    return _reflect(alcove, alcove.datum.index(root), level)


# -- walls ---------------------------------------------------------------


@dataclass(frozen=True)
class Wall:
    """A wall of type ``beta`` (positive root index) inside H_{beta, level}."""

    beta: int
    level: int
    minus: Alcove

    @property
    def plus(self) -> Alcove:
        return _reflect(self.minus, self.beta, self.level)

    @property
    def type_root(self) -> Vector:
        return self.minus.datum.positive_roots[self.beta]

    def __repr__(self) -> str:
        return f"Wall(beta={self.type_root}, n={self.level}, minus={self.minus!r})"


def wall_between(a: Alcove, b: Alcove) -> Wall:
    """The wall shared by two adjacent alcoves."""
    datum = a.datum
    diffs = [i for i in range(len(datum.positive_roots)) if a.strip(i) != b.strip(i)]
    if len(diffs) != 1:
        raise ValueError("alcoves are not adjacent")
    beta = diffs[0]
    ka, kb = a.strip(beta), b.strip(beta)
    if abs(ka - kb) != 1:
        raise ValueError("alcoves are not adjacent")
    minus = a if ka < kb else b
    wall = Wall(beta, max(ka, kb), minus)
    if wall.plus != (b if minus is a else a):
        raise ValueError("alcoves are not adjacent")
    return wall


def wall_vertices(wall: Wall) -> list[tuple[Fraction, ...]]:
    plus = set(wall.plus.vertices())
    return [v for v in wall.minus.vertices() if v in plus]


def wall_barycenter(wall: Wall) -> tuple[Fraction, ...]:
    verts = wall_vertices(wall)
    return tuple(sum(c) / len(verts) for c in zip(*verts))


AlcoveOrWall = Union[Alcove, Wall]


@lru_cache(maxsize=None)
def _up_alcove(beta: int, alcove: Alcove) -> Alcove:
    return _reflect(alcove, beta, alcove.strip(beta) + 1)


@lru_cache(maxsize=None)
def _down_alcove(beta: int, alcove: Alcove) -> Alcove:
    return _reflect(alcove, beta, alcove.strip(beta))


def _move_wall(beta: int, wall: Wall, upward: bool) -> Wall:
    if wall.beta == beta:
        return wall
    datum = wall.minus.datum
    value = dot(datum.positive_roots[beta], wall_barycenter(wall))
    level = -((-value.numerator) // value.denominator) if upward else value.numerator // value.denominator
    return wall_between(_reflect(wall.minus, beta, level), _reflect(wall.plus, beta, level))


def up(beta, face: AlcoveOrWall) -> AlcoveOrWall:
    """beta-up of an alcove or a wall."""
    datum = face.datum if isinstance(face, Alcove) else face.minus.datum
    beta = datum.index(beta)
    if isinstance(face, Alcove):
        return _up_alcove(beta, face)
    return _move_wall(beta, face, True)


def down(beta, face: AlcoveOrWall) -> AlcoveOrWall:
    datum = face.datum if isinstance(face, Alcove) else face.minus.datum
    beta = datum.index(beta)
    if isinstance(face, Alcove):
        return _down_alcove(beta, face)
    return _move_wall(beta, face, False)


@lru_cache(maxsize=None)
def _base_neighbour(datum: RootDatum, s: int) -> tuple[Vector, Matrix, Vector]:
    refl = simple_affine_reflection(datum, s)
    a = alcove_of(refl)
    return a.point, refl.finite_part.covector_matrix, refl.translation


def neighbour(alcove: Alcove, s: int) -> Alcove:
    """A_{xs} for A = A_x: the alcove across the s-wall."""
    datum = alcove.datum
    point_s, lin_s, trans_s = _base_neighbour(datum, s)
    lin = alcove.linear
    h = datum.coxeter_number
    point = tuple(x + h * t for x, t in zip(mat_vec(lin, point_s), alcove.translation))
    trans = tuple(x + t for x, t in zip(mat_vec(lin, trans_s), alcove.translation))
    return Alcove(datum, point, mat_mul(lin, lin_s), trans)


@lru_cache(maxsize=None)
def s_wall(alcove: Alcove, s: int) -> Wall:
    """The wall A^(s) of ``alcove`` in the orbit of the fundamental s-wall."""
    if not 0 <= s <= alcove.datum.rank:
        raise ValueError(f"no simple affine reflection with label {s}")
    return wall_between(alcove, neighbour(alcove, s))


def wall_minus(alcove: Alcove, s: int) -> Alcove:
    return s_wall(alcove, s).minus


def wall_plus(alcove: Alcove, s: int) -> Alcove:
    return s_wall(alcove, s).plus


def wall_type(alcove: Alcove, s: int) -> int:
    return s_wall(alcove, s).beta


def sign(alcove: Alcove, s: int) -> int:
    return 1 if s_wall(alcove, s).minus != alcove else -1


def alpha_s(alcove: Alcove, s: int) -> tuple[int, int]:
    """``(sign, beta)`` encoding the signed root sign(A) * type(A^(s))."""
    return sign(alcove, s), wall_type(alcove, s)


def is_fixed_wall(beta: int, alcove: Alcove, s: int) -> bool:
    """Does beta-up fix the s-wall of ``alcove``?"""
    return s_wall(alcove, s).beta == beta


# -- distinguished sets --------------------------------------------------


def in_anti_fundamental_box(alcove: Alcove) -> bool:
    h = alcove.datum.coxeter_number
    return all(-h < x < 0 for x in alcove.point)


def in_A_minus_beta(alcove: Alcove, beta) -> bool:
    beta = alcove.datum.index(beta)
    return alcove.is_finite() and alcove.strip(beta) < 0


def in_A_plus_beta(alcove: Alcove, beta) -> bool:
    beta = alcove.datum.index(beta)
    return in_A_minus_beta(down(beta, alcove), beta)


def finite_alcoves(datum: RootDatum) -> list[Alcove]:
    return [act(weyl_as_affine(w), fundamental_alcove(datum)) for w in datum.weyl_group]


def weyl_act_alcove(w: WeylElt, alcove: Alcove) -> Alcove:
    return act(weyl_as_affine(w), alcove)


def alpha_string(alcove: Alcove, root, supp: Iterable[Alcove]) -> list[Alcove]:
    """Alcoves of ``supp`` of the form root-up^n(alcove), ordered by n."""
    supp = set(supp)
    if alcove not in supp:
        raise ValueError("alcove not in the given support")
    beta = alcove.datum.index(root)
    base = alcove.strip(beta)
    hits = []
    for c in supp:
        n = c.strip(beta) - base
        b = alcove
        step = up if n > 0 else down
        for _ in range(abs(n)):
            b = step(beta, b)
        if b == c:
            hits.append((n, c))
    return [c for _, c in sorted(hits, key=lambda t: t[0])]


def w0_path(alcove: Alcove, word: Iterable[int]) -> list[tuple[Alcove, Optional[int]]]:
    """The chain A_w -> s1.A_w -> ... -> w0.A_w, one root-up per step.

    Returns ``[(A_w, None), (A_1, beta_1), ...]`` with positive root indices.
    """
    datum = alcove.datum
    word = tuple(word)
    w0 = datum.longest_element()
    if any(not 0 <= s < datum.rank for s in word) or datum.weyl_element_from_word(word) != w0 \
            or len(word) != w0.length:
        raise ValueError("word is not a reduced expression of the longest element")
    if not in_anti_fundamental_box(alcove):
        raise ValueError("alcove is not in the anti-fundamental box")
    chain: list[tuple[Alcove, Optional[int]]] = [(alcove, None)]
    prefix = datum.identity()
    current = alcove
    for s in word:
        image = prefix(datum.simple_roots[s])
        if image not in datum.root_index:
            raise ValueError("non-positive root along the path")
        beta = datum.root_index[image]
        prefix = prefix * datum.simple_reflection(s)
        current = up(beta, current)
        if current != weyl_act_alcove(prefix, alcove):
            raise ValueError("path step is not a single root-up")
        chain.append((current, beta))
    return chain


def enumerate_alcoves(datum: RootDatum, max_length: int) -> list[Alcove]:
    """All alcoves of length at most ``max_length``, by breadth-first search."""
    start = fundamental_alcove(datum)
    seen = {start}
    queue = deque([start])
    while queue:
        a = queue.popleft()
        for s in range(datum.rank + 1):
            b = neighbour(a, s)
            if b not in seen and b.length <= max_length:
                seen.add(b)
                queue.append(b)
    return sorted(seen, key=lambda a: (a.length, a.point))


def alcove_to_json(alcove: Alcove) -> dict:
    return {"finite_word": list(alcove.finite_word()), "translation": list(alcove.translation)}


def alcove_from_json(datum: RootDatum, data: dict) -> Alcove:
    w = datum.weyl_element_from_word(data["finite_word"])
    trans = tuple(int(x) for x in data["translation"])
    if len(trans) != datum.rank:
        raise ValueError("translation has the wrong length")
    return alcove_of(AffineElt(w, trans))


# -- brute force checks of the alcove lemmas ------------------------------


def verify_alcove_lemmas(datum: RootDatum, window_length: int) -> dict[str, dict[str, int]]:
    """Exhaustively check the wall/up-down lemmas on a window of alcoves."""
    if window_length < 1:
        raise ValueError("window length must be positive")
    report: dict[str, dict[str, int]] = {}

    def record(clause: str, ok: bool) -> None:
        entry = report.setdefault(clause, {"checked": 0, "failed": 0})
        entry["checked"] += 1
        entry["failed"] += int(not ok)

    alcoves = enumerate_alcoves(datum, window_length)
    roots = range(len(datum.positive_roots))
    labels = range(datum.rank + 1)
    group = datum.weyl_group
    for a, beta, s in product(alcoves, roots, labels):
        wall = s_wall(a, s)
        moved = up(beta, wall)
        fixed = moved == wall
        if fixed:
            record("wallcomb_a", up(beta, wall.minus) == wall.plus)
        else:
            record("wallcomb_b", {up(beta, wall.minus), up(beta, wall.plus)} == {moved.minus, moved.plus})
        if fixed and a == wall.minus:
            upper = up(beta, a)
            record("wallcomb_c", s_wall(upper, s) == wall and upper == wall.plus)
        if not fixed:
            record("wallcomb_d", s_wall(up(beta, a), s) == moved)
        upper = up(beta, a)
        record("updown_equivalence", fixed == (up(beta, s_wall(upper, s)) == s_wall(upper, s)))
        if fixed and a == wall.plus:
            record("updown_plus_side", down(beta, a) == wall.minus and upper == s_wall(upper, s).minus)
        record("down_inverts_up", down(beta, upper) == a and down(beta, moved) == wall)
        for w in group:
            image = w(datum.positive_roots[beta])
            wa = weyl_act_alcove(w, a)
            wup = weyl_act_alcove(w, upper)
            if image in datum.root_index:
                record("kipp_wb_positive", wup == up(datum.root_index[image], wa))
            else:
                plus = datum.root_index[tuple(-x for x in image)]
                record("kipp_wb_negative", wup == down(plus, wa))
            wall_wa = s_wall(wa, s)
            record("kipp_arithmetik_a", {wall_wa.minus, wall_wa.plus}
                   == {weyl_act_alcove(w, wall.minus), weyl_act_alcove(w, wall.plus)})
            plus_index = datum.root_index[datum.positive_part(image)[0]]
            record("kipp_arithmetik_b", fixed == (up(plus_index, wall_wa) == wall_wa))
            record("wall_equivariance", _act_wall(w, wall) == wall_wa)
    return report


def _act_wall(w: WeylElt, wall: Wall) -> Wall:
    return wall_between(weyl_act_alcove(w, wall.minus), weyl_act_alcove(w, wall.plus))
