"""Root data of rank at most two and the finite Weyl group.

Roots are integer vectors in the basis of simple roots.  Covectors (points of
the dual space, coroots, coweights) are stored by their pairings with the
simple roots, so ``<beta, v>`` is a plain dot product.

Conventions for the non simply-laced types: in B2 and G2 the first simple
root is the long one.

>>> rd = build_root_datum("A2")
>>> rd.positive_roots
((1, 0), (0, 1), (1, 1))
>>> rd.longest_element().length
3
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional

Vector = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]

SUPPORTED_TYPES = ("A1", "A2", "B2")
EXPERIMENTAL_TYPES = ("G2",)

# Symmetric bilinear forms on the simple roots (first root long in B2, G2).
_FORMS: dict[str, Matrix] = {
    "A1": ((2,),),
    "A2": ((2, -1), (-1, 2)),
    "B2": ((2, -1), (-1, 1)),
    "G2": ((6, -3), (-3, 2)),
}


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    n, m = len(a), len(b[0])
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(len(b))) for j in range(m))
        for i in range(n)
    )


def mat_vec(a: Matrix, v: Vector) -> Vector:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def dot(u: Iterable, v: Iterable):
    return sum(x * y for x, y in zip(u, v))


@dataclass(frozen=True)
class WeylElt:
    """Element of the finite Weyl group.

    ``matrix`` acts on root coordinates; ``covector_matrix`` acts on the
    pairing coordinates of covectors so that pairings are preserved.
    Equality only looks at ``matrix``.
    """

    word: tuple[int, ...]
    matrix: Matrix
    covector_matrix: Matrix = field(compare=False, repr=False)
    datum: "RootDatum" = field(compare=False, repr=False)

    def __mul__(self, other: "WeylElt") -> "WeylElt":
        return self.datum.weyl_element(mat_mul(self.matrix, other.matrix))

    def inverse(self) -> "WeylElt":
        return self.datum.weyl_element_from_word(tuple(reversed(self.word)))

    @property
    def length(self) -> int:
        return len(self.word)

    def __call__(self, root: Vector) -> Vector:
        return mat_vec(self.matrix, root)

    def act_covector(self, p):
        return tuple(dot(row, p) for row in self.covector_matrix)

    def is_identity(self) -> bool:
        return not self.word


class RootDatum:
    """Reduced irreducible root system with its finite Weyl group.

    Instances are cached per type label, so identity comparison is fine.
    """

    def __init__(self, type_label: str):
        form = _FORMS[type_label]
        self.type_label = type_label
        self.rank = len(form)
        self.form = form
        r = self.rank
        self.simple_roots: tuple[Vector, ...] = tuple(
            tuple(int(i == j) for j in range(r)) for i in range(r)
        )
        # cartan[j][i] = <alpha_j, alpha_i^vee>
        self.cartan: Matrix = tuple(
            tuple(2 * form[j][i] // form[i][i] for i in range(r)) for j in range(r)
        )
        self._reflection_matrices = tuple(self._simple_root_matrix(i) for i in range(r))
        self._covector_reflections = tuple(self._simple_covector_matrix(i) for i in range(r))
        roots = self._root_closure()
        pos = [v for v in roots if all(x >= 0 for x in v)]
        pos.sort(key=lambda v: (sum(v), tuple(-x for x in v)))
        self.positive_roots: tuple[Vector, ...] = tuple(pos)
        self.root_index: dict[Vector, int] = {v: i for i, v in enumerate(pos)}
        self.coroots: tuple[Vector, ...] = tuple(self.coroot(v) for v in pos)
        self.highest_root: Vector = max(pos, key=sum)
        self.coxeter_number = sum(self.highest_root) + 1
        self.coweight_lattice: tuple[tuple[Fraction, ...], ...] = tuple(
            tuple(Fraction(int(i == j)) for j in range(r)) for i in range(r)
        )
        self.simple_indices = tuple(self.root_index[a] for a in self.simple_roots)
        self._build_group()

    def __repr__(self) -> str:
        return f"RootDatum({self.type_label})"

    def __reduce__(self):
        return (_rebuild, (self.type_label,))

    # -- roots and pairings ------------------------------------------------

    def bilinear(self, u: Vector, v: Vector) -> int:
        return sum(u[i] * self.form[i][j] * v[j] for i in range(self.rank) for j in range(self.rank))

    def coroot(self, root: Vector) -> Vector:
        """Pairing coordinates of the coroot of ``root``."""
        norm = self.bilinear(root, root)
        out = []
        for i in range(self.rank):
            num = 2 * self.bilinear(self.simple_roots[i], root)
            if num % norm:
                raise ValueError(f"{root} is not a root")
            out.append(num // norm)
        return tuple(out)

    def pairing(self, root: Vector, covector) -> object:
        return dot(root, covector)

    def is_root(self, v: Vector) -> bool:
        v = tuple(v)
        return v in self.root_index or tuple(-x for x in v) in self.root_index

    def positive_part(self, v: Vector) -> tuple[Vector, int]:
        """Return ``(v+, sign)`` with ``v = sign * v+`` and ``v+`` positive."""
        v = tuple(v)
        if v in self.root_index:
            return v, 1
        neg = tuple(-x for x in v)
        if neg in self.root_index:
            return neg, -1
        raise ValueError(f"{v} is not a root")

    def root(self, key) -> Vector:
        """Accept a positive-root index or a coordinate tuple."""
        if isinstance(key, int):
            return self.positive_roots[key]
        key = tuple(key)
        if key not in self.root_index:
            raise ValueError(f"{key} is not a positive root")
        return key

    def index(self, key) -> int:
        if isinstance(key, int):
            if not 0 <= key < len(self.positive_roots):
                raise ValueError(f"no positive root with index {key}")
            return key
        key = tuple(key)
        if key not in self.root_index:
            raise ValueError(f"{key} is not a positive root")
        return self.root_index[key]

    def _simple_root_matrix(self, i: int) -> Matrix:
        r = self.rank
        return tuple(
            tuple(int(k == j) - int(k == i) * self.cartan[j][i] for j in range(r))
            for k in range(r)
        )

    def _simple_covector_matrix(self, i: int) -> Matrix:
        r = self.rank
        c = self.coroot(self.simple_roots[i])
        return tuple(tuple(int(j == k) - c[j] * int(k == i) for k in range(r)) for j in range(r))

    def _root_closure(self) -> set[Vector]:
        seen = set(self.simple_roots)
        todo = list(self.simple_roots)
        while todo:
            v = todo.pop()
            for m in self._reflection_matrices:
                u = mat_vec(m, v)
                if u not in seen:
                    seen.add(u)
                    todo.append(u)
        return seen

    # -- Weyl group --------------------------------------------------------

    def _build_group(self) -> None:
        r = self.rank
        ident = identity_matrix(r)
        self._elements: dict[Matrix, WeylElt] = {}
        self._by_covector: dict[Matrix, WeylElt] = {}
        frontier = [((), ident, ident)]
        while frontier:
            nxt = []
            for word, mat, cov in frontier:
                if mat in self._elements:
                    continue
                elt = WeylElt(word, mat, cov, self)
                self._elements[mat] = elt
                self._by_covector[cov] = elt
                for i in range(r):
                    nxt.append((word + (i,), mat_mul(mat, self._reflection_matrices[i]),
                                mat_mul(cov, self._covector_reflections[i])))
            frontier = nxt
        self.weyl_group: tuple[WeylElt, ...] = tuple(
            sorted(self._elements.values(), key=lambda w: (w.length, w.word))
        )

    def weyl_element(self, matrix: Matrix) -> WeylElt:
        return self._elements[matrix]

    def weyl_element_from_covector(self, matrix: Matrix) -> WeylElt:
        return self._by_covector[matrix]

    def weyl_element_from_word(self, word: Iterable[int]) -> WeylElt:
        mat = identity_matrix(self.rank)
        for i in word:
            if not 0 <= i < self.rank:
                raise ValueError(f"no simple reflection with index {i}")
            mat = mat_mul(mat, self._reflection_matrices[i])
        return self._elements[mat]

    def identity(self) -> WeylElt:
        return self._elements[identity_matrix(self.rank)]

    def simple_reflection(self, i: int) -> WeylElt:
        return self._elements[self._reflection_matrices[i]]

    def reflection(self, root: Vector) -> WeylElt:
        """The reflection s_root, for any root."""
        c = self.coroot(tuple(root))
        r = self.rank
        mat = tuple(
            tuple(int(k == j) - c[j] * root[k] for j in range(r)) for k in range(r)
        )
        return self._elements[mat]

    def longest_element(self) -> WeylElt:
        return self.weyl_group[-1]

    def inversions(self, w: WeylElt) -> int:
        return sum(1 for b in self.positive_roots if not all(x >= 0 for x in w(b)))

    def reduced_words(self, w: WeylElt) -> list[tuple[int, ...]]:
        """All reduced words of ``w``, in lexicographic order."""
        if w.is_identity():
            return [()]
        out = []
        for i in range(self.rank):
            v = w * self.simple_reflection(i)
            if v.length < w.length:
                out.extend(word + (i,) for word in self.reduced_words(v))
        return sorted(out)

    def is_reduced_word(self, word: Iterable[int]) -> bool:
        word = tuple(word)
        return self.weyl_element_from_word(word).length == len(word)

    def to_json(self) -> dict:
        return {
            "type": self.type_label,
            "rank": self.rank,
            "simple_roots": [list(v) for v in self.simple_roots],
            "positive_roots": [list(v) for v in self.positive_roots],
            "coroots": [list(v) for v in self.coroots],
            "highest_root": list(self.highest_root),
            "cartan": [list(row) for row in self.cartan],
            "coxeter_number": self.coxeter_number,
        }


@lru_cache(maxsize=None)
def _build(type_label: str) -> RootDatum:
    return RootDatum(type_label)


def _rebuild(type_label: str) -> RootDatum:
    return _build(type_label)


def build_root_datum(type_label: str, experimental: bool = False) -> RootDatum:
    """Root datum for ``type_label``; G2 needs ``experimental=True``."""
    if type_label in SUPPORTED_TYPES or (experimental and type_label in EXPERIMENTAL_TYPES):
        return _build(type_label)
    if type_label in EXPERIMENTAL_TYPES:
        raise ValueError(f"type {type_label} is experimental; pass experimental=True")
    raise ValueError(f"unsupported root system type {type_label!r}")


def weyl_act(w: WeylElt, root: Vector) -> Vector:
    """w(root) for a root of either sign."""
    root = tuple(root)
    if not w.datum.is_root(root):
        raise ValueError(f"{root} is not a root")
    return w(root)


def w_plus(w: WeylElt, root: Vector) -> Vector:
    """The positive one of +-w(root)."""
    root = tuple(root)
    if root not in w.datum.root_index:
        raise ValueError(f"{root} is not a positive root")
    return w.datum.positive_part(w(root))[0]


def longest_element(datum: RootDatum) -> WeylElt:
    return datum.longest_element()


def length(w: WeylElt) -> int:
    return w.length


def is_positive(root: Vector) -> bool:
    return all(x >= 0 for x in root)


def reflection_word(datum: RootDatum, root: Vector) -> Optional[tuple[int, ...]]:
    return datum.reflection(root).word
