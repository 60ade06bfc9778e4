"""Based graded free modules and S^beta-submodules of them.

A submodule is stored by an explicit basis of column vectors in the
coordinates of its ambient free module.  Everything is decided by linear
algebra over the fraction field plus valuations at the root ``beta``: after
inverting every other root, only the prime (beta) matters, and there the
local ring is a discrete valuation ring.  Membership of a vector is
therefore "all coefficients have nonnegative beta-valuation"; for bases and
vectors with root-monomial denominators this is literally membership in
S^beta.

Matrices are lists of rows; a basis matrix has the basis vectors as columns.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple, Optional, Sequence

from .fracring import Element, RationalFunction, RootFraction, RootRing, format_fraction

Vec = list  # list of ring elements
Mat = list  # list of rows


@dataclass(frozen=True)
class GradedFreeModule:
    """Free module with a distinguished homogeneous basis."""

    degrees: tuple[int, ...]
    tag: Optional[int] = None

    @property
    def rank(self) -> int:
        return len(self.degrees)

    def shift(self, amount: int) -> "GradedFreeModule":
        return GradedFreeModule(tuple(d + amount for d in self.degrees), self.tag)

    def dual(self) -> "GradedFreeModule":
        return GradedFreeModule(tuple(-d for d in self.degrees), self.tag)

    def __add__(self, other: "GradedFreeModule") -> "GradedFreeModule":
        return GradedFreeModule(self.degrees + other.degrees, self.tag if self.tag == other.tag else None)


# -- elementwise helpers -------------------------------------------------


def _is_integral(x: Element, beta: int) -> bool:
    """x == 0 or v_beta(x) >= 0."""
    if isinstance(x, RootFraction):
        c = x._coeff
        if c is not None and c is not False:
            return x._exps[beta] >= 0
        return x._num.is_zero() or x._den[beta] == 0
    return x.is_zero() or x.beta_valuation(beta) >= 0


def _is_local_unit(x: Element, beta: int) -> bool:
    """v_beta(x) == 0."""
    if isinstance(x, RootFraction):
        c = x._coeff
        if c is not None and c is not False:
            return x._exps[beta] == 0
        if x._num.is_zero() or x._den[beta]:
            return False
        return not divmod(x._num, x.ring.root_polys[beta])[1].is_zero()
    return not x.is_zero() and x.beta_valuation(beta) == 0


def _valuation(x: Element, beta: int) -> int:
    return x.beta_valuation(beta)


def _simplify(x: Element) -> Element:
    if isinstance(x, RationalFunction):
        return x.simplify()
    return x


def _inverse(x: Element) -> Element:
    if isinstance(x, RootFraction) and not x.is_unit():
        return RationalFunction.from_element(x).inverse()
    return x.inverse()


def _pivot_rank(x: Element) -> int:
    """Preference order for pivots: factored units first."""
    if isinstance(x, RootFraction):
        return 0 if x.is_unit() else 1
    return 2


def mat_vec(mat: Mat, vec: Vec, zero: Element) -> Vec:
    support = [(k, b) for k, b in enumerate(vec) if not b.is_zero()]
    out = []
    for row in mat:
        acc = zero
        for k, b in support:
            a = row[k]
            if not a.is_zero():
                acc = acc + a * b
        out.append(acc)
    return out


def mat_mul(a: Mat, b: Mat, zero: Element) -> Mat:
    if not a:
        return []
    cols = len(b[0]) if b else 0
    out = [[zero] * cols for _ in a]
    for i, row in enumerate(a):
        target = out[i]
        for k, x in enumerate(row):
            if x.is_zero():
                continue
            for j, y in enumerate(b[k]):
                if not y.is_zero():
                    target[j] = target[j] + x * y
    return out


def transpose(mat: Mat, ncols: int = 0) -> Mat:
    if not mat:
        return [[] for _ in range(ncols)]
    return [list(col) for col in zip(*mat)]


def identity(ring: RootRing, n: int) -> Mat:
    return [[ring.one if i == j else ring.zero for j in range(n)] for i in range(n)]


def invert(mat: Mat, ring: RootRing) -> tuple[Mat, Element]:
    """Inverse and determinant over the fraction field (Gauss-Jordan).

    Raises ZeroDivisionError for singular input.
    """
    n = len(mat)
    a = [list(row) for row in mat]
    inv = identity(ring, n)
    det: Element = ring.one
    for col in range(n):
        best, best_key = None, None
        for r in range(col, n):
            x = a[r][col]
            if x.is_zero():
                continue
            key = (_pivot_rank(x), sum(1 for y in a[r] if not y.is_zero()))
            if best_key is None or key < best_key:
                best, best_key = r, key
                if key[0] == 0 and key[1] == 1:
                    break
        if best is None:
            raise ZeroDivisionError("singular matrix")
        if best != col:
            a[col], a[best] = a[best], a[col]
            inv[col], inv[best] = inv[best], inv[col]
            det = -det
        pivot = a[col][col]
        det = det * pivot
        pinv = _inverse(pivot)
        if not (pivot == ring.one):
            a[col] = [x * pinv if not x.is_zero() else x for x in a[col]]
            inv[col] = [x * pinv if not x.is_zero() else x for x in inv[col]]
        prow, pinvrow = a[col], inv[col]
        for r in range(n):
            if r == col:
                continue
            factor = a[r][col]
            if factor.is_zero():
                continue
            row, irow = a[r], inv[r]
            for j in range(col, n):
                y = prow[j]
                if not y.is_zero():
                    row[j] = row[j] - factor * y
            for j in range(n):
                y = pinvrow[j]
                if not y.is_zero():
                    irow[j] = irow[j] - factor * y
    inv = [[_simplify(x) for x in row] for row in inv]
    return inv, _simplify(det)


def determinant(mat: Mat, ring: RootRing) -> Element:
    n = len(mat)
    if n == 0:
        return ring.one
    a = [list(row) for row in mat]
    det: Element = ring.one
    for col in range(n):
        pivot_row = None
        for r in range(col, n):
            if not a[r][col].is_zero():
                if pivot_row is None or _pivot_rank(a[r][col]) < _pivot_rank(a[pivot_row][col]):
                    pivot_row = r
        if pivot_row is None:
            return ring.zero
        if pivot_row != col:
            a[col], a[pivot_row] = a[pivot_row], a[col]
            det = -det
        pivot = a[col][col]
        det = det * pivot
        for r in range(col + 1, n):
            if a[r][col].is_zero():
                continue
            q = a[r][col] / pivot
            a[r] = [x - q * y if not y.is_zero() else x for x, y in zip(a[r], a[col])]
    return _simplify(det)


# -- submodule bases -------------------------------------------------------


@dataclass(eq=False)
class SubmoduleBasis:
    """S^beta-submodule of ``ambient`` spanned by ``vectors`` (columns).

    ``split`` records the size of the first block when the ambient is a
    direct sum of two based modules (the usual M(A) + M(beta-up A)).
    """

    ring: RootRing
    ambient: GradedFreeModule
    beta: int
    vectors: tuple[tuple[Element, ...], ...]
    degrees: tuple[int, ...]
    split: Optional[int] = None
    _inverse: Optional[Mat] = field(default=None, repr=False)
    _det: Optional[Element] = field(default=None, repr=False)
    _sparse: Optional[list] = field(default=None, repr=False)

    def __post_init__(self):
        if len(self.vectors) != len(self.degrees):
            raise ValueError("one degree per basis vector required")
        for v in self.vectors:
            if len(v) != self.ambient.rank:
                raise ValueError("basis vector length does not match the ambient rank")

    @property
    def rank(self) -> int:
        return len(self.vectors)

    def matrix(self) -> Mat:
        """Basis matrix, vectors as columns."""
        n = self.ambient.rank
        return [[v[i] for v in self.vectors] for i in range(n)]

    def is_square(self) -> bool:
        return self.rank == self.ambient.rank

    def inverse(self) -> Mat:
        if self._inverse is None:
            if not self.is_square():
                raise ValueError("basis is not square")
            self._inverse, self._det = invert(self.matrix(), self.ring)
        return self._inverse

    def sparse_inverse(self) -> list[list[tuple[int, Element]]]:
        """Rows of the inverse as (column, entry) pairs with nonzero entries."""
        if self._sparse is None:
            self._sparse = [[(k, x) for k, x in enumerate(row) if not x.is_zero()]
                            for row in self.inverse()]
        return self._sparse

    def determinant(self) -> Element:
        if self._det is None:
            if not self.is_square():
                raise ValueError("basis is not square")
            if self.rank == 0:
                self._det = self.ring.one
            else:
                self._det = determinant(self.matrix(), self.ring)
        return self._det

    def block_sizes(self) -> tuple[int, int]:
        if self.split is None:
            raise ValueError("ambient is not split into two blocks")
        return self.split, self.ambient.rank - self.split


def make_basis(ring: RootRing, ambient: GradedFreeModule, beta: int, vectors, degrees,
               split: Optional[int] = None) -> SubmoduleBasis:
    return SubmoduleBasis(ring, ambient, beta, tuple(tuple(v) for v in vectors), tuple(degrees), split)


class Solution(NamedTuple):
    coefficients: list
    member: bool


def solve_in_basis(vec: Sequence[Element], basis: SubmoduleBasis) -> Solution:
    """Coordinates of ``vec`` in ``basis`` and the membership verdict."""
    if len(vec) != basis.ambient.rank:
        raise ValueError("dimension mismatch")
    if basis.rank == 0:
        if any(not x.is_zero() for x in vec):
            if basis.ambient.rank:
                return Solution([], False)
        return Solution([], True)
    if basis.is_square():
        zero = basis.ring.zero
        coeffs = []
        for row in basis.sparse_inverse():
            acc = zero
            for k, a in row:
                b = vec[k]
                if not b.is_zero():
                    acc = acc + a * b
            coeffs.append(_simplify(acc))
        return Solution(coeffs, all(_is_integral(c, basis.beta) for c in coeffs))
    return _solve_rectangular(list(vec), basis)


def _solve_rectangular(vec: Vec, basis: SubmoduleBasis) -> Solution:
    """Least-effort solve for a non-square (injective) basis matrix."""
    ring = basis.ring
    rows = [list(r) + [x] for r, x in zip(basis.matrix(), vec)]
    k = basis.rank
    pivots = []
    r0 = 0
    for col in range(k + 1):
        pr = next((r for r in range(r0, len(rows)) if not rows[r][col].is_zero()), None)
        if pr is None:
            continue
        rows[r0], rows[pr] = rows[pr], rows[r0]
        p = rows[r0][col]
        for r in range(len(rows)):
            if r != r0 and not rows[r][col].is_zero():
                q = rows[r][col] / p
                rows[r] = [x - q * y for x, y in zip(rows[r], rows[r0])]
        pivots.append((r0, col))
        r0 += 1
    if any(col == k for _, col in pivots):
        return Solution([], False)
    coeffs = [ring.zero] * k
    for r, col in pivots:
        coeffs[col] = _simplify(rows[r][k] / rows[r][col])
    return Solution(coeffs, all(_is_integral(c, basis.beta) for c in coeffs))


def is_member(vec: Sequence[Element], basis: SubmoduleBasis) -> bool:
    return solve_in_basis(vec, basis).member


def equal_submodules(first: SubmoduleBasis, second: SubmoduleBasis) -> bool:
    if first.ambient.rank != second.ambient.rank or first.beta != second.beta:
        raise ValueError("ambient or root mismatch")
    return all(is_member(v, second) for v in first.vectors) and \
        all(is_member(v, first) for v in second.vectors)


def check_density(basis: SubmoduleBasis) -> bool:
    """Square basis with a determinant that is a unit of S^empty."""
    if not basis.is_square():
        return False
    det = basis.determinant()
    return not det.is_zero() and det.is_unit()


def dual_submodule(basis: SubmoduleBasis) -> SubmoduleBasis:
    """Dual basis: the rows of the inverse basis matrix, degrees negated."""
    if not check_density(basis):
        raise ValueError("density fails; no dual by this route")
    inv = basis.inverse()
    # the dual basis matrix is the transposed inverse, so its inverse is the transpose
    return SubmoduleBasis(basis.ring, basis.ambient.dual(), basis.beta,
                          tuple(tuple(row) for row in inv), tuple(-d for d in basis.degrees),
                          basis.split, [list(v) for v in basis.vectors], basis.determinant().inverse())


def scale(basis: SubmoduleBasis, power: int = 1) -> SubmoduleBasis:
    """Multiply every basis vector by beta^power."""
    factor = basis.ring.root(basis.beta, power)
    return SubmoduleBasis(basis.ring, basis.ambient, basis.beta,
                          tuple(tuple(factor * x if not x.is_zero() else x for x in v) for v in basis.vectors),
                          tuple(d + 2 * power for d in basis.degrees), basis.split)


def direct_sum(first: SubmoduleBasis, second: SubmoduleBasis) -> SubmoduleBasis:
    """Block-diagonal sum inside the sum of the two ambients."""
    if first.beta != second.beta:
        raise ValueError("root mismatch")
    zero = first.ring.zero
    n1, n2 = first.ambient.rank, second.ambient.rank
    vectors = [tuple(v) + (zero,) * n2 for v in first.vectors]
    vectors += [(zero,) * n1 + tuple(v) for v in second.vectors]
    return SubmoduleBasis(first.ring, first.ambient + second.ambient, first.beta,
                          tuple(vectors), first.degrees + second.degrees, n1)


def shift_degrees(basis: SubmoduleBasis, amount: int) -> SubmoduleBasis:
    return SubmoduleBasis(basis.ring, basis.ambient.shift(amount), basis.beta, basis.vectors,
                          tuple(d + amount for d in basis.degrees), basis.split,
                          basis._inverse, basis._det)


# -- Smith form at the prime beta -------------------------------------------


class SmithForm(NamedTuple):
    exponents: list
    left: Mat
    right: Mat


def snf_beta(basis: SubmoduleBasis) -> SmithForm:
    """Exponents a_i with U * B * V = diag(beta^a_i), U and V invertible locally."""
    mat = basis.matrix()
    if not basis.is_square():
        raise ValueError("basis is not square")
    return smith_at_root(mat, basis.ring, basis.beta)


def smith_at_root(mat: Mat, ring: RootRing, beta: int) -> SmithForm:
    n = len(mat)
    a = [list(row) for row in mat]
    left = identity(ring, n)
    right = identity(ring, n)
    exps = []
    for k in range(n):
        best = None
        for i in range(k, n):
            for j in range(k, n):
                x = a[i][j]
                if x.is_zero():
                    continue
                v = _valuation(x, beta)
                if best is None or v < best[0]:
                    best = (v, i, j)
        if best is None:
            raise ValueError("matrix is singular")
        v, i, j = best
        a[k], a[i] = a[i], a[k]
        left[k], left[i] = left[i], left[k]
        for row in a:
            row[k], row[j] = row[j], row[k]
        for row in right:
            row[k], row[j] = row[j], row[k]
        pivot = a[k][k]
        for i in range(k + 1, n):
            if a[i][k].is_zero():
                continue
            q = a[i][k] / pivot
            a[i] = [_simplify(x - q * y) for x, y in zip(a[i], a[k])]
            left[i] = [_simplify(x - q * y) for x, y in zip(left[i], left[k])]
        for j in range(k + 1, n):
            if a[k][j].is_zero():
                continue
            q = a[k][j] / pivot
            for row in a:
                row[j] = _simplify(row[j] - q * row[k])
            for row in right:
                row[j] = _simplify(row[j] - q * row[k])
        unit = _simplify(ring.root(beta, v) / pivot)
        left[k] = [_simplify(unit * x) for x in left[k]]
        a[k] = [_simplify(unit * x) for x in a[k]]
        exps.append(v)
    return SmithForm(exps, left, right)


def local_pivot_valuations(mat: Mat, beta: int) -> list[int]:
    """Elementary divisor exponents at beta of any (rectangular) matrix."""
    a = [list(row) for row in mat]
    out = []
    rows = list(range(len(a)))
    cols = list(range(len(a[0]) if a else 0))
    while rows and cols:
        best = None
        for i in rows:
            for j in cols:
                x = a[i][j]
                if not x.is_zero():
                    v = _valuation(x, beta)
                    if best is None or v < best[0]:
                        best = (v, i, j)
        if best is None:
            break
        v, pi, pj = best
        pivot = a[pi][pj]
        rows.remove(pi)
        cols.remove(pj)
        for i in rows:
            if a[i][pj].is_zero():
                continue
            q = a[i][pj] / pivot
            for j in cols:
                if not a[pi][j].is_zero():
                    a[i][j] = a[i][j] - q * a[pi][j]
        out.append(v)
    return out


def locally_surjective(mat: Mat, beta: int) -> bool:
    """Do the columns (entries integral at beta) span the full local lattice?

    Equivalent to full row rank of the reduction modulo beta.
    """
    a = [list(row) for row in mat]
    rows = list(range(len(a)))
    cols = list(range(len(a[0]) if a else 0))
    while rows:
        found = None
        for i in rows:
            for j in cols:
                if _is_local_unit(a[i][j], beta):
                    found = (i, j)
                    break
            if found:
                break
        if found is None:
            return False
        pi, pj = found
        pivot = a[pi][pj]
        rows.remove(pi)
        cols.remove(pj)
        for i in rows:
            if a[i][pj].is_zero():
                continue
            q = a[i][pj] / pivot
            for j in cols:
                if not a[pi][j].is_zero():
                    a[i][j] = _simplify(a[i][j] - q * a[pi][j])
    return True


# -- generator lists, projections, intersections ---------------------------


@dataclass(frozen=True)
class Generators:
    """A list of vectors read as generators of an S^beta-span."""

    ring: RootRing
    ambient: GradedFreeModule
    beta: int
    vectors: tuple[tuple[Element, ...], ...]
    degrees: tuple[int, ...]


def _block_range(basis: SubmoduleBasis, block: int) -> range:
    m1, m2 = basis.block_sizes()
    if block == 1:
        return range(0, m1)
    if block == 2:
        return range(m1, m1 + m2)
    raise ValueError("block must be 1 or 2")


def _block_module(basis: SubmoduleBasis, block: int) -> GradedFreeModule:
    idx = _block_range(basis, block)
    return GradedFreeModule(tuple(basis.ambient.degrees[i] for i in idx), basis.ambient.tag)


def project_block(basis: SubmoduleBasis, block: int) -> Generators:
    idx = _block_range(basis, block)
    return Generators(basis.ring, _block_module(basis, block), basis.beta,
                      tuple(tuple(v[i] for i in idx) for v in basis.vectors), basis.degrees)


def scale_generators(gens: Generators, power: int = 1) -> Generators:
    factor = gens.ring.root(gens.beta, power)
    return Generators(gens.ring, gens.ambient, gens.beta,
                      tuple(tuple(factor * x if not x.is_zero() else x for x in v) for v in gens.vectors),
                      tuple(d + 2 * power for d in gens.degrees))


def intersect_block(basis: SubmoduleBasis, block: int) -> SubmoduleBasis:
    """Basis of the vectors of the span whose other-block coordinates vanish.

    The result is given in the coordinates of the block itself.
    """
    keep = _block_range(basis, block)
    other = _block_range(basis, 3 - block)
    ring, beta = basis.ring, basis.beta
    n = basis.rank
    mat = basis.matrix()
    work = [list(mat[i]) for i in other]
    trans = identity(ring, n)
    free = list(range(n))
    for row in work:
        candidates = [j for j in free if not row[j].is_zero()]
        if not candidates:
            continue
        p = min(candidates, key=lambda j: (_valuation(row[j], beta), _pivot_rank(row[j])))
        free.remove(p)
        pivot = row[p]
        for j in free:
            if row[j].is_zero():
                continue
            q = row[j] / pivot
            for r in work:
                if not r[p].is_zero():
                    r[j] = _simplify(r[j] - q * r[p])
            for r in trans:
                if not r[p].is_zero():
                    r[j] = _simplify(r[j] - q * r[p])
    kernel = [[trans[i][j] for i in range(n)] for j in free]
    vectors, degrees = [], []
    for j, col in zip(free, kernel):
        full = mat_vec(mat, col, ring.zero)
        if any(not full[i].is_zero() for i in other):
            raise ArithmeticError("kernel vector leaks into the other block")
        vectors.append(tuple(_simplify(full[i]) for i in keep))
        degrees.append(basis.degrees[j])
    result = SubmoduleBasis(ring, _block_module(basis, block), beta, tuple(vectors), tuple(degrees))
    _verify_intersection(basis, block, result)
    return result


def _embed(basis: SubmoduleBasis, block: int, vec) -> list:
    m1, m2 = basis.block_sizes()
    zero = basis.ring.zero
    if block == 1:
        return list(vec) + [zero] * m2
    return [zero] * m1 + list(vec)


def _verify_intersection(basis: SubmoduleBasis, block: int, result: SubmoduleBasis) -> None:
    """Double inclusion: result lies in the span, and is saturated in it."""
    coords = []
    for v in result.vectors:
        sol = solve_in_basis(_embed(basis, block, v), basis)
        if not sol.member:
            raise ArithmeticError("intersection vector outside the submodule")
        coords.append(sol.coefficients)
    if coords and not locally_surjective(coords, basis.beta):
        raise ArithmeticError("intersection basis is not saturated")


def generators_in_span(gens: Generators, basis: SubmoduleBasis) -> bool:
    return all(is_member(v, basis) for v in gens.vectors)


def span_equals(gens: Generators, basis: SubmoduleBasis) -> bool:
    """S^beta-span of ``gens`` equals the submodule of ``basis`` (locally at beta)."""
    if gens.ambient.rank != basis.ambient.rank:
        raise ValueError("ambient mismatch")
    coeffs = []
    for v in gens.vectors:
        sol = solve_in_basis(v, basis)
        if not sol.member:
            return False
        coeffs.append(sol.coefficients)
    if basis.rank == 0:
        return True
    if not coeffs:
        return False
    return locally_surjective(transpose(coeffs), basis.beta)


def basis_to_json(basis: SubmoduleBasis) -> dict:
    return {
        "ambient_degrees": list(basis.ambient.degrees),
        "beta": basis.beta,
        "split": basis.split,
        "matrix": [[format_fraction(x) for x in row] for row in basis.matrix()],
        "degrees": list(basis.degrees),
    }


def basis_from_json(ring: RootRing, data: dict) -> SubmoduleBasis:
    ambient = GradedFreeModule(tuple(int(d) for d in data["ambient_degrees"]))
    rows = [[ring.parse(str(x)) for x in row] for row in data["matrix"]]
    if len(rows) != ambient.rank:
        raise ValueError("matrix height does not match the ambient rank")
    degrees = tuple(int(d) for d in data["degrees"])
    width = len(degrees)
    if any(len(r) != width for r in rows):
        raise ValueError("matrix width does not match the number of degrees")
    vectors = [tuple(rows[i][j] for i in range(ambient.rank)) for j in range(width)]
    split = data.get("split")
    return make_basis(ring, ambient, int(data["beta"]), vectors, degrees,
                      None if split is None else int(split))
