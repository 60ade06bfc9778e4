"""Graded fractions whose denominators are products of positive roots.

A :class:`RootRing` bundles a root datum with a coefficient field (the
rationals or a prime field) and a polynomial context whose variables
``a1 .. ar`` are the simple roots.  Polynomials are flint ``mpoly`` objects.

A :class:`RootFraction` is an element of the localisation S[alpha^-1 | alpha > 0].
It is stored either in factored form ``c * prod alpha^k`` (k of any sign) or
as a numerator polynomial over ``prod alpha^e`` (e >= 0) with the numerator
not divisible by any root of the denominator.  Both forms are canonical, and
the factored one is kept whenever it is known, because products of such
elements never touch polynomial arithmetic.

:class:`RationalFunction` covers the rest of the fraction field; the linear
algebra falls back to it only when a pivot is not a unit.

>>> from ajsdual.rootsys import build_root_datum
>>> ring = get_ring(build_root_datum("A2"))
>>> a1, a2, a12 = ring.roots()
>>> str(a1 * a12 / a2)
'(a1^2 + a1*a2)/((a2))'
>>> (a1 * a12 / a2).beta_valuation(2)
1
"""
from __future__ import annotations

import ast
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Optional, Union

import flint

from .rootsys import RootDatum, WeylElt

Scalar = object
Poly = object  # flint fmpq_mpoly or nmod_mpoly


class RootRing:
    """Coefficient field plus the roots of one root datum."""

    def __init__(self, datum: RootDatum, characteristic: int = 0):
        if characteristic and (characteristic == 2 or (characteristic == 3 and datum.type_label == "G2")):
            raise ValueError(f"characteristic {characteristic} not allowed for {datum.type_label}")
        if characteristic and not _is_prime(characteristic):
            raise ValueError(f"{characteristic} is not a prime")
        self.datum = datum
        self.characteristic = characteristic
        names = tuple(f"a{i + 1}" for i in range(datum.rank))
        self.names = names
        if characteristic:
            self.ctx = flint.nmod_mpoly_ctx.get(names, ordering="degrevlex", modulus=characteristic)
        else:
            self.ctx = flint.fmpq_mpoly_ctx.get(names, ordering="degrevlex")
        self.gens = self.ctx.gens()
        self.nroots = len(datum.positive_roots)
        self.root_polys = tuple(
            sum((c * g for c, g in zip(root, self.gens)), self.ctx.constant(0))
            for root in datum.positive_roots
        )
        self.zero_poly = self.ctx.constant(0)
        self.one_poly = self.ctx.constant(1)
        self.no_exps = (0,) * self.nroots
        self._powers: dict[tuple[int, int], Poly] = {}
        self.zero = _general(self, self.zero_poly, self.no_exps)
        self.zero._coeff = False
        self.one = _monomial(self, self.scalar(1), self.no_exps)

    def __repr__(self) -> str:
        field = f"F_{self.characteristic}" if self.characteristic else "Q"
        return f"RootRing({self.datum.type_label}, {field})"

    def __reduce__(self):
        return (get_ring, (self.datum, self.characteristic))

    # -- scalars ------------------------------------------------------------

    def scalar(self, value) -> Scalar:
        p = self.characteristic
        if isinstance(value, flint.fmpq):
            num, den = int(value.numer()), int(value.denom())
        elif isinstance(value, Fraction):
            num, den = value.numerator, value.denominator
        elif p and isinstance(value, flint.nmod):
            return value
        else:
            num, den = int(value), 1
        if p:
            if den % p == 0:
                raise ZeroDivisionError(f"{den} is not invertible mod {p}")
            return flint.nmod(num, p) / flint.nmod(den, p)
        return flint.fmpq(num, den)

    def root_power(self, i: int, k: int) -> Poly:
        key = (i, k)
        p = self._powers.get(key)
        if p is None:
            p = self.root_polys[i] ** k
            self._powers[key] = p
        return p

    def exps_poly(self, exps: Iterable[int]) -> Poly:
        out = self.one_poly
        for i, k in enumerate(exps):
            if k:
                out = out * self.root_power(i, k)
        return out

    # -- constructors -----------------------------------------------------

    def constant(self, value) -> "RootFraction":
        c = self.scalar(value)
        if c == 0:
            return self.zero
        return _monomial(self, c, self.no_exps)

    def root(self, beta: int, power: int = 1) -> "RootFraction":
        exps = [0] * self.nroots
        exps[beta] = power
        return _monomial(self, self.scalar(1), tuple(exps))

    def roots(self) -> list["RootFraction"]:
        return [self.root(i) for i in range(self.nroots)]

    def monomial(self, coeff, exps: Iterable[int]) -> "RootFraction":
        c = self.scalar(coeff)
        if c == 0:
            return self.zero
        return _monomial(self, c, tuple(exps))

    def signed_root(self, sign: int, beta: int) -> "RootFraction":
        return self.monomial(sign, tuple(int(i == beta) for i in range(self.nroots)))

    def fraction(self, numerator: Poly, den_exps: Optional[Iterable[int]] = None) -> "RootFraction":
        den = tuple(den_exps) if den_exps is not None else self.no_exps
        return _normalized(self, numerator, den)

    def from_poly(self, numerator: Poly) -> "RootFraction":
        return _normalized(self, numerator, self.no_exps)

    def variable(self, i: int) -> "RootFraction":
        return self.from_poly(self.gens[i])

    def coerce(self, value) -> "Element":
        if isinstance(value, (RootFraction, RationalFunction)):
            return value
        return self.constant(value)

    # -- text format --------------------------------------------------------

    def parse(self, text: str) -> "Element":
        """Parse the text format ``(<poly>)/(<root product>)`` or any
        arithmetic expression in ``a1 .. ar``, integers, ``+ - * / ^``."""
        try:
            tree = ast.parse(text.replace("^", "**"), mode="eval")
        except SyntaxError as exc:
            raise ValueError(f"cannot parse {text!r}") from exc
        return self._eval(tree.body, text)

    def _eval(self, node, text):
        if isinstance(node, ast.BinOp):
            left = self._eval(node.left, text)
            if isinstance(node.op, ast.Pow):
                if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                    raise ValueError(f"non-integer exponent in {text!r}")
                return left ** node.right.value
            right = self._eval(node.right, text)
            if isinstance(node.op, ast.Add):
                return left + right
            if isinstance(node.op, ast.Sub):
                return left - right
            if isinstance(node.op, ast.Mult):
                return left * right
            if isinstance(node.op, ast.Div):
                if right.is_zero():
                    raise ValueError(f"division by zero in {text!r}")
                return left / right
        elif isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
            val = self._eval(node.operand, text)
            return -val if isinstance(node.op, ast.USub) else val
        elif isinstance(node, ast.Constant) and isinstance(node.value, int):
            return self.constant(node.value)
        elif isinstance(node, ast.Name) and node.id in self.names:
            return self.variable(self.names.index(node.id))
        raise ValueError(f"unsupported syntax in {text!r}")

    def root_text(self, i: int) -> str:
        return str(self.root_polys[i]).replace(" ", "")

    # -- twisting -----------------------------------------------------------

    @lru_cache(maxsize=None)
    def twist_data(self, w: WeylElt) -> tuple[tuple[Poly, ...], tuple[int, ...], tuple[int, ...]]:
        """Substitution images of the variables and root permutation for w^-1."""
        inv = w.inverse()
        images = []
        for i in range(self.datum.rank):
            image = inv(self.datum.simple_roots[i])
            images.append(sum((c * g for c, g in zip(image, self.gens)), self.ctx.constant(0)))
        perm, signs = [], []
        for root in self.datum.positive_roots:
            plus, sgn = self.datum.positive_part(inv(root))
            perm.append(self.datum.root_index[plus])
            signs.append(sgn)
        return tuple(images), tuple(perm), tuple(signs)


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(n ** 0.5) + 1))


@lru_cache(maxsize=None)
def get_ring(datum: RootDatum, characteristic: int = 0) -> RootRing:
    return RootRing(datum, characteristic)


# ---------------------------------------------------------------------------


def _monomial(ring: RootRing, coeff, exps: tuple) -> "RootFraction":
    f = RootFraction.__new__(RootFraction)
    f.ring = ring
    f._coeff = coeff
    f._exps = exps
    f._num = None
    f._den = None
    f.tag = None
    return f


def _general(ring: RootRing, num, den: tuple) -> "RootFraction":
    f = RootFraction.__new__(RootFraction)
    f.ring = ring
    f._coeff = None
    f._exps = None
    f._num = num
    f._den = den
    f.tag = None
    return f


def _normalized(ring: RootRing, num, den: tuple) -> "RootFraction":
    if num.is_zero():
        return ring.zero
    if any(den):
        den = list(den)
        polys = ring.root_polys
        for i, e in enumerate(den):
            while e:
                q, r = divmod(num, polys[i])
                if not r.is_zero():
                    break
                num = q
                e -= 1
            den[i] = e
        den = tuple(den)
    return _general(ring, num, den)


class RootFraction:
    """Element of S[alpha^-1 | alpha in R+], graded with deg(root) = 2."""

    __slots__ = ("ring", "_coeff", "_exps", "_num", "_den", "tag")

    def __init__(self, ring: RootRing, numerator, den_exps: Optional[Iterable[int]] = None, tag=None):
        g = ring.fraction(numerator, den_exps)
        self.ring = ring
        self._coeff, self._exps, self._num, self._den = g._coeff, g._exps, g._num, g._den
        self.tag = None
        if tag is not None:
            self.tag = self._checked_tag(tag)

    # -- representations ------------------------------------------------

    def _materialize(self) -> None:
        ring = self.ring
        num = ring.ctx.constant(self._coeff)
        den = []
        for i, k in enumerate(self._exps):
            if k > 0:
                num = num * ring.root_power(i, k)
                den.append(0)
            else:
                den.append(-k)
        self._num = num
        self._den = tuple(den)

    @property
    def numerator(self) -> Poly:
        if self._num is None:
            self._materialize()
        return self._num

    @property
    def denominator_exponents(self) -> tuple[int, ...]:
        if self._num is None:
            self._materialize()
        return self._den

    def factored(self) -> Optional[tuple[Scalar, tuple[int, ...]]]:
        """``(c, k)`` with self = c * prod root^k, or None if not of that shape."""
        if self._coeff is None:
            self._factor()
        if self._coeff is False:
            return None
        return self._coeff, self._exps

    def _factor(self) -> None:
        num = self._num
        if num.is_zero():
            self._coeff = False
            return
        ring = self.ring
        exps = [-e for e in self._den]
        deg = num.total_degree()
        for i, poly in enumerate(ring.root_polys):
            if not deg:
                break
            if self._den[i]:
                continue
            while deg:
                q, r = divmod(num, poly)
                if not r.is_zero():
                    break
                num = q
                exps[i] += 1
                deg -= 1
        if deg:
            self._coeff = False
        else:
            self._coeff = num.leading_coefficient()
            self._exps = tuple(exps)

    # -- predicates -------------------------------------------------------

    def is_zero(self) -> bool:
        if self._coeff is not None and self._coeff is not False:
            return False
        return self._num.is_zero()

    def is_unit(self, tag: Optional[int] = None) -> bool:
        fac = self.factored()
        if fac is None:
            return False
        return tag is None or fac[1][tag] == 0

    def is_in_ring(self, tag: Optional[int] = None) -> bool:
        """Membership in S^tag (tag = a root index) or S^empty (tag None)."""
        if tag is None or self.is_zero():
            return True
        if self._coeff is not None and self._coeff is not False:
            return self._exps[tag] >= 0
        return self._den[tag] == 0

    def beta_valuation(self, beta: int) -> int:
        if self.is_zero():
            raise ValueError("valuation of zero")
        if self._coeff is not None and self._coeff is not False:
            return self._exps[beta]
        if self._den[beta]:
            return -self._den[beta]
        num = self._num
        poly = self.ring.root_polys[beta]
        v = 0
        while True:
            q, r = divmod(num, poly)
            if not r.is_zero():
                return v
            num = q
            v += 1

    @property
    def degree(self) -> Optional[int]:
        """Degree with deg(root) = 2, or None for zero / inhomogeneous."""
        if self._coeff is not None and self._coeff is not False:
            return 2 * sum(self._exps)
        if self._num.is_zero():
            return None
        degs = {sum(m) for m in self._num.monoms()}
        if len(degs) != 1:
            return None
        return 2 * degs.pop() - 2 * sum(self._den)

    def is_homogeneous(self) -> bool:
        return self.is_zero() or self.degree is not None

    def with_tag(self, tag: Optional[int]) -> "RootFraction":
        out = self._copy()
        out.tag = out._checked_tag(tag) if tag is not None else None
        return out

    def _checked_tag(self, tag: int) -> int:
        if not self.is_in_ring(tag):
            raise ValueError("element has the tag root in its denominator")
        return tag

    def _copy(self) -> "RootFraction":
        f = RootFraction.__new__(RootFraction)
        f.ring, f._coeff, f._exps, f._num, f._den, f.tag = (
            self.ring, self._coeff, self._exps, self._num, self._den, self.tag)
        return f

    # -- arithmetic -----------------------------------------------------

    def __neg__(self) -> "RootFraction":
        if self._coeff is not None and self._coeff is not False:
            out = _monomial(self.ring, -self._coeff, self._exps)
        else:
            if self._num.is_zero():
                return self
            out = _general(self.ring, -self._num, self._den)
            out._coeff = self._coeff
        out.tag = self.tag
        return out

    def __add__(self, other) -> "Element":
        if not isinstance(other, RootFraction):
            if isinstance(other, RationalFunction):
                return NotImplemented
            other = self.ring.constant(other)
        if self.is_zero():
            return other
        if other.is_zero():
            return self
        ring = self.ring
        sc, oc = self._coeff, other._coeff
        if sc is not None and sc is not False and oc is not None and oc is not False \
                and self._exps == other._exps:
            c = sc + oc
            out = ring.zero if c == 0 else _monomial(ring, c, self._exps)
        else:
            d1, d2 = self.denominator_exponents, other.denominator_exponents
            n1, n2 = self._num, other._num
            if d1 == d2:
                den = d1
                num = n1 + n2
            else:
                den = tuple(max(x, y) for x, y in zip(d1, d2))
                for i, (x, y) in enumerate(zip(d1, d2)):
                    if x < den[i]:
                        n1 = n1 * ring.root_power(i, den[i] - x)
                    if y < den[i]:
                        n2 = n2 * ring.root_power(i, den[i] - y)
                num = n1 + n2
            out = _normalized(ring, num, den)
        if self.tag is not None and self.tag == other.tag:
            out = out.with_tag(self.tag) if out.tag != self.tag else out
        return out

    __radd__ = __add__

    def __sub__(self, other) -> "Element":
        if isinstance(other, RationalFunction):
            return NotImplemented
        return self + (-self.ring.coerce(other))

    def __rsub__(self, other) -> "Element":
        return self.ring.coerce(other) + (-self)

    def __mul__(self, other) -> "Element":
        if not isinstance(other, RootFraction):
            if isinstance(other, RationalFunction):
                return NotImplemented
            other = self.ring.constant(other)
        ring = self.ring
        sc, oc = self._coeff, other._coeff
        s_mono = sc is not None and sc is not False
        o_mono = oc is not None and oc is not False
        if s_mono and o_mono:
            out = _monomial(ring, sc * oc, tuple(x + y for x, y in zip(self._exps, other._exps)))
        elif self.is_zero() or other.is_zero():
            return ring.zero
        elif s_mono or o_mono:
            mono, gen = (self, other) if s_mono else (other, self)
            out = _times_monomial(gen, mono._coeff, mono._exps)
        else:
            out = _normalized(ring, self._num * other._num,
                              tuple(x + y for x, y in zip(self._den, other._den)))
        if self.tag is not None and self.tag == other.tag:
            out.tag = self.tag
        return out

    __rmul__ = __mul__

    def inverse(self) -> "RootFraction":
        fac = self.factored()
        if fac is None:
            raise ZeroDivisionError("element is not a unit of the localised ring")
        return _monomial(self.ring, 1 / fac[0], tuple(-k for k in fac[1]))

    def __truediv__(self, other) -> "Element":
        other = self.ring.coerce(other)
        if isinstance(other, RationalFunction):
            return RationalFunction.from_element(self) / other
        if other.is_unit():
            return self * other.inverse()
        if other.is_zero():
            raise ZeroDivisionError("division by zero")
        return RationalFunction.from_element(self) / RationalFunction.from_element(other)

    def __rtruediv__(self, other) -> "Element":
        return self.ring.coerce(other) / self

    def __pow__(self, k: int) -> "Element":
        if k < 0:
            return self.inverse() ** (-k)
        out = self.ring.one
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, RationalFunction):
            return other == self
        if not isinstance(other, RootFraction):
            try:
                other = self.ring.constant(other)
            except (TypeError, ValueError):
                return NotImplemented
        sc, oc = self._coeff, other._coeff
        if sc is not None and sc is not False and oc is not None and oc is not False:
            return sc == oc and self._exps == other._exps
        return self.denominator_exponents == other.denominator_exponents and \
            self.numerator == other.numerator

    __hash__ = None

    def twist(self, w: WeylElt) -> "RootFraction":
        return twist(w, self)

    def __str__(self) -> str:
        return format_fraction(self)

    def __repr__(self) -> str:
        return f"RootFraction({format_fraction(self)})"


def _times_monomial(gen: RootFraction, coeff, exps) -> RootFraction:
    """General-form element times c * prod root^k, with direct cancellation."""
    ring = gen.ring
    num = gen._num * coeff
    den = list(gen._den)
    check = []
    for i, k in enumerate(exps):
        if k > 0:
            cancel = min(k, den[i])
            den[i] -= cancel
            if k > cancel:
                num = num * ring.root_power(i, k - cancel)
        elif k < 0:
            den[i] -= k
            check.append(i)
    if not check:
        out = _general(ring, num, tuple(den))
        return out
    return _normalized(ring, num, tuple(den))


class RationalFunction:
    """Element of the full fraction field, reduced by gcd, monic denominator."""

    __slots__ = ("ring", "num", "den")

    def __init__(self, ring: RootRing, num, den=None):
        self.ring = ring
        if den is None:
            den = ring.one_poly
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if num.is_zero():
            self.num, self.den = ring.zero_poly, ring.one_poly
            return
        g = num.gcd(den)
        if not g.is_one():
            num, den = num / g, den / g
        lc = den.leading_coefficient()
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        self.num, self.den = num, den

    @classmethod
    def from_element(cls, f: "Element") -> "RationalFunction":
        if isinstance(f, RationalFunction):
            return f
        ring = f.ring
        out = cls.__new__(cls)
        out.ring = ring
        num, den = f.numerator, ring.exps_poly(f.denominator_exponents)
        lc = den.leading_coefficient()
        if lc != 1:
            num, den = num * (1 / lc), den * (1 / lc)
        out.num, out.den = num, den
        return out

    def to_root_fraction(self) -> Optional[RootFraction]:
        """Back to a root fraction if the denominator is a product of roots."""
        den = self.den
        exps = [0] * self.ring.nroots
        for i, poly in enumerate(self.ring.root_polys):
            while den.total_degree() > 0:
                q, r = divmod(den, poly)
                if not r.is_zero():
                    break
                den = q
                exps[i] += 1
        if den.total_degree() > 0:
            return None
        return _normalized(self.ring, self.num * (1 / den.leading_coefficient()), tuple(exps))

    def simplify(self) -> "Element":
        rf = self.to_root_fraction()
        return self if rf is None else rf

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_unit(self, tag: Optional[int] = None) -> bool:
        rf = self.to_root_fraction()
        return rf is not None and rf.is_unit(tag)

    def is_in_ring(self, tag: Optional[int] = None) -> bool:
        rf = self.to_root_fraction()
        return rf is not None and rf.is_in_ring(tag)

    def beta_valuation(self, beta: int) -> int:
        if self.is_zero():
            raise ValueError("valuation of zero")
        poly = self.ring.root_polys[beta]
        total = 0
        for part, sgn in ((self.num, 1), (self.den, -1)):
            while True:
                q, r = divmod(part, poly)
                if not r.is_zero():
                    break
                part = q
                total += sgn
        return total

    @property
    def degree(self) -> Optional[int]:
        if self.is_zero():
            return None
        dn = {sum(m) for m in self.num.monoms()}
        dd = {sum(m) for m in self.den.monoms()}
        if len(dn) != 1 or len(dd) != 1:
            return None
        return 2 * (dn.pop() - dd.pop())

    def _lift(self, other) -> "RationalFunction":
        if isinstance(other, RationalFunction):
            return other
        return RationalFunction.from_element(self.ring.coerce(other))

    def __add__(self, other) -> "RationalFunction":
        o = self._lift(other)
        if self.den == o.den:
            return RationalFunction(self.ring, self.num + o.num, self.den)
        return RationalFunction(self.ring, self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        out = RationalFunction.__new__(RationalFunction)
        out.ring, out.num, out.den = self.ring, -self.num, self.den
        return out

    def __sub__(self, other) -> "RationalFunction":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "RationalFunction":
        return self._lift(other) + (-self)

    def __mul__(self, other) -> "RationalFunction":
        o = self._lift(other)
        return RationalFunction(self.ring, self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RationalFunction":
        o = self._lift(other)
        if o.is_zero():
            raise ZeroDivisionError("division by zero")
        return RationalFunction(self.ring, self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other) -> "RationalFunction":
        return self._lift(other) / self

    def inverse(self) -> "RationalFunction":
        return self.ring.one / self

    def __pow__(self, k: int) -> "RationalFunction":
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.ring, self.num ** k, self.den ** k)

    def __eq__(self, other) -> bool:
        try:
            o = self._lift(other)
        except (TypeError, ValueError):
            return NotImplemented
        return self.num == o.num and self.den == o.den

    __hash__ = None

    def twist(self, w: WeylElt) -> "RationalFunction":
        images = self.ring.twist_data(w)[0]
        return RationalFunction(self.ring, self.num.compose(*images), self.den.compose(*images))

    def __str__(self) -> str:
        rf = self.to_root_fraction()
        if rf is not None:
            return format_fraction(rf)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


Element = Union[RootFraction, RationalFunction]


# -- free functions -------------------------------------------------------


def beta_valuation(f: Element, beta: int) -> int:
    return f.beta_valuation(beta)


def is_in_ring(f: Element, tag: Optional[int] = None) -> bool:
    return f.is_in_ring(tag)


def is_unit(f: Element, tag: Optional[int] = None) -> bool:
    return f.is_unit(tag)


def twist(w: WeylElt, f: Element) -> Element:
    """Apply w^-1 to every variable; signs of moved roots go to the numerator."""
    if isinstance(f, RationalFunction):
        return f.twist(w)
    if w.is_identity() or f.is_zero():
        return f
    ring = f.ring
    images, perm, signs = ring.twist_data(w)
    fac = f._coeff if f._coeff is not False else None
    if fac is not None:
        exps = [0] * ring.nroots
        c = f._coeff
        for i, k in enumerate(f._exps):
            if k:
                exps[perm[i]] = k
                if signs[i] < 0 and k % 2:
                    c = -c
        return _monomial(ring, c, tuple(exps))
    num = f._num.compose(*images)
    den = [0] * ring.nroots
    for i, e in enumerate(f._den):
        if e:
            den[perm[i]] = e
            if signs[i] < 0 and e % 2:
                num = -num
    out = _general(ring, num, tuple(den))
    return out


def format_fraction(f: Element) -> str:
    """Text format ``(<numerator>)/(<product of roots>)``."""
    if isinstance(f, RationalFunction):
        return str(f)
    ring = f.ring
    num = f.numerator
    parts = []
    for i, e in enumerate(f.denominator_exponents):
        if e:
            parts.append(f"({ring.root_text(i)})" + (f"^{e}" if e > 1 else ""))
    return f"({num})/({'*'.join(parts) if parts else '1'})"


def parse_fraction(ring: RootRing, text: str) -> Element:
    return ring.parse(text)


def vector_twist(w: WeylElt, vec: Iterable[Element]) -> list[Element]:
    return [twist(w, x) for x in vec]
