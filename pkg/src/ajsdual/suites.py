"""Named verification suites shared by the command line and the test suite.

Each suite returns a ``SuiteResult`` with per-clause counts, the first few
failing instances and the elapsed time.  Nothing here is randomized except
the basis-change clause of the density suite, which is seeded.
"""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass, field
from typing import Callable, Iterator, Optional, Sequence

from .ajscat import (
    KObject,
    KMorphism,
    bott_samelson,
    inverse_morphism,
    is_isomorphism,
    is_morphism,
    links,
    objects_equal,
    q0_indecomposable_check,
    q_zero,
    shift,
    structure_report,
    translate,
)
from .alcove import verify_alcove_lemmas
from .dualtilt import (
    anti_box_alcoves,
    bs_selfdual_witness,
    check_kipptrans,
    q0_selfdual_witness,
    q0_summand_split,
    selfdual_anti_check,
    tau_sigma,
)
from .fracring import RootRing, get_ring
from .lattice import check_density, direct_sum, equal_submodules, intersect_block, make_basis
from .rootsys import RootDatum, build_root_datum

SUITES = ("alcove-lemmas", "density", "verma", "dualtrans", "kipptrans", "q0dual",
          "q0summand", "mainthm", "selfdualanti", "controls")

DEFAULT_WINDOW = {"A1": 8, "A2": 5, "B2": 4, "G2": 3}
DEFAULT_MAX_WORD = {"A1": 5, "A2": 3, "B2": 2, "G2": 1}


@dataclass
class Config:
    root_type: str = "A2"
    characteristic: int = 0
    window: Optional[int] = None
    max_word: Optional[int] = None
    bases: tuple[str, ...] = ("P0", "Q0")
    shifts: tuple[int, ...] = (-2, 0, 2)
    seed: int = 0
    tilt_by: Optional[tuple[int, ...]] = None
    experimental: bool = False

    def datum(self) -> RootDatum:
        return build_root_datum(self.root_type, self.experimental)

    def ring(self) -> RootRing:
        return get_ring(self.datum(), self.characteristic)

    def window_length(self) -> int:
        return self.window if self.window is not None else DEFAULT_WINDOW[self.root_type]

    def word_length(self) -> int:
        return self.max_word if self.max_word is not None else DEFAULT_MAX_WORD[self.root_type]


@dataclass
class SuiteResult:
    name: str
    clauses: dict[str, dict[str, int]] = field(default_factory=dict)
    failures: list[str] = field(default_factory=list)
    seconds: float = 0.0
    notes: dict = field(default_factory=dict)

    def record(self, clause: str, ok: bool, where: str = "") -> None:
        entry = self.clauses.setdefault(clause, {"checked": 0, "failed": 0})
        entry["checked"] += 1
        if not ok:
            entry["failed"] += 1
            if len(self.failures) < 20:
                self.failures.append(f"{clause}: {where}" if where else clause)

    def merge(self, counts: dict[str, dict[str, int]], where: str = "") -> None:
        for clause, entry in counts.items():
            mine = self.clauses.setdefault(clause, {"checked": 0, "failed": 0})
            mine["checked"] += entry["checked"]
            mine["failed"] += entry["failed"]
            if entry["failed"] and len(self.failures) < 20:
                self.failures.append(f"{clause}: {where}")

    @property
    def checked(self) -> int:
        return sum(e["checked"] for e in self.clauses.values())

    @property
    def failed(self) -> int:
        return sum(e["failed"] for e in self.clauses.values())

    @property
    def ok(self) -> bool:
        return self.failed == 0 and self.checked > 0

    def to_json(self) -> dict:
        return {"suite": self.name, "ok": self.ok, "checked": self.checked, "failed": self.failed,
                "clauses": self.clauses, "failures": self.failures,
                "seconds": round(self.seconds, 3), "notes": self.notes}


def words(rank: int, max_length: int) -> Iterator[tuple[int, ...]]:
    """Every word over the simple affine reflections, shortest first."""
    for n in range(max_length + 1):
        yield from itertools.product(range(rank + 1), repeat=n)


def word_text(word: Sequence[int], rank: int) -> str:
    return " ".join("sA" if s == rank else f"s{s}" for s in word) or "()"


def _objects(cfg: Config, ring: RootRing, bases: Sequence[str]) -> Iterator[tuple[str, tuple, KObject]]:
    for base in bases:
        for word in words(ring.datum.rank, cfg.word_length()):
            yield base, word, bott_samelson(ring, word, base)


def _timed(name: str, body: Callable[[SuiteResult], None]) -> SuiteResult:
    result = SuiteResult(name)
    start = time.perf_counter()
    body(result)
    result.seconds = time.perf_counter() - start
    return result


# -- suites -------------------------------------------------------------------


def alcove_lemmas(cfg: Config) -> SuiteResult:
    def body(res: SuiteResult) -> None:
        res.notes["window"] = cfg.window_length()
        res.merge(verify_alcove_lemmas(cfg.datum(), cfg.window_length()))
    return _timed("alcove-lemmas", body)


def _random_basis_change(basis, rng: random.Random):
    """Add a random integer multiple of one basis vector to another."""
    if basis.rank < 2:
        c = rng.choice([-3, -2, -1, 1, 2, 3])
        vectors = [tuple(basis.ring.constant(c) * x for x in basis.vectors[0])]
        return make_basis(basis.ring, basis.ambient, basis.beta, vectors, basis.degrees, basis.split)
    i, j = rng.sample(range(basis.rank), 2)
    vectors = list(basis.vectors)
    degrees = basis.degrees
    if degrees[i] != degrees[j]:
        vectors[i], vectors[j] = vectors[j], vectors[i]
        degrees = list(degrees)
        degrees[i], degrees[j] = degrees[j], degrees[i]
    else:
        c = basis.ring.constant(rng.choice([-3, -2, -1, 1, 2, 3]))
        vectors[i] = tuple(x + c * y for x, y in zip(vectors[i], vectors[j]))
    return make_basis(basis.ring, basis.ambient, basis.beta, vectors, tuple(degrees), basis.split)


def density(cfg: Config) -> SuiteResult:
    ring = cfg.ring()
    rng = random.Random(cfg.seed)

    def body(res: SuiteResult) -> None:
        res.notes["seed"] = cfg.seed
        for base, word, M in _objects(cfg, ring, cfg.bases):
            where = f"{base} {word_text(word, ring.datum.rank)}"
            for (a, beta), e in M.edges.items():
                res.record("density", check_density(e), f"{where} {a} beta={beta}")
                changed = _random_basis_change(e, rng)
                res.record("basis_change_invariance",
                           equal_submodules(e, changed) and check_density(changed), where)
            for s in range(ring.datum.rank + 1):
                dual_translated = translate(s, M, dual=True)
                res.record("density_dual_translation",
                           all(check_density(e) for e in dual_translated.edges.values()), f"{where} s={s}")
    return _timed("density", body)


def verma(cfg: Config) -> SuiteResult:
    ring = cfg.ring()

    def body(res: SuiteResult) -> None:
        for base, word, M in _objects(cfg, ring, cfg.bases):
            report = structure_report(M, up_equality=(base == "Q0"))
            report.pop("density", None)
            res.merge(report, f"{base} {word_text(word, ring.datum.rank)}")
    return _timed("verma", body)


def dualtrans(cfg: Config) -> SuiteResult:
    ring = cfg.ring()

    def body(res: SuiteResult) -> None:
        for base, word, M in _objects(cfg, ring, cfg.bases):
            for s in range(ring.datum.rank + 1):
                witness = tau_sigma(s, M)
                where = f"{base} {word_text(word, ring.datum.rank)} s={s}"
                for clause, ok in witness.checks.items():
                    res.record(clause, ok, where)
                res.record("shift_minus_two", witness.shift_amount == -2, where)
    return _timed("dualtrans", body)


def kipptrans(cfg: Config) -> SuiteResult:
    ring = cfg.ring()
    datum = ring.datum
    w = datum.weyl_element_from_word(cfg.tilt_by) if cfg.tilt_by is not None else datum.longest_element()

    def body(res: SuiteResult) -> None:
        res.notes["tilt_by"] = list(w.word)
        for base, word, M in _objects(cfg, ring, cfg.bases):
            for s in range(datum.rank + 1):
                report = check_kipptrans(s, M, w)
                where = f"{base} {word_text(word, datum.rank)} s={s}"
                if report.failing_edges and len(res.failures) < 20:
                    where += f" first failing edge {report.failing_edges[0]}"
                res.record("componentwise_equal", report.equal, where)
    return _timed("kipptrans", body)


def q0dual(cfg: Config) -> SuiteResult:
    ring = cfg.ring()
    datum = ring.datum

    def body(res: SuiteResult) -> None:
        if datum.rank == 1:
            res.record("q0_is_translated_unit",
                       objects_equal(q_zero(ring), bott_samelson(ring, (0,), "P0")))
        res.record("q0_indecomposable", q0_indecomposable_check(ring))
        witness = q0_selfdual_witness(ring)
        for clause, ok in witness.checks.items():
            res.record(clause, ok)
        expected = -2 * datum.longest_element().length
        res.notes["shift"] = witness.shift_amount
        res.record("shift_is_minus_two_l_w0", witness.shift_amount == expected,
                   f"got {witness.shift_amount}, expected {expected}")
    return _timed("q0dual", body)


def q0summand(cfg: Config) -> SuiteResult:
    ring = cfg.ring()
    datum = ring.datum

    def body(res: SuiteResult) -> None:
        identities = {}
        for word in datum.reduced_words(datum.longest_element()):
            report = q0_summand_split(ring, word)
            for clause, ok in report.checks.items():
                res.record(clause, ok, f"word {word_text(word, datum.rank)}")
            identities[word_text(word, datum.rank)] = report.is_identity
        res.notes["composite_is_identity"] = identities
    return _timed("q0summand", body)


def mainthm(cfg: Config) -> SuiteResult:
    ring = cfg.ring()
    datum = ring.datum
    lw0 = datum.longest_element().length

    def body(res: SuiteResult) -> None:
        res.notes["shifts"] = list(cfg.shifts)
        for word in words(datum.rank, cfg.word_length()):
            for n in cfg.shifts:
                witness = bs_selfdual_witness(ring, word, "Q0", n)
                where = f"{word_text(word, datum.rank)} n={n}"
                for clause, ok in witness.checks.items():
                    res.record(clause, ok, where)
                expected = -2 * len(word) - 2 * lw0 - 2 * n
                res.record("shift_formula", witness.shift_amount == expected,
                           f"{where} got {witness.shift_amount}, expected {expected}")
    return _timed("mainthm", body)


def selfdualanti(cfg: Config) -> SuiteResult:
    ring = cfg.ring()
    datum = ring.datum

    def body(res: SuiteResult) -> None:
        checked = []
        for alcove in anti_box_alcoves(datum, cfg.window_length()):
            report = selfdual_anti_check(ring, alcove)
            where = f"word {word_text(report.word, datum.rank)}"
            for clause, ok in report.clauses.items():
                res.record(clause, ok, where)
            checked.append({"word": word_text(report.word, datum.rank), "length": alcove.length,
                            "shift": report.shift_amount})
        res.notes["alcoves"] = checked
    return _timed("selfdualanti", body)


def controls(cfg: Config) -> SuiteResult:
    """Negative controls: each check here must reject the object it is given."""
    ring = cfg.ring()

    def body(res: SuiteResult) -> None:
        Q = q_zero(ring)
        shifted = shift(Q, -2)
        for beta in range(ring.nroots):
            root = ring.root(beta)
            times = KMorphism(Q, shifted, {a: [[root]] for a in Q.components})
            res.record("multiplication_is_morphism", is_morphism(times), f"beta={beta}")
            res.record("multiplication_not_isomorphism", not is_isomorphism(times), f"beta={beta}")
            inverse = inverse_morphism(times)
            res.record("division_fails_is_morphism", inverse is not None and not is_morphism(inverse),
                       f"beta={beta}")
        module_edges = [(a, beta) for (a, beta), e in Q.edges.items() if all(e.block_sizes())]
        for a, beta in module_edges:
            e = Q.edge(a, beta)
            split = direct_sum(intersect_block(e, 1), intersect_block(e, 2))
            res.record("butterfly_not_split", not equal_submodules(e, split), f"{a} beta={beta}")
            res.record("butterfly_links", links(Q, a, beta), f"{a} beta={beta}")
    return _timed("controls", body)


RUNNERS: dict[str, Callable[[Config], SuiteResult]] = {
    "alcove-lemmas": alcove_lemmas,
    "density": density,
    "verma": verma,
    "dualtrans": dualtrans,
    "kipptrans": kipptrans,
    "q0dual": q0dual,
    "q0summand": q0summand,
    "mainthm": mainthm,
    "selfdualanti": selfdualanti,
    "controls": controls,
}


def run_suite(name: str, cfg: Config) -> list[SuiteResult]:
    if name == "all":
        return [RUNNERS[n](cfg) for n in SUITES]
    if name not in RUNNERS:
        raise ValueError(f"unknown suite {name!r}")
    return [RUNNERS[name](cfg)]
