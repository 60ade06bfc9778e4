"""Acceptance criteria, run at full scale with exact arithmetic.

Every criterion prints one PASS/FAIL line.  Run on its own with

    pytest tests/test_acceptance.py -v
    python tests/test_acceptance.py
"""
import pytest

from ajsdual.ajscat import bott_samelson, objects_equal, q0_indecomposable_check, q_zero
from ajsdual.dualtilt import check_kipptrans
from ajsdual.fracring import get_ring
from ajsdual.rootsys import build_root_datum
from ajsdual.suites import (
    Config,
    alcove_lemmas,
    controls,
    density,
    dualtrans,
    kipptrans,
    mainthm,
    q0dual,
    q0summand,
    selfdualanti,
    verma,
)

WORD_BOUND = {"A1": 6, "A2": 4}


def report(number: int, title: str, ok: bool, detail: str, capsys=None) -> None:
    line = f"criterion {number} [{'PASS' if ok else 'FAIL'}] {title}: {detail}"
    if capsys is None:
        print(line)
    else:
        with capsys.disabled():
            print("\n" + line)


def criterion_1():
    results = [alcove_lemmas(Config("A1", window=8)), alcove_lemmas(Config("A2", window=5))]
    clauses = set().union(*(r.clauses for r in results))
    expected = {"wallcomb_a", "wallcomb_b", "wallcomb_c", "wallcomb_d", "updown_equivalence",
                "updown_plus_side", "kipp_wb_positive", "kipp_wb_negative",
                "kipp_arithmetik_a", "kipp_arithmetik_b"}
    seconds = sum(r.seconds for r in results)
    ok = all(r.ok for r in results) and expected <= clauses and seconds <= 60
    return ok, f"{sum(r.checked for r in results)} instances, " \
               f"{sum(r.failed for r in results)} failed, {seconds:.1f}s"


def criterion_2():
    results = []
    for t, bound in WORD_BOUND.items():
        cfg = Config(t, max_word=bound)
        results += [density(cfg), verma(cfg)]
    seconds = sum(r.seconds for r in results)
    clauses = set().union(*(r.clauses for r in results))
    expected = {"density", "image_down", "image_up_inclusion", "image_up_equality", "beta_times_projection"}
    ok = all(r.ok for r in results) and expected <= clauses and seconds <= 300
    return ok, f"{sum(r.checked for r in results)} checks, {sum(r.failed for r in results)} failed, " \
               f"{seconds:.0f}s; failures {[f for r in results for f in r.failures][:3]}"


def criterion_3():
    results = []
    for t, bound in WORD_BOUND.items():
        cfg = Config(t, max_word=bound)
        results += [dualtrans(cfg), kipptrans(cfg)]
    ring = get_ring(build_root_datum("A2"))
    identity = ring.datum.identity()
    guard = [check_kipptrans(s, q_zero(ring), identity) for s in range(3)]
    guard_edges = [e for g in guard for e in g.failing_edges]
    ok = all(r.ok for r in results) and not all(g.equal for g in guard) and bool(guard_edges)
    return ok, f"{sum(r.checked for r in results)} checks, {sum(r.failed for r in results)} failed, " \
               f"{sum(r.seconds for r in results):.0f}s; w = e guard fails at {guard_edges[0] if guard_edges else None}"


def criterion_4():
    a1 = get_ring(build_root_datum("A1"))
    equal = objects_equal(q_zero(a1), bott_samelson(a1, (0,), "P0"))
    indec = {t: q0_indecomposable_check(get_ring(build_root_datum(t))) for t in ("A1", "A2", "B2")}
    shifts = {}
    witnesses_ok = True
    for t in ("A1", "A2"):
        r = q0dual(Config(t))
        witnesses_ok &= r.ok
        shifts[t] = r.notes["shift"]
    ok = equal and all(indec.values()) and witnesses_ok and shifts == {"A1": -2, "A2": -6}
    return ok, f"Q0 = T_s P0 in A1: {equal}; indecomposable {indec}; witness shifts {shifts}"


def criterion_5():
    results = [q0summand(Config(t)) for t in ("A1", "A2")]
    words = {t: r.notes["composite_is_identity"] for t, r in zip(("A1", "A2"), results)}
    ok = all(r.ok for r in results) and len(words["A2"]) == 2 and len(words["A1"]) == 1
    return ok, f"reduced words and composite-is-identity {words}; " \
               f"{sum(r.failed for r in results)} failed clauses"


def criterion_6():
    results = [mainthm(Config(t, max_word=bound, shifts=(-2, 0, 2))) for t, bound in WORD_BOUND.items()]
    ok = all(r.ok for r in results)
    return ok, f"{sum(r.checked for r in results)} checks, {sum(r.failed for r in results)} failed, " \
               f"{sum(r.seconds for r in results):.0f}s; failures {[f for r in results for f in r.failures][:3]}"


def criterion_7():
    r = selfdualanti(Config("A2", window=5))
    ok = r.ok and len(r.notes["alcoves"]) >= 2 and r.seconds <= 600
    return ok, f"alcoves {r.notes['alcoves']}; {r.checked} clause checks, {r.failed} failed, {r.seconds:.1f}s"


def criterion_8():
    results = [controls(Config(t)) for t in ("A1", "A2")]
    ok = all(r.ok for r in results)
    return ok, f"{sum(r.checked for r in results)} controls rejected as predicted, " \
               f"{sum(r.failed for r in results)} not"


CRITERIA = [
    (1, "alcove lemmas, A1 window 8 and A2 window 5", criterion_1),
    (2, "density, image identities, beta times projection", criterion_2),
    (3, "duality vs translation, tilting vs translation", criterion_3),
    (4, "Q0 facts and its self-duality witness", criterion_4),
    (5, "Q0 is a summand for every reduced word of w0", criterion_5),
    (6, "self-duality of translated Q0 with z = -2r - 2l(w0) - 2n", criterion_6),
    (7, "anti-fundamental box ingredients, l(w) <= 5 in A2", criterion_7),
    (8, "negative controls", criterion_8),
]


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check, capsys):
    ok, detail = check()
    report(number, title, ok, detail, capsys)
    assert ok, detail


if __name__ == "__main__":
    for number, title, check in CRITERIA:
        ok, detail = check()
        report(number, title, ok, detail)
