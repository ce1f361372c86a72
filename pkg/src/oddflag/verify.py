"""One-shot verification suite backing the ``verify`` CLI command.

Each check returns pass/fail plus an explanatory detail line; a third
status, ``flagged``, reports a discrepancy between a computed ground truth
and a shipped reference table or edge list that is characterized
exactly and does not fail the suite.  Any uncharacterized difference is a
failure.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from importlib import resources

from .lattice import build_cn_lattice, classify_shape, is_distributive, is_lattice
from .moment import Degree, build_moment_graph, degree_of_root
from .neighborhoods import cross_check, degree_grid, gamma_closed_form
from .qbg import build_qbg, chern_data, moment_discrepancies, property_o_verdict
from .weyl import (
    bar_value,
    enumerate_labels,
    length,
    moment_roots,
    parse_label,
    top_label,
)
from .errors import VerificationError

__all__ = ["CheckResult", "run_suite", "suite_passed", "to_json_dict", "load_golden"]

# The single quantum edge present in the built graph at n=2 but absent
# from the reference figure: it follows from the two-component value of
# the (0,1)-neighborhood of X(2|1).
KNOWN_EXTRA_QBG_EDGE = ("2|1", "1|-2", (0, 1))


@dataclass(frozen=True)
class CheckResult:
    name: str
    n: int
    status: str  # "pass" | "fail" | "flagged"
    detail: str

    @property
    def ok(self) -> bool:
        return self.status != "fail"


def load_golden(name: str) -> dict:
    path = resources.files("oddflag") / "golden" / name
    return json.loads(path.read_text())


def _check_enumeration(n: int) -> CheckResult:
    labs = enumerate_labels(n)
    if len(labs) != 4 * n * n:
        return CheckResult(
            "enumeration", n, "fail", f"expected {4*n*n} labels, found {len(labs)}"
        )
    if n == 2:
        levels = Counter(length(w) for w in labs)
        want = {0: 1, 1: 2, 2: 3, 3: 4, 4: 3, 5: 2, 6: 1}
        if dict(levels) != want:
            return CheckResult(
                "enumeration", n, "fail", f"level distribution {dict(levels)}"
            )
    return CheckResult("enumeration", n, "pass", f"{len(labs)} labels")


def _check_moment_graph(n: int) -> CheckResult:
    sizes = Counter(degree_of_root(r).key for r in moment_roots(n))
    want = {(1, 0): 1, (0, 1): 2 * n - 1, (1, 1): 2 * n - 1, (1, 2): 1}
    if dict(sizes) != want:
        return CheckResult(
            "moment-graph", n, "fail", f"degree classes sized {dict(sizes)}"
        )
    g = build_moment_graph(n)
    if n == 2:
        gold = load_golden("moment_graph_n2.json")
        want_edges = {
            (frozenset((parse_label(e["u"], 2), parse_label(e["v"], 2))), tuple(e["deg"]))
            for e in gold["edges"]
        }
        got_edges = {(frozenset((e.u, e.v)), e.degree.key) for e in g.edges}
        if want_edges != got_edges:
            return CheckResult(
                "moment-graph",
                n,
                "fail",
                f"{len(got_edges ^ want_edges)} edges differ from the reference figure",
            )
        counts = {k.key: v for k, v in g.degree_counts().items()}
        if counts != {(1, 0): 8, (0, 1): 18, (1, 1): 18, (1, 2): 4}:
            return CheckResult("moment-graph", n, "fail", f"edge counts {counts}")
    return CheckResult("moment-graph", n, "pass", f"{len(g.edges)} edges")


def _check_neighborhoods(n: int) -> CheckResult:
    report = cross_check(n, Degree(2, 2))
    if not report.ok:
        return CheckResult("curve-neighborhoods", n, "fail", report.summary())
    if n == 2:
        gold = load_golden("neighborhoods_n2.json")
        for cell in gold["cells"]:
            w = parse_label(cell["w"], 2)
            d = Degree(*cell["d"])
            got = [str(c) for c in gamma_closed_form(w, d)]
            if got != cell["components"]:
                return CheckResult(
                    "curve-neighborhoods",
                    n,
                    "fail",
                    f"reference cell w={w}, d={d}: got {got}",
                )
    return CheckResult("curve-neighborhoods", n, "pass", report.summary())


def _check_second_component(n: int) -> CheckResult:
    """Flag the bases whose (0, d2) value exceeds the single-label sweep.

    The one-component sweep value X(a|-3) for a in {2,-2}, else X(a|-2),
    is the reference-table form of the (0, d2 >= 1) regime; the true
    value carries the extra component X(1|-2) exactly when a = 2.
    """
    two, btwo, bthree = bar_value(2), bar_value(-2), bar_value(-3)
    offending = []
    for w in enumerate_labels(n):
        sweep = (w.a, bthree if w.a in (two, btwo) else btwo)
        got = gamma_closed_form(w, Degree(0, 1)).components
        extra = [c for c in got if (c.a, c.b) != sweep]
        if w.a == two:
            if [(c.a, c.b) for c in extra] != [(bar_value(1), btwo)]:
                return CheckResult(
                    "closed-form-second-component",
                    n,
                    "fail",
                    f"base {w}: expected the extra component 1|-2, got "
                    f"{[str(c) for c in got]}",
                )
            offending.append(str(w))
        elif extra:
            return CheckResult(
                "closed-form-second-component",
                n,
                "fail",
                f"base {w}: unexpected components {[str(c) for c in got]}",
            )
    return CheckResult(
        "closed-form-second-component",
        n,
        "flagged",
        "the (0,d2>=1) neighborhood of X(2|b) carries the second component "
        f"X(1|-2), beyond the single-label reference value, for bases: "
        f"{', '.join(offending)}",
    )


def _check_lattices(n: int) -> CheckResult:
    shapes: dict[str, str] = {}
    sweep_grid = degree_grid(Degree(3, 3))
    for w in enumerate_labels(n):
        lat = build_cn_lattice(w)
        if not is_lattice(lat):
            return CheckResult("lattices", n, "fail", f"base {w}: not a lattice")
        if not is_distributive(lat):
            return CheckResult("lattices", n, "fail", f"base {w}: not distributive")
        try:
            shapes[str(w)] = classify_shape(lat)
        except VerificationError as exc:
            return CheckResult("lattices", n, "fail", str(exc))
        swept = {gamma_closed_form(w, d) for d in sweep_grid}
        if swept != set(lat.elements):
            return CheckResult(
                "lattices",
                n,
                "fail",
                f"base {w}: the representative degrees miss values of the (3,3) sweep",
            )
    if n == 2:
        gold = load_golden("lattice_shapes_n2.json")["shapes"]
        if shapes != gold:
            diff = {k: (shapes.get(k), gold.get(k)) for k in set(shapes) | set(gold)
                    if shapes.get(k) != gold.get(k)}
            return CheckResult("lattices", n, "fail", f"shape table differs: {diff}")
    tally = Counter(shapes.values())
    return CheckResult(
        "lattices", n, "pass",
        f"{len(shapes)} distributive lattices; shapes {dict(sorted(tally.items()))}",
    )


def _edge_key_set(g) -> set[tuple[str, str, tuple[int, int] | None]]:
    return {
        (str(e.u), str(e.v), e.degree.key if e.degree else None) for e in g.edges
    }


def _check_qbg(n: int, strict: bool) -> list[CheckResult]:
    results: list[CheckResult] = []
    g = build_qbg(n, strict=strict)
    name = "qbg-strict" if strict else "qbg"
    if n == 2:
        gold = load_golden("qbg_n2.json")
        want = {
            (e["u"], e["v"], tuple(e["deg"]) if "deg" in e else None)
            for e in gold["edges"]
        }
        got = _edge_key_set(g)
        extra, missing = got - want, want - got
        if strict:
            detail = (
                f"strict mode differs from the reference figure: "
                f"missing {sorted(missing)}, extra {sorted(extra)}"
            )
            results.append(CheckResult(name + "-golden", n, "fail", detail))
        elif not missing and extra == {KNOWN_EXTRA_QBG_EDGE}:
            results.append(
                CheckResult(
                    name + "-golden",
                    n,
                    "flagged",
                    "graph reproduces the reference figure plus the single edge "
                    "2|1 -> 1|-2 at degree (0,1) implied by the two-component "
                    "(0,1)-neighborhood of X(2|1)",
                )
            )
        elif not missing and not extra:
            results.append(CheckResult(name + "-golden", n, "pass", "exact match"))
        else:
            results.append(
                CheckResult(
                    name + "-golden",
                    n,
                    "fail",
                    f"uncharacterized difference: missing {sorted(missing)}, "
                    f"extra {sorted(extra)}",
                )
            )
    if strict:
        return results
    try:
        verdict = property_o_verdict(n)
    except VerificationError as exc:
        results.append(CheckResult("property-o", n, "fail", str(exc)))
        return results
    if verdict.holds and verdict.gcd == chern_data(n).fano_index == 1:
        lens = [len(c) - 1 for c in verdict.witness_cycles]
        results.append(
            CheckResult(
                "property-o", n, "pass",
                f"strongly connected, cycle gcd 1, witness cycle lengths {lens}",
            )
        )
    else:
        results.append(
            CheckResult(
                "property-o", n, "fail",
                f"strongly_connected={verdict.strongly_connected} gcd={verdict.gcd}",
            )
        )
    return results


def _check_discrepancies(n: int) -> CheckResult:
    found = moment_discrepancies(n)
    for u, v, _ in found:
        if abs(length(u) - length(v)) < 2:
            return CheckResult(
                "moment-discrepancies", n, "fail",
                f"pair {u}, {v} has length gap below 2",
            )
    if n == 2:
        gold = load_golden("discrepancies_n2.json")["pairs"]
        want = [(e["u"], e["v"], tuple(e["deg"])) for e in gold]
        got = [(str(u), str(v), d.key) for u, v, d in found]
        if got != want:
            return CheckResult(
                "moment-discrepancies", n, "fail", f"expected {want}, got {got}"
            )
    return CheckResult(
        "moment-discrepancies", n, "pass",
        f"{len(found)} quantum edges join moment-nonadjacent pairs",
    )


def _check_dimension(n: int) -> CheckResult:
    top_len = length(top_label(n))
    if top_len != 4 * n - 2:
        return CheckResult(
            "dimension-formula", n, "fail",
            f"root counting gives length {top_len} for the top cell",
        )
    return CheckResult(
        "dimension-formula", n, "flagged",
        f"top-cell length by root counting is 4n-2 = {top_len}; the closed "
        f"formula 4n-6 = {4*n-6} is off by 4 and is reported, never asserted",
    )


def run_suite(n_max: int, strict_qbg: bool = False) -> tuple[CheckResult, ...]:
    """All checks for every rank 2..n_max, in deterministic order."""
    results: list[CheckResult] = []
    for n in range(2, n_max + 1):
        results.append(_check_enumeration(n))
        results.append(_check_moment_graph(n))
        results.append(_check_neighborhoods(n))
        results.append(_check_second_component(n))
        results.append(_check_lattices(n))
        results.extend(_check_qbg(n, strict=strict_qbg))
        results.append(_check_discrepancies(n))
        results.append(_check_dimension(n))
    return tuple(results)


def suite_passed(results: tuple[CheckResult, ...]) -> bool:
    return all(r.ok for r in results)


def to_json_dict(results: tuple[CheckResult, ...]) -> dict:
    return {
        "schema": "oddflag.verify/1",
        "passed": suite_passed(results),
        "checks": [
            {"name": r.name, "n": r.n, "status": r.status, "detail": r.detail}
            for r in results
        ],
    }
