"""One-shot verification pipeline for both directions of the statement
that the oriented chromatic number of the hexagonal grid family is 6.

Lower bound: no 5-tournament admits homomorphisms from both packaged
counterexample fixtures, so no single 5-tournament can color a grid
orientation containing both; since homomorphism nonexistence from a
subgraph lifts to every supergraph orientation containing it, every large
enough hexagonal grid needs at least 6 colors.

Upper bound: the row-sweep coloring into the packaged order-6 target is
exercised exhaustively on the one-hexagon grid and on seeded random
orientations of a larger grid (the universal claim is property-tested,
not proved, by this pipeline).

Every check is recorded with verdict, inputs, statistics, and wall time;
the overall verdict is PASS exactly when all mandatory checks pass.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from . import __version__
from .digraph import enumerate_orientations, random_orientation
from .hexcolor import a6_path_table, check_property1, color_hex
from .hexgrid import (
    FIXTURE_COUNTS,
    FIXTURE_DIGESTS,
    build_hex_grid,
    fixture_digest,
    fixture_h4,
    fixture_h49,
    validate_axial_fixture,
)
from .homomorphism import (
    SearchBudgetExceeded,
    homomorphism_exists,
    validate_homomorphism,
)
from .tournaments import (
    TOURNAMENT_BITS,
    arc_codes,
    canonical_form,
    double_score_set,
    enumerate_tournaments,
    fixture_a6,
    named_tournament,
)

SCHEMA_VERSION = 1
SOLVER_BUDGET_S = 60.0

#: sampling parameters per scale: (grid m, grid n, number of seeded orientations)
SCALES = {"small": (5, 5, 200), "full": (8, 8, 1000)}

T5_CODES = [1, 2, 3, 8, 9, 11, 14, 17, 19, 20]

#: 1-based arc list of the 18-vertex fixture, pinned independently of the
#: packaged data file.
H4_EXPECTED_ARCS = (
    (1, 2), (3, 2), (4, 3), (5, 4), (5, 6), (1, 6), (6, 7), (8, 7), (8, 9),
    (10, 9), (10, 1), (2, 11), (12, 11), (12, 13), (14, 13), (14, 3),
    (4, 15), (16, 15), (16, 17), (18, 17), (18, 5),
)


@dataclass(frozen=True)
class CheckRecord:
    name: str
    mandatory: bool
    verdict: str  # PASS | FAIL | INFO
    inputs: dict
    details: dict
    elapsed_s: float

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "mandatory": self.mandatory,
            "verdict": self.verdict,
            "inputs": self.inputs,
            "details": self.details,
            "elapsed_s": round(self.elapsed_s, 4),
        }


@dataclass
class VerificationReport:
    seed: int
    scale: str
    checks: list[CheckRecord] = field(default_factory=list)

    @property
    def overall(self) -> str:
        ok = all(c.verdict == "PASS" for c in self.checks if c.mandatory)
        return "PASS" if ok else "FAIL"

    @property
    def passed(self) -> bool:
        return self.overall == "PASS"

    def to_dict(self) -> dict:
        return {
            "schema_version": SCHEMA_VERSION,
            "artifact": "orihex",
            "version": __version__,
            "seed": self.seed,
            "scale": self.scale,
            "overall": self.overall,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def _record(name, mandatory, fn, inputs) -> CheckRecord:
    start = time.perf_counter()
    verdict, details = fn()
    elapsed = time.perf_counter() - start
    return CheckRecord(name, mandatory, verdict, inputs, details, elapsed)


def _hom_fixture_task(args: tuple[str, str, float | None]) -> dict:
    """Worker: solve fixture-vs-tournament; safe to run in a subprocess."""
    fixture_name, tname, budget = args
    fixture = fixture_h4() if fixture_name == "H4" else fixture_h49()
    t = named_tournament(tname)
    start = time.perf_counter()
    try:
        result = homomorphism_exists(fixture.graph, t, time_budget_s=budget)
    except SearchBudgetExceeded:
        return {
            "fixture": fixture_name,
            "target": tname,
            "verdict": "BUDGET_EXCEEDED",
            "elapsed_s": time.perf_counter() - start,
        }
    witness_ok = None
    if result.found:
        witness_ok = validate_homomorphism(fixture.graph, t, result.witness)
    return {
        "fixture": fixture_name,
        "target": tname,
        "verdict": "FOUND" if result.found else "NONE",
        "witness": list(result.witness) if result.found else None,
        "witness_valid": witness_ok,
        "nodes_expanded": result.nodes_expanded,
        "max_depth": result.max_depth,
        "elapsed_s": time.perf_counter() - start,
    }


def _census_check():
    census = enumerate_tournaments(5)
    named_canon = {name: canonical_form(named_tournament(name)) for name in TOURNAMENT_BITS}
    census_canon = {canonical_form(t) for t in census}
    ok = (
        len(census) == 12
        and len(set(named_canon.values())) == 12
        and set(named_canon.values()) == census_canon
    )
    return "PASS" if ok else "FAIL", {
        "classes": len(census),
        "named_forms_distinct": len(set(named_canon.values())) == 12,
        "named_forms_cover_census": set(named_canon.values()) == census_canon,
    }


def _double_score_check():
    ds = {name: double_score_set(named_tournament(name)) for name in TOURNAMENT_BITS}
    multiset_distinct = len(set(ds.values())) == 12
    as_sets = {name: tuple(sorted(set(v))) for name, v in ds.items()}
    set_distinct = len(set(as_sets.values())) == 12
    return "PASS" if multiset_distinct else "FAIL", {
        "values": {name: list(v) for name, v in ds.items()},
        "pairwise_distinct_multisets": multiset_distinct,
        "pairwise_distinct_dedup_sets": set_distinct,
    }


def _t5_codes_check():
    codes = arc_codes(named_tournament("T5"))
    return "PASS" if codes == T5_CODES else "FAIL", {"codes": codes, "expected": T5_CODES}


def _a6_degree_check():
    a6 = fixture_a6()
    ok = (
        a6.order == 6
        and len(a6.arcs) == 15
        and min(a6.in_degrees) == 2
        and min(a6.out_degrees) == 2
    )
    return "PASS" if ok else "FAIL", {
        "order": a6.order,
        "arcs": len(a6.arcs),
        "min_in_degree": min(a6.in_degrees),
        "min_out_degree": min(a6.out_degrees),
    }


def _a6_path_property_check():
    with_equal = check_property1(fixture_a6(), include_equal_endpoints=True)
    without_equal = check_property1(fixture_a6(), include_equal_endpoints=False)
    return "PASS" if with_equal.holds else "FAIL", {
        "holds_including_equal_endpoints": with_equal.holds,
        "cases_including_equal_endpoints": len(with_equal.table),
        "holds_distinct_endpoints_only": without_equal.holds,
        "cases_distinct_endpoints_only": len(without_equal.table),
    }


def _fixture_check(filename: str, fixture) -> tuple[str, dict]:
    digest = fixture_digest(filename)
    digest_ok = digest == FIXTURE_DIGESTS[filename]
    n, m = FIXTURE_COUNTS[filename]
    counts_ok = fixture.graph.n_vertices == n and len(fixture.graph.arcs) == m
    lattice = validate_axial_fixture(fixture)
    details = {
        "digest": digest,
        "digest_ok": digest_ok,
        "n_vertices": fixture.graph.n_vertices,
        "n_arcs": len(fixture.graph.arcs),
        "counts_ok": counts_ok,
        "lattice_ok": lattice.ok,
        "lattice_violations": list(lattice.violations),
    }
    ok = digest_ok and counts_ok and lattice.ok
    return ("PASS" if ok else "FAIL"), details


def _h4_integrity_check():
    fixture = fixture_h4()
    verdict, details = _fixture_check("h4.digraph", fixture)
    arcs_1based = tuple((u + 1, v + 1) for (u, v) in fixture.graph.arcs)
    arcs_ok = arcs_1based == H4_EXPECTED_ARCS
    details["arc_list_ok"] = arcs_ok
    if not arcs_ok:
        verdict = "FAIL"
    return verdict, details


def _h49_integrity_check():
    return _fixture_check("h49.digraph", fixture_h49())


def _hom_record_to_check(rec: dict, expect_none: bool) -> tuple[str, dict]:
    if rec["verdict"] == "BUDGET_EXCEEDED":
        return "FAIL", rec
    ok = (rec["verdict"] == "NONE") == expect_none
    if rec["verdict"] == "FOUND" and rec.get("witness_valid") is False:
        ok = False
    return ("PASS" if ok else "FAIL"), rec


def _upper_bound_exhaustive():
    grid = build_hex_grid(1, 1)
    a6 = fixture_a6()
    table = a6_path_table()
    total = 0
    failures = 0
    for oriented in enumerate_orientations(grid.graph):
        coloring = color_hex(grid, oriented, a6, table)
        if not validate_homomorphism(oriented, a6, coloring):
            failures += 1
        total += 1
    ok = failures == 0 and total == 64
    return "PASS" if ok else "FAIL", {"orientations": total, "failures": failures}


def _upper_bound_sampled(seed: int, scale: str):
    m, n, trials = SCALES[scale]
    grid = build_hex_grid(m, n)
    a6 = fixture_a6()
    table = a6_path_table()
    rng = random.Random(seed)
    trial_seeds = [rng.getrandbits(32) for _ in range(trials)]
    failures = 0
    for s in trial_seeds:
        oriented = random_orientation(grid.graph, s)
        coloring = color_hex(grid, oriented, a6, table)
        if not validate_homomorphism(oriented, a6, coloring):
            failures += 1
    ok = failures == 0
    details = {
        "grid": f"H_{m},{n}",
        "orientations": trials,
        "failures": failures,
        "first_trial_seeds": trial_seeds[:5],
    }
    if ok:
        details["summary"] = "upper_bound: all sampled orientations 6-colorable"
    return "PASS" if ok else "FAIL", details


def verify_paper(seed: int = 0, scale: str = "small", jobs: int = 1) -> VerificationReport:
    """Run every check and assemble the report (PASS exit means both bounds
    verified at the requested scale)."""
    if scale not in SCALES:
        raise ValueError(f"scale must be one of {sorted(SCALES)}")
    report = VerificationReport(seed=seed, scale=scale)
    add = report.checks.append

    add(_record("tournament_census", True, _census_check, {"order": 5}))
    add(_record("double_score_sets", True, _double_score_check, {"tournaments": "T1..T12"}))
    add(_record("t5_arc_codes", True, _t5_codes_check, {"tournament": "T5"}))
    add(_record("a6_degrees", True, _a6_degree_check, {"tournament": "A6"}))
    add(_record("a6_path_property", True, _a6_path_property_check, {"tournament": "A6"}))

    # homomorphism nonexistence checks (the expensive block)
    tasks = [("H4", "T5", SOLVER_BUDGET_S)]
    tasks += [("H49", f"T{i}", SOLVER_BUDGET_S) for i in range(1, 13) if i != 5]
    # derived-fact reports, not gating
    info_tasks = [("H49", "T5", SOLVER_BUDGET_S)]
    info_tasks += [("H4", f"T{i}", SOLVER_BUDGET_S) for i in range(1, 13) if i != 5]

    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_hom_fixture_task, tasks + info_tasks))
    else:
        results = [_hom_fixture_task(t) for t in tasks + info_tasks]
    by_key = {(r["fixture"], r["target"]): r for r in results}

    rec = by_key[("H4", "T5")]
    verdict, details = _hom_record_to_check(rec, expect_none=True)
    add(CheckRecord("lower_bound_h4_t5", True, verdict, {"fixture": "H4", "target": "T5"},
                    details, rec["elapsed_s"]))
    for i in range(1, 13):
        if i == 5:
            continue
        rec = by_key[("H49", f"T{i}")]
        verdict, details = _hom_record_to_check(rec, expect_none=True)
        add(CheckRecord(f"lower_bound_h49_t{i}", True, verdict,
                        {"fixture": "H49", "target": f"T{i}"}, details, rec["elapsed_s"]))

    lower_ok = all(
        c.verdict == "PASS" for c in report.checks if c.name.startswith("lower_bound_")
    )
    add(CheckRecord(
        "lower_bound_combined", True, "PASS" if lower_ok else "FAIL",
        {"fixtures": ["H4", "H49"], "targets": "T1..T12"},
        {
            "summary": "lower_bound: no 5-tournament colors both H4 and H49"
            if lower_ok else "lower_bound: refuted by a homomorphism",
            "conclusion": "every 5-coloring target is excluded by one of the two "
                          "lattice-patch orientations, so hexagonal grids containing "
                          "both need at least 6 colors" if lower_ok else None,
            "host_grid_placement": "not constructed",
        },
        0.0,
    ))

    rec = by_key[("H49", "T5")]
    add(CheckRecord("derived_hom_h49_t5", False, "INFO",
                    {"fixture": "H49", "target": "T5"}, rec, rec["elapsed_s"]))
    found_targets = []
    for i in range(1, 13):
        if i == 5:
            continue
        rec = by_key[("H4", f"T{i}")]
        add(CheckRecord(f"derived_hom_h4_t{i}", False, "INFO",
                        {"fixture": "H4", "target": f"T{i}"}, rec, rec["elapsed_s"]))
        if rec["verdict"] == "FOUND":
            found_targets.append(f"T{i}")
    add(CheckRecord("derived_h4_colorable_order5", False, "INFO",
                    {"fixture": "H4"},
                    {"colorable_by": found_targets,
                     "colorable_with_some_5_tournament": bool(found_targets)}, 0.0))

    add(_record("fixture_h4_integrity", True, _h4_integrity_check, {"fixture": "H4"}))
    add(_record("fixture_h49_integrity", True, _h49_integrity_check, {"fixture": "H49"}))

    add(_record("upper_bound_exhaustive_h11", True, _upper_bound_exhaustive,
                {"grid": "H_1,1", "orientations": 64}))
    m, n, trials = SCALES[scale]
    add(_record("upper_bound_sampled", True,
                lambda: _upper_bound_sampled(seed, scale),
                {"grid": f"H_{m},{n}", "orientations": trials, "seed": seed}))
    return report


def render_text(report: VerificationReport) -> str:
    """Human-readable rendering of the same records."""
    lines = []
    width = max(len(c.name) for c in report.checks)
    for c in report.checks:
        lines.append(f"{c.verdict:<5} {c.name:<{width}} {c.elapsed_s:8.2f}s")
    lines.append(f"overall: {report.overall}  (seed={report.seed}, scale={report.scale})")
    return "\n".join(lines) + "\n"
