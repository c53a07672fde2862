"""
Case enumeration and the verification suite comparing the two seeds.
"""

from __future__ import annotations

import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property

import sympy as sp

from lib.config import (
    CHECK_NAMES,
    DEFAULT_SEED,
    DEFAULT_TRIALS,
    MAX_EXHAUSTIVE_N,
    MAX_FACTORIZATION_N,
    SCHEMA_VERSION,
    WIRING_ORIENTATION,
)
from lib.exact_minors import (
    check_desnanot_jacobi,
    check_hollow_relation,
    gale_pairs,
    verify_component_factorization,
    verify_translation,
)
from lib.ingermanson import (
    ORIENTATIONS,
    IngSeed,
    appearance_matrix_M,
    build_ing_seed,
    exchange_ratio,
    ing_quiver,
    path_pi,
    piv,
    pivot_window,
    wiring_quiver,
)
from lib.leclerc import LecSeed, build_lec_seed, chamber_modules, lec_appearance_matrix, lec_variables, strip_maps
from lib.perm_core import (
    Permutation,
    ReducedWord,
    all_permutations,
    bruhat_leq,
    gale_leq,
    is_unipeak,
    reduced_subexpressions,
    unipeak_words,
)
from lib.shapes import MinorIndex
from lib.wiring import WiringDiagram, build_diagram, spread_boundary, truncate_left, truncate_right

PAIR_CHECKS = ("factorization", "translation")


@dataclass(frozen=True)
class CaseSpec:
    """Which cases to run and how to seed the random checks."""
    n: int
    v: Permutation | None = None
    w: Permutation | None = None
    word: ReducedWord | None = None
    sample: int | None = None
    seed: int = DEFAULT_SEED
    trials: int = DEFAULT_TRIALS

    def __post_init__(self):
        if self.n < 1:
            raise ValueError(f"n must be positive, got {self.n}")
        for name, perm in (("v", self.v), ("w", self.w)):
            if perm is not None and perm.n != self.n:
                raise ValueError(f"{name} = {perm} does not live in S_{self.n}")
        if self.word is not None and self.word.n != self.n:
            raise ValueError(f"Word {self.word} does not live in S_{self.n}")
        if self.word is None and self.n > MAX_EXHAUSTIVE_N:
            raise ValueError(f"Exhaustive enumeration is limited to n <= {MAX_EXHAUSTIVE_N}, got n = {self.n}")

    def describe(self) -> dict:
        return {
            "n": self.n,
            "v": str(self.v) if self.v is not None else None,
            "w": str(self.w) if self.w is not None else None,
            "word": list(self.word.letters) if self.word is not None else None,
            "sample": self.sample,
            "seed": self.seed,
            "trials": self.trials,
        }


@dataclass(frozen=True)
class Case:
    index: int
    v: Permutation
    word: ReducedWord

    def describe(self) -> dict:
        return {"index": self.index, "v": str(self.v), "word": list(self.word.letters)}


def enumerate_cases(spec: CaseSpec) -> list[Case]:
    """
    All pairs (v <= w, unipeak reduced word of w) matching the filters, in a
    fixed order: w by length then one-line notation, words lexicographically,
    v by length then one-line notation.
    """
    if spec.word is not None:
        if spec.w is not None and spec.word.product() != spec.w:
            raise ValueError(f"Word {spec.word} is not a word for {spec.w}")
        if not is_unipeak(spec.word):
            raise ValueError(f"Word {spec.word} is not unipeak")
        pairs = [(spec.word.product(), spec.word)]
    else:
        targets = [spec.w] if spec.w is not None else all_permutations(spec.n)
        pairs = [(w, word) for w in targets for word in unipeak_words(w)]

    cases = []
    for w, word in pairs:
        below = [spec.v] if spec.v is not None else all_permutations(spec.n)
        for v in below:
            if bruhat_leq(v, w):
                cases.append(Case(len(cases), v, word))

    if spec.sample is not None and spec.sample < len(cases):
        picked = random.Random(spec.seed).sample(range(len(cases)), spec.sample)
        cases = [cases[i] for i in sorted(picked)]
    return cases


@dataclass
class CheckOutcome:
    ok: bool
    detail: str = ""
    data: dict = field(default_factory=dict)


class CaseData:
    """Lazily built objects for one case."""

    def __init__(self, case: Case, trials: int, seed: int):
        self.case = case
        self.trials = trials
        self.seed = seed

    @cached_property
    def diagram(self) -> WiringDiagram:
        return build_diagram(self.case.v, self.case.word)

    @cached_property
    def ing(self) -> IngSeed:
        return build_ing_seed(self.diagram)

    @cached_property
    def lec(self) -> LecSeed:
        return build_lec_seed(self.diagram)


def _fail(detail: str, **data) -> CheckOutcome:
    return CheckOutcome(False, detail, data)


def check_pds_lex_max(cd: CaseData) -> CheckOutcome:
    d = cd.diagram
    supports = reduced_subexpressions(d.v, d.word)
    if not supports or d.mask.support != max(supports):
        return _fail(f"support {list(d.mask.support)} is not the lexicographic maximum")
    if len(d.solid) != d.w.length() - d.v.length():
        return _fail(f"{len(d.solid)} solid crossings, expected {d.w.length() - d.v.length()}")
    return CheckOutcome(True)


def check_unipeak_exists(cd: CaseData) -> CheckOutcome:
    if not unipeak_words(cd.diagram.w):
        return _fail(f"{cd.diagram.w} has no unipeak word")
    return CheckOutcome(cd.diagram.unipeak, "" if cd.diagram.unipeak else "case word is not unipeak")


def check_m_unitriangular(cd: CaseData) -> CheckOutcome:
    M, P = cd.ing.M, cd.ing.P
    if not M.cols:
        return CheckOutcome(True)
    square = M.restrict(M.cols).matrix
    if P.matrix * square != sp.eye(len(M.cols)):
        return _fail("P is not the inverse of the solid rows of M")
    for c in M.rows:
        for x in M.cols:
            if M[c, x] not in (0, 1) or (c > x and M[c, x]) or (c == x and M[c, x] != 1):
                return _fail(f"m[{c},{x}] = {M[c, x]}")
    return CheckOutcome(True)


def check_pivot_monotone(cd: CaseData) -> CheckOutcome:
    d = cd.diagram
    windows = {pivot_window(d, c, x) for x in d.solid for c in range(1, x + 1)}
    prefixes = {d.mask.prefix(x) for x in range(1, len(d) + 2)}
    for window in sorted(windows):
        for u in sorted(prefixes):
            for i in range(1, d.n):
                raised = u.left_mul(i)
                if raised.length() > u.length() and not gale_leq(piv(window, u), piv(window, raised)):
                    return _fail(f"Piv of {list(window)} drops from {u} to s_{i}{u}")
    return CheckOutcome(True)


def _shared_entries_agree(full, cut, shift: int) -> bool:
    for c in cut.rows:
        for x in cut.cols:
            if c + shift in full.rows and x + shift in full.cols and cut[c, x] != full[c + shift, x + shift]:
                return False
    return True


def check_stability(cd: CaseData) -> CheckOutcome:
    d = cd.diagram
    if len(d) == 0:
        return CheckOutcome(True)
    for name, cut, shift in (("right", truncate_right(d), 0), ("left", truncate_left(d), 1)):
        if not _shared_entries_agree(cd.ing.M, appearance_matrix_M(cut), shift):
            return _fail(f"appearance matrix changes under {name} truncation")
        table = chamber_modules(cut)
        if not _shared_entries_agree(cd.lec.appearance, lec_appearance_matrix(table, lec_variables(cut, table)), shift):
            return _fail(f"factor appearance changes under {name} truncation")
    return CheckOutcome(True)


def check_appearance(cd: CaseData) -> CheckOutcome:
    if cd.ing.M.to_lists() != cd.lec.appearance.to_lists() or cd.ing.M.cols != cd.lec.appearance.cols:
        return _fail("appearance matrices differ", ing=cd.ing.M.to_lists(), lec=cd.lec.appearance.to_lists())
    return CheckOutcome(True)


def check_variables(cd: CaseData) -> CheckOutcome:
    d = cd.diagram
    for a_var in cd.ing.variables:
        b_var = cd.lec.variable(a_var.label)
        expected = MinorIndex(d.v.apply(b_var.minor.rows), d.w.apply(b_var.minor.cols))
        if a_var.minor != expected:
            return _fail(f"A_{a_var.label} = {a_var.minor} but B_{a_var.label} gives {expected}")
        if a_var.endpoint != b_var.bound:
            return _fail(f"path of A_{a_var.label} ends at {a_var.endpoint}, truncation bound is {b_var.bound}")
        drops = path_pi(d, a_var.label).drops
        if any(not d.is_hollow(t) for t in drops):
            return _fail(f"path of A_{a_var.label} falls at a solid crossing")
    return CheckOutcome(True)


def check_quiver(cd: CaseData) -> CheckOutcome:
    if cd.ing.quiver != cd.lec.quiver:
        return _fail("quivers differ", ing=[list(a) for a in cd.ing.quiver.arrows],
                     lec=[list(a) for a in cd.lec.quiver.arrows])
    return CheckOutcome(True)


def check_quiver_shape(cd: CaseData) -> CheckOutcome:
    problems = cd.ing.quiver.defects() + cd.lec.quiver.defects()
    return CheckOutcome(not problems, "; ".join(problems))


def check_base_case(cd: CaseData) -> CheckOutcome:
    d = cd.diagram
    last = len(d)
    if last == 0 or d.is_hollow(last):
        return CheckOutcome(True, "not applicable")
    j, k = d.height(last), d.height(1)
    w_inv, v_inv = d.w.inverse(), d.v.inverse()
    conditions = (
        j not in w_inv.head(k) and j + 1 in w_inv.head(k)
        and j in v_inv.head(k) and j + 1 not in v_inv.head(k)
        and len([x for x in w_inv.head(k) if x < j]) == len([x for x in v_inv.head(k) if x < j])
    )
    jump = not gale_leq(v_inv.left_mul(j).head(k), w_inv.left_mul(j).head(k))
    appears_ing = cd.ing.M[1, last] == 1
    appears_lec = cd.lec.appearance[1, last] == 1
    if not conditions == jump == appears_ing == appears_lec:
        return _fail(f"conditions={conditions} jump={jump} ing={appears_ing} lec={appears_lec}")
    if cd.lec.variable(last).key != MinorIndex((j,), (j + 1,)):
        return _fail(f"B_{last} = {cd.lec.variable(last).key}, expected a one-box minor at content {j}")
    return CheckOutcome(True)


def check_hollow_relation_case(cd: CaseData) -> CheckOutcome:
    d = cd.diagram
    for c in d.hollow:
        i = d.height(c)
        systems = (
            ("left", d.mask.prefix(c + 1), d.word.prefix(c + 1)),
            ("right", d.mask.suffix(c), d.word.suffix(c)),
        )
        for name, u, x in systems:
            if not (u.right_mul(i).length() < u.length() and x.right_mul(i).length() < x.length()):
                return _fail(f"{name} labels at hollow crossing {c} do not descend at {i}")
            seed = cd.seed + 1000 * cd.case.index + c
            results = [check_desnanot_jacobi(u, x, i, cd.trials, seed)]
            if name == "right":
                results.append(check_hollow_relation(u, x, i, cd.trials, seed))
            for result in results:
                if not result:
                    return _fail(f"{result.name} fails at hollow crossing {c}", **result.counterexample)
    return CheckOutcome(True)


def check_strip_maps(cd: CaseData) -> CheckOutcome:
    for i in cd.diagram.solid:
        for result in strip_maps(cd.diagram, i, cd.seed):
            if not result.ok:
                return _fail(f"{result.case} neighbour of crossing {i} ({result.detail})")
    return CheckOutcome(True)


def check_spread_boundary(cd: CaseData) -> CheckOutcome:
    d = cd.diagram
    for var in cd.ing.variables:
        c, spread = var.label, var.spread
        boundary = spread_boundary(d, spread)
        solid_ends = [x for x in boundary.right_ends if x != c and not d.is_hollow(x)]
        if solid_ends:
            return _fail(f"spread of A_{c} has solid right ends {sorted(solid_ends)}")
        if boundary.forbidden_cusps:
            return _fail(f"spread of A_{c} has forbidden cusps {sorted(boundary.forbidden_cusps)}")
        for x in spread:
            if x < c and not d.is_hollow(x):
                around = d.neighbors(x)
                if around.right not in spread or around.up not in spread:
                    return _fail(f"spread of A_{c} contains chi_{x} but not its right and upper neighbours")
    return CheckOutcome(True)


def check_exchange_ratio(cd: CaseData) -> CheckOutcome:
    for var in cd.ing.variables:
        if not var.frozen:
            exchange_ratio(cd.ing, var.label)
    return CheckOutcome(True)


def check_lec_counts(cd: CaseData) -> CheckOutcome:
    d = cd.diagram
    keys = {var.key for var in cd.lec.variables}
    if len(keys) != d.w.length() - d.v.length():
        return _fail(f"{len(keys)} distinct variables, expected {d.w.length() - d.v.length()}")
    table = cd.lec.table
    for var in cd.lec.variables:
        later = [c for c in table if c > var.label and var.key in table[c].keys]
        if var.key not in table[var.label].keys or later:
            return _fail(f"B_{var.label} is not labelled by its last chamber")
    return CheckOutcome(True)


def check_frozen_agreement(cd: CaseData) -> CheckOutcome:
    if cd.ing.frozen != cd.lec.frozen:
        return _fail(f"frozen variables differ: {sorted(cd.ing.frozen)} vs {sorted(cd.lec.frozen)}")
    return CheckOutcome(True)


def check_calibration(cd: CaseData) -> CheckOutcome:
    passing = []
    for orientation in ORIENTATIONS:
        try:
            quiver = ing_quiver(cd.ing.M, wiring_quiver(cd.diagram, orientation), cd.ing.frozen)
        except RuntimeError:
            continue
        if quiver == cd.lec.quiver:
            passing.append(orientation)
    ok = tuple(WIRING_ORIENTATION) in passing
    return CheckOutcome(ok, "" if ok else "configured orientation disagrees",
                        {"passing": [_orientation_name(o) for o in passing]})


def _orientation_name(orientation) -> str:
    return "".join("1" if flip else "0" for flip in orientation)


CASE_CHECKS = {
    "pds_lex_max": check_pds_lex_max,
    "unipeak_exists": check_unipeak_exists,
    "m_unitriangular": check_m_unitriangular,
    "pivot_monotone": check_pivot_monotone,
    "stability": check_stability,
    "appearance": check_appearance,
    "variables": check_variables,
    "quiver": check_quiver,
    "quiver_shape": check_quiver_shape,
    "base_case": check_base_case,
    "hollow_relation": check_hollow_relation_case,
    "strip_maps": check_strip_maps,
    "spread_boundary": check_spread_boundary,
    "exchange_ratio": check_exchange_ratio,
    "lec_counts": check_lec_counts,
    "frozen_agreement": check_frozen_agreement,
    "calibration": check_calibration,
}


def run_case(case: Case, checks: tuple[str, ...], trials: int, seed: int) -> tuple[int, dict]:
    """Run the case checks on one case; exceptions become failures."""
    cd = CaseData(case, trials, seed)
    results = {}
    for name in checks:
        start = time.perf_counter()
        try:
            outcome = CASE_CHECKS[name](cd)
        except Exception as e:
            outcome = CheckOutcome(False, f"{type(e).__name__}: {e}")
        results[name] = (outcome, time.perf_counter() - start)
    return case.index, results


@dataclass
class CheckSummary:
    name: str
    cases: int = 0
    passed: int = 0
    failed: int = 0
    seconds: float = 0.0
    counterexample: dict | None = None
    tallies: dict = field(default_factory=dict)

    def record(self, outcome: CheckOutcome, seconds: float, where: dict):
        self.cases += 1
        self.seconds += seconds
        if outcome.ok:
            self.passed += 1
        else:
            self.failed += 1
            if self.counterexample is None:
                self.counterexample = {**where, "detail": outcome.detail, **outcome.data}
        for variant in outcome.data.get("passing", []):
            self.tallies[variant] = self.tallies.get(variant, 0) + 1

    def to_dict(self, include_timing: bool = True) -> dict:
        result = {
            "cases": self.cases,
            "passed": self.passed,
            "failed": self.failed,
            "counterexample": self.counterexample,
        }
        if self.tallies:
            result["passing_orientations"] = dict(sorted(self.tallies.items()))
        if include_timing:
            result["seconds"] = round(self.seconds, 6)
        return result


@dataclass
class VerifyReport:
    spec: CaseSpec
    checks: dict[str, CheckSummary] = field(default_factory=dict)
    cases: int = 0

    @property
    def ok(self) -> bool:
        return all(summary.failed == 0 for summary in self.checks.values())

    @property
    def exit_code(self) -> int:
        return 0 if self.ok else 1

    def to_dict(self, include_timing: bool = True) -> dict:
        return {
            "schema": SCHEMA_VERSION,
            "spec": self.spec.describe(),
            "cases": self.cases,
            "ok": self.ok,
            "checks": {name: s.to_dict(include_timing) for name, s in self.checks.items()},
        }

    def to_json(self, include_timing: bool = True) -> str:
        return json.dumps(self.to_dict(include_timing), indent=2, ensure_ascii=False)


def _case_where(case: Case) -> dict:
    return {"case": case.index, "v": str(case.v), "word": list(case.word.letters)}


def _run_pair_check(name: str, spec: CaseSpec, summary: CheckSummary, verbose: bool):
    if spec.n > MAX_FACTORIZATION_N:
        raise ValueError(f"The {name} sweep is limited to n <= {MAX_FACTORIZATION_N}, got n = {spec.n}")
    check = verify_component_factorization if name == "factorization" else verify_translation
    for index, (I, J) in enumerate(gale_pairs(spec.n)):
        start = time.perf_counter()
        result = check(I, J, spec.n, spec.trials, spec.seed + index)
        outcome = CheckOutcome(result.ok, result.name, result.counterexample or {})
        summary.record(outcome, time.perf_counter() - start, {"rows": list(I), "cols": list(J)})
        if verbose and not result.ok:
            print(f"  ✗ {name}: {result.name}")


def verify(spec: CaseSpec, checks, jobs: int = 1, verbose: bool = False) -> VerifyReport:
    """
    Run the selected checks and aggregate the results.

    Args:
        spec: Cases, seed and trial count
        checks: Names from CHECK_NAMES
        jobs: Worker processes for the case checks
        verbose: Print progress banners

    Returns:
        The report; failures are recorded in it, never raised
    """
    unknown = set(checks) - set(CHECK_NAMES)
    if unknown:
        raise ValueError(f"Unknown checks: {sorted(unknown)}")
    checks = [name for name in CHECK_NAMES if name in set(checks)]
    report = VerifyReport(spec, {name: CheckSummary(name) for name in checks})
    case_checks = tuple(name for name in checks if name in CASE_CHECKS)

    if case_checks:
        cases = enumerate_cases(spec)
        report.cases = len(cases)
        if verbose:
            print("=" * 60)
            print(f"Running {len(case_checks)} checks on {len(cases)} cases (n = {spec.n})")
            print("=" * 60)
        by_index = {case.index: case for case in cases}
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                futures = [pool.submit(run_case, case, case_checks, spec.trials, spec.seed) for case in cases]
                results = [future.result() for future in futures]
        else:
            results = [run_case(case, case_checks, spec.trials, spec.seed) for case in cases]
        for index, outcomes in sorted(results, key=lambda item: item[0]):
            for name, (outcome, seconds) in outcomes.items():
                report.checks[name].record(outcome, seconds, _case_where(by_index[index]))
                if verbose and not outcome.ok:
                    print(f"  ✗ {name} on case {index}: {outcome.detail}")

    for name in checks:
        if name in PAIR_CHECKS:
            if verbose:
                print(f"\nSweeping {name} over all I <= J in [{spec.n}]...")
            _run_pair_check(name, spec, report.checks[name], verbose)

    if verbose:
        print("\n" + "-" * 60)
        for name, summary in report.checks.items():
            mark = "✓" if summary.failed == 0 else "✗"
            print(f"  {mark} {name}: {summary.passed}/{summary.cases} passed")
        print("-" * 60)
    return report
