"""Named verification suites with machine-readable reports.

Every suite returns a :class:`Report`.  Work is split over a process pool
when ``jobs > 1``; failures are sorted before they are reported, so the
output does not depend on the pool.
"""

import itertools
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from dcrystal import kr, oracle
from dcrystal.burge import kappa_nw, kappa_se, lambda_of
from dcrystal.paths import (
    enumerate_double_paths, epsilon_star_n, shape_from_paths, triangle_rows,
)
from dcrystal.pbw import (
    LusztigDatum, UPPER, combine, e_full, e_J, epsilon_full, f_full, f_J,
    iter_full, iter_upper, phi_J, random_upper, split,
)
from dcrystal.roots import Root, build_root_system
from dcrystal.tableaux import (
    NotSemistandard, e_0_nw, e_n_se, f_0_nw, f_n_se, tableau_e, tableau_f,
)
from dcrystal.trails import (
    enumerate_darrays, freeze, levi_restricted_trails, paths_to_darray,
    trail_set, trail_to_darray,
)

MAX_FAILURES = 20


@dataclass
class Report:
    suite: str
    config: dict
    cases: int = 0
    failures: list = field(default_factory=list)
    details: dict = field(default_factory=dict)

    @property
    def passed(self):
        return not self.failures

    def to_json(self):
        return {"suite": self.suite, "config": self.config, "cases": self.cases,
                "passed": self.passed, "failure_count": len(self.failures),
                "failures": self.failures[:MAX_FAILURES], "details": self.details}

    def summary(self):
        status = "PASS" if self.passed else "FAIL"
        extra = " ".join("%s=%s" % kv for kv in sorted(self.details.items()))
        return "%s %s: %d cases, %d failures %s" % (
            status, self.suite, self.cases, len(self.failures), extra)


def datum_json(c):
    if c is None:
        return None
    if c.support == UPPER or not any(c.values[c.roots.M:]):
        return triangle_rows(c)
    return list(c.values)


def _pool_map(fn, items, jobs):
    items = list(items)
    if jobs <= 1 or len(items) < 2 * jobs:
        return [fn(x) for x in items]
    chunk = max(1, len(items) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


def _collect(report, results):
    for fails in results:
        report.failures.extend(fails)
    report.failures.sort(key=repr)


def _upper_cases(n, bound, samples, seed):
    if samples:
        rng = random.Random(seed)
        return [random_upper(n, bound, rng) for _ in range(samples)]
    return list(iter_upper(n, bound))


# --- operator oracle -------------------------------------------------------------

def suite_operator_oracle(n=4, bound=2, jobs=1):
    """Signature rule against the braid-move computation, on all full data
    with entries <= bound; star epsilon against the transition route on all
    upper data with entries <= bound."""
    report = Report("operator-oracle", {"n": n, "bound": bound})
    N = build_root_system(n).N
    data = np.array(list(itertools.product(range(bound + 1), repeat=N)), dtype=np.int64)
    datums = [LusztigDatum(n, row) for row in map(tuple, data.tolist())]
    for i in range(1, n + 1):
        for op, fn, delta in (("f", f_full, +1), ("e", e_full, -1)):
            expect, defined = oracle.first_letter_op_batch(data, i, delta)
            for c, exp, ok in zip(datums, expect.tolist(), defined.tolist()):
                got = fn(c, i)
                got = None if got is None else list(got.values)
                want = exp if ok else None
                if got != want:
                    report.failures.append({"op": op, "i": i, "datum": list(c.values),
                                            "signature": got, "oracle": want})
            report.cases += len(datums)
    upper = list(iter_upper(n, bound))
    star = oracle.epsilon_star_transition_batch(upper)
    for c, want in zip(upper, star):
        report.cases += 1
        got = epsilon_star_n(c)
        if got != want:
            report.failures.append({"op": "epsilon_star", "datum": triangle_rows(c),
                                    "paths": got, "oracle": int(want)})
    return report


# --- tensor split -------------------------------------------------------------------

def tensor_expectation(c, i, op):
    """Operator on c computed from the factors of its split."""
    n = c.n
    u, l = split(c)
    if i == n:
        return f_full(c, i) if op == "f" else e_full(c, i)
    pu = phi_J(u, i)
    el = epsilon_full(l, i)
    if op == "f":
        if pu > el:
            return combine(f_J(u, i), l)
        return combine(u, f_full(l, i))
    if el > pu:
        low = e_full(l, i)
        return None if low is None else combine(u, low)
    up = e_J(u, i)
    return None if up is None else combine(up, l)


def _tensor_case(c):
    fails = []
    for i in range(1, c.n + 1):
        for op, fn in (("f", f_full), ("e", e_full)):
            if tensor_expectation(c, i, op) != fn(c, i):
                fails.append({"op": op, "i": i, "datum": list(c.values)})
    return fails


def suite_tensor_split(n=4, bound=1, jobs=1):
    report = Report("tensor-split", {"n": n, "bound": bound})
    cases = list(iter_full(n, bound))
    report.cases = len(cases) * n * 2
    _collect(report, _pool_map(_tensor_case, cases, jobs))
    return report


# --- Burge equivariance ---------------------------------------------------------

def _safe(fn, *args):
    try:
        return fn(*args)
    except NotSemistandard:
        return "not semistandard"


def _upper(c):
    return None if c is None else c.with_support(UPPER)


def equivariance_failures(c):
    """Nodes where a Burge map fails to intertwine the operators on c."""
    n = c.n
    theta = Root("sum", 1, 2)
    se, nw = kappa_se(c), kappa_nw(c)
    checks = []
    for i in range(1, n):
        checks.append(("se", "f", i, f_J(c, i), se, tableau_f, kappa_se))
        checks.append(("se", "e", i, e_J(c, i), se, tableau_e, kappa_se))
        checks.append(("nw", "f", i, f_J(c, i), nw, tableau_f, kappa_nw))
        checks.append(("nw", "e", i, e_J(c, i), nw, tableau_e, kappa_nw))
    fails = []
    for side, op, i, d, t, top, kappa in checks:
        want = None if d is None else kappa(d)
        if _safe(top, t, i) != want:
            fails.append({"map": side, "op": op, "i": i, "datum": triangle_rows(c)})
    for op, d, top in (("f", _upper(f_full(c, n)), f_n_se), ("e", _upper(e_full(c, n)), e_n_se)):
        want = None if d is None else kappa_se(d)
        if _safe(top, se, n) != want:
            fails.append({"map": "se", "op": op, "i": n, "datum": triangle_rows(c)})
    for op, d, top in (("e", c.add(theta, 1), e_0_nw), ("f", c.add(theta, -1), f_0_nw)):
        want = None if d is None else kappa_nw(d)
        if _safe(top, nw) != want:
            fails.append({"map": "nw", "op": op, "i": 0, "datum": triangle_rows(c)})
    return fails


def suite_burge_equivariance(n=4, bound=2, samples=0, seed=0, jobs=1):
    report = Report("burge-equivariance",
                    {"n": n, "bound": bound, "samples": samples, "seed": seed})
    cases = _upper_cases(n, bound, samples, seed)
    report.cases = len(cases)
    _collect(report, _pool_map(equivariance_failures, cases, jobs))
    return report


# --- shape equality ---------------------------------------------------------------

def _shape_case(c):
    a, b = lambda_of(c), shape_from_paths(c)
    if a != b:
        return [{"datum": triangle_rows(c), "insertion": list(a), "paths": list(b)}]
    return []


def suite_shape_equality(n=4, bound=2, samples=0, seed=0, jobs=1):
    report = Report("shape-equality",
                    {"n": n, "bound": bound, "samples": samples, "seed": seed})
    cases = _upper_cases(n, bound, samples, seed)
    report.cases = len(cases)
    _collect(report, _pool_map(_shape_case, cases, jobs))
    return report


# --- trail counts -------------------------------------------------------------------

def suite_trail_counts(n=5, jobs=1):
    report = Report("trail-counts", {"n": n})
    restricted = levi_restricted_trails(n)
    arrays = {freeze(a) for a in enumerate_darrays(n, 1)}
    paths = enumerate_double_paths(n, (1, 1))
    trail_images = {freeze(trail_to_darray(bits, n)) for bits in restricted}
    path_images = {freeze(paths_to_darray([p.cells()], n)) for p in paths}
    report.details = {"trails": len(trail_set(n)), "restricted_trails": len(restricted),
                      "darrays": len(arrays), "double_paths": len(paths)}
    report.cases = 4
    if not len(restricted) == len(arrays) == len(paths):
        report.failures.append({"reason": "counts differ"})
    if len(trail_images) != len(restricted) or trail_images != arrays:
        report.failures.append({"reason": "trail map is not a bijection onto the arrays"})
    if len(path_images) != len(paths) or path_images != arrays:
        report.failures.append({"reason": "path map is not a bijection onto the arrays"})
    return report


# --- affine crystal ------------------------------------------------------------------

def suite_kr_iso(n=4, s=1, jobs=1):
    report = Report("kr-iso", {"n": n, "s": s})
    ok, g, h = kr.kr_isomorphism(n, s)
    dim = kr.weyl_dimension(n, kr.spin_multiple(n, s))
    irregular = kr.regularity_failures(n, s)
    report.details = {"vertices": len(g.vertices), "tableaux": len(h.vertices),
                      "edges": len(g.edges), "weyl_dimension": dim,
                      "caps": kr.cap_fire_counts(n, s)}
    report.cases = 2 + len(g.vertices) * (n + 1)
    if not ok:
        report.failures.append({"reason": "kappa is not a labeled-digraph isomorphism"})
    if len(g.vertices) != dim:
        report.failures.append({"reason": "vertex count differs from the Weyl dimension"})
    for c, i in irregular:
        report.failures.append({"reason": "irregular string", "i": i,
                                "datum": triangle_rows(c)})
    return report


def suite_embedding(n=4, s=1, t=2, jobs=1):
    report = Report("embedding", {"n": n, "s": s, "t": t})
    report.cases = len(kr.enumerate_BJs(n, s)) * (n + 1) * 2
    if not kr.check_embedding(n, s, t):
        report.failures.append({"reason": "level-%d set is not a full subcrystal" % s})
    return report


SUITES = {
    "operator-oracle": suite_operator_oracle,
    "tensor-split": suite_tensor_split,
    "burge-equivariance": suite_burge_equivariance,
    "shape-equality": suite_shape_equality,
    "trail-counts": suite_trail_counts,
    "kr-iso": suite_kr_iso,
    "embedding": suite_embedding,
}
