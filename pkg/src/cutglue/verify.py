"""One-shot verification driver behind `cutglue verify`.

Every check is exhaustive over the surface's pairings (kernel-backed) or
a seeded object-level spot check; measured numbers ride along in the
check details so failures are diagnosable from the report alone.
"""

from __future__ import annotations

import importlib.resources as resources
import json
from dataclasses import dataclass

import numpy as np

from . import _kernels, __version__
from ._kernels.common import even_slot_successor
from .boundary import boundary_profile
from .connectivity import _class_components, conjecture_scan
from .enumeration import (
    DEFAULT_BUDGET,
    check_budget,
    pairing_from_rank,
)
from .moves import Move, apply_move, legal_moves
from .surface import SurfaceSpec, balanced_existence_parity

_FULL_SWEEP_LIMIT = 450_000


@dataclass(frozen=True)
class CheckResult:
    subject: str
    name: str
    passed: bool
    detail: str


@dataclass(frozen=True)
class VerifyReport:
    version: str
    checks: tuple[CheckResult, ...]

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self) -> list[str]:
        out = []
        for c in self.checks:
            status = "PASS" if c.passed else "FAIL"
            out.append(f"[{c.subject}] {c.name}: {status} ({c.detail})")
        out.append(f"result: {'PASS' if self.ok else 'FAIL'} (cutglue {self.version})")
        return out


def _surface_key(surface: SurfaceSpec) -> str:
    return ",".join(map(str, surface.component_sizes))


def run_verify(
    surfaces: list[SurfaceSpec],
    budget: int = DEFAULT_BUDGET,
    seed: int = 0,
    sample: int = 50,
) -> VerifyReport:
    checks: list[CheckResult] = []
    for surface in surfaces:
        checks.extend(_surface_checks(surface, budget, seed, sample))
    return VerifyReport(version=__version__, checks=tuple(checks))


def _surface_checks(
    surface: SurfaceSpec, budget: int, seed: int, sample: int
) -> list[CheckResult]:
    key = _surface_key(surface)
    total = check_budget(surface, budget)
    backend = _kernels.get_backend()
    m = surface.total_pairs
    s = surface.component_count
    rho = even_slot_successor(surface.component_sizes)
    checks: list[CheckResult] = []

    def add(name: str, passed: bool, detail: str) -> None:
        checks.append(CheckResult(key, name, bool(passed), detail))

    cpos8, cneg8 = backend.boundary_counts_by_rank(m, rho)
    cpos = cpos8.astype(np.int64)
    cneg = cneg8.astype(np.int64)
    sig = cpos - cneg
    d = cpos + cneg

    add("total_pairings", sig.shape[0] == total, f"count={sig.shape[0]}")

    bad_parity = int(((d - s - m) % 2 != 0).sum())
    add("boundary_count_parity", bad_parity == 0, f"violations={bad_parity}")

    chi = surface.euler_characteristic - m
    g2 = 2 - chi - d
    bad_genus = int(((g2 % 2 != 0) | (g2 < 0)).sum())
    add("genus_integral_nonnegative", bad_genus == 0, f"violations={bad_genus}")

    parity_ok = balanced_existence_parity(surface)
    balanced = int((sig == 0).sum())
    add(
        "balanced_existence_parity",
        (balanced > 0) == parity_ok,
        f"parity_condition={parity_ok} balanced={balanced}",
    )

    if s == 1:
        hist_sym = all(
            int((sig == v).sum()) == int((sig == -v).sum())
            for v in np.unique(sig)
        )
        add("histogram_symmetric", hist_sym, f"classes={len(np.unique(sig))}")
        extremal = (int((sig == m - 1).sum()), int((sig == 1 - m).sum()))
        add(
            "extremal_classes_singleton",
            extremal == (1, 1),
            f"sizes={extremal}",
        )

    if total <= _FULL_SWEEP_LIMIT:
        ranks = np.arange(total, dtype=np.int64)
        nbr, verdict = backend.move_neighbor_table(m, rho, ranks)
        checks.extend(_move_sweep_checks(key, sig, cpos, cneg, nbr, verdict))
    else:
        rng = np.random.default_rng(seed)
        ranks = np.unique(
            rng.integers(0, total, size=max(sample, 1) * 40, dtype=np.int64)
        )
        nbr, verdict = backend.move_neighbor_table(m, rho, ranks)
        checks.extend(
            _move_sweep_checks(
                key, sig, cpos, cneg, nbr, verdict, src_ranks=ranks, m=m, rho=rho
            )
        )

    if balanced:
        class_ranks = np.flatnonzero(sig == 0).astype(np.int64)
        labels, edge_count, _ = _class_components(surface, class_ranks, False)
        n_comp = int(labels.max()) + 1 if labels.size else 0
        add(
            "balanced_components",
            n_comp == 1,
            f"members={balanced} components={n_comp} edges={edge_count}",
        )

    checks.extend(_object_spot_checks(surface, key, total, sig, seed, sample))
    return checks


def _move_sweep_checks(
    key: str,
    sig: np.ndarray,
    cpos: np.ndarray,
    cneg: np.ndarray,
    nbr: np.ndarray,
    verdict: np.ndarray,
    src_ranks: np.ndarray | None = None,
    m: int | None = None,
    rho: np.ndarray | None = None,
) -> list[CheckResult]:
    rows, cols = np.nonzero(nbr >= 0)
    dst = nbr[rows, cols]
    src = rows if src_ranks is None else src_ranks[rows]
    scope = "all pairings" if src_ranks is None else f"{nbr.shape[0]} sampled"

    sig_viol = int((sig[dst] != sig[src]).sum())
    split = verdict[rows, cols] == 2
    merge = verdict[rows, cols] == 4
    acct_viol = int(
        (
            split
            & ((cpos[dst] != cpos[src] + 1) | (cneg[dst] != cneg[src] + 1))
        ).sum()
        + (
            merge
            & ((cpos[dst] != cpos[src] - 1) | (cneg[dst] != cneg[src] - 1))
        ).sum()
    )

    if src_ranks is None:
        rev_viol = int((nbr[dst, cols] != src).sum())
        kind_viol = int((verdict[dst, cols] + verdict[rows, cols] != 6).sum())
    else:
        backend = _kernels.get_backend()
        uniq, inverse = np.unique(dst, return_inverse=True)
        nbr2, verdict2 = backend.move_neighbor_table(m, rho, uniq)
        rev_viol = int((nbr2[inverse, cols] != src).sum())
        kind_viol = int(
            (verdict2[inverse, cols] + verdict[rows, cols] != 6).sum()
        )

    return [
        CheckResult(
            key,
            "signature_invariance",
            sig_viol == 0,
            f"{scope}: {dst.shape[0]} legal moves, violations={sig_viol}",
        ),
        CheckResult(
            key,
            "split_merge_accounting",
            acct_viol == 0,
            f"splits={int(split.sum())} merges={int(merge.sum())} "
            f"violations={acct_viol}",
        ),
        CheckResult(
            key,
            "move_reversibility",
            rev_viol == 0 and kind_viol == 0,
            f"violations={rev_viol + kind_viol}",
        ),
    ]


def _object_spot_checks(
    surface: SurfaceSpec,
    key: str,
    total: int,
    sig: np.ndarray,
    seed: int,
    sample: int,
) -> list[CheckResult]:
    """Cross-check the object layer against the kernel census on a sample."""
    rng = np.random.default_rng(seed)
    n = min(sample, total)
    ranks = rng.choice(total, size=n, replace=False) if n else []
    mismatches = 0
    replay_failures = 0
    for rank in ranks:
        p = pairing_from_rank(surface, int(rank))
        prof = boundary_profile(p)
        if prof.signature != int(sig[rank]):
            mismatches += 1
            continue
        for move, verdict in legal_moves(p):
            q = apply_move(p, move)
            o1, e1, o2, e2 = move.vertices
            back = apply_move(q, Move((o1, e2), (o2, e1)))
            if back.pairs != p.pairs:
                replay_failures += 1
    return [
        CheckResult(
            key,
            "object_kernel_agreement",
            mismatches == 0,
            f"sampled={n} mismatches={mismatches}",
        ),
        CheckResult(
            key,
            "object_move_involution",
            replay_failures == 0,
            f"sampled={n} failures={replay_failures}",
        ),
    ]


def load_fixtures() -> dict:
    text = resources.files("cutglue").joinpath("data/derived_fixtures.json").read_text()
    return json.loads(text)


def run_fixture_regression(budget: int = DEFAULT_BUDGET) -> VerifyReport:
    """Re-derive every frozen fixture value and compare."""
    from .enumeration import enumeration_report

    fixtures = load_fixtures()
    checks: list[CheckResult] = []

    for key, expected in fixtures["single"].items():
        surface = SurfaceSpec((int(key),))
        checks.extend(_fixture_surface_checks(surface, expected, budget))
    for key, expected in fixtures["multi"].items():
        surface = SurfaceSpec(tuple(int(x) for x in key.split(",")))
        checks.extend(_fixture_surface_checks(surface, expected, budget))
        parity = balanced_existence_parity(surface)
        checks.append(
            CheckResult(
                key,
                "fixture_parity_condition",
                parity == expected["parity"],
                f"expected={expected['parity']} got={parity}",
            )
        )
    for key, expected_scan in fixtures["scans"].items():
        surface = SurfaceSpec((int(key),))
        report = enumeration_report(surface, budget)
        scan = conjecture_scan(surface, budget)
        got = {
            str(s): [report.counts_by_signature[s], c] for s, c in scan.items()
        }
        checks.append(
            CheckResult(
                key,
                "fixture_conjecture_scan",
                got == expected_scan,
                f"classes={len(got)} match={got == expected_scan}",
            )
        )
    return VerifyReport(version=__version__, checks=tuple(checks))


def _fixture_surface_checks(
    surface: SurfaceSpec, expected: dict, budget: int
) -> list[CheckResult]:
    from .enumeration import enumeration_report, signature_census

    key = _surface_key(surface)
    report = enumeration_report(surface, budget)
    checks = [
        CheckResult(
            key,
            "fixture_total",
            report.total_pairings == expected["total"],
            f"expected={expected['total']} got={report.total_pairings}",
        ),
        CheckResult(
            key,
            "fixture_balanced_count",
            report.balanced_count == expected["balanced"],
            f"expected={expected['balanced']} got={report.balanced_count}",
        ),
    ]
    sig = signature_census(surface)
    class_ranks = np.flatnonzero(sig == 0).astype(np.int64)
    labels, _, _ = _class_components(surface, class_ranks, False)
    n_comp = int(labels.max()) + 1 if labels.size else 0
    checks.append(
        CheckResult(
            key,
            "fixture_balanced_components",
            n_comp == expected["components"],
            f"expected={expected['components']} got={n_comp}",
        )
    )
    return checks
