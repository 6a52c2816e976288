"""Algebraic oracle: Schur classes of the Grassmannian via Pieri and Jacobi-Trudi.

Classes live in the box-truncated ring, where ``s_lam`` vanishes as soon as
``lam`` leaves the ``d x (n-d)`` rectangle.  Complete homogeneous classes
``h_k = s_(k)`` act by the Pieri rule, and every other ``s_nu`` is expanded
as the Jacobi-Trudi determinant ``det(h_{nu_i + j - i})`` applied to a class.
Nothing here touches puzzles or tableaux, so it is an independent check on
both enumeration engines.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache

from .combinat import (
    BoxParams,
    SkewShape,
    complement,
    contains,
    enumerate_lr_bitableaux,
    lr_count,
    partition,
    partition_of_string,
    partitions_between,
    partitions_in_box,
    size,
    string_of_partition,
)
from . import puzzles

SchurExpansion = dict  # Partition -> nonzero int


def _prune(x: dict) -> SchurExpansion:
    return {k: v for k, v in x.items() if v}


def _horizontal_strips(mu, k: int, box: BoxParams):
    """Partitions ``lam`` in ``box`` with ``lam/mu`` a horizontal strip of ``k`` boxes."""
    mu = list(mu) + [0] * (box.d - len(mu))
    w = box.width

    def rec(i, left, prefix):
        if i == box.d:
            if left == 0:
                yield partition(prefix)
            return
        cap = w if i == 0 else mu[i - 1]
        for add in range(min(left, cap - mu[i]) + 1):
            yield from rec(i + 1, left - add, prefix + [mu[i] + add])

    yield from rec(0, k, [])


def pieri_multiply(x: SchurExpansion, k: int, box: BoxParams) -> SchurExpansion:
    """``x * h_k``; classes pushed out of the box vanish."""
    if not 0 <= k <= box.width:
        raise ValueError(f"h_{k} is not a class of the {box.d}x{box.width} box")
    out: dict = {}
    for mu, coef in x.items():
        for lam in _horizontal_strips(mu, k, box):
            out[lam] = out.get(lam, 0) + coef
    return _prune(out)


def _h_times(x: SchurExpansion, k: int, box: BoxParams) -> SchurExpansion:
    if k < 0 or k > box.width:
        return {}
    return pieri_multiply(x, k, box)


def _perm_sign(p) -> int:
    sign = 1
    p = list(p)
    for i in range(len(p)):
        while p[i] != i:
            j = p[i]
            p[i], p[j] = p[j], p[i]
            sign = -sign
    return sign


def multiply_by_schur(x: SchurExpansion, nu, box: BoxParams) -> SchurExpansion:
    """``x * s_nu`` through the Jacobi-Trudi determinant, expanded as a permutation sum."""
    nu = partition(nu)
    ell = len(nu)
    total: dict = {}
    for perm in itertools.permutations(range(ell)):
        term = dict(x)
        for i, j in enumerate(perm):
            term = _h_times(term, nu[i] + j - i, box)
            if not term:
                break
        if not term:
            continue
        sign = _perm_sign(perm)
        for lam, c in term.items():
            total[lam] = total.get(lam, 0) + sign * c
    return _prune(total)


def schur_via_jacobi_trudi(nu, box: BoxParams) -> SchurExpansion:
    """``s_nu`` recovered from the determinant acting on ``s_empty``."""
    if not box.fits(nu):
        raise ValueError(f"{nu} does not fit the box")
    return multiply_by_schur({(): 1}, nu, box)


@lru_cache(maxsize=None)
def _product(nu, mu, d: int, n: int) -> tuple:
    box = BoxParams(d, n)
    return tuple(sorted(multiply_by_schur({partition(mu): 1}, nu, box).items()))


def lr_coefficient_algebra(nu, mu, lam, box: BoxParams) -> int:
    """Coefficient of ``s_lam`` in ``s_nu * s_mu``."""
    nu, mu, lam = partition(nu), partition(mu), partition(lam)
    for p in (nu, mu, lam):
        if not box.fits(p):
            raise ValueError(f"{p} does not fit the box")
    value = dict(_product(nu, mu, box.d, box.n)).get(lam, 0)
    if value and size(nu) + size(mu) != size(lam):
        raise AssertionError("nonzero coefficient in the wrong degree")
    return value


def triple_intersection(nu, mu, gamma, box: BoxParams) -> int:
    """The symmetric number ``a_{nu mu gamma}``: coefficient of ``s_{gamma^v}`` in ``s_nu s_mu``."""
    return lr_coefficient_algebra(nu, mu, complement(gamma, box), box)


# --- three-way comparison ------------------------------------------------------


@dataclass
class ThreeWay:
    nu: tuple
    mu: tuple
    lam: tuple
    puzzle: int
    tableau: int
    algebra: int

    @property
    def agree(self) -> bool:
        return self.puzzle == self.tableau == self.algebra

    def to_json(self) -> dict:
        return {
            "nu": list(self.nu),
            "mu": list(self.mu),
            "lambda": list(self.lam),
            "puzzle": self.puzzle,
            "tableau": self.tableau,
            "algebra": self.algebra,
            "agree": self.agree,
        }


def coefficient_three_way(nu, mu, lam, box: BoxParams) -> ThreeWay:
    """``a_{nu mu}^lam`` by puzzles, by LR tableaux and by the algebra oracle."""
    nu, mu, lam = partition(nu), partition(mu), partition(lam)
    strings = tuple(string_of_partition(p, box) for p in (nu, mu, complement(lam, box)))
    b = len(puzzles.enumerate_puzzles(strings))
    c = lr_count(nu, mu, lam)
    a = lr_coefficient_algebra(nu, mu, lam, box)
    return ThreeWay(nu, mu, lam, b, c, a)


def _three_way_row(args):
    d, n, nu, mu = args
    box = BoxParams(d, n)
    return [coefficient_three_way(nu, mu, lam, box) for lam in partitions_in_box(box)]


def three_way_sweep(box: BoxParams, workers: int = 1) -> list[ThreeWay]:
    """Every triple in the box.  Puzzle counts come from one exhaustive enumeration."""
    parts = partitions_in_box(box)
    counts = puzzles.puzzle_counts(box.n)
    if workers > 1:
        jobs = [(box.d, box.n, nu, mu) for nu in parts for mu in parts]
        with ProcessPoolExecutor(max_workers=workers) as ex:
            return [r for row in ex.map(_three_way_row, jobs) for r in row]
    out = []
    for nu, mu, lam in itertools.product(parts, repeat=3):
        s = tuple(string_of_partition(p, box) for p in (nu, mu, complement(lam, box)))
        out.append(
            ThreeWay(nu, mu, lam, counts.get(s, 0), lr_count(nu, mu, lam), lr_coefficient_algebra(nu, mu, lam, box))
        )
    return out


# --- identities ----------------------------------------------------------------


@dataclass
class IdentityReport:
    identity: str
    box: BoxParams
    cases: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "identity": self.identity,
            "box": {"d": self.box.d, "n": self.box.n},
            "cases": self.cases,
            "failures": self.failures,
            "ok": self.ok,
        }


def _commutativity(box, report):
    parts = partitions_in_box(box)
    for nu, mu, lam in itertools.product(parts, repeat=3):
        report.cases += 1
        x = lr_coefficient_algebra(nu, mu, lam, box)
        y = lr_coefficient_algebra(mu, nu, lam, box)
        if x != y:
            report.failures.append({"nu": nu, "mu": mu, "lambda": lam, "lhs": x, "rhs": y})


def _associativity(box, report):
    parts = partitions_in_box(box)
    a = lambda x, y, z: lr_coefficient_algebra(x, y, z, box)  # noqa: E731
    for nu, mu, xi, lam in itertools.product(parts, repeat=4):
        report.cases += 1
        lhs = sum(a(nu, mu, k) * a(xi, k, lam) for k in parts)
        rhs = sum(a(mu, xi, k) * a(k, nu, lam) for k in parts)
        if lhs != rhs:
            report.failures.append({"nu": nu, "mu": mu, "xi": xi, "lambda": lam, "lhs": lhs, "rhs": rhs})


def _bipuzzle(box, report):
    strings = [string_of_partition(p, box) for p in partitions_in_box(box)]
    b = puzzles.puzzle_counts(box.n)
    bp: dict = {}
    for q in puzzles.all_puzzles(box.n, region=puzzles.RHOMBUS_REGION):
        key = q.boundary()
        bp[key] = bp.get(key, 0) + 1
    for pi, rho, sigma, tau in itertools.product(strings, repeat=4):
        report.cases += 1
        lhs = bp.get((pi, rho, sigma, tau), 0)
        rhs = sum(b.get((rho, sigma, u[::-1]), 0) * b.get((pi, u, tau), 0) for u in strings)
        if lhs != rhs:
            report.failures.append({"boundary": [pi, rho, sigma, tau], "lhs": lhs, "rhs": rhs})


def _bitableau(box, report):
    parts = partitions_in_box(box)
    for mu, lam in itertools.product(parts, repeat=2):
        if not contains(lam, mu):
            continue
        shape = SkewShape(lam, mu)
        for xi, nu in itertools.product(parts, repeat=2):
            report.cases += 1
            lhs = len(enumerate_lr_bitableaux(shape, xi, nu))
            rhs = sum(lr_count(nu, mu, k) * lr_count(xi, k, lam) for k in partitions_between(mu, lam))
            if lhs != rhs:
                report.failures.append({"xi": xi, "nu": nu, "mu": mu, "lambda": lam, "lhs": lhs, "rhs": rhs})


IDENTITIES = {
    "commutativity": _commutativity,
    "associativity": _associativity,
    "bipuzzle": _bipuzzle,
    "bitableau": _bitableau,
}


def verify_identities(box: BoxParams, which: str) -> IdentityReport:
    if which not in IDENTITIES:
        raise ValueError(f"unknown identity {which!r}; choose from {sorted(IDENTITIES)}")
    report = IdentityReport(which, box)
    IDENTITIES[which](box, report)
    return report


def string_triple_to_partitions(strings, box: BoxParams) -> tuple:
    return tuple(partition_of_string(s, box) for s in strings)
