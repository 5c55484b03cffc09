"""Relation verification harness.

Runs every relator of a presentation through every applicable map and
reports exact pass/fail per (relator, check). Group flavors with
representations are checked there; the monoid flavors, which carry no
matrix or automorphism image here, are checked by the bounded rewrite
search instead.
"""

from __future__ import annotations

from dataclasses import dataclass

from .braidword import Flavor, Presentation, bfs_equal, relators
from .reps import abelianize, aut_rep, burau, exp_sum, perm_proj


def _check_burau(lhs, rhs):
    return burau(lhs) == burau(rhs)


def _check_aut(lhs, rhs):
    return aut_rep(lhs) == aut_rep(rhs)


def _check_perm(lhs, rhs):
    return perm_proj(lhs) == perm_proj(rhs)


def _check_exp_sum(lhs, rhs):
    return exp_sum(lhs) == exp_sum(rhs)


def _check_abelianize(lhs, rhs):
    return abelianize(lhs) == abelianize(rhs)


def _check_bfs(lhs, rhs):
    return bool(bfs_equal(lhs, rhs, depth=2))


_CHECKS = {
    "burau": _check_burau,
    "aut": _check_aut,
    "perm": _check_perm,
    "exp_sum": _check_exp_sum,
    "abelianize": _check_abelianize,
    "bfs": _check_bfs,
}

CHECKS_BY_FLAVOR = {
    Flavor.VB: ("burau", "aut", "perm", "exp_sum", "abelianize"),
    Flavor.BP: ("burau", "aut", "perm", "exp_sum", "abelianize"),
    Flavor.BR: ("burau", "aut", "perm", "exp_sum"),
    Flavor.SYM: ("burau", "aut", "perm", "exp_sum"),
    Flavor.SB: ("bfs",),
    Flavor.SG: ("bfs",),
}


@dataclass(frozen=True)
class CheckRecord:
    n: int
    relator: str
    check: str
    passed: bool

    def to_json_obj(self):
        return {
            "n": self.n,
            "relator": self.relator,
            "check": self.check,
            "passed": self.passed,
        }

    def line(self):
        status = "PASS" if self.passed else "FAIL"
        return f"n={self.n} {self.relator} {self.check} {status}"


def verify_presentation(pres: Presentation, checks=None):
    """Run the chosen checks on every relator; records in database order."""
    if checks is None:
        checks = CHECKS_BY_FLAVOR[pres.flavor]
    else:
        allowed = set(CHECKS_BY_FLAVOR[pres.flavor])
        bad = [c for c in checks if c not in allowed]
        if bad:
            raise ValueError(
                f"checks {bad} not applicable to flavor {pres.flavor.value}"
            )
    records = []
    for rel in pres.relators:
        for name in checks:
            passed = _CHECKS[name](rel.lhs, rel.rhs)
            records.append(CheckRecord(pres.n, rel.name, name, passed))
    return records


def verify_range(flavor, n_lo: int, n_hi: int, checks=None):
    """Verify the flavor's presentations for every n in [n_lo, n_hi]."""
    flavor = Flavor(flavor)
    records = []
    for n in range(n_lo, n_hi + 1):
        records.extend(verify_presentation(relators(flavor, n), checks))
    return records
