"""Words over the generator alphabets of Br_n, Sigma_n, VB_n, BP_n, SB_n, SG_n.

Provides the relator database for each presentation, free reduction, and a
bounded bidirectional search for word equality with replayable witnesses.

Letter grammar (whitespace-separated): ``s``/``z``/``a`` + index + optional
``^-1``, e.g. ``"s1 s2^-1 z1"``. Virtual letters ``z`` are involutions, so
``z_i^-1`` is normalized to ``z_i`` at parse time.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Optional

from .errors import (
    FlavorError,
    IndexOutOfRangeError,
    InverseNotAllowedError,
    LetterNotAllowedError,
    MonoidHasNoInversesError,
    SizeMismatchError,
    WordSyntaxError,
)


class Flavor(str, Enum):
    BR = "br"    # classical braid group
    SYM = "sym"  # symmetric group (virtual letters only)
    VB = "vb"    # virtual braid group
    BP = "bp"    # braid-permutation group
    SB = "sb"    # singular braid (Baez-Birman) monoid
    SG = "sg"    # singular braid group


# kinds: "s" classical crossing, "z" virtual crossing / welded letter,
# "a" singular generator
_ALLOWED_KINDS = {
    Flavor.BR: frozenset("s"),
    Flavor.SYM: frozenset("z"),
    Flavor.VB: frozenset("sz"),
    Flavor.BP: frozenset("sz"),
    Flavor.SB: frozenset("sa"),
    Flavor.SG: frozenset("sa"),
}

GROUP_FLAVORS = frozenset({Flavor.BR, Flavor.SYM, Flavor.VB, Flavor.BP, Flavor.SG})


@dataclass(frozen=True)
class Letter:
    kind: str  # "s", "z" or "a"
    index: int
    exponent: int = 1

    def __post_init__(self):
        if self.kind not in ("s", "z", "a"):
            raise ValueError(f"unknown letter kind {self.kind!r}")
        if self.index < 1:
            raise ValueError(f"letter index must be >= 1, got {self.index}")
        if self.exponent not in (1, -1):
            raise ValueError(f"letter exponent must be +-1, got {self.exponent}")
        if self.kind == "z" and self.exponent != 1:
            raise ValueError("z letters are involutions; exponent must be +1")

    def inverse(self):
        if self.kind == "z":
            return self
        return Letter(self.kind, self.index, -self.exponent)

    def __str__(self):
        suffix = "" if self.exponent == 1 else "^-1"
        return f"{self.kind}{self.index}{suffix}"


def S(i, e=1):
    return Letter("s", i, e)


def Z(i):
    return Letter("z", i)


def A(i, e=1):
    return Letter("a", i, e)


class GroupWord:
    """A word in the given flavor on n strands; immutable."""

    __slots__ = ("flavor", "n", "letters")

    def __init__(self, flavor, n, letters=()):
        flavor = Flavor(flavor)
        letters = tuple(letters)
        if n < 0:
            raise ValueError("strand count must be nonnegative")
        allowed = _ALLOWED_KINDS[flavor]
        for lt in letters:
            if lt.kind not in allowed:
                raise FlavorError(
                    f"letter kind {lt.kind!r} not allowed in flavor {flavor.value}"
                )
            if lt.index > n - 1:
                raise ValueError(
                    f"letter index {lt.index} out of range for n={n} strands"
                )
            if flavor is Flavor.SB and lt.kind == "a" and lt.exponent != 1:
                raise FlavorError("a letters are not invertible in the monoid flavor")
        object.__setattr__(self, "flavor", flavor)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "letters", letters)

    def __setattr__(self, name, value):
        raise AttributeError("GroupWord is immutable")

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, GroupWord):
            return NotImplemented
        return (
            self.flavor == other.flavor
            and self.n == other.n
            and self.letters == other.letters
        )

    def __hash__(self):
        return hash((self.flavor, self.n, self.letters))

    def __str__(self):
        return " ".join(str(lt) for lt in self.letters)

    def __repr__(self):
        return f"GroupWord({self.flavor.value!r}, {self.n}, {str(self)!r})"

    def replace(self, letters):
        return GroupWord(self.flavor, self.n, letters)

    def concat(self, other):
        if self.flavor != other.flavor or self.n != other.n:
            raise SizeMismatchError("flavor or strand count mismatch in concat")
        return self.replace(self.letters + other.letters)


_TOKEN_RE = re.compile(r"([sza])([0-9]+)(\^-1)?$")


def parse_word(text: str, flavor, n: int) -> GroupWord:
    """Parse word text, validating flavor and index constraints.

    Errors carry the 0-based character position of the offending token.
    """
    flavor = Flavor(flavor)
    allowed = _ALLOWED_KINDS[flavor]
    letters = []
    pos = 0
    for match in re.finditer(r"\S+", text):
        tok = match.group(0)
        pos = match.start()
        m = _TOKEN_RE.match(tok)
        if m is None:
            raise WordSyntaxError(f"cannot parse token {tok!r}", pos)
        kind, itext, inv = m.groups()
        index = int(itext)
        if kind not in allowed:
            raise LetterNotAllowedError(
                f"letter kind {kind!r} not allowed in flavor {flavor.value}", pos
            )
        if not 1 <= index <= n - 1:
            raise IndexOutOfRangeError(
                f"index {index} out of range 1..{n - 1}", pos
            )
        exponent = -1 if inv else 1
        if kind == "z":
            exponent = 1  # z^2 = 1, so z^-1 = z
        if kind == "a" and exponent == -1 and flavor is Flavor.SB:
            raise InverseNotAllowedError(
                "a letters have no inverses in the monoid flavor", pos
            )
        letters.append(Letter(kind, index, exponent))
    return GroupWord(flavor, n, letters)


def free_reduce(w: GroupWord) -> GroupWord:
    """Cancel adjacent inverse pairs (and adjacent equal z letters) to a fixed point.

    In the monoid flavor, a letters carry no inverses and never cancel.
    """
    stack = []
    for lt in w.letters:
        if stack and _cancels(stack[-1], lt):
            stack.pop()
        else:
            stack.append(lt)
    return w.replace(stack)


def _cancels(a: Letter, b: Letter) -> bool:
    if a.kind != b.kind or a.index != b.index:
        return False
    if a.kind == "z":
        return True
    return a.exponent == -b.exponent


def invert_word(w: GroupWord) -> GroupWord:
    if w.flavor not in GROUP_FLAVORS:
        raise MonoidHasNoInversesError(
            f"flavor {w.flavor.value} is a monoid; words have no inverses"
        )
    return w.replace(tuple(lt.inverse() for lt in reversed(w.letters)))


@dataclass(frozen=True)
class Relator:
    """A named pair of words asserted equal in the presentation."""

    name: str
    lhs: GroupWord
    rhs: GroupWord


@dataclass(frozen=True)
class Presentation:
    flavor: Flavor
    n: int
    relators: tuple  # tuple of Relator


def relators(flavor, n: int) -> Presentation:
    """Every instance of every relation schema of the presentation, for given n."""
    flavor = Flavor(flavor)
    if n < 2:
        raise ValueError("presentations require n >= 2")

    rels = []

    def add(name, lhs, rhs):
        rels.append(
            Relator(name, GroupWord(flavor, n, lhs), GroupWord(flavor, n, rhs))
        )

    has_z = "z" in _ALLOWED_KINDS[flavor]
    has_s = "s" in _ALLOWED_KINDS[flavor]
    has_a = "a" in _ALLOWED_KINDS[flavor]

    if has_z:
        for i in range(1, n):
            add(f"zeta_sq:i={i}", [Z(i), Z(i)], [])
        for i in range(1, n):
            for j in range(i + 2, n):
                add(f"zeta_comm:i={i},j={j}", [Z(i), Z(j)], [Z(j), Z(i)])
        for i in range(1, n - 1):
            add(
                f"zeta_braid:i={i}",
                [Z(i), Z(i + 1), Z(i)],
                [Z(i + 1), Z(i), Z(i + 1)],
            )

    if has_s:
        for i in range(1, n):
            for j in range(i + 2, n):
                add(f"sigma_comm:i={i},j={j}", [S(i), S(j)], [S(j), S(i)])
        for i in range(1, n - 1):
            add(
                f"sigma_braid:i={i}",
                [S(i), S(i + 1), S(i)],
                [S(i + 1), S(i), S(i + 1)],
            )

    if flavor in (Flavor.VB, Flavor.BP):
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) > 1:
                    add(f"mixed_comm:i={i},j={j}", [S(i), Z(j)], [Z(j), S(i)])
        for i in range(1, n - 1):
            add(
                f"mixed_zzs:i={i}",
                [Z(i), Z(i + 1), S(i)],
                [S(i + 1), Z(i), Z(i + 1)],
            )
    if flavor is Flavor.BP:
        for i in range(1, n - 1):
            add(
                f"mixed_ssz:i={i}",
                [S(i), S(i + 1), Z(i)],
                [Z(i + 1), S(i), S(i + 1)],
            )

    if has_a:
        for i in range(1, n):
            for j in range(i + 2, n):
                add(f"a_comm:i={i},j={j}", [A(i), A(j)], [A(j), A(i)])
        for i in range(1, n):
            for j in range(1, n):
                if abs(i - j) != 1:
                    add(f"as_comm:i={i},j={j}", [A(i), S(j)], [S(j), A(i)])
        for i in range(1, n - 1):
            add(
                f"ssa:i={i}",
                [S(i), S(i + 1), A(i)],
                [A(i + 1), S(i), S(i + 1)],
            )
            add(
                f"ssa_rev:i={i}",
                [S(i + 1), S(i), A(i + 1)],
                [A(i), S(i + 1), S(i)],
            )
        # sigma^-1 is a presentation generator of the monoid, so its
        # inverse relations are genuine relators here
        for i in range(1, n):
            add(f"sigma_inv_r:i={i}", [S(i), S(i, -1)], [])
            add(f"sigma_inv_l:i={i}", [S(i, -1), S(i)], [])
        if flavor is Flavor.SG:
            for i in range(1, n):
                add(f"a_inv_r:i={i}", [A(i), A(i, -1)], [])
                add(f"a_inv_l:i={i}", [A(i, -1), A(i)], [])

    return Presentation(flavor, n, tuple(rels))


# ---------------------------------------------------------------------------
# Bounded word-equality search
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class RewriteStep:
    """One rewrite: replace rule.lhs (direction=+1) or rule.rhs (-1) at position."""

    rule: str
    direction: int  # +1 applies lhs -> rhs, -1 applies rhs -> lhs
    position: int

    def inverted(self):
        return RewriteStep(self.rule, -self.direction, self.position)


@dataclass(frozen=True)
class EqualityResult:
    equal: bool
    witness: Optional[tuple] = None  # tuple of RewriteStep when equal

    def __bool__(self):
        return self.equal


def rewrite_rules(flavor, n: int):
    """Relators plus the free-cancellation rules of invertible generators.

    Cancellation pairs are explicit rules so every search step is a pure
    subword splice; witnesses then replay exactly by splicing.
    """
    flavor = Flavor(flavor)
    pres = relators(flavor, n)
    rules = list(pres.relators)
    existing = {r.name for r in rules}
    if flavor in GROUP_FLAVORS:

        def addc(name, seq):
            if name not in existing:
                rules.append(
                    Relator(name, GroupWord(flavor, n, seq), GroupWord(flavor, n, []))
                )

        if "s" in _ALLOWED_KINDS[flavor]:
            for i in range(1, n):
                addc(f"cancel_s_r:i={i}", [S(i), S(i, -1)])
                addc(f"cancel_s_l:i={i}", [S(i, -1), S(i)])
        if "a" in _ALLOWED_KINDS[flavor]:
            for i in range(1, n):
                addc(f"cancel_a_r:i={i}", [A(i), A(i, -1)])
                addc(f"cancel_a_l:i={i}", [A(i, -1), A(i)])
        # z cancellation is the zeta_sq relator, already present
    return tuple(rules)


def apply_step(w: GroupWord, step: RewriteStep, rules) -> GroupWord:
    """Apply one rewrite step by splicing; raises if the pattern does not match."""
    by_name = {r.name: r for r in rules}
    rule = by_name[step.rule]
    src, dst = (
        (rule.lhs, rule.rhs) if step.direction == 1 else (rule.rhs, rule.lhs)
    )
    p = step.position
    if w.letters[p : p + len(src)] != src.letters:
        raise ValueError(f"step {step} does not match word {w}")
    return w.replace(w.letters[:p] + dst.letters + w.letters[p + len(src) :])


def replay_witness(w: GroupWord, witness, rules) -> GroupWord:
    for step in witness:
        w = apply_step(w, step, rules)
    return w


def _neighbors(letters, rules, max_len):
    for rule in rules:
        for src, dst, direction in (
            (rule.lhs.letters, rule.rhs.letters, 1),
            (rule.rhs.letters, rule.lhs.letters, -1),
        ):
            if len(letters) - len(src) + len(dst) > max_len:
                continue
            for p in range(len(letters) - len(src) + 1):
                if letters[p : p + len(src)] == src:
                    yield (
                        letters[:p] + dst + letters[p + len(src) :],
                        RewriteStep(rule.name, direction, p),
                    )


def bfs_equal(
    w1: GroupWord, w2: GroupWord, depth: int = 6, max_len: Optional[int] = None
) -> EqualityResult:
    """Bidirectional breadth-first search over the rewrite graph.

    Returns Equal with a witness replaying w1 into w2, or Unknown if no
    derivation of at most `depth` rewrite steps exists within the length cap.
    Unknown is never a claim of inequality. Exploration order (rules in
    database order, positions left to right) makes the witness deterministic.
    """
    if w1.flavor != w2.flavor or w1.n != w2.n:
        raise SizeMismatchError("words must share flavor and strand count")
    if max_len is None:
        max_len = max(len(w1), len(w2)) + 2 * depth
    rules = rewrite_rules(w1.flavor, w1.n)

    if w1.letters == w2.letters:
        return EqualityResult(True, ())

    # forward paths are steps from w1; backward paths are steps from w2,
    # inverted and reversed on meeting
    fwd = {w1.letters: ()}
    bwd = {w2.letters: ()}
    frontier_f = [w1.letters]
    frontier_b = [w2.letters]
    used = 0

    while used < depth and (frontier_f or frontier_b):
        # expand the smaller frontier; ties expand forward for determinism
        expand_forward = len(frontier_f) <= len(frontier_b)
        frontier = frontier_f if expand_forward else frontier_b
        seen = fwd if expand_forward else bwd
        other = bwd if expand_forward else fwd
        new_frontier = []
        for letters in frontier:
            path = seen[letters]
            for nxt, step in _neighbors(letters, rules, max_len):
                if nxt in seen:
                    continue
                seen[nxt] = path + (step,)
                if nxt in other:
                    if expand_forward:
                        fpath, bpath = seen[nxt], other[nxt]
                    else:
                        fpath, bpath = other[nxt], seen[nxt]
                    witness = fpath + tuple(
                        s.inverted() for s in reversed(bpath)
                    )
                    return EqualityResult(True, witness)
                new_frontier.append(nxt)
        if expand_forward:
            frontier_f = new_frontier
        else:
            frontier_b = new_frontier
        used += 1

    return EqualityResult(False, None)
