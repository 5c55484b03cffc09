"""Finite permutations of {1..n}.

Composition convention, used uniformly by every representation in this
package: ``p_compose(f, g)(x) == f(g(x))``, so in a word the rightmost
letter acts on points first.
"""

from __future__ import annotations

from .errors import SizeMismatchError


class Permutation:
    """A bijection of {1..n}, stored as the tuple of images of 1..n."""

    __slots__ = ("images",)

    def __init__(self, images):
        imgs = tuple(int(x) for x in images)
        n = len(imgs)
        if sorted(imgs) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {imgs}")
        object.__setattr__(self, "images", imgs)

    def __setattr__(self, name, value):
        raise AttributeError("Permutation is immutable")

    @property
    def n(self):
        return len(self.images)

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    def __call__(self, x):
        return self.images[x - 1]

    def __eq__(self, other):
        if not isinstance(other, Permutation):
            return NotImplemented
        return self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def inverse(self):
        inv = [0] * self.n
        for i, img in enumerate(self.images, start=1):
            inv[img - 1] = i
        return Permutation(inv)

    def is_identity(self):
        return all(img == i for i, img in enumerate(self.images, start=1))

    def cycles(self):
        """Cycle decomposition, fixed points included, least element first."""
        seen = set()
        out = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            out.append(tuple(cyc))
        return out

    def cycle_notation(self):
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + " ".join(map(str, c)) + ")" for c in nontrivial)

    def __str__(self):
        return "[" + ",".join(map(str, self.images)) + "]"

    def __repr__(self):
        return f"Permutation({list(self.images)})"


def p_compose(f: Permutation, g: Permutation) -> Permutation:
    """f after g: the result maps x to f(g(x))."""
    if f.n != g.n:
        raise SizeMismatchError(f"cannot compose permutations of sizes {f.n} and {g.n}")
    return Permutation(f(g(x)) for x in range(1, f.n + 1))


def p_transposition(i: int, n: int) -> Permutation:
    """The transposition swapping i and i+1 in {1..n}."""
    if not 1 <= i <= n - 1:
        raise IndexError(f"transposition index {i} out of range for n={n}")
    images = list(range(1, n + 1))
    images[i - 1], images[i] = images[i], images[i - 1]
    return Permutation(images)


def p_is_cycle(f: Permutation) -> bool:
    """True iff f is a single n-cycle (the identity counts only for n=1)."""
    return len(f.cycles()) == 1
