"""Reduced words in the free group F_n and endomorphisms given by generator images.

A FreeWord is a sequence of (generator index, exponent) pairs with
exponents +-1, kept freely reduced at all times. A FreeAut is determined
by the images of the generators x_1..x_n; composition follows the same
"rightmost acts first" convention as the rest of the package:
``aut_compose(f, g)`` applies g first.
"""

from __future__ import annotations

from .errors import SizeMismatchError


def _reduce(letters):
    stack = []
    for gen, exp in letters:
        if stack and stack[-1][0] == gen and stack[-1][1] == -exp:
            stack.pop()
        else:
            stack.append((gen, exp))
    return tuple(stack)


class FreeWord:
    """A freely reduced word in F_n; the rank is implicit in usage context."""

    __slots__ = ("letters",)

    def __init__(self, letters=()):
        checked = []
        for gen, exp in letters:
            gen = int(gen)
            exp = int(exp)
            if gen < 1 or exp not in (1, -1):
                raise ValueError(f"bad free-group letter ({gen}, {exp})")
            checked.append((gen, exp))
        object.__setattr__(self, "letters", _reduce(checked))

    def __setattr__(self, name, value):
        raise AttributeError("FreeWord is immutable")

    @classmethod
    def generator(cls, i, exp=1):
        return cls([(i, exp)])

    @classmethod
    def empty(cls):
        return cls()

    def __len__(self):
        return len(self.letters)

    def __eq__(self, other):
        if not isinstance(other, FreeWord):
            return NotImplemented
        return self.letters == other.letters

    def __hash__(self):
        return hash(self.letters)

    def __mul__(self, other):
        return fw_concat(self, other)

    def inverse(self):
        out = FreeWord.__new__(FreeWord)
        object.__setattr__(out, "letters", tuple((g, -e) for g, e in reversed(self.letters)))
        return out

    def max_generator(self):
        return max((g for g, _ in self.letters), default=0)

    def __str__(self):
        if not self.letters:
            return "1"
        return " ".join(f"x{g}" if e == 1 else f"x{g}^-1" for g, e in self.letters)

    def __repr__(self):
        return f"FreeWord({list(self.letters)})"

    @classmethod
    def parse(cls, text):
        """Parse the textual form produced by __str__, e.g. "x1 x2^-1"."""
        if text.strip() in ("", "1"):
            return cls()
        letters = []
        for tok in text.split():
            body = tok
            exp = 1
            if "^" in tok:
                body, _, etext = tok.partition("^")
                exp = int(etext)
            if not body.startswith("x"):
                raise ValueError(f"bad free-word token {tok!r}")
            letters.append((int(body[1:]), exp))
        return cls(letters)


def fw_concat(u: FreeWord, v: FreeWord) -> FreeWord:
    """Concatenation followed by free reduction."""
    letters = list(u.letters)
    for gen, exp in v.letters:
        if letters and letters[-1][0] == gen and letters[-1][1] == -exp:
            letters.pop()
        else:
            letters.append((gen, exp))
    out = FreeWord.__new__(FreeWord)
    object.__setattr__(out, "letters", tuple(letters))
    return out


class FreeAut:
    """An endomorphism of F_n given by generator images (here always invertible)."""

    __slots__ = ("n", "images")

    def __init__(self, n, images):
        images = tuple(images)
        if len(images) != n:
            raise SizeMismatchError(f"expected {n} images, got {len(images)}")
        for img in images:
            if img.max_generator() > n:
                raise SizeMismatchError("image mentions a generator beyond the rank")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "images", images)

    def __setattr__(self, name, value):
        raise AttributeError("FreeAut is immutable")

    @classmethod
    def identity(cls, n):
        return cls(n, [FreeWord.generator(i) for i in range(1, n + 1)])

    def is_identity(self):
        return all(
            img.letters == ((i, 1),) for i, img in enumerate(self.images, start=1)
        )

    def __eq__(self, other):
        if not isinstance(other, FreeAut):
            return NotImplemented
        return self.n == other.n and self.images == other.images

    def __hash__(self):
        return hash((self.n, self.images))

    def __str__(self):
        return "\n".join(f"x{i} -> {img}" for i, img in enumerate(self.images, start=1))

    def __repr__(self):
        return f"FreeAut({self.n}, {[str(i) for i in self.images]})"


def aut_apply(f: FreeAut, w: FreeWord) -> FreeWord:
    """Substitute generator images into w and freely reduce."""
    if w.max_generator() > f.n:
        raise SizeMismatchError("word mentions a generator beyond the rank")
    out = FreeWord.empty()
    for gen, exp in w.letters:
        img = f.images[gen - 1]
        out = fw_concat(out, img if exp == 1 else img.inverse())
    return out


def aut_compose(f: FreeAut, g: FreeAut) -> FreeAut:
    """f after g: x_i -> f(g(x_i))."""
    if f.n != g.n:
        raise SizeMismatchError(f"cannot compose automorphisms of ranks {f.n} and {g.n}")
    return FreeAut(f.n, [aut_apply(f, img) for img in g.images])
