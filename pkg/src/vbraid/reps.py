"""Representations and projections of virtual braid words.

Evaluation convention, shared by all maps here: in a word l1 l2 ... lk the
LEFTMOST letter acts first, i.e. the word maps to the composition
rho(lk) o ... o rho(l1) (for matrices acting on column vectors, the product
M(lk) ... M(l1)). This is the convention under which the literal generator
matrices and automorphism formulas satisfy all presented relations,
including the braid-permutation relation s_i s_{i+1} z_i = z_{i+1} s_i s_{i+1};
the mirrored convention breaks exactly that relation.

Burau generator images (classical crossing and virtual crossing):

    s_i -> identity with the 2x2 block [[1-t, t], [1, 0]]   at rows i, i+1
    z_i -> identity with the 2x2 block [[0, 1], [1, 0]]     at rows i, i+1

Computed determinants are det(Burau(s_i)) = -t and det(Burau(z_i)) = -1.
(The source presentation of these matrices states the two values with the
attribution swapped; the computed values are used throughout, and the
abelianization onto Z/2 + Z is unaffected.)
"""

from __future__ import annotations

from dataclasses import dataclass

from .braidword import Flavor, GroupWord, Letter
from .errors import FlavorError, SizeMismatchError
from .freegrp import FreeAut, FreeWord, aut_compose
from .laurent import ONE, T, T_INV, LaurentPoly
from .lpmatrix import LPMatrix
from .perm import Permutation, p_compose, p_transposition

_REP_FLAVORS = frozenset({Flavor.BR, Flavor.SYM, Flavor.VB, Flavor.BP})


def _require_rep_flavor(w: GroupWord):
    if w.flavor not in _REP_FLAVORS:
        raise FlavorError(
            f"no representation is defined for flavor {w.flavor.value}"
        )


def to_bp(w: GroupWord) -> GroupWord:
    """The epimorphism VB_n -> BP_n: the same letters read in BP."""
    if w.flavor is not Flavor.VB:
        raise FlavorError(f"to_bp expects a vb word, got {w.flavor.value}")
    return GroupWord(Flavor.BP, w.n, w.letters)


_ONE_MINUS_T = ONE - T
_ONE_MINUS_TINV = ONE - T_INV


def burau_generator(letter: Letter, n: int) -> LPMatrix:
    """The full n x n Burau image of a single generator letter."""
    i = letter.index
    m = [[ONE if r == c else LaurentPoly.zero() for c in range(n)] for r in range(n)]
    r0, r1 = i - 1, i
    if letter.kind == "z":
        block = ((LaurentPoly.zero(), ONE), (ONE, LaurentPoly.zero()))
    elif letter.exponent == 1:
        block = ((_ONE_MINUS_T, T), (ONE, LaurentPoly.zero()))
    else:
        block = ((LaurentPoly.zero(), ONE), (T_INV, _ONE_MINUS_TINV))
    m[r0][r0], m[r0][r1] = block[0]
    m[r1][r0], m[r1][r1] = block[1]
    return LPMatrix(m)


def burau(w: GroupWord, n: int | None = None) -> LPMatrix:
    """Burau image of a word: the product M(lk) ... M(l1) of generator matrices.

    Each generator matrix is the identity outside one 2x2 block, so the
    product is built by in-place row updates instead of full products.
    """
    _require_rep_flavor(w)
    if n is None:
        n = w.n
    if n != w.n:
        raise SizeMismatchError(f"word has {w.n} strands, asked for n={n}")
    zero = LaurentPoly.zero()
    rows = [[ONE if r == c else zero for c in range(n)] for r in range(n)]
    for lt in w.letters:
        i = lt.index - 1
        ri, rj = rows[i], rows[i + 1]
        if lt.kind == "z":
            rows[i], rows[i + 1] = rj, ri
        elif lt.exponent == 1:
            # left-multiply by the s_i block: new row_i = (1-t) r_i + t r_j,
            # new row_{i+1} = r_i
            rows[i] = [_ONE_MINUS_T * a + T * b for a, b in zip(ri, rj)]
            rows[i + 1] = ri
        else:
            # inverse block [[0, 1], [t^-1, 1 - t^-1]]
            rows[i] = rj
            rows[i + 1] = [T_INV * a + _ONE_MINUS_TINV * b for a, b in zip(ri, rj)]
    return LPMatrix(rows)


def _aut_generator(letter: Letter, n: int) -> FreeAut:
    i = letter.index
    images = [FreeWord.generator(k) for k in range(1, n + 1)]
    xi = FreeWord.generator(i)
    xi1 = FreeWord.generator(i + 1)
    if letter.kind == "z":
        images[i - 1] = xi1
        images[i] = xi
    elif letter.exponent == 1:
        # x_i -> x_{i+1}, x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}
        images[i - 1] = xi1
        images[i] = xi1.inverse() * xi * xi1
    else:
        # explicit inverse: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i
        images[i - 1] = xi * xi1 * xi.inverse()
        images[i] = xi
    return FreeAut(n, images)


def aut_rep(w: GroupWord, n: int | None = None) -> FreeAut:
    """The representation in Aut F_n through the braid-permutation group."""
    _require_rep_flavor(w)
    if n is None:
        n = w.n
    if n != w.n:
        raise SizeMismatchError(f"word has {w.n} strands, asked for n={n}")
    acc = FreeAut.identity(n)
    for lt in w.letters:
        acc = aut_compose(_aut_generator(lt, n), acc)
    return acc


def perm_proj(w: GroupWord) -> Permutation:
    """Projection onto the symmetric group: every letter to the transposition (i, i+1)."""
    _require_rep_flavor(w)
    acc = Permutation.identity(w.n)
    for lt in w.letters:
        acc = p_compose(p_transposition(lt.index, w.n), acc)
    return acc


def exp_sum(w: GroupWord) -> int:
    """Signed count of classical crossings; z letters contribute 0."""
    return sum(lt.exponent for lt in w.letters if lt.kind == "s")


def zeta_count(w: GroupWord) -> int:
    return sum(1 for lt in w.letters if lt.kind == "z")


@dataclass(frozen=True)
class AbelianImage:
    """An element of Z/2 + Z, the common abelianization of VB_n and its Burau image."""

    zeta_parity: int
    sigma_sum: int

    def __post_init__(self):
        if self.zeta_parity not in (0, 1):
            raise ValueError("zeta_parity must be 0 or 1")

    def to_json_obj(self):
        return {"zeta_parity": self.zeta_parity, "sigma_sum": self.sigma_sum}


def abelianize(w: GroupWord) -> AbelianImage:
    if w.flavor not in (Flavor.VB, Flavor.BP):
        raise FlavorError(f"abelianize expects vb or bp, got {w.flavor.value}")
    return AbelianImage(zeta_count(w) % 2, exp_sum(w))
