"""A tour of the Burau representation on virtual braid words.

Builds a few words, shows their matrices over Z[t, t^-1], and checks the
determinant law det = (-t)^(exponent sum) * (-1)^(virtual count) on the fly.
"""

from vbraid import (
    LaurentPoly,
    LPMatrix,
    burau,
    exp_sum,
    mat_det,
    mat_inverse,
    mat_mul,
    parse_word,
    zeta_count,
)


def show(title, matrix):
    print(f"\n{title}")
    for row in matrix.entries:
        print("  [" + ", ".join(str(p) for p in row) + "]")


def main():
    sigma = parse_word("s1", "vb", 2)
    zeta = parse_word("z1", "vb", 2)
    show("Burau(s1) in VB_2", burau(sigma))
    show("Burau(z1) in VB_2", burau(zeta))
    print("\ndet Burau(s1) =", mat_det(burau(sigma)))
    print("det Burau(z1) =", mat_det(burau(zeta)))

    w = parse_word("s1 z2 s2^-1 s1 z1", "vb", 3)
    m = burau(w)
    show(f"Burau({w}) in VB_3", m)

    d = mat_det(m)
    minus_t = LaurentPoly({1: -1})
    minus_one = LaurentPoly({0: -1})
    predicted = minus_t ** exp_sum(w) * minus_one ** zeta_count(w)
    print("\ndet =", d)
    print("(-t)^exp_sum * (-1)^zeta_count =", predicted)
    assert d == predicted

    inv = mat_inverse(m)
    show("inverse matrix", inv)
    assert mat_mul(m, inv) == LPMatrix.identity(3)
    print("\nmatrix times its inverse is the identity: OK")


if __name__ == "__main__":
    main()
