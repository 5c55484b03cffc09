"""The juxtaposition pairing and the block-swap symmetry.

Placing braids side by side is a pairing VB_m x VB_n -> VB_{m+n}; the word
zeta_block(m, n) of virtual crossings moves one block past the other and
makes the construction symmetric. This script checks block-diagonality
under Burau, the inverse law of the symmetry, naturality, and the two
coherence identities on concrete sizes.
"""

from vbraid import (
    LPMatrix,
    aut_rep,
    block_diag,
    burau,
    check_coherence,
    check_naturality,
    mu,
    parse_word,
    perm_proj,
    zeta_block,
)


def main():
    w1 = parse_word("s1 z1", "vb", 2)
    w2 = parse_word("s2^-1 z1", "vb", 3)
    paired = mu(w1, w2)
    print(f"mu({w1}, {w2}) = {paired}  on {paired.n} strands")
    assert burau(paired) == block_diag(burau(w1), burau(w2))
    print("Burau of the pairing is block diagonal: OK")

    for m, n in [(1, 1), (2, 1), (2, 3), (3, 3)]:
        z = zeta_block(m, n)
        print(f"\nzeta_block({m},{n}) = {z}")
        print(f"  underlying permutation: {perm_proj(z)}")
        round_trip = z.concat(zeta_block(n, m))
        assert perm_proj(round_trip) == type(perm_proj(z)).identity(m + n)
        assert burau(round_trip) == LPMatrix.identity(m + n)
        assert aut_rep(round_trip).is_identity()
        print(f"  zeta_block({m},{n}) . zeta_block({n},{m}) acts as the identity")

    assert check_naturality(2, 3, w1, w2)
    print("\nnaturality: conjugation by the symmetry swaps the two factors: OK")

    assert all(
        check_coherence(m, n, q) for m in range(5) for n in range(5) for q in range(5)
    )
    print("coherence identities B1 and B2 hold for all m, n, q <= 4: OK")


if __name__ == "__main__":
    main()
