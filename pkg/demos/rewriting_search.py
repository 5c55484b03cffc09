"""Word equivalence by bounded bidirectional search over the relators.

Shows a derivation witness for words that are provably equal, and the
honest "unknown" answer for the forbidden pair that distinguishes the
virtual braid group from the braid-permutation group.
"""

from vbraid import bfs_equal, parse_word, relators, replay_witness, rewrite_rules


def demonstrate(flavor, n, text1, text2, depth):
    w1 = parse_word(text1, flavor, n)
    w2 = parse_word(text2, flavor, n)
    result = bfs_equal(w1, w2, depth)
    print(f"\n{flavor}_{n}:  {text1!r}  vs  {text2!r}  (depth {depth})")
    if not result.equal:
        print("  -> unknown within the search bound")
        return
    print(f"  -> equal, witness of {len(result.witness)} step(s):")
    rules = rewrite_rules(w1.flavor, n)
    current = w1
    for step in result.witness:
        arrow = "->" if step.direction == 1 else "<-"
        print(f"     apply {step.rule} {arrow} at position {step.position}")
    assert replay_witness(w1, result.witness, rules) == w2
    print("  witness replays exactly")


def main():
    # the braid relation among virtual generators: one rewrite suffices
    demonstrate("sym", 3, "z1 z2 z1", "z2 z1 z2", depth=1)

    # a mixed derivation needing several steps
    demonstrate("vb", 3, "z1 z1 s1 s2 s1", "s2 s1 s2", depth=2)

    # free cancellation is part of the rewrite system
    demonstrate("vb", 2, "s1 s1^-1 z1 z1", "", depth=2)

    # the forbidden move does NOT hold in VB_3 ...
    demonstrate("vb", 3, "s1 s2 z1", "z2 s1 s2", depth=4)

    # ... but is a defining relation of BP_3
    demonstrate("bp", 3, "s1 s2 z1", "z2 s1 s2", depth=1)

    # singular braid monoid words are searched over the monoid relators
    demonstrate("sb", 3, "a1 s2 s1", "a1 s2 s1", depth=0)
    demonstrate("sb", 3, "s1 s2 a1", "a2 s1 s2", depth=1)

    n = 3
    count = sum(len(relators(f, n).relators) for f in ("vb", "bp", "sb", "sg"))
    print(f"\nrelator database sizes at n={n} (vb+bp+sb+sg): {count} relators")


if __name__ == "__main__":
    main()
