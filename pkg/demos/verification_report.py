"""Exhaustive relator verification across all flavors.

Every defining relation of each presentation is pushed through every
applicable map (Burau matrices, free-group automorphisms, permutations,
exponent sum, abelianization, or the bounded rewrite search for the
monoid flavors) and reported line by line.
"""

from vbraid import Flavor, verify_range


def main():
    total = 0
    failed = 0
    for flavor in Flavor:
        records = verify_range(flavor, 2, 5)
        bad = [r for r in records if not r.passed]
        total += len(records)
        failed += len(bad)
        print(f"{flavor.value:>3}: {len(records) - len(bad)}/{len(records)} checks pass")
        for r in bad:
            print("  " + r.line())
    print(f"\n{total - failed}/{total} checks pass overall")
    if failed:
        raise SystemExit(1)


if __name__ == "__main__":
    main()
