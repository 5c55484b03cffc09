import random

from vbraid.braidword import Flavor, GroupWord, Letter


def random_letter(rng, flavor, n):
    flavor = Flavor(flavor)
    kinds = {
        Flavor.BR: "s",
        Flavor.SYM: "z",
        Flavor.VB: "sz",
        Flavor.BP: "sz",
        Flavor.SB: "sa",
        Flavor.SG: "sa",
    }[flavor]
    kind = rng.choice(kinds)
    index = rng.randrange(1, n)
    if kind == "z":
        return Letter("z", index)
    if kind == "a" and flavor is Flavor.SB:
        return Letter("a", index)
    return Letter(kind, index, rng.choice((1, -1)))


def random_word(rng, flavor, n, length):
    return GroupWord(flavor, n, [random_letter(rng, flavor, n) for _ in range(length)])


def make_rng(seed=0):
    return random.Random(seed)
