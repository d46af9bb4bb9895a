"""Named finite spaces used by tests, the CLI and the scenario library.

The continuum examples are discretized with the smallest point sets that keep
their failing interior computation:

- STAR: an isolated point s below the middle point z of a three-point line m, z, p;
  z only lies in the open {m, z, p}, so ↑{s} = {s, z} is not open.
- LVFAIL: two components a0 ≤ b0 and a1 ≤ b1 next to b-1; b0 only lies in opens
  containing both b-1 and b1, so the future of {a0, a1} loses exactly b0.
"""

import random

from ordered_locale_lab.space.finite_space import FiniteSpace, build_space


def chain3() -> FiniteSpace:
    """Three points a ≤ b ≤ c, discrete."""
    return build_space("CHAIN3", ["a", "b", "c"], [("a", "b"), ("b", "c")])


def vee() -> FiniteSpace:
    """x ≤ z and y ≤ z, discrete."""
    return build_space("VEE", ["x", "y", "z"], [("x", "z"), ("y", "z")])


def star() -> FiniteSpace:
    return build_space(
        "STAR",
        ["s", "m", "z", "p"],
        [("s", "z")],
        [["m"], ["p"], ["m", "z", "p"], ["s"]],
    )


def lvfail() -> FiniteSpace:
    return build_space(
        "LVFAIL",
        ["a0", "a1", "b-1", "b0", "b1"],
        [("a0", "b0"), ("a1", "b1")],
        [["a0", "a1"], ["a1"], ["b-1"], ["b1"], ["b-1", "b0", "b1"]],
    )


SPACES = {
    "CHAIN3": chain3,
    "VEE": vee,
    "STAR": star,
    "LVFAIL": lvfail,
}


def random_space(rng: random.Random, n: int, discrete: bool = True) -> FiniteSpace:
    """Random preorder on n points, discrete or generated by a random subbase.

    Args:
        rng: Seeded generator
        n: Point count
        discrete: If False, 1..n random nonempty sets form the subbase
    """
    points = [f"p{i}" for i in range(n)]
    pairs = [(points[i], points[j]) for i in range(n) for j in range(n) if i != j and rng.random() < 0.25]
    subbase = None
    if not discrete:
        subbase = [
            [p for p in points if rng.random() < 0.4] or [rng.choice(points)]
            for _ in range(rng.randint(1, n))
        ]
    return build_space(f"RANDOM{n}", points, pairs, subbase)
