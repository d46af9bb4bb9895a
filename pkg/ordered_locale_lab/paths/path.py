"""Localic paths and the refinement preorder.

A path is a finite sequence of nonempty opens p_0 ⊴ p_1 ⊴ … ⊴ p_N. A path q
refines p (q ⋐ p) when every step of p contains some step of q.
"""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field

from ordered_locale_lab.errors import PathError
from ordered_locale_lab.locales.ordered_locale import OrderedLocale
from ordered_locale_lab.space.bitmask import Mask, canonical_key, is_subset


@dataclass(frozen=True)
class Path:
    """A validated localic path; build it with make_path.

    Attributes:
        steps: Nonempty opens, consecutive steps related by ⊴
        locale: Locale the path lives in (not part of equality)
    """

    steps: tuple[Mask, ...]
    locale: OrderedLocale = field(compare=False, repr=False)

    @property
    def start(self) -> Mask:
        """p_⊥."""
        return self.steps[0]

    @property
    def end(self) -> Mask:
        """p_⊤."""
        return self.steps[-1]

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[Mask]:
        return iter(self.steps)

    def __getitem__(self, index: int) -> Mask:
        return self.steps[index]

    def labels(self) -> list[list[str]]:
        """Steps as point-label lists (the JSON path format)."""
        return [self.locale.space.labels(s) for s in self.steps]

    def format(self) -> str:
        return "(" + ",".join(self.locale.format(s) for s in self.steps) + ")"


@dataclass(frozen=True)
class RefinementWitness:
    """assignment[n] is the index of a fine step contained in coarse step n."""

    assignment: tuple[int, ...]

    def holds(self, fine: Path, coarse: Path) -> bool:
        """Re-check containment at every assigned pair."""
        return len(self.assignment) == len(coarse) and all(
            0 <= m < len(fine) and is_subset(fine[m], coarse[n]) for n, m in enumerate(self.assignment)
        )


def make_path(L: OrderedLocale, steps: Sequence[Mask]) -> Path:
    """Validate a step sequence.

    Args:
        L: Locale whose frame and order the steps must respect
        steps: Candidate opens in order

    Returns:
        The validated Path

    Raises:
        PathError: Naming the first violated condition and its index

    Example:
        >>> a, b, c = (L.space.mask([x]) for x in "abc")
        >>> make_path(L, [a, b, c]).format()
        '({a},{b},{c})'
    """
    steps = tuple(steps)
    if not steps:
        raise PathError("A path needs at least one step")
    for i, step in enumerate(steps):
        if not step:
            raise PathError(f"Step {i} is empty", index=i)
        if not L.is_open(step):
            raise PathError(f"Step {i} {L.format(step)} is not open", index=i)
    for i in range(len(steps) - 1):
        if not L.relates(steps[i], steps[i + 1]):
            raise PathError(
                f"Step {i} {L.format(steps[i])} ⋬ step {i + 1} {L.format(steps[i + 1])}", index=i
            )
    return Path(steps=steps, locale=L)


def concat(q: Path, p: Path) -> Path:
    """q·p: walk p, then continue along q; the shared step p_⊤ = q_⊥ appears once.

    Raises:
        PathError: If p_⊤ ≠ q_⊥
    """
    if p.end != q.start:
        raise PathError(
            f"Cannot concatenate: endpoint {p.locale.format(p.end)} ≠ start {q.locale.format(q.start)}",
            index=len(p) - 1,
        )
    return Path(steps=p.steps + q.steps[1:], locale=p.locale)


def refines(q: Path, p: Path) -> RefinementWitness | None:
    """q ⋐ p, witnessed by the earliest containing step of q for each step of p."""
    assignment = []
    for coarse in p.steps:
        for m, fine in enumerate(q.steps):
            if is_subset(fine, coarse):
                assignment.append(m)
                break
        else:
            return None
    return RefinementWitness(tuple(assignment))


def inhabiting_index(p: Path, region: Mask) -> int | None:
    """Index of the first step contained in region, if any."""
    for i, step in enumerate(p.steps):
        if is_subset(step, region):
            return i
    return None


def inhabits(p: Path, region: Mask) -> bool:
    """Some step of p lies inside region."""
    return inhabiting_index(p, region) is not None


def lands_in(p: Path, region: Mask) -> bool:
    """p_⊤ ⊑ region."""
    return is_subset(p.end, region)


def normalize(p: Path) -> Path:
    """Collapse consecutive duplicate steps. Never applied implicitly."""
    steps = [p.steps[0]]
    for step in p.steps[1:]:
        if step != steps[-1]:
            steps.append(step)
    return Path(steps=tuple(steps), locale=p.locale)


def step_universe(L: OrderedLocale, basis: Sequence[Mask] | None = None) -> tuple[Mask, ...]:
    """Nonempty steps in canonical order: the basis if given, else every nonempty open."""
    source = L.frame if basis is None else basis
    return tuple(sorted({u for u in source if u}, key=canonical_key))


def iter_paths(
    L: OrderedLocale, universe: Sequence[Mask], max_len: int, ends_in: Mask
) -> Iterator[Path]:
    """Every path over universe with at most max_len steps landing in ends_in.

    Paths come out once each, shortest first, then lexicographically by the
    positions of their steps in universe.
    """
    steps = list(universe)
    successors = [[j for j, v in enumerate(steps) if L.relates(u, v)] for u in steps]
    # finishes[k]: indices from which k further steps can land in ends_in
    finishes = [{i for i, u in enumerate(steps) if is_subset(u, ends_in)}]
    for _ in range(1, max_len):
        last = finishes[-1]
        finishes.append({i for i in range(len(steps)) if any(j in last for j in successors[i])})

    def extend(prefix: list[int], remaining: int) -> Iterator[tuple[int, ...]]:
        if remaining == 0:
            yield tuple(prefix)
            return
        for j in successors[prefix[-1]]:
            if j in finishes[remaining - 1]:
                prefix.append(j)
                yield from extend(prefix, remaining - 1)
                prefix.pop()

    for length in range(1, max_len + 1):
        for i in range(len(steps)):
            if i not in finishes[length - 1]:
                continue
            for idx in extend([i], length - 1):
                yield Path(steps=tuple(steps[k] for k in idx), locale=L)
