"""Sieves on the category of opens.

Arrows between opens are inclusions and unique when they exist, so a sieve on
an open U is stored as the down-closed set of opens it contains.
"""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass

from ordered_locale_lab.errors import BudgetExceededError, SieveError
from ordered_locale_lab.space.bitmask import Mask, canonical_key, is_subset
from ordered_locale_lab.space.finite_space import FiniteSpace


@dataclass(frozen=True)
class Sieve:
    """A down-closed set of opens inside root.

    Attributes:
        root: The open the sieve lives on
        members: Opens of the sieve, each ⊑ root
    """

    root: Mask
    members: frozenset[Mask]

    @property
    def join(self) -> Mask:
        """⋁R."""
        result = 0
        for member in self.members:
            result |= member
        return result

    @property
    def generators(self) -> tuple[Mask, ...]:
        """Maximal members in canonical order; their down-closure is the sieve."""
        return tuple(
            sorted(
                (v for v in self.members if not any(v != w and is_subset(v, w) for w in self.members)),
                key=canonical_key,
            )
        )

    def __contains__(self, mask: Mask) -> bool:
        return mask in self.members

    def format(self, space: FiniteSpace) -> str:
        return f"↓[{', '.join(space.format(g) for g in self.generators)}] on {space.format(self.root)}"

    def to_dict(self, space: FiniteSpace) -> dict:
        return {"root": space.labels(self.root), "generators": [space.labels(g) for g in self.generators]}


def _opens_below(space: FiniteSpace, root: Mask) -> list[Mask]:
    return [v for v in space.frame if is_subset(v, root)]


def down_closure(space: FiniteSpace, root: Mask, generators: Iterable[Mask]) -> Sieve:
    """Sieve on root generated by opens ⊑ root.

    Raises:
        SieveError: If a generator is not an open inside root
    """
    gens = list(generators)
    for g in gens:
        if not space.is_open(g) or not is_subset(g, root):
            raise SieveError(f"Generator {space.format(g)} is not an open inside {space.format(root)}")
    members = frozenset(v for v in _opens_below(space, root) if any(is_subset(v, g) for g in gens))
    return Sieve(root=root, members=members)


def make_sieve(space: FiniteSpace, root: Mask, members: Iterable[Mask]) -> Sieve:
    """Validate an explicit member set.

    Raises:
        SieveError: If a member lies outside root or the set is not down-closed
    """
    members = frozenset(members)
    for v in sorted(members, key=canonical_key):
        if not is_subset(v, root):
            raise SieveError(f"Member {space.format(v)} is not inside the root {space.format(root)}")
        for w in _opens_below(space, v):
            if w not in members:
                raise SieveError(f"Sieve is not down-closed: {space.format(w)} ⊑ {space.format(v)} is missing")
    return Sieve(root=root, members=members)


def maximal_sieve(space: FiniteSpace, root: Mask) -> Sieve:
    """t_U = {V : V ⊑ U}.

    Example:
        >>> maximal_sieve(space, ab).format(space)
        '↓[{a,b}] on {a,b}'
    """
    return Sieve(root=root, members=frozenset(_opens_below(space, root)))


def pullback(sieve: Sieve, along: Mask) -> Sieve:
    """h*(R) = {V ∧ W : W ∈ R} for the inclusion h: V ⊑ root.

    Raises:
        SieveError: If along is not inside the sieve's root
    """
    if not is_subset(along, sieve.root):
        raise SieveError("Cannot pull back along an open outside the sieve's root")
    members = frozenset(along & w for w in sieve.members)
    # meets with along of a down-closed set stay down-closed
    return Sieve(root=along, members=members)


def pushforward(sieve: Sieve, into: Mask) -> Sieve:
    """The same members viewed as a sieve on a larger root (η_*)."""
    if not is_subset(sieve.root, into):
        raise SieveError("Pushforward target must contain the sieve's root")
    return Sieve(root=into, members=sieve.members)


def canonical_cover_member(root: Mask, sieve: Sieve) -> bool:
    """R is a covering sieve of the canonical topology: ⋁R = U.

    Raises:
        SieveError: If the sieve lives on another root
    """
    if sieve.root != root:
        raise SieveError("Sieve root does not match the covered open")
    return sieve.join == root


def _antichains(opens: Sequence[Mask], start: int, chosen: list[Mask]) -> Iterator[tuple[Mask, ...]]:
    yield tuple(chosen)
    for i in range(start, len(opens)):
        v = opens[i]
        if any(is_subset(v, c) or is_subset(c, v) for c in chosen):
            continue
        chosen.append(v)
        yield from _antichains(opens, i + 1, chosen)
        chosen.pop()


def sieves_on(space: FiniteSpace, root: Mask, limit: int | None = None) -> list[Sieve]:
    """Every sieve on root, once each, as down-closures of antichains.

    Ordered by generator count, then by the canonical keys of the generators;
    the empty sieve comes first and the maximal sieve is included.

    Raises:
        BudgetExceededError: If more than limit sieves exist
    """
    opens = _opens_below(space, root)
    found = []
    for antichain in _antichains(opens, 0, []):
        found.append(antichain)
        if limit is not None and len(found) > limit:
            raise BudgetExceededError("sieve", limit)
    found.sort(key=lambda gens: (len(gens), [canonical_key(g) for g in gens]))
    return [down_closure(space, root, gens) for gens in found]
