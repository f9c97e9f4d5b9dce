"""Finite posets and monotone self-maps.

Posets are immutable: elements are opaque string labels with a fixed total
(lexicographic) order used only for deterministic iteration and tie-breaking,
never as poset structure.  The strict order is stored transitively closed as
per-element bitmasks over the sorted label tuple.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


class PosetError(ValueError):
    """Invalid poset data, map data, or violated operation precondition."""


def _close_masks(below: list[int], n: int) -> list[int]:
    # Warshall over bitmask rows; below[i] = mask of elements strictly below i.
    for k in range(n):
        kbit = 1 << k
        bk = below[k]
        for i in range(n):
            if below[i] & kbit:
                below[i] |= bk
    return below


class Poset:
    """Finite strict partial order. May be empty (used for open intervals)."""

    __slots__ = ("elements", "_index", "_below", "_above", "_hash")

    def __init__(self, elements: Iterable[str], lt_pairs: Iterable[tuple[str, str]] = ()):
        """Build from arbitrary strict-order pairs; transitive closure is applied
        and irreflexivity/antisymmetry validated."""
        elems = tuple(sorted(set(elements)))
        index = {e: i for i, e in enumerate(elems)}
        n = len(elems)
        below = [0] * n
        for a, b in lt_pairs:
            if a not in index or b not in index:
                raise PosetError(f"relation ({a!r},{b!r}) uses unknown element")
            if a == b:
                raise PosetError(f"reflexive relation on {a!r}")
            below[index[b]] |= 1 << index[a]
        _close_masks(below, n)
        for i in range(n):
            if below[i] >> i & 1:
                raise PosetError(f"cycle through {elems[i]!r}: order is not antisymmetric")
        self._init_closed(elems, tuple(below), index)

    def _init_closed(self, elems, below, index=None):
        self.elements = elems
        self._index = index if index is not None else {e: i for i, e in enumerate(elems)}
        self._below = below
        above = [0] * len(elems)
        for i, m in enumerate(below):
            while m:
                j = (m & -m).bit_length() - 1
                above[j] |= 1 << i
                m &= m - 1
        self._above = tuple(above)
        self._hash = hash((elems, below))

    @classmethod
    def from_covers(cls, elements: Iterable[str], covers: Iterable[tuple[str, str]]) -> "Poset":
        """Hasse-style input: cover relations, closed transitively on load."""
        return cls(elements, covers)

    @classmethod
    def _from_closed(cls, elements: tuple[str, ...], below: tuple[int, ...]) -> "Poset":
        # Trusted path: `below` already transitively closed and acyclic.
        self = object.__new__(cls)
        self._init_closed(elements, below)
        return self

    # -- basic queries ------------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: str) -> bool:
        return x in self._index

    def __iter__(self):
        return iter(self.elements)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poset)
            and self.elements == other.elements
            and self._below == other._below
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return f"Poset({list(self.elements)}, {sorted(self.lt_pairs())})"

    def _check(self, x: str) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise PosetError(f"unknown element {x!r}") from None

    def lt(self, x: str, y: str) -> bool:
        return self._below[self._check(y)] >> self._check(x) & 1 == 1

    def leq(self, x: str, y: str) -> bool:
        return x == y or self.lt(x, y)

    def comparable(self, x: str, y: str) -> bool:
        return x == y or self.lt(x, y) or self.lt(y, x)

    def _mask_labels(self, mask: int) -> frozenset[str]:
        out = []
        elems = self.elements
        while mask:
            out.append(elems[(mask & -mask).bit_length() - 1])
            mask &= mask - 1
        return frozenset(out)

    def strictly_below(self, x: str) -> frozenset[str]:
        return self._mask_labels(self._below[self._check(x)])

    def strictly_above(self, x: str) -> frozenset[str]:
        return self._mask_labels(self._above[self._check(x)])

    def down_set(self, x: str) -> frozenset[str]:
        """{y : y <= x}."""
        return self.strictly_below(x) | {x}

    def up_set(self, x: str) -> frozenset[str]:
        return self.strictly_above(x) | {x}

    def lt_pairs(self) -> frozenset[tuple[str, str]]:
        out = []
        for i, e in enumerate(self.elements):
            for a in self._mask_labels(self._below[i]):
                out.append((a, e))
        return frozenset(out)

    def cover_pairs(self) -> frozenset[tuple[str, str]]:
        """Transitive reduction; regenerates the full order under closure."""
        out = []
        for i, e in enumerate(self.elements):
            m = self._below[i]
            red = m
            mm = m
            while mm:
                j = (mm & -mm).bit_length() - 1
                red &= ~self._below[j]
                mm &= mm - 1
            for a in self._mask_labels(red):
                out.append((a, e))
        return frozenset(out)

    # -- derived posets -----------------------------------------------------

    def induced(self, labels: Iterable[str]) -> "Poset":
        """Induced subposet on a label subset."""
        keep = sorted(set(labels))
        pos = {}
        mask_old = 0
        for e in keep:
            pos[e] = len(pos)
            mask_old |= 1 << self._check(e)
        below = []
        for e in keep:
            m = self._below[self._index[e]] & mask_old
            nm = 0
            while m:
                j = (m & -m).bit_length() - 1
                nm |= 1 << pos[self.elements[j]]
                m &= m - 1
            below.append(nm)
        return Poset._from_closed(tuple(keep), tuple(below))

    def dual(self) -> "Poset":
        """Same elements with the order reversed."""
        return Poset._from_closed(self.elements, self._above)

    # -- structure ----------------------------------------------------------

    def minimal_elements(self) -> tuple[str, ...]:
        return tuple(e for i, e in enumerate(self.elements) if not self._below[i])

    def maximal_elements(self) -> tuple[str, ...]:
        return tuple(e for i, e in enumerate(self.elements) if not self._above[i])

    def minimum(self) -> str | None:
        """The unique minimum (0-hat), if one exists."""
        mins = self.minimal_elements()
        return mins[0] if len(mins) == 1 else None

    def maximum(self) -> str | None:
        maxs = self.maximal_elements()
        return maxs[0] if len(maxs) == 1 else None

    def is_bounded(self) -> bool:
        return len(self) >= 1 and self.minimum() is not None and self.maximum() is not None

    def maximal_chains(self) -> list[frozenset[str]]:
        """All inclusion-maximal chains, as vertex sets."""
        n = len(self.elements)
        if n == 0:
            return []
        chains: list[frozenset[str]] = []
        below, above = self._below, self._above
        elems = self.elements

        def extend(chain: list[int], allowed: int):
            # allowed = elements above every chain member; extend only by its
            # minimal members, so each maximal chain is produced exactly once
            if not allowed:
                chains.append(frozenset(elems[i] for i in chain))
                return
            m = allowed
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                if allowed & below[j]:
                    continue
                chain.append(j)
                extend(chain, allowed & above[j])
                chain.pop()

        for i in range(n):
            if not below[i]:
                extend([i], above[i])
        return sorted(chains, key=sorted)

    def linear_extension(self) -> tuple[str, ...]:
        """Minimal-first linear extension, label-least tie-break."""
        remaining = set(self.elements)
        out: list[str] = []
        while remaining:
            mins = [e for e in sorted(remaining) if not any(self.lt(o, e) for o in remaining if o != e)]
            x = mins[0]
            out.append(x)
            remaining.remove(x)
        return tuple(out)


# -- poset maps --------------------------------------------------------------


@dataclass(frozen=True)
class MapFlags:
    """Classification of a poset self-map."""

    order_preserving: bool
    monotone: bool
    increasing: bool
    decreasing: bool


class PosetMap:
    """Total self-map of a poset, classified on construction.

    `monotone` means order-preserving with every x comparable to its image;
    `increasing`/`decreasing` mean x <= f(x) / x >= f(x) throughout.
    """

    __slots__ = ("domain", "table", "order_preserving", "monotone", "increasing",
                 "decreasing", "_ftuple")

    def __init__(self, domain: Poset, mapping: Mapping[str, str]):
        elems = domain.elements
        missing = [e for e in elems if e not in mapping]
        if missing:
            raise PosetError(f"map is not total: missing {missing[0]!r}")
        table = {}
        for e in elems:
            v = mapping[e]
            if v not in domain:
                raise PosetError(f"map sends {e!r} outside the poset: {v!r}")
            table[e] = v
        self.domain = domain
        self.table = table
        self._ftuple = tuple(table[e] for e in elems)
        idx = domain._index
        below = domain._below
        op = True
        for i, e in enumerate(elems):
            m = below[i]
            fi = idx[table[e]]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                fj = idx[table[elems[j]]]
                if fj != fi and not (below[fi] >> fj & 1):
                    op = False
                    break
            if not op:
                break
        inc = op and all(domain.leq(e, table[e]) for e in elems)
        dec = op and all(domain.leq(table[e], e) for e in elems)
        mono = op and all(domain.comparable(e, table[e]) for e in elems)
        self.order_preserving = op
        self.monotone = mono
        self.increasing = inc
        self.decreasing = dec

    def __call__(self, x: str) -> str:
        try:
            return self.table[x]
        except KeyError:
            raise PosetError(f"unknown element {x!r}") from None

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PosetMap)
            and self.domain == other.domain
            and self._ftuple == other._ftuple
        )

    def __hash__(self) -> int:
        return hash((self.domain, self._ftuple))

    def __repr__(self) -> str:
        return f"PosetMap({self.table})"

    def flags(self) -> MapFlags:
        return MapFlags(self.order_preserving, self.monotone, self.increasing, self.decreasing)

    def is_identity(self) -> bool:
        return all(v == e for e, v in self.table.items())

    def compose(self, other: "PosetMap") -> "PosetMap":
        """self after other (self ∘ other)."""
        if self.domain != other.domain:
            raise PosetError("composition requires a common domain")
        return PosetMap(self.domain, {e: self.table[other.table[e]] for e in self.domain})

    def power(self, k: int) -> "PosetMap":
        if k < 0:
            raise PosetError("negative power")
        result = PosetMap(self.domain, {e: e for e in self.domain})
        for _ in range(k):
            result = self.compose(result)
        return result

    def restrict(self, labels: Iterable[str]) -> "PosetMap":
        """Restriction to an induced subposet; the image must stay inside."""
        sub = self.domain.induced(labels)
        for e in sub.elements:
            if self.table[e] not in sub:
                raise PosetError(f"restriction is not closed: {e!r} maps to {self.table[e]!r}")
        return PosetMap(sub, {e: self.table[e] for e in sub.elements})

    def fixed_points(self) -> frozenset[str]:
        return frozenset(e for e, v in self.table.items() if e == v)

    def image(self) -> frozenset[str]:
        return frozenset(self.table.values())

    def non_monotone_witness(self) -> str | None:
        """An element incomparable to its image, if any."""
        for e in self.domain.elements:
            if not self.domain.comparable(e, self.table[e]):
                return e
        return None


# -- module-level operations --------------------------------------------------


def open_interval(P: Poset, x: str, side: str) -> Poset:
    """P_{<x} (side="below") or P_{>x} (side="above") as an induced subposet."""
    if side == "below":
        return P.induced(P.strictly_below(x))
    if side == "above":
        return P.induced(P.strictly_above(x))
    raise PosetError(f"side must be 'below' or 'above', got {side!r}")


def classify_map(P: Poset, mapping: Mapping[str, str]) -> MapFlags:
    return PosetMap(P, mapping).flags()


def fixed_points(phi: PosetMap) -> frozenset[str]:
    return phi.fixed_points()


def decompose_monotone(phi: PosetMap) -> tuple[PosetMap, PosetMap]:
    """Split a monotone map as alpha∘beta with alpha increasing, beta decreasing,
    and every element fixed by at least one of the two.

    The returned pair is the canonical one: where phi moves x up, beta fixes x
    and alpha carries it; where phi moves x down, the roles swap; fixed points
    of phi are fixed by both.  With fixing dictated by the displacement
    direction this way, the pair is unique (the covering condition alone is
    not enough to pin it down)."""
    if not phi.monotone:
        raise PosetError("decompose_monotone requires a monotone map")
    P = phi.domain
    alpha = {x: phi.table[x] if P.lt(x, phi.table[x]) else x for x in P}
    beta = {x: phi.table[x] if P.lt(phi.table[x], x) else x for x in P}
    a = PosetMap(P, alpha)
    b = PosetMap(P, beta)
    if not a.increasing or not b.decreasing:
        raise PosetError("decomposition failed monotone-part classification")
    if any(a.table[b.table[x]] != phi.table[x] for x in P):
        raise PosetError("decomposition does not compose back to the map")
    if a.fixed_points() | b.fixed_points() != frozenset(P.elements):
        raise PosetError("decomposition leaves an element moved by both parts")
    return a, b


def stabilize(phi: PosetMap) -> PosetMap:
    """phi^{|P|}; short-circuits once phi^{k+1} = phi^k (same result)."""
    if not phi.order_preserving:
        raise PosetError("stabilize requires an order-preserving map")
    result = phi.power(0)
    for _ in range(len(phi.domain)):
        nxt = phi.compose(result)
        if nxt == result:
            break
        result = nxt
    if phi.monotone and not result.monotone:
        raise PosetError("power of a monotone map must be monotone")
    return result


def stable_preimage(phi: PosetMap, z: str) -> frozenset[str]:
    """Elements sent to z by the stabilized map."""
    if z not in phi.domain:
        raise PosetError(f"unknown element {z!r}")
    stab = stabilize(phi)
    return frozenset(x for x in phi.domain if stab.table[x] == z)
