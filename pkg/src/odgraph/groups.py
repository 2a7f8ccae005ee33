"""Finite group families: cyclic, dihedral, unit groups, direct products.

A group is described by an immutable ``GroupSpec``; elements are referred
to by canonical integer indices so that reports and exports come out
deterministic:

* ``Cyclic(n)``   -- index ``i`` is the residue ``i``.
* ``Dihedral(n)`` -- indices ``0..n-1`` are the rotations ``a^i``, indices
  ``n..2n-1`` are the reflections ``a^(i-n) b``.
* ``Units(n)``    -- index ``i`` is the ``i``-th residue coprime to ``n``,
  residues taken in ascending order.
* ``Product``     -- mixed-radix index over the factors, first factor most
  significant.
"""

from __future__ import annotations

import itertools
import math
from collections import Counter
from collections.abc import Mapping
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Union

from . import numtheory
from .errors import DomainError, EnumerationBoundError

DEFAULT_ENUMERATION_BOUND = 100_000

__all__ = [
    "Cyclic",
    "DEFAULT_ENUMERATION_BOUND",
    "Dihedral",
    "Element",
    "GroupSpec",
    "OrderProfile",
    "Product",
    "Units",
    "direct_product",
    "element_label",
    "element_labels",
    "element_order",
    "element_orders",
    "enumerate_elements",
    "format_spec",
    "group_order",
    "order_profile",
]


@dataclass(frozen=True)
class Cyclic:
    """Additive group of residues modulo n."""

    n: int

    def __post_init__(self):
        if self.n < 1:
            raise DomainError(f"cyclic group requires n >= 1, got {self.n}")


@dataclass(frozen=True)
class Dihedral:
    """Symmetries of a regular n-gon (n >= 3); the group order is 2n."""

    n: int

    def __post_init__(self):
        if self.n < 3:
            raise DomainError(f"dihedral group requires n >= 3, got {self.n}")


@dataclass(frozen=True)
class Units:
    """Multiplicative group of residues coprime to n (n >= 2)."""

    n: int

    def __post_init__(self):
        if self.n < 2:
            raise DomainError(f"units group requires n >= 2, got {self.n}")


@dataclass(frozen=True)
class Product:
    """Direct product of at least two factors; nested products are flattened."""

    factors: tuple["GroupSpec", ...]

    def __post_init__(self):
        flat: list[GroupSpec] = []
        for factor in self.factors:
            if isinstance(factor, Product):
                flat.extend(factor.factors)
            else:
                flat.append(factor)
        if len(flat) < 2:
            raise DomainError("direct product requires at least 2 factors")
        object.__setattr__(self, "factors", tuple(flat))


GroupSpec = Union[Cyclic, Dihedral, Units, Product]


def direct_product(*factors: GroupSpec) -> Product:
    """Convenience constructor: ``direct_product(Cyclic(2), Cyclic(3))``."""
    return Product(tuple(factors))


def format_spec(spec: GroupSpec) -> str:
    """Canonical text form: ``Z6``, ``D4``, ``U24``, ``Z2xZ3``."""
    if isinstance(spec, Cyclic):
        return f"Z{spec.n}"
    if isinstance(spec, Dihedral):
        return f"D{spec.n}"
    if isinstance(spec, Units):
        return f"U{spec.n}"
    if isinstance(spec, Product):
        return "x".join(format_spec(factor) for factor in spec.factors)
    raise DomainError(f"not a group spec: {spec!r}")


def group_order(spec: GroupSpec) -> int:
    """|Z_n| = n, |D_n| = 2n, |U(n)| = phi(n); products multiply."""
    if isinstance(spec, Cyclic):
        return spec.n
    if isinstance(spec, Dihedral):
        return 2 * spec.n
    if isinstance(spec, Units):
        return numtheory.euler_phi(spec.n)
    if isinstance(spec, Product):
        order = 1
        for factor in spec.factors:
            order *= group_order(factor)
        return order
    raise DomainError(f"not a group spec: {spec!r}")


@dataclass(frozen=True)
class Element:
    """One group element, identified by its canonical index."""

    group: GroupSpec
    index: int

    def __post_init__(self):
        order = group_order(self.group)
        if not 0 <= self.index < order:
            raise DomainError(
                f"element index {self.index} out of range for a group of order {order}"
            )


@lru_cache(maxsize=None)
def _unit_residues(n: int) -> tuple[int, ...]:
    return tuple(x for x in range(1, n) if math.gcd(x, n) == 1)


def _decode_product_index(spec: Product, index: int) -> tuple[int, ...]:
    components = []
    for factor in reversed(spec.factors):
        size = group_order(factor)
        components.append(index % size)
        index //= size
    return tuple(reversed(components))


def _order_of_index(spec: GroupSpec, index: int) -> int:
    if isinstance(spec, Cyclic):
        return spec.n // math.gcd(index, spec.n)
    if isinstance(spec, Dihedral):
        if index < spec.n:
            return spec.n // math.gcd(index, spec.n)
        return 2
    if isinstance(spec, Units):
        return numtheory.multiplicative_order(_unit_residues(spec.n)[index], spec.n)
    if isinstance(spec, Product):
        order = 1
        for factor, component in zip(spec.factors, _decode_product_index(spec, index)):
            order = math.lcm(order, _order_of_index(factor, component))
        return order
    raise DomainError(f"not a group spec: {spec!r}")


def element_order(element: Element) -> int:
    """Least t >= 1 such that composing the element t times gives the identity."""
    return _order_of_index(element.group, element.index)


def _check_enumerable(spec: GroupSpec, bound: int) -> int:
    order = group_order(spec)
    if order > bound:
        raise EnumerationBoundError(
            f"group order {order} exceeds the enumeration bound {bound}"
        )
    return order


def enumerate_elements(
    spec: GroupSpec, bound: int = DEFAULT_ENUMERATION_BOUND
) -> list[Element]:
    """All elements in canonical index order (bound-checked)."""
    order = _check_enumerable(spec, bound)
    return [Element(spec, index) for index in range(order)]


def element_orders(
    spec: GroupSpec, bound: int = DEFAULT_ENUMERATION_BOUND
) -> tuple[int, ...]:
    """Orders of all elements, aligned with canonical indices."""
    _check_enumerable(spec, bound)
    return _element_orders(spec)


def _element_orders(spec: GroupSpec) -> tuple[int, ...]:
    if isinstance(spec, Cyclic):
        n = spec.n
        return tuple(n // math.gcd(i, n) for i in range(n))
    if isinstance(spec, Dihedral):
        n = spec.n
        rotations = tuple(n // math.gcd(i, n) for i in range(n))
        return rotations + (2,) * n
    if isinstance(spec, Units):
        n = spec.n
        return tuple(numtheory.multiplicative_order(x, n) for x in _unit_residues(n))
    if isinstance(spec, Product):
        # itertools.product varies the last factor fastest, matching the
        # mixed-radix indexing (first factor most significant)
        factor_orders = [_element_orders(factor) for factor in spec.factors]
        return tuple(math.lcm(*combo) for combo in itertools.product(*factor_orders))
    raise DomainError(f"not a group spec: {spec!r}")


class OrderProfile(Mapping):
    """Immutable map from element order to its multiplicity in the group.

    A valid profile has exactly one element of order 1, and every realized
    order divides the group order (the sum of the multiplicities).
    """

    __slots__ = ("_entries", "_group_order")

    def __init__(self, entries: Mapping[int, int]):
        items = {int(order): int(count) for order, count in entries.items()}
        total = sum(items.values())
        if items.get(1) != 1:
            raise DomainError("a group has exactly one element of order 1")
        for order, count in items.items():
            if order < 1 or count < 1:
                raise DomainError(f"bad profile entry {order}: {count}")
            if total % order != 0:
                raise DomainError(
                    f"order {order} does not divide the group order {total}"
                )
        self._entries = dict(sorted(items.items()))
        self._group_order = total

    @property
    def group_order(self) -> int:
        return self._group_order

    def multiplicity(self, order: int) -> int:
        return self._entries.get(order, 0)

    def __getitem__(self, order: int) -> int:
        return self._entries[order]

    def __iter__(self) -> Iterator[int]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __eq__(self, other) -> bool:
        if isinstance(other, OrderProfile):
            return self._entries == other._entries
        if isinstance(other, Mapping):
            return self._entries == dict(other)
        return NotImplemented

    def __hash__(self) -> int:
        return hash(tuple(self._entries.items()))

    def __repr__(self) -> str:
        inner = ", ".join(f"{order}: {count}" for order, count in self._entries.items())
        return f"OrderProfile({{{inner}}})"


def order_profile(
    spec: GroupSpec, bound: int = DEFAULT_ENUMERATION_BOUND
) -> OrderProfile:
    """Order -> multiplicity map.

    Cyclic and dihedral groups use closed forms (phi over the divisors,
    plus the n reflections of order 2); unit groups and products are
    enumerated, subject to the bound.
    """
    if isinstance(spec, Cyclic):
        return OrderProfile(
            {d: numtheory.euler_phi(d) for d in numtheory.divisors(spec.n)}
        )
    if isinstance(spec, Dihedral):
        entries = {d: numtheory.euler_phi(d) for d in numtheory.divisors(spec.n)}
        entries[2] = entries.get(2, 0) + spec.n
        return OrderProfile(entries)
    if isinstance(spec, (Units, Product)):
        return OrderProfile(Counter(element_orders(spec, bound)))
    raise DomainError(f"not a group spec: {spec!r}")


def _label_of_index(spec: GroupSpec, index: int) -> str:
    if isinstance(spec, Cyclic):
        return str(index)
    if isinstance(spec, Units):
        return str(_unit_residues(spec.n)[index])
    if isinstance(spec, Dihedral):
        n = spec.n
        if index < n:
            if index == 0:
                return "e"
            return "a" if index == 1 else f"a{index}"
        j = index - n
        if j == 0:
            return "b"
        return "ab" if j == 1 else f"a{j}b"
    if isinstance(spec, Product):
        parts = [
            _label_of_index(factor, component)
            for factor, component in zip(spec.factors, _decode_product_index(spec, index))
        ]
        return "(" + ",".join(parts) + ")"
    raise DomainError(f"not a group spec: {spec!r}")


def element_label(element: Element) -> str:
    """Short deterministic ASCII name, used in tables and graph exports."""
    return _label_of_index(element.group, element.index)


def element_labels(
    spec: GroupSpec, bound: int = DEFAULT_ENUMERATION_BOUND
) -> tuple[str, ...]:
    """Labels of all elements, aligned with canonical indices."""
    order = _check_enumerable(spec, bound)
    return tuple(_label_of_index(spec, index) for index in range(order))
