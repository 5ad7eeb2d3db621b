"""Lattice elements: finite rational vectors and eventually-constant sequences.

Both carry the coordinatewise order, so join/meet/absolute value are
computed entrywise and all lattice identities hold exactly.  Values are
immutable and hashable; binary operations require matching shapes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Iterable, Iterator

from .errors import InvalidElement
from .scalars import as_rat

_ZERO = Fraction(0)


@dataclass(frozen=True)
class FinVec:
    """Element of Q^n with coordinatewise order."""

    entries: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "entries", tuple(as_rat(e) for e in self.entries))
        if not self.entries:
            raise InvalidElement("FinVec needs at least one coordinate")

    @classmethod
    def of(cls, *entries) -> "FinVec":
        return cls(tuple(entries))

    @classmethod
    def zero(cls, dim: int) -> "FinVec":
        return cls((_ZERO,) * dim)

    @classmethod
    def constant(cls, dim: int, value) -> "FinVec":
        return cls((as_rat(value),) * dim)

    @classmethod
    def unit(cls, dim: int, index: int) -> "FinVec":
        entries = [_ZERO] * dim
        entries[index] = Fraction(1)
        return cls(tuple(entries))

    @property
    def dim(self) -> int:
        return len(self.entries)

    def __getitem__(self, i: int) -> Fraction:
        return self.entries[i]

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.entries)

    def _zip(self, other: "FinVec", op: Callable[[Fraction, Fraction], Fraction]) -> "FinVec":
        if not isinstance(other, FinVec) or other.dim != self.dim:
            raise InvalidElement(f"dimension mismatch: {self!r} vs {other!r}")
        return FinVec(tuple(op(a, b) for a, b in zip(self.entries, other.entries)))

    def __add__(self, other: "FinVec") -> "FinVec":
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other: "FinVec") -> "FinVec":
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self) -> "FinVec":
        return FinVec(tuple(-a for a in self.entries))

    def __mul__(self, other: "FinVec") -> "FinVec":
        return self._zip(other, lambda a, b: a * b)

    def scale(self, factor) -> "FinVec":
        q = as_rat(factor)
        return FinVec(tuple(q * a for a in self.entries))

    def join(self, other: "FinVec") -> "FinVec":
        return self._zip(other, max)

    def meet(self, other: "FinVec") -> "FinVec":
        return self._zip(other, min)

    def __abs__(self) -> "FinVec":
        return FinVec(tuple(abs(a) for a in self.entries))

    def pos_part(self) -> "FinVec":
        return FinVec(tuple(max(a, _ZERO) for a in self.entries))

    def neg_part(self) -> "FinVec":
        return FinVec(tuple(max(-a, _ZERO) for a in self.entries))

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)

    # Coordinatewise partial order.
    def __le__(self, other: "FinVec") -> bool:
        if not isinstance(other, FinVec) or other.dim != self.dim:
            raise InvalidElement(f"dimension mismatch: {self!r} vs {other!r}")
        return all(a <= b for a, b in zip(self.entries, other.entries))

    def __ge__(self, other: "FinVec") -> bool:
        return other.__le__(self)

    def __lt__(self, other: "FinVec") -> bool:
        return self.__le__(other) and self != other

    def __gt__(self, other: "FinVec") -> bool:
        return other.__lt__(self)

    def __repr__(self) -> str:
        return "FinVec(" + ", ".join(str(a) for a in self.entries) + ")"


def canonical_evseq(prefix: Iterable, tail) -> "EvSeq":
    """Build an EvSeq, trimming trailing prefix entries equal to the tail."""
    return EvSeq(tuple(prefix), tail)


@dataclass(frozen=True)
class EvSeq:
    """Eventually-constant rational sequence: a finite prefix, then a constant tail.

    Construction canonicalizes (trailing prefix entries equal to the tail are
    dropped), so two EvSeq compare equal exactly when they agree at every
    index.
    """

    prefix: tuple[Fraction, ...]
    tail: Fraction

    def __post_init__(self):
        entries = [as_rat(e) for e in self.prefix]
        tail = as_rat(self.tail)
        while entries and entries[-1] == tail:
            entries.pop()
        object.__setattr__(self, "prefix", tuple(entries))
        object.__setattr__(self, "tail", tail)

    @classmethod
    def of(cls, *prefix, tail=0) -> "EvSeq":
        return cls(tuple(prefix), tail)

    @classmethod
    def zero(cls) -> "EvSeq":
        return cls((), 0)

    @classmethod
    def constant(cls, value) -> "EvSeq":
        return cls((), value)

    @classmethod
    def unit(cls, index: int) -> "EvSeq":
        entries = [_ZERO] * (index + 1)
        entries[index] = Fraction(1)
        return cls(tuple(entries), 0)

    def at(self, i: int) -> Fraction:
        if i < 0:
            raise InvalidElement("sequence indices start at 0")
        return self.prefix[i] if i < len(self.prefix) else self.tail

    def canonical(self) -> "EvSeq":
        # Construction already canonicalizes; re-running is the identity.
        return EvSeq(self.prefix, self.tail)

    def _zip(self, other: "EvSeq", op: Callable[[Fraction, Fraction], Fraction]) -> "EvSeq":
        if not isinstance(other, EvSeq):
            raise InvalidElement(f"expected EvSeq, got {other!r}")
        n = max(len(self.prefix), len(other.prefix))
        entries = tuple(op(self.at(i), other.at(i)) for i in range(n))
        return EvSeq(entries, op(self.tail, other.tail))

    def __add__(self, other: "EvSeq") -> "EvSeq":
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other: "EvSeq") -> "EvSeq":
        return self._zip(other, lambda a, b: a - b)

    def __neg__(self) -> "EvSeq":
        return EvSeq(tuple(-a for a in self.prefix), -self.tail)

    def __mul__(self, other: "EvSeq") -> "EvSeq":
        return self._zip(other, lambda a, b: a * b)

    def scale(self, factor) -> "EvSeq":
        q = as_rat(factor)
        return EvSeq(tuple(q * a for a in self.prefix), q * self.tail)

    def join(self, other: "EvSeq") -> "EvSeq":
        return self._zip(other, max)

    def meet(self, other: "EvSeq") -> "EvSeq":
        return self._zip(other, min)

    def __abs__(self) -> "EvSeq":
        return EvSeq(tuple(abs(a) for a in self.prefix), abs(self.tail))

    def pos_part(self) -> "EvSeq":
        return EvSeq(tuple(max(a, _ZERO) for a in self.prefix), max(self.tail, _ZERO))

    def neg_part(self) -> "EvSeq":
        return EvSeq(tuple(max(-a, _ZERO) for a in self.prefix), max(-self.tail, _ZERO))

    def is_zero(self) -> bool:
        return self.tail == 0 and not self.prefix

    def __le__(self, other: "EvSeq") -> bool:
        if not isinstance(other, EvSeq):
            raise InvalidElement(f"expected EvSeq, got {other!r}")
        n = max(len(self.prefix), len(other.prefix))
        return all(self.at(i) <= other.at(i) for i in range(n)) and self.tail <= other.tail

    def __ge__(self, other: "EvSeq") -> bool:
        return other.__le__(self)

    def __lt__(self, other: "EvSeq") -> bool:
        return self.__le__(other) and self != other

    def __gt__(self, other: "EvSeq") -> bool:
        return other.__lt__(self)

    def __repr__(self) -> str:
        inner = ", ".join(str(a) for a in self.prefix)
        return f"EvSeq([{inner}], tail={self.tail})"
