"""Classification of group elements by atomic right divisors.

A canonical diagram is right divisible by an atomic diagram X when it
factors as some diagram followed by X; equivalently, multiplying by the
mirror of X cancels a cell.  Restricted to the four candidates X0, X0^-1,
X1, X1^-1, exactly seven divisor sets occur, which partitions the group
into classes M1 ... M7:

    M1  {}            M2  {X0^-1}        M3  {X0}          M4  {X1^-1}
    M5  {X1}          M6  {X0^-1, X1^-1}                   M7  {X0^-1, X1}

`check_partition` and `check_closures` verify, on a finite set of
elements, that no other divisor set occurs and that right multiplication
by the generators moves the classes the way it should.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable

from .diagrams import (
    LEAF,
    CanonicalDiagram,
    InvariantViolation,
    atomic,
    cells,
    concat_product,
    exposed_caret_positions,
    nf_to_diagram,
    tree_leaves,
)
from .words import NormalForm, nf_multiply


class ClassLabel(enum.Enum):
    M1 = 1
    M2 = 2
    M3 = 3
    M4 = 4
    M5 = 5
    M6 = 6
    M7 = 7

    def __str__(self) -> str:
        return self.name


# flags ordered (X0, X0^-1, X1, X1^-1)
_LEGAL_DIVISOR_SETS: dict[tuple[bool, bool, bool, bool], ClassLabel] = {
    (False, False, False, False): ClassLabel.M1,
    (False, True, False, False): ClassLabel.M2,
    (True, False, False, False): ClassLabel.M3,
    (False, False, False, True): ClassLabel.M4,
    (False, False, True, False): ClassLabel.M5,
    (False, True, False, True): ClassLabel.M6,
    (False, True, True, False): ClassLabel.M7,
}

_DIVISOR_NAMES = ("X0", "X0^-1", "X1", "X1^-1")


@dataclass(frozen=True)
class DivisorSet:
    """Membership flags of X0, X0^-1, X1, X1^-1 among the right divisors.

    Only the seven admissible combinations are constructible; anything
    else raises InvariantViolation, since it can never legitimately occur.
    """

    x0: bool
    x0_inv: bool
    x1: bool
    x1_inv: bool

    def __post_init__(self) -> None:
        if self.flags() not in _LEGAL_DIVISOR_SETS:
            raise InvariantViolation(
                f"divisor set {{{', '.join(self.members())}}} is not one of "
                f"the seven admissible sets"
            )

    def flags(self) -> tuple[bool, bool, bool, bool]:
        return (self.x0, self.x0_inv, self.x1, self.x1_inv)

    def members(self) -> tuple[str, ...]:
        return tuple(
            name for name, flag in zip(_DIVISOR_NAMES, self.flags()) if flag
        )

    def label(self) -> ClassLabel:
        return _LEGAL_DIVISOR_SETS[self.flags()]


def right_divisible(d: CanonicalDiagram, index: int, sign: int) -> bool:
    """Whether d factors as some diagram followed by atomic(index, sign).

    Implemented literally: multiply by the mirrored atomic and watch the
    cell count drop by one.
    """
    probe = atomic(index, -sign)
    return cells(concat_product(d, probe)) == cells(d) - 1


def _right_divisible_fast(d: CanonicalDiagram, index: int, sign: int) -> bool:
    """Structural shortcut for right_divisible, proven equal to the padded
    product oracle on ball(8) plus random samples (see the test suite).

    Dividing by X_i^-1 means the bottom forest's tree i has a root caret;
    dividing by X_i means bottom trees i and i+1 are bare edges facing an
    exposed caret of the top forest.
    """
    bottom = d.bottom
    if sign < 0:
        return index < len(bottom) and bottom[index] != LEAF
    if index + 1 >= len(bottom):
        return False
    if bottom[index] != LEAF or bottom[index + 1] != LEAF:
        return False
    leaf_pos = sum(tree_leaves(t) for t in bottom[:index])
    return leaf_pos in exposed_caret_positions(d.top)


def _divisor_flags(d: CanonicalDiagram) -> tuple[bool, bool, bool, bool]:
    return (
        _right_divisible_fast(d, 0, 1),
        _right_divisible_fast(d, 0, -1),
        _right_divisible_fast(d, 1, 1),
        _right_divisible_fast(d, 1, -1),
    )


def right_divisors(d: CanonicalDiagram) -> DivisorSet:
    """Right divisor set among {X0, X0^-1, X1, X1^-1}."""
    return DivisorSet(*_divisor_flags(d))


def class_of(g: NormalForm) -> ClassLabel:
    """The class M1 ... M7 of a group element."""
    return right_divisors(nf_to_diagram(g)).label()


_X0 = NormalForm((0,), ())
_X0_INV = NormalForm((), (0,))
_X1 = NormalForm((1,), ())
_X1_INV = NormalForm((), (1,))

# (name, applies-to classes, right factor, expected class)
_CLOSURE_RULES = (
    ("(M1|M3|M4|M5)*x0 in M3",
     {ClassLabel.M1, ClassLabel.M3, ClassLabel.M4, ClassLabel.M5},
     _X0, ClassLabel.M3),
    ("(M2|M7)*x1 in M7", {ClassLabel.M2, ClassLabel.M7}, _X1, ClassLabel.M7),
    ("M7*x0^-1 in M2", {ClassLabel.M7}, _X0_INV, ClassLabel.M2),
    ("M3*x1^-1 in M4", {ClassLabel.M3}, _X1_INV, ClassLabel.M4),
)


def check_closures(elements: Iterable[NormalForm]) -> list[str]:
    """Check the four class-closure inclusions on every element.

    Returns a deterministically ordered list of violation descriptions;
    an empty list means every inclusion held.
    """
    violations: list[str] = []
    for g in sorted(elements, key=lambda nf: str(nf)):
        cls = class_of(g)
        for rule_name, sources, factor, expected in _CLOSURE_RULES:
            if cls not in sources:
                continue
            got = class_of(nf_multiply(g, factor))
            if got is not expected:
                violations.append(
                    f"{g}: rule {rule_name} failed, element is {cls} but the "
                    f"product landed in {got}"
                )
    return violations


def check_partition(elements: Iterable[NormalForm]) -> list[str]:
    """Check that every element's divisor set is one of the seven
    admissible values.  Returns violation descriptions, expected empty."""
    violations: list[str] = []
    for g in sorted(elements, key=lambda nf: str(nf)):
        flags = _divisor_flags(nf_to_diagram(g))
        if flags not in _LEGAL_DIVISOR_SETS:
            found = ", ".join(
                name for name, flag in zip(_DIVISOR_NAMES, flags) if flag
            )
            violations.append(f"{g}: divisor set {{{found}}} is not admissible")
    return violations
