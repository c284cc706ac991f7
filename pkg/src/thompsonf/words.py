"""Words and normal forms in Thompson's group F.

The group is generated by x0, x1, x2, ... subject to the relations
x_j x_i = x_i x_{j+1} for all i < j.  Every element has a unique normal
form

    x_{i_1} ... x_{i_s} x_{j_t}^-1 ... x_{j_1}^-1

in which the i's and the j's are non-decreasing and, whenever some x_i
and x_i^-1 both occur, x_{i+1} or x_{i+1}^-1 occurs as well.  This module
parses and prints words, reduces arbitrary words to normal form, and
implements exact multiplication, inversion, and the change of alphabet
between the infinite generating set and the standard pair {x0, x1}.

Normal forms are reached by orienting the relations into rewriting rules
(i < j throughout):

    x_j x_i        ->  x_i x_{j+1}
    x_i^-1 x_j^-1  ->  x_{j+1}^-1 x_i^-1
    x_i^-1 x_j     ->  x_{j+1} x_i^-1
    x_j^-1 x_i     ->  x_i x_{j+1}^-1
    x_i x_i^-1     ->  empty            (likewise x_i^-1 x_i)

together with a shift rule: a factor x_i w x_i^-1 in which every letter
of w has index >= i+2 rewrites to w with all indices decremented by one.
The system is confluent (certified by tests), so the rewriting order does
not matter.  `reduce_to_normal_form` folds letters into a normal form
incrementally; `reduce_word_by_rewriting` applies the literal rules one
redex at a time under a selectable strategy and exists so the two orders
can be compared.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import NamedTuple


class ParseError(ValueError):
    """Raised when a word string does not match the grammar."""


class Letter(NamedTuple):
    """One signed generator occurrence x_index^sign with sign in {+1, -1}."""

    index: int
    sign: int


@dataclass(frozen=True)
class Word:
    """A finite sequence of letters; the empty word is the identity."""

    letters: tuple[Letter, ...] = ()

    def __post_init__(self) -> None:
        for lt in self.letters:
            if lt.index < 0:
                raise ValueError(f"negative generator index in {lt}")
            if lt.sign not in (1, -1):
                raise ValueError(f"letter sign must be +1 or -1, got {lt.sign}")

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True)
class NormalForm:
    """The unique normal form of a group element.

    `pos` holds the indices i_1 <= ... <= i_s of the positive letters and
    `neg` the indices j_1 <= ... <= j_t of the negative letters, denoting
    x_{i_1}...x_{i_s} x_{j_t}^-1 ... x_{j_1}^-1.
    """

    pos: tuple[int, ...] = ()
    neg: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        for half, name in ((self.pos, "pos"), (self.neg, "neg")):
            last = 0
            for i in half:
                if i < 0:
                    raise ValueError(f"negative index {i} in {name}")
                if i < last:
                    raise ValueError(f"{name} indices must be non-decreasing")
                last = i
        ps, ns = set(self.pos), set(self.neg)
        for i in ps & ns:
            if i + 1 not in ps and i + 1 not in ns:
                raise ValueError(
                    f"x{i} and x{i}^-1 both occur but neither x{i + 1} nor "
                    f"x{i + 1}^-1 does"
                )

    @property
    def is_identity(self) -> bool:
        return not self.pos and not self.neg

    def word(self) -> Word:
        letters = tuple(Letter(i, 1) for i in self.pos) + tuple(
            Letter(j, -1) for j in reversed(self.neg)
        )
        return Word(letters)

    def inverse(self) -> "NormalForm":
        return nf_invert(self)

    def __mul__(self, other: "NormalForm") -> "NormalForm":
        return nf_multiply(self, other)

    def __str__(self) -> str:
        return format_word(self.word())


IDENTITY = NormalForm()

_TOKEN_RE = re.compile(r"x(\d+)(?:\^(-?\d+))?\Z")


def parse_word(text: str) -> Word:
    """Parse whitespace-separated tokens `x<digits>` with optional
    `^<nonzero integer>` exponent; `e` or the empty string is the identity.

    Exponents expand into repeated letters, so `x0^-2` gives two copies of
    x0^-1.  Raises ParseError naming the offending token and its position.
    """
    stripped = text.strip()
    if stripped in ("", "e"):
        return Word(())
    letters: list[Letter] = []
    for position, token in enumerate(stripped.split(), start=1):
        m = _TOKEN_RE.match(token)
        if m is None:
            raise ParseError(f"malformed token {token!r} at position {position}")
        index = int(m.group(1))
        exponent = 1 if m.group(2) is None else int(m.group(2))
        if exponent == 0:
            raise ParseError(f"zero exponent in token {token!r} at position {position}")
        sign = 1 if exponent > 0 else -1
        letters.extend([Letter(index, sign)] * abs(exponent))
    return Word(tuple(letters))


def format_word(w: Word) -> str:
    """Canonical formatting: runs of the same letter collapse into exponent
    notation, tokens are single-space separated, and the identity is "e"."""
    if not w.letters:
        return "e"
    parts: list[str] = []
    run_letter = w.letters[0]
    run = 1
    for lt in w.letters[1:]:
        if lt == run_letter:
            run += 1
        else:
            parts.append(_format_run(run_letter, run))
            run_letter, run = lt, 1
    parts.append(_format_run(run_letter, run))
    return " ".join(parts)


def _format_run(lt: Letter, count: int) -> str:
    exponent = lt.sign * count
    if exponent == 1:
        return f"x{lt.index}"
    return f"x{lt.index}^{exponent}"


# -- incremental reduction ---------------------------------------------------
#
# The workhorse below multiplies a normal form (as a raw pos/neg pair) by a
# single letter and restores normality.  These run on every BFS edge of the
# Cayley-graph tooling, so they stay allocation-light.


def _times_positive(pos: tuple, neg: tuple, g: int) -> tuple[tuple, tuple]:
    """Right-multiply by x_g.  The letter moves left through the negative
    half, cancelling against an equal index or emerging into the positive
    half with its index bumped once per smaller index passed."""
    passed: list[int] = []
    for k, j in enumerate(neg):
        if j == g:
            return pos, tuple(passed) + neg[k + 1 :]
        if j < g:
            passed.append(j)
            g += 1
        else:
            passed.append(j + 1)
    new_pos = (
        tuple(p for p in pos if p <= g)
        + (g,)
        + tuple(p + 1 for p in pos if p > g)
    )
    return new_pos, tuple(passed)


def _times_negative(pos: tuple, neg: tuple, g: int) -> tuple[tuple, tuple]:
    """Right-multiply by x_g^-1: sort the new index into the negative half,
    bumping it once per smaller index passed.  Never cancels on its own;
    `_repair` removes any x_i ... x_i^-1 pair this may create."""
    passed: list[int] = []
    for k, j in enumerate(neg):
        if j < g:
            passed.append(j)
            g += 1
        else:
            return pos, tuple(passed) + (g,) + neg[k:]
    return pos, tuple(passed) + (g,)


def _repair(pos: tuple, neg: tuple) -> tuple[tuple, tuple]:
    """Remove x_i ... x_i^-1 pairs whose inner block carries no x_{i+1}^{+-1},
    decrementing the inner indices; repeat until the side condition holds."""
    while True:
        ps, ns = set(pos), set(neg)
        offender = -1
        for i in ps & ns:
            if i + 1 not in ps and i + 1 not in ns:
                offender = i
                break
        if offender < 0:
            return pos, neg
        pos = _drop_one_and_shift(pos, offender)
        neg = _drop_one_and_shift(neg, offender)


def _drop_one_and_shift(half: tuple, i: int) -> tuple:
    out: list[int] = []
    dropped = False
    for v in half:
        if v == i and not dropped:
            dropped = True
            continue
        out.append(v - 1 if v > i else v)
    return tuple(out)


def _fold_letter(pos: tuple, neg: tuple, lt: Letter) -> tuple[tuple, tuple]:
    if lt.sign > 0:
        pos, neg = _times_positive(pos, neg, lt.index)
    else:
        pos, neg = _times_negative(pos, neg, lt.index)
    return _repair(pos, neg)


def reduce_to_normal_form(w: Word) -> NormalForm:
    """Reduce an arbitrary word to the unique normal form of its element."""
    pos: tuple = ()
    neg: tuple = ()
    for lt in w.letters:
        pos, neg = _fold_letter(pos, neg, lt)
    return NormalForm(pos, neg)


def nf_multiply(a: NormalForm, b: NormalForm) -> NormalForm:
    """Normal form of the product ab."""
    pos, neg = a.pos, a.neg
    for i in b.pos:
        pos, neg = _times_positive(pos, neg, i)
        pos, neg = _repair(pos, neg)
    for j in reversed(b.neg):
        pos, neg = _times_negative(pos, neg, j)
        pos, neg = _repair(pos, neg)
    return NormalForm(pos, neg)


def nf_invert(a: NormalForm) -> NormalForm:
    """Normal form of the inverse: swap the positive and negative halves.
    The side condition is symmetric, so no further rewriting is needed."""
    return NormalForm(a.neg, a.pos)


# -- literal small-step rewriting --------------------------------------------


STRATEGIES = ("leftmost", "rightmost")


def _adjacent_rewrite(a: Letter, b: Letter) -> tuple[Letter, ...] | None:
    """Replacement for the adjacent pair (a, b), or None if irreducible."""
    if a.index == b.index and a.sign == -b.sign:
        return ()
    if a.sign > 0 and b.sign > 0 and a.index > b.index:
        return (b, Letter(a.index + 1, 1))
    if a.sign < 0 and b.sign < 0 and a.index < b.index:
        return (Letter(b.index + 1, -1), a)
    if a.sign < 0 and b.sign > 0:
        if a.index < b.index:
            return (Letter(b.index + 1, 1), a)
        return (b, Letter(a.index + 1, -1))
    return None


def _seminormalize(letters: list[Letter], leftmost: bool) -> None:
    """Apply the adjacent rules in place until none fires, attacking the
    leftmost or the rightmost redex first."""
    if leftmost:
        k = 0
        while k < len(letters) - 1:
            replacement = _adjacent_rewrite(letters[k], letters[k + 1])
            if replacement is None:
                k += 1
            else:
                letters[k : k + 2] = replacement
                k = max(0, k - 1)
    else:
        k = len(letters) - 2
        while k >= 0:
            replacement = _adjacent_rewrite(letters[k], letters[k + 1])
            if replacement is None:
                k -= 1
            else:
                letters[k : k + 2] = replacement
                k = min(len(letters) - 2, k + 1)


def _find_shift_redex(letters: list[Letter], leftmost: bool):
    """Locate a factor x_i w x_i^-1 with all indices of w >= i+2."""
    order = range(len(letters)) if leftmost else range(len(letters) - 1, -1, -1)
    for k in order:
        index, sign = letters[k]
        if sign < 0:
            continue
        for l in range(k + 1, len(letters)):
            other, other_sign = letters[l]
            if other == index and other_sign < 0:
                return k, l
            if other < index + 2:
                break
    return None


def reduce_word_by_rewriting(w: Word, strategy: str = "leftmost") -> NormalForm:
    """Reduce by applying one rewriting rule at a time.

    `strategy` picks which redex to attack first ("leftmost" or
    "rightmost"); every strategy reaches the same normal form.
    """
    if strategy not in STRATEGIES:
        raise ValueError(f"unknown strategy {strategy!r}; expected one of {STRATEGIES}")
    leftmost = strategy == "leftmost"
    letters = list(w.letters)
    while True:
        _seminormalize(letters, leftmost)
        redex = _find_shift_redex(letters, leftmost)
        if redex is None:
            break
        k, l = redex
        letters[k : l + 1] = [Letter(ix - 1, sg) for ix, sg in letters[k + 1 : l]]
    split = len(letters)
    for m, lt in enumerate(letters):
        if lt.sign < 0:
            split = m
            break
    pos = tuple(lt.index for lt in letters[:split])
    neg = tuple(lt.index for lt in reversed(letters[split:]))
    return NormalForm(pos, neg)


# -- standard two-generator alphabet -----------------------------------------


def _standard_letters(n: int, sign: int) -> tuple[Letter, ...]:
    # x_n = x0^-(n-1) x1 x0^(n-1) for n >= 2
    if n <= 1:
        return (Letter(n, sign),)
    wing = n - 1
    return (Letter(0, -1),) * wing + (Letter(1, sign),) + (Letter(0, 1),) * wing


def to_standard_word(a: NormalForm) -> Word:
    """Spell the element over {x0^+-1, x1^+-1} only, freely reducing
    adjacent inverse pairs.  The output is not claimed geodesic."""
    out: list[Letter] = []
    for lt in a.word():
        for std in _standard_letters(lt.index, lt.sign):
            if out and out[-1].index == std.index and out[-1].sign == -std.sign:
                out.pop()
            else:
                out.append(std)
    return Word(tuple(out))


def from_standard_word(w: Word) -> NormalForm:
    """Normal form of a word over the standard alphabet {x0^+-1, x1^+-1}."""
    for lt in w.letters:
        if lt.index > 1:
            raise ValueError(
                f"letter x{lt.index} is not in the standard alphabet {{x0, x1}}"
            )
    return reduce_to_normal_form(w)
