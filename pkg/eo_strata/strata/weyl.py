"""
The Weyl group W_g of Sp_2g, realized as the permutations w of {1..2g} with w(i) + w(2g+1-i) = 2g+1.

Words act leftmost letter first: the word s_a s_b evaluates to the permutation x -> s_b(s_a(x)).
This is also how sympy composes permutations, so evaluation is a plain product of sympy Permutations.
"""
import functools
import logging
import operator
import re
from typing import List, Optional, Tuple

import attr
from cached_property import cached_property
from more_itertools import first
from sympy.combinatorics import Permutation

from eo_strata.strata.core import FinalType, GroupMismatchError, InvalidTypeError, YoungType, final_to_young, \
    jumps_and_stays, young_to_final

__all__ = ["InvalidWeylElementError", "WeylElement", "WeylWord",
           "identity", "generator", "evaluate_word", "from_young", "from_final", "to_young",
           "length", "reduced_word", "bruhat_leq", "parse_word", "render_word", "parse_oneline"]
log = logging.getLogger(__name__)


class InvalidWeylElementError(ValueError):
    pass


@attr.s(frozen=True, str=False)
class WeylElement(object):
    g = attr.ib()  # type: int
    perm = attr.ib(converter=tuple)  # type: Tuple[int, ...]

    def __attrs_post_init__(self):
        n = 2 * self.g
        if self.g < 1 or sorted(self.perm) != list(range(1, n + 1)):
            raise InvalidWeylElementError("%s is not a permutation of {1..%s}" % (self, n))
        broken = [i for i in range(1, self.g + 1) if self(i) + self(n + 1 - i) != n + 1]
        if broken:
            raise InvalidWeylElementError("%s is not in W_%s: w(i) + w(2g+1-i) != 2g+1 for i in %s" % (self, self.g, broken))

    def __call__(self, i: int) -> int:
        return self.perm[i - 1]

    @cached_property
    def permutation(self) -> Permutation:
        return Permutation([v - 1 for v in self.perm])

    @classmethod
    def from_permutation(cls, g: int, permutation: Permutation) -> "WeylElement":
        return cls(g, (v + 1 for v in permutation.array_form))

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        """self * other applies self first"""
        _check_same_g(self, other)
        return WeylElement.from_permutation(self.g, self.permutation * other.permutation)

    def __str__(self):
        return "<%s>" % ",".join(str(v) for v in self.perm)


@attr.s(frozen=True, str=False)
class WeylWord(object):
    g = attr.ib()  # type: int
    letters = attr.ib(converter=tuple)  # type: Tuple[int, ...]

    @letters.validator
    def validate(self, *_):
        bad = [i for i in self.letters if not 1 <= i <= self.g]
        if bad:
            raise InvalidWeylElementError("Generator indices %s out of range {1..%s}" % (bad, self.g))

    def __len__(self):
        return len(self.letters)

    def __str__(self):
        return render_word(self)


def _check_same_g(u, w):
    if u.g != w.g:
        raise GroupMismatchError("Elements of W_%s and W_%s can't be combined" % (u.g, w.g))


def identity(g: int) -> WeylElement:
    return WeylElement(g, range(1, 2 * g + 1))


@functools.lru_cache(maxsize=None)
def generator(g: int, i: int) -> WeylElement:
    """s_i = (i,i+1)(2g-i,2g+1-i) for 1 <= i < g and s_g = (g,g+1)"""
    if not 1 <= i <= g:
        raise InvalidWeylElementError("Generator s_%s does not exist in W_%s" % (i, g))
    perm = list(range(1, 2 * g + 1))
    swaps = [(i, i + 1)] if i == g else [(i, i + 1), (2 * g - i, 2 * g + 1 - i)]
    for x, y in swaps:
        perm[x - 1], perm[y - 1] = perm[y - 1], perm[x - 1]
    return WeylElement(g, perm)


def evaluate_word(word: WeylWord) -> WeylElement:
    permutations = [generator(word.g, i).permutation for i in word.letters]
    if not permutations:
        return identity(word.g)
    return WeylElement.from_permutation(word.g, functools.reduce(operator.mul, permutations))


def from_final(nu: FinalType) -> WeylElement:
    g = nu.g
    perm = []
    jumps = stays = 0
    for is_jump in jumps_and_stays(nu):
        if is_jump:
            jumps += 1
            perm.append(g + jumps)
        else:
            stays += 1
            perm.append(stays)
    perm.extend(2 * g + 1 - v for v in reversed(perm))
    return WeylElement(g, perm)


def from_young(mu: YoungType) -> WeylElement:
    return from_final(young_to_final(mu))


def to_young(w: WeylElement) -> YoungType:
    """inverse of from_young on its image"""
    steps = [1 if w(i) > w.g else 0 for i in range(1, w.g + 1)]
    try:
        nu = FinalType(w.g, [sum(steps[:i]) for i in range(1, w.g + 1)])
    except InvalidTypeError as e:
        raise InvalidWeylElementError("%s does not come from a Young type" % (w,)) from e
    if from_final(nu) != w:
        raise InvalidWeylElementError("%s does not come from a Young type" % (w,))
    return final_to_young(nu)


def length(w: WeylElement) -> int:
    # inversions in S_2g plus the number of i <= g with w(i) > g, halved
    negative = sum(1 for i in range(1, w.g + 1) if w(i) > w.g)
    inversions = w.permutation.inversions()
    assert (inversions + negative) % 2 == 0, "Odd length count for %s" % (w,)
    return (inversions + negative) // 2


def _left_descent(oneline: List[int], g: int) -> Optional[int]:
    position = {value: x for x, value in enumerate(oneline)}
    return first((i for i in range(1, g + 1) if position[i] > position[i + 1]), None)


def _swap_values(oneline: List[int], g: int, i: int) -> List[int]:
    """one-line notation of s_i composed after w"""
    n = 2 * g
    swaps = {i: i + 1, i + 1: i}
    if i < g:
        swaps.update({n - i: n + 1 - i, n + 1 - i: n - i})
    return [swaps.get(value, value) for value in oneline]


def reduced_word(w: WeylElement) -> WeylWord:
    """greedy: repeatedly strip the smallest left descent, the word is read from its end"""
    g = w.g
    oneline = list(w.perm)
    letters = []
    while True:
        i = _left_descent(oneline, g)
        if i is None:
            break
        letters.append(i)
        oneline = _swap_values(oneline, g, i)
    assert oneline == list(range(1, 2 * g + 1)), "%s did not reduce to the identity" % (w,)
    word = WeylWord(g, reversed(letters))
    assert len(word) == length(w), "Greedy word %s for %s is not reduced" % (word, w)
    return word


@functools.lru_cache(maxsize=8192)
def _rank_matrix(w: WeylElement) -> Tuple[Tuple[int, ...], ...]:
    n = 2 * w.g
    return tuple(tuple(sum(1 for x in range(1, i + 1) if w(x) >= j) for j in range(1, n + 1)) for i in range(1, n + 1))


def bruhat_leq(u: WeylElement, w: WeylElement) -> bool:
    """Bruhat order of S_2g restricted to W_g, via the rank-matrix criterion"""
    _check_same_g(u, w)
    return all(ru <= rw for row_u, row_w in zip(_rank_matrix(u), _rank_matrix(w)) for ru, rw in zip(row_u, row_w))


WORD_LETTER_RE = re.compile(r"s_?\{?(\d+)\}?")


def parse_word(text: str, g: int) -> WeylWord:
    text = text.strip()
    if text in ("", "1", "id", "e"):
        return WeylWord(g, ())
    rest = WORD_LETTER_RE.sub("", text).replace("*", "").replace(" ", "")
    if rest:
        raise InvalidWeylElementError("Could not parse word '%s', unexpected '%s'" % (text, rest))
    return WeylWord(g, (int(i) for i in WORD_LETTER_RE.findall(text)))


def render_word(word: WeylWord, separator: str = "*") -> str:
    if not word.letters:
        return "1"
    return separator.join("s%s" % i for i in word.letters)


def parse_oneline(text: str) -> WeylElement:
    values = [int(v) for v in re.findall(r"\d+", text)]
    if not values or len(values) % 2:
        raise InvalidWeylElementError("One-line notation '%s' must list an even number of values" % text)
    return WeylElement(len(values) // 2, values)
