"""
Final types and Young types of symmetric BT1 group schemes, their conversions and numeric invariants.

A final type of dimension g is a sequence nu_1..nu_g with nu_0 := 0 and nu_{i-1} <= nu_i <= nu_{i-1} + 1.
Step i is a *jump* if nu_i = nu_{i-1} + 1 and a *stay* otherwise.
The Young type mu_j = #{i | j <= i - nu_i} is a strict partition with parts in {1..g}.
"""
import itertools
import logging
import re
from typing import Iterator, List, Optional, Sequence, Tuple

import attr
from more_itertools import pairwise

__all__ = ["InvalidTypeError", "LengthMismatchError", "GroupMismatchError",
           "FinalType", "YoungType", "StratumRecord",
           "validate_final_type", "validate_young_type", "enumerate_final_types", "enumerate_young_types",
           "final_to_young", "young_to_final", "p_rank_of_final", "a_number_of_final", "invariants_of_young",
           "stratum_dim", "stratum_codim", "stratum_record", "full_dimension",
           "a_number_stratum_codim", "generic_type_for_a_number", "jumps_and_stays",
           "parse_final_type", "parse_young_type"]
log = logging.getLogger(__name__)


class InvalidTypeError(ValueError):
    pass


class LengthMismatchError(ValueError):
    pass


class GroupMismatchError(ValueError):
    pass


def full_dimension(g: int) -> int:
    """dimension g(g+1)/2 of the moduli space, i.e. of the ordinary stratum"""
    return g * (g + 1) // 2


def _check_g(g):
    if not isinstance(g, int) or g < 1:
        raise InvalidTypeError("Dimension g must be a positive integer, got %r" % (g,))


def validate_final_type(g: int, nu: Sequence[int]) -> bool:
    nu = tuple(nu)
    if len(nu) != g:
        raise LengthMismatchError("Final type %s has length %s, but g is %s" % (list(nu), len(nu), g))
    return all(prev <= cur <= prev + 1 for prev, cur in pairwise((0,) + nu))


def validate_young_type(g: int, mu: Sequence[int]) -> bool:
    mu = tuple(mu)
    if any(not 1 <= part <= g for part in mu):
        return False
    return all(prev > cur for prev, cur in pairwise(mu))


@attr.s(frozen=True, str=False)
class FinalType(object):
    g = attr.ib()  # type: int
    nu = attr.ib(converter=tuple)  # type: Tuple[int, ...]

    def __attrs_post_init__(self):
        _check_g(self.g)
        if not validate_final_type(self.g, self.nu):
            raise InvalidTypeError("%s is not a valid final type: need nu_{i-1} <= nu_i <= nu_{i-1} + 1 with nu_0 = 0"
                                   % list(self.nu))

    @classmethod
    def of(cls, nu: Sequence[int]) -> "FinalType":
        nu = tuple(nu)
        return cls(len(nu), nu)

    def __getitem__(self, i):
        """1-based access with the convention nu_0 = 0"""
        return 0 if i == 0 else self.nu[i - 1]

    def __str__(self):
        return "[%s]" % ",".join(str(v) for v in self.nu)


@attr.s(frozen=True, str=False)
class YoungType(object):
    g = attr.ib()  # type: int
    mu = attr.ib(converter=tuple)  # type: Tuple[int, ...]

    def __attrs_post_init__(self):
        _check_g(self.g)
        if not validate_young_type(self.g, self.mu):
            raise InvalidTypeError("%s is not a valid Young type for g=%s: parts must be strictly decreasing in {1..%s}"
                                   % (self, self.g, self.g))

    def part(self, j) -> int:
        """1-based, missing parts read as 0"""
        return self.mu[j - 1] if j <= len(self.mu) else 0

    def __str__(self):
        return "{%s}" % ",".join(str(v) for v in self.mu)


@attr.s(frozen=True)
class StratumRecord(object):
    final_type = attr.ib()  # type: FinalType
    young_type = attr.ib()  # type: YoungType
    f = attr.ib()  # type: int
    a = attr.ib()  # type: int
    dim = attr.ib()  # type: int
    codim = attr.ib()  # type: int
    name = attr.ib(default=None)  # type: Optional[object]

    @f.validator
    def validate(self, *_):
        g = self.final_type.g
        if self.dim + self.codim != full_dimension(g):
            raise InvalidTypeError("dim %s + codim %s != %s" % (self.dim, self.codim, full_dimension(g)))
        if not (0 <= self.f <= g and 0 <= self.a <= g - self.f):
            raise InvalidTypeError("Invariants f=%s, a=%s out of range for g=%s" % (self.f, self.a, g))

    @property
    def g(self) -> int:
        return self.final_type.g


def enumerate_final_types(g: int) -> List[FinalType]:
    """all 2^g final types, in lexicographic order on nu"""
    _check_g(g)
    return [FinalType(g, itertools.accumulate(steps)) for steps in itertools.product((0, 1), repeat=g)]


def enumerate_young_types(g: int) -> List[YoungType]:
    return [final_to_young(nu) for nu in enumerate_final_types(g)]


def jumps_and_stays(nu: FinalType) -> Iterator[bool]:
    """yields True for each jump and False for each stay of nu"""
    return (cur > prev for prev, cur in pairwise((0,) + nu.nu))


def final_to_young(nu: FinalType) -> YoungType:
    diffs = [i - v for i, v in enumerate(nu.nu, 1)]
    mu = (sum(1 for d in diffs if j <= d) for j in range(1, nu.g + 1))
    return YoungType(nu.g, itertools.takewhile(bool, mu))


def young_to_final(mu: YoungType) -> FinalType:
    # the c-th stay of nu happens at index g + 1 - mu_c
    stays = {mu.g + 1 - part for part in mu.mu}
    nu = itertools.accumulate(0 if i in stays else 1 for i in range(1, mu.g + 1))
    try:
        result = FinalType(mu.g, nu)
    except InvalidTypeError as e:
        raise InvalidTypeError("Young type %s is not the image of a final type" % (mu,)) from e
    if final_to_young(result) != mu:
        raise InvalidTypeError("Young type %s is not the image of a final type" % (mu,))
    return result


def p_rank_of_final(nu: FinalType) -> int:
    return max((i for i, v in enumerate(nu.nu, 1) if v == i), default=0)


def a_number_of_final(nu: FinalType) -> int:
    return nu.g - nu.nu[-1]


def invariants_of_young(mu: YoungType) -> Tuple[int, int]:
    return mu.g - mu.part(1), len(mu.mu)


def stratum_dim(nu: FinalType) -> int:
    return sum(nu.nu)


def stratum_codim(mu: YoungType) -> int:
    return sum(mu.mu)


def stratum_record(nu: FinalType, name=None) -> StratumRecord:
    mu = final_to_young(nu)
    return StratumRecord(final_type=nu, young_type=mu, f=p_rank_of_final(nu), a=a_number_of_final(nu),
                         dim=stratum_dim(nu), codim=stratum_codim(mu), name=name)


def a_number_stratum_codim(a: int) -> int:
    """codimension a(a+1)/2 of the locus of a-number at least a"""
    if a < 0:
        raise InvalidTypeError("a-number must be non-negative, got %s" % a)
    return a * (a + 1) // 2


def generic_type_for_a_number(g: int, a: int) -> FinalType:
    """final type [1, ..., f, f, ..., f] of L^f + I_{1,1}^a with f = g - a"""
    _check_g(g)
    if not 0 <= a <= g:
        raise InvalidTypeError("a-number %s out of range for g=%s" % (a, g))
    f = g - a
    return FinalType(g, [min(i, f) for i in range(1, g + 1)])


SEQUENCE_RE = re.compile(r"^\s*[\[{(]?\s*((?:\d+\s*(?:,\s*|\s+))*\d+)?\s*[\]})]?\s*$")


def _parse_int_sequence(text: str, what: str) -> Tuple[int, ...]:
    text = text.strip()
    if text in ("∅", "{∅}", "{\\emptyset}", "empty"):
        return tuple()
    match = SEQUENCE_RE.match(text)
    if not match:
        raise InvalidTypeError("Could not parse %s from '%s'" % (what, text))
    return tuple(int(v) for v in re.split(r"[\s,]+", match.group(1) or "") if v)


def parse_final_type(text: str, g: Optional[int] = None) -> FinalType:
    nu = _parse_int_sequence(text, "final type")
    if g is not None and g != len(nu):
        raise LengthMismatchError("Final type %s has length %s, but g is %s" % (list(nu), len(nu), g))
    if not nu:
        raise InvalidTypeError("Final type must not be empty")
    return FinalType.of(nu)


def parse_young_type(text: str, g: Optional[int] = None) -> YoungType:
    mu = _parse_int_sequence(text, "Young type")
    if g is None:
        if not mu:
            raise InvalidTypeError("Cannot infer g from the empty Young type, please specify g")
        g = mu[0]
    return YoungType(g, mu)
