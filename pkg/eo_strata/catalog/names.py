"""
Names of group schemes as direct sums of L, I[r,1], I[r,2] and I[4,3].

Grammar (whitespace ignored, "⊕" may be used instead of "+"):

    name := term ("+" term)*
    term := base ("^" posint)?
    base := "L" | "I[" posint "," posint "]"
"""
import collections
import logging
from typing import Tuple

import attr
import pyparsing as pp

__all__ = ["NameSyntaxError", "NameSemanticError", "GroupSchemeName", "parse_name", "render_name", "make_name"]
log = logging.getLogger(__name__)

Factor = Tuple[int, int]  # (r, a) of I[r,a]


class NameSyntaxError(ValueError):
    def __init__(self, text, position, message):
        super().__init__("Invalid name '%s' at position %s: %s" % (text, position, message))
        self.text = text
        self.position = position


class NameSemanticError(ValueError):
    pass


def _check_factor(r, a):
    label = "I[%s,%s]" % (r, a)
    if r < 1:
        raise NameSemanticError("%s is not a defined indecomposable, r must be positive" % label)
    if a == 1:
        return
    if a == 2 and r >= 3:
        return
    if a == 3 and r == 4:
        return
    raise NameSemanticError("%s is not a defined indecomposable" % label)


@attr.s(frozen=True, str=False)
class GroupSchemeName(object):
    l_exponent = attr.ib()  # type: int
    factors = attr.ib(converter=lambda fs: tuple(sorted(fs)))  # type: Tuple[Factor, ...]

    @factors.validator
    def validate(self, *_):
        if self.l_exponent < 0:
            raise NameSemanticError("Exponent of L must be non-negative, got %s" % self.l_exponent)
        for r, a in self.factors:
            _check_factor(r, a)
        if self.g == 0:
            raise NameSemanticError("A name needs at least one summand")

    @property
    def g(self) -> int:
        return self.l_exponent + sum(r for r, _ in self.factors)

    def __str__(self):
        return render_name(self)


def make_name(l_exponent: int = 0, *factors: Factor) -> GroupSchemeName:
    return GroupSchemeName(l_exponent, factors)


class NameGrammar(object):
    posint = pp.Word(pp.nums).set_name("positive integer").set_parse_action(pp.common.convert_to_integer)
    plus = pp.Suppress(pp.one_of("+ ⊕"))
    l_base = pp.Literal("L")
    i_base = pp.Group(pp.Suppress("I") + pp.Suppress("[") + posint + pp.Suppress(",") + posint + pp.Suppress("]"))
    base = (l_base | i_base).set_name("L or I[r,a]")
    term = pp.Group(base + pp.Optional(pp.Suppress("^") + posint, default=1))
    name = term + pp.ZeroOrMore(plus + term)


def parse_name(text: str) -> GroupSchemeName:
    try:
        terms = NameGrammar.name.parse_string(text, parse_all=True)
    except pp.ParseException as e:
        raise NameSyntaxError(text, e.loc, e.msg) from e
    l_exponent = 0
    factors = []
    for base, exponent in terms:
        if exponent < 1:
            raise NameSemanticError("Exponent must be positive in '%s'" % text)
        if isinstance(base, str):
            l_exponent += exponent
        else:
            r, a = base
            _check_factor(r, a)
            factors.extend([(r, a)] * exponent)
    name = GroupSchemeName(l_exponent, factors)
    log.debug("Parsed '%s' as %s", text, name)
    return name


SUBSCRIPTS = str.maketrans("0123456789,", "₀₁₂₃₄₅₆₇₈₉,")
SUPERSCRIPTS = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def render_name(name: GroupSchemeName, unicode: bool = False) -> str:
    """ASCII "L^2+I[1,1]^2" or unicode "L² ⊕ I₁,₁²"; summands ordered L first, then by (r, a)"""
    def power(base, exponent):
        if exponent == 1:
            return base
        return base + (str(exponent).translate(SUPERSCRIPTS) if unicode else "^%s" % exponent)

    terms = []
    if name.l_exponent:
        terms.append(power("L", name.l_exponent))
    for (r, a), count in collections.Counter(name.factors).items():
        base = ("I%s" % ("%s,%s" % (r, a)).translate(SUBSCRIPTS)) if unicode else "I[%s,%s]" % (r, a)
        terms.append(power(base, count))
    return (" ⊕ " if unicode else "+").join(terms)
