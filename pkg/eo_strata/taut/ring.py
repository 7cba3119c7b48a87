"""
Polynomials in the lambda classes lambda_1..lambda_g whose coefficients are integer polynomials in p.

This is the free commutative ring, the relations of the tautological ring are only produced
(see taut_relations), never imposed.
"""
import functools
import logging
import operator
from tokenize import TokenError
from typing import Dict, List, Mapping, Optional, Tuple

import attr
from pyrsistent import pmap
from sympy import Integer, Poly, Symbol, ZZ, factor, symbols
from sympy.parsing.sympy_parser import parse_expr
from sympy.polys.polyerrors import BasePolynomialError

__all__ = ["P", "GradingError", "LambdaPoly", "ppoly", "unit", "lam", "add", "multiply", "scale",
           "prank_class", "taut_relations", "eval_p", "parse_class", "render_class", "render_coefficient"]
log = logging.getLogger(__name__)

P = Symbol("p")
Exponents = Tuple[int, ...]


class GradingError(ValueError):
    pass


def ppoly(expr) -> Poly:
    """integer polynomial in p"""
    try:
        return Poly(expr, P, domain=ZZ)
    except BasePolynomialError as e:
        raise GradingError("%s is not an integer polynomial in p" % (expr,)) from e


def _prune(terms: Mapping[Exponents, Poly]):
    return pmap({exps: coeff for exps, coeff in dict(terms).items() if not coeff.is_zero})


@attr.s(frozen=True, str=False)
class LambdaPoly(object):
    g = attr.ib()  # type: int
    terms = attr.ib(converter=_prune)  # type: Mapping[Exponents, Poly]

    @terms.validator
    def validate(self, *_):
        bad = [exps for exps in self.terms if len(exps) != self.g or any(e < 0 for e in exps)]
        if bad:
            raise GradingError("Exponent vectors %s do not fit lambda_1..lambda_%s" % (bad, self.g))

    @staticmethod
    def degree_of(exps: Exponents) -> int:
        return sum(i * e for i, e in enumerate(exps, 1))

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> List[int]:
        return sorted({self.degree_of(exps) for exps in self.terms})

    def component(self, degree: int) -> "LambdaPoly":
        return LambdaPoly(self.g, {exps: c for exps, c in self.terms.items() if self.degree_of(exps) == degree})

    def sorted_terms(self) -> List[Tuple[Exponents, Poly]]:
        """by degree, then lower lambda indices first"""
        return sorted(self.terms.items(), key=lambda item: (self.degree_of(item[0]), tuple(-e for e in item[0])))

    def __add__(self, other):
        return add(self, other)

    def __mul__(self, other):
        return multiply(self, other)

    def __neg__(self):
        return scale(self, -1)

    def __sub__(self, other):
        return add(self, -other)

    def __str__(self):
        return render_class(self)


def _check_same_g(a: LambdaPoly, b: LambdaPoly):
    if a.g != b.g:
        raise GradingError("Classes for g=%s and g=%s can't be combined" % (a.g, b.g))


def unit(g: int) -> LambdaPoly:
    return LambdaPoly(g, {(0,) * g: ppoly(1)})


def lam(g: int, i: int) -> LambdaPoly:
    """lambda_i, with lambda_0 = 1"""
    if not 0 <= i <= g:
        raise GradingError("lambda_%s does not exist for g=%s" % (i, g))
    if i == 0:
        return unit(g)
    return LambdaPoly(g, {tuple(1 if j == i else 0 for j in range(1, g + 1)): ppoly(1)})


def add(a: LambdaPoly, b: LambdaPoly) -> LambdaPoly:
    _check_same_g(a, b)
    terms = dict(a.terms)
    for exps, coeff in b.terms.items():
        terms[exps] = terms[exps] + coeff if exps in terms else coeff
    return LambdaPoly(a.g, terms)


def multiply(a: LambdaPoly, b: LambdaPoly) -> LambdaPoly:
    _check_same_g(a, b)
    terms = {}  # type: Dict[Exponents, Poly]
    for exps_a, coeff_a in a.terms.items():
        for exps_b, coeff_b in b.terms.items():
            exps = tuple(map(operator.add, exps_a, exps_b))
            product = coeff_a * coeff_b
            terms[exps] = terms[exps] + product if exps in terms else product
    return LambdaPoly(a.g, terms)


def scale(a: LambdaPoly, factor_) -> LambdaPoly:
    """multiply every coefficient by an integer polynomial in p"""
    coeff = factor_ if isinstance(factor_, Poly) else ppoly(factor_)
    return LambdaPoly(a.g, {exps: c * coeff for exps, c in a.terms.items()})


def prank_class(g: int, f: int) -> LambdaPoly:
    """class (p-1)(p^2-1)...(p^(g-f)-1) lambda_(g-f) of the locus of p-rank at most f"""
    if not 0 <= f <= g:
        raise GradingError("p-rank %s out of range for g=%s" % (f, g))
    coeff = functools.reduce(operator.mul, (ppoly(P ** i - 1) for i in range(1, g - f + 1)), ppoly(1))
    return scale(lam(g, g - f), coeff)


def taut_relations(g: int) -> List[LambdaPoly]:
    """nonzero graded components of (1 + l1 + ... + lg)(1 - l1 + ... + (-1)^g lg) - 1, by degree"""
    if g < 1:
        raise GradingError("g must be positive, got %s" % g)
    total = functools.reduce(add, (lam(g, i) for i in range(g + 1)))
    alternating = functools.reduce(add, (scale(lam(g, i), (-1) ** i) for i in range(g + 1)))
    difference = total * alternating - unit(g)
    return [difference.component(d) for d in difference.degrees()]


def eval_p(lp: LambdaPoly, p_value: int) -> LambdaPoly:
    if p_value < 2:
        raise GradingError("p must be at least 2, got %s" % p_value)
    return LambdaPoly(lp.g, {exps: ppoly(coeff.eval(p_value)) for exps, coeff in lp.terms.items()})


def _lambda_symbols(g):
    return symbols("l1:%s" % (g + 1)) if g > 0 else ()


def parse_class(text: str, g: int) -> LambdaPoly:
    """
    Parses the machine form, e.g. "(p-1)*(p**2+1)*l1*l2 - 2*(p**3-1)*l3".
    l0 stands for the unit class, lambda may also be written as "λ" and powers as "^".
    """
    lams = _lambda_symbols(g)
    local = {"p": P, "l0": Integer(1)}
    local.update((str(s), s) for s in lams)
    source = text.replace("λ", "l").replace("^", "**")
    try:
        expr = parse_expr(source, local_dict=local)
    except (SyntaxError, TokenError, TypeError, ValueError) as e:
        raise GradingError("Could not parse class '%s': %s" % (text, e)) from e
    unknown = expr.free_symbols - set(lams) - {P}
    if unknown:
        raise GradingError("Class '%s' uses %s, which are not lambda_1..lambda_%s or p"
                           % (text, sorted(map(str, unknown)), g))
    if not lams:
        return LambdaPoly(g, {(): ppoly(expr)})
    poly = Poly(expr, *lams)
    return LambdaPoly(g, {exps: ppoly(coeff) for exps, coeff in poly.terms()})


def _needs_parentheses(text):
    depth = 0
    for i, char in enumerate(text):
        if char == "(":
            depth += 1
        elif char == ")":
            depth -= 1
        elif depth == 0 and i > 0 and char in "+-" and text[i - 1] == " ":
            return True
    return False


def render_coefficient(coeff: Poly, human: bool = False) -> str:
    text = str(factor(coeff.as_expr()))
    if human:
        text = text.replace("**", "^").replace(")*(", ")(")
    return text


def _render_monomial(exps: Exponents, human: bool) -> str:
    if not any(exps):
        return "λ0" if human else "l0"
    parts = []
    for i, e in enumerate(exps, 1):
        if e:
            base = ("λ%s" if human else "l%s") % i
            parts.append(base if e == 1 else "%s%s%s" % (base, "^" if human else "**", e))
    return ("" if human else "*").join(parts)


def render_class(lp: LambdaPoly, human: bool = False, factored: Optional[str] = None) -> str:
    """
    Coefficients are printed factored. If `factored` is given and denotes the same class,
    it is returned instead so that stored spellings are kept.
    """
    if factored is not None and parse_class(factored, lp.g) == lp:
        return factored.replace("**", "^").replace("*", "").replace("l", "λ") if human else factored
    if lp.is_zero:
        return "0"
    out = []
    for exps, coeff in lp.sorted_terms():
        negative = coeff.LC() < 0
        magnitude = -coeff if negative else coeff
        monomial = _render_monomial(exps, human)
        if magnitude == ppoly(1):
            term = monomial
        else:
            text = render_coefficient(magnitude, human)
            if _needs_parentheses(text):
                text = "(%s)" % text
            term = "%s%s%s" % (text, "" if human else "*", monomial)
        if not out:
            out.append("-" + term if negative else term)
        else:
            out.append(("- " if negative else "+ ") + term)
    return " ".join(out)
