"""
Dieudonne modules of BT1 group schemes in a signed monomial model.

A module is a k-vector space of dimension 2g with a fixed basis on which F and V act by sending
each basis vector to plus or minus another basis vector, or to zero. Both maps must be injective
on the basis vectors they do not kill, so that images and preimages of coordinate subspaces are
again coordinate subspaces and can be represented by sets of basis indices.
"""
import logging
from typing import FrozenSet, Iterable, List, Optional, Sequence, Tuple

import attr
from more_itertools import duplicates_everseen
from tabulate import tabulate

__all__ = ["ModuleError", "Action", "MonomialModule", "Subspace", "ModuleBuilder", "direct_sum", "render_module"]
log = logging.getLogger(__name__)

Action = Optional[Tuple[int, int]]  # (target index, sign) or None for zero


class ModuleError(ValueError):
    pass


def _check_action(name, action, n):
    if len(action) != n:
        raise ModuleError("%s action has %s entries for a module of dimension %s" % (name, len(action), n))
    for index, entry in enumerate(action):
        if entry is None:
            continue
        target, sign = entry
        if not 0 <= target < n or sign not in (1, -1):
            raise ModuleError("%s action of basis vector %s is malformed: %r" % (name, index, entry))
    targets = [entry[0] for entry in action if entry is not None]
    clashes = list(duplicates_everseen(targets))
    if clashes:
        raise ModuleError("%s is not injective on its support, basis vectors %s are hit twice" % (name, clashes))


@attr.s(frozen=True, cache_hash=True)
class MonomialModule(object):
    g = attr.ib()  # type: int
    labels = attr.ib(converter=tuple)  # type: Tuple[str, ...]
    f_action = attr.ib(converter=tuple)  # type: Tuple[Action, ...]
    v_action = attr.ib(converter=tuple)  # type: Tuple[Action, ...]

    def __attrs_post_init__(self):
        n = len(self.labels)
        if self.g < 1 or n != 2 * self.g:
            raise ModuleError("Module with %s basis vectors can't have g=%s" % (n, self.g))
        _check_action("F", self.f_action, n)
        _check_action("V", self.v_action, n)
        for first, second, name in ((self.v_action, self.f_action, "FV"), (self.f_action, self.v_action, "VF")):
            broken = [self.labels[i] for i, entry in enumerate(first)
                      if entry is not None and second[entry[0]] is not None]
            if broken:
                raise ModuleError("Relation %s = 0 fails on %s" % (name, broken))

    @property
    def dim(self) -> int:
        return len(self.labels)

    @property
    def indices(self) -> range:
        return range(self.dim)

    def whole(self) -> "Subspace":
        return Subspace(self, self.indices)

    def zero(self) -> "Subspace":
        return Subspace(self, ())

    def span(self, labels: Iterable[str]) -> "Subspace":
        """subspace spanned by the basis vectors with the given labels"""
        try:
            return Subspace(self, (self.labels.index(label) for label in labels))
        except ValueError as e:
            raise ModuleError("Unknown basis label in %s" % (list(labels),)) from e

    def kernel_F(self) -> "Subspace":
        return self.zero().preimage_F()

    def kernel_V(self) -> "Subspace":
        return self.zero().preimage_V()

    def __str__(self):
        return "MonomialModule(g=%s, basis=%s)" % (self.g, ", ".join(self.labels))


@attr.s(frozen=True, str=False)
class Subspace(object):
    module = attr.ib(repr=False)  # type: MonomialModule
    members = attr.ib(converter=frozenset)  # type: FrozenSet[int]

    @members.validator
    def validate(self, *_):
        outside = [i for i in self.members if not 0 <= i < self.module.dim]
        if outside:
            raise ModuleError("Basis indices %s are not in a module of dimension %s" % (outside, self.module.dim))

    @property
    def dim(self) -> int:
        return len(self.members)

    def _image(self, action):
        return Subspace(self.module, (action[i][0] for i in self.members if action[i] is not None))

    def _preimage(self, action):
        return Subspace(self.module, (i for i in self.module.indices
                                      if action[i] is None or action[i][0] in self.members))

    def apply_F(self) -> "Subspace":
        return self._image(self.module.f_action)

    def apply_V(self) -> "Subspace":
        return self._image(self.module.v_action)

    def preimage_F(self) -> "Subspace":
        """F^{-1}(self), always containing ker F"""
        return self._preimage(self.module.f_action)

    def preimage_V(self) -> "Subspace":
        return self._preimage(self.module.v_action)

    def _check_same_module(self, other):
        if self.module != other.module:
            raise ModuleError("Subspaces of different modules can't be combined")

    def __and__(self, other: "Subspace") -> "Subspace":
        self._check_same_module(other)
        return Subspace(self.module, self.members & other.members)

    def __or__(self, other: "Subspace") -> "Subspace":
        self._check_same_module(other)
        return Subspace(self.module, self.members | other.members)

    def __le__(self, other: "Subspace") -> bool:
        self._check_same_module(other)
        return self.members <= other.members

    def __lt__(self, other: "Subspace") -> bool:
        self._check_same_module(other)
        return self.members < other.members

    @property
    def labels(self) -> List[str]:
        return [self.module.labels[i] for i in sorted(self.members)]

    def __str__(self):
        if not self.members:
            return "<0>"
        return "<%s>" % ", ".join(self.labels)


class ModuleBuilder(object):
    """collects basis vectors by label and F/V assignments between them"""

    def __init__(self, g: int):
        self.g = g
        self.labels = []  # type: List[str]
        self.f = {}
        self.v = {}

    def add(self, *labels: str) -> "ModuleBuilder":
        self.labels.extend(labels)
        return self

    def _set(self, action, source, target, sign):
        try:
            action[self.labels.index(source)] = (self.labels.index(target), sign)
        except ValueError as e:
            raise ModuleError("Unknown basis label in %s -> %s" % (source, target)) from e
        return self

    def F(self, source: str, target: str, sign: int = 1) -> "ModuleBuilder":
        return self._set(self.f, source, target, sign)

    def V(self, source: str, target: str, sign: int = 1) -> "ModuleBuilder":
        return self._set(self.v, source, target, sign)

    def build(self) -> MonomialModule:
        n = len(self.labels)
        return MonomialModule(self.g, self.labels,
                              [self.f.get(i) for i in range(n)],
                              [self.v.get(i) for i in range(n)])


def direct_sum(modules: Sequence[MonomialModule]) -> MonomialModule:
    """block diagonal sum, labels prefixed with the 1-based factor index"""
    modules = list(modules)
    if not modules:
        raise ModuleError("Direct sum of an empty list of modules")
    if len(modules) == 1:
        return modules[0]
    labels, f_action, v_action = [], [], []
    offset = 0
    for number, module in enumerate(modules, 1):
        labels.extend("%s:%s" % (number, label) for label in module.labels)
        for source, target in ((module.f_action, f_action), (module.v_action, v_action)):
            target.extend(None if entry is None else (entry[0] + offset, entry[1]) for entry in source)
        offset += module.dim
    return MonomialModule(sum(m.g for m in modules), labels, f_action, v_action)


def _render_action(module, entry):
    if entry is None:
        return "0"
    target, sign = entry
    return ("-" if sign < 0 else "") + module.labels[target]


def render_module(module: MonomialModule) -> str:
    rows = [(i + 1, label, _render_action(module, module.f_action[i]), _render_action(module, module.v_action[i]))
            for i, label in enumerate(module.labels)]
    return "Dieudonne module, g=%s, dimension %s\n%s" % (
        module.g, module.dim, tabulate(rows, headers=("#", "basis", "F", "V"), tablefmt="simple"))
