"""
Propositional formulas over atomic projectors.

A formula is valued by representation: it is mapped to a closed subspace
(atoms to ranges, ``!`` to the orthocomplement, ``|`` to the join, ``&`` to
the meet) and the state's membership in that subspace decides its truth
value. The conjunction rule ``meet_membership_rule`` is the one place a
connective is applied truth-functionally, with strong-Kleene gaps.

Text syntax: atoms are identifiers, ``!`` binds tighter than ``&``, which
binds tighter than ``|``; binary operators associate to the left.
"""

import logging
import re
from typing import Iterator, List, Mapping, Optional, Tuple

from attrs import define

from .errors import DimensionMismatchError, FormulaSyntaxError, UnknownAtomError
from .models.distributivity_report import DistributivityReport
from .subspace import (
    Projector,
    Subspace,
    join,
    meet,
    ortho_complement,
    projector_of,
    range_of,
)
from .types import DEFAULT_TOLERANCE, MembershipMethod, Semantics, Tolerance, TruthValue
from .valuation import StateVector, valuate

logger = logging.getLogger(__name__)

_OR, _AND, _NOT, _ATOM = 1, 2, 3, 4


class Formula:
    """Base class of formula nodes; supports ``~``, ``&`` and ``|``."""

    precedence = _ATOM

    def __invert__(self) -> "Formula":
        return Not(self)

    def __and__(self, other: "Formula") -> "Formula":
        return And(self, other)

    def __or__(self, other: "Formula") -> "Formula":
        return Or(self, other)

    def children(self) -> Tuple["Formula", ...]:
        return ()

    def atoms(self) -> Iterator["Atomic"]:
        for child in self.children():
            yield from child.atoms()

    def depth(self) -> int:
        return 1 + max((child.depth() for child in self.children()), default=0)

    @property
    def dim_ambient(self) -> int:
        """Shared ambient dimension of the atoms.

        Raises:
            DimensionMismatchError: If two atoms live in different spaces.
        """
        dims = {atom.projector.dim_ambient for atom in self.atoms()}
        if len(dims) != 1:
            raise DimensionMismatchError(f"Atoms live in spaces of dimensions {sorted(dims)}")
        return dims.pop()

    def _wrap(self, child: "Formula", strict: bool) -> str:
        text = str(child)
        if child.precedence < self.precedence or (strict and child.precedence == self.precedence):
            return f"({text})"
        return text


@define(frozen=True)
class Atomic(Formula):
    projector: Projector
    label: str

    def atoms(self) -> Iterator["Atomic"]:
        yield self

    def __str__(self) -> str:
        return self.label


@define(frozen=True)
class Not(Formula):
    operand: Formula

    precedence = _NOT

    def children(self) -> Tuple[Formula, ...]:
        return (self.operand,)

    def __str__(self) -> str:
        return "!" + self._wrap(self.operand, strict=False)


@define(frozen=True)
class And(Formula):
    left: Formula
    right: Formula

    precedence = _AND

    def children(self) -> Tuple[Formula, ...]:
        return (self.left, self.right)

    def __str__(self) -> str:
        return f"{self._wrap(self.left, False)} & {self._wrap(self.right, True)}"


@define(frozen=True)
class Or(Formula):
    left: Formula
    right: Formula

    precedence = _OR

    def children(self) -> Tuple[Formula, ...]:
        return (self.left, self.right)

    def __str__(self) -> str:
        return f"{self._wrap(self.left, False)} | {self._wrap(self.right, True)}"


def atom(projector: Projector, label: Optional[str] = None) -> Atomic:
    return Atomic(projector, label or projector.label or "P")


_TOKEN = re.compile(r"\s*(?:(?P<atom>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[!&|()]))")


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    tokens: List[Tuple[str, str, int]] = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        match = _TOKEN.match(text, pos)
        if match is None:
            offending = len(text) - len(text[pos:].lstrip())
            raise FormulaSyntaxError(f"Unexpected character {text[offending]!r}", position=offending)
        kind = "atom" if match.group("atom") else "op"
        tokens.append((kind, match.group(kind), match.start(kind)))
        pos = match.end()
    return tokens


class _Parser:
    def __init__(self, text: str, atoms: Mapping[str, Projector]) -> None:
        self.text = text
        self.atoms = atoms
        self.tokens = _tokenize(text)
        self.index = 0

    def _peek(self) -> Optional[Tuple[str, str, int]]:
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _expect(self, value: str) -> None:
        token = self._peek()
        if token is None or token[1] != value:
            position = len(self.text) if token is None else token[2]
            raise FormulaSyntaxError(f"Expected {value!r}", position=position)
        self.index += 1

    def parse(self) -> Formula:
        if not self.tokens:
            raise FormulaSyntaxError("Empty formula", position=0)
        formula = self._disjunction()
        token = self._peek()
        if token is not None:
            raise FormulaSyntaxError(f"Unexpected {token[1]!r}", position=token[2])
        return formula

    def _disjunction(self) -> Formula:
        formula = self._conjunction()
        while (token := self._peek()) is not None and token[1] == "|":
            self.index += 1
            formula = Or(formula, self._conjunction())
        return formula

    def _conjunction(self) -> Formula:
        formula = self._negation()
        while (token := self._peek()) is not None and token[1] == "&":
            self.index += 1
            formula = And(formula, self._negation())
        return formula

    def _negation(self) -> Formula:
        token = self._peek()
        if token is None:
            raise FormulaSyntaxError("Unexpected end of formula", position=len(self.text))
        kind, value, position = token
        if value == "!":
            self.index += 1
            return Not(self._negation())
        if value == "(":
            self.index += 1
            formula = self._disjunction()
            self._expect(")")
            return formula
        if kind == "atom":
            self.index += 1
            if value not in self.atoms:
                raise UnknownAtomError(label=value)
            return Atomic(self.atoms[value], value)
        raise FormulaSyntaxError(f"Unexpected {value!r}", position=position)


def parse_formula(text: str, atoms: Mapping[str, Projector]) -> Formula:
    """Parse ``text`` (e.g. ``Q & (P | !P)``) with atom labels resolved in ``atoms``.

    Raises:
        FormulaSyntaxError: If the text is not a well-formed formula.
        UnknownAtomError: If an atom label is missing from ``atoms``.
    """
    formula = _Parser(text, atoms).parse()
    _ = formula.dim_ambient
    return formula


def represent(f: Formula, tol: Tolerance = DEFAULT_TOLERANCE) -> Subspace:
    """The closed subspace representing ``f``."""
    _ = f.dim_ambient
    return _represent(f, tol)


def _represent(f: Formula, tol: Tolerance) -> Subspace:
    if isinstance(f, Atomic):
        return range_of(f.projector, tol)
    if isinstance(f, Not):
        return ortho_complement(_represent(f.operand, tol), tol)
    if isinstance(f, And):
        return meet(_represent(f.left, tol), _represent(f.right, tol), tol)
    if isinstance(f, Or):
        return join(_represent(f.left, tol), _represent(f.right, tol), tol)
    raise TypeError(f"Not a formula node: {f!r}")


def evaluate(
    f: Formula,
    psi: StateVector,
    semantics: Semantics = Semantics.SUPERVALUATION,
    tol: Tolerance = DEFAULT_TOLERANCE,
    method: MembershipMethod = MembershipMethod.RESIDUAL,
) -> TruthValue:
    """Truth value of ``f`` by membership of ``psi`` in its representing subspace."""
    subspace = represent(f, tol)
    value = valuate(psi, projector_of(subspace), semantics, tol, method)
    logger.debug("evaluate %s: subspace dim %d -> %s", f, subspace.dim, value.value)
    return value


def meet_membership_rule(
    psi: StateVector,
    a: Formula,
    b: Formula,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> TruthValue:
    """Conjunction of the two membership predicates, gaps propagated strong-Kleene."""
    left = evaluate(a, psi, Semantics.SUPERVALUATION, tol)
    right = evaluate(b, psi, Semantics.SUPERVALUATION, tol)
    return left & right


def distributivity_check(
    q: Projector,
    p: Projector,
    psi: StateVector,
    tol: Tolerance = DEFAULT_TOLERANCE,
) -> DistributivityReport:
    """Evaluate ``Q & (P | !P)`` against ``(Q & P) | (Q & !P)`` under total semantics."""
    q_atom = atom(q, q.label or "Q")
    p_atom = atom(p, p.label or "P")
    lhs = q_atom & (p_atom | ~p_atom)
    rhs = (q_atom & p_atom) | (q_atom & ~p_atom)

    lhs_subspace = represent(lhs, tol)
    rhs_subspace = represent(rhs, tol)
    lhs_value = valuate(psi, projector_of(lhs_subspace), Semantics.QUANTUM_LOGIC, tol)
    rhs_value = valuate(psi, projector_of(rhs_subspace), Semantics.QUANTUM_LOGIC, tol)
    return DistributivityReport(
        lhs_value=lhs_value,
        rhs_value=rhs_value,
        lhs_subspace_dim=lhs_subspace.dim,
        rhs_subspace_dim=rhs_subspace.dim,
    )


__all__ = [
    "And",
    "Atomic",
    "Formula",
    "Not",
    "Or",
    "atom",
    "distributivity_check",
    "evaluate",
    "meet_membership_rule",
    "parse_formula",
    "represent",
]
