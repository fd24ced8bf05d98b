"""The identity catalog and the machinery that evaluates it.

Every checkable identity in the toolkit is registered here under a stable
tag.  An entry computes the list of summands of the residual at one tuple
of basis indices; the identity holds iff the summands add to zero at every
tuple.  Checkers assemble reports by running catalog entries, and the
fault-injection hook (used by the mutation-sensitivity tests) flips the
sign of a single summand of a single identity.
"""

from __future__ import annotations

import itertools
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable

from .kernel import Matrix, Tensor2, Tensor3
from .report import Violation, make_report

CATALOG: dict[str, "Identity"] = {}

# Tags that appear in reports but are not sign-flippable residual identities
# (structural predicates such as nondegeneracy, and named hypothesis gates).
EXTRA_TAGS = {
    "frobenius:nondegenerate",
    "frobenius:symmetry",
    "antisymmetric-tensor",
    "central-element",
    "orthogonal-product",
    "commutative-carrier",
    "cocommutative-carrier",
    "map-equality",
    "field-characteristic",
    "rep-homomorphism",
    "equivalence-mismatch",
}


@dataclass(frozen=True)
class Identity:
    tag: str
    spaces: tuple[str, ...]
    terms: Callable


def identity(tag: str, spaces: tuple[str, ...] = ()):
    def register(fn):
        if tag in CATALOG:
            raise ValueError(f"duplicate identity tag {tag!r}")
        CATALOG[tag] = Identity(tag, tuple(spaces), fn)
        return fn
    return register


def known_tags():
    return set(CATALOG) | EXTRA_TAGS


class Ctx:
    """Attribute bag handed to identity term functions.

    `spaces` maps a space name (e.g. "A", "C", "M") to its basis labels;
    identities quantify over the spaces they declare.
    """

    def __init__(self, spaces=None, **data):
        self.spaces = {k: tuple(v) for k, v in (spaces or {}).items()}
        for k, v in data.items():
            setattr(self, k, v)


_FAULTS: dict[str, int] = {}


@contextmanager
def seeded_fault(tag: str, term: int = 0):
    """Flip the sign of one summand of one identity while the context is open."""
    if tag not in CATALOG:
        raise KeyError(f"unknown identity tag {tag!r}")
    _FAULTS[tag] = term
    try:
        yield
    finally:
        _FAULTS.pop(tag, None)


def _neg(value):
    if isinstance(value, tuple):
        return tuple(-x for x in value)
    return -value


def _add(a, b):
    if isinstance(a, tuple):
        return tuple(x + y for x, y in zip(a, b))
    return a + b


def _is_zero(value):
    if isinstance(value, tuple):
        return not any(value)
    if isinstance(value, (Tensor2, Tensor3, Matrix)):
        return value.is_zero()
    return not value


def _render(value):
    if isinstance(value, tuple):
        return tuple(str(x) for x in value)
    if isinstance(value, Tensor2):
        d = value.dim
        return tuple(f"[{i},{j}]={value[i, j]}" for i in range(d) for j in range(d)
                     if value[i, j]) or ("0",)
    if isinstance(value, Tensor3):
        d = value.dim
        return tuple(f"[{i},{j},{k}]={value[i, j, k]}" for i in range(d) for j in range(d)
                     for k in range(d) if value[i, j, k]) or ("0",)
    if isinstance(value, Matrix):
        return tuple(f"[{i},{j}]={value[i, j]}" for i in range(value.rows)
                     for j in range(value.cols) if value[i, j]) or ("0",)
    return (str(value),)


def evaluate(tag: str, ctx: Ctx, idx: tuple[int, ...]):
    """Residual of one identity at one basis tuple (with any seeded fault applied)."""
    ident = CATALOG[tag]
    terms = list(ident.terms(ctx, idx))
    hit = _FAULTS.get(tag)
    if hit is not None and hit < len(terms):
        terms[hit] = _neg(terms[hit])
    total = terms[0]
    for t in terms[1:]:
        total = _add(total, t)
    return total


def run_identities(check: str, tags, ctx: Ctx, provenance=None):
    """Evaluate a tag list over all basis tuples; report every violation."""
    violations = []
    for tag in tags:
        ident = CATALOG[tag]
        label_sets = [ctx.spaces[s] for s in ident.spaces]
        for idx in itertools.product(*(range(len(ls)) for ls in label_sets)):
            res = evaluate(tag, ctx, idx)
            if not _is_zero(res):
                inputs = tuple(label_sets[k][i] for k, i in enumerate(idx))
                violations.append(Violation(tag, inputs, _render(res)))
    return make_report(check, violations, provenance=provenance)


def run_groups(check: str, groups, provenance=None):
    """Like run_identities, for a list of (tags, ctx) groups sharing one report."""
    violations = []
    for tags, ctx in groups:
        rep = run_identities(check, tags, ctx)
        violations.extend(rep.violations)
    return make_report(check, violations, provenance=provenance)
