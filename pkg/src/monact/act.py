"""Finite right acts over a monoid: carriers, subacts, equivariant maps,
and the two quotient constructions (Rees and by an arbitrary congruence).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import TYPE_CHECKING

from .errors import (
    AssociativityAxiomFails,
    EntryOutOfRange,
    IdentityAxiomFails,
    NotACongruence,
    NotEquivariant,
    SourceTargetMismatch,
)
from .monoid import Monoid

if TYPE_CHECKING:
    from .congruence import Congruence


@dataclass(frozen=True)
class Act:
    """Right action table: action[a][s] = a*s, one row per carrier element."""

    monoid: Monoid
    size: int
    action: tuple

    def act(self, a: int, s: int) -> int:
        return self.action[a][s]

    def elements(self):
        return range(self.size)


@dataclass(frozen=True)
class Subact:
    """A non-empty action-closed subset, members sorted ascending."""

    parent: Act
    members: tuple

    def __contains__(self, a):
        return a in self.members


@dataclass(frozen=True)
class ActHom:
    """An equivariant map, stored as the image tuple over the source carrier."""

    source: Act
    target: Act
    mapping: tuple

    def __call__(self, a: int) -> int:
        return self.mapping[a]

    def is_endo(self) -> bool:
        return self.source == self.target

    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.size

    def is_bijective(self) -> bool:
        return self.is_injective() and self.is_surjective()


def validate_act(M: Monoid, size: int, action) -> Act:
    """Checked constructor: both act axioms, witnesses in the input labels."""
    action = tuple(tuple(row) for row in action)
    if size < 1:
        raise EntryOutOfRange("carrier must be non-empty")
    if len(action) != size:
        raise EntryOutOfRange(f"expected {size} rows, got {len(action)}")
    for a, row in enumerate(action):
        if len(row) != M.size:
            raise EntryOutOfRange(f"row {a} has {len(row)} entries, expected {M.size}")
        for s, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < size:
                raise EntryOutOfRange(f"entry ({a},{s}) = {v!r} not in [0,{size})")
    for a in range(size):
        if action[a][0] != a:
            raise IdentityAxiomFails(a)
    for a in range(size):
        for s in range(M.size):
            a_s = action[a][s]
            for t in range(M.size):
                if action[a][M.table[s][t]] != action[a_s][t]:
                    raise AssociativityAxiomFails(a, s, t)
    return Act(M, size, action)


def regular_act(M: Monoid) -> Act:
    """The monoid acting on itself by right multiplication."""
    return Act(M, M.size, M.table)


def act_hom(source: Act, target: Act, mapping) -> ActHom:
    """Checked constructor for an equivariant map."""
    if source.monoid != target.monoid:
        raise SourceTargetMismatch("acts live over different monoids")
    mapping = tuple(mapping)
    for a in range(source.size):
        for s in range(source.monoid.size):
            if mapping[source.action[a][s]] != target.action[mapping[a]][s]:
                raise NotEquivariant(a, s)
    return ActHom(source, target, mapping)


def identity_hom(A: Act) -> ActHom:
    return ActHom(A, A, tuple(range(A.size)))


def compose(g: ActHom, f: ActHom) -> ActHom:
    """(g o f)(a) = g(f(a))."""
    if f.target != g.source:
        raise SourceTargetMismatch("inner map's target differs from outer's source")
    return ActHom(f.source, g.target, tuple(g.mapping[b] for b in f.mapping))


def power(f: ActHom, n: int) -> ActHom:
    """n-fold composite of an endomorphism, n >= 1."""
    if f.source != f.target:
        raise SourceTargetMismatch("power needs an endomorphism")
    if n < 1:
        raise ValueError("exponent must be >= 1")
    acc = f
    for _ in range(n - 1):
        acc = compose(f, acc)
    return acc


def subact(A: Act, members) -> Subact:
    """Checked constructor: members non-empty and closed under the action."""
    members = tuple(sorted(set(members)))
    if not members:
        raise ValueError("subacts are non-empty")
    member_set = set(members)
    for b in members:
        for s in range(A.monoid.size):
            if A.action[b][s] not in member_set:
                raise ValueError(f"not closed: {b}*{s} leaves the subset")
    return Subact(A, members)


def image_subact(f: ActHom) -> Subact:
    """The set image of f; closed by equivariance."""
    return subact(f.target, set(f.mapping))


def subact_generated(A: Act, xs) -> Subact:
    """Smallest subact containing xs, i.e. the union of the orbits x*S."""
    xs = set(xs)
    if not xs:
        raise ValueError("generating set must be non-empty")
    members = set()
    for x in xs:
        members.update(A.action[x])
    return Subact(A, tuple(sorted(members)))


def minimal_generating_set(A: Act):
    """Minimum-cardinality generating subset, lexicographically first."""
    for k in range(1, A.size + 1):
        for xs in combinations(range(A.size), k):
            covered = set()
            for x in xs:
                covered.update(A.action[x])
            if len(covered) == A.size:
                return xs
    raise AssertionError("the whole carrier generates")


def subact_as_act(B: Subact):
    """B as an act in its own right; returns (act, embedding).

    embedding[i] is the parent-carrier element of sub-carrier index i.
    """
    parent = B.parent
    index = {b: i for i, b in enumerate(B.members)}
    action = tuple(
        tuple(index[parent.action[b][s]] for s in range(parent.monoid.size))
        for b in B.members
    )
    return Act(parent.monoid, len(B.members), action), B.members


def enumerate_subacts(A: Act):
    """All subacts, ordered by (size, members)."""
    n_s = A.monoid.size
    closed = []
    for k in range(1, A.size + 1):
        for members in combinations(range(A.size), k):
            mset = set(members)
            if all(A.action[b][s] in mset for b in members for s in range(n_s)):
                closed.append(Subact(A, members))
    return closed


def rees_quotient(A: Act, B: Subact):
    """Collapse the subact B to a point; returns (factor act, projection).

    The collapsed class takes index 0; the remaining elements keep their
    relative order starting at index 1.
    """
    if B.parent != A:
        raise ValueError("subact belongs to a different act")
    members = set(B.members)
    proj = [0] * A.size
    nxt = 1
    for a in range(A.size):
        if a not in members:
            proj[a] = nxt
            nxt += 1
    reps = [B.members[0]] + [a for a in range(A.size) if a not in members]
    action = tuple(
        tuple(proj[A.action[rep][s]] for s in range(A.monoid.size)) for rep in reps
    )
    quotient = Act(A.monoid, nxt, action)
    return quotient, ActHom(A, quotient, tuple(proj))


def quotient_by_congruence(A: Act, rho: "Congruence"):
    """Factor act A/rho plus the canonical projection.

    Classes are indexed by their smallest original element.  Raises
    NotACongruence if the partition is not action-compatible.
    """
    if rho.act != A:
        raise NotACongruence("congruence belongs to a different act")
    classes = rho.classes
    class_of = [0] * A.size
    for i, cls in enumerate(classes):
        for a in cls:
            class_of[a] = i
    action = []
    for cls in classes:
        rep_row = tuple(class_of[A.action[cls[0]][s]] for s in range(A.monoid.size))
        for a in cls[1:]:
            row = tuple(class_of[A.action[a][s]] for s in range(A.monoid.size))
            if row != rep_row:
                raise NotACongruence("partition is not action-compatible")
        action.append(rep_row)
    quotient = Act(A.monoid, len(classes), tuple(action))
    return quotient, ActHom(A, quotient, tuple(class_of))
