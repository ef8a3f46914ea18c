"""Homomorphism and endomorphism enumeration, and End(A) as a monoid.

Enumeration backtracks over images of a minimal generating set of the
source; every chosen image is propagated through the action, so a
candidate either collapses to a full map or dies on a conflict.
"""

from __future__ import annotations

from dataclasses import dataclass

from .act import Act, ActHom, Subact, minimal_generating_set
from .errors import SearchBudgetExceeded, SourceTargetMismatch
from .monoid import Monoid, validate_monoid

DEFAULT_SEARCH_BUDGET = 10**6


def homomorphisms(A: Act, B: Act, budget: int = DEFAULT_SEARCH_BUDGET):
    """All equivariant maps A -> B, sorted by their full map tuple.

    Each (generator, image) attempt costs one budget node; exceeding the
    budget raises SearchBudgetExceeded.
    """
    if A.monoid != B.monoid:
        raise SourceTargetMismatch("acts live over different monoids")
    gens = minimal_generating_set(A)
    n_s = A.monoid.size
    mapping = [-1] * A.size
    results = []
    nodes = 0

    def verify_full():
        for a in range(A.size):
            fa = mapping[a]
            row_a = A.action[a]
            row_fa = B.action[fa]
            for s in range(n_s):
                if mapping[row_a[s]] != row_fa[s]:
                    return False
        return True

    def backtrack(k):
        nonlocal nodes
        if k == len(gens):
            assert -1 not in mapping, "generators must force the whole map"
            if verify_full():
                results.append(tuple(mapping))
            return
        g = gens[k]
        row_g = A.action[g]
        for img in range(B.size):
            nodes += 1
            if nodes > budget:
                raise SearchBudgetExceeded(f"over {budget} backtrack nodes")
            row_img = B.action[img]
            undo = []
            ok = True
            for s in range(n_s):
                a2, b2 = row_g[s], row_img[s]
                cur = mapping[a2]
                if cur == -1:
                    mapping[a2] = b2
                    undo.append(a2)
                elif cur != b2:
                    ok = False
                    break
            if ok:
                backtrack(k + 1)
            for a2 in undo:
                mapping[a2] = -1

    backtrack(0)
    results.sort()
    return [ActHom(A, B, m) for m in results]


def endomorphisms(A: Act, budget: int = DEFAULT_SEARCH_BUDGET):
    return homomorphisms(A, A, budget)


@dataclass(frozen=True)
class EndMonoid:
    """End(A) under composition (f*g)(a) = f(g(a)).

    `elements[i]` is the endomorphism behind monoid index i; the identity
    endomorphism sits at index 0 and the rest keep lexicographic map
    order, matching the monoid normal form.
    """

    monoid: Monoid
    elements: tuple
    act: Act


def end_monoid(A: Act, budget: int = DEFAULT_SEARCH_BUDGET) -> EndMonoid:
    endos = endomorphisms(A, budget)
    index = {f.mapping: i for i, f in enumerate(endos)}
    raw = [
        [index[tuple(f.mapping[g.mapping[a]] for a in range(A.size))] for g in endos]
        for f in endos
    ]
    monoid = validate_monoid(len(endos), raw)
    reordered = [None] * len(endos)
    for old, new in enumerate(monoid.relabeling):
        reordered[new] = endos[old]
    return EndMonoid(monoid, tuple(reordered), A)


def is_commutative(E: EndMonoid) -> bool:
    t = E.monoid.table
    n = E.monoid.size
    return all(t[i][j] == t[j][i] for i in range(n) for j in range(i + 1, n))


@dataclass(frozen=True)
class Retract:
    """Witness that gamma's source is a retract of its target."""

    gamma: ActHom
    pi: ActHom
    proper: bool


def is_retract_of(A: Act, B: Act, budget: int = DEFAULT_SEARCH_BUDGET):
    """First (gamma, pi) with pi o gamma = id_A, or None.

    Search order: gamma lexicographic, then pi.  `proper` flags a
    non-bijective gamma; since pi o gamma = id forces gamma injective,
    properness depends only on the carrier sizes.
    """
    into = homomorphisms(A, B, budget)
    back = homomorphisms(B, A, budget)
    ident = tuple(range(A.size))
    for gamma in into:
        if not gamma.is_injective():
            continue
        for pi in back:
            if tuple(pi.mapping[b] for b in gamma.mapping) == ident:
                return Retract(gamma, pi, not gamma.is_bijective())
    return None


def is_strongly_pi_regular(E: EndMonoid):
    """(flag, witnesses): witnesses[f] = first (n, g) with
    f^n = g*f^(n+1) = f^(n+1)*g, searching n ascending then g in
    canonical element order.  n <= |E| always suffices on a finite
    monoid, so a miss means False.
    """
    M = E.monoid
    table = M.table
    witnesses = []
    ok = True
    for f in range(M.size):
        found = None
        fn = f
        for n in range(1, M.size + 1):
            fn1 = table[fn][f]
            for g in range(M.size):
                if table[g][fn1] == fn == table[fn1][g]:
                    found = (n, g)
                    break
            if found:
                break
            fn = fn1
        if found is None:
            ok = False
        witnesses.append(found)
    return ok, tuple(witnesses)


def is_fully_invariant(A: Act, B: Subact, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """True iff every endomorphism of A maps B into B."""
    members = set(B.members)
    return all(
        f.mapping[b] in members for f in endomorphisms(A, budget) for b in B.members
    )


def induces_all_endomorphisms(h: ActHom, budget: int = DEFAULT_SEARCH_BUDGET):
    """For surjective h: A -> B, check every f in End(B) lifts to some
    g in End(A) with f o h = h o g.  Returns (flag, first failing f)."""
    A, B = h.source, h.target
    hm = h.mapping
    liftable = {
        tuple(hm[g.mapping[a]] for a in range(A.size)) for g in endomorphisms(A, budget)
    }
    for f in endomorphisms(B, budget):
        if tuple(f.mapping[b] for b in hm) not in liftable:
            return False, f
    return True, None


def has_section(h: ActHom, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """True iff some s: B -> A satisfies h o s = id_B."""
    A, B = h.source, h.target
    ident = tuple(range(B.size))
    return any(
        tuple(h.mapping[a] for a in s.mapping) == ident
        for s in homomorphisms(B, A, budget)
    )
