"""Property deciders for finite acts and monoids.

Everything here reduces to chains of kernel and image congruences of
endomorphism powers.  On finite carriers both chain families stabilize
within |A| steps (kernel class counts fall, image sizes fall), so every
decider terminates with an exact index.
"""

from __future__ import annotations

from dataclasses import dataclass, asdict

from .act import Act, ActHom, quotient_by_congruence
from .congruence import (
    Congruence,
    congruence_refines,
    diagonal,
    enumerate_congruences,
    image_congruence,
    join,
    meet,
    universal,
)
from .endo import (
    DEFAULT_SEARCH_BUDGET,
    end_monoid,
    endomorphisms,
    homomorphisms,
    is_commutative,
    is_strongly_pi_regular,
)
from .monoid import Monoid, element_power, row_partition
from .relation import partition_from_labels

CRITERIA = (1, 2, 3)


# -- chain indices ----------------------------------------------------------

def _compose_map(outer, inner):
    return tuple(outer[a] for a in inner)


def _map_powers(mapping, count):
    """mapping^1 .. mapping^count as tuples."""
    powers = [tuple(mapping)]
    for _ in range(count - 1):
        powers.append(_compose_map(powers[-1], mapping))
    return powers


def k_chain_index(f: ActHom) -> int:
    """Least n >= 1 with ker(f^n) = ker(f^(n+1))."""
    prev = partition_from_labels(f.mapping)
    cur_map = tuple(f.mapping)
    for n in range(1, f.source.size + 1):
        cur_map = _compose_map(cur_map, f.mapping)
        part = partition_from_labels(cur_map)
        if part == prev:
            return n
        prev = part
    raise AssertionError("kernel chain must stabilize within |A| steps")


def i_chain_index(f: ActHom) -> int:
    """Least n >= 1 with im(f^n) = im(f^(n+1)); equivalent to equality
    of the image congruences since images are nested."""
    prev = frozenset(f.mapping)
    cur_map = tuple(f.mapping)
    for n in range(1, f.source.size + 1):
        cur_map = _compose_map(cur_map, f.mapping)
        image = frozenset(cur_map)
        if image == prev:
            return n
        prev = image
    raise AssertionError("image chain must stabilize within |A| steps")


@dataclass(frozen=True)
class ChainReport:
    """Stabilization data for a single endomorphism."""

    endo: int
    mapping: tuple
    k_index: int
    i_index: int
    kernel: Congruence
    image: Congruence


def chain_report(A: Act, endo_index: int, f: ActHom) -> ChainReport:
    k = k_chain_index(f)
    i = i_chain_index(f)
    powers = _map_powers(f.mapping, max(k, i))
    kernel = Congruence(A, partition_from_labels(powers[k - 1]))
    image = image_congruence(ActHom(A, A, powers[i - 1]))
    return ChainReport(endo_index, tuple(f.mapping), k, i, kernel, image)


# -- Hopfian family ---------------------------------------------------------

def is_hopfian(A: Act, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Every surjective endomorphism is injective.  Always true on finite
    carriers; kept literal as a consistency oracle."""
    return all(
        f.is_injective() for f in endomorphisms(A, budget) if f.is_surjective()
    )


def is_co_hopfian(A: Act, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    """Every injective endomorphism is surjective."""
    return all(
        f.is_surjective() for f in endomorphisms(A, budget) if f.is_injective()
    )


def _kernel_cong(A, mapping):
    return Congruence(A, partition_from_labels(mapping))


def _image_cong(A, mapping):
    return image_congruence(ActHom(A, A, mapping))


def _strongly_hopfian_index(A, f, criterion):
    """Least n satisfying the chosen criterion for one endomorphism."""
    size = A.size
    if criterion == 1:
        # adjacent equality, then the whole tail up to 2|A| re-verified
        n = k_chain_index(f)
        powers = _map_powers(f.mapping, 2 * size + 1)
        stable = partition_from_labels(powers[n - 1])
        for m in range(n, 2 * size + 1):
            if partition_from_labels(powers[m - 1]) != stable:
                raise AssertionError("kernel tail not constant after stabilization")
        return n
    if criterion == 2:
        return k_chain_index(f)
    if criterion == 3:
        delta = diagonal(A)
        cur = tuple(f.mapping)
        for n in range(1, 2 * size + 1):
            if meet(_image_cong(A, cur), _kernel_cong(A, cur)) == delta:
                return n
            cur = _compose_map(cur, f.mapping)
        return None
    raise ValueError(f"criterion must be one of {CRITERIA}")


def _strongly_co_hopfian_index(A, f, criterion):
    size = A.size
    if criterion == 1:
        n = i_chain_index(f)
        powers = _map_powers(f.mapping, 2 * size + 1)
        stable = frozenset(powers[n - 1])
        for m in range(n, 2 * size + 1):
            if frozenset(powers[m - 1]) != stable:
                raise AssertionError("image tail not constant after stabilization")
        return n
    if criterion == 2:
        return i_chain_index(f)
    if criterion == 3:
        full = universal(A)
        cur = tuple(f.mapping)
        for n in range(1, 2 * size + 1):
            if join(_image_cong(A, cur), _kernel_cong(A, cur)) == full:
                return n
            cur = _compose_map(cur, f.mapping)
        return None
    raise ValueError(f"criterion must be one of {CRITERIA}")


def is_strongly_hopfian(A: Act, criterion: int = 1, budget: int = DEFAULT_SEARCH_BUDGET):
    """(flag, index): kernel chains of all endomorphisms stabilize.

    criterion 1 demands a constant tail, 2 one adjacent equality, 3 the
    trivial-intersection condition; index is the worst endomorphism's
    least n for the chosen criterion.
    """
    worst = 0
    for f in endomorphisms(A, budget):
        n = _strongly_hopfian_index(A, f, criterion)
        if n is None:
            return False, None
        worst = max(worst, n)
    return True, worst


def is_strongly_co_hopfian(A: Act, criterion: int = 1, budget: int = DEFAULT_SEARCH_BUDGET):
    """(flag, index): image chains of all endomorphisms stabilize.

    criterion 3 is the join condition: im/ker congruences of f^n join to
    the universal congruence.
    """
    worst = 0
    for f in endomorphisms(A, budget):
        n = _strongly_co_hopfian_index(A, f, criterion)
        if n is None:
            return False, None
        worst = max(worst, n)
    return True, worst


def is_fitting(A: Act, budget: int = DEFAULT_SEARCH_BUDGET) -> bool:
    return is_strongly_hopfian(A, 2, budget)[0] and is_strongly_co_hopfian(A, 2, budget)[0]


# -- congruence chains ------------------------------------------------------

def chain_conditions(A: Act, cap: int = 8, budget: int = DEFAULT_SEARCH_BUDGET):
    """(noetherian, artinian, lattice size, longest chain).

    Both chain conditions hold outright on a finite congruence lattice;
    the returned evidence is the lattice size and the length of a
    longest chain under containment.
    """
    congs = enumerate_congruences(A, cap)
    # a finite lattice satisfies both chain conditions outright
    noetherian = artinian = True
    # congs are sorted finest-first, so strict containment only points backwards
    longest = [1] * len(congs)
    for i, ci in enumerate(congs):
        for j in range(i):
            if congruence_refines(congs[j], ci):
                longest[i] = max(longest[i], longest[j] + 1)
    return noetherian, artinian, len(congs), max(longest)


# -- quasi-injective / quasi-projective --------------------------------------

def is_quasi_injective(A: Act, budget: int = DEFAULT_SEARCH_BUDGET):
    """Every hom from a subact into A extends to an endomorphism.

    Injective maps g: B -> A are covered by subact inclusions: g factors
    through an isomorphism onto its image, and the extension property is
    invariant under that isomorphism.  Returns (flag, counterexample).
    """
    from .act import enumerate_subacts, subact_as_act

    endos = endomorphisms(A, budget)
    for B in enumerate_subacts(A):
        sub, members = subact_as_act(B)
        restrictions = {tuple(h.mapping[b] for b in members) for h in endos}
        for f in homomorphisms(sub, A, budget):
            if tuple(f.mapping) not in restrictions:
                return False, (B, f)
    return True, None


def is_quasi_projective(A: Act, cap: int = 8, budget: int = DEFAULT_SEARCH_BUDGET):
    """Every hom from A to a factor act lifts through the projection.

    Surjections g: A -> B are covered by the canonical projections
    A -> A/rho: any surjection factors through A/ker(g) by an
    isomorphism.  Returns (flag, counterexample).
    """
    endos = endomorphisms(A, budget)
    for rho in enumerate_congruences(A, cap):
        quotient, proj = quotient_by_congruence(A, rho)
        lifted = {
            tuple(proj.mapping[h.mapping[a]] for a in range(A.size)) for h in endos
        }
        for f in homomorphisms(A, quotient, budget):
            if tuple(f.mapping) not in lifted:
                return False, (rho, f)
    return True, None


# -- monoid-level tests (regular act without building End) -------------------

@dataclass(frozen=True)
class MonoidHopfReport:
    strongly_hopfian: bool
    strongly_co_hopfian: bool
    r_indices: tuple
    power_witnesses: tuple


def r_chain_index(M: Monoid, s: int) -> int:
    """Least n >= 1 with r(s^n) = r(s^(n+1)), via row fibers."""
    cur = s
    prev = row_partition(M, s)
    for n in range(1, M.size + 1):
        cur = M.table[cur][s]
        part = row_partition(M, cur)
        if part == prev:
            return n
        prev = part
    raise AssertionError("r-chain must stabilize within |S| steps")


def power_stabilizer(M: Monoid, s: int):
    """First (n, t) with s^n = s^(n+1)*t, n ascending then t; None if
    nothing shows up within n <= |S| (cannot happen on a monoid)."""
    for n in range(1, M.size + 1):
        sn = element_power(M, s, n)
        sn1 = M.table[sn][s]
        for t in range(M.size):
            if M.table[sn1][t] == sn:
                return n, t
    return None


def monoid_hopf_properties(M: Monoid) -> MonoidHopfReport:
    """Strong Hopfian-type tests for the regular act, computed directly
    on the multiplication table."""
    r_indices = tuple(r_chain_index(M, s) for s in range(M.size))
    witnesses = tuple(power_stabilizer(M, s) for s in range(M.size))
    return MonoidHopfReport(
        strongly_hopfian=all(n is not None for n in r_indices),
        strongly_co_hopfian=all(w is not None for w in witnesses),
        r_indices=r_indices,
        power_witnesses=witnesses,
    )


# -- aggregate report ---------------------------------------------------------

@dataclass(frozen=True)
class PropertyReport:
    hopfian: bool
    co_hopfian: bool
    strongly_hopfian: bool
    strongly_hopfian_index: int
    strongly_co_hopfian: bool
    strongly_co_hopfian_index: int
    fitting: bool
    noetherian: bool
    artinian: bool
    quasi_injective: bool
    quasi_projective: bool
    end_commutative: bool
    end_strongly_pi_regular: bool
    end_size: int
    congruence_count: int
    congruence_max_chain: int

    def to_dict(self):
        return asdict(self)


def classify_act(A: Act, cap: int = 8, budget: int = DEFAULT_SEARCH_BUDGET) -> PropertyReport:
    """Run every decider on one act."""
    E = end_monoid(A, budget)
    sh, sh_index = is_strongly_hopfian(A, 1, budget)
    sch, sch_index = is_strongly_co_hopfian(A, 1, budget)
    noe, art, n_congs, max_chain = chain_conditions(A, cap, budget)
    report = PropertyReport(
        hopfian=is_hopfian(A, budget),
        co_hopfian=is_co_hopfian(A, budget),
        strongly_hopfian=sh,
        strongly_hopfian_index=sh_index,
        strongly_co_hopfian=sch,
        strongly_co_hopfian_index=sch_index,
        fitting=sh and sch,
        noetherian=noe,
        artinian=art,
        quasi_injective=is_quasi_injective(A, budget)[0],
        quasi_projective=is_quasi_projective(A, cap, budget)[0],
        end_commutative=is_commutative(E),
        end_strongly_pi_regular=is_strongly_pi_regular(E)[0],
        end_size=E.monoid.size,
        congruence_count=n_congs,
        congruence_max_chain=max_chain,
    )
    assert report.fitting == (report.strongly_hopfian and report.strongly_co_hopfian)
    assert not report.strongly_hopfian or report.hopfian
    assert not report.strongly_co_hopfian or report.co_hopfian
    return report


def chain_reports(A: Act, budget: int = DEFAULT_SEARCH_BUDGET):
    """ChainReport per endomorphism, in canonical End(A) order."""
    E = end_monoid(A, budget)
    return [chain_report(A, i, f) for i, f in enumerate(E.elements)]
