"""Finite monoids as multiplication tables, identity pinned at index 0.

`validate_monoid` is the checked constructor: it verifies the axioms and
relabels so the identity sits at index 0 (identity first, remaining
elements keep their relative order).  The family constructors
(`direct_product`, `zmod_mult_monoid`, `prime_power_product`) build
tables that are associative by construction and skip the cubic recheck,
which matters for product monoids with ~10^3 elements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .errors import EntryOutOfRange, NoIdentity, NotAssociative, NotPrime, SizeOverflow
from .relation import Relation, partition_from_labels

SIZE_CAP = 4096


@dataclass(frozen=True)
class Monoid:
    """Multiplication table `table[s][t] = s*t` with identity at index 0.

    `relabeling` maps the caller's original labels to the canonical ones
    (old index -> new index); it is provenance only and ignored by
    equality.
    """

    size: int
    table: tuple
    relabeling: tuple = field(compare=False, default=())

    def mul(self, s: int, t: int) -> int:
        return self.table[s][t]

    @property
    def identity(self) -> int:
        return 0

    def elements(self):
        return range(self.size)


def _relabel_table(table, perm):
    """Apply old->new relabeling `perm` to a multiplication table."""
    n = len(table)
    inv = [0] * n
    for old, new in enumerate(perm):
        inv[new] = old
    return tuple(
        tuple(perm[table[inv[s]][inv[t]]] for t in range(n)) for s in range(n)
    )


def _identity_first_perm(n, identity):
    """Old->new permutation moving `identity` to 0, others keep order."""
    perm = [0] * n
    perm[identity] = 0
    new = 1
    for old in range(n):
        if old != identity:
            perm[old] = new
            new += 1
    return tuple(perm)


def _check_shape(size, table):
    if size < 1:
        raise EntryOutOfRange("size must be >= 1")
    if len(table) != size:
        raise EntryOutOfRange(f"expected {size} rows, got {len(table)}")
    for s, row in enumerate(table):
        if len(row) != size:
            raise EntryOutOfRange(f"row {s} has {len(row)} entries, expected {size}")
        for t, v in enumerate(row):
            if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < size:
                raise EntryOutOfRange(f"entry ({s},{t}) = {v!r} not in [0,{size})")


def validate_monoid(size: int, table) -> Monoid:
    """Checked constructor: verify monoid axioms, normalize identity to 0.

    Raises EntryOutOfRange / NoIdentity / NotAssociative (with a witness
    triple in the caller's labels).
    """
    table = tuple(tuple(row) for row in table)
    _check_shape(size, table)
    identity = None
    for e in range(size):
        if all(table[e][x] == x == table[x][e] for x in range(size)):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no two-sided identity element")
    for s in range(size):
        for t in range(size):
            st = table[s][t]
            row_t = table[t]
            row_st = table[st]
            for u in range(size):
                if row_st[u] != table[s][row_t[u]]:
                    raise NotAssociative(s, t, u)
    perm = _identity_first_perm(size, identity)
    return Monoid(size, _relabel_table(table, perm), perm)


def _trusted(size, table, relabeling=None):
    if relabeling is None:
        relabeling = tuple(range(size))
    return Monoid(size, tuple(tuple(row) for row in table), relabeling)


def element_power(M: Monoid, s: int, n: int) -> int:
    """s*s*...*s with n >= 1 factors, by repeated table lookup."""
    if n < 1:
        raise ValueError("exponent must be >= 1")
    row = M.table[s]
    acc = s
    for _ in range(n - 1):
        acc = row[acc]
    return acc


def right_relation(M: Monoid, s: int) -> Relation:
    """r(s) = {(x, y) : s*x = s*y}, the kernel of left translation by s."""
    row = M.table[s]
    pairs = [
        (x, y) for x in range(M.size) for y in range(M.size) if row[x] == row[y]
    ]
    return Relation.from_pairs(M.size, pairs)


def row_partition(M: Monoid, s: int):
    """r(s) in partition form: the fibers of x -> s*x.

    Same relation as `right_relation`, but O(n) space; used for chain
    indices on large product monoids.
    """
    return partition_from_labels(M.table[s])


def direct_product(factors) -> Monoid:
    """Componentwise product monoid on the mixed-radix encoded carrier.

    Index encoding is mixed-radix with the FIRST factor most
    significant: (c1,..,ck) -> ((c1*n2 + c2)*n3 + ...) + ck.
    """
    factors = list(factors)
    if not factors:
        raise ValueError("need at least one factor")
    sizes = [f.size for f in factors]
    total = 1
    for n in sizes:
        total *= n
        if total > SIZE_CAP:
            raise SizeOverflow(f"product size exceeds cap {SIZE_CAP}")
    comps = []
    for idx in range(total):
        rest = idx
        c = [0] * len(sizes)
        for i in range(len(sizes) - 1, -1, -1):
            rest, c[i] = divmod(rest, sizes[i])
        comps.append(tuple(c))
    tables = [f.table for f in factors]
    k = len(sizes)

    def encode(c):
        idx = 0
        for i in range(k):
            idx = idx * sizes[i] + c[i]
        return idx

    # identity = (0,..,0) encodes to 0, so the product is already canonical
    table = []
    for a in comps:
        row = [encode([tables[i][a[i]][b[i]] for i in range(k)]) for b in comps]
        table.append(tuple(row))
    return _trusted(total, table)


def zmod_mult_monoid(m: int) -> Monoid:
    """Residues mod m under multiplication, identity 1 relabeled to 0."""
    if m < 1:
        raise ValueError("modulus must be >= 1")
    if m == 1:
        return _trusted(1, ((0,),), (0,))
    raw = [[(a * b) % m for b in range(m)] for a in range(m)]
    perm = _identity_first_perm(m, 1)
    return _trusted(m, _relabel_table(raw, perm), perm)


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_power_product(p: int, n_factors: int):
    """The product of (Z/p^n, *) for n = 1..n_factors, plus its slow element.

    Returns (monoid, x) where x is the element whose n-th component is
    the residue p mod p^n; the chain r(x) < r(x^2) < ... stabilizes only
    at step n_factors, so the family's chain index grows without bound
    as the truncation deepens.
    """
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if n_factors < 1:
        raise ValueError("need at least one factor")
    zmods = [zmod_mult_monoid(p**n) for n in range(1, n_factors + 1)]
    product = direct_product(zmods)
    sizes = [z.size for z in zmods]
    x_comps = [zmods[i].relabeling[p % (p ** (i + 1))] for i in range(n_factors)]
    x = 0
    for i in range(n_factors):
        x = x * sizes[i] + x_comps[i]
    return product, x


def generated_submonoid(M: Monoid, gens):
    """Closure of {identity} | gens under the product."""
    seen = {0}
    frontier = [0]
    gens = tuple(gens)
    while frontier:
        a = frontier.pop()
        for g in gens:
            b = M.table[a][g]
            if b not in seen:
                seen.add(b)
                frontier.append(b)
            c = M.table[g][a]
            if c not in seen:
                seen.add(c)
                frontier.append(c)
    return seen


def monoid_generators(M: Monoid):
    """A minimum-cardinality generating set, lexicographically first."""
    candidates = [s for s in range(M.size) if s != 0]
    for k in range(len(candidates) + 1):
        for gens in combinations(candidates, k):
            if len(generated_submonoid(M, gens)) == M.size:
                return gens
    raise AssertionError("carrier generates itself")
