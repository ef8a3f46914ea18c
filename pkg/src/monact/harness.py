"""Exhaustive corpus generation and theorem checking.

Small monoids and acts are enumerated up to isomorphism (canonical form
= minimal table under carrier relabelings, identity pinned at 0) and
every registered theorem is evaluated as a universally quantified
implication over the corpus.  A failing instance produces a verdict
whose witness carries the full tables, enough to re-run the check from
scratch.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import permutations, product

from . import deciders
from .act import (
    Act,
    enumerate_subacts,
    quotient_by_congruence,
    rees_quotient,
    regular_act,
    subact,
    subact_as_act,
    validate_act,
)
from .congruence import enumerate_congruences
from .endo import DEFAULT_SEARCH_BUDGET, end_monoid, homomorphisms, is_strongly_pi_regular
from .errors import SizeTooLarge, UnknownTheorem
from .monoid import Monoid, monoid_generators, validate_monoid
from .deciders import classify_act, monoid_hopf_properties

MONOID_ENUM_MAX = 4
ACT_ENUM_WORK_CAP = 1 << 21
SAMPLE_ATTEMPTS = 500


# -- canonical forms ---------------------------------------------------------

def monoid_canonical_form(M: Monoid):
    """Minimal table over relabelings that keep the identity at 0."""
    n = M.size
    best = None
    for perm_rest in permutations(range(1, n)):
        perm = (0,) + perm_rest
        inv = [0] * n
        for old, new in enumerate(perm):
            inv[new] = old
        cand = tuple(
            tuple(perm[M.table[inv[s]][inv[t]]] for t in range(n)) for s in range(n)
        )
        if best is None or cand < best:
            best = cand
    return best


def act_canonical_form(A: Act):
    """Minimal action table over carrier relabelings (monoid fixed)."""
    m = A.size
    best = None
    for perm in permutations(range(m)):
        inv = [0] * m
        for old, new in enumerate(perm):
            inv[new] = old
        cand = tuple(
            tuple(perm[A.action[inv[a]][s]] for s in range(A.monoid.size))
            for a in range(m)
        )
        if best is None or cand < best:
            best = cand
    return best


def acts_isomorphic(A: Act, B: Act) -> bool:
    return (
        A.monoid == B.monoid
        and A.size == B.size
        and act_canonical_form(A) == act_canonical_form(B)
    )


# -- enumeration -------------------------------------------------------------

def _associative(table, n):
    for s in range(n):
        row_s = table[s]
        for t in range(n):
            st = row_s[t]
            row_t = table[t]
            row_st = table[st]
            for u in range(n):
                if row_st[u] != row_s[row_t[u]]:
                    return False
    return True


def enumerate_monoids(n: int):
    """All monoids of size exactly n up to isomorphism, identity at 0."""
    if n > MONOID_ENUM_MAX:
        raise SizeTooLarge(f"monoid enumeration capped at size {MONOID_ENUM_MAX}")
    if n == 1:
        return [Monoid(1, ((0,),), (0,))]
    idrow = tuple(range(n))
    seen = set()
    for free in product(range(n), repeat=(n - 1) * (n - 1)):
        table = [idrow]
        for s in range(1, n):
            chunk = free[(s - 1) * (n - 1) : s * (n - 1)]
            table.append((s,) + chunk)
        if not _associative(table, n):
            continue
        seen.add(monoid_canonical_form(Monoid(n, tuple(table))))
    return [Monoid(n, t, tuple(range(n))) for t in sorted(seen)]


def _forced_action(M: Monoid, gens, gen_cols, m):
    """Build the full action from generator columns, or None on conflict.

    cols[s][a] = a*s; identity column is fixed, the rest propagate along
    col(s*g) = col(g) o col(s).
    """
    cols = [None] * M.size
    cols[0] = tuple(range(m))
    for g, col in zip(gens, gen_cols):
        if cols[g] is not None and cols[g] != col:
            return None
        cols[g] = col
    queue = [0]
    done = set()
    while queue:
        s = queue.pop()
        if s in done:
            continue
        done.add(s)
        for g, gcol in zip(gens, gen_cols):
            t = M.table[s][g]
            newcol = tuple(gcol[x] for x in cols[s])
            if cols[t] is None:
                cols[t] = newcol
                queue.append(t)
            elif cols[t] != newcol:
                return None
            elif t not in done:
                queue.append(t)
    if any(c is None for c in cols):
        return None
    return tuple(tuple(cols[s][a] for s in range(M.size)) for a in range(m))


def enumerate_acts(M: Monoid, m: int):
    """All acts of size m over M up to act isomorphism.

    Candidates are generated from columns of a minimal monoid generating
    set; consistent candidates are validated and canonicalized.
    """
    gens = monoid_generators(M)
    work = m ** (m * len(gens)) if gens else 1
    if work > ACT_ENUM_WORK_CAP:
        raise SizeTooLarge(
            f"act enumeration needs {work} candidates (> {ACT_ENUM_WORK_CAP})"
        )
    columns = list(product(range(m), repeat=m))
    seen = set()
    for gen_cols in product(columns, repeat=len(gens)):
        action = _forced_action(M, gens, gen_cols, m)
        if action is None:
            continue
        A = validate_act(M, m, action)
        seen.add(act_canonical_form(A))
    return [Act(M, m, t) for t in sorted(seen)]


def random_acts(M: Monoid, m: int, count: int, rng: random.Random):
    """Rejection-sample acts from random generator columns."""
    gens = monoid_generators(M)
    out = []
    attempts = 0
    while len(out) < count and attempts < SAMPLE_ATTEMPTS * count:
        attempts += 1
        gen_cols = [
            tuple(rng.randrange(m) for _ in range(m)) for _ in range(len(gens))
        ]
        action = _forced_action(M, gens, gen_cols, m)
        if action is None:
            continue
        out.append(validate_act(M, m, action))
    return out


# -- corpus ------------------------------------------------------------------

ALL_THEOREMS = tuple(f"T{i}" for i in range(1, 15))


@dataclass(frozen=True)
class CorpusSpec:
    max_monoid_size: int = 3
    max_act_size: int = 4
    theorems: tuple = ALL_THEOREMS
    seed: int | None = None
    samples: int = 0


@dataclass
class Corpus:
    monoids: list
    acts: list  # acts[i] lists the acts over monoids[i]


def build_corpus(spec: CorpusSpec) -> Corpus:
    monoids = []
    for n in range(1, spec.max_monoid_size + 1):
        monoids.extend(enumerate_monoids(n))
    acts = []
    for M in monoids:
        per = []
        for m in range(1, spec.max_act_size + 1):
            per.extend(enumerate_acts(M, m))
        acts.append(per)
    if spec.samples > 0:
        rng = random.Random(spec.seed)
        for i in range(spec.samples):
            which = i % len(monoids)
            extra = random_acts(monoids[which], spec.max_act_size + 1, 1, rng)
            acts[which].extend(extra)
    return Corpus(monoids, acts)


# -- shared evaluation context ------------------------------------------------

class SuiteContext:
    """Memoizes per-act analyses across theorems; routes the overridable
    deciders through a test-only override table."""

    def __init__(self, overrides=None, cap=8, budget=DEFAULT_SEARCH_BUDGET):
        self.overrides = dict(overrides or {})
        self.cap = cap
        self.budget = budget
        self._basic = {}
        self._reports = {}
        self._endos = {}
        self._ends = {}
        self._homs = {}

    @staticmethod
    def _akey(A):
        return (A.monoid.table, A.action)

    def basic(self, A):
        """(hopfian, co_hopfian, sh, sh_index, sch, sch_index), cached."""
        key = self._akey(A)
        if key not in self._basic:
            sh, shi = deciders.is_strongly_hopfian(A, 2, self.budget)
            sch, schi = deciders.is_strongly_co_hopfian(A, 2, self.budget)
            self._basic[key] = (
                deciders.is_hopfian(A, self.budget),
                deciders.is_co_hopfian(A, self.budget),
                sh,
                shi,
                sch,
                schi,
            )
        return self._basic[key]

    def report(self, A):
        key = self._akey(A)
        if key not in self._reports:
            self._reports[key] = classify_act(A, self.cap, self.budget)
        return self._reports[key]

    def endos(self, A):
        key = self._akey(A)
        if key not in self._endos:
            self._endos[key] = homomorphisms(A, A, self.budget)
        return self._endos[key]

    def end(self, A):
        key = self._akey(A)
        if key not in self._ends:
            self._ends[key] = end_monoid(A, self.budget)
        return self._ends[key]

    def homs(self, A, B):
        key = (self._akey(A), self._akey(B))
        if key not in self._homs:
            self._homs[key] = homomorphisms(A, B, self.budget)
        return self._homs[key]

    def _call(self, name, A, default):
        if name in self.overrides:
            return self.overrides[name](A)
        return default

    def hopfian(self, A):
        return self._call("is_hopfian", A, self.basic(A)[0])

    def co_hopfian(self, A):
        return self._call("is_co_hopfian", A, self.basic(A)[1])

    def strongly_hopfian(self, A):
        return self._call("is_strongly_hopfian", A, self.basic(A)[2])

    def strongly_co_hopfian(self, A):
        return self._call("is_strongly_co_hopfian", A, self.basic(A)[4])


# -- witnesses ----------------------------------------------------------------

def _monoid_payload(M: Monoid):
    return [list(row) for row in M.table]

def _act_payload(A: Act):
    return [list(row) for row in A.action]


def _witness(tid, M, flags, **extra):
    w = {"theorem": tid, "monoid": _monoid_payload(M), "flags": flags}
    w.update(extra)
    return w


# -- theorem checks ------------------------------------------------------------
# Each check returns (nonvacuous, passed, witness_or_None, details_dict).

def _check_t1(ctx, A):
    rep = ctx.report(A)
    hyp = rep.noetherian
    if not hyp:
        return False, True, None, {}
    concl = ctx.hopfian(A)
    if concl:
        return True, True, None, {}
    flags = {"noetherian": True, "hopfian": False}
    return True, False, _witness("T1", A.monoid, flags, act=_act_payload(A)), {}


def _check_t2(ctx, A):
    rep = ctx.report(A)
    hyp = rep.artinian
    if not hyp:
        return False, True, None, {}
    concl = ctx.co_hopfian(A)
    if concl:
        return True, True, None, {}
    flags = {"artinian": True, "co_hopfian": False}
    return True, False, _witness("T2", A.monoid, flags, act=_act_payload(A)), {}


def _check_t3(ctx, A):
    sh = ctx.strongly_hopfian(A)
    sch = ctx.strongly_co_hopfian(A)
    bad_h = sh and not ctx.hopfian(A)
    bad_c = sch and not ctx.co_hopfian(A)
    nonvac = sh or sch
    if not (bad_h or bad_c):
        return nonvac, True, None, {}
    flags = {
        "strongly_hopfian": sh,
        "hopfian": ctx.hopfian(A),
        "strongly_co_hopfian": sch,
        "co_hopfian": ctx.co_hopfian(A),
    }
    return nonvac, False, _witness("T3", A.monoid, flags, act=_act_payload(A)), {}


def _criteria_check(tid, decide, A, ctx):
    outcomes = [decide(A, c, ctx.budget) for c in deciders.CRITERIA]
    bools = [b for b, _ in outcomes]
    idx = [i for _, i in outcomes]
    passed = bools[0] == bools[1] == bools[2] and idx[0] == idx[1]
    details = {
        "criterion3_index_mismatches": int(idx[2] != idx[1]),
        "max_stabilization_index": idx[1] or 0,
    }
    if passed:
        return True, True, None, details
    flags = {
        "criterion_bools": bools,
        "criterion_indices": idx,
    }
    return True, False, _witness(tid, A.monoid, flags, act=_act_payload(A)), details


def _check_t4(ctx, A):
    return _criteria_check("T4", deciders.is_strongly_hopfian, A, ctx)


def _check_t5(ctx, A):
    return _criteria_check("T5", deciders.is_strongly_co_hopfian, A, ctx)


def _check_t6(ctx, M):
    mono = monoid_hopf_properties(M)
    R = regular_act(M)
    act_sh = ctx.strongly_hopfian(R)
    act_sch = ctx.strongly_co_hopfian(R)
    passed = mono.strongly_hopfian == act_sh and mono.strongly_co_hopfian == act_sch
    if passed:
        return True, True, None, {}
    flags = {
        "monoid_level": [mono.strongly_hopfian, mono.strongly_co_hopfian],
        "act_level": [act_sh, act_sch],
    }
    return True, False, _witness("T6", M, flags), {}


def _find_retract(ctx, A, B):
    ident = tuple(range(A.size))
    for gamma in ctx.homs(A, B):
        if len(set(gamma.mapping)) != A.size:
            continue
        for pi in ctx.homs(B, A):
            if tuple(pi.mapping[b] for b in gamma.mapping) == ident:
                return gamma, pi
    return None


def _check_t7(ctx, pair):
    A, B = pair
    found = _find_retract(ctx, A, B)
    proper = found is not None and len(set(found[0].mapping)) != B.size
    hyp = proper and ctx.strongly_hopfian(B)
    if not hyp:
        return False, True, None, {}
    if ctx.strongly_hopfian(A):
        return True, True, None, {}
    flags = {"retract_proper": True, "B_strongly_hopfian": True, "A_strongly_hopfian": False}
    w = _witness(
        "T7", A.monoid, flags,
        act=_act_payload(A), act_b=_act_payload(B),
        gamma=list(found[0].mapping), pi=list(found[1].mapping),
    )
    return True, False, w, {}


def _induced(ctx, h):
    A, B = h.source, h.target
    hm = h.mapping
    lifted = {
        tuple(hm[g.mapping[a]] for a in range(A.size)) for g in ctx.endos(A)
    }
    return all(tuple(f.mapping[b] for b in hm) in lifted for f in ctx.endos(B))


def _has_section(ctx, h):
    ident = tuple(range(h.target.size))
    return any(
        tuple(h.mapping[a] for a in s.mapping) == ident
        for s in ctx.homs(h.target, h.source)
    )


def _check_t8(ctx, pair):
    A, B = pair
    nonvac = False
    sections = 0
    qualifying = 0
    for h in ctx.homs(A, B):
        if len(set(h.mapping)) != B.size:
            continue
        if not _induced(ctx, h):
            continue
        if not ctx.strongly_co_hopfian(A):
            continue
        qualifying += 1
        nonvac = True
        if _has_section(ctx, h):
            sections += 1
        if not ctx.strongly_co_hopfian(B):
            flags = {"A_strongly_co_hopfian": True, "B_strongly_co_hopfian": False}
            w = _witness(
                "T8", A.monoid, flags,
                act=_act_payload(A), act_b=_act_payload(B), h=list(h.mapping),
            )
            return True, False, w, {"induced_surjections": qualifying, "with_section": sections}
    return nonvac, True, None, {"induced_surjections": qualifying, "with_section": sections}


def _check_t9(ctx, inst):
    A, B = inst
    members = set(B.members)
    fully_invariant = all(
        f.mapping[b] in members for f in ctx.endos(A) for b in B.members
    )
    if not fully_invariant:
        return False, True, None, {}
    B_act, _ = subact_as_act(B)
    Q, _ = rees_quotient(A, B)
    hyp = ctx.strongly_hopfian(B_act) and ctx.strongly_hopfian(Q)
    if not hyp:
        return False, True, None, {}
    if ctx.strongly_hopfian(A):
        return True, True, None, {}
    flags = {
        "fully_invariant": True,
        "subact_strongly_hopfian": True,
        "quotient_strongly_hopfian": True,
        "A_strongly_hopfian": False,
    }
    w = _witness("T9", A.monoid, flags, act=_act_payload(A), subact=list(B.members))
    return True, False, w, {}


def _check_t10(ctx, A):
    hyp = is_strongly_pi_regular(ctx.end(A))[0]
    if not hyp:
        return False, True, None, {}
    if ctx.strongly_hopfian(A) and ctx.strongly_co_hopfian(A):
        return True, True, None, {}
    flags = {
        "end_strongly_pi_regular": True,
        "strongly_hopfian": ctx.strongly_hopfian(A),
        "strongly_co_hopfian": ctx.strongly_co_hopfian(A),
    }
    return True, False, _witness("T10", A.monoid, flags, act=_act_payload(A)), {}


def _check_t11(ctx, A):
    rep = ctx.report(A)
    hyp = rep.quasi_injective and ctx.strongly_hopfian(A) and rep.end_commutative
    if not hyp:
        return False, True, None, {}
    pi_regular = is_strongly_pi_regular(ctx.end(A))[0]
    if ctx.strongly_co_hopfian(A) and pi_regular:
        return True, True, None, {}
    flags = {
        "quasi_injective": True,
        "strongly_hopfian": True,
        "end_commutative": True,
        "strongly_co_hopfian": ctx.strongly_co_hopfian(A),
        "end_strongly_pi_regular": pi_regular,
    }
    return True, False, _witness("T11", A.monoid, flags, act=_act_payload(A)), {}


def _check_t12(ctx, A):
    rep = ctx.report(A)
    hyp = rep.quasi_projective and ctx.strongly_co_hopfian(A) and rep.end_commutative
    if not hyp:
        return False, True, None, {}
    pi_regular = is_strongly_pi_regular(ctx.end(A))[0]
    if ctx.strongly_hopfian(A) and pi_regular:
        return True, True, None, {}
    flags = {
        "quasi_projective": True,
        "strongly_co_hopfian": True,
        "end_commutative": True,
        "strongly_hopfian": ctx.strongly_hopfian(A),
        "end_strongly_pi_regular": pi_regular,
    }
    return True, False, _witness("T12", A.monoid, flags, act=_act_payload(A)), {}


def _factor_acts(ctx, A):
    return [
        quotient_by_congruence(A, rho)[0] for rho in enumerate_congruences(A, ctx.cap)
    ]


def _check_t13(ctx, A):
    factors = _factor_acts(ctx, A)
    all_co = all(ctx.co_hopfian(Q) for Q in factors)
    all_strong = all(ctx.strongly_co_hopfian(Q) for Q in factors)
    if all_co == all_strong:
        return True, True, None, {}
    flags = {"all_factors_co_hopfian": all_co, "all_factors_strongly_co_hopfian": all_strong}
    return True, False, _witness("T13", A.monoid, flags, act=_act_payload(A)), {}


def _check_t14(ctx, A):
    factors = _factor_acts(ctx, A)
    all_plain = all(ctx.hopfian(Q) and ctx.co_hopfian(Q) for Q in factors)
    all_fitting = all(
        ctx.strongly_hopfian(Q) and ctx.strongly_co_hopfian(Q) for Q in factors
    )
    if all_plain == all_fitting:
        return True, True, None, {}
    flags = {"all_factors_hopfian_co_hopfian": all_plain, "all_factors_fitting": all_fitting}
    return True, False, _witness("T14", A.monoid, flags, act=_act_payload(A)), {}


REGISTRY = {
    "T1": ("noetherian implies hopfian", "act", _check_t1),
    "T2": ("artinian implies co-hopfian", "act", _check_t2),
    "T3": ("strong variants imply plain variants", "act", _check_t3),
    "T4": ("strongly-hopfian criteria agree", "act", _check_t4),
    "T5": ("strongly-co-hopfian criteria agree", "act", _check_t5),
    "T6": ("regular act matches monoid-level tests", "monoid", _check_t6),
    "T7": ("proper retracts inherit strongly-hopfian", "act_pair_up", _check_t7),
    "T8": ("induced surjections preserve strongly-co-hopfian", "act_pair_down", _check_t8),
    "T9": ("fully invariant subact + quotient force strongly-hopfian", "act_subact", _check_t9),
    "T10": ("pi-regular endomorphism monoid forces both strong properties", "act", _check_t10),
    "T11": ("quasi-injective commutative-End transfer", "act", _check_t11),
    "T12": ("quasi-projective commutative-End transfer", "act", _check_t12),
    "T13": ("factor acts co-hopfian iff strongly co-hopfian", "act", _check_t13),
    "T14": ("factor acts hopfian and co-hopfian iff fitting", "act", _check_t14),
}


@dataclass
class Verdict:
    theorem: str
    title: str
    instances: int
    nonvacuous: int
    passed: bool
    witness: dict | None = None
    details: dict = field(default_factory=dict)

    def to_dict(self):
        return {
            "theorem": self.theorem,
            "title": self.title,
            "instances": self.instances,
            "nonvacuous": self.nonvacuous,
            "passed": self.passed,
            "witness": self.witness,
            "details": dict(sorted(self.details.items())),
        }


def _instances_for(kind, corpus):
    if kind == "act":
        for per in corpus.acts:
            yield from per
    elif kind == "monoid":
        yield from corpus.monoids
    elif kind == "act_pair_up":
        for per in corpus.acts:
            for A in per:
                for B in per:
                    if A.size <= B.size:
                        yield (A, B)
    elif kind == "act_pair_down":
        for per in corpus.acts:
            for A in per:
                for B in per:
                    if A.size >= B.size:
                        yield (A, B)
    elif kind == "act_subact":
        for per in corpus.acts:
            for A in per:
                for B in enumerate_subacts(A):
                    yield (A, B)
    else:
        raise AssertionError(kind)


def check_theorem(tid: str, instance, overrides=None, ctx=None) -> Verdict:
    """Evaluate one theorem on one instance.

    Instance shape depends on the theorem: a single Act, a Monoid (T6),
    an (Act, Act) pair (T7/T8), or an (Act, Subact) pair (T9).
    """
    if tid not in REGISTRY:
        raise UnknownTheorem(tid)
    title, _, fn = REGISTRY[tid]
    if ctx is None:
        ctx = SuiteContext(overrides)
    nonvac, passed, witness, details = fn(ctx, instance)
    return Verdict(tid, title, 1, int(nonvac), passed, witness, details)


@dataclass
class SuiteResult:
    spec: CorpusSpec
    corpus: Corpus
    verdicts: list
    reports: list


def run_suite(spec: CorpusSpec, overrides=None) -> SuiteResult:
    """Check every requested theorem over the whole corpus.

    Deterministic given the spec (including the sampling seed): corpus
    order is canonical and verdicts aggregate in iteration order.
    """
    for tid in spec.theorems:
        if tid not in REGISTRY:
            raise UnknownTheorem(tid)
    corpus = build_corpus(spec)
    ctx = SuiteContext(overrides)
    reports = []
    for mi, (M, per) in enumerate(zip(corpus.monoids, corpus.acts)):
        for ai, A in enumerate(per):
            rep = ctx.report(A)
            entry = {
                "monoid": f"M{mi}",
                "act": f"M{mi}.A{ai}",
                "monoid_size": M.size,
                "act_size": A.size,
                "monoid_table": _monoid_payload(M),
                "action": _act_payload(A),
                "properties": rep.to_dict(),
            }
            reports.append(entry)
    verdicts = []
    for tid in sorted(spec.theorems, key=lambda t: int(t[1:])):
        title, kind, fn = REGISTRY[tid]
        total = 0
        nonvac = 0
        passed = True
        witness = None
        details = {}
        for instance in _instances_for(kind, corpus):
            total += 1
            nv, ok, w, d = fn(ctx, instance)
            nonvac += int(nv)
            for k, v in d.items():
                # max_-prefixed detail keys aggregate by maximum, the rest count
                if k.startswith("max_"):
                    details[k] = max(details.get(k, 0), v)
                else:
                    details[k] = details.get(k, 0) + v
            if not ok and passed:
                passed = False
                witness = w
        verdicts.append(Verdict(tid, title, total, nonvac, passed, witness, details))
    return SuiteResult(spec, corpus, verdicts, reports)


def rebuild_instance(tid: str, witness: dict):
    """Reconstruct a checkable instance from a failure witness."""
    kind = REGISTRY[tid][1]
    M = validate_monoid(len(witness["monoid"]), witness["monoid"])
    if kind == "monoid":
        return M
    A = validate_act(M, len(witness["act"]), witness["act"])
    if kind in ("act_pair_up", "act_pair_down"):
        B = validate_act(M, len(witness["act_b"]), witness["act_b"])
        return (A, B)
    if kind == "act_subact":
        return (A, subact(A, witness["subact"]))
    return A


def recheck_verdict(verdict: Verdict, overrides=None) -> bool:
    """Re-evaluate a failing verdict from its witness alone.

    Returns True iff the violation reproduces under an independent
    evaluation (fresh context, no shared caches).
    """
    if verdict.witness is None:
        return False
    instance = rebuild_instance(verdict.theorem, verdict.witness)
    redo = check_theorem(verdict.theorem, instance, overrides)
    return not redo.passed
