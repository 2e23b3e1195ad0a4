"""A registry of named, parameterized identity checks with structured
pass/fail reports; the single integration point for acceptance testing.

Every check compares exact objects (LaurentPoly / RatFunc); a failure always
carries a concrete witness in canonical text form.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field
from itertools import product

from .errors import ParseError, UnknownCheck
from .qalgebra import (ONE, RatFunc, LaurentPoly, binom2, q_binomial,
                       q_factorial, q_int, q_narayana)


@dataclass(frozen=True)
class CheckReport:
    check: str
    params: dict
    status: str               # "pass" | "fail" | "skipped-guardrail"
    witness: str | None
    ms: int

    def to_json_line(self) -> str:
        return json.dumps({"check": self.check, "params": self.params,
                           "status": self.status, "witness": self.witness,
                           "ms": self.ms}, sort_keys=True)


# ---------------------------------------------------------------------------
# individual checks: each returns None on pass or a witness string on failure
# ---------------------------------------------------------------------------

def _check_tree_gf(n, jmax=None):
    from .gfseries import rhs_tree
    from .permcore import Partition
    from .symeval import SymFunc, coeff_Tc_jm

    jmax = jmax if jmax is not None else n + 3
    series = rhs_tree(n, jmax)
    for j in range(jmax + 1):
        f = SymFunc("e", Partition([1] * j))
        lhs = RatFunc.from_laurent(coeff_Tc_jm(f, n))
        if lhs != series.coeff(j):
            return (f"n={n} j={j}: expansion {lhs.text()} "
                    f"vs series {series.coeff(j).text()}")
    return None


def _check_tree_leading(n):
    from .permcore import Partition
    from .symeval import SymFunc, coeff_Tc_jm

    got = coeff_Tc_jm(SymFunc("e", Partition([1] * (n - 1))), n)
    want = (q_int(n) ** (n - 2) if n >= 2 else ONE).shift(-binom2(n))
    if got != want:
        return f"n={n}: {got.text()} vs closed {want.text()}"
    return None


def _check_cat_gf(n, jmax=None):
    from .gfseries import rhs_cat
    from .permcore import Partition
    from .symeval import SymFunc, coeff_Tc_jm

    jmax = jmax if jmax is not None else n + 3
    series = rhs_cat(n, jmax)
    for j in range(jmax + 1):
        f = SymFunc("h", Partition([j] if j else []))
        lhs = RatFunc.from_laurent(coeff_Tc_jm(f, n))
        if lhs != series.coeff(j):
            return (f"n={n} j={j}: expansion {lhs.text()} "
                    f"vs series {series.coeff(j).text()}")
    return None


def _check_cat_leading(n):
    from .permcore import Partition
    from .qalgebra import q_catalan
    from .symeval import SymFunc, coeff_Tc_jm

    got = coeff_Tc_jm(SymFunc("h", Partition([n - 1] if n >= 2 else [])), n)
    want = q_catalan(n - 1).shift(-binom2(n))
    if got != want:
        return f"n={n}: {got.text()} vs closed {want.text()}"
    return None


def _check_jackson_mq_gf(n, m):
    from .gfseries import lhs_F, rhs_F

    lhs, rhs = lhs_F(n, m), rhs_F(n, m)
    if lhs != rhs:
        keys = sorted(set(lhs.terms) | set(rhs.terms))
        for k in keys:
            if lhs.coeff(k) != rhs.coeff(k):
                return (f"n={n} m={m} t^{k}: {lhs.coeff(k).text()} "
                        f"vs {rhs.coeff(k).text()}")
    return None


def _closed_e_lambda(n, parts):
    num = ONE
    for p in parts:
        num = num * q_binomial(n, p)
    return num.shift(sum(binom2(p) for p in parts) - binom2(n))


def _check_e_lambda_closed(n):
    from .heckecore import coeff_longcycle_e_product
    from .permcore import partitions_of

    for lam in partitions_of(n - 1):
        if any(p > n - 1 for p in lam.parts):
            continue
        got = coeff_longcycle_e_product(n, lam.parts) * q_int(n)
        want = _closed_e_lambda(n, lam.parts)
        if got != want:
            return f"n={n} lambda={lam.text()}: {got.text()} vs {want.text()}"
    return None


def _check_q_narayana(n):
    from .heckecore import coeff_longcycle_e_product

    for k in range(1, n):
        got = coeff_longcycle_e_product(n, (k, n - 1 - k))
        want = q_narayana(n, k + 1).shift(1 - (k + 1) * (n - k))
        if got != want:
            return f"n={n} k={k}: {got.text()} vs {want.text()}"
    return None


def _check_reciprocity(n):
    from .permcore import partitions_of
    from .symeval import (SymFunc, coeff_Tc_hook_formula, coeff_Tc_jm,
                          coeff_Tc_reciprocity, ps_closed,
                          principal_specialization)

    for family in ("e", "h", "p", "s"):
        for lam in partitions_of(n - 1):
            f = SymFunc(family, lam)
            direct = RatFunc.from_laurent(coeff_Tc_jm(f, n))
            hook = coeff_Tc_hook_formula(f, n)
            recip = coeff_Tc_reciprocity(f, n)
            if not (direct == hook == recip):
                return (f"n={n} f={f.text()}: jm={direct.text()} "
                        f"hook={hook.text()} recip={recip.text()}")
            if principal_specialization(f, n) != ps_closed(f, n):
                return f"n={n} f={f.text()}: ps closed form mismatch"
    return None


def _check_h_closed(n):
    from .symeval import SymFunc, principal_specialization, ps_h_closed

    for k in range(1, n + 2):
        got = principal_specialization(SymFunc("h", [k]), n)
        if got != ps_h_closed(k, n):
            return f"n={n} k={k}: {got.text()} vs {ps_h_closed(k, n).text()}"
    return None


def _check_p_closed(n):
    from .symeval import SymFunc, principal_specialization, ps_p_closed

    for k in range(1, n + 2):
        got = principal_specialization(SymFunc("p", [k]), n)
        if got != ps_p_closed(k, n):
            return f"n={n} k={k}: {got.text()} vs {ps_p_closed(k, n).text()}"
    return None


def _check_s_closed(n):
    from .permcore import partitions_of
    from .symeval import SymFunc, principal_specialization, ps_s_closed

    for d in range(1, n + 1):
        for lam in partitions_of(d):
            got = principal_specialization(SymFunc("s", lam), n)
            want = ps_s_closed(lam, n)
            if got != want:
                return (f"n={n} lambda={lam.text()}: {got.text()} "
                        f"vs {want.text()}")
    return None


def _check_etilde_basis(n):
    from .gfseries import check_etilde_basis

    for k in range(n):
        if not check_etilde_basis(n, k):
            return f"n={n} k={k}: basis expansion mismatch"
    return None


def _check_mq_crosscheck(n, mmax=3):
    from .mqpoly import m_classic, mq_alt, mq_bolan, mq_stat, stat

    # the published fixed values and the worked statistic example
    fixed = [
        (3, (2, 2), LaurentPoly({1: 1, 2: 2, 3: 2, 4: 1})),
        (4, (2, 2), LaurentPoly({4: 1, 5: 1, 6: 2, 7: 1, 8: 1})),
        (3, (2, 2, 1), LaurentPoly({1: 1, 2: 4, 3: 6, 4: 6, 5: 3, 6: 1})),
    ]
    for fn, fr, fval in fixed:
        if mq_alt(fn, fr) != fval:
            return f"fixed value M^{fn}_{fr}: {mq_alt(fn, fr).text()}"
    if stat([{1, 2, 3, 5}, {1, 3, 5}, {2, 4, 6}]) != 16:
        return "worked statistic example != 16"
    for m in range(1, mmax + 1):
        for r in product(range(n + 1), repeat=m):
            a = mq_alt(n, r)
            if a != mq_bolan(n, r):
                return f"n={n} r={r}: alt {a.text()} vs bolan"
            if a != mq_stat(n, r):
                return f"n={n} r={r}: alt {a.text()} vs stat"
            if a.at_one() != m_classic(n, r):
                return f"n={n} r={r}: q=1 vs classical count"
    return None


def _check_mq_subspace(n, qvals=(2, 3)):
    from .mqpoly import mq_alt, mq_subspaces

    for qval in qvals:
        for m in (1, 2):
            for r in product(range(n + 1), repeat=m):
                want = mq_alt(n, r).eval_at(qval)
                got = mq_subspaces(n, r, qval)
                if got != want:
                    return f"n={n} r={r} q={qval}: {got} vs {want}"
    return None


def _check_mq_recurrences(n, mmax=3):
    from .mqpoly import check_gf_classic, check_recursion_q, check_recursions_classic

    for m in range(1, mmax + 1):
        for r in product(range(n + 1), repeat=m):
            if not check_recursion_q(n, r):
                return f"q-recurrence fails at n={n} r={r}"
            if not check_recursions_classic(n, r):
                return f"classical recurrence fails at n={n} r={r}"
    for m in range(1, mmax + 1):
        if not check_gf_classic(n, m):
            return f"classical gf fails at n={n} m={m}"
    return None


def _check_classical_oracles(n, jmax=None):
    from .oracle import (check_jackson_gf, check_jackson_sn,
                         check_matsumoto_novak_gf, count_a, count_b, count_c,
                         jucys_class_sum_check)
    from .permcore import Partition
    from .symeval import SymFunc, coeff_Tc_jm

    jmax = jmax if jmax is not None else min(7, n + 2)
    for j in range(jmax + 1):
        aq = coeff_Tc_jm(SymFunc("e", Partition([1] * j)), n).at_one()
        if aq != count_a(n, j):
            return f"a({n};{j}): Hecke q=1 {aq} vs brute {count_a(n, j)}"
        bq = coeff_Tc_jm(SymFunc("h", Partition([j] if j else [])), n).at_one()
        if bq != count_b(n, j):
            return f"b({n};{j}): Hecke q=1 {bq} vs brute {count_b(n, j)}"
    from .heckecore import coeff_longcycle_e_product

    for m in (1, 2):
        for p in product(range(n), repeat=m):
            cq = coeff_longcycle_e_product(n, p).at_one()
            if cq != count_c(n, p):
                return f"c({n};{p}): Hecke q=1 {cq} vs brute {count_c(n, p)}"
    for k in range(n + 1):
        if not jucys_class_sum_check(n, k):
            return f"class-sum indicator fails at n={n} k={k}"
    if not check_jackson_gf(n, jmax):
        return f"classical transposition gf fails at n={n}"
    if not check_matsumoto_novak_gf(n, jmax):
        return f"classical monotone gf fails at n={n}"
    if not check_jackson_sn(n, 2):
        return f"classical binomial-basis identity fails at n={n}"
    return None


def _check_centrality(n):
    from .heckecore import is_central, jm_elementary

    for k in range(n + 1):
        if not is_central(jm_elementary(n, k)):
            return f"e_{k}(Xi_{n}) not central"
    return None


def _check_gr_minlength(n):
    from .heckecore import jm_elementary
    from .permcore import all_permutations

    perms = list(all_permutations(n))
    min_by_type = {}
    for w in perms:
        t = w.cycle_type()
        l = w.length()
        if t not in min_by_type or l < min_by_type[t]:
            min_by_type[t] = l
    for w in perms:
        expected = w.length() == min_by_type[w.cycle_type()]
        if w.is_min_length_in_class() != expected:
            return f"minimality criterion wrong at w={w.text()}"
    # q^k e_k has coefficient 1 on minimal-length elements of the matching
    # cycle types and 0 on minimal-length elements of all other types
    for k in range(n):
        ek = jm_elementary(n, k)
        for w in perms:
            if not w.is_min_length_in_class():
                continue
            want = ONE if n - len(w.cycle_type()) == k else LaurentPoly()
            if ek.coeff(w).shift(k) != want:
                return (f"e_{k}(Xi_{n}) coeff at minimal w={w.text()}: "
                        f"{ek.coeff(w).shift(k).text()}")
    return None


def _check_chu_vandermonde(amax=8):
    for a in range(amax + 1):
        for b in range(amax + 1):
            for c in range(amax + 1):
                lhs = q_binomial(a + b, c)
                s1 = LaurentPoly()
                s2 = LaurentPoly()
                for k in range(c + 1):
                    s1 = s1 + (q_binomial(a, k) * q_binomial(b, c - k)
                               ).shift(k * (k + b - c))
                    s2 = s2 + (q_binomial(b, k) * q_binomial(a, c - k)
                               ).shift((c - k) * (b - k))
                if lhs != s1:
                    return f"first form fails at a={a} b={b} c={c}"
                if lhs != s2:
                    return f"second form fails at a={a} b={b} c={c}"
    return None


def _check_prodfac_lemma(nmax=8):
    for n in range(1, nmax + 1):
        for k in range(n):
            lhs = RatFunc.from_laurent(q_factorial(n - 1 - k) * q_factorial(k))
            num = LaurentPoly.monomial((-1) ** k, binom2(n) + binom2(k))
            for j in range(n):
                if j != k:
                    num = num * (LaurentPoly.monomial(1, -j)
                                 - LaurentPoly.monomial(1, -k))
            den = (ONE - LaurentPoly.monomial(1, 1)) ** (n - 1)
            rhs = RatFunc.from_laurent(num) / RatFunc.from_laurent(den)
            if lhs != rhs:
                return f"fails at n={n} k={k}"
    return None


def _check_unimodality_scan(nmax=4, mmax=3):
    from .mqpoly import unimodality_report

    checked, violations = unimodality_report(nmax, mmax)
    if violations:
        n, r, p = violations[0]
        # conjecture scanner: report, do not fail the suite
        return None, (f"{len(violations)} non-unimodal of {checked}; first "
                      f"n={n} r={r}: {p.text()}")
    return None, f"{checked} polynomials scanned, all unimodal"


# ---------------------------------------------------------------------------
# registry and runners
# ---------------------------------------------------------------------------

REGISTRY = {
    "tree-gf": _check_tree_gf,
    "tree-leading": _check_tree_leading,
    "cat-gf": _check_cat_gf,
    "cat-leading": _check_cat_leading,
    "jackson-mq-gf": _check_jackson_mq_gf,
    "e-lambda-closed": _check_e_lambda_closed,
    "q-narayana": _check_q_narayana,
    "reciprocity": _check_reciprocity,
    "h-closed": _check_h_closed,
    "p-closed": _check_p_closed,
    "s-closed": _check_s_closed,
    "etilde-basis": _check_etilde_basis,
    "mq-crosscheck": _check_mq_crosscheck,
    "mq-subspace": _check_mq_subspace,
    "mq-recurrences": _check_mq_recurrences,
    "classical-oracles": _check_classical_oracles,
    "centrality": _check_centrality,
    "gr-minlength": _check_gr_minlength,
    "chu-vandermonde": _check_chu_vandermonde,
    "prodfac-lemma": _check_prodfac_lemma,
    "unimodality-scan": _check_unimodality_scan,
}

# parameter schedules per profile: list of (check name, params)
PROFILES = {
    "quick": [
        ("tree-gf", {"n": 3}), ("tree-gf", {"n": 4}),
        ("tree-leading", {"n": 4}),
        ("cat-gf", {"n": 3}), ("cat-gf", {"n": 4}),
        ("cat-leading", {"n": 4}),
        ("jackson-mq-gf", {"n": 3, "m": 2}),
        ("jackson-mq-gf", {"n": 3, "m": 3}),
        ("e-lambda-closed", {"n": 4}),
        ("q-narayana", {"n": 4}),
        ("reciprocity", {"n": 4}),
        ("h-closed", {"n": 4}), ("p-closed", {"n": 4}), ("s-closed", {"n": 4}),
        ("etilde-basis", {"n": 4}),
        ("mq-crosscheck", {"n": 3, "mmax": 3}),
        ("mq-subspace", {"n": 2, "qvals": [2, 3]}),
        ("mq-recurrences", {"n": 3, "mmax": 3}),
        ("classical-oracles", {"n": 4}),
        ("centrality", {"n": 4}),
        ("gr-minlength", {"n": 4}),
        ("chu-vandermonde", {"amax": 5}),
        ("prodfac-lemma", {"nmax": 6}),
        ("unimodality-scan", {"nmax": 4, "mmax": 3}),
    ],
    "full": [
        ("tree-gf", {"n": n}) for n in (2, 3, 4, 5)
    ] + [
        ("tree-leading", {"n": n}) for n in (2, 3, 4, 5, 6)
    ] + [
        ("cat-gf", {"n": n}) for n in (2, 3, 4, 5)
    ] + [
        ("cat-leading", {"n": n}) for n in (2, 3, 4, 5, 6)
    ] + [
        ("jackson-mq-gf", {"n": n, "m": 2}) for n in (2, 3, 4, 5)
    ] + [
        ("jackson-mq-gf", {"n": n, "m": 3}) for n in (2, 3, 4)
    ] + [
        ("e-lambda-closed", {"n": n}) for n in (2, 3, 4, 5, 6)
    ] + [
        ("q-narayana", {"n": n}) for n in (3, 4, 5, 6)
    ] + [
        ("reciprocity", {"n": n}) for n in (2, 3, 4, 5)
    ] + [
        ("h-closed", {"n": 6}), ("p-closed", {"n": 6}), ("s-closed", {"n": 5}),
    ] + [
        ("etilde-basis", {"n": n}) for n in (2, 3, 4, 5, 6)
    ] + [
        ("mq-crosscheck", {"n": n, "mmax": 3}) for n in (2, 3, 4, 5)
    ] + [
        ("mq-subspace", {"n": 3, "qvals": [2, 3]}),
        ("mq-subspace", {"n": 2, "qvals": [2, 3, 4]}),
    ] + [
        ("mq-recurrences", {"n": n, "mmax": 3}) for n in (2, 3, 4)
    ] + [
        ("classical-oracles", {"n": n}) for n in (2, 3, 4, 5)
    ] + [
        ("centrality", {"n": n}) for n in (2, 3, 4, 5)
    ] + [
        ("gr-minlength", {"n": n}) for n in (2, 3, 4, 5)
    ] + [
        ("chu-vandermonde", {"amax": 8}),
        ("prodfac-lemma", {"nmax": 8}),
        ("unimodality-scan", {"nmax": 5, "mmax": 4}),
    ],
}


def run_check(name: str, params=None) -> CheckReport:
    if name not in REGISTRY:
        raise UnknownCheck(f"no check named {name!r}")
    params = dict(params or {})
    start = time.monotonic()
    result = REGISTRY[name](**params)
    ms = int((time.monotonic() - start) * 1000)
    if name == "unimodality-scan":
        witness, note = result
        return CheckReport(name, params, "pass", note, ms)
    status = "pass" if result is None else "fail"
    return CheckReport(name, params, status, result, ms)


def run_all(profile: str = "quick"):
    if profile not in PROFILES:
        raise ParseError(f"unknown profile {profile!r}; use quick or full")
    reports = [run_check(name, params) for name, params in PROFILES[profile]]
    return sorted(reports, key=lambda r: (r.check, json.dumps(r.params, sort_keys=True)))
