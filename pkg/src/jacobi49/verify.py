"""Per-prime verification pipeline and the certificate records it emits.

A certificate is self-contained evidence for one (p, n) pair: the
predicted and directly-computed congruence residues, every coefficient
cross-path that was compared, the sextuple and t/u data, the
classification, and a list of *unexplained* discrepancies.  Expected,
adjudicated defects of the closed-form transcriptions are recorded under
coeffs.closed_form, not as discrepancies, so a nonempty discrepancy list
always means something is actually wrong.
"""

import random
from dataclasses import dataclass, field

from . import artiad as artiad_mod
from .congruence import (CoefficientSet, adjudicate_closed_forms,
                         c7_closed_form_fitted, coeffs_by_definition,
                         coeffs_closed_form, predicted_residue, s_direct, s_lemma)
from .cyclotomic_ring import Residue8, residue_mod_t8
from .cyclotomy import (CycNumberTable, DicksonHurwitzTable, cyclotomic_numbers,
                        dickson_hurwitz, jacobi_from_cyc, jacobi_sum,
                        jacobi_via_dh, identity_suite)
from .errors import InputError
from .order7 import (DiophantineReport, ReconstructionReport, Sextuple, TUPair,
                     match_reconstruction, solution_from_tables, tu_decompose,
                     verify_diophantine)
from .prime_field import FieldContext, build_ctx

ALL_N = tuple(range(1, 49))


@dataclass(frozen=True)
class Certificate:
    """Verification record for one (p, n); n is None for classify-only runs."""

    p: int
    gamma: int
    n: int | None
    predicted: Residue8 | None
    actual: Residue8 | None
    match: bool | None
    coeffs: dict
    lw: Sextuple
    tu: TUPair
    classification: artiad_mod.Classification
    cross_checks: dict
    discrepancies: tuple[str, ...] = field(default_factory=tuple)

    def to_json(self) -> dict:
        return {
            "p": self.p,
            "gamma": self.gamma,
            "n": self.n,
            "predicted": None if self.predicted is None else self.predicted.to_json(),
            "actual": None if self.actual is None else self.actual.to_json(),
            "match": self.match,
            "coeffs": self.coeffs,
            "lw": self.lw.to_json(),
            "tu": self.tu.to_json(),
            "classification": self.classification.to_json(),
            "cross_checks": self.cross_checks,
            "discrepancies": list(self.discrepancies),
        }


@dataclass(frozen=True)
class PrimeBundle:
    """Everything computed once per prime and shared across the n loop."""

    ctx: FieldContext
    cyc7: CycNumberTable
    dh7: DicksonHurwitzTable
    sol: Sextuple
    tu: TUPair
    recon: ReconstructionReport
    dio: DiophantineReport
    cyc49: CycNumberTable | None = None
    dh49: DicksonHurwitzTable | None = None


def prepare_prime(p: int, gamma: int | None = None, order49: bool = True) -> PrimeBundle:
    """Build tables, extract the sextuple, and run the per-prime checks."""
    ctx = build_ctx(p, gamma)
    if (p - 1) % 14 != 0:
        raise InputError(f"p = {p} is not 1 (mod 14)")
    cyc7 = cyclotomic_numbers(ctx, 7)
    dh7 = dickson_hurwitz(cyc7)
    sol = solution_from_tables(dh7)
    tu = tu_decompose(p)
    recon = match_reconstruction(cyc7, sol, tu)
    dio = verify_diophantine(sol, p)
    cyc49 = dh49 = None
    if order49 and (p - 1) % 49 == 0:
        cyc49 = cyclotomic_numbers(ctx, 49)
        dh49 = dickson_hurwitz(cyc49)
    return PrimeBundle(ctx=ctx, cyc7=cyc7, dh7=dh7, sol=sol, tu=tu,
                       recon=recon, dio=dio, cyc49=cyc49, dh49=dh49)


def _sampled_pairs(e: int, k: int, seed: int) -> list[tuple[int, int]]:
    rng = random.Random(seed)
    pairs = [(i, j) for i in range(e) for j in range(e)]
    return rng.sample(pairs, k)


def _identity_suite_ok(ctx: FieldContext, sampled: bool) -> bool:
    if sampled:
        pairs = _sampled_pairs(49, 30, seed=ctx.p)
        abs_pairs = _sampled_pairs(49, 20, seed=ctx.p + 1)
        return not identity_suite(ctx, 49, pairs=pairs, abs_pairs=abs_pairs)
    return not identity_suite(ctx, 49)


def verify_prime(p: int, gamma: int | None = None,
                 ns: tuple[int, ...] | None = None,
                 identities: str = "sampled") -> list[Certificate]:
    """Run the full congruence verification for each n; p must be 1 (mod 49).

    identities: 'sampled' (default), 'full', or 'skip' controls how much of
    the elementary-identity suite is stamped into the certificates.
    """
    if (p - 1) % 49 != 0:
        raise InputError(f"p = {p} is not 1 (mod 49)")
    if identities not in ("sampled", "full", "skip"):
        raise InputError(f"unknown identities mode {identities!r}")
    ns = ALL_N if ns is None else tuple(ns)
    bad = [n for n in ns if not 1 <= n <= 48]
    if bad:
        raise InputError(f"n values out of range 1..48: {bad}")
    bundle = prepare_prime(p, gamma)

    t1_ok = True if identities == "skip" else _identity_suite_ok(bundle.ctx, identities == "sampled")

    coeffs1 = coeffs_by_definition(bundle.dh7, 1, s_value=s_direct(bundle.dh49, 1))
    actual1 = residue_mod_t8(jacobi_sum(bundle.ctx, 49, 1, 1))
    classification = artiad_mod.classify_from_parts(
        bundle.ctx, bundle.cyc7, bundle.sol, coeffs1=coeffs1, actual_residue=actual1,
        u_signed=bundle.recon.u_signed)

    certs = []
    for n in ns:
        certs.append(_certificate_for_n(bundle, n, classification, t1_ok,
                                        coeffs1, actual1))
    return certs


def _certificate_for_n(bundle: PrimeBundle, n: int,
                       classification: artiad_mod.Classification, t1_ok: bool,
                       coeffs1: CoefficientSet, actual1: Residue8) -> Certificate:
    ctx, sol, tu = bundle.ctx, bundle.sol, bundle.tu
    p = ctx.p
    discrepancies: list[str] = []

    if n == 1:
        coeffs = coeffs1
        direct = jacobi_sum(ctx, 49, 1, 1)
        actual = actual1
    else:
        coeffs = coeffs_by_definition(bundle.dh7, n, s_value=s_direct(bundle.dh49, n))
        direct = jacobi_sum(ctx, 49, 1, n)
        actual = residue_mod_t8(direct)
    predicted = predicted_residue(coeffs)
    match = predicted == actual
    if not match:
        discrepancies.append(f"predicted residue differs from actual at n = {n}")

    # weak classical congruence: J = -1 mod (1 - zeta)^3
    weak_ok = actual.coeffs[0] == 6 and actual.coeffs[1] == 0 and actual.coeffs[2] == 0
    if not weak_ok:
        discrepancies.append("weak congruence J = -1 mod (1-zeta)^3 fails")

    # S(n) two-path comparison
    sd = coeffs.s_value
    if coeffs.n_prime == 0:
        sl = None
        s_agree = sd % 7 == 0
        if not s_agree:
            discrepancies.append(f"S({n}) not divisible by 7 despite 7 | n")
    else:
        sl = s_lemma(bundle.cyc7, n)
        s_agree = sl == sd % 7
        if not s_agree:
            discrepancies.append(f"S({n}) direct and order-7 paths disagree")

    # three-path Jacobi agreement for this n
    via_dh = jacobi_via_dh(bundle.dh49, n)
    via_cyc = jacobi_from_cyc(bundle.cyc49, 1, n)
    three_path = via_dh == direct == via_cyc
    if not three_path:
        discrepancies.append(f"Jacobi sum paths disagree at n = {n}")

    closed_json = None
    if n == 1:
        closed = coeffs_closed_form(sol, p)
        fitted = None
        if bundle.recon.u_signed is not None:
            fitted = c7_closed_form_fitted(sol, p, bundle.recon.u_signed)
        adj = adjudicate_closed_forms(closed, coeffs, fitted)
        closed_json = {"values": closed.to_json(), "adjudication": adj.to_json()}
        if adj.unexplained_rows:
            discrepancies.append(
                f"closed-form rows {list(adj.unexplained_rows)} fail beyond the "
                f"known transcription defects")

    if not bundle.recon.matched:
        discrepancies.append("order-7 table reconstruction from the sextuple failed")
    if not bundle.dio.norm:
        discrepancies.append("sextuple fails the norm equation")
    if not t1_ok:
        discrepancies.append("elementary Jacobi-sum identity suite failed")
    ev = classification.evidence
    if ev.via_x != ev.via_cubic:
        discrepancies.append("artiad criteria disagree (x-test vs cubic roots)")

    coeffs_block = {
        "definition": coeffs.to_json(),
        "closed_form": closed_json,
        "s_paths": {"direct": sd, "lemma": sl, "agree_mod7": s_agree},
    }
    cross = {
        "table_reconstruction": bundle.recon.to_json(),
        "diophantine": bundle.dio.to_json(),
        "identity_suite_ok": t1_ok,
        "weak_congruence_ok": weak_ok,
        "three_path_agree": three_path,
    }
    return Certificate(
        p=p, gamma=ctx.gamma, n=n,
        predicted=predicted, actual=actual, match=match,
        coeffs=coeffs_block, lw=sol, tu=tu,
        classification=classification, cross_checks=cross,
        discrepancies=tuple(discrepancies),
    )


def classify_prime(p: int, gamma: int | None = None) -> Certificate:
    """Classification-only certificate for p = 1 (mod 14); no congruence part."""
    bundle = prepare_prime(p, gamma)
    coeffs1 = actual1 = None
    if bundle.dh49 is not None:
        coeffs1 = coeffs_by_definition(bundle.dh7, 1, s_value=s_direct(bundle.dh49, 1))
        actual1 = residue_mod_t8(jacobi_sum(bundle.ctx, 49, 1, 1))
    classification = artiad_mod.classify_from_parts(
        bundle.ctx, bundle.cyc7, bundle.sol, coeffs1=coeffs1, actual_residue=actual1,
        u_signed=bundle.recon.u_signed)

    discrepancies: list[str] = []
    if not bundle.recon.matched:
        discrepancies.append("order-7 table reconstruction from the sextuple failed")
    if not bundle.dio.norm:
        discrepancies.append("sextuple fails the norm equation")
    ev = classification.evidence
    if ev.via_x != ev.via_cubic:
        discrepancies.append("artiad criteria disagree (x-test vs cubic roots)")

    coeffs_block = {
        "definition": coeffs1.to_json() if coeffs1 is not None
        else coeffs_by_definition(bundle.dh7, 1).to_json(),
        "closed_form": None,
        "s_paths": {"direct": None if coeffs1 is None else coeffs1.s_value,
                    "lemma": s_lemma(bundle.cyc7, 1),
                    "agree_mod7": None if coeffs1 is None
                    else s_lemma(bundle.cyc7, 1) == coeffs1.s_value % 7},
    }
    cross = {
        "table_reconstruction": bundle.recon.to_json(),
        "diophantine": bundle.dio.to_json(),
        "identity_suite_ok": None,
        "weak_congruence_ok": None,
        "three_path_agree": None,
    }
    return Certificate(
        p=p, gamma=bundle.ctx.gamma, n=None,
        predicted=None, actual=None, match=None,
        coeffs=coeffs_block, lw=bundle.sol, tu=bundle.tu,
        classification=classification, cross_checks=cross,
        discrepancies=tuple(discrepancies),
    )
