"""Discrete-log solvers for the prescribed base g = alpha + b.

The direct solver factors the representative polynomial of the target and
reads the exponent digits off the conjugate linear factors; it covers digit
sums up to the extension degree (the sum-equals-degree boundary is patched
through the constant term).  The relaxed solver reduces to list decoding:
candidates t turn the target into f + modulus*t, which must again split into
conjugate factors.  Everything returned is verified by re-exponentiation.
"""

from __future__ import annotations

import random

from . import oracle
from .digits import (ExponentDigits, agreement_bound, curve_degree_bound,
                     relaxed_sum_bound)
from .extfield import ContextMismatch, ExtElement, encode_digits
from .listdecode import AgreementTooSmall, agreement, list_decode
from .poly import Poly, factor


class NotSplit(ValueError):
    """Target does not factor into conjugate linear factors (digit sum too big)."""


class RootNotInTable(ValueError):
    """A linear factor is not of conjugate form, or the leading coefficient is off."""


class VerificationFailed(RuntimeError):
    """Internal inconsistency: a read-off digit vector failed re-exponentiation."""


class NoCandidate(ValueError):
    """No list-decoding candidate produced a verified exponent."""


class Unsolvable(RuntimeError):
    """All strategies failed within the configured budgets."""


class DlpInstance:
    """A context plus the target element g^e presented as f(alpha)."""

    __slots__ = ("ctx", "target")

    def __init__(self, ctx, target: ExtElement):
        if not isinstance(target, ExtElement) or target.ctx is not ctx:
            raise ContextMismatch("target must belong to the instance context")
        if target.is_zero():
            raise ValueError("target must be nonzero")
        self.ctx = ctx
        self.target = target

    def __repr__(self):
        return f"DlpInstance({self.ctx!r}, {self.target!r})"


class SolveOutcome:
    """Recovered digits plus the strategy that produced them; always verified."""

    __slots__ = ("digits", "method", "verified")

    def __init__(self, digits: ExponentDigits, method: str, verified: bool = True):
        self.digits = digits
        self.method = method
        self.verified = verified

    def exponent(self) -> int:
        return self.digits.to_int()

    def __repr__(self):
        return f"SolveOutcome(digits={tuple(self.digits)}, method={self.method!r})"


def build_points(inst: DlpInstance) -> list[tuple]:
    """The decoding point set: x_i kills the i-th conjugate factor, and
    y_i = -f(x_i)/denom is the forced value t(x_i) whenever digit i is nonzero."""
    ctx = inst.ctx
    base = ctx.base
    f = inst.target.poly
    return [(x, base.mul(base.neg(f.eval(x)), ctx.denom_inv)) for x in ctx.point_xs]


def _read_digits(ctx, F: Poly, rng: random.Random) -> ExponentDigits:
    """Factor F and read digits from its conjugate linear factors.

    Raises NotSplit when a factor of degree >= 2 survives, RootNotInTable when
    a root is not of conjugate form, a digit would leave [0, q), or the
    leading coefficient disagrees with the conjugate table.
    """
    q = ctx.base.q
    lc, factors = factor(F, rng)
    digits = [0] * ctx.degree
    for fac, mult in factors:
        if fac.degree != 1:
            raise NotSplit(f"irreducible factor of degree {fac.degree}")
        i = ctx.conjugate_index(fac.coeff(0))
        if i is None:
            raise RootNotInTable(f"root constant {fac.coeff(0)} not in the conjugate table")
        if mult >= q:
            raise RootNotInTable(f"multiplicity {mult} exceeds the digit range")
        digits[i] = mult
    if ctx.expected_lc(digits) != lc:
        raise RootNotInTable("leading coefficient inconsistent with the digit vector")
    return ExponentDigits(q, tuple(digits))


def _boundary_constant(ctx, f: Poly):
    """Kummer digit-sum-equals-n correction: the conjugate product has constant
    term b^n, so lambda = (f_0 - b^n)/a and the product is f + lambda*(x^n - a)."""
    base = ctx.base
    f0 = f.coeff(0)
    bn = base.pow_(ctx.b, ctx.n)
    return base.mul(base.sub(f0, bn), base.inv(ctx.a))


def solve_bounded(inst: DlpInstance, rng: random.Random | None = None) -> SolveOutcome:
    """Recover e when its digit sum is at most the extension degree.

    Tries the representative polynomial directly, then the boundary
    correction; the returned digit vector is unique among digit sums <= n.
    """
    rng = rng if rng is not None else random.Random(0xD1007)
    ctx = inst.ctx
    f = inst.target.poly
    attempts = [(f, "direct")]
    if ctx.kind == "kummer":
        lam = _boundary_constant(ctx, f)
        if lam != ctx.base.zero:
            attempts.append((f + ctx.modulus.mul_scalar(lam), "boundary"))
    failures = []
    for F, tag in attempts:
        try:
            digits = _read_digits(ctx, F, rng)
        except (NotSplit, RootNotInTable) as exc:
            failures.append(exc)
            continue
        if encode_digits(ctx, digits) != inst.target:  # pragma: no cover - defensive
            raise VerificationFailed(f"digits {tuple(digits)} failed re-exponentiation")
        return SolveOutcome(digits, tag)
    for exc in failures:
        if isinstance(exc, NotSplit):
            raise exc
    raise failures[-1]


def solve_listdecode(inst: DlpInstance, rng: random.Random | None = None) -> SolveOutcome:
    """Recover e with digit sum up to floor(1.32 n) via list decoding.

    Succeeds whenever at least ceil(0.5657 n) digits are nonzero (then the
    candidate curve has enough agreement) and also on every bounded-sum
    input, since t = 0 and the boundary constant are tried first.
    """
    rng = rng if rng is not None else random.Random(0x115D)
    ctx = inst.ctx
    base = ctx.base
    n = ctx.degree
    f = inst.target.poly
    k = max(1, curve_degree_bound(n))
    A = agreement_bound(n)
    points = build_points(inst)

    candidates = [Poly.zero(base)]
    if ctx.kind == "kummer":
        lam = _boundary_constant(ctx, f)
        if lam != base.zero:
            candidates.append(Poly.constant(base, lam))
    else:
        # digit sum p turns f into f + (x^p - x - a); the product stays monic
        candidates.append(Poly.one(base))
    try:
        found = list_decode(base, points, k, A, rng)
    except AgreementTooSmall:  # pragma: no cover - A > sqrt(kn) for every n >= 2
        found = []
    found.sort(key=lambda t: (-agreement(t, points), t.sort_key()))
    candidates.extend(found)

    seen = set()
    for t in candidates:
        if t.coeffs in seen:
            continue
        seen.add(t.coeffs)
        F = f + ctx.modulus * t
        try:
            digits = _read_digits(ctx, F, rng)
        except (NotSplit, RootNotInTable):
            continue
        if encode_digits(ctx, digits) != inst.target:  # pragma: no cover - defensive
            raise VerificationFailed(f"digits {tuple(digits)} failed re-exponentiation")
        return SolveOutcome(digits, "list_decode")
    raise NoCandidate(f"no candidate of degree <= {k} produced a verified exponent")


def _solve_fallback(inst: DlpInstance, budget: oracle.GroupBudget) -> SolveOutcome:
    ctx = inst.ctx
    n, q = ctx.degree, ctx.base.q
    order_bound = q ** n - 1
    try:
        e = oracle.bsgs_dlp(ctx.generator, inst.target, order_bound, budget)
    except oracle.BudgetExceeded as exc:
        raise Unsolvable(f"generic fallback exceeded budget: {exc}") from exc
    except oracle.NotInSubgroup as exc:
        raise Unsolvable("target is not a power of g") from exc
    digits = ExponentDigits.from_int(e, q, n)
    if encode_digits(ctx, digits) != inst.target:  # pragma: no cover - defensive
        raise VerificationFailed("fallback exponent failed re-exponentiation")
    return SolveOutcome(digits, "fallback")


def solve_auto(inst: DlpInstance, w_hint: int | None = None,
               rng: random.Random | None = None,
               budget: oracle.GroupBudget | None = None) -> SolveOutcome:
    """Strategy dispatch: direct read-off, then list decoding, then generic BSGS.

    w_hint (a claimed digit-sum bound) only reorders which strategy runs
    first; every strategy still runs before giving up.
    """
    rng = rng if rng is not None else random.Random(0xA070)
    budget = budget if budget is not None else oracle.GroupBudget()
    n = inst.ctx.degree

    def run_bounded():
        return solve_bounded(inst, rng)

    def run_list():
        return solve_listdecode(inst, rng)

    def run_fallback():
        return _solve_fallback(inst, budget)

    order = [("bounded", run_bounded), ("list", run_list), ("fallback", run_fallback)]
    if w_hint is not None:
        if w_hint > relaxed_sum_bound(n):
            order = [order[2], order[0], order[1]]
        elif w_hint > n:
            order = [order[1], order[0], order[2]]

    last: Exception | None = None
    for _name, step in order:
        try:
            return step()
        except (NotSplit, RootNotInTable, NoCandidate, Unsolvable) as exc:
            last = exc
    if isinstance(last, Unsolvable):
        raise last
    raise Unsolvable(f"all strategies failed; last error: {last}")
