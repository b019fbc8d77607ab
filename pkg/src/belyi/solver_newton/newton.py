"""Newton's method on the ansatz system with a doubling precision ladder."""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath


class NewtonError(RuntimeError):
    def __init__(self, message, history=()):
        super().__init__(message)
        self.history = list(history)


@dataclass
class PrecisionContext:
    digits: int = 30
    target_digits: int = 120

    def __post_init__(self):
        if self.digits < 16:
            raise ValueError("working precision must be at least 16 digits")
        if self.target_digits < self.digits:
            raise ValueError("target_digits must be at least digits")


@dataclass
class NewtonResult:
    values: list
    residual: object
    iterations: int
    history: list = field(default_factory=list)  # (digits, residual) per iteration


def _norm(v):
    return max((abs(x) for x in v), default=mpmath.mpf(0))


def newton_refine(sys, init, ctx: PrecisionContext | None = None, max_iterations: int = 200, guard: int = 10):
    """Refine ``init`` until every equation is below 10^(-target_digits).

    Precision starts at ``ctx.digits`` and doubles each time the residual
    reaches the level of the current precision; the last rung works at
    target_digits + guard digits.
    """
    ctx = ctx or PrecisionContext()
    if sys.n_unknowns != sys.n_equations or len(init) != sys.n_unknowns:
        raise ValueError("system must be square and init must match the unknowns")
    digits = ctx.digits
    final = ctx.target_digits + guard
    history = []
    u = list(init)
    iterations = 0
    logged = -1
    while True:
        with mpmath.workdps(min(digits, final)):
            u = [mpmath.mpc(x) for x in u]
            while True:
                F = sys.residual(u)
                res = _norm(F)
                if not history or iterations > logged:
                    history.append((min(digits, final), res))
                    logged = iterations
                if res < mpmath.mpf(10) ** (-ctx.target_digits):
                    return NewtonResult(u, res, iterations, history)
                if digits < final and res < mpmath.mpf(10) ** (-(digits * 0.8)):
                    break  # this rung is exhausted; climb
                if digits < final and _stalled(history, digits):
                    break  # ill-conditioned: rounding noise dominates at this precision
                if iterations >= max_iterations:
                    raise NewtonError(
                        f"no convergence after {iterations} iterations; residual history "
                        + ", ".join(mpmath.nstr(r, 3) for _, r in history[-8:]),
                        history,
                    )
                if len(history) > 6 and all(h[1] >= history[-6][1] for h in history[-5:]) and digits >= final:
                    raise NewtonError("residual stopped decreasing (diverging)", history)
                J = sys.jacobian(u)
                try:
                    du = mpmath.lu_solve(J, mpmath.matrix(F))
                except ZeroDivisionError:
                    raise NewtonError("degenerate configuration (coalesced preimages?)", history) from None
                u = [a - du[i] for i, a in enumerate(u)]
                iterations += 1
        digits *= 2


def _stalled(history, digits, window=3):
    """No gain over the last few iterations at this rung, with the residual already small."""
    rung = [r for d, r in history if d == digits]
    if len(rung) <= window or rung[-1] > mpmath.mpf(10) ** (-digits / 4):
        return False
    return min(rung[-window:]) >= min(rung[:-window]) / 2


def quadratic_steps(history, start=1e-4):
    """log10 residuals of consecutive steps once below ``start`` (for diagnostics)."""
    out = []
    for _, r in history:
        if r == 0:
            break
        e = float(mpmath.log10(r))
        if e < mpmath.log10(start):
            out.append(e)
    return out
