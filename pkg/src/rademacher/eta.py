"""Arbitrary-precision evaluation of log eta and the transformation checks.

log eta is computed from the product formula,

    log eta(z) = pi i z / 12 + sum_{n=1}^{N} Log(1 - q^n),   q = e^{2 pi i z},

with principal logarithms term by term (each 1 - q^n lies in the right
half plane, so the exponential of the sum is eta itself).  N is chosen so
the dropped tail is below 10^-(P+10), where P is the requested precision
in decimal digits; all intermediate arithmetic carries 10 guard digits.

The level-p function uses the additive branch

    log eta_p(z) = ( log eta(z) + log eta(p z) ) / 2,

under which the transformation law holds pointwise with the symbol Phi_p.
eta_p_branch_ratio measures how this branch relates to the principal
2k-th root of Delta_p = eta^k(z) eta^k(p z): the ratio is a 2k-th root of
unity, not always 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import mpmath

from .dedekind import rademacher_phi
from .errors import DomainError, ImaginaryPartError
from .fricke import k_of_p, phi_p
from .matrices import COSET, FrickeElement, UnimodularMatrix, sgn

DEFAULT_PRECISION = 50
GUARD_DIGITS = 10
Y_MIN = 1e-3


def _required_terms(y: float, digits: int) -> int:
    # |q|^(N+1) / (1 - |q|)^2 < 10^-digits with |q| = exp(-2 pi y)
    absq = math.exp(-2 * math.pi * y)
    if absq == 0.0:
        return 1
    need = digits * math.log(10) - 2 * math.log1p(-absq)
    return max(1, math.ceil(need / (2 * math.pi * y)))


def _log_eta_info(z, prec: int, y_min: float = Y_MIN):
    """(value, terms, tail_bound) at precision prec; context already set
    by the caller or set here, both at prec + GUARD_DIGITS digits."""
    if prec < 30:
        raise DomainError(f"precision {prec} below the 30 digit floor")
    with mpmath.workdps(prec + GUARD_DIGITS):
        z = mpmath.mpc(z)
        y = float(z.imag)
        if y < y_min:
            est = _required_terms(max(y, 1e-12), prec + GUARD_DIGITS)
            raise ImaginaryPartError(
                f"Im(z) = {y} below threshold {y_min}; the series would need "
                f"about {est} terms"
            )
        n_terms = _required_terms(y, prec + GUARD_DIGITS)
        q = mpmath.expjpi(2 * z)
        total = mpmath.pi * 1j * z / 12
        qn = mpmath.mpc(1)
        for _ in range(n_terms):
            qn *= q
            total += mpmath.log(1 - qn)
        absq = abs(q)
        tail = absq ** (n_terms + 1) / (1 - absq) ** 2
        return total, n_terms, tail


def log_eta(z, prec: int = DEFAULT_PRECISION, y_min: float = Y_MIN):
    """Principal-series logarithm of eta(z) for Im(z) >= y_min."""
    value, _, _ = _log_eta_info(z, prec, y_min)
    return value


def _log_eta_p_info(p: int, z, prec: int, y_min: float = Y_MIN):
    with mpmath.workdps(prec + GUARD_DIGITS):
        v1, n1, _ = _log_eta_info(z, prec, y_min)
        v2, n2, _ = _log_eta_info(p * mpmath.mpc(z), prec, y_min)
        return (v1 + v2) / 2, max(n1, n2)


def log_eta_p(p: int, z, prec: int = DEFAULT_PRECISION, y_min: float = Y_MIN):
    """Additive-branch log eta_p(z) = (log eta(z) + log eta(p z)) / 2."""
    value, _ = _log_eta_p_info(p, z, prec, y_min)
    return value


def eta_p_branch_ratio(p: int, z, prec: int = DEFAULT_PRECISION):
    """exp(log eta_p(z)) divided by the principal 2k-th root of Delta_p(z).

    Always a 2k-th root of unity with k = k_of_p(p); equal to 1 exactly
    when the accumulated argument of Delta_p stays inside (-pi, pi].
    """
    k = k_of_p(p)
    with mpmath.workdps(prec + GUARD_DIGITS):
        add = log_eta_p(p, z, prec)
        delta = mpmath.exp(2 * k * add)
        principal = mpmath.exp(mpmath.log(delta) / (2 * k))
        return mpmath.exp(add) / principal


@dataclass
class VerificationReport:
    """Outcome of one numeric check of a transformation law."""

    lhs: object
    rhs: object
    residual: object
    truncation_terms: int
    precision: int

    def passed(self, tolerance) -> bool:
        return self.residual < mpmath.mpf(tolerance)

    def to_dict(self, tolerance=None) -> dict:
        digits = self.precision
        out = {
            "lhs": _format_complex(self.lhs, digits),
            "rhs": _format_complex(self.rhs, digits),
            "residual": mpmath.nstr(self.residual, 8),
            "truncation_terms": self.truncation_terms,
            "precision": self.precision,
        }
        if tolerance is not None:
            out["tolerance"] = str(tolerance)
            out["pass"] = bool(self.passed(tolerance))
        return out


def _format_complex(v, digits: int) -> str:
    # format inside a wide context; mpc() rounds to the current precision
    with mpmath.workdps(digits + GUARD_DIGITS):
        v = mpmath.mpc(v)
        return f"{mpmath.nstr(v.real, digits)},{mpmath.nstr(v.imag, digits)}"


def _branch_term(cz_d, c_sign: int):
    # (1/2) Log((c z + d) / (i sgn c)); the division rotates the upper or
    # lower half plane onto the right half plane, keeping the principal
    # branch away from its cut.
    return mpmath.log(cz_d / (1j * c_sign)) / 2


def verify_eta_transform(
    g: UnimodularMatrix, z, prec: int = DEFAULT_PRECISION, y_min: float = Y_MIN
) -> VerificationReport:
    """Check log eta(g z) against
    log eta(z) + (1/2) sgn(c)^2 Log((c z + d)/(i sgn c)) + (pi i / 12) Phi(g).
    """
    a, b, c, d = g.entries()
    with mpmath.workdps(prec + GUARD_DIGITS):
        z = mpmath.mpc(z)
        gz = (a * z + b) / (c * z + d)
        lhs, n1, _ = _log_eta_info(gz, prec, y_min)
        base, n2, _ = _log_eta_info(z, prec, y_min)
        rhs = base + mpmath.pi * 1j * rademacher_phi(g) / 12
        if c != 0:
            rhs += _branch_term(c * z + d, sgn(c))
        residual = abs(lhs - rhs)
    return VerificationReport(lhs, rhs, residual, max(n1, n2), prec)


def verify_theorem1(
    e: FrickeElement, z, prec: int = DEFAULT_PRECISION, y_min: float = Y_MIN
) -> VerificationReport:
    """Check the level-p law log eta_p(e z) =
    log eta_p(z) + (1/2) sgn(c)^2 Log((c z + d)/(i sgn c)) + (pi i / 12) Phi_p(e),
    with (a, b, c, d) the real entries of e (sqrt p enters only here)."""
    p = e.p
    value = phi_p(e)
    with mpmath.workdps(prec + GUARD_DIGITS):
        z = mpmath.mpc(z)
        if e.kind == COSET:
            al, be, ga, de = e.q
            # Moebius action has integer coefficients after scaling by sqrt p
            ez = (p * al * z + be) / (p * ga * z + p * de)
            cz_d = mpmath.sqrt(p) * (ga * z + de)
            c_sign = sgn(ga)
        else:
            a, b, c, d = e.q
            ez = (a * z + b) / (c * z + d)
            cz_d = c * z + d
            c_sign = sgn(c)
        lhs, n1 = _log_eta_p_info(p, ez, prec, y_min)
        base, n2 = _log_eta_p_info(p, z, prec, y_min)
        phase = mpmath.pi * 1j * mpmath.mpf(value.numerator) / (12 * value.denominator)
        rhs = base + phase
        if c_sign != 0:
            rhs += _branch_term(cz_d, c_sign)
        residual = abs(lhs - rhs)
    return VerificationReport(lhs, rhs, residual, max(n1, n2), prec)
