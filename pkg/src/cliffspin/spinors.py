"""Exterior-exponent parametrisations of the spinor groups Spin+(p,q).

For n = 4 every group element S with reverse(S)*S = e is either

* regular:    S = sign / sqrt(lambda) * ext_exp(B)   when Tr S != 0, or
* trace-free: S = B + sign * sqrt(rho) * e^{1234}    when Tr S == 0,

with B a bivector, lambda the scalar part of reverse(ext_exp(B))*ext_exp(B),
and rho = epsilon*(1 + beta) where beta = Tr(B*B) and epsilon the scalar
square of the top blade.  For n = 2, 3 the single form
S = sign*sqrt(1 + beta)*e + B covers the whole group.  This module provides
both directions of each correspondence plus the closed-form polynomials for
lambda and rho in all four n = 4 signatures.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import ClassVar, Union

import numpy as np

from .algebra import (
    DEFAULT_TOL,
    Multivector,
    Signature,
    _tables,
    _wrap,
    epsilon,
    pseudoscalar,
)
from .errors import (
    BetaOutOfRange,
    LambdaNotPositive,
    NotSimpleBivector,
    NotSpinElement,
    ParametrisationInconsistent,
    RhoNegative,
)

_EPS = float(np.finfo(float).eps)


def bivector_pairs(n: int) -> list[tuple[int, int]]:
    """Lexicographic index pairs (i, j), i < j, for grade-2 coefficients."""
    return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]


@dataclass(frozen=True)
class Bivector:
    """Grade-2 element stored as its n(n-1)/2 coefficients in pair order.

    For n = 4 the order is (b12, b13, b14, b23, b24, b34).
    """

    sig: Signature
    coeffs: tuple[float, ...]

    def __post_init__(self) -> None:
        expected = len(bivector_pairs(self.sig.n))
        coeffs = tuple(float(c) for c in self.coeffs)
        if len(coeffs) != expected:
            raise ValueError(
                f"{self.sig} bivector needs {expected} coefficients, got {len(coeffs)}"
            )
        object.__setattr__(self, "coeffs", coeffs)

    @classmethod
    def zero(cls, sig: Signature) -> "Bivector":
        return cls(sig, (0.0,) * len(bivector_pairs(sig.n)))

    @classmethod
    def from_multivector(cls, u: Multivector) -> "Bivector":
        """Extract the coefficients of a purely grade-2 multivector."""
        if (u - u.grade(2)).inf_norm() != 0.0:
            raise ValueError("multivector has components outside grade 2")
        coeffs = tuple(
            float(u.coeffs[(1 << (i - 1)) | (1 << (j - 1))])
            for i, j in bivector_pairs(u.sig.n)
        )
        return cls(u.sig, coeffs)

    def to_multivector(self) -> Multivector:
        arr = np.zeros(self.sig.dim)
        for (i, j), c in zip(bivector_pairs(self.sig.n), self.coeffs):
            arr[(1 << (i - 1)) | (1 << (j - 1))] = c
        return _wrap(self.sig, arr)

    def inf_norm(self) -> float:
        return max((abs(c) for c in self.coeffs), default=0.0)

    def isclose(self, other: "Bivector", tol: float = DEFAULT_TOL) -> bool:
        return self.sig == other.sig and all(
            abs(a - b) <= tol for a, b in zip(self.coeffs, other.coeffs)
        )


def wedge_of_vectors(sig: Signature, u, v) -> Bivector:
    """Simple bivector u ^ v from two vectors; its wedge square is exactly 0."""
    a = Multivector.from_vector(sig, u)
    b = Multivector.from_vector(sig, v)
    return Bivector.from_multivector(a ^ b)


def _pf(coeffs: tuple[float, ...]) -> float:
    # Pfaffian of the antisymmetric coefficient matrix; the exact expression
    # keeps the top coefficient of ext_exp bit-reproducible for n = 4.
    b12, b13, b14, b23, b24, b34 = coeffs
    return b14 * b23 - b13 * b24 + b12 * b34


def ext_exp(b: Bivector) -> Multivector:
    """Exterior exponential of a bivector: e + B + (B ^ B)/2.

    Wedge powers beyond the square vanish for n <= 5; for n = 4 the single
    grade-4 coefficient is b14*b23 - b13*b24 + b12*b34.
    """
    sig = b.sig
    if sig.n == 5:
        unit = Multivector.scalar(sig, 1.0)
        u = b.to_multivector()
        return unit + u + 0.5 * (u ^ u)
    arr = np.zeros(sig.dim)
    arr[0] = 1.0
    for (i, j), c in zip(bivector_pairs(sig.n), b.coeffs):
        arr[(1 << (i - 1)) | (1 << (j - 1))] = c
    if sig.n == 4:
        arr[15] = _pf(b.coeffs)
    return _wrap(sig, arr)


def beta_of(b: Bivector) -> float:
    """beta = Tr(B * B), the scalar part of the Clifford square."""
    u = b.to_multivector()
    return (u * u).trace


def lambda_of(b: Bivector, tol: float = DEFAULT_TOL) -> float:
    """Scalar lambda with reverse(ext_exp(B)) * ext_exp(B) = lambda * e.

    Computed from that product; a nonscalar residual above tol would signal
    corrupted state and raises ParametrisationInconsistent.
    """
    _require_n4(b.sig, "lambda")
    e = ext_exp(b)
    prod = e.reverse() * e
    lam = prod.trace
    residual = (prod - Multivector.scalar(b.sig, lam)).inf_norm()
    if residual > max(tol, scale_tolerance(e.inf_norm())):
        raise ParametrisationInconsistent(
            f"reverse(ext_exp(B))*ext_exp(B) is not scalar: residual {residual:.3g}"
        )
    return lam + 0.0  # normalise -0.0


def lambda_closed_form(b: Bivector) -> float:
    """Signature-specific degree-4 polynomial equal to lambda_of."""
    _require_n4(b.sig, "lambda")
    b12, b13, b14, b23, b24, b34 = b.coeffs
    key = (b.sig.p, b.sig.q)
    if key in ((0, 4), (4, 0)):
        return (
            1 + b12**2 + b13**2 + b14**2 + b23**2
            + b14**2 * b23**2 - 2 * b13 * b14 * b23 * b24 + b24**2
            + b13**2 * b24**2 + 2 * b12 * b14 * b23 * b34
            - 2 * b12 * b13 * b24 * b34 + b34**2 + b12**2 * b34**2
        )
    if key == (1, 3):
        return (
            1 - b12**2 - b13**2 - b14**2 + b23**2
            - b14**2 * b23**2 + 2 * b13 * b14 * b23 * b24 + b24**2
            - b13**2 * b24**2 - 2 * b12 * b14 * b23 * b34
            + 2 * b12 * b13 * b24 * b34 + b34**2 - b12**2 * b34**2
        )
    if key == (2, 2):
        return (
            1 + b12**2 - b13**2 - b14**2 - b23**2
            + b14**2 * b23**2 - 2 * b13 * b14 * b23 * b24 - b24**2
            + b13**2 * b24**2 + 2 * b12 * b14 * b23 * b34
            - 2 * b12 * b13 * b24 * b34 + b34**2 + b12**2 * b34**2
        )
    # (3, 1) is the only remaining n = 4 signature
    return (
        1 + b12**2 + b13**2 - b14**2 + b23**2
        - b14**2 * b23**2 + 2 * b13 * b14 * b23 * b24 - b24**2
        - b13**2 * b24**2 - 2 * b12 * b14 * b23 * b34
        + 2 * b12 * b13 * b24 * b34 - b34**2 - b12**2 * b34**2
    )


def rho_of(b: Bivector) -> float:
    """rho = epsilon * (1 + beta); nonnegative exactly on the trace-free forms."""
    _require_n4(b.sig, "rho")
    return epsilon(b.sig) * (1.0 + beta_of(b)) + 0.0  # normalise -0.0


def rho_closed_form(b: Bivector) -> float:
    """Signature-specific quadratic polynomial equal to rho_of."""
    _require_n4(b.sig, "rho")
    b12, b13, b14, b23, b24, b34 = b.coeffs
    key = (b.sig.p, b.sig.q)
    if key in ((0, 4), (4, 0)):
        return 1 - b12**2 - b13**2 - b14**2 - b23**2 - b24**2 - b34**2
    if key == (1, 3):
        return -1 - b12**2 - b13**2 - b14**2 + b23**2 + b24**2 + b34**2
    if key == (2, 2):
        return 1 - b12**2 + b13**2 + b14**2 + b23**2 + b24**2 - b34**2
    return -1 + b12**2 + b13**2 - b14**2 + b23**2 - b24**2 - b34**2


def _require_n4(sig: Signature, what: str) -> None:
    if sig.n != 4:
        raise ValueError(f"{what} is defined for n = 4 signatures, got {sig}")


def scale_tolerance(peak: float, tol: float | None = None) -> float:
    """Absolute tolerance for comparisons of products of coefficients ~peak.

    Round-off in a Clifford product grows with the square of the coefficient
    scale; the default budget widens accordingly and never drops below
    DEFAULT_TOL.
    """
    if tol is not None:
        return tol
    peak = max(1.0, peak)
    return max(DEFAULT_TOL, 64.0 * _EPS * peak * peak)


def spin_residuals(u: Multivector) -> tuple[float, float]:
    """(odd-grade residual, ||reverse(u)*u - e|| infinity norm)."""
    odd = u.odd_part().inf_norm()
    group = (u.reverse() * u - Multivector.scalar(u.sig, 1.0)).inf_norm()
    return odd, group


def is_spin_element(u: Multivector, tol: float | None = None) -> bool:
    """True when u is even and reverse(u)*u = e within tolerance."""
    odd, group = spin_residuals(u)
    bound = scale_tolerance(u.inf_norm(), tol)
    return odd <= bound and group <= bound


class SpinElement:
    """Even multivector S with reverse(S)*S = e, validated on construction."""

    __slots__ = ("value",)

    def __init__(self, value: Multivector, tol: float | None = None) -> None:
        odd, group = spin_residuals(value)
        bound = scale_tolerance(value.inf_norm(), tol)
        if odd > bound or group > bound:
            raise NotSpinElement(
                f"odd residual {odd:.3g}, group residual {group:.3g} "
                f"exceed tolerance {bound:.3g}"
            )
        self.value = value

    @property
    def sig(self) -> Signature:
        return self.value.sig

    @property
    def trace(self) -> float:
        return self.value.trace

    def __neg__(self) -> "SpinElement":
        flipped = object.__new__(SpinElement)
        flipped.value = -self.value
        return flipped

    def __invert__(self) -> "SpinElement":
        """Group inverse: the reverse."""
        inv = object.__new__(SpinElement)
        inv.value = self.value.reverse()
        return inv

    def __mul__(self, other):
        if isinstance(other, SpinElement):
            return SpinElement(self.value * other.value)
        return NotImplemented

    def __repr__(self) -> str:
        from .mvtext import serialize

        return f"<spin {self.sig} {serialize(self.value)}>"


@dataclass(frozen=True)
class Regular:
    """Regular form: S = sign / sqrt(lam) * ext_exp(bivector), Tr S != 0."""

    bivector: Bivector
    sign: int
    lam: float
    branch: ClassVar[str] = "regular"


@dataclass(frozen=True)
class Adjoint:
    """Trace-free form: S = bivector + sign * sqrt(rho) * e^{1234}."""

    bivector: Bivector
    sign: int
    rho: float
    branch: ClassVar[str] = "adjoint"


Parametrisation = Union[Regular, Adjoint]


def _check_sign(sign: int) -> int:
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign!r}")
    return sign


def parametrize_regular(b: Bivector, sign: int = 1, tol: float = DEFAULT_TOL) -> SpinElement:
    """Spin element sign / sqrt(lambda) * ext_exp(B); requires lambda > 0.

    The trace of the result carries the requested sign.
    """
    _require_n4(b.sig, "the regular form")
    _check_sign(sign)
    lam = lambda_of(b, tol)
    if lam <= tol:
        raise LambdaNotPositive(f"lambda(B) = {lam:.6g} is not positive")
    return SpinElement(ext_exp(b) * (sign / math.sqrt(lam)))


def parametrize_adjoint(b: Bivector, sign: int = 1, tol: float = DEFAULT_TOL) -> SpinElement:
    """Trace-free spin element B + sign * sqrt(rho) * e^{1234}.

    Requires a simple bivector (B ^ B = 0) and rho = epsilon*(1 + beta) >= 0;
    values of rho in [-tol, 0] are clamped to 0.
    """
    _require_n4(b.sig, "the trace-free form")
    _check_sign(sign)
    u = b.to_multivector()
    wedge = (u ^ u).inf_norm()
    if wedge > tol:
        raise NotSimpleBivector(f"B ^ B has residual {wedge:.3g}")
    rho = rho_of(b)
    if rho < -tol:
        raise RhoNegative(f"rho = {rho:.6g} is negative")
    rho = max(rho, 0.0)
    return SpinElement(u + sign * math.sqrt(rho) * pseudoscalar(b.sig))


def decompose(
    s: SpinElement, *, trace_threshold: float = 1e-8, tol: float = DEFAULT_TOL
) -> Parametrisation:
    """Recover (branch, B, sign, lambda or rho) from a spin element, n = 4.

    |Tr S| > trace_threshold selects the regular branch; below it 1/Tr S
    would amplify noise past the reconstruction budget.  At rho = 0 both
    signs reconstruct the same element and +1 is reported.
    """
    value = s.value
    sig = value.sig
    _require_n4(sig, "decompose")
    alpha = value.trace
    if abs(alpha) > trace_threshold:
        b = Bivector.from_multivector(value.grade(2) / alpha)
        sign = 1 if alpha > 0 else -1
        lam = 1.0 / (alpha * alpha)
        rebuilt = parametrize_regular(b, sign, tol)
        budget = _reconstruction_tol(value.grade(2).inf_norm(), alpha, tol)
        residual = (rebuilt.value - value).inf_norm()
        if residual > budget:
            raise ParametrisationInconsistent(
                f"regular reconstruction residual {residual:.3g} exceeds {budget:.3g}"
            )
        return Regular(b, sign, lam)

    grade2 = value.grade(2)
    b = Bivector.from_multivector(grade2)
    budget = scale_tolerance(grade2.inf_norm(), None if tol == DEFAULT_TOL else tol)
    wedge = (grade2 ^ grade2).inf_norm()
    if wedge > budget:
        raise ParametrisationInconsistent(
            f"trace-free element with non-simple grade-2 part: residual {wedge:.3g}"
        )
    rho = rho_of(b)
    if rho < -budget:
        raise ParametrisationInconsistent(f"rho = {rho:.6g} is negative")
    rho = max(rho, 0.0)
    ell = pseudoscalar(sig)
    tau = (epsilon(sig) * ell * value).trace  # Tr(l^{-1} S), carries the sign
    sign = -1 if tau < -trace_threshold else 1
    if abs(abs(tau) - math.sqrt(rho)) > budget:
        raise ParametrisationInconsistent(
            f"grade-4 coefficient {tau:.6g} does not match sqrt(rho) = {math.sqrt(rho):.6g}"
        )
    return Adjoint(b, sign, rho)


def _reconstruction_tol(u_norm: float, alpha: float, tol: float) -> float:
    # Rebuilding through B = U/alpha cancels quartic terms of size
    # (|U|/alpha)^2; the attainable accuracy degrades by |U|^2/|alpha|.
    amplification = (1.0 + u_norm) ** 2 / max(abs(alpha), _EPS)
    return max(tol, 64.0 * _EPS * amplification)


def reconstruct(param: Parametrisation, tol: float = DEFAULT_TOL) -> SpinElement:
    """Spin element described by a decomposition result."""
    if isinstance(param, Regular):
        return parametrize_regular(param.bivector, param.sign, tol)
    return parametrize_adjoint(param.bivector, param.sign, tol)


def parametrize_low_dim(b: Bivector, sign: int = 1, tol: float = DEFAULT_TOL) -> SpinElement:
    """Spin element sign*sqrt(1 + beta)*e + B for n = 2 or 3.

    Requires beta = Tr(B*B) >= -1; values in [-1 - tol, -1] clamp the root
    to 0.
    """
    if b.sig.n not in (2, 3):
        raise ValueError(f"the low-dimension form requires n in (2, 3), got {b.sig}")
    _check_sign(sign)
    beta = beta_of(b)
    if beta < -1.0 - tol:
        raise BetaOutOfRange(f"beta = {beta:.6g} is below -1")
    root = math.sqrt(max(1.0 + beta, 0.0))
    return SpinElement(Multivector.scalar(b.sig, sign * root) + b.to_multivector())


def decompose_low_dim(
    s: SpinElement, *, trace_threshold: float = 1e-8
) -> tuple[Bivector, int]:
    """Inverse of parametrize_low_dim: returns (B, sign of Tr S).

    Even elements in n = 2, 3 only have grades 0 and 2, so this is total; at
    Tr S = 0 the sign +1 is reported since both signs rebuild the same S.
    """
    sig = s.value.sig
    if sig.n not in (2, 3):
        raise ValueError(f"the low-dimension form requires n in (2, 3), got {sig}")
    b = Bivector.from_multivector(s.value.grade(2))
    sign = -1 if s.trace < -trace_threshold else 1
    return b, sign
