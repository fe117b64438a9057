"""The two-to-one cover map Spin+(p,q) -> SO+(p,q) and its Cl(1,3) tables.

The map sends S to the matrix P with reverse(S) e^a S = p^a_b e^b; the pair
+-S lands on the same P.  For the signature (1,3) the entries of T = lambda*P
(regular branch) and of P itself (trace-free branch) are also provided as
explicit polynomials in the bivector coefficients, serving as an independent
cross-check of the general map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .algebra import DEFAULT_TOL, Multivector, Signature
from .errors import NotSimpleBivector, NotSpinElement, RhoNegative
from .spinors import (
    Bivector,
    SpinElement,
    beta_of,
    lambda_of,
    parametrize_low_dim,
    parametrize_regular,
    rho_of,
    scale_tolerance,
)


@dataclass(frozen=True, eq=False)
class OrthoMatrix:
    """n x n real matrix with its metric attached; a candidate SO+ element."""

    sig: Signature
    entries: np.ndarray

    def __post_init__(self) -> None:
        arr = np.array(self.entries, dtype=float)
        n = self.sig.n
        if arr.shape != (n, n):
            raise ValueError(f"{self.sig} matrix must be {n}x{n}, got {arr.shape}")
        arr.setflags(write=False)
        object.__setattr__(self, "entries", arr)


@dataclass(frozen=True)
class OrthoReport:
    """Residuals of the special-orthogonality conditions plus component flag."""

    metric_residual: float      # max-abs of P^T eta P - eta
    det_residual: float         # |det P - 1|
    block_det: float            # determinant of the leading p x p block
    component_positive: bool    # block_det > 0, the identity-component test
    tolerance: float

    @property
    def in_special_orthogonal(self) -> bool:
        return self.metric_residual <= self.tolerance and self.det_residual <= self.tolerance

    @property
    def in_identity_component(self) -> bool:
        return self.in_special_orthogonal and self.component_positive


def cofactor_det(matrix) -> float:
    """Determinant by Laplace expansion along the first row; n <= 5 only."""
    a = np.asarray(matrix, dtype=float)
    k = a.shape[0]
    if k == 0:
        return 1.0
    if k == 1:
        return float(a[0, 0])
    total = 0.0
    sign = 1.0
    for j in range(k):
        minor = np.delete(a[1:], j, axis=1)
        total += sign * float(a[0, j]) * cofactor_det(minor)
        sign = -sign
    return total


def spin_to_so(s: SpinElement, tol: float | None = None) -> OrthoMatrix:
    """Image of a spin element under the cover map, for n <= 4.

    Row a holds the expansion of reverse(S) e^a S over the generators; a
    residual outside grade 1 beyond tolerance raises NotSpinElement.
    """
    sig = s.value.sig
    if sig.n > 4:
        raise ValueError(f"the cover map is provided for n <= 4, got {sig}")
    rev = s.value.reverse()
    bound = scale_tolerance(s.value.inf_norm(), tol)
    rows = np.empty((sig.n, sig.n))
    for a in range(1, sig.n + 1):
        image = rev * Multivector.basis_vector(sig, a) * s.value
        residual = (image - image.grade(1)).inf_norm()
        if residual > bound:
            raise NotSpinElement(
                f"conjugated e^{a} is not a vector: residual {residual:.3g}"
            )
        rows[a - 1] = [image.coeffs[1 << (b - 1)] for b in range(1, sig.n + 1)]
    return OrthoMatrix(sig, rows)


def verify_orthogonal(p: OrthoMatrix, tol: float = DEFAULT_TOL) -> OrthoReport:
    """Report on P^T eta P = eta, det P = 1 and the component criterion.

    The identity component of SO(p,q) is detected by a positive determinant
    of the leading p x p block; for pq = 0 the flag is always positive.
    """
    eta = p.sig.eta()
    gram = p.entries.T @ eta @ p.entries
    metric_residual = float(np.max(np.abs(gram - eta)))
    det = cofactor_det(p.entries)
    block_det = cofactor_det(p.entries[: p.sig.p, : p.sig.p])
    return OrthoReport(
        metric_residual=metric_residual,
        det_residual=abs(det - 1.0),
        block_det=block_det,
        component_positive=block_det > 0.0,
        tolerance=tol,
    )


def compose(s1: SpinElement, s2: SpinElement, tol: float | None = None) -> SpinElement:
    """Clifford product of two spin elements, revalidated."""
    if s1.sig != s2.sig:
        raise ValueError(f"signature mismatch: {s1.sig} vs {s2.sig}")
    return SpinElement(s1.value * s2.value, tol)


def random_spin_element(
    sig: Signature, seed: int | np.random.Generator, count: int = 3
) -> SpinElement:
    """Product of `count` parametrised factors from seeded random bivectors.

    Bivectors are rejected until the factor sits comfortably inside the
    form's domain (lambda > 0.3 for n = 4, beta > -1 + 1e-3 for n = 2, 3);
    together with the modest coefficient range this keeps the product within
    1e-9 of the group and its rotation matrix well-conditioned.
    Deterministic for a fixed integer seed.
    """
    if sig.n not in (2, 3, 4):
        raise ValueError(f"random elements are generated for n in (2, 3, 4), got {sig}")
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    rng = seed if isinstance(seed, np.random.Generator) else np.random.default_rng(seed)
    n_coeffs = sig.n * (sig.n - 1) // 2
    scale = 0.5 if sig.n == 4 else 1.0
    result: SpinElement | None = None
    for _ in range(count):
        while True:
            b = Bivector(sig, tuple(rng.uniform(-scale, scale, n_coeffs)))
            if sig.n == 4:
                if lambda_of(b) > 0.3:
                    break
            elif beta_of(b) > -1.0 + 1e-3:
                break
        sign = 1 if rng.integers(2) else -1
        factor = (
            parametrize_regular(b, sign)
            if sig.n == 4
            else parametrize_low_dim(b, sign)
        )
        result = factor if result is None else compose(result, factor)
    return result


_SIG13 = Signature(1, 3)


def closed_form_T13(b: Bivector) -> np.ndarray:
    """Entries of T = lambda * P for the regular branch in Cl(1,3).

    Pure polynomials in the bivector coefficients; multiplied out against
    the general cover map they agree entrywise whenever lambda > 0.
    """
    if b.sig != _SIG13:
        raise ValueError(f"this table is specific to Cl(1,3), got {b.sig}")
    b12, b13, b14, b23, b24, b34 = b.coeffs
    quartic = (
        b14**2 * b23**2 - 2 * b13 * b14 * b23 * b24 + b13**2 * b24**2
        + 2 * b12 * b14 * b23 * b34 - 2 * b12 * b13 * b24 * b34 + b12**2 * b34**2
    )
    t11 = 1 + b12**2 + b13**2 + b14**2 + b23**2 + b24**2 + b34**2 + quartic
    t12 = (
        2 * b12 + 2 * b13 * b23 + 2 * b14 * b24
        + 2 * b14 * b23 * b34 - 2 * b13 * b24 * b34 + 2 * b12 * b34**2
    )
    t13 = (
        2 * b13 - 2 * b12 * b23 - 2 * b14 * b23 * b24
        + 2 * b13 * b24**2 + 2 * b14 * b34 - 2 * b12 * b24 * b34
    )
    t14 = (
        2 * b14 + 2 * b14 * b23**2 - 2 * b12 * b24
        - 2 * b13 * b23 * b24 - 2 * b13 * b34 + 2 * b12 * b23 * b34
    )
    t21 = (
        2 * b12 - 2 * b13 * b23 - 2 * b14 * b24
        + 2 * b14 * b23 * b34 - 2 * b13 * b24 * b34 + 2 * b12 * b34**2
    )
    t22 = 1 + b12**2 - b13**2 - b14**2 - b23**2 - b24**2 + b34**2 + quartic
    t23 = (
        2 * b12 * b13 - 2 * b23 + 2 * b14**2 * b23
        - 2 * b13 * b14 * b24 + 2 * b12 * b14 * b34 - 2 * b24 * b34
    )
    t24 = (
        2 * b12 * b14 - 2 * b13 * b14 * b23 - 2 * b24
        + 2 * b13**2 * b24 - 2 * b12 * b13 * b34 + 2 * b23 * b34
    )
    t31 = (
        2 * b13 + 2 * b12 * b23 - 2 * b14 * b23 * b24
        + 2 * b13 * b24**2 - 2 * b14 * b34 - 2 * b12 * b24 * b34
    )
    t32 = (
        2 * b12 * b13 + 2 * b23 - 2 * b14**2 * b23
        + 2 * b13 * b14 * b24 - 2 * b12 * b14 * b34 - 2 * b24 * b34
    )
    t33 = 1 - b12**2 + b13**2 - b14**2 - b23**2 + b24**2 - b34**2 + quartic
    t34 = (
        2 * b13 * b14 + 2 * b12 * b14 * b23 - 2 * b12 * b13 * b24
        - 2 * b23 * b24 - 2 * b34 + 2 * b12**2 * b34
    )
    t41 = (
        2 * b14 + 2 * b14 * b23**2 + 2 * b12 * b24
        - 2 * b13 * b23 * b24 + 2 * b13 * b34 + 2 * b12 * b23 * b34
    )
    t42 = (
        2 * b12 * b14 + 2 * b13 * b14 * b23 + 2 * b24
        - 2 * b13**2 * b24 + 2 * b12 * b13 * b34 + 2 * b23 * b34
    )
    t43 = (
        2 * b13 * b14 - 2 * b12 * b14 * b23 + 2 * b12 * b13 * b24
        - 2 * b23 * b24 + 2 * b34 - 2 * b12**2 * b34
    )
    t44 = 1 - b12**2 - b13**2 + b14**2 + b23**2 - b24**2 - b34**2 + quartic
    return np.array(
        [
            [t11, t12, t13, t14],
            [t21, t22, t23, t24],
            [t31, t32, t33, t34],
            [t41, t42, t43, t44],
        ]
    )


def closed_form_P13_adjoint(b: Bivector, tol: float = DEFAULT_TOL) -> OrthoMatrix:
    """Cover-map image of the trace-free element B + sqrt(rho) e^{1234} in Cl(1,3).

    Polynomial in the coefficients and sqrt(rho); preconditions match
    parametrize_adjoint (simple bivector, rho >= 0).
    """
    if b.sig != _SIG13:
        raise ValueError(f"this table is specific to Cl(1,3), got {b.sig}")
    u = b.to_multivector()
    wedge = (u ^ u).inf_norm()
    if wedge > tol:
        raise NotSimpleBivector(f"B ^ B has residual {wedge:.3g}")
    rho = rho_of(b)
    if rho < -tol:
        raise RhoNegative(f"rho = {rho:.6g} is negative")
    r = math.sqrt(max(rho, 0.0))
    b12, b13, b14, b23, b24, b34 = b.coeffs
    entries = np.array(
        [
            [
                -1 + 2 * b23**2 + 2 * b24**2 + 2 * b34**2,
                2 * b13 * b23 + 2 * b14 * b24 + 2 * b34 * r,
                -2 * b12 * b23 + 2 * b14 * b34 - 2 * b24 * r,
                -2 * b12 * b24 - 2 * b13 * b34 + 2 * b23 * r,
            ],
            [
                -2 * b13 * b23 - 2 * b14 * b24 + 2 * b34 * r,
                -1 - 2 * b13**2 - 2 * b14**2 + 2 * b34**2,
                2 * b12 * b13 - 2 * b24 * b34 + 2 * b14 * r,
                2 * b12 * b14 + 2 * b23 * b34 - 2 * b13 * r,
            ],
            [
                2 * b12 * b23 - 2 * b14 * b34 - 2 * b24 * r,
                2 * b12 * b13 - 2 * b24 * b34 - 2 * b14 * r,
                -1 - 2 * b12**2 - 2 * b14**2 + 2 * b24**2,
                2 * b13 * b14 - 2 * b23 * b24 + 2 * b12 * r,
            ],
            [
                2 * b12 * b24 + 2 * b13 * b34 + 2 * b23 * r,
                2 * b12 * b14 + 2 * b23 * b34 + 2 * b13 * r,
                2 * b13 * b14 - 2 * b23 * b24 - 2 * b12 * r,
                -1 - 2 * b12**2 - 2 * b13**2 + 2 * b23**2,
            ],
        ]
    )
    return OrthoMatrix(b.sig, entries)
