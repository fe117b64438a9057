"""Dense blade-indexed arithmetic for the real Clifford algebras Cl(p,q), n <= 5.

A basis blade is identified with a bitmask: bit i-1 set means the generator
e^i is a factor, with factors kept in ascending index order.  A multivector
is a dense vector of 2**n real coefficients over that basis, so the Clifford
and exterior products reduce to sign tables plus XOR index arithmetic.

All values are immutable after construction and every operation is a pure
function, so instances can be shared freely across threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, NamedTuple

import numpy as np

#: Absolute tolerance for scalar comparisons unless a caller overrides it.
DEFAULT_TOL = 1e-10

_MAX_N = 5


@dataclass(frozen=True)
class Signature:
    """Metric signature (p, q): p generators square to +e and q to -e."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 0 or self.q < 0:
            raise ValueError(f"p and q must be nonnegative, got ({self.p}, {self.q})")
        n = self.p + self.q
        if not 1 <= n <= _MAX_N:
            raise ValueError(f"dimension n = p + q must be in 1..{_MAX_N}, got {n}")

    @property
    def n(self) -> int:
        return self.p + self.q

    @property
    def dim(self) -> int:
        return 1 << self.n

    def metric(self, a: int) -> float:
        """Diagonal metric entry of the generator with 1-based index a."""
        if not 1 <= a <= self.n:
            raise ValueError(f"generator index must be in 1..{self.n}, got {a}")
        return 1.0 if a <= self.p else -1.0

    def eta(self) -> np.ndarray:
        """The n x n diagonal metric matrix."""
        return np.diag([self.metric(a) for a in range(1, self.n + 1)])

    def __str__(self) -> str:
        return f"Cl({self.p},{self.q})"


def _swap_count(a: int, b: int) -> int:
    """Adjacent transpositions needed to interleave blade a in front of blade b.

    Counts index pairs (i in a, j in b) with i > j by sweeping a over b.
    """
    count = 0
    a >>= 1
    while a:
        count += (a & b).bit_count()
        a >>= 1
    return count


def blade_product(a: int, b: int, sig: Signature) -> tuple[int, float]:
    """Clifford product of two basis blades: resulting mask and sign factor.

    The mask is a XOR b; the sign collects one -1 per transposition needed to
    sort the concatenated factors plus the metric square of every shared
    generator.
    """
    sign = -1.0 if _swap_count(a, b) & 1 else 1.0
    shared = a & b
    while shared:
        low = shared & -shared
        sign *= sig.metric(low.bit_length())
        shared ^= low
    return a ^ b, sign


def wedge_product(a: int, b: int) -> tuple[int, float]:
    """Exterior product of two basis blades; the sign is 0 on shared indices."""
    if a & b:
        return 0, 0.0
    return a ^ b, -1.0 if _swap_count(a, b) & 1 else 1.0


class _Tables(NamedTuple):
    xor: np.ndarray     # (dim, dim) int; xor[i, k] = i ^ k
    cliff: np.ndarray   # (dim, dim); cliff[i, k] = sign of blade i times blade i^k
    wedge: np.ndarray   # same layout for the exterior product
    rev: np.ndarray     # (dim,) reversion signs
    grades: np.ndarray  # (dim,) blade grades


@lru_cache(maxsize=None)
def _tables(p: int, q: int) -> _Tables:
    sig = Signature(p, q)
    dim = sig.dim
    masks = np.arange(dim)
    xor = masks[:, None] ^ masks[None, :]
    cliff = np.empty((dim, dim))
    wedge = np.empty((dim, dim))
    for i in range(dim):
        for k in range(dim):
            j = i ^ k
            cliff[i, k] = blade_product(i, j, sig)[1]
            wedge[i, k] = wedge_product(i, j)[1]
    grades = np.array([m.bit_count() for m in range(dim)])
    rev = np.where(grades * (grades - 1) // 2 % 2, -1.0, 1.0)
    for arr in (xor, cliff, wedge, rev, grades):
        arr.setflags(write=False)
    return _Tables(xor, cliff, wedge, rev, grades)


def _wrap(sig: Signature, arr: np.ndarray) -> "Multivector":
    """Adopt arr without copying; caller must not retain a writable view."""
    mv = object.__new__(Multivector)
    arr.setflags(write=False)
    mv.sig = sig
    mv.coeffs = arr
    return mv


class Multivector:
    """Immutable element of Cl(p,q): a signature and 2**n blade coefficients.

    Operators: ``*`` is the Clifford product (or scalar scaling), ``^`` the
    exterior product, ``~`` reversion, ``+``/``-`` linear arithmetic.  Note
    that ``^`` binds looser than ``+`` in Python, so parenthesise wedges.
    """

    __slots__ = ("sig", "coeffs")

    def __init__(self, sig: Signature, coeffs) -> None:
        arr = np.array(coeffs, dtype=float)
        if arr.shape != (sig.dim,):
            raise ValueError(
                f"{sig} multivector needs {sig.dim} coefficients, got shape {arr.shape}"
            )
        arr.setflags(write=False)
        self.sig = sig
        self.coeffs = arr

    # ---- constructors -------------------------------------------------

    @classmethod
    def zero(cls, sig: Signature) -> "Multivector":
        return _wrap(sig, np.zeros(sig.dim))

    @classmethod
    def scalar(cls, sig: Signature, value: float) -> "Multivector":
        arr = np.zeros(sig.dim)
        arr[0] = value
        return _wrap(sig, arr)

    @classmethod
    def blade(cls, sig: Signature, indices: Iterable[int], coeff: float = 1.0) -> "Multivector":
        """Canonical basis blade e^{a1...ak}; indices must strictly ascend."""
        mask = 0
        prev = 0
        for a in indices:
            if not 1 <= a <= sig.n:
                raise ValueError(f"blade index must be in 1..{sig.n}, got {a}")
            if a <= prev:
                raise ValueError("blade indices must be strictly ascending")
            mask |= 1 << (a - 1)
            prev = a
        arr = np.zeros(sig.dim)
        arr[mask] = coeff
        return _wrap(sig, arr)

    @classmethod
    def basis_vector(cls, sig: Signature, a: int) -> "Multivector":
        return cls.blade(sig, (a,))

    @classmethod
    def from_vector(cls, sig: Signature, components: Iterable[float]) -> "Multivector":
        """Grade-1 element with the given n generator coefficients."""
        comps = [float(c) for c in components]
        if len(comps) != sig.n:
            raise ValueError(f"expected {sig.n} components, got {len(comps)}")
        arr = np.zeros(sig.dim)
        for i, c in enumerate(comps):
            arr[1 << i] = c
        return _wrap(sig, arr)

    # ---- structure ----------------------------------------------------

    def grade(self, k: int) -> "Multivector":
        """Projection onto the blades of grade k."""
        if not 0 <= k <= self.sig.n:
            raise ValueError(f"grade must be in 0..{self.sig.n}, got {k}")
        t = _tables(self.sig.p, self.sig.q)
        return _wrap(self.sig, np.where(t.grades == k, self.coeffs, 0.0))

    def grades(self) -> tuple[int, ...]:
        """Grades that carry a nonzero coefficient, ascending."""
        t = _tables(self.sig.p, self.sig.q)
        return tuple(sorted(set(t.grades[self.coeffs != 0.0].tolist())))

    def even_part(self) -> "Multivector":
        t = _tables(self.sig.p, self.sig.q)
        return _wrap(self.sig, np.where(t.grades % 2 == 0, self.coeffs, 0.0))

    def odd_part(self) -> "Multivector":
        t = _tables(self.sig.p, self.sig.q)
        return _wrap(self.sig, np.where(t.grades % 2 == 1, self.coeffs, 0.0))

    @property
    def trace(self) -> float:
        """Coefficient of the identity blade e."""
        return float(self.coeffs[0])

    def inf_norm(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def isclose(self, other: "Multivector", tol: float = DEFAULT_TOL) -> bool:
        return self.sig == other.sig and (self - other).inf_norm() <= tol

    # ---- algebra -------------------------------------------------------

    def _require_same_sig(self, other: "Multivector") -> None:
        if self.sig != other.sig:
            raise ValueError(f"signature mismatch: {self.sig} vs {other.sig}")

    def _product(self, other: "Multivector", table: np.ndarray) -> "Multivector":
        t = _tables(self.sig.p, self.sig.q)
        gathered = other.coeffs[t.xor]  # gathered[i, k] = v[i ^ k]
        out = np.einsum("i,ik,ik->k", self.coeffs, table, gathered)
        return _wrap(self.sig, out)

    def __mul__(self, other):
        if isinstance(other, Multivector):
            self._require_same_sig(other)
            return self._product(other, _tables(self.sig.p, self.sig.q).cliff)
        if isinstance(other, (int, float)):
            return _wrap(self.sig, self.coeffs * float(other))
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, float)):
            return _wrap(self.sig, self.coeffs * float(other))
        return NotImplemented

    def __truediv__(self, other):
        if isinstance(other, (int, float)):
            return _wrap(self.sig, self.coeffs / float(other))
        return NotImplemented

    def __xor__(self, other):
        if isinstance(other, Multivector):
            self._require_same_sig(other)
            return self._product(other, _tables(self.sig.p, self.sig.q).wedge)
        return NotImplemented

    def reverse(self) -> "Multivector":
        """Reversion: a grade-k blade picks up the factor (-1)^(k(k-1)/2)."""
        t = _tables(self.sig.p, self.sig.q)
        return _wrap(self.sig, self.coeffs * t.rev)

    def __invert__(self) -> "Multivector":
        return self.reverse()

    def __add__(self, other):
        if isinstance(other, Multivector):
            self._require_same_sig(other)
            return _wrap(self.sig, self.coeffs + other.coeffs)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, Multivector):
            self._require_same_sig(other)
            return _wrap(self.sig, self.coeffs - other.coeffs)
        return NotImplemented

    def __neg__(self) -> "Multivector":
        return _wrap(self.sig, -self.coeffs)

    def __eq__(self, other):
        if not isinstance(other, Multivector):
            return NotImplemented
        return self.sig == other.sig and bool(np.array_equal(self.coeffs, other.coeffs))

    __hash__ = None

    def __repr__(self) -> str:
        from .mvtext import serialize

        return f"<{self.sig} {serialize(self)}>"


def clifford_mul(u: Multivector, v: Multivector) -> Multivector:
    """Clifford product; equivalent to ``u * v``."""
    return u * v


def exterior_mul(u: Multivector, v: Multivector) -> Multivector:
    """Exterior product; equivalent to ``u ^ v``."""
    return u ^ v


def commutator(a: Multivector, b: Multivector) -> Multivector:
    """a*b - b*a; maps pairs of grade-2 elements back into grade 2."""
    return a * b - b * a


def pseudoscalar(sig: Signature) -> Multivector:
    """The top blade e^{1234}; defined for n = 4 only."""
    if sig.n != 4:
        raise ValueError(f"pseudoscalar helper requires n = 4, got {sig}")
    return Multivector.blade(sig, (1, 2, 3, 4))


def epsilon(sig: Signature) -> int:
    """Scalar square of the top blade for n = 4; always +1 or -1."""
    ell = pseudoscalar(sig)
    value = round((ell * ell).trace)
    if value not in (-1, 1):
        raise AssertionError(f"top-blade square is not a unit scalar: {value}")
    return value


def clifford_exp(a: Multivector, terms: int = 32) -> Multivector:
    """Truncated Clifford exponential series e + A + A^2/2! + ...

    When the largest coefficient exceeds 1 the argument is halved k times and
    the summed series squared k times, keeping the truncation error small.
    Intended as a cross-check oracle, not as a parametrisation path.
    """
    if terms < 1:
        raise ValueError(f"terms must be >= 1, got {terms}")
    halvings = 0
    peak = a.inf_norm()
    while peak > 1.0:
        peak /= 2.0
        halvings += 1
    x = a / float(1 << halvings) if halvings else a
    acc = Multivector.scalar(a.sig, 1.0)
    term = acc
    for j in range(1, terms):
        term = term * x / float(j)
        acc = acc + term
    for _ in range(halvings):
        acc = acc * acc
    return acc
