"""Exact polynomial arithmetic over the integers.

``IntPoly`` is a dense univariate polynomial in ``x``. ``SymPoly`` is a sparse
polynomial in ``x`` and the rooted-graph indeterminates ``Q_1..Q_k, R_1..R_k``
(or the collapsed pair ``Q, R`` when k = 1 is used as a shared symbol).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

__all__ = ["IntPoly", "SymPoly", "X", "ONE", "ZERO", "sym_substitute"]


class IntPoly:
    """Polynomial with integer coefficients; ``coeffs[d]`` multiplies ``x**d``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def from_high(cls, coeffs: Iterable[int]) -> IntPoly:
        """Build from coefficients listed highest degree first."""
        return cls(reversed(list(coeffs)))

    @classmethod
    def constant(cls, c: int) -> IntPoly:
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree; -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def high_to_low(self) -> list[int]:
        return list(reversed(self.coeffs)) if self.coeffs else [0]

    def __getitem__(self, d: int) -> int:
        return self.coeffs[d] if 0 <= d < len(self.coeffs) else 0

    def __bool__(self):
        return bool(self.coeffs)

    def __eq__(self, other):
        if isinstance(other, int):
            other = IntPoly.constant(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def __lt__(self, other: IntPoly):
        # only used for deterministic ordering
        return (self.degree, self.high_to_low()) < (other.degree, other.high_to_low())

    @staticmethod
    def _coerce(p) -> IntPoly:
        if isinstance(p, IntPoly):
            return p
        if isinstance(p, int):
            return IntPoly.constant(p)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        return IntPoly([x + (b[i] if i < len(b) else 0) for i, x in enumerate(a)])

    __radd__ = __add__

    def __neg__(self):
        return IntPoly(-a for a in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        if not isinstance(other, IntPoly):
            return NotImplemented
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return ZERO
        out = [0] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return IntPoly(out)

    __rmul__ = __mul__

    def scale(self, c: int) -> IntPoly:
        return IntPoly(c * a for a in self.coeffs)

    def shift(self, d: int) -> IntPoly:
        """Multiply by ``x**d``."""
        return IntPoly((0,) * d + self.coeffs) if self.coeffs else ZERO

    def __pow__(self, e: int):
        if e < 0:
            raise ValueError("negative exponent")
        result, base = ONE, self
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __repr__(self):
        return f"IntPoly({self})"

    def __str__(self):
        return render(self.coeffs, "x")


def render(coeffs: Sequence[int], var: str = "x") -> str:
    """``c_d x^d + ... + c_0`` with zero terms omitted."""
    terms = []
    for d in range(len(coeffs) - 1, -1, -1):
        c = coeffs[d]
        if not c:
            continue
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            power = var if d == 1 else f"{var}^{d}"
            body = power if mag == 1 else f"{mag}{power}"
        if not terms:
            terms.append(body if c > 0 else f"-{body}")
        else:
            terms.append(("+ " if c > 0 else "- ") + body)
    return " ".join(terms) if terms else "0"


ZERO = IntPoly()
ONE = IntPoly((1,))
X = IntPoly((0, 1))


@dataclass(frozen=True)
class SymPoly:
    """Sparse polynomial in ``x, Q_1..Q_k, R_1..R_k``.

    Monomials are exponent tuples ``(e_x, q_1..q_k, r_1..r_k)``; ``k`` is fixed
    per instance. Zero coefficients are never stored.
    """

    k: int
    terms: Mapping[tuple[int, ...], int]

    def __post_init__(self):
        clean = {}
        for mono, c in self.terms.items():
            if len(mono) != 1 + 2 * self.k:
                raise ValueError(f"monomial {mono} does not have arity {1 + 2 * self.k}")
            if c:
                clean[tuple(mono)] = int(c)
        object.__setattr__(self, "terms", clean)

    @classmethod
    def zero(cls, k: int) -> SymPoly:
        return cls(k, {})

    @classmethod
    def from_intpoly(cls, p: IntPoly, k: int, q: Sequence[int] = None, r: Sequence[int] = None) -> SymPoly:
        """``p(x) * prod Q_i^q_i * prod R_i^r_i``."""
        q = tuple(q) if q is not None else (0,) * k
        r = tuple(r) if r is not None else (0,) * k
        return cls(k, {(d,) + q + r: c for d, c in enumerate(p.coeffs) if c})

    def __add__(self, other: SymPoly) -> SymPoly:
        self._check(other)
        out = dict(self.terms)
        for mono, c in other.terms.items():
            out[mono] = out.get(mono, 0) + c
        return SymPoly(self.k, out)

    def __neg__(self):
        return SymPoly(self.k, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other: SymPoly) -> SymPoly:
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return SymPoly(self.k, {m: c * other for m, c in self.terms.items()})
        self._check(other)
        out: dict[tuple[int, ...], int] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                mono = tuple(a + b for a, b in zip(m1, m2))
                out[mono] = out.get(mono, 0) + c1 * c2
        return SymPoly(self.k, out)

    __rmul__ = __mul__

    def _check(self, other):
        if not isinstance(other, SymPoly) or other.k != self.k:
            raise ValueError("SymPoly arity mismatch")

    def __eq__(self, other):
        if not isinstance(other, SymPoly):
            return NotImplemented
        return self.k == other.k and self.terms == other.terms

    def __hash__(self):
        return hash((self.k, frozenset(self.terms.items())))

    def collapse(self) -> SymPoly:
        """Identify every ``Q_i`` with ``Q`` and every ``R_i`` with ``R``."""
        out: dict[tuple[int, ...], int] = {}
        for mono, c in self.terms.items():
            key = (mono[0], sum(mono[1:1 + self.k]), sum(mono[1 + self.k:]))
            out[key] = out.get(key, 0) + c
        return SymPoly(1, out)

    def coefficient(self, q: Sequence[int], r: Sequence[int]) -> IntPoly:
        """Coefficient (a polynomial in ``x``) of the ``Q^q R^r`` monomial."""
        tail = tuple(q) + tuple(r)
        coeffs: dict[int, int] = {}
        for mono, c in self.terms.items():
            if mono[1:] == tail:
                coeffs[mono[0]] = c
        if not coeffs:
            return ZERO
        return IntPoly(coeffs.get(d, 0) for d in range(max(coeffs) + 1))

    def qr_monomials(self) -> list[tuple[int, ...]]:
        return sorted({m[1:] for m in self.terms}, reverse=True)

    def __str__(self):
        if not self.terms:
            return "0"
        names = ["Q", "R"] if self.k == 1 else [f"Q{i + 1}" for i in range(self.k)] + [f"R{i + 1}" for i in range(self.k)]
        parts = []
        for tail in sorted(self.qr_monomials(), key=lambda t: (t[:self.k], t[self.k:])):
            coeff = self.coefficient(tail[:self.k], tail[self.k:])
            factors = "".join(
                name if e == 1 else f"{name}^{e}" for name, e in zip(names, tail) if e
            )
            parts.append(f"({coeff}){factors}" if factors else f"({coeff})")
        return " + ".join(parts)


def sym_substitute(s: SymPoly, q_values: Sequence[IntPoly], r_values: Sequence[IntPoly]) -> IntPoly:
    """Evaluate the formal ``Q_i, R_i`` at concrete univariate polynomials."""
    if len(q_values) != s.k or len(r_values) != s.k:
        raise ValueError(f"expected {s.k} Q values and {s.k} R values")
    powers: dict[tuple[int, int], IntPoly] = {}

    def power(idx: int, e: int, base: IntPoly) -> IntPoly:
        key = (idx, e)
        if key not in powers:
            powers[key] = base ** e
        return powers[key]

    total = ZERO
    for mono, c in s.terms.items():
        term = X ** mono[0] if mono[0] else ONE
        term = term.scale(c)
        for i in range(s.k):
            if mono[1 + i]:
                term = term * power(i, mono[1 + i], q_values[i])
            if mono[1 + s.k + i]:
                term = term * power(s.k + i, mono[1 + s.k + i], r_values[i])
        total = total + term
    return total
