"""Truncated multivariate power series with exact integer coefficients.

Monomials are exponent tuples over the markers ``(x, y, z, p, s)``; the
series is truncated at a fixed degree ``N`` in the size marker ``s``.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Mapping

VARS = ("x", "y", "z", "p", "s")
_S = 4


class TruncatedSeries:
    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs: Mapping[tuple, int] | None = None):
        if N < 0:
            raise ValueError("degree bound must be non-negative")
        self.N = N
        self.coeffs = {}
        for mono, c in (coeffs or {}).items():
            mono = tuple(mono)
            if len(mono) != len(VARS) or min(mono) < 0:
                raise ValueError(f"bad monomial {mono}")
            if c and mono[_S] <= N:
                self.coeffs[mono] = self.coeffs.get(mono, 0) + int(c)
        self.coeffs = {m: c for m, c in self.coeffs.items() if c}

    @classmethod
    def one(cls, N: int) -> "TruncatedSeries":
        return cls(N, {(0, 0, 0, 0, 0): 1})

    @classmethod
    def monomial(cls, N: int, coeff: int = 1, **exps: int) -> "TruncatedSeries":
        return cls(N, {tuple(exps.get(v, 0) for v in VARS): coeff})

    def __repr__(self):
        terms = sorted(self.coeffs.items(), key=lambda t: (t[0][_S], t[0]))
        shown = " + ".join(f"{c}*{_mono_str(m)}" for m, c in terms[:8])
        more = " + ..." if len(terms) > 8 else ""
        return f"TruncatedSeries(N={self.N}: {shown or '0'}{more})"

    def __eq__(self, other):
        if not isinstance(other, TruncatedSeries):
            return NotImplemented
        N = min(self.N, other.N)
        return self.truncate(N).coeffs == other.truncate(N).coeffs

    def truncate(self, N: int) -> "TruncatedSeries":
        return TruncatedSeries(min(N, self.N), self.coeffs)

    def min_s_degree(self) -> int | None:
        return min((m[_S] for m in self.coeffs), default=None)

    def __add__(self, other):
        other = self._coerce(other)
        out = defaultdict(int, self.coeffs)
        for m, c in other.coeffs.items():
            out[m] += c
        return TruncatedSeries(min(self.N, other.N), out)

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.N, {m: -c for m, c in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if isinstance(other, int):
            return TruncatedSeries(self.N, {m: c * other for m, c in self.coeffs.items()})
        N = min(self.N, other.N)
        out = defaultdict(int)
        for m1, c1 in self.coeffs.items():
            room = N - m1[_S]
            if room < 0:
                continue
            for m2, c2 in other.coeffs.items():
                if m2[_S] <= room:
                    out[tuple(a + b for a, b in zip(m1, m2))] += c1 * c2
        return TruncatedSeries(N, out)

    __rmul__ = __mul__

    def _coerce(self, other):
        if isinstance(other, int):
            return TruncatedSeries.one(self.N) * other
        return other

    def shift_s(self, d: int) -> "TruncatedSeries":
        """Multiply by ``s**d``; negative ``d`` divides exactly or raises."""
        out = {}
        for m, c in self.coeffs.items():
            e = m[_S] + d
            if e < 0:
                raise ValueError(f"series is not divisible by s^{-d}")
            out[m[:_S] + (e,)] = c
        return TruncatedSeries(self.N + d if d < 0 else self.N, out)

    def geometric(self) -> "TruncatedSeries":
        """``1 / (1 - self)``; requires no terms of s-degree 0."""
        if self.coeffs and self.min_s_degree() == 0:
            raise ValueError("geometric inverse needs a series without s^0 terms")
        N = self.N
        by_deg = defaultdict(list)
        for m, c in self.coeffs.items():
            by_deg[m[_S]].append((m, c))
        layers = [{(0, 0, 0, 0, 0): 1}]
        for deg in range(1, N + 1):
            acc = defaultdict(int)
            for i in range(1, deg + 1):
                for m1, c1 in by_deg.get(i, ()):
                    for m2, c2 in layers[deg - i].items():
                        acc[tuple(a + b for a, b in zip(m1, m2))] += c1 * c2
            layers.append({m: c for m, c in acc.items() if c})
        out = {}
        for layer in layers:
            out.update(layer)
        return TruncatedSeries(N, out)

    def specialize(self, **values: int) -> "TruncatedSeries":
        """Substitute integers for markers (their exponents drop to 0)."""
        idx = {VARS.index(v): val for v, val in values.items()}
        if _S in idx:
            raise ValueError("the size marker s cannot be specialized")
        out = defaultdict(int)
        for m, c in self.coeffs.items():
            w = c
            for i, val in idx.items():
                w *= val ** m[i]
            out[tuple(0 if i in idx else e for i, e in enumerate(m))] += w
        return TruncatedSeries(self.N, out)

    def coefficient(self, **exps: int) -> int:
        return self.coeffs.get(tuple(exps.get(v, 0) for v in VARS), 0)

    def sequence(self) -> list[int]:
        """Coefficients of ``s^0..s^N`` with every other marker set to 1."""
        flat = [0] * (self.N + 1)
        for m, c in self.coeffs.items():
            flat[m[_S]] += c
        return flat


def _mono_str(m):
    parts = [v if e == 1 else f"{v}^{e}" for v, e in zip(VARS, m) if e]
    return "*".join(parts) or "1"
