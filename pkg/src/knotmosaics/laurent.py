"""Integer Laurent polynomials in the bracket variable A.

Coefficients are exact Python integers; the zero polynomial has an empty
coefficient map.  Printing follows the sorted-exponent form used throughout
the reports, e.g. ``-A^-7 + A^-3 + A^5``.
"""

from __future__ import annotations

from typing import Iterable, Mapping


class Laurent:
    """Immutable Laurent polynomial with integer coefficients.

    Internally a dict mapping exponent -> nonzero coefficient.
    """

    __slots__ = ("_c",)

    def __init__(self, coeffs: Mapping[int, int] | Iterable[tuple[int, int]] = ()):
        c: dict[int, int] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for e, k in items:
            if k:
                c[e] = c.get(e, 0) + k
                if not c[e]:
                    del c[e]
        self._c = c

    @classmethod
    def zero(cls) -> "Laurent":
        return cls()

    @classmethod
    def one(cls) -> "Laurent":
        return cls({0: 1})

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "Laurent":
        return cls({exponent: coeff})

    def coeffs(self) -> dict[int, int]:
        return dict(self._c)

    def __bool__(self) -> bool:
        return bool(self._c)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = Laurent({0: other})
        if not isinstance(other, Laurent):
            return NotImplemented
        return self._c == other._c

    def __hash__(self) -> int:
        return hash(frozenset(self._c.items()))

    def __add__(self, other: "Laurent | int") -> "Laurent":
        if isinstance(other, int):
            other = Laurent({0: other})
        c = dict(self._c)
        for e, k in other._c.items():
            c[e] = c.get(e, 0) + k
            if not c[e]:
                del c[e]
        out = Laurent.__new__(Laurent)
        out._c = c
        return out

    __radd__ = __add__

    def __neg__(self) -> "Laurent":
        out = Laurent.__new__(Laurent)
        out._c = {e: -k for e, k in self._c.items()}
        return out

    def __sub__(self, other: "Laurent | int") -> "Laurent":
        return self + (-other if isinstance(other, Laurent) else Laurent({0: -other}))

    def __mul__(self, other: "Laurent | int") -> "Laurent":
        if isinstance(other, int):
            if not other:
                return Laurent()
            out = Laurent.__new__(Laurent)
            out._c = {e: k * other for e, k in self._c.items()}
            return out
        c: dict[int, int] = {}
        for e1, k1 in self._c.items():
            for e2, k2 in other._c.items():
                e = e1 + e2
                c[e] = c.get(e, 0) + k1 * k2
        out = Laurent.__new__(Laurent)
        out._c = {e: k for e, k in c.items() if k}
        return out

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Laurent":
        if n < 0:
            if len(self._c) != 1 or abs(next(iter(self._c.values()))) != 1:
                raise ValueError("negative power only for unit monomials")
            ((e, k),) = self._c.items()
            return Laurent({e * n: 1 if k == 1 or n % 2 == 0 else -1})
        result = Laurent.one()
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def shift(self, exponent: int) -> "Laurent":
        """Multiply by A^exponent."""
        out = Laurent.__new__(Laurent)
        out._c = {e + exponent: k for e, k in self._c.items()}
        return out

    def mirror(self) -> "Laurent":
        """Substitute A -> A^-1 (the bracket of the mirror diagram)."""
        out = Laurent.__new__(Laurent)
        out._c = {-e: k for e, k in self._c.items()}
        return out

    def is_palindromic(self) -> bool:
        return self._c == {-e: k for e, k in self._c.items()}

    def span(self) -> int:
        """Difference between highest and lowest exponent (0 for constants and zero)."""
        if not self._c:
            return 0
        return max(self._c) - min(self._c)

    def evaluate_unit(self, a: int) -> int:
        """Evaluate at A = a for a in {1, -1}."""
        if a not in (1, -1):
            raise ValueError("exact evaluation only at A = +/-1")
        if a == 1:
            return sum(self._c.values())
        return sum(k if e % 2 == 0 else -k for e, k in self._c.items())

    def __str__(self) -> str:
        if not self._c:
            return "0"
        parts = []
        for e in sorted(self._c):
            k = self._c[e]
            if e == 0:
                term = str(abs(k))
            else:
                mag = "" if abs(k) == 1 else f"{abs(k)}*"
                term = f"{mag}A^{e}" if e != 1 else f"{mag}A"
            if not parts:
                parts.append(term if k > 0 else f"-{term}")
            else:
                parts.append(f"+ {term}" if k > 0 else f"- {term}")
        return " ".join(parts)

    def __repr__(self) -> str:
        return f"Laurent({self._c!r})"


def delta() -> Laurent:
    """The Kauffman bracket loop value -A^2 - A^-2."""
    return Laurent({2: -1, -2: -1})
