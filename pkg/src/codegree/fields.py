"""Tiny table-driven finite fields GF(q) for the group constructors."""
from __future__ import annotations

from functools import lru_cache

# Irreducible polynomials, low coefficient first (monic, leading term implied).
_MODULI = {
    4: (2, (1, 1)),        # x^2 + x + 1
    8: (2, (1, 1, 0)),     # x^3 + x + 1
    9: (3, (1, 0)),        # x^2 + 1
    16: (2, (1, 1, 0, 0)),  # x^4 + x + 1
}


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


class GF:
    """Elements are integers 0..q-1 read as base-p coefficient vectors."""

    def __init__(self, q: int):
        if is_prime(q):
            p, k, mod = q, 1, ()
        elif q in _MODULI:
            p, mod = _MODULI[q]
            k = len(mod)
        else:
            raise ValueError(f"unsupported field order {q}")
        self.q, self.p, self.k = q, p, k
        digits = [self._digits(a) for a in range(q)]
        self.add = [[self._pack([(x + y) % p for x, y in zip(digits[a], digits[b])])
                     for b in range(q)] for a in range(q)]
        self.mul = [[self._pack(self._polymul(digits[a], digits[b], mod))
                     for b in range(q)] for a in range(q)]
        self.neg = [self._pack([(-x) % p for x in digits[a]]) for a in range(q)]
        self.inv = [0] * q
        for a in range(1, q):
            self.inv[a] = next(b for b in range(1, q) if self.mul[a][b] == 1)
        # additive basis 1, w, w^2, ...
        self.basis = [p ** i for i in range(k)]

    def _digits(self, a: int) -> list[int]:
        out = []
        for _ in range(self.k):
            out.append(a % self.p)
            a //= self.p
        return out

    def _pack(self, digits: list[int]) -> int:
        return sum(d * self.p ** i for i, d in enumerate(digits))

    def _polymul(self, a: list[int], b: list[int], mod: tuple[int, ...]) -> list[int]:
        p, k = self.p, self.k
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(a):
            for j, y in enumerate(b):
                prod[i + j] = (prod[i + j] + x * y) % p
        # reduce with x^k = -(mod[0] + mod[1] x + ...)
        for deg in range(2 * k - 2, k - 1, -1):
            c = prod[deg]
            if c:
                prod[deg] = 0
                for i, m in enumerate(mod):
                    prod[deg - k + i] = (prod[deg - k + i] - c * m) % p
        return prod[:k]

    def frob(self, a: int) -> int:
        """a -> a^p."""
        out = 1
        for _ in range(self.p):
            out = self.mul[out][a]
        return out


@lru_cache(maxsize=None)
def field(q: int) -> GF:
    return GF(q)
