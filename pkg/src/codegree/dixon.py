"""Exact irreducible character tables by the Dixon-Schneider method.

The class algebra structure constants are reduced modulo a prime p with
p = 1 (mod e) and p > 2*sqrt(|G|).  Common eigenvectors of the class
matrices give the central characters; degrees and values follow, and each
value is lifted to an exact multiset of e-th roots of unity.
"""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property

import numpy as np

from .errors import ClassLimitExceeded, NotNormal, NotSubgroup, SplitFailure
from .fields import is_prime
from .modp import eigenspaces, matmul_mod
from .perm import ClassData, PermGroup, class_matrix

DEFAULT_CLASS_LIMIT = 80


@dataclass(frozen=True)
class PrimeFieldCtx:
    p: int
    lam: int
    e: int

    def restrict(self, e_sub: int) -> "PrimeFieldCtx":
        """Context for a subgroup whose exponent divides ours."""
        if self.e % e_sub:
            raise ValueError(f"exponent {e_sub} does not divide {self.e}")
        return PrimeFieldCtx(self.p, pow(self.lam, self.e // e_sub, self.p), e_sub)


def _prime_factors(n: int) -> list[int]:
    out, f = [], 2
    while f * f <= n:
        if n % f == 0:
            out.append(f)
            while n % f == 0:
                n //= f
        f += 1
    if n > 1:
        out.append(n)
    return out


def choose_prime(G: PermGroup, classes: ClassData | None = None) -> PrimeFieldCtx:
    """Least prime p = 1 (mod e) with p^2 > 4|G|, and the least primitive e-th root."""
    classes = classes or G.classes
    e = classes.exponent
    p = e + 1
    while not (is_prime(p) and p * p > 4 * G.order):
        p += e
    factors = _prime_factors(e)
    lam = next(g for g in range(1, p)
               if pow(g, e, p) == 1 and all(pow(g, e // f, p) != 1 for f in factors))
    return PrimeFieldCtx(p, lam, e)


@dataclass(frozen=True)
class CycloValue:
    """A sum of e-th roots of unity, stored as (exponent, multiplicity) pairs."""

    e: int
    terms: tuple[tuple[int, int], ...]

    @property
    def mults(self) -> tuple[int, ...]:
        out = [0] * self.e
        for k, m in self.terms:
            out[k] = m
        return tuple(out)

    @property
    def degree(self) -> int:
        return sum(m for _, m in self.terms)

    def is_degree(self) -> bool:
        """True when every root is 1, i.e. the value equals the degree."""
        return all(k == 0 for k, _ in self.terms)

    def to_complex(self) -> complex:
        return sum(m * complex(math.cos(2 * math.pi * k / self.e), math.sin(2 * math.pi * k / self.e))
                   for k, m in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return "+".join(f"{m}z{k}" if k else f"{m}" for k, m in self.terms)


@dataclass(frozen=True)
class CharRow:
    degree: int
    kernel_classes: frozenset[int]
    kernel_order: int
    modp: tuple[int, ...]


@dataclass(eq=False)
class CharTable:
    group: PermGroup
    classes: ClassData
    ctx: PrimeFieldCtx
    chars: tuple[CharRow, ...]
    _columns: dict[int, list[CycloValue]] = field(default_factory=dict, repr=False)

    def __len__(self) -> int:
        return len(self.chars)

    @property
    def order(self) -> int:
        return self.group.order

    @property
    def degrees(self) -> list[int]:
        return [c.degree for c in self.chars]

    @cached_property
    def modp_matrix(self) -> np.ndarray:
        return np.array([c.modp for c in self.chars], dtype=np.int64).reshape(len(self.chars), -1)

    def column(self, c: int) -> list[CycloValue]:
        """Exact values of every character on class c."""
        if c not in self._columns:
            self._columns[c] = _lift_column(self, c)
        return self._columns[c]

    def value(self, row: int, c: int) -> CycloValue:
        return self.column(c)[row]

    def values(self, row: int) -> list[CycloValue]:
        return [self.column(c)[row] for c in range(self.classes.count)]


def _lift_column(table: CharTable, c: int) -> list[CycloValue]:
    p, e = table.ctx.p, table.ctx.e
    cls = table.classes
    o = int(cls.element_orders[c])
    X = table.modp_matrix[:, cls.power_maps[:o, c]]
    mu = pow(table.ctx.lam, e // o, p)
    mu_inv = pow(mu, -1, p)
    js = np.arange(o)
    # F[j, t] = mu^(-j t)
    powers = np.array([pow(mu_inv, k, p) for k in range(o)], dtype=np.int64)
    F = powers[np.outer(js, js) % o]
    M = X @ F % p * pow(o, -1, p) % p
    out = []
    for row, ch in enumerate(table.chars):
        m = M[row]
        if m.max() > ch.degree or int(m.sum()) != ch.degree:
            raise SplitFailure(f"value lift failed for row {row}, class {c}")
        out.append(CycloValue(e, tuple((int(t) * (e // o), int(m[t])) for t in np.flatnonzero(m))))
    return out


def _central_characters(G: PermGroup, cls: ClassData, p: int) -> list[np.ndarray]:
    """Common eigenvectors of the class matrices, scaled to 1 at the identity.

    Each subspace is kept as a basis V with V[piv] = identity, so the
    restriction of a class matrix A is simply (A V)[piv].
    """
    r = cls.count
    if r == 1:
        return [np.ones(1, dtype=np.int64)]
    done: list[np.ndarray] = []
    spaces = [(np.eye(r, dtype=np.int64), list(range(r)))]
    for i in range(1, r):
        if not spaces:
            break
        A = class_matrix(G, cls, i) % p
        nxt = []
        for V, piv in spaces:
            R = matmul_mod(A[piv], V, p)
            for _, W, wpiv in eigenspaces(R, p):
                U = matmul_mod(V, W, p)
                if U.shape[1] == 1:
                    done.append(U[:, 0])
                else:
                    nxt.append((U, [piv[k] for k in wpiv]))
        spaces = nxt
    if spaces or len(done) != r:
        raise SplitFailure("class matrices did not split the space into lines")
    out = []
    for v in done:
        if not v[0]:
            raise SplitFailure("central character with zero identity component")
        out.append(v * pow(int(v[0]), -1, p) % p)
    return out


def character_table(G: PermGroup, ctx: PrimeFieldCtx | None = None,
                    class_limit: int | None = DEFAULT_CLASS_LIMIT) -> CharTable:
    cls = G.classes
    r = cls.count
    if class_limit is not None and r > class_limit:
        raise ClassLimitExceeded(f"{r} classes exceeds limit {class_limit}")
    ctx = ctx or choose_prime(G, cls)
    p, e = ctx.p, ctx.e
    if e % cls.exponent:
        raise ValueError("prime field context does not fit the group exponent")
    if e != cls.exponent:
        ctx = ctx.restrict(cls.exponent)
        e = ctx.e
    N = G.order
    sizes = cls.sizes.astype(np.int64)
    inv_sizes = np.array([pow(int(s), -1, p) for s in sizes], dtype=np.int64)
    inv_cls = cls.inverse_class
    max_deg = math.isqrt(N)
    rows = []
    for v in _central_characters(G, cls, p):
        norm = int((v * v[inv_cls] % p * inv_sizes % p).sum() % p)
        target = N * pow(norm, -1, p) % p
        d = next((d for d in range(1, max_deg + 1) if d * d % p == target and N % d == 0), None)
        if d is None:
            raise SplitFailure("no admissible degree for a central character")
        vals = v * d % p * inv_sizes % p
        rows.append((d, tuple(int(x) for x in vals)))
    rows.sort()
    if sum(d * d for d, _ in rows) != N:
        raise SplitFailure("degree squares do not sum to the group order")
    vals = np.array([v for _, v in rows], dtype=np.int64)
    # multiplicity of the eigenvalue 1 at each class:
    # m0 = (1/o) sum_{j<o} chi(g^j), through a count of classes hit by powers
    counts = np.zeros((r, r), dtype=np.int64)
    for c in range(r):
        o = int(cls.element_orders[c])
        counts[:, c] = np.bincount(cls.power_maps[:o, c], minlength=r)
    inv_orders = np.array([pow(int(o), -1, p) for o in cls.element_orders], dtype=np.int64)
    m0 = matmul_mod(vals, counts % p, p) * inv_orders % p
    kernel_hits = m0 == np.array([d for d, _ in rows])[:, None]
    chars = []
    for (d, v), hits in zip(rows, kernel_hits):
        ker = frozenset(int(c) for c in np.flatnonzero(hits))
        chars.append(CharRow(d, ker, int(sizes[list(ker)].sum()), v))
    return CharTable(G, cls, ctx, tuple(chars))


def class_fusion(N: PermGroup, table_N: CharTable, table_G: CharTable) -> list[int]:
    """G-class of each N-class."""
    G = table_G.group
    if N.degree != G.degree or any(g not in G for g in N.generators):
        raise NotSubgroup("subgroup elements are not all in the group")
    return [int(table_G.classes.class_of[G.index_of(rep)]) for rep in table_N.classes.reps]


def is_normal_in(G: PermGroup, N: PermGroup) -> bool:
    return all(g.inverse() * n * g in N for n in N.generators for g in G.generators)


def subgroup_table(table_G: CharTable, N: PermGroup,
                   class_limit: int | None = DEFAULT_CLASS_LIMIT) -> CharTable:
    """Table of N over the same prime field as table_G."""
    return character_table(N, table_G.ctx.restrict(N.classes.exponent), class_limit)


def restrict_and_decompose(table_G: CharTable, table_N: CharTable, row: int) -> list[tuple[int, int]]:
    """Constituents (N-row, multiplicity) of the restriction of a G-character."""
    G, N = table_G.group, table_N.group
    if table_N.ctx.p != table_G.ctx.p:
        raise ValueError("tables must share one prime")
    fusion = class_fusion(N, table_N, table_G)
    if not is_normal_in(G, N):
        raise NotNormal("subgroup is not normal")
    p = table_G.ctx.p
    chi = table_G.modp_matrix[row][fusion]
    phis = table_N.modp_matrix[:, table_N.classes.inverse_class]
    sizes = table_N.classes.sizes.astype(np.int64)
    mults = phis @ (chi * sizes % p) % p * pow(N.order, -1, p) % p
    out = [(i, int(m)) for i, m in enumerate(mults) if m]
    deg = table_G.chars[row].degree
    if any(m > deg for _, m in out) or sum(m * table_N.chars[i].degree for i, m in out) != deg:
        raise SplitFailure("restriction does not decompose consistently")
    return out
