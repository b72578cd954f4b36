"""Codegree invariants: cod, S_c, fcod, acod, quotient sums and closed forms."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .constructors import GroupSpec, build, parse_group_spec
from .dixon import DEFAULT_CLASS_LIMIT, CharTable, character_table
from .errors import NonIntegral, NotNormal, RangeError
from .fields import is_prime
from .perm import DEFAULT_CAP, PermGroup


def cod(table: CharTable, row: int) -> int:
    """|G : ker chi| / chi(1)."""
    ch = table.chars[row]
    index, rem = divmod(table.order, ch.kernel_order)
    value, rem2 = divmod(index, ch.degree)
    if rem or rem2:
        raise NonIntegral(f"row {row}: |G:ker|={table.order}/{ch.kernel_order}, degree {ch.degree}")
    return value


@dataclass(frozen=True)
class CodegreeEntry:
    degree: int
    kernel_order: int
    cod: int


@dataclass(frozen=True)
class CodegreeReport:
    spec: str
    order: int
    entries: tuple[CodegreeEntry, ...]
    sc: int
    fcod: Fraction
    acod: Fraction

    @property
    def cods(self) -> list[int]:
        return [e.cod for e in self.entries]

    def to_dict(self) -> dict:
        return {
            "group": self.spec,
            "order": self.order,
            "characters": [
                {"degree": e.degree, "kernel_order": e.kernel_order, "cod": e.cod}
                for e in self.entries
            ],
            "sc": self.sc,
            "fcod": fraction_dict(self.fcod),
            "acod": fraction_dict(self.acod),
        }


def fraction_dict(x: Fraction) -> dict:
    return {"num": x.numerator, "den": x.denominator}


def report_from_table(table: CharTable, spec: str = "") -> CodegreeReport:
    entries = tuple(
        CodegreeEntry(ch.degree, ch.kernel_order, cod(table, i))
        for i, ch in enumerate(table.chars)
    )
    sc = sum(e.cod for e in entries)
    return CodegreeReport(spec, table.order, entries, sc,
                          Fraction(sc, table.order), Fraction(sc, len(entries)))


def codegree_report(group: PermGroup | GroupSpec | str, cap: int = DEFAULT_CAP,
                    class_limit: int | None = DEFAULT_CLASS_LIMIT) -> CodegreeReport:
    if isinstance(group, PermGroup):
        return report_from_table(character_table(group, class_limit=class_limit))
    spec = parse_group_spec(group) if isinstance(group, str) else group
    table = character_table(build(spec, cap), class_limit=class_limit)
    return report_from_table(table, str(spec))


def sc(table: CharTable) -> int:
    return sum(cod(table, i) for i in range(len(table)))


def normal_subgroup_lattice(table: CharTable) -> list[frozenset[int]]:
    """Every normal subgroup as a set of classes: intersections of kernels."""
    everything = frozenset(range(table.classes.count))
    found = {everything}
    frontier = [ch.kernel_classes for ch in table.chars]
    while frontier:
        fresh = []
        for k in frontier:
            if k not in found:
                found.add(k)
                fresh.append(k)
        frontier = [a & b for a in fresh for b in found if (a & b) not in found]
    sizes = table.classes.sizes
    return sorted(found, key=lambda s: (int(sum(sizes[c] for c in s)), sorted(s)))


def subgroup_order(table: CharTable, classes: frozenset[int]) -> int:
    return int(sum(table.classes.sizes[c] for c in classes))


def sc_quotient(table: CharTable, normal: frozenset[int] | set[int]) -> int:
    """S_c(G/N) by summing codegrees of the characters whose kernel contains N."""
    normal = frozenset(normal)
    if normal not in set(normal_subgroup_lattice(table)):
        raise NotNormal("class set is not a normal subgroup")
    return sum(cod(table, i) for i, ch in enumerate(table.chars)
               if normal <= ch.kernel_classes)


def _totient(n: int) -> int:
    out, m, f = n, n, 2
    while f * f <= m:
        if m % f == 0:
            while m % f == 0:
                m //= f
            out -= out // f
        f += 1
    if m > 1:
        out -= out // m
    return out


def sc_cyclic(n: int) -> int:
    """Sum over d | n of d * phi(d): phi(d) characters of order d, codegree d each."""
    if n < 1:
        raise RangeError("n must be positive")
    return sum(d * _totient(d) for d in range(1, n + 1) if n % d == 0)


def sc_dihedral_2n(n: int) -> int:
    """Codegree sum of the dihedral group of order 2^n."""
    if n < 3:
        raise RangeError("dihedral closed form needs n >= 3")
    num = 4 * (2 ** (2 * n - 4) - 1)
    if num % 3:
        raise NonIntegral("dihedral closed form is not integral")
    return 7 + num // 3


def _check_frobenius(p: int, q: int) -> None:
    if not (is_prime(p) and is_prime(q)) or p == q:
        raise RangeError(f"({p}, {q}) must be distinct primes")
    if (q - 1) % p:
        raise RangeError(f"{p} does not divide {q} - 1")


def sc_frobenius_pq(p: int, q: int) -> int:
    """S_c of the nonabelian group C_q : C_p."""
    _check_frobenius(p, q)
    return 1 + (p - 1) * p + (q - 1) * q // p


def fcod_frobenius_is_one(p: int, q: int) -> bool:
    by_closed_form = sc_frobenius_pq(p, q) == p * q
    by_prime_shape = q == p * p - p + 1
    assert by_closed_form == by_prime_shape
    return by_prime_shape


@dataclass(frozen=True)
class ProductLaw:
    sc_a: int
    sc_b: int
    sc_product: int
    coprime: bool

    @property
    def bound_holds(self) -> bool:
        return self.sc_product <= self.sc_a * self.sc_b

    @property
    def equality(self) -> bool:
        return self.sc_product == self.sc_a * self.sc_b


def direct_product_law(a: str, b: str, cap: int = DEFAULT_CAP,
                       class_limit: int | None = DEFAULT_CLASS_LIMIT) -> ProductLaw:
    ra = codegree_report(a, cap, class_limit)
    rb = codegree_report(b, cap, class_limit)
    rab = codegree_report(f"{a} x {b}", cap, class_limit)
    return ProductLaw(ra.sc, rb.sc, rab.sc, math.gcd(ra.order, rb.order) == 1)
