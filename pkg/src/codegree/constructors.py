"""Group specifications: a small text grammar and the builders behind it.

Grammar (whitespace is ignored, except that a ``file:`` path runs to the
next whitespace)::

    spec  := atom ("x" atom)*             direct product, left-associative
    atom  := C<n> | D<m> | A<n> | S<n> | PSL2(<q>) | PSL3(3) | SL2(<q>)
           | C<n>:[a1,a2,...] | C<q>:C<p> | Hol(C<n>) | Heis(<p>) | A4:C4
           | file:<path>

``D<m>`` is the dihedral group of order m.  ``C<q>:C<p>`` is the
nonabelian group of order pq, using the least multiplier of order p mod q.
"""
from __future__ import annotations

import math
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Union

from .errors import FileError, MissingData, ParseError, RangeError
from .fields import field, is_prime
from .perm import DEFAULT_CAP, Perm, PermGroup, direct_product, enumerate_group, read_generator_file

FIELD_ORDERS = (2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19)

# Named generator files and the group order they must produce.
KNOWN_FILE_ORDERS = {"u3_3.gens": 6048, "u4_2.gens": 25920, "l2_17.gens": 2448}


@dataclass(frozen=True)
class Cyclic:
    n: int

    def __str__(self) -> str:
        return f"C{self.n}"


@dataclass(frozen=True)
class Dihedral:
    m: int

    def __str__(self) -> str:
        return f"D{self.m}"


@dataclass(frozen=True)
class Sym:
    n: int

    def __str__(self) -> str:
        return f"S{self.n}"


@dataclass(frozen=True)
class Alt:
    n: int

    def __str__(self) -> str:
        return f"A{self.n}"


@dataclass(frozen=True)
class PSL2:
    q: int

    def __str__(self) -> str:
        return f"PSL2({self.q})"


@dataclass(frozen=True)
class PSL3_3:
    def __str__(self) -> str:
        return "PSL3(3)"


@dataclass(frozen=True)
class SL2:
    q: int

    def __str__(self) -> str:
        return f"SL2({self.q})"


@dataclass(frozen=True)
class SemidirectCyclic:
    n: int
    multipliers: tuple[int, ...]

    def __str__(self) -> str:
        return f"C{self.n}:[{','.join(map(str, self.multipliers))}]"


@dataclass(frozen=True)
class Hol:
    n: int

    def __str__(self) -> str:
        return f"Hol(C{self.n})"


@dataclass(frozen=True)
class Heisenberg:
    p: int

    def __str__(self) -> str:
        return f"Heis({self.p})"


@dataclass(frozen=True)
class PullbackS4C4:
    def __str__(self) -> str:
        return "A4:C4"


@dataclass(frozen=True)
class FromFile:
    path: str

    def __str__(self) -> str:
        return f"file:{self.path}"


@dataclass(frozen=True)
class Product:
    left: "Node"
    right: "Node"

    def __str__(self) -> str:
        return f"{self.left} x {self.right}"


Node = Union[Cyclic, Dihedral, Sym, Alt, PSL2, PSL3_3, SL2, SemidirectCyclic, Hol,
             Heisenberg, PullbackS4C4, FromFile, Product]


@dataclass(frozen=True)
class GroupSpec:
    source: str
    tree: Node

    def __str__(self) -> str:
        return str(self.tree)


def frobenius_multiplier(q: int, p: int) -> int:
    """Least a > 1 of multiplicative order p modulo q."""
    for a in range(2, q):
        if pow(a, p, q) == 1:
            return a
    raise RangeError(f"no element of order {p} mod {q}")


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, msg: str) -> ParseError:
        return ParseError(msg, self.pos)

    def skip_ws(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip_ws()
        return self.text.startswith(s, self.pos)

    def expect(self, s: str) -> None:
        if not self.peek(s):
            raise self.error(f"expected {s!r}")
        self.pos += len(s)

    def integer(self) -> int:
        self.skip_ws()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            raise self.error("expected integer")
        return int(self.text[start:self.pos])

    def parse(self) -> Node:
        node = self.atom()
        while self.peek("x"):
            self.pos += 1
            node = Product(node, self.atom())
        self.skip_ws()
        if self.pos != len(self.text):
            raise self.error("unexpected trailing text")
        return node

    def atom(self) -> Node:
        self.skip_ws()
        start = self.pos
        if self.peek("file:"):
            self.pos += len("file:")
            self.skip_ws()
            begin = self.pos
            while self.pos < len(self.text) and not self.text[self.pos].isspace():
                self.pos += 1
            if begin == self.pos:
                raise self.error("empty file path")
            return FromFile(self.text[begin:self.pos])
        for word, make in (("PSL2(", PSL2), ("SL2(", SL2), ("Heis(", Heisenberg)):
            if self.peek(word):
                self.pos += len(word)
                val = self.integer()
                self.expect(")")
                return _checked(make(val), start)
        if self.peek("PSL3("):
            self.pos += len("PSL3(")
            val = self.integer()
            self.expect(")")
            if val != 3:
                raise RangeError(f"PSL3 only supports q=3, got {val}")
            return PSL3_3()
        if self.peek("Hol("):
            self.pos += len("Hol(")
            self.expect("C")
            val = self.integer()
            self.expect(")")
            return _checked(Hol(val), start)
        for letter, make in (("D", Dihedral), ("S", Sym)):
            if self.peek(letter):
                self.pos += 1
                return _checked(make(self.integer()), start)
        if self.peek("A"):
            self.pos += 1
            n = self.integer()
            if self.peek(":"):
                if n != 4:
                    raise self.error("only A4:C4 is supported")
                self.pos += 1
                self.expect("C")
                if self.integer() != 4:
                    raise self.error("only A4:C4 is supported")
                return PullbackS4C4()
            return _checked(Alt(n), start)
        if self.peek("C"):
            self.pos += 1
            n = self.integer()
            if not self.peek(":"):
                return _checked(Cyclic(n), start)
            self.pos += 1
            if self.peek("["):
                self.pos += 1
                mults = [self.integer()]
                while self.peek(","):
                    self.pos += 1
                    mults.append(self.integer())
                self.expect("]")
                return _checked(SemidirectCyclic(n, tuple(sorted(set(mults)))), start)
            self.expect("C")
            p = self.integer()
            if not (is_prime(n) and is_prime(p)):
                raise RangeError(f"C{n}:C{p} needs two primes")
            if (n - 1) % p:
                raise RangeError(f"{p} does not divide {n}-1")
            return SemidirectCyclic(n, (frobenius_multiplier(n, p),))
        raise self.error("unknown group atom")


def _checked(node: Node, pos: int) -> Node:
    if isinstance(node, (Cyclic, Sym, Alt, Hol)) and node.n < 1:
        raise RangeError(f"{node}: parameter must be positive")
    if isinstance(node, Dihedral) and (node.m < 2 or node.m % 2):
        raise RangeError(f"D{node.m}: dihedral order must be even and >= 2")
    if isinstance(node, (PSL2, SL2)) and node.q not in FIELD_ORDERS:
        raise RangeError(f"{node}: q must be a prime power <= 19")
    if isinstance(node, Heisenberg) and not (is_prime(node.p) and node.p > 2):
        raise RangeError(f"Heis({node.p}): p must be an odd prime")
    if isinstance(node, SemidirectCyclic):
        if node.n < 2:
            raise RangeError("semidirect product needs n >= 2")
        for a in node.multipliers:
            if not 1 <= a < node.n or math.gcd(a, node.n) != 1:
                raise RangeError(f"multiplier {a} is not a unit mod {node.n}")
    return node


def parse_group_spec(text: str) -> GroupSpec:
    if not text or not text.strip():
        raise ParseError("empty group spec", 0)
    return GroupSpec(text, _Parser(text).parse())


def data_dir() -> Path:
    env = os.environ.get("CODEGREE_DATA_DIR")
    return Path(env) if env else Path(__file__).parent / "data"


def resolve_data_file(path: str) -> Path:
    given = Path(path)
    if given.is_file():
        return given
    fallback = data_dir() / path
    if fallback.is_file():
        return fallback
    raise MissingData(f"generator file not found: {path}")


# -- builders --------------------------------------------------------------

def _cycle(n: int) -> Perm:
    return Perm(tuple((i + 1) % n for i in range(n)))


def _affine(n: int, mults: tuple[int, ...]) -> list[Perm]:
    gens = [_cycle(n)]
    gens += [Perm(tuple(a * x % n for x in range(n))) for a in mults]
    return gens


def _sym(n: int) -> list[Perm]:
    if n <= 1:
        return [Perm.identity(max(n, 1))]
    if n == 2:
        return [_cycle(2)]
    return [Perm.from_cycles([(0, 1)], n), _cycle(n)]


def _alt(n: int) -> list[Perm]:
    if n <= 2:
        return [Perm.identity(n)]
    if n == 3:
        return [_cycle(3)]
    long = tuple(range(n)) if n % 2 else tuple(range(1, n))
    return [Perm.from_cycles([(0, 1, 2)], n), Perm.from_cycles([long], n)]


def _psl2(q: int) -> list[Perm]:
    F = field(q)
    inf = q

    def act(f) -> Perm:
        return Perm(tuple(f(x) for x in range(q + 1)))

    gens = [act(lambda x, t=t: inf if x == inf else F.add[x][t]) for t in F.basis]
    gens.append(act(lambda x: 0 if x == inf else inf if x == 0 else F.neg[F.inv[x]]))
    return gens


def _sl2(q: int) -> list[Perm]:
    F = field(q)
    vecs = [(a, b) for a in range(q) for b in range(q) if (a, b) != (0, 0)]
    pos = {v: i for i, v in enumerate(vecs)}
    gens = []
    for t in F.basis:
        gens.append(Perm(tuple(pos[(F.add[a][F.mul[t][b]], b)] for a, b in vecs)))
        gens.append(Perm(tuple(pos[(a, F.add[F.mul[t][a]][b])] for a, b in vecs)))
    return gens


def _psl3_3() -> list[Perm]:
    q = 3
    points = []
    for v in ((a, b, c) for a in range(q) for b in range(q) for c in range(q)):
        lead = next((x for x in v if x), 0)
        if lead == 1:
            points.append(v)
    pos = {v: i for i, v in enumerate(points)}

    def normalize(v):
        lead = next(x for x in v if x)
        inv = pow(lead, -1, q)
        return tuple(x * inv % q for x in v)

    gens = []
    for i in range(3):
        for j in range(3):
            if i == j:
                continue
            images = []
            for v in points:
                w = list(v)
                w[i] = (w[i] + w[j]) % q
                images.append(pos[normalize(w)])
            gens.append(Perm(tuple(images)))
    return gens


def _heisenberg(p: int) -> list[Perm]:
    def idx(a, b, c):
        return (a % p) * p * p + (b % p) * p + c % p

    elems = [(a, b, c) for a in range(p) for b in range(p) for c in range(p)]
    # right multiplication by (1,0,0) and (0,1,0); (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab')
    x = Perm(tuple(idx(a + 1, b, c) for a, b, c in elems))
    y = Perm(tuple(idx(a, b + 1, c + a) for a, b, c in elems))
    return [x, y]


def _a4_c4() -> list[Perm]:
    a = Perm.from_cycles([(0, 1, 2)], 8)
    b = Perm.from_cycles([(0, 1), (2, 3)], 8)
    t = Perm.from_cycles([(0, 1), (4, 5, 6, 7)], 8)
    return [a, b, t]


def _from_file(path: str, cap: int) -> PermGroup:
    resolved = resolve_data_file(path)
    G = enumerate_group(read_generator_file(resolved), cap)
    expected = KNOWN_FILE_ORDERS.get(resolved.name)
    if expected is not None and G.order != expected:
        raise FileError(f"{resolved}: expected order {expected}, got {G.order}")
    return G


def build_node(node: Node, cap: int = DEFAULT_CAP) -> PermGroup:
    if isinstance(node, Product):
        return direct_product(build_node(node.left, cap), build_node(node.right, cap), cap)
    if isinstance(node, FromFile):
        return _from_file(node.path, cap)
    return enumerate_group(_generators(node), cap)


def _generators(node: Node) -> list[Perm]:
    if isinstance(node, Cyclic):
        return [_cycle(node.n)] if node.n > 1 else [Perm.identity(1)]
    if isinstance(node, Dihedral):
        m = node.m
        if m == 2:
            return [_cycle(2)]
        if m == 4:
            return [Perm.from_cycles([(0, 1)], 4), Perm.from_cycles([(2, 3)], 4)]
        return _affine(m // 2, (m // 2 - 1,))
    if isinstance(node, Sym):
        return _sym(node.n)
    if isinstance(node, Alt):
        return _alt(node.n)
    if isinstance(node, PSL2):
        return _psl2(node.q)
    if isinstance(node, SL2):
        return _sl2(node.q)
    if isinstance(node, PSL3_3):
        return _psl3_3()
    if isinstance(node, SemidirectCyclic):
        return _affine(node.n, node.multipliers)
    if isinstance(node, Hol):
        n = node.n
        if n == 1:
            return [Perm.identity(1)]
        units = tuple(a for a in range(2, n) if math.gcd(a, n) == 1)
        return _affine(n, units)
    if isinstance(node, Heisenberg):
        return _heisenberg(node.p)
    if isinstance(node, PullbackS4C4):
        return _a4_c4()
    raise TypeError(f"unknown node {node!r}")


def build(spec: GroupSpec | str, cap: int = DEFAULT_CAP) -> PermGroup:
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    return build_node(spec.tree, cap)


# -- curated lists -----------------------------------------------------------

_NONSOLVABLE = [
    "A5",
    "S5", "A5 x C2", "SL2(5)",
    "PSL2(7)",
    "A5 x C3",
    "A5 x C4", "A5 x C2 x C2", "S5 x C2", "SL2(5) x C2",
    "A5 x C5",
    "SL2(7)", "PSL2(7) x C2",
    "A6", "A5 x S3", "A5 x C6", "S5 x C3", "SL2(5) x C3",
    "PSL2(8)",
    "PSL2(11)",
    "S6", "A6 x C2", "SL2(9)",
]


def _spec_order(node: Node) -> int:
    if isinstance(node, Product):
        return _spec_order(node.left) * _spec_order(node.right)
    if isinstance(node, Cyclic):
        return node.n
    if isinstance(node, Sym):
        return math.factorial(node.n)
    if isinstance(node, Alt):
        return max(1, math.factorial(node.n) // 2)
    if isinstance(node, PSL2):
        q = node.q
        return q * (q * q - 1) // math.gcd(2, q - 1)
    if isinstance(node, SL2):
        return node.q * (node.q ** 2 - 1)
    raise TypeError(node)


def nonsolvable_catalog(max_order: int) -> list[tuple[str, GroupSpec]]:
    """Curated nonsolvable groups of order <= max_order.

    Not exhaustive: it lists the groups needed to probe the lower bound on
    codegree sums, not every nonsolvable group of each order.
    """
    out = []
    for text in _NONSOLVABLE:
        spec = parse_group_spec(text)
        if _spec_order(spec.tree) <= max_order:
            out.append((str(spec), spec))
    out.sort(key=lambda item: (_spec_order(item[1].tree), item[0]))
    return out


def order32_candidates() -> list[GroupSpec]:
    texts = ["C8:[3,5]", "C8:[3] x C2", "C8:[5] x C2", "C8:[7] x C2", "C8 x C2 x C2"]
    return [parse_group_spec(t) for t in texts]


def order48_candidates() -> list[GroupSpec]:
    texts = ["A4:C4", "A4 x C4", "A4 x C2 x C2", "SL2(3) x C2", "S4 x C2"]
    return [parse_group_spec(t) for t in texts]
