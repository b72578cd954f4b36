"""Permutation groups held as complete element lists.

Elements are stored as rows of an integer array.  Products follow the
left-to-right convention: ``(a * b)[i] == b[a[i]]`` (apply ``a`` first).

Every group picks a *base*: a short list of points whose images already
tell all elements apart.  Vectorized lookups only need those columns,
which keeps class and structure-constant computations cheap even for
groups acting on many points.
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import cached_property, reduce
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np
from scipy.sparse import coo_matrix
from scipy.sparse.csgraph import connected_components

from .errors import CapExceeded, EmptyInput, FileError

DEFAULT_CAP = 100_000

# Mixed-radix base keys must stay well inside int64.
_KEY_LIMIT = 1 << 62


@dataclass(frozen=True, slots=True)
class Perm:
    images: tuple[int, ...]

    def __post_init__(self) -> None:
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @classmethod
    def identity(cls, degree: int) -> "Perm":
        return cls(tuple(range(degree)))

    @classmethod
    def from_cycles(cls, cycles: Iterable[Sequence[int]], degree: int) -> "Perm":
        images = list(range(degree))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        return cls(tuple(images))

    @classmethod
    def parse(cls, text: str, degree: int | None = None) -> "Perm":
        """Parse 1-based disjoint-cycle notation such as ``(1,2,3)(4,5)``."""
        text = "".join(text.split())
        if not re.fullmatch(r"(\(\d*(,\d+)*\))+", text):
            raise ValueError(f"bad cycle notation: {text!r}")
        cycles = []
        for body in re.findall(r"\(([^)]*)\)", text):
            if body:
                pts = [int(s) - 1 for s in body.split(",")]
                if min(pts) < 0 or len(set(pts)) != len(pts):
                    raise ValueError(f"bad cycle: ({body})")
                cycles.append(pts)
        seen = [p for c in cycles for p in c]
        if len(seen) != len(set(seen)):
            raise ValueError(f"cycles are not disjoint: {text!r}")
        top = max(seen, default=-1) + 1
        if degree is None:
            degree = top
        elif top > degree:
            raise ValueError(f"point {top} exceeds degree {degree}")
        return cls.from_cycles(cycles, degree)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __mul__(self, other: "Perm") -> "Perm":
        if other.degree != self.degree:
            raise ValueError("degree mismatch")
        img = other.images
        return Perm(tuple(img[i] for i in self.images))

    def __call__(self, point: int) -> int:
        return self.images[point]

    def inverse(self) -> "Perm":
        inv = [0] * self.degree
        for i, j in enumerate(self.images):
            inv[j] = i
        return Perm(tuple(inv))

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        out = Perm.identity(self.degree)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_identity(self) -> bool:
        return all(i == j for i, j in enumerate(self.images))

    def cycles(self) -> list[tuple[int, ...]]:
        seen = [False] * self.degree
        out = []
        for start in range(self.degree):
            if seen[start]:
                continue
            cyc = []
            i = start
            while not seen[i]:
                seen[i] = True
                cyc.append(i)
                i = self.images[i]
            out.append(tuple(cyc))
        return out

    def order(self) -> int:
        return reduce(math.lcm, (len(c) for c in self.cycles()), 1)

    def __str__(self) -> str:
        parts = [
            "(" + ",".join(str(i + 1) for i in c) + ")"
            for c in self.cycles()
            if len(c) > 1
        ]
        return "".join(parts) or "()"


def read_generator_file(path: str | Path) -> list[Perm]:
    """Read permutations in 1-based cycle notation, one per line."""
    try:
        lines = Path(path).read_text().splitlines()
    except OSError as exc:
        raise FileError(f"cannot read generator file {path}: {exc}") from exc
    parsed = []
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        try:
            parsed.append(Perm.parse(line))
        except ValueError as exc:
            raise FileError(f"{path}:{lineno}: {exc}") from exc
    if not parsed:
        raise FileError(f"{path}: no generators")
    degree = max(p.degree for p in parsed)
    return [Perm.parse(str(p), degree) for p in parsed]


def write_generator_file(path: str | Path, gens: Iterable[Perm], header: str = "") -> None:
    lines = [f"# {h}" for h in header.splitlines()] + [str(g) for g in gens]
    Path(path).write_text("\n".join(lines) + "\n")


class PermGroup:
    """A finite permutation group with every element enumerated."""

    def __init__(self, degree: int, generators: Sequence[Perm], elements: np.ndarray,
                 index: dict[tuple[int, ...], int]):
        self.degree = degree
        self.generators = tuple(generators)
        self.elements = elements
        self.index = index
        self.order = len(elements)
        self._setup_base()

    def __repr__(self) -> str:
        return f"<PermGroup degree={self.degree} order={self.order}>"

    def _setup_base(self) -> None:
        E = self.elements
        n, N = self.degree, self.order
        base: list[int] = []
        keys = np.zeros(N, dtype=np.int64)
        radix = 1
        distinct = 1
        fits = True
        for pt in range(n):
            if distinct == N:
                break
            if radix * n >= _KEY_LIMIT:
                fits = False
                break
            trial = keys + E[:, pt].astype(np.int64) * radix
            count = len(np.unique(trial))
            if count > distinct:
                base.append(pt)
                keys = trial
                radix *= n
                distinct = count
        if not fits:
            # Too many base points for int64 keys; fall back to byte keys.
            base = list(range(n))
        self.base = np.array(base, dtype=np.intp)
        self._int_keys = fits
        if fits:
            self._radix = np.array([n ** k for k in range(len(base))], dtype=np.int64)
            self._keys = keys
            self._key_order = np.argsort(keys, kind="stable")
            self._sorted_keys = keys[self._key_order]

    def lookup(self, base_images: np.ndarray) -> np.ndarray:
        """Element ordinals from images of the base points (last axis).

        Only valid for permutations known to lie in the group.
        """
        base_images = np.asarray(base_images)
        if not self._int_keys:
            flat = base_images.reshape(-1, base_images.shape[-1])
            out = np.array([self.index[tuple(int(v) for v in row)] for row in flat],
                           dtype=np.intp)
            return out.reshape(base_images.shape[:-1])
        keys = base_images.astype(np.int64) @ self._radix
        pos = np.searchsorted(self._sorted_keys, keys)
        pos = np.minimum(pos, self.order - 1)
        idx = self._key_order[pos]
        if not np.array_equal(self._keys[idx], keys):
            raise KeyError("permutation not in group")
        return idx

    def element(self, i: int) -> Perm:
        return Perm(tuple(self.elements[i].tolist()))

    def __iter__(self) -> Iterator[Perm]:
        for i in range(self.order):
            yield self.element(i)

    def __contains__(self, perm: Perm) -> bool:
        return perm.degree == self.degree and perm.images in self.index

    def index_of(self, perm: Perm) -> int:
        return self.index[perm.images]

    @cached_property
    def inverse_index(self) -> np.ndarray:
        inv_base = self.inverse_base_images
        return self.lookup(inv_base)

    @cached_property
    def inverse_base_images(self) -> np.ndarray:
        """Row x holds x^-1 evaluated at each base point."""
        E = self.elements
        out = np.empty((self.order, len(self.base)), dtype=E.dtype)
        for col, b in enumerate(self.base):
            out[:, col] = (E == b).argmax(axis=1)
        return out

    @cached_property
    def is_abelian(self) -> bool:
        gens = self.generators
        return all(a * b == b * a for a in gens for b in gens)

    @cached_property
    def classes(self) -> "ClassData":
        return conjugacy_classes(self)

    def element_order(self, i: int) -> int:
        return self.element(i).order()


def enumerate_group(generators: Iterable[Perm], cap: int = DEFAULT_CAP) -> PermGroup:
    """Breadth-first closure of ``generators``.

    Elements are numbered in discovery order, starting from the identity and
    multiplying by the sorted generators, so the numbering is reproducible.
    """
    gens = list(generators)
    if not gens:
        raise EmptyInput("no generators given")
    degree = gens[0].degree
    if any(g.degree != degree for g in gens):
        raise ValueError("generators must share one degree")
    gen_images = sorted({g.images for g in gens})
    ident = tuple(range(degree))
    index = {ident: 0}
    elems = [ident]
    i = 0
    while i < len(elems):
        x = elems[i]
        for g in gen_images:
            y = tuple(map(g.__getitem__, x))
            if y not in index:
                if len(elems) >= cap:
                    raise CapExceeded(f"group order exceeds cap {cap}")
                index[y] = len(elems)
                elems.append(y)
        i += 1
    dtype = np.int16 if degree < 2 ** 15 else np.int32
    arr = np.array(elems, dtype=dtype).reshape(len(elems), degree)
    return PermGroup(degree, [Perm(g) for g in gen_images], arr, index)


def trivial_group(degree: int = 0) -> PermGroup:
    return enumerate_group([Perm.identity(degree)])


@dataclass(frozen=True, eq=False)
class ClassData:
    reps: tuple[Perm, ...]
    rep_index: np.ndarray
    sizes: np.ndarray
    class_of: np.ndarray
    inverse_class: np.ndarray
    power_maps: np.ndarray  # shape (exponent, num_classes)
    element_orders: np.ndarray
    exponent: int

    @property
    def count(self) -> int:
        return len(self.sizes)

    def members(self, c: int) -> np.ndarray:
        return np.flatnonzero(self.class_of == c)

    def power_class(self, c: int, j: int) -> int:
        return int(self.power_maps[j % self.exponent, c])


def _conjugation_maps(G: PermGroup) -> list[np.ndarray]:
    E = G.elements
    maps = []
    for g in G.generators:
        g_img = np.array(g.images, dtype=np.intp)
        ginv = np.array(g.inverse().images, dtype=np.intp)
        # (g^-1 x g)[b] = g[x[g^-1[b]]]
        conj_base = g_img[E[:, ginv[G.base]]]
        maps.append(G.lookup(conj_base))
    return maps


def _power_classes(G: PermGroup, class_of: np.ndarray, cycles: list[tuple[int, ...]]) -> np.ndarray:
    """Class of g^j for j = 0 .. o(g)-1, via base-point cycle positions."""
    o = reduce(math.lcm, (len(c) for c in cycles), 1)
    js = np.arange(o)
    cols = []
    where = {}
    for cyc in cycles:
        for pos, pt in enumerate(cyc):
            where[pt] = (cyc, pos)
    for b in G.base:
        cyc, pos = where[int(b)]
        cyc_arr = np.array(cyc, dtype=np.int64)
        cols.append(cyc_arr[(pos + js) % len(cyc)])
    base_imgs = np.stack(cols, axis=1) if cols else np.zeros((o, 0), dtype=np.int64)
    return class_of[G.lookup(base_imgs)]


def conjugacy_classes(G: PermGroup) -> ClassData:
    """Orbits of G acting on itself by conjugation.

    Classes are sorted by (element order, class size, least element ordinal),
    so the identity class is class 0.
    """
    N = G.order
    maps = _conjugation_maps(G)
    if maps:
        src = np.concatenate([np.arange(N)] * len(maps))
        dst = np.concatenate(maps)
        graph = coo_matrix((np.ones(len(src), dtype=np.int8), (src, dst)), shape=(N, N))
        _, labels = connected_components(graph, directed=True, connection="weak")
    else:
        labels = np.zeros(N, dtype=np.int64)
    nlab = labels.max() + 1
    first = np.full(nlab, N, dtype=np.int64)
    np.minimum.at(first, labels, np.arange(N))
    sizes = np.bincount(labels, minlength=nlab)
    first_perms = [G.element(int(f)) for f in first]
    cycles = [g.cycles() for g in first_perms]
    orders = np.array([reduce(math.lcm, (len(c) for c in cyc), 1) for cyc in cycles],
                      dtype=np.int64)
    key = sorted(range(nlab), key=lambda c: (orders[c], sizes[c], first[c]))
    relabel = np.empty(nlab, dtype=np.int64)
    relabel[key] = np.arange(nlab)
    class_of = relabel[labels]
    rep_index = first[key]
    sizes = sizes[key]
    orders = orders[key]
    reps = tuple(first_perms[c] for c in key)
    cycles = [cycles[c] for c in key]
    exponent = reduce(math.lcm, (int(o) for o in orders), 1)
    inverse_class = class_of[G.inverse_index[rep_index]]
    power_maps = np.empty((exponent, nlab), dtype=np.int64)
    js = np.arange(exponent)
    for c in range(nlab):
        pc = _power_classes(G, class_of, cycles[c])
        power_maps[:, c] = pc[js % len(pc)]
    return ClassData(reps, rep_index, sizes, class_of, inverse_class, power_maps,
                     orders, exponent)


def class_mult_coeffs(G: PermGroup, classes: ClassData, i: int, k: int) -> np.ndarray:
    """a_ijk for every j: pairs (x, y) in C_i x C_j with x*y equal to rep k."""
    return class_matrix(G, classes, i, columns=[k])[:, 0]


def class_matrix(G: PermGroup, classes: ClassData, i: int,
                 columns: Sequence[int] | None = None) -> np.ndarray:
    """Matrix with entry [j, k] = a_ijk, the class algebra structure constants.

    For each rep z_k every x in C_i is paired with y = x^-1 z_k; only the
    base images of y are formed.
    """
    r = classes.count
    cols = list(range(r)) if columns is None else list(columns)
    members = classes.members(i)
    xinv = G.inverse_base_images[members]  # x^-1 at base points
    out = np.zeros((r, len(cols)), dtype=np.int64)
    chunk = max(1, 4_000_000 // max(1, xinv.size))
    for start in range(0, len(cols), chunk):
        block = cols[start:start + chunk]
        Z = G.elements[classes.rep_index[block]].astype(np.intp)  # (b, n)
        # y[b] = z_k[x^-1[b]]
        Y = Z[np.arange(len(block))[:, None, None], xinv[None, :, :]]
        js = classes.class_of[G.lookup(Y)]  # (b, |C_i|)
        for t in range(len(block)):
            out[:, start + t] = np.bincount(js[t], minlength=r)
    return out


def subgroup_from(G: PermGroup, elems: Iterable[Perm], cap: int = DEFAULT_CAP) -> PermGroup:
    gens = list(elems)
    for g in gens:
        if g not in G:
            raise ValueError("element not in group")
    if not gens:
        gens = [Perm.identity(G.degree)]
    return enumerate_group(gens, cap)


def normal_closure(G: PermGroup, elems: Iterable[Perm], cap: int = DEFAULT_CAP) -> PermGroup:
    gens = list(elems)
    H = subgroup_from(G, gens, cap)
    while True:
        extra = []
        for h in H.generators:
            for g in G.generators:
                c = g.inverse() * h * g
                if c not in H and all(c != e for e in extra):
                    extra.append(c)
        if not extra:
            return H
        H = enumerate_group(list(H.generators) + extra, cap)


def derived_subgroup(G: PermGroup) -> PermGroup:
    gens = G.generators
    comms = []
    for a in gens:
        for b in gens:
            c = a.inverse() * b.inverse() * a * b
            if not c.is_identity():
                comms.append(c)
    return normal_closure(G, comms)


def derived_series(G: PermGroup) -> list[PermGroup]:
    series = [G]
    while series[-1].order > 1:
        D = derived_subgroup(series[-1])
        if D.order == series[-1].order:
            break
        series.append(D)
    return series


def is_solvable(G: PermGroup) -> bool:
    return derived_series(G)[-1].order == 1


def direct_product(A: PermGroup, B: PermGroup, cap: int = DEFAULT_CAP) -> PermGroup:
    """A x B acting on disjoint point sets (A's points first)."""
    if A.order * B.order > cap:
        raise CapExceeded(f"product order {A.order * B.order} exceeds cap {cap}")
    da, db = A.degree, B.degree
    gens = [Perm(a.images + tuple(range(da, da + db))) for a in A.generators]
    gens += [Perm(tuple(range(da)) + tuple(da + v for v in b.images)) for b in B.generators]
    return enumerate_group(gens, cap)
