"""Regenerate the permutation generator files shipped in src/codegree/data.

u4_2.gens: PSp4(3) = U4(2), order 25920, on the 40 points of PG(3,3),
    generated by symplectic transvections x -> x + B(x, v) v.
u3_3.gens: SU3(3) = U3(3), order 6048, on the 28 isotropic points of
    PG(2,9) for the hermitian form x1 y3^3 + x2 y2^3 + x3 y1^3, generated by
    unitary transvections x -> x + a h(x, v) v with a^3 = -a.

From each full transvection set a few generators are kept greedily: a
transvection is added only when it enlarges the group generated so far.

    python3 scripts/make_generator_files.py [output_dir]
"""
from __future__ import annotations

import itertools
import sys
from pathlib import Path

from codegree.fields import field
from codegree.perm import Perm, enumerate_group, write_generator_file


def projective_points(F, dim: int) -> list[tuple[int, ...]]:
    """Vectors whose first nonzero coordinate is 1."""
    pts = []
    for v in itertools.product(range(F.q), repeat=dim):
        nz = [x for x in v if x]
        if nz and nz[0] == 1:
            pts.append(v)
    return pts


def normalize(F, v: tuple[int, ...]) -> tuple[int, ...]:
    lead = next(x for x in v if x)
    inv = F.inv[lead]
    return tuple(F.mul[inv][x] for x in v)


def as_perm(F, points, index, fn) -> Perm:
    return Perm(tuple(index[normalize(F, fn(x))] for x in points))


def greedy(gens: list[Perm], order: int) -> list[Perm]:
    kept: list[Perm] = []
    size = 1
    for g in gens:
        n = enumerate_group(kept + [g], cap=order).order
        if n > size:
            kept.append(g)
            size = n
        if size == order:
            return kept
    raise RuntimeError(f"transvections generate order {size}, expected {order}")


def sp4_3() -> list[Perm]:
    F = field(3)
    pts = projective_points(F, 4)
    index = {v: i for i, v in enumerate(pts)}

    def form(x, y):
        # x1 y3 - x3 y1 + x2 y4 - x4 y2
        return (x[0] * y[2] - x[2] * y[0] + x[1] * y[3] - x[3] * y[1]) % 3

    gens = []
    for v in pts:
        def t(x, v=v):
            b = form(x, v)
            return tuple((a + b * c) % 3 for a, c in zip(x, v))
        gens.append(as_perm(F, pts, index, t))
    return greedy(gens, 25920)


def su3_3() -> list[Perm]:
    F = field(9)
    add, mul = F.add, F.mul

    def herm(x, y):
        out = 0
        for a, b in zip(x, reversed(y)):
            out = add[out][mul[a][F.frob(b)]]
        return out

    pts = [v for v in projective_points(F, 3) if herm(v, v) == 0]
    index = {v: i for i, v in enumerate(pts)}
    trace_zero = [a for a in range(1, 9) if add[a][F.frob(a)] == 0]
    gens = []
    for v in pts:
        for a in trace_zero:
            def t(x, v=v, a=a):
                s = mul[a][herm(x, v)]
                return tuple(add[xi][mul[s][vi]] for xi, vi in zip(x, v))
            gens.append(as_perm(F, pts, index, t))
    return greedy(gens, 6048)


def main(argv: list[str]) -> None:
    out = Path(argv[1]) if len(argv) > 1 else Path(__file__).resolve().parents[1] / "src/codegree/data"
    out.mkdir(parents=True, exist_ok=True)
    write_generator_file(out / "u4_2.gens", sp4_3(),
                         "U4(2) = PSp4(3), order 25920, on 40 points of PG(3,3)")
    write_generator_file(out / "u3_3.gens", su3_3(),
                         "U3(3) = SU3(3), order 6048, on 28 isotropic points of PG(2,9)")
    print(f"wrote generator files to {out}")


if __name__ == "__main__":
    main(sys.argv)
