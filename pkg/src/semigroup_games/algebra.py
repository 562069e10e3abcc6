"""Finite semigroups and magmas given by Cayley tables.

Elements are the indices ``0..n-1``; ``table[x, y]`` is the product ``x*y``.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from pathlib import Path

import numpy as np


class AlgebraError(ValueError):
    pass


class NonClosed(AlgebraError):
    pass


class NonAssociative(AlgebraError):
    def __init__(self, triple):
        x, y, z = triple
        super().__init__(f"(x*y)*z != x*(y*z) at x={x}, y={y}, z={z}")
        self.triple = triple


class BadParam(AlgebraError):
    pass


@dataclass(frozen=True, eq=False)
class FiniteSemigroup:
    table: np.ndarray
    associative: bool
    labels: tuple | None = None
    name: str = ""

    @property
    def n(self) -> int:
        return self.table.shape[0]

    def mul(self, x: int, y: int) -> int:
        return int(self.table[x, y])

    def __repr__(self):
        kind = "semigroup" if self.associative else "magma"
        return f"<{kind} {self.name or '?'} n={self.n}>"


def find_associativity_violation(table: np.ndarray):
    """First triple (x, y, z) with (xy)z != x(yz), or None.  Full n^3 scan."""
    table = np.asarray(table)
    left = table[table]         # left[x, y, z] = (x*y)*z
    right = table[:, table]     # right[x, y, z] = x*(y*z)
    bad = np.argwhere(left != right)
    if len(bad) == 0:
        return None
    return tuple(int(v) for v in bad[0])


def validate_cayley(raw_table, require_associative: bool = True, labels=None, name: str = "") -> FiniteSemigroup:
    try:
        table = np.array(raw_table, dtype=object)
    except Exception as exc:  # ragged input
        raise AlgebraError(f"unreadable table: {exc}") from None
    if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] < 1:
        raise AlgebraError(f"table must be a non-empty square array, got shape {table.shape}")
    n = table.shape[0]
    for (x, y), v in np.ndenumerate(table):
        if isinstance(v, (bool, np.bool_)) or not isinstance(v, (int, np.integer)):
            raise AlgebraError(f"entry at ({x}, {y}) is not an integer: {v!r}")
        if not 0 <= v < n:
            raise NonClosed(f"entry {v} at ({x}, {y}) is outside 0..{n - 1}")
    table = table.astype(np.int64)
    witness = find_associativity_violation(table)
    if witness is not None and require_associative:
        raise NonAssociative(witness)
    if labels is not None and len(labels) != n:
        raise AlgebraError("one label per element expected")
    table.setflags(write=False)
    return FiniteSemigroup(table, witness is None, tuple(labels) if labels else None, name)


# -- standard constructions ------------------------------------------------

def _positive(k, what="n"):
    if not isinstance(k, (int, np.integer)) or k < 1:
        raise BadParam(f"{what} must be a positive integer, got {k!r}")
    return int(k)


def cyclic_group(n):
    n = _positive(n)
    i = np.arange(n)
    return validate_cayley((i[:, None] + i[None, :]) % n, name=f"cyclic:{n}")


def left_zero(n):
    n = _positive(n)
    return validate_cayley(np.repeat(np.arange(n)[:, None], n, axis=1), name=f"leftzero:{n}")


def right_zero(n):
    n = _positive(n)
    return validate_cayley(np.repeat(np.arange(n)[None, :], n, axis=0), name=f"rightzero:{n}")


def min_semilattice_chain(n):
    n = _positive(n)
    i = np.arange(n)
    return validate_cayley(np.minimum(i[:, None], i[None, :]), name=f"minchain:{n}")


def null_semigroup(n):
    """Every product is the zero element 0."""
    n = _positive(n)
    return validate_cayley(np.zeros((n, n), dtype=np.int64), name=f"null:{n}")


def monogenic(index, period):
    """Cyclic semigroup <a | a^(index+period) = a^index>; element k stands for a^(k+1)."""
    index, period = _positive(index, "index"), _positive(period, "period")
    n = index + period - 1

    def power(e):  # exponent e >= 1 -> element
        if e > n:
            e = index + (e - index) % period
        return e - 1

    table = [[power(x + y + 2) for y in range(n)] for x in range(n)]
    return validate_cayley(table, name=f"monogenic:{index}:{period}")


def direct_product(S: FiniteSemigroup, T: FiniteSemigroup):
    """Pairs (a, b) encoded as a*|T| + b, multiplied componentwise."""
    m = T.n
    a = S.table[:, None, :, None]
    b = T.table[None, :, None, :]
    table = (a * m + b).reshape(S.n * m, S.n * m)
    return validate_cayley(
        table,
        require_associative=S.associative and T.associative,
        name=f"product({S.name},{T.name})",
    )


def rock_paper_scissors():
    """Commutative, non-associative: x*y is the winner of x against y (0=R, 1=P, 2=S)."""
    return validate_cayley([[0, 1, 0], [1, 1, 2], [0, 2, 2]], require_associative=False,
                           labels=("rock", "paper", "scissors"), name="rps")


def steiner3():
    """Idempotent commutative quasigroup of order 3: x*y is the third element for x != y."""
    return validate_cayley([[0, 2, 1], [2, 1, 0], [1, 0, 2]], require_associative=False, name="steiner3")


def transformation_semigroup(generators):
    """Closure under composition of maps on {0..k-1}; (f*g)(i) = g(f(i))."""
    gens = [tuple(int(v) for v in g) for g in generators]
    if not gens:
        raise BadParam("at least one generator required")
    k = len(gens[0])
    if any(len(g) != k or any(not 0 <= v < k for v in g) for g in gens):
        raise BadParam("generators must be maps of a common finite set into itself")
    elems = list(dict.fromkeys(gens))
    index = {e: i for i, e in enumerate(elems)}
    frontier = list(elems)
    while frontier:
        new = []
        for f in frontier:
            for g in gens:
                h = tuple(g[f[i]] for i in range(k))
                if h not in index:
                    index[h] = len(elems)
                    elems.append(h)
                    new.append(h)
        frontier = new
    table = [[index[tuple(g[f[i]] for i in range(k))] for g in elems] for f in elems]
    return validate_cayley(table, name=f"transformations({len(gens)} gens on {k})")


_STANDARD = {
    "cyclic": cyclic_group,
    "cyclic_group": cyclic_group,
    "leftzero": left_zero,
    "left_zero": left_zero,
    "rightzero": right_zero,
    "right_zero": right_zero,
    "minchain": min_semilattice_chain,
    "min_semilattice_chain": min_semilattice_chain,
    "null": null_semigroup,
    "null_semigroup": null_semigroup,
    "monogenic": monogenic,
}


def make_standard(kind: str, *params) -> FiniteSemigroup:
    if kind in ("direct_product", "product"):
        if len(params) != 2:
            raise BadParam("direct_product takes two semigroups")
        return direct_product(*params)
    if kind == "rps":
        return rock_paper_scissors()
    if kind == "steiner3":
        return steiner3()
    try:
        ctor = _STANDARD[kind]
    except KeyError:
        raise BadParam(f"unknown construction {kind!r}") from None
    try:
        return ctor(*params)
    except TypeError as exc:
        raise BadParam(str(exc)) from None


# -- queries ----------------------------------------------------------------

def translation_maps(S: FiniteSemigroup):
    """``left[s][x] = s*x`` and ``right[s][x] = x*s`` as index arrays."""
    return S.table.copy(), S.table.T.copy()


@dataclass
class TileCheck:
    is_tile: bool
    k: int
    images: list
    uncovered: int | None = None
    overlap: tuple | None = None  # (i, j, element)

    def __bool__(self):
        return self.is_tile


def verify_tile(S: FiniteSemigroup, W, translates) -> TileCheck:
    """Do the left translates s_i W partition S?"""
    W = subset_indices(S, W)
    translates = [int(s) for s in translates]
    if not translates:
        raise BadParam("at least one translate required")
    for s in translates:
        if not 0 <= s < S.n:
            raise BadParam(f"translate {s} is not an element")
    images = [sorted({S.mul(s, w) for w in W}) for s in translates]
    owner = {}
    overlap = None
    for i, img in enumerate(images):
        for e in img:
            if e in owner and overlap is None:
                overlap = (owner[e], i, e)
            owner.setdefault(e, i)
    uncovered = next((e for e in range(S.n) if e not in owner), None)
    ok = overlap is None and uncovered is None
    return TileCheck(ok, len(translates), images, uncovered, overlap)


# -- subsets ------------------------------------------------------------------

def subset_indices(S: FiniteSemigroup, W) -> list:
    """Normalize a subset given as indices, a boolean mask or a spec string."""
    if isinstance(W, str):
        return parse_subset(W, S.n)
    W = list(W)
    if W and all(isinstance(v, (bool, np.bool_)) for v in W):
        if len(W) != S.n:
            raise BadParam(f"mask length {len(W)} does not match n={S.n}")
        return [i for i, b in enumerate(W) if b]
    out = sorted({int(v) for v in W})
    if out and not (0 <= out[0] and out[-1] < S.n):
        raise BadParam(f"subset {out} leaves 0..{S.n - 1}")
    return out


def mask(S: FiniteSemigroup, W) -> list:
    chosen = set(subset_indices(S, W))
    return [i in chosen for i in range(S.n)]


def parse_subset(spec: str, n: int) -> list:
    """``"0,2,4"``, ``"residue:<k>:<r>"``, ``"all"`` or ``"none"``."""
    spec = spec.strip()
    if spec in ("", "none", "{}"):
        return []
    if spec == "all":
        return list(range(n))
    m = re.fullmatch(r"residue:(\d+):(-?\d+)", spec)
    if m:
        k, r = int(m.group(1)), int(m.group(2))
        if k < 1:
            raise BadParam("residue modulus must be positive")
        return [x for x in range(n) if x % k == r % k]
    try:
        out = sorted({int(v) for v in spec.strip("{}").split(",")})
    except ValueError:
        raise BadParam(f"unreadable subset {spec!r}") from None
    if out and not (0 <= out[0] and out[-1] < n):
        raise BadParam(f"subset {out} leaves 0..{n - 1}")
    return out


# -- textual specs and CSV --------------------------------------------------

def read_cayley_csv(path, require_associative=True) -> FiniteSemigroup:
    lines = [ln.strip() for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines or not lines[0].startswith("n="):
        raise AlgebraError(f"{path}: first line must be 'n=<count>'")
    n = int(lines[0][2:])
    rows = [[int(v) for v in ln.split(",")] for ln in lines[1:]]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise AlgebraError(f"{path}: expected {n} rows of {n} entries")
    return validate_cayley(rows, require_associative, name=Path(path).name)


def write_cayley_csv(S: FiniteSemigroup, path):
    body = "\n".join(",".join(str(int(v)) for v in row) for row in S.table)
    Path(path).write_text(f"n={S.n}\n{body}\n")


def _split_args(s):
    depth, cur, out = 0, "", []
    for ch in s:
        if ch == "," and depth == 0:
            out.append(cur)
            cur = ""
            continue
        depth += (ch == "(") - (ch == ")")
        cur += ch
    out.append(cur)
    return [p.strip() for p in out]


def parse_semigroup(spec: str, require_associative=True, rng=None) -> FiniteSemigroup:
    """``cyclic:6``, ``leftzero:3``, ``minchain:4``, ``product(cyclic:2,cyclic:3)``,
    ``rps``, ``random``, ``csv:<path>`` or a path ending in ``.csv``."""
    spec = spec.strip()
    if spec.startswith("csv:"):
        return read_cayley_csv(spec[4:], require_associative)
    if spec.endswith(".csv"):
        return read_cayley_csv(spec, require_associative)
    m = re.fullmatch(r"(?:direct_)?product\((.*)\)", spec)
    if m:
        parts = _split_args(m.group(1))
        if len(parts) != 2:
            raise BadParam(f"product needs two factors: {spec!r}")
        S, T = (parse_semigroup(p, require_associative, rng) for p in parts)
        return direct_product(S, T)
    if spec == "random" or spec.startswith("random:"):
        size = int(spec.split(":")[1]) if ":" in spec else 12
        return random_semigroup(rng or random.Random(0), max_size=size)
    name, *args = spec.split(":")
    try:
        params = [int(a) for a in args]
    except ValueError:
        raise BadParam(f"non-integer parameter in {spec!r}") from None
    S = make_standard(name, *params)
    if require_associative and not S.associative:
        raise NonAssociative(find_associativity_violation(S.table))
    return S


def random_semigroup(rng: random.Random, max_size: int = 12) -> FiniteSemigroup:
    """A random semigroup drawn from a mix of families (groups, chains, products,
    monogenic and transformation semigroups), with at most ``max_size`` elements."""
    max_size = max(2, max_size)
    for _ in range(1000):
        kind = rng.choice(["cyclic", "minchain", "null", "leftzero", "rightzero",
                           "monogenic", "product", "transformations"])
        if kind == "monogenic":
            index = rng.randint(1, max(1, max_size // 2))
            period = rng.randint(1, max(1, max_size - index + 1))
            S = monogenic(index, period)
        elif kind == "product":
            a = rng.randint(1, max(1, max_size // 2))
            b = rng.randint(1, max(1, max_size // a))
            S = direct_product(random_semigroup(rng, a), random_semigroup(rng, b))
        elif kind == "transformations":
            k = rng.randint(2, 3)
            gens = [[rng.randrange(k) for _ in range(k)] for _ in range(rng.randint(1, 2))]
            S = transformation_semigroup(gens)
        else:
            S = make_standard(kind, rng.randint(1, max_size))
        if S.n <= max_size:
            return S
    raise RuntimeError("could not draw a semigroup of the requested size")

