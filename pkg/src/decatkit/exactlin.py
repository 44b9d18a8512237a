"""Exact linear algebra over Q, prime fields, and integer Laurent polynomials.

Everything in this module is exact: rationals are `fractions.Fraction`, prime
field elements are ints in [0, p), Laurent polynomial coefficients are ints.
Matrices are sparse (dict keyed by (row, col)) and vectors are columns, so a
map C -> D is a matrix with D-many rows and C-many columns and composition is
left multiplication.

Rank over Q clears denominators and runs fraction-free Bareiss elimination on
integers; rank over F_p is ordinary Gaussian elimination on residues.
"""

from __future__ import annotations

import dataclasses
from fractions import Fraction
from typing import Iterable, Iterator, Mapping


def is_prime(n: int) -> bool:
    """Deterministic Miller-Rabin, valid far beyond any modulus used here."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


class RationalField:
    """The rationals; a stateless singleton, see QQ below."""

    name = "Q"

    def of(self, x) -> Fraction:
        return Fraction(x)

    def zero(self) -> Fraction:
        return Fraction(0)

    def one(self) -> Fraction:
        return Fraction(1)

    def add(self, a, b):
        return a + b

    def sub(self, a, b):
        return a - b

    def mul(self, a, b):
        return a * b

    def neg(self, a):
        return -a

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0 in Q")
        return 1 / Fraction(a)

    def is_zero(self, a) -> bool:
        return a == 0

    def __repr__(self) -> str:
        return "QQ"


QQ = RationalField()


@dataclasses.dataclass(frozen=True)
class PrimeField:
    """F_p with elements represented as ints in [0, p)."""

    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise ValueError(f"modulus {self.p} is not prime")

    @property
    def name(self) -> str:
        return f"F{self.p}"

    def of(self, x) -> int:
        if isinstance(x, Fraction):
            den = x.denominator % self.p
            if den == 0:
                raise ZeroDivisionError(f"denominator divisible by {self.p}")
            return x.numerator * pow(den, -1, self.p) % self.p
        return x % self.p

    def zero(self) -> int:
        return 0

    def one(self) -> int:
        return 1

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return a * b % self.p

    def neg(self, a):
        return -a % self.p

    def inv(self, a):
        if a % self.p == 0:
            raise ZeroDivisionError(f"inverse of 0 mod {self.p}")
        return pow(a, -1, self.p)

    def is_zero(self, a) -> bool:
        return a % self.p == 0


@dataclasses.dataclass(frozen=True)
class LaurentPoly:
    """Integer Laurent polynomial in one variable t.

    `terms` is a sorted tuple of (exponent, coefficient) pairs with nonzero
    coefficients; the zero polynomial has empty terms. t is the formal shift
    variable: multiplying by t**m is `shifted(m)`.
    """

    terms: tuple[tuple[int, int], ...] = ()

    @staticmethod
    def from_dict(coeffs: Mapping[int, int]) -> "LaurentPoly":
        return LaurentPoly(tuple(sorted((e, c) for e, c in coeffs.items() if c != 0)))

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly()

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly(((0, 1),))

    @staticmethod
    def t_power(m: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly(((m, coeff),) if coeff else ())

    @staticmethod
    def const(c: int) -> "LaurentPoly":
        return LaurentPoly(((0, c),) if c else ())

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc = dict(self.terms)
        for e, c in other.terms:
            acc[e] = acc.get(e, 0) + c
        return LaurentPoly.from_dict(acc)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other) -> "LaurentPoly":
        if isinstance(other, int):
            return LaurentPoly(tuple((e, c * other) for e, c in self.terms)) if other else LaurentPoly()
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        acc: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                e = e1 + e2
                acc[e] = acc.get(e, 0) + c1 * c2
        return LaurentPoly.from_dict(acc)

    __rmul__ = __mul__

    def shifted(self, m: int) -> "LaurentPoly":
        return LaurentPoly(tuple((e + m, c) for e, c in self.terms))

    def at_one(self) -> int:
        return sum(c for _, c in self.terms)

    def min_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return self.terms[0][0]

    def max_degree(self) -> int:
        if not self.terms:
            raise ValueError("zero polynomial has no degree")
        return self.terms[-1][0]

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for e, c in self.terms:
            if e == 0:
                parts.append(str(c))
            else:
                head = "" if c == 1 else ("-" if c == -1 else str(c) + "*")
                parts.append(f"{head}t^{e}" if e != 1 else f"{head}t")
        return " + ".join(parts).replace("+ -", "- ")


def geometric_shift_sum(count: int, step: int = 2) -> LaurentPoly:
    """1 + t^step + t^(2*step) + ... with `count` terms."""
    return LaurentPoly.from_dict({i * step: 1 for i in range(count)})


@dataclasses.dataclass
class SparseMatrix:
    """Sparse matrix; entries may be ints, Fractions, or LaurentPoly.

    No stored zeros, no out-of-range indices, no duplicate positions; the
    constructors enforce this. Entry values must support +, *, unary -, and
    truthiness (zero is falsy), which holds for all three scalar types.
    """

    nrows: int
    ncols: int
    entries: dict[tuple[int, int], object]

    def __post_init__(self):
        for (i, j), v in self.entries.items():
            if not (0 <= i < self.nrows and 0 <= j < self.ncols):
                raise ValueError(f"entry position ({i}, {j}) outside {self.nrows} x {self.ncols}")
            if not v:
                raise ValueError(f"stored zero at ({i}, {j}); drop zeros before construction")

    @staticmethod
    def from_triples(nrows: int, ncols: int, triples: Iterable[tuple[int, int, object]]) -> "SparseMatrix":
        entries: dict[tuple[int, int], object] = {}
        for i, j, v in triples:
            if (i, j) in entries:
                raise ValueError(f"duplicate entry position ({i}, {j})")
            if v:
                entries[(i, j)] = v
        return SparseMatrix(nrows, ncols, entries)

    @staticmethod
    def zeros(nrows: int, ncols: int) -> "SparseMatrix":
        return SparseMatrix(nrows, ncols, {})

    @staticmethod
    def identity(n: int, one=1) -> "SparseMatrix":
        return SparseMatrix(n, n, {(i, i): one for i in range(n)})

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparseMatrix):
            return NotImplemented
        return (self.nrows, self.ncols, self.entries) == (other.nrows, other.ncols, other.entries)

    def __add__(self, other: "SparseMatrix") -> "SparseMatrix":
        if (self.nrows, self.ncols) != (other.nrows, other.ncols):
            raise ValueError(f"shape mismatch {self.nrows}x{self.ncols} + {other.nrows}x{other.ncols}")
        acc = dict(self.entries)
        for pos, v in other.entries.items():
            w = acc.get(pos)
            s = v if w is None else w + v
            if s:
                acc[pos] = s
            elif pos in acc:
                del acc[pos]
        return SparseMatrix(self.nrows, self.ncols, acc)

    def __sub__(self, other: "SparseMatrix") -> "SparseMatrix":
        return self + other.scaled(-1)

    def scaled(self, c) -> "SparseMatrix":
        if not c:
            return SparseMatrix.zeros(self.nrows, self.ncols)
        out = {}
        for pos, v in self.entries.items():
            w = v * c if not isinstance(v, LaurentPoly) else v * c
            if w:
                out[pos] = w
        return SparseMatrix(self.nrows, self.ncols, out)

    def __matmul__(self, other: "SparseMatrix") -> "SparseMatrix":
        if self.ncols != other.nrows:
            raise ValueError(f"cannot compose {self.nrows}x{self.ncols} with {other.nrows}x{other.ncols}")
        by_row: dict[int, list[tuple[int, object]]] = {}
        for (j, k), v in other.entries.items():
            by_row.setdefault(j, []).append((k, v))
        acc: dict[tuple[int, int], object] = {}
        for (i, j), u in self.entries.items():
            for k, v in by_row.get(j, ()):
                pos = (i, k)
                w = acc.get(pos)
                s = u * v if w is None else w + u * v
                if s:
                    acc[pos] = s
                elif pos in acc:
                    del acc[pos]
        return SparseMatrix(self.nrows, other.ncols, acc)

    def transpose(self) -> "SparseMatrix":
        return SparseMatrix(self.ncols, self.nrows, {(j, i): v for (i, j), v in self.entries.items()})

    def kron(self, other: "SparseMatrix") -> "SparseMatrix":
        out = {}
        for (i, j), u in self.entries.items():
            for (k, l), v in other.entries.items():
                out[(i * other.nrows + k, j * other.ncols + l)] = u * v
        return SparseMatrix(self.nrows * other.nrows, self.ncols * other.ncols, out)

    def map_values(self, fn) -> "SparseMatrix":
        out = {}
        for pos, v in self.entries.items():
            w = fn(v)
            if w:
                out[pos] = w
        return SparseMatrix(self.nrows, self.ncols, out)

    def at_one(self) -> "SparseMatrix":
        """Evaluate LaurentPoly entries at t = 1, yielding an int matrix."""
        return self.map_values(lambda v: v.at_one() if isinstance(v, LaurentPoly) else v)

    def column(self, j: int) -> dict[int, object]:
        return {i: v for (i, jj), v in self.entries.items() if jj == j}

    def rows(self) -> Iterator[tuple[int, dict[int, object]]]:
        by_row: dict[int, dict[int, object]] = {}
        for (i, j), v in self.entries.items():
            by_row.setdefault(i, {})[j] = v
        return iter(sorted(by_row.items()))


def _bareiss_rank(rows: list[dict[int, int]], ncols: int) -> int:
    """Fraction-free Bareiss elimination on integer sparse rows."""
    rank = 0
    prev = 1
    cols = sorted({j for row in rows for j in row})
    live = [r for r in rows if r]
    for c in cols:
        pivot_idx = None
        for idx, row in enumerate(live):
            if row.get(c):
                pivot_idx = idx
                break
        if pivot_idx is None:
            continue
        pivot_row = live.pop(pivot_idx)
        p = pivot_row[c]
        nxt = []
        for row in live:
            rc = row.get(c, 0)
            # Every remaining row is rescaled, not only those hit by the
            # pivot; the one-step division is exact only on that invariant.
            touched = (set(row) | set(pivot_row)) if rc else set(row)
            new = {}
            for j in touched:
                if j == c:
                    continue
                v = row.get(j, 0) * p - rc * pivot_row.get(j, 0)
                assert v % prev == 0
                v //= prev
                if v:
                    new[j] = v
            if new:
                nxt.append(new)
        live = nxt
        prev = p
        rank += 1
        if not live:
            break
    return rank


def _gauss_rank_mod_p(rows: list[dict[int, int]], p: int) -> int:
    rank = 0
    live = []
    for row in rows:
        r = {j: v % p for j, v in row.items() if v % p}
        if r:
            live.append(r)
    pivots: list[tuple[int, dict[int, int]]] = []
    for row in live:
        for pc, prow in pivots:
            v = row.get(pc)
            if v:
                for j, w in prow.items():
                    nv = (row.get(j, 0) - v * w) % p
                    if nv:
                        row[j] = nv
                    elif j in row:
                        del row[j]
        if row:
            c = min(row)
            inv = pow(row[c], -1, p)
            row = {j: v * inv % p for j, v in row.items()}
            pivots.append((c, row))
            rank += 1
    return rank


def matrix_rank(m: SparseMatrix, field) -> int:
    """Exact rank over the given field."""
    rows = [dict(r) for _, r in m.rows()]
    if isinstance(field, PrimeField):
        return _gauss_rank_mod_p([{j: field.of(v) for j, v in row.items()} for row in rows], field.p)
    int_rows = []
    for row in rows:
        frs = {j: Fraction(v) for j, v in row.items()}
        lcm = 1
        for f in frs.values():
            lcm = lcm * f.denominator // _gcd(lcm, f.denominator)
        int_rows.append({j: int(f * lcm) for j, f in frs.items()})
    return _bareiss_rank(int_rows, m.ncols)


def _gcd(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def nullspace(m: SparseMatrix, field) -> list[list]:
    """Basis of the right kernel, as dense column vectors of field elements."""
    dense = [[field.of(0)] * m.ncols for _ in range(m.nrows)]
    for (i, j), v in m.entries.items():
        dense[i][j] = field.of(v)
    nr, nc = m.nrows, m.ncols
    pivot_of_col: dict[int, int] = {}
    r = 0
    for c in range(nc):
        pr = None
        for i in range(r, nr):
            if not field.is_zero(dense[i][c]):
                pr = i
                break
        if pr is None:
            continue
        dense[r], dense[pr] = dense[pr], dense[r]
        inv = field.inv(dense[r][c])
        dense[r] = [field.mul(inv, x) for x in dense[r]]
        for i in range(nr):
            if i != r and not field.is_zero(dense[i][c]):
                f = dense[i][c]
                dense[i] = [field.sub(x, field.mul(f, y)) for x, y in zip(dense[i], dense[r])]
        pivot_of_col[c] = r
        r += 1
    free = [c for c in range(nc) if c not in pivot_of_col]
    basis = []
    for fc in free:
        vec = [field.of(0)] * nc
        vec[fc] = field.of(1)
        for c, pr in pivot_of_col.items():
            vec[c] = field.neg(dense[pr][fc])
        basis.append(vec)
    return basis


class ComplexError(ValueError):
    """Raised when candidate differentials fail to square to zero."""


@dataclasses.dataclass
class FiniteComplex:
    """A finite cochain complex of column-vector spaces over a fixed field.

    dims[j] is the dimension in degree offset j; maps[j] sends degree j to
    degree j+1 and has shape dims[j+1] x dims[j]. `degrees` labels the offsets
    with actual cohomological degrees (defaults to 0..len(dims)-1).
    """

    field: object
    dims: tuple[int, ...]
    maps: tuple[SparseMatrix, ...]
    degrees: tuple[int, ...] = ()

    def __post_init__(self):
        if not self.degrees:
            self.degrees = tuple(range(len(self.dims)))
        if len(self.degrees) != len(self.dims):
            raise ValueError("degree labels do not match dimension list")
        if len(self.maps) != max(len(self.dims) - 1, 0):
            raise ValueError(f"expected {len(self.dims) - 1} maps, got {len(self.maps)}")
        for j, m in enumerate(self.maps):
            if (m.nrows, m.ncols) != (self.dims[j + 1], self.dims[j]):
                raise ValueError(
                    f"map {j} has shape {m.nrows}x{m.ncols}, expected {self.dims[j + 1]}x{self.dims[j]}"
                )

    def check_complex(self) -> None:
        for j in range(len(self.maps) - 1):
            comp = self.maps[j + 1] @ self.maps[j]
            if isinstance(self.field, PrimeField):
                comp = comp.map_values(self.field.of)
            if not comp.is_zero():
                raise ComplexError(f"differential squared is nonzero leaving degree {self.degrees[j]}")

    def homology_dims(self) -> dict[int, int]:
        self.check_complex()
        ranks = [matrix_rank(m, self.field) for m in self.maps]
        out = {}
        for j, d in enumerate(self.dims):
            r_out = ranks[j] if j < len(ranks) else 0
            r_in = ranks[j - 1] if j > 0 else 0
            out[self.degrees[j]] = d - r_out - r_in
        return out
