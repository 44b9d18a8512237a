"""Truncated highest-weight modules for gl_n and their characters.

Highest weights are passed *shifted* (the staircase shift already added, see
`decatkit.weights`); the module stores and acts through the unshifted weight.

The module basis is PBW: ordered monomials in the lowering generators e_ij
(i > j), ordered ascending in (j, i); for gl_3 the order is e_21, e_31, e_32.
A monomial's depth is the root height of its total weight drop, and the
module keeps exactly the basis vectors of depth <= D. Lowering operators can
push vectors out of the window; every dropped contribution is recorded in
`truncation_losses` rather than silently discarded. Raising and Cartan
operators never increase depth, so their matrices are exact on the window.

`simple_quotient` builds the finite-dimensional quotient by the submodule
generated by all singular vectors (vectors killed by every simple raising
operator); within the depth window the lowering closure of those vectors is
exact because depth only grows along a lowering monomial.
"""

from __future__ import annotations

import dataclasses
import itertools
from fractions import Fraction

from decatkit import liealg, weights
from decatkit.exactlin import QQ, PrimeField, SparseMatrix, matrix_rank, nullspace

Pair = tuple[int, int]
CharacterTable = dict[weights.Weight, int]


def lowering_generators(n: int) -> list[Pair]:
    """Pairs (i, j) with i > j, ascending in (j, i)."""
    return [(i, j) for j in range(1, n) for i in range(j + 1, n + 1)]


def generator_height(pair: Pair) -> int:
    """Depth change of e_ij: i - j (negative for raising operators)."""
    i, j = pair
    return i - j


class TruncatedVerma:
    """Depth-truncated universal highest-weight module for gl_n."""

    def __init__(self, n: int, lam_shifted: weights.Weight, depth: int, field=QQ):
        if len(lam_shifted) != n:
            raise ValueError(f"weight {lam_shifted} is not length {n}")
        if depth < 0:
            raise ValueError(f"depth must be nonnegative, got {depth}")
        self.n = n
        self.field = field
        self.depth = depth
        self.lam_shifted = tuple(lam_shifted)
        self.lam = weights.unshift(self.lam_shifted)
        self.gens_low = lowering_generators(n)
        self._gl = liealg.gl(n)
        self._heights = [generator_height(g) for g in self.gens_low]
        self.basis = self._enumerate_basis()
        self.basis_index = {m: k for k, m in enumerate(self.basis)}
        self.basis_weight = [self._monomial_weight(m) for m in self.basis]
        self.weight_index: dict[weights.Weight, list[int]] = {}
        for k, w in enumerate(self.basis_weight):
            self.weight_index.setdefault(w, []).append(k)
        self.truncation_losses: list[tuple[Pair, int]] = []
        self._action_cache: dict[Pair, SparseMatrix] = {}

    @property
    def dim(self) -> int:
        return len(self.basis)

    def _enumerate_basis(self) -> list[tuple[int, ...]]:
        monos: list[tuple[int, ...]] = []

        def rec(idx: int, left: int, acc: list[int]):
            if idx == len(self.gens_low):
                monos.append(tuple(acc))
                return
            h = self._heights[idx]
            for m in range(left // h + 1):
                rec(idx + 1, left - m * h, acc + [m])

        rec(0, self.depth, [])
        return sorted(monos, key=lambda m: (self.monomial_depth(m), m))

    def monomial_depth(self, mono: tuple[int, ...]) -> int:
        return sum(m * h for m, h in zip(mono, self._heights))

    def _monomial_weight(self, mono: tuple[int, ...]) -> weights.Weight:
        w = list(self.lam)
        for m, (i, j) in zip(mono, self.gens_low):
            w[i - 1] += m
            w[j - 1] -= m
        return tuple(w)

    def _key(self, pair: Pair):
        i, j = pair
        if i > j:
            return (0, self.gens_low.index(pair))
        if i == j:
            return (1, i)
        return (2, pair)

    def _expand(self, mono: tuple[int, ...]) -> tuple[Pair, ...]:
        out: list[Pair] = []
        for m, g in zip(mono, self.gens_low):
            out.extend([g] * m)
        return tuple(out)

    def _normal_order(self, word: tuple[Pair, ...]) -> tuple[dict[tuple[int, ...], int], bool]:
        """Rewrite a word of generators applied to the highest weight vector.

        Returns (PBW coefficients, lost) where `lost` marks contributions that
        left the depth window. Coefficients are plain ints (the highest weight
        is integral); callers normalize into their field.
        """
        out: dict[tuple[int, ...], int] = {}
        lost = False
        stack: list[tuple[tuple[Pair, ...], int]] = [(word, 1)]
        while stack:
            w, c = stack.pop()
            for a in range(len(w) - 1):
                if self._key(w[a]) > self._key(w[a + 1]):
                    x, y = w[a], w[a + 1]
                    stack.append((w[:a] + (y, x) + w[a + 2 :], c))
                    for pair, coeff in self._gl.bracket(x, y).items():
                        stack.append((w[:a] + (pair,) + w[a + 2 :], c * coeff))
                    break
            else:
                coeff = c
                exps = [0] * len(self.gens_low)
                alive = True
                for pair in reversed(w):
                    i, j = pair
                    if i < j:
                        alive = False
                        break
                    if i == j:
                        coeff *= self.lam[i - 1]
                    else:
                        exps[self.gens_low.index(pair)] += 1
                if not alive or coeff == 0:
                    continue
                mono = tuple(exps)
                if self.monomial_depth(mono) > self.depth:
                    lost = True
                    continue
                out[mono] = out.get(mono, 0) + coeff
        return {m: v for m, v in out.items() if v}, lost

    def action(self, pair: Pair) -> SparseMatrix:
        """Matrix of e_pair on the window, columns indexed by the basis."""
        if pair in self._action_cache:
            return self._action_cache[pair]
        i, j = pair
        if not (1 <= i <= self.n and 1 <= j <= self.n):
            raise ValueError(f"generator ({i}, {j}) outside gl_{self.n}")
        triples = []
        for col, mono in enumerate(self.basis):
            result, lost = self._normal_order((pair,) + self._expand(mono))
            if lost:
                self.truncation_losses.append((pair, col))
            for target, coeff in result.items():
                v = self.field.of(coeff)
                if not self.field.is_zero(v):
                    triples.append((self.basis_index[target], col, v))
        mat = SparseMatrix.from_triples(self.dim, self.dim, triples)
        self._action_cache[pair] = mat
        return mat

    def weight_dims(self) -> CharacterTable:
        """Dimension of each weight space, keyed by shifted weight."""
        return {weights.shift(w): len(idx) for w, idx in self.weight_index.items()}

    def bracket_violations(self) -> list[tuple[Pair, Pair, int]]:
        """Columns where [A_x, A_y] disagrees with the bracket's matrix.

        Only columns whose full commutator path stays inside the window are
        compared; everything else is unavoidably truncated and flagged at
        action-build time instead. An empty list means the truncated action
        is a Lie algebra representation on the safe region.
        """
        all_pairs = self._gl.pairs
        bad = []
        mats = {g: self.action(g) for g in all_pairs}
        for x in all_pairs:
            for y in all_pairs:
                hx, hy = generator_height(x), generator_height(y)
                comm = mats[x] @ mats[y] - mats[y] @ mats[x]
                expect = SparseMatrix.zeros(self.dim, self.dim)
                for z, c in self._gl.bracket(x, y).items():
                    expect = expect + mats[z].scaled(self.field.of(c))
                diff = comm - expect
                if isinstance(self.field, PrimeField):
                    diff = diff.map_values(self.field.of)
                if diff.is_zero():
                    continue
                for (_, col), _v in diff.entries.items():
                    d = self.monomial_depth(self.basis[col])
                    if (
                        d + hx <= self.depth
                        and d + hy <= self.depth
                        and d + hx + hy <= self.depth
                    ):
                        bad.append((x, y, col))
        return bad


def verma_character(n: int, lam_shifted: weights.Weight, depth: int) -> CharacterTable:
    """Weight-space dimensions of the depth window, via partition counts."""
    lam = weights.unshift(tuple(lam_shifted))
    table = weights.multiset_character(weights.positive_roots(n), n, depth)
    out: CharacterTable = {}
    for nu, count in table.items():
        w = tuple(a - b for a, b in zip(lam, nu))
        out[weights.shift(w)] = count
    return out


def coverma_character(
    par: liealg.ParabolicData,
    levi_character: CharacterTable,
    depth: int,
    nilradical_side: str = "opposite",
) -> CharacterTable:
    """Character of the coinduced module window: Levi character times the
    symmetric-algebra character of the chosen nilradical.

    `nilradical_side="opposite"` (default) drops weights by sums of the
    positive cross-block roots, i.e. the underlying space is the symmetric
    algebra on the opposite nilradical tensored with the Levi module;
    "same" adds those roots instead. Both are exposed because the convention
    is a genuine choice; tests pin the default through the Borel case, where
    the co-Verma window must match `verma_character`.
    """
    if nilradical_side not in ("opposite", "same"):
        raise ValueError(f"nilradical_side must be 'opposite' or 'same', got {nilradical_side!r}")
    n = par.n
    nil = par.nilradical("upper")
    cross = [nil.weight(p) for p in nil.pairs]
    table = weights.multiset_character(cross, n, depth)
    sign = -1 if nilradical_side == "opposite" else 1
    out: CharacterTable = {}
    for w_shifted, mult in levi_character.items():
        lw = weights.unshift(tuple(w_shifted))
        for nu, count in table.items():
            key = weights.shift(tuple(a + sign * b for a, b in zip(lw, nu)))
            out[key] = out.get(key, 0) + mult * count
    return out


def weyl_dim(lam_shifted: weights.Weight) -> int:
    """Dimension of the simple module with the given shifted highest weight.

    The shifted coordinates absorb the staircase, so the product formula is
    prod_{i<j} (l_i - l_j) / (j - i).
    """
    n = len(lam_shifted)
    val = Fraction(1)
    for i in range(n):
        for j in range(i + 1, n):
            val *= Fraction(lam_shifted[i] - lam_shifted[j], j - i)
    assert val.denominator == 1
    return int(val)


@dataclasses.dataclass
class InductionReport:
    ell: int
    p: int
    dim: int
    expected: int
    x_powers: list[int]


def gl2_parabolic_induction_dim(ell: int, p: int) -> InductionReport:
    """Fiber dimension of the degree-ell coinduced jet space for gl_2 mod p.

    Model: decompose a 2x2 matrix as unipotent times lower triangular,
    a11 = b11 + x b21, a21 = b21, and expand the degree-ell coefficient
    functions a11^d a21^(ell-d) in powers of x. The x-span has dimension
    ell + 1 exactly when every binomial C(d, m) with m <= d <= ell that the
    expansion meets survives mod p; for ell < p that is all of them. The
    report lists which powers of x are hit.
    """
    if ell < 0:
        raise ValueError("degree must be nonnegative")
    field = PrimeField(p)
    # Column (m, e) = coefficient of x^m b11^e b21^(ell-e); row d = input monomial.
    cols: dict[tuple[int, int], int] = {}
    triples = []
    for d in range(ell + 1):
        coeff = 1
        for m in range(d + 1):
            # coeff = C(d, m); the b-monomial is b11^(d-m) b21^(ell-d+m).
            key = (m, d - m)
            col = cols.setdefault(key, len(cols))
            v = field.of(coeff)
            if not field.is_zero(v):
                triples.append((d, col, v))
            coeff = coeff * (d - m) // (m + 1)
    mat = SparseMatrix.from_triples(ell + 1, max(len(cols), 1), triples)
    rank = matrix_rank(mat, field)
    hit = sorted({m for (m, _e), col in cols.items() if any(c == col for (_r, c) in mat.entries)})
    return InductionReport(ell=ell, p=p, dim=rank, expected=ell + 1, x_powers=hit)


@dataclasses.dataclass
class FiniteWeightModule:
    """A finite-dimensional gl_n weight module, all action matrices stored."""

    n: int
    field: object
    basis_weight: tuple[weights.Weight, ...]
    actions: dict[Pair, SparseMatrix]

    def __post_init__(self):
        self.weight_index: dict[weights.Weight, list[int]] = {}
        for k, w in enumerate(self.basis_weight):
            self.weight_index.setdefault(w, []).append(k)

    @property
    def dim(self) -> int:
        return len(self.basis_weight)

    def action(self, pair: Pair) -> SparseMatrix:
        if pair not in self.actions:
            raise KeyError(f"no action stored for {pair}")
        return self.actions[pair]

    def weight_dims(self) -> CharacterTable:
        return {weights.shift(w): len(ix) for w, ix in self.weight_index.items()}


def simple_quotient(n: int, lam_shifted: weights.Weight, field=QQ) -> FiniteWeightModule:
    """The finite-dimensional simple quotient of the highest-weight module.

    Requires a strictly decreasing shifted weight (regular dominant). Builds
    the depth window down to the lowest weight, finds all singular vectors
    (common kernel of the simple raising operators below the top), closes
    them under lowering operators, and quotients.
    """
    lam_shifted = tuple(lam_shifted)
    if list(lam_shifted) != sorted(lam_shifted, reverse=True) or len(set(lam_shifted)) != n:
        raise ValueError(f"shifted weight {lam_shifted} must be strictly decreasing")
    lowest = tuple(sorted(lam_shifted))
    drop = tuple(a - b for a, b in zip(lam_shifted, lowest))
    depth = weights.root_height(drop)
    assert depth is not None
    verma = TruncatedVerma(n, lam_shifted, depth, field)

    simple_raisings = [(i, i + 1) for i in range(1, n)]
    raising_mats = {g: verma.action(g) for g in simple_raisings}

    spans: dict[weights.Weight, list[tuple[int, dict[int, object]]]] = {}

    def reduce_vec(w: weights.Weight, vec: dict[int, object]) -> dict[int, object]:
        for pivot, row in spans.get(w, []):
            cv = vec.get(pivot)
            if cv is not None and not field.is_zero(cv):
                for idx, rv in row.items():
                    nv = field.sub(vec.get(idx, field.zero()), field.mul(cv, rv))
                    if field.is_zero(nv):
                        vec.pop(idx, None)
                    else:
                        vec[idx] = nv
            else:
                vec.pop(pivot, None)
        return {i: v for i, v in vec.items() if not field.is_zero(v)}

    def insert_vec(w: weights.Weight, vec: dict[int, object]) -> bool:
        vec = reduce_vec(w, vec)
        if not vec:
            return False
        pivot = min(vec)
        inv = field.inv(vec[pivot])
        row = {i: field.mul(inv, v) for i, v in vec.items()}
        spans.setdefault(w, []).append((pivot, row))
        spans[w].sort(key=lambda pr: pr[0])
        return True

    queue: list[tuple[weights.Weight, dict[int, object]]] = []
    for w, members in verma.weight_index.items():
        if w == verma.lam:
            continue
        rows = []
        row_offset = 0
        for g in simple_raisings:
            mat = raising_mats[g]
            for k, col in enumerate(members):
                for row_idx, v in mat.column(col).items():
                    rows.append((row_offset + row_idx, k, v))
            row_offset += verma.dim
        stacked = SparseMatrix.from_triples(row_offset, len(members), rows)
        for kernel_vec in nullspace(stacked, field):
            vec = {members[k]: v for k, v in enumerate(kernel_vec) if not field.is_zero(v)}
            if vec:
                queue.append((w, vec))

    lowering_mats = {g: verma.action(g) for g in verma.gens_low}
    lowering_cols = {
        g: {j: m.column(j) for j in range(verma.dim)} for g, m in lowering_mats.items()
    }
    while queue:
        w, vec = queue.pop()
        if not insert_vec(w, dict(vec)):
            continue
        for g in verma.gens_low:
            img: dict[int, object] = {}
            for idx, c in vec.items():
                for row_idx, v in lowering_cols[g][idx].items():
                    nv = field.add(img.get(row_idx, field.zero()), field.mul(c, v))
                    if field.is_zero(nv):
                        img.pop(row_idx, None)
                    else:
                        img[row_idx] = nv
            if img:
                any_idx = next(iter(img))
                queue.append((verma.basis_weight[any_idx], img))

    pivots = {pivot for rows in spans.values() for pivot, _ in rows}
    kept = [k for k in range(verma.dim) if k not in pivots]
    new_index = {old: new for new, old in enumerate(kept)}
    basis_weight = tuple(verma.basis_weight[k] for k in kept)

    actions: dict[Pair, SparseMatrix] = {}
    for pair in liealg.gl(n).pairs:
        mat = verma.action(pair)
        triples = []
        for old in kept:
            img = dict(mat.column(old))
            if img:
                some = next(iter(img))
                img = reduce_vec(verma.basis_weight[some], img)
            for row_idx, v in img.items():
                assert row_idx in new_index, "reduced vector touched a pivot"
                triples.append((new_index[row_idx], new_index[old], v))
        actions[pair] = SparseMatrix.from_triples(len(kept), len(kept), triples)
    return FiniteWeightModule(n=n, field=field, basis_weight=basis_weight, actions=actions)
