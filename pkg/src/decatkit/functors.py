"""Merge/split operator matrices on tensor products of exterior powers.

Fix k and a signature (a_1, ..., a_m) of block weights with 1 <= a_i <= k.
The associated space is the tensor product of the exterior powers Lambda^{a_i}
of a k-dimensional space, with basis indexed by tuples of sorted subsets
S_i of {1..k} with |S_i| = a_i, subsets in lexicographic order, tuples in
row-major mixed radix (first block most significant).

The local merge Lambda^a (x) Lambda^b -> Lambda^(a+b) sends e_S (x) e_T to 0
when the subsets meet and to t^inv(S,T) e_(S u T) otherwise, where inv counts
pairs (s, t) in S x T with s > t and t is the formal shift variable. Split is
its transpose. The shifted merge divides by t^(2d) where d is the nilradical
dimension lost by merging the two blocks (d = a_i * a_(i+1)); the exponent is
computed from the block data, not hard-coded.

Words of moves are evaluated left to right (the first move acts first), so
`evaluate` returns the product of the move matrices in reverse word order.
Word syntax: merge(i), split(i;b,c), shift(m), ins(i), del(i), with 1-based
block positions; ins inserts a full block (weight k, a one-dimensional
factor) at position i, del removes one.
"""

from __future__ import annotations

import dataclasses
import itertools
import re

from decatkit import liealg
from decatkit.exactlin import LaurentPoly, SparseMatrix, geometric_shift_sum

Sig = tuple[int, ...]
Move = tuple


def wedge_subsets(k: int, a: int) -> list[tuple[int, ...]]:
    return list(itertools.combinations(range(1, k + 1), a))


def sig_dims(k: int, sig: Sig) -> list[int]:
    for a in sig:
        if not (1 <= a <= k):
            raise ValueError(f"block weight {a} outside 1..{k}")
    return [len(wedge_subsets(k, a)) for a in sig]


def sig_dim(k: int, sig: Sig) -> int:
    out = 1
    for d in sig_dims(k, sig):
        out *= d
    return out


def identity_matrix(k: int, sig: Sig) -> SparseMatrix:
    return SparseMatrix.identity(sig_dim(k, sig), LaurentPoly.one())


def _inv(s: tuple[int, ...], t: tuple[int, ...]) -> int:
    return sum(1 for x in s for y in t if x > y)


def local_merge(k: int, a: int, b: int) -> SparseMatrix:
    """Lambda^a (x) Lambda^b -> Lambda^(a+b) over LaurentPoly."""
    if a + b > k:
        raise ValueError(f"cannot merge weights {a} + {b} > {k}")
    rows = {s: i for i, s in enumerate(wedge_subsets(k, a + b))}
    lefts = wedge_subsets(k, a)
    rights = wedge_subsets(k, b)
    entries = {}
    for i, s in enumerate(lefts):
        for j, t in enumerate(rights):
            if set(s) & set(t):
                continue
            target = tuple(sorted(s + t))
            entries[(rows[target], i * len(rights) + j)] = LaurentPoly.t_power(_inv(s, t))
    return SparseMatrix(len(rows), len(lefts) * len(rights), entries)


def _embed(k: int, sig: Sig, pos: int, span: int, local: SparseMatrix, new_blocks: Sig) -> tuple[SparseMatrix, Sig]:
    """Apply `local` to blocks [pos, pos+span) of sig (0-based), identity elsewhere."""
    dims = sig_dims(k, sig)
    left = 1
    for d in dims[:pos]:
        left *= d
    right = 1
    for d in dims[pos + span :]:
        right *= d
    mat = SparseMatrix.identity(left, LaurentPoly.one()).kron(local)
    mat = mat.kron(SparseMatrix.identity(right, LaurentPoly.one()))
    new_sig = sig[:pos] + new_blocks + sig[pos + span :]
    return mat, new_sig


def merge_matrix(k: int, sig: Sig, i: int) -> tuple[SparseMatrix, Sig]:
    """Merge blocks i and i+1 (1-based)."""
    if not (1 <= i < len(sig)):
        raise ValueError(f"no block pair at position {i} in signature {sig}")
    a, b = sig[i - 1], sig[i]
    return _embed(k, sig, i - 1, 2, local_merge(k, a, b), (a + b,))


def split_matrix(k: int, sig: Sig, i: int, parts: tuple[int, int]) -> tuple[SparseMatrix, Sig]:
    """Split block i (1-based) into the two given weights; transpose of merge."""
    if not (1 <= i <= len(sig)):
        raise ValueError(f"no block at position {i} in signature {sig}")
    b, c = parts
    if b + c != sig[i - 1] or b <= 0 or c <= 0:
        raise ValueError(f"parts {parts} do not split block weight {sig[i - 1]}")
    return _embed(k, sig, i - 1, 1, local_merge(k, b, c).transpose(), (b, c))


def merge_shift_exponent(sig: Sig, i: int) -> int:
    """Nilradical dimension lost by merging blocks i, i+1 of the composition."""
    finer = liealg.ParabolicData(sig)
    coarser = finer.merge_adjacent(i - 1)
    return liealg.nilradical_dim_difference(finer, coarser)


def merge_matrix_shifted(k: int, sig: Sig, i: int) -> tuple[SparseMatrix, Sig]:
    """Merge normalized by t^(-2d), d the nilradical dimension difference."""
    mat, new_sig = merge_matrix(k, sig, i)
    d = merge_shift_exponent(sig, i)
    return mat.scaled(LaurentPoly.t_power(-2 * d)), new_sig


def insert_full_matrix(k: int, sig: Sig, i: int) -> tuple[SparseMatrix, Sig]:
    """Insert a weight-k block at position i (1-based; len(sig)+1 appends).

    The new factor is one-dimensional, so the matrix is an identity.
    """
    if not (1 <= i <= len(sig) + 1):
        raise ValueError(f"cannot insert at position {i} in signature {sig}")
    new_sig = sig[: i - 1] + (k,) + sig[i - 1 :]
    return SparseMatrix.identity(sig_dim(k, sig), LaurentPoly.one()), new_sig


def delete_full_matrix(k: int, sig: Sig, i: int) -> tuple[SparseMatrix, Sig]:
    """Remove the weight-k block at position i (1-based)."""
    if not (1 <= i <= len(sig)):
        raise ValueError(f"no block at position {i} in signature {sig}")
    if sig[i - 1] != k:
        raise ValueError(f"block {i} has weight {sig[i - 1]}, not {k}")
    new_sig = sig[: i - 1] + sig[i:]
    return SparseMatrix.identity(sig_dim(k, sig), LaurentPoly.one()), new_sig


_MOVE_RE = re.compile(r"^(merge|split|shift|ins|del)\(([-0-9;,\s]*)\)$")


def parse_word(text: str) -> tuple[Move, ...]:
    """Parse a whitespace-separated move word.

    merge(i) | split(i;b,c) | shift(m) | ins(i) | del(i)
    """
    moves: list[Move] = []
    for token in text.split():
        m = _MOVE_RE.match(token)
        if not m:
            raise ValueError(f"bad move token {token!r}")
        kind, argtext = m.group(1), m.group(2)
        args = [int(x) for x in re.split(r"[;,\s]+", argtext.strip()) if x]
        if kind == "split":
            if len(args) != 3:
                raise ValueError(f"split needs (i;b,c), got {token!r}")
            moves.append(("split", args[0], (args[1], args[2])))
        elif kind in ("merge", "ins", "del", "shift"):
            if len(args) != 1:
                raise ValueError(f"{kind} needs one argument, got {token!r}")
            moves.append((kind, args[0]))
        else:
            raise AssertionError(kind)
    return tuple(moves)


def move_matrix(k: int, sig: Sig, move: Move) -> tuple[SparseMatrix, Sig]:
    kind = move[0]
    if kind == "merge":
        return merge_matrix(k, sig, move[1])
    if kind == "kmerge":
        return merge_matrix_shifted(k, sig, move[1])
    if kind == "split":
        return split_matrix(k, sig, move[1], move[2])
    if kind == "ins":
        return insert_full_matrix(k, sig, move[1])
    if kind == "del":
        return delete_full_matrix(k, sig, move[1])
    if kind == "shift":
        dim = sig_dim(k, sig)
        return SparseMatrix.identity(dim, LaurentPoly.t_power(move[1])), sig
    raise ValueError(f"unknown move kind {kind!r}")


def evaluate(k: int, sig: Sig, moves) -> tuple[SparseMatrix, Sig]:
    """Compose move matrices in word order (first move acts first)."""
    if isinstance(moves, str):
        moves = parse_word(moves)
    mat = identity_matrix(k, sig)
    cur = tuple(sig)
    for move in moves:
        step, cur = move_matrix(k, cur, move)
        mat = step @ mat
    return mat, cur


@dataclasses.dataclass
class RelationReport:
    relation: str
    k: int
    ambient: Sig
    offset: int
    holds: bool
    detail: dict

    def to_json(self) -> dict:
        return {
            "relation": self.relation,
            "k": self.k,
            "ambient": list(self.ambient),
            "offset": self.offset,
            "holds": self.holds,
            "detail": self.detail,
        }


RELATION_IDS = ("R1", "R2", "R3", "R4", "R5", "L5")


def core_signature(relation: str, k: int) -> Sig:
    if relation == "R1":
        return (k,)
    if relation == "R2":
        return (2,)
    if relation == "R3":
        return (1, k)
    if relation == "R4":
        return (k, 1, k - 1)
    if relation == "R5":
        return (1, 1, 1)
    if relation == "L5":
        return (2, 1)
    raise ValueError(f"unknown relation {relation!r}; known: {RELATION_IDS}")


def ambient_signatures(relation: str, k: int, max_len: int = 4):
    """All signatures of length <= max_len containing the core contiguously,
    padded by blocks with weights in 1..k. Yields (ambient, offset)."""
    core = core_signature(relation, k)
    budget = max_len - len(core)
    if budget < 0:
        return
    for left_len in range(budget + 1):
        for right_len in range(budget - left_len + 1):
            for left in itertools.product(range(1, k + 1), repeat=left_len):
                for right in itertools.product(range(1, k + 1), repeat=right_len):
                    yield left + core + right, left_len


def verify_relation(relation: str, k: int, ambient: Sig | None = None, offset: int = 0) -> RelationReport:
    """Exact matrix check of one relation on an ambient signature.

    The core block positions are offset+1, offset+2, ... (1-based).
    """
    core = core_signature(relation, k)
    if ambient is None:
        ambient, offset = core, 0
    ambient = tuple(ambient)
    if ambient[offset : offset + len(core)] != core:
        raise ValueError(f"ambient {ambient} does not contain core {core} at offset {offset}")
    o = offset
    ident = identity_matrix(k, ambient)
    detail: dict = {}

    if relation == "R1":
        expected = ident.scaled(geometric_shift_sum(k))
        ok = True
        for parts in ((1, k - 1), (k - 1, 1)):
            got, back = evaluate(k, ambient, [("split", o + 1, parts), ("merge", o + 1)])
            assert back == ambient
            flavor_ok = got == expected
            detail[f"split_{parts[0]}_{parts[1]}"] = flavor_ok
            ok = ok and flavor_ok
        return RelationReport(relation, k, ambient, offset, ok, detail)

    if relation == "R2":
        got, back = evaluate(k, ambient, [("split", o + 1, (1, 1)), ("merge", o + 1)])
        assert back == ambient
        expected = ident.scaled(geometric_shift_sum(2))
        return RelationReport(relation, k, ambient, offset, got == expected, detail)

    if relation == "R3":
        word = [
            ("split", o + 2, (1, k - 1)),
            ("merge", o + 1),
            ("split", o + 1, (1, 1)),
            ("merge", o + 2),
        ]
        got, back = evaluate(k, ambient, word)
        assert back == ambient
        scalar = LaurentPoly.from_dict({2 * i: 1 for i in range(1, k)})
        expected = ident.scaled(scalar)
        return RelationReport(relation, k, ambient, offset, got == expected, detail)

    if relation == "R4":
        word = [
            ("split", o + 1, (k - 1, 1)),
            ("merge", o + 2),
            ("split", o + 2, (1, 1)),
            ("merge", o + 3),
            ("split", o + 3, (1, k - 1)),
            ("merge", o + 2),
            ("split", o + 2, (1, 1)),
            ("merge", o + 1),
        ]
        got, back = evaluate(k, ambient, word)
        assert back == ambient
        bubble, back2 = evaluate(k, ambient, [("merge", o + 2), ("split", o + 2, (1, k - 1))])
        assert back2 == ambient
        coeff = LaurentPoly.from_dict({2 * i: 1 for i in range(2, k)})
        matches = []
        for s in (2 * k - 2, 2 * k):
            expected = ident.scaled(LaurentPoly.t_power(s)) + bubble.scaled(coeff)
            if got == expected:
                matches.append(s)
        detail["normalizations_tested"] = [2 * k - 2, 2 * k]
        detail["normalization_holding"] = matches
        return RelationReport(relation, k, ambient, offset, len(matches) == 1, detail)

    if relation == "R5":
        def e_op(i: int) -> SparseMatrix:
            mat, back = evaluate(k, ambient, [("merge", o + i), ("split", o + i, (1, 1))])
            assert back == ambient
            return mat

        e1, e2 = e_op(1), e_op(2)
        t2 = LaurentPoly.t_power(2)
        lhs = e1 @ e2 @ e1 + e2.scaled(t2)
        rhs = e2 @ e1 @ e2 + e1.scaled(t2)
        return RelationReport(relation, k, ambient, offset, lhs == rhs, detail)

    if relation == "L5":
        word = [
            ("split", o + 1, (1, 1)),
            ("merge", o + 2),
            ("split", o + 2, (1, 1)),
            ("merge", o + 1),
        ]
        got, back = evaluate(k, ambient, word)
        assert back == ambient
        expected = ident.scaled(LaurentPoly.t_power(2))
        if k >= 3:
            bubble, back2 = evaluate(k, ambient, [("merge", o + 1), ("split", o + 1, (2, 1))])
            assert back2 == ambient
            expected = expected + bubble
        detail["triple_block_term"] = k >= 3
        return RelationReport(relation, k, ambient, offset, got == expected, detail)

    raise ValueError(f"unknown relation {relation!r}; known: {RELATION_IDS}")


def verify_relation_everywhere(relation: str, k: int, max_len: int = 4) -> list[RelationReport]:
    return [
        verify_relation(relation, k, ambient, offset)
        for ambient, offset in ambient_signatures(relation, k, max_len)
    ]
