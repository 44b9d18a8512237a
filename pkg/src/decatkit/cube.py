"""Resolution cubes for slice words of cup/cap/crossing diagrams.

A slice word builds an oriented diagram bottom-up, one token per horizontal
slice, with 1-based strand positions:

    cup(i)   create two strands at positions i, i+1: labels (1, k-1),
             orientations (up, down)
    cup'(i)  mirror image: labels (k-1, 1), orientations (down, up)
    cap(i)   close strands at i, i+1; requires labels (1, k-1)
    cap'(i)  close strands at i, i+1; requires labels (k-1, 1)
    pos(i)   crossing, strand i passing over strand i+1; both labels 1
    neg(i)   crossing, strand i passing under strand i+1; both labels 1

An upward strand carries label 1, a downward strand label k-1; at k = 2 the
two labels coincide, which is the only case where cap and cap' both apply to
either orientation pattern. Crossings swap the two strands.

Each crossing resolves two ways. The 0-resolution is the planar smoothing
obtained by turning the over-strand counterclockwise onto the under-strand:
for pos that is the vertical (identity) smoothing, for neg the horizontal
one. The horizontal smoothing of pos carries the shift normalization of the
adjoint pair (merge then shift(-2) then split); for neg it is the unshifted
merge-split. A vertex of the cube is a choice of bit per crossing; its value
is the Laurent-matrix evaluation of the corresponding word of moves.

The sign of a crossing in the oriented sense depends on the strand
orientations: a pos token between parallel strands is a positive crossing,
between antiparallel strands a negative one, and vice versa for neg. The
Euler normalization uses the oriented count n_minus, so the invariant is
(-1)^(n_minus) * sum over vertices of (-1)^(number of 1-bits) * value(t=1).
"""

from __future__ import annotations

import dataclasses
import itertools
import re

from decatkit import functors
from decatkit.exactlin import QQ, FiniteComplex, LaurentPoly, SparseMatrix

TOKEN_RE = re.compile(r"^(cup'|cup|cap'|cap|pos|neg)\((\d+)\)$")

Token = tuple[str, int]


@dataclasses.dataclass
class SliceWord:
    """A parsed, validated slice word."""

    k: int
    text: str
    tokens: tuple[Token, ...]
    crossings: tuple[int, ...]
    crossing_signs: tuple[int, ...]
    final_labels: tuple[int, ...]

    @property
    def n_crossings(self) -> int:
        return len(self.crossings)

    @property
    def n_positive(self) -> int:
        return sum(1 for s in self.crossing_signs if s > 0)

    @property
    def n_negative(self) -> int:
        return sum(1 for s in self.crossing_signs if s < 0)

    @property
    def closed(self) -> bool:
        return not self.final_labels


def parse_slice_word(text: str, k: int) -> SliceWord:
    """Parse and validate a slice word for the given k >= 2."""
    if k < 2:
        raise ValueError(f"need k >= 2, got {k}")
    tokens: list[Token] = []
    labels: list[int] = []
    orients: list[str] = []
    crossings: list[int] = []
    signs: list[int] = []
    for raw in text.split():
        m = TOKEN_RE.match(raw)
        if not m:
            raise ValueError(f"bad token {raw!r}")
        kind, i = m.group(1), int(m.group(2))
        idx = len(tokens)
        tokens.append((kind, i))
        if kind in ("cup", "cup'"):
            if not (1 <= i <= len(labels) + 1):
                raise ValueError(f"token {idx}: cup position {i} outside 1..{len(labels) + 1}")
            if kind == "cup":
                labels[i - 1 : i - 1] = [1, k - 1]
                orients[i - 1 : i - 1] = ["u", "d"]
            else:
                labels[i - 1 : i - 1] = [k - 1, 1]
                orients[i - 1 : i - 1] = ["d", "u"]
        elif kind in ("cap", "cap'"):
            if not (1 <= i < len(labels)):
                raise ValueError(f"token {idx}: cap position {i} outside 1..{len(labels) - 1}")
            want = (1, k - 1) if kind == "cap" else (k - 1, 1)
            got = (labels[i - 1], labels[i])
            if got != want:
                raise ValueError(f"token {idx}: {kind}({i}) needs labels {want}, found {got}")
            if orients[i - 1] == orients[i]:
                raise ValueError(f"token {idx}: cap cannot join two strands oriented the same way")
            del labels[i - 1 : i + 1]
            del orients[i - 1 : i + 1]
        else:
            if not (1 <= i < len(labels)):
                raise ValueError(f"token {idx}: crossing position {i} outside 1..{len(labels) - 1}")
            if labels[i - 1] != 1 or labels[i] != 1:
                raise ValueError(
                    f"token {idx}: crossings need labels (1, 1), found ({labels[i - 1]}, {labels[i]})"
                )
            parallel = orients[i - 1] == orients[i]
            sign = 1 if (kind == "pos") == parallel else -1
            crossings.append(idx)
            signs.append(sign)
            labels[i - 1], labels[i] = labels[i], labels[i - 1]
            orients[i - 1], orients[i] = orients[i], orients[i - 1]
    return SliceWord(
        k=k,
        text=text,
        tokens=tuple(tokens),
        crossings=tuple(crossings),
        crossing_signs=tuple(signs),
        final_labels=tuple(labels),
    )


def _token_moves(kind: str, i: int, k: int, bit: int | None):
    if kind == "cup":
        return [("ins", i), ("split", i, (1, k - 1))]
    if kind == "cup'":
        return [("ins", i), ("split", i, (k - 1, 1))]
    if kind in ("cap", "cap'"):
        return [("merge", i), ("del", i)]
    if kind == "pos":
        return [] if bit == 0 else [("merge", i), ("shift", -2), ("split", i, (1, 1))]
    if kind == "neg":
        return [("merge", i), ("split", i, (1, 1))] if bit == 0 else []
    raise AssertionError(kind)


@dataclasses.dataclass
class Cube:
    """All resolutions of a slice word, with their Laurent matrix values."""

    word: SliceWord
    values: dict[tuple[int, ...], SparseMatrix]
    final_sig: tuple[int, ...]

    @property
    def k(self) -> int:
        return self.word.k

    def vertex_degree(self, bits: tuple[int, ...]) -> int:
        return sum(bits) - self.word.n_negative

    def scalar_values(self) -> dict[tuple[int, ...], LaurentPoly]:
        if not self.word.closed:
            raise ValueError("diagram has open boundary; vertex values are matrices")
        return {
            bits: mat.entries.get((0, 0), LaurentPoly.zero())
            for bits, mat in self.values.items()
        }


def build_cube(word: SliceWord | str, k: int | None = None) -> Cube:
    """Evaluate every resolution of the word, sharing common prefixes."""
    if isinstance(word, str):
        if k is None:
            raise ValueError("k is required when passing a raw word string")
        word = parse_slice_word(word, k)
    k = word.k
    values: dict[tuple[int, ...], SparseMatrix] = {}
    final_sigs: set[tuple[int, ...]] = set()

    def rec(idx: int, sig: tuple[int, ...], mat: SparseMatrix, bits: tuple[int, ...]):
        if idx == len(word.tokens):
            values[bits] = mat
            final_sigs.add(sig)
            return
        kind, i = word.tokens[idx]
        if kind in ("pos", "neg"):
            for bit in (0, 1):
                cur_sig, cur_mat = sig, mat
                for move in _token_moves(kind, i, k, bit):
                    step, cur_sig = functors.move_matrix(k, cur_sig, move)
                    cur_mat = step @ cur_mat
                rec(idx + 1, cur_sig, cur_mat, bits + (bit,))
        else:
            cur_sig, cur_mat = sig, mat
            for move in _token_moves(kind, i, k, None):
                step, cur_sig = functors.move_matrix(k, cur_sig, move)
                cur_mat = step @ cur_mat
            rec(idx + 1, cur_sig, cur_mat, bits)

    rec(0, (), functors.identity_matrix(k, ()), ())
    assert len(final_sigs) == 1
    final_sig = final_sigs.pop()
    assert final_sig == word.final_labels
    return Cube(word=word, values=values, final_sig=final_sig)


def euler_invariant(word: SliceWord | str, k: int | None = None) -> int:
    """Alternating sum of vertex values at t = 1, normalized by n_minus.

    Only closed diagrams have a scalar invariant; open boundary raises, and
    `tangle_alternating_sum` is the matrix-valued companion.
    """
    cube = build_cube(word, k) if not isinstance(word, Cube) else word
    if not cube.word.closed:
        raise ValueError(
            "diagram has open boundary; use tangle_alternating_sum for tangles"
        )
    total = 0
    for bits, poly in cube.scalar_values().items():
        sign = -1 if sum(bits) % 2 else 1
        total += sign * poly.at_one()
    if cube.word.n_negative % 2:
        total = -total
    return total


def tangle_alternating_sum(word: SliceWord | str, k: int | None = None) -> tuple[SparseMatrix, tuple[int, ...]]:
    """Signed sum of vertex matrices for a word with open boundary."""
    cube = build_cube(word, k) if not isinstance(word, Cube) else word
    mats = None
    for bits, mat in cube.values.items():
        signed = mat.scaled(LaurentPoly.const(-1 if sum(bits) % 2 else 1))
        mats = signed if mats is None else mats + signed
    assert mats is not None
    if cube.word.n_negative % 2:
        mats = mats.scaled(LaurentPoly.const(-1))
    return mats, cube.final_sig


def link_components(word: SliceWord | str, k: int | None = None) -> int:
    """Number of link components of the closed diagram."""
    if isinstance(word, str):
        if k is None:
            raise ValueError("k is required when passing a raw word string")
        word = parse_slice_word(word, k)
    if not word.closed:
        raise ValueError("diagram has open boundary")
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    cur: list = []
    nodes = []
    for idx, (kind, i) in enumerate(word.tokens):
        if kind in ("cup", "cup'"):
            a, b = (idx, 0), (idx, 1)
            parent[a] = a
            parent[b] = b
            union(a, b)
            nodes.extend([a, b])
            cur[i - 1 : i - 1] = [a, b]
        elif kind in ("cap", "cap'"):
            union(cur[i - 1], cur[i])
            del cur[i - 1 : i + 1]
        else:
            cur[i - 1], cur[i] = cur[i], cur[i - 1]
    assert not cur
    return len({find(x) for x in nodes})


def _resolution_circles(word: SliceWord, bits: tuple[int, ...]) -> list[frozenset]:
    """Circles of the planar resolution, as frozensets of strand segments.

    A segment id (idx, pos) names the piece of strand pos (0-based) in the
    gap directly above token idx. Every token refreshes all ids, so segments
    are shared verbatim between resolutions and only their connectivity
    depends on the bits: adjacent resolutions then differ by an exact union
    (merge) or an exact partition (split) of circle sets.
    """
    bit_of = dict(zip(word.crossings, bits))
    parent: dict = {}

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(x, y):
        parent[find(x)] = find(y)

    cur: list = []
    for idx, (kind, i) in enumerate(word.tokens):
        if kind in ("cup", "cup'"):
            width = len(cur) + 2
            paired = (i - 1, i)
        elif kind in ("cap", "cap'"):
            width = len(cur) - 2
            union(cur[i - 1], cur[i])
            del cur[i - 1 : i + 1]
            paired = ()
        else:
            width = len(cur)
            horizontal = (kind == "pos") == (bit_of[idx] == 1)
            if horizontal:
                union(cur[i - 1], cur[i])
                paired = (i - 1, i)
            else:
                paired = ()
        fresh = [(idx, pos) for pos in range(width)]
        for seg in fresh:
            parent[seg] = seg
        if kind in ("cup", "cup'"):
            straight = list(zip(cur, fresh[: i - 1] + fresh[i + 1 :]))
        elif paired:
            straight = [(old, new) for pos, (old, new) in enumerate(zip(cur, fresh)) if pos not in paired]
        else:
            straight = list(zip(cur, fresh))
        for old, new in straight:
            union(old, new)
        for a, b in zip(paired, paired[1:]):
            union(fresh[a], fresh[b])
        cur = fresh
    assert not cur
    groups: dict = {}
    for x in parent:
        groups.setdefault(find(x), []).append(x)
    return [frozenset(g) for g in groups.values()]


def khovanov_homology_k2(word: SliceWord | str, field=QQ) -> dict[int, int]:
    """Homology dimensions of the k = 2 rank-one Frobenius cube.

    Vertex state spaces are tensor powers of the two-dimensional algebra
    A = span(1, x) with x^2 = 0, one factor per circle of the resolution;
    edges apply multiplication or comultiplication on the circles changed by
    flipping one crossing, with the usual alternating edge signs. Degrees are
    shifted down by the oriented negative crossing count. Valid only for
    k = 2, where vertex values are determined by circle counts.
    """
    if isinstance(word, str):
        word = parse_slice_word(word, 2)
    if word.k != 2:
        raise ValueError(f"the Frobenius cube oracle is defined for k = 2, got k = {word.k}")
    if not word.closed:
        raise ValueError("diagram has open boundary")
    nc = word.n_crossings
    vertices = list(itertools.product((0, 1), repeat=nc))
    circles = {v: sorted(_resolution_circles(word, v), key=min) for v in vertices}

    offsets: dict[tuple[int, ...], int] = {}
    degree_dims: dict[int, int] = {}
    for v in vertices:
        h = sum(v)
        offsets[v] = degree_dims.get(h, 0)
        degree_dims[h] = degree_dims.get(h, 0) + (1 << len(circles[v]))

    entries_by_degree: dict[int, dict[tuple[int, int], object]] = {h: {} for h in range(nc)}
    one = field.of(1)
    for v in vertices:
        for c in range(nc):
            if v[c] == 1:
                continue
            w = v[:c] + (1,) + v[c + 1 :]
            sign = field.of(-1 if sum(v[:c]) % 2 else 1)
            cv, cw = circles[v], circles[w]
            common = set(cv) & set(cw)
            src_special = [s for s in cv if s not in common]
            dst_special = [s for s in cw if s not in common]
            src_pos = {s: t for t, s in enumerate(cv)}
            dst_pos = {s: t for t, s in enumerate(cw)}
            if len(src_special) == 2 and len(dst_special) == 1:
                mode = "merge"
            elif len(src_special) == 1 and len(dst_special) == 2:
                mode = "split"
            else:
                raise AssertionError("flipping one crossing must merge or split exactly one pair")
            h = sum(v)
            ent = entries_by_degree[h]
            for assign in itertools.product((0, 1), repeat=len(cv)):
                col = offsets[v] + sum(b << t for t, b in enumerate(assign))
                images: list[dict] = []
                if mode == "merge":
                    a = assign[src_pos[src_special[0]]]
                    b = assign[src_pos[src_special[1]]]
                    if a + b == 2:
                        continue
                    images.append({dst_special[0]: a + b})
                else:
                    a = assign[src_pos[src_special[0]]]
                    if a == 0:
                        images.append({dst_special[0]: 1, dst_special[1]: 0})
                        images.append({dst_special[0]: 0, dst_special[1]: 1})
                    else:
                        images.append({dst_special[0]: 1, dst_special[1]: 1})
                for image in images:
                    out_bits = 0
                    for s in cw:
                        bit = image[s] if s in image else assign[src_pos[s]]
                        out_bits |= bit << dst_pos[s]
                    row = offsets[w] + out_bits
                    key = (row, col)
                    cur = ent.get(key)
                    newv = field.mul(sign, one) if cur is None else field.add(cur, field.mul(sign, one))
                    if field.is_zero(newv):
                        ent.pop(key, None)
                    else:
                        ent[key] = newv

    dims = tuple(degree_dims.get(h, 0) for h in range(nc + 1))
    maps = tuple(
        SparseMatrix(dims[h + 1], dims[h], entries_by_degree[h]) for h in range(nc)
    )
    cx = FiniteComplex(
        field=field,
        dims=dims,
        maps=maps,
        degrees=tuple(h - word.n_negative for h in range(nc + 1)),
    )
    return {deg: dim for deg, dim in cx.homology_dims().items() if dim}


def oracle_euler_k2(word: SliceWord | str) -> int:
    """Euler number from circle counts; valid only at k = 2."""
    if isinstance(word, str):
        word = parse_slice_word(word, 2)
    if word.k != 2:
        raise ValueError("circle counting only computes the k = 2 value")
    total = 0
    for bits in itertools.product((0, 1), repeat=word.n_crossings):
        count = len(_resolution_circles(word, bits))
        total += (-1 if sum(bits) % 2 else 1) * (1 << count)
    if word.n_negative % 2:
        total = -total
    return total


def reidemeister_check(word_a: str, word_b: str, k: int, field=QQ) -> bool:
    """True when both words give the same invariants: the Euler number for
    any k, plus the full cube homology at k = 2."""
    wa, wb = parse_slice_word(word_a, k), parse_slice_word(word_b, k)
    if euler_invariant(wa) != euler_invariant(wb):
        return False
    if k == 2:
        return khovanov_homology_k2(wa, field) == khovanov_homology_k2(wb, field)
    return True


DIAGRAMS: dict[str, str] = {
    "unknot": "cup(1) cap(1)",
    "unknot_mirror": "cup'(1) cap'(1)",
    "unlink2": "cup'(1) cup(3) cap(3) cap'(1)",
    "kink_positive": "cup'(1) cup(3) pos(2) cap(3) cap'(1)",
    "kink_negative": "cup'(1) cup(3) neg(2) cap(3) cap'(1)",
    "twist_pair": "cup'(1) cup(3) pos(2) neg(2) cap(3) cap'(1)",
    "braid121": "cup'(1) cup'(2) cup'(3) pos(4) pos(5) pos(4) cap'(3) cap'(2) cap'(1)",
    "braid212": "cup'(1) cup'(2) cup'(3) pos(5) pos(4) pos(5) cap'(3) cap'(2) cap'(1)",
    "hopf": "cup'(1) cup(3) pos(2) pos(2) cap(3) cap'(1)",
    "trefoil": "cup'(1) cup(3) pos(2) pos(2) pos(2) cap(3) cap'(1)",
    "figure_eight": "cup'(1) cup'(2) cup'(3) pos(4) neg(5) pos(4) neg(5) cap'(3) cap'(2) cap'(1)",
    "torus_2_6": "cup'(1) cup(3) pos(2) pos(2) pos(2) pos(2) pos(2) pos(2) cap(3) cap'(1)",
    "torus_2_8": (
        "cup'(1) cup(3) pos(2) pos(2) pos(2) pos(2) pos(2) pos(2) pos(2) pos(2) cap(3) cap'(1)"
    ),
}

# Pairs of words related by one framed move, valid for every k >= 2.
MOVE_PAIRS: list[tuple[str, str, str]] = [
    ("R1_positive_kink", "unknot", "kink_positive"),
    ("R1_negative_kink", "unknot", "kink_negative"),
    ("R2_twist_cancel", "unlink2", "twist_pair"),
    ("R3_braid_relation", "braid121", "braid212"),
]
