"""Finite-dimensional algebras over F_p: structure constants, quiver frontend.

An Algebra is given by a structure-constant tensor c with
b_i * b_j = sum_k c[i,j,k] b_k, a unit vector, designated orthogonal
idempotents e_1..e_n summing to 1, and a basis of the Jacobson radical.
The radical is supplied (quiver frontend: the arrow ideal), never computed;
validation checks the ideal property and nilpotency only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, List, Tuple

import numpy as np

from . import linalg
from .errors import (
    BadIdempotents,
    BadUnit,
    NonAssociative,
    PathExplosion,
    RadicalNotIdeal,
    RadicalNotNilpotent,
    RelationNotLengthHomogeneous,
)

DEFAULT_BASIS_CAP = 512


@dataclass(eq=False)
class Algebra:
    char: int
    dim: int
    basis_labels: Tuple[str, ...]
    mult: np.ndarray  # shape (d, d, d); b_i * b_j = sum_k mult[i, j, k] b_k
    unit: np.ndarray  # shape (d,)
    idempotents: Tuple[np.ndarray, ...]
    radical_basis: Tuple[np.ndarray, ...]
    name: str = ""

    def __post_init__(self):
        p = self.char
        self.mult = linalg.normalize(self.mult, p)
        self.unit = linalg.normalize(self.unit, p)
        self.idempotents = tuple(linalg.normalize(e, p) for e in self.idempotents)
        self.radical_basis = tuple(linalg.normalize(r, p) for r in self.radical_basis)
        self._cache: Dict = {}

    @property
    def n_idempotents(self) -> int:
        return len(self.idempotents)

    def multiply(self, x, y) -> np.ndarray:
        p = self.char
        x = linalg.normalize(x, p)
        y = linalg.normalize(y, p)
        return np.einsum("i,j,ijk->k", x, y, self.mult) % p

    def left_mult_matrix(self, x) -> np.ndarray:
        """Matrix of y -> x*y in the algebra basis."""
        x = linalg.normalize(x, self.char)
        return np.einsum("i,ijk->kj", x, self.mult) % self.char

    def right_mult_matrix(self, x) -> np.ndarray:
        """Matrix of y -> y*x in the algebra basis."""
        x = linalg.normalize(x, self.char)
        return np.einsum("j,ijk->ki", x, self.mult) % self.char

    def radical_matrix(self) -> np.ndarray:
        """Radical basis vectors as columns (d x r)."""
        if not self.radical_basis:
            return linalg.zeros(self.dim, 0)
        return np.stack(self.radical_basis, axis=1)

    def data_equals(self, other: "Algebra") -> bool:
        return (
            self.char == other.char
            and self.dim == other.dim
            and np.array_equal(self.mult, other.mult)
            and np.array_equal(self.unit, other.unit)
            and len(self.idempotents) == len(other.idempotents)
            and all(np.array_equal(a, b) for a, b in zip(self.idempotents, other.idempotents))
            and len(self.radical_basis) == len(other.radical_basis)
            and all(np.array_equal(a, b) for a, b in zip(self.radical_basis, other.radical_basis))
        )

    def __repr__(self):
        return f"Algebra({self.name or 'anon'}, dim={self.dim}, char={self.char})"


def same_algebra(a: Algebra, b: Algebra) -> bool:
    return a is b or a.data_equals(b)


def validate_algebra(a: Algebra) -> Algebra:
    """Check all Algebra invariants; raises pinpointing the first violation."""
    p, d = a.char, a.dim
    c = a.mult
    if c.shape != (d, d, d):
        raise NonAssociative(("shape", c.shape))
    # associativity: (b_i b_j) b_k == b_i (b_j b_k) on all basis triples
    left = np.einsum("ijs,skl->ijkl", c, c) % p
    right = np.einsum("jks,isl->ijkl", c, c) % p
    if not np.array_equal(left, right):
        bad = np.argwhere(left != right)[0]
        raise NonAssociative(tuple(int(x) for x in bad[:3]))
    # unit
    if not np.array_equal(a.left_mult_matrix(a.unit), linalg.eye(d)):
        raise BadUnit("unit is not a left identity")
    if not np.array_equal(a.right_mult_matrix(a.unit), linalg.eye(d)):
        raise BadUnit("unit is not a right identity")
    # idempotents: orthogonal, idempotent, summing to 1
    n = a.n_idempotents
    for i in range(n):
        for j in range(n):
            prod = a.multiply(a.idempotents[i], a.idempotents[j])
            expect = a.idempotents[i] if i == j else np.zeros(d, dtype=np.int64)
            if not np.array_equal(prod, expect):
                raise BadIdempotents((i, j))
    total = np.zeros(d, dtype=np.int64)
    for e in a.idempotents:
        total = (total + e) % p
    if not np.array_equal(total, a.unit):
        raise BadIdempotents((-1, -1), "idempotents do not sum to the unit")
    # radical: two-sided ideal, nilpotent
    rad = a.radical_matrix()
    if rad.shape[1]:
        for i in range(d):
            basis_vec = np.zeros(d, dtype=np.int64)
            basis_vec[i] = 1
            lm = linalg.matmul(a.left_mult_matrix(basis_vec), rad, p)
            rm = linalg.matmul(a.right_mult_matrix(basis_vec), rad, p)
            if not linalg.in_span(rad, lm, p):
                raise RadicalNotIdeal(f"b_{i} * rad not contained in rad")
            if not linalg.in_span(rad, rm, p):
                raise RadicalNotIdeal(f"rad * b_{i} not contained in rad")
        span = rad
        for power in range(2, d + 2):
            prods = []
            for col in range(span.shape[1]):
                prods.append(linalg.matmul(a.left_mult_matrix(span[:, col]), rad, p))
            span = linalg.column_space_basis(np.concatenate(prods, axis=1), p) if prods else span
            if span.shape[1] == 0:
                break
        else:
            raise RadicalNotNilpotent(d + 1)
        if span.shape[1] != 0:
            raise RadicalNotNilpotent(d + 1)
    return a


def opposite_algebra(a: Algebra) -> Algebra:
    """Opposite algebra (mult tensor transposed); an exact involution."""
    cached = a._cache.get("opposite")
    if cached is not None:
        return cached
    op = Algebra(
        char=a.char,
        dim=a.dim,
        basis_labels=a.basis_labels,
        mult=np.swapaxes(a.mult, 0, 1).copy(),
        unit=a.unit,
        idempotents=a.idempotents,
        radical_basis=a.radical_basis,
        name=(a.name[:-3] if a.name.endswith("^op") else a.name + "^op"),
    )
    a._cache["opposite"] = op
    op._cache["opposite"] = a
    return op


@dataclass
class QuiverPresentation:
    vertices: List[str]
    arrows: List[Tuple[str, str, str]]  # (label, source, target)
    relations: List[List[Tuple[List[str], int]]]  # [(path as arrow labels, coeff)]
    nilpotency_bound: int  # all paths of length >= L vanish

    def validate(self):
        if self.nilpotency_bound < 2:
            raise RelationNotLengthHomogeneous("nilpotency bound must be >= 2")
        arrow_map = {lab: (s, t) for lab, s, t in self.arrows}
        for rel in self.relations:
            if not rel:
                raise RelationNotLengthHomogeneous("empty relation")
            sigs = set()
            for path, _coeff in rel:
                if len(path) < 2:
                    raise RelationNotLengthHomogeneous("relation path shorter than 2")
                for lab in path:
                    if lab not in arrow_map:
                        raise RelationNotLengthHomogeneous(f"unknown arrow {lab!r}")
                for x, y in zip(path, path[1:]):
                    if arrow_map[x][1] != arrow_map[y][0]:
                        raise RelationNotLengthHomogeneous(f"path {path} not composable")
                sigs.add((len(path), arrow_map[path[0]][0], arrow_map[path[-1]][1]))
            if len(sigs) != 1:
                raise RelationNotLengthHomogeneous("relation mixes lengths or endpoints")


def _paths_by_length(q: QuiverPresentation, cap: int):
    """Composable arrow-label tuples by length, in application order."""
    arrow_map = {lab: (s, t) for lab, s, t in q.arrows}
    by_len: List[List[Tuple[str, ...]]] = [[tuple([v]) for v in q.vertices]]
    total = len(q.vertices)
    for length in range(1, q.nilpotency_bound):
        if length == 1:
            layer = [(lab,) for lab, _s, _t in q.arrows]
        else:
            layer = []
            for prev in by_len[-1]:
                tgt = arrow_map[prev[-1]][1]
                for lab, s, _t in q.arrows:
                    if s == tgt:
                        layer.append(prev + (lab,))
        total += len(layer)
        if total > cap:
            raise PathExplosion(f"path basis would exceed cap {cap}")
        by_len.append(sorted(set(layer)))
    return by_len, arrow_map


def algebra_from_quiver(q: QuiverPresentation, basis_cap: int = DEFAULT_BASIS_CAP,
                        char: int = 2, name: str = "") -> Algebra:
    """Bound quiver algebra kQ/(relations + paths of length >= L) over F_p.

    Paths are stored in application order (first arrow first); the product
    p*q composes q first, so left modules A e_v live on paths starting at v.
    Relations must be length-homogeneous, which lets the quotient basis be
    computed length by length by plain linear elimination.
    """
    q.validate()
    p = char
    by_len, arrow_map = _paths_by_length(q, basis_cap)
    L = q.nilpotency_bound

    def path_src(path, length):
        if length == 0:
            return path[0]
        return arrow_map[path[0]][0]

    def path_tgt(path, length):
        if length == 0:
            return path[0]
        return arrow_map[path[-1]][1]

    # group relations by length
    rel_by_len: Dict[int, List[List[Tuple[Tuple[str, ...], int]]]] = {}
    for rel in q.relations:
        length = len(rel[0][0])
        rel_by_len.setdefault(length, []).append(
            [(tuple(path), coeff) for path, coeff in rel]
        )

    # per length: surviving paths + rewrite of every path into survivors
    surviving: List[List[Tuple[str, ...]]] = []
    rewrite: List[Dict[Tuple[str, ...], np.ndarray]] = []
    for length in range(L):
        paths = by_len[length]
        index = {pa: i for i, pa in enumerate(paths)}
        # ideal elements of this length: u * rel * v with v applied first
        ideal_rows = []
        for rl in range(2, length + 1):
            for rel in rel_by_len.get(rl, []):
                pad = length - rl
                for lv in range(pad + 1):
                    lu = pad - lv
                    pre_paths = by_len[lv] if lv else [()]
                    post_paths = by_len[lu] if lu else [()]
                    for pre in pre_paths:
                        for post in post_paths:
                            row = np.zeros(len(paths), dtype=np.int64)
                            for rel_path, coeff in rel:
                                full = _pad_path(pre, rel_path, post, arrow_map)
                                if full is not None and full in index:
                                    row[index[full]] = (row[index[full]] + coeff) % p
                            if row.any():
                                ideal_rows.append(row)
        if ideal_rows:
            mat = np.stack(ideal_rows)
            red, pivots = linalg.rref(mat, p)
            pivset = set(pivots)
            surv = [paths[i] for i in range(len(paths)) if i not in pivset]
            surv_idx = {pa: i for i, pa in enumerate(surv)}
            rw: Dict[Tuple[str, ...], np.ndarray] = {}
            for pa in surv:
                v = np.zeros(len(surv), dtype=np.int64)
                v[surv_idx[pa]] = 1
                rw[pa] = v
            for row_i, pc in enumerate(pivots):
                v = np.zeros(len(surv), dtype=np.int64)
                for j in range(len(paths)):
                    if j not in pivset and red[row_i, j]:
                        v[surv_idx[paths[j]]] = (-red[row_i, j]) % p
                rw[paths[pc]] = v
        else:
            surv = list(paths)
            surv_idx = {pa: i for i, pa in enumerate(surv)}
            rw = {}
            for pa in surv:
                v = np.zeros(len(surv), dtype=np.int64)
                v[surv_idx[pa]] = 1
                rw[pa] = v
        surviving.append(surv)
        rewrite.append(rw)

    basis: List[Tuple[int, Tuple[str, ...]]] = []
    for length in range(L):
        for pa in surviving[length]:
            basis.append((length, pa))
    d = len(basis)
    basis_index = {b: i for i, b in enumerate(basis)}

    def label(length, pa):
        if length == 0:
            return f"e_{pa[0]}"
        return "*".join(pa)

    mult = np.zeros((d, d, d), dtype=np.int64)
    for i, (li, pi) in enumerate(basis):
        for j, (lj, pj) in enumerate(basis):
            # product b_i * b_j: apply pj first, then pi
            if path_src(pi, li) != path_tgt(pj, lj):
                continue
            length = li + lj
            if length >= L:
                continue
            if li == 0:
                full = pj
            elif lj == 0:
                full = pi
            else:
                full = pj + pi
            vec = rewrite[length].get(full)
            if vec is None:
                continue
            for k_local, coeff in enumerate(vec):
                if coeff:
                    mult[i, j, basis_index[(length, surviving[length][k_local])]] = coeff

    unit = np.zeros(d, dtype=np.int64)
    idempotents = []
    for v in q.vertices:
        e = np.zeros(d, dtype=np.int64)
        e[basis_index[(0, (v,))]] = 1
        idempotents.append(e)
        unit = (unit + e) % p
    radical = []
    for i, (li, pi) in enumerate(basis):
        if li >= 1:
            r = np.zeros(d, dtype=np.int64)
            r[i] = 1
            radical.append(r)

    a = Algebra(
        char=p,
        dim=d,
        basis_labels=tuple(label(li, pa) for li, pa in basis),
        mult=mult,
        unit=unit,
        idempotents=tuple(idempotents),
        radical_basis=tuple(radical),
        name=name,
    )
    return validate_algebra(a)


def _pad_path(pre, rel_path, post, arrow_map):
    """Application-order concatenation pre + rel + post, or None if not composable."""
    parts = [part for part in (pre, tuple(rel_path), post) if part]
    for a_part, b_part in zip(parts, parts[1:]):
        if arrow_map[a_part[-1]][1] != arrow_map[b_part[0]][0]:
            return None
    out: Tuple[str, ...] = ()
    for part in parts:
        out += part
    return out
