"""Z2-graded linear algebra over Q(zeta_r) with the Koszul sign rule.

Bases are always ordered even part first, then odd part.  A tensor product
of spaces enumerates basis tuples lexicographically and regrades them into
(even, odd) blocks; every map records the factor list of its source and
target, and n-ary tensors of maps are always formed over the flat factor
lists so that no associator bookkeeping is ever needed.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .scalars import Cyc, as_cyc


class SuperLinAlgError(ValueError):
    pass


@dataclass(frozen=True)
class SuperSpace:
    even: int
    odd: int

    @property
    def dim(self):
        return self.even + self.odd

    def parity(self, index):
        return 0 if index < self.even else 1

    def __repr__(self):
        return "(%d|%d)" % (self.even, self.odd)


UNIT_SPACE = SuperSpace(1, 0)


def graded_tuples(spaces):
    """Basis tuples of a flat tensor product, evens (lex) then odds (lex)."""
    pools = [range(s.dim) for s in spaces]
    evens, odds = [], []
    for combo in itertools.product(*pools):
        parity = sum(s.parity(i) for s, i in zip(spaces, combo)) % 2
        (evens if parity == 0 else odds).append(combo)
    return evens + odds


def tensor_space(*spaces):
    total = 1
    odd_total = 0
    for combo in itertools.product(*[range(s.dim) for s in spaces]):
        parity = sum(s.parity(i) for s, i in zip(spaces, combo)) % 2
        odd_total += parity
    for s in spaces:
        total *= s.dim
    return SuperSpace(total - odd_total, odd_total)


class SuperMap:
    """Parity-homogeneous linear map in the fixed graded bases.

    rows[i][j] is the coefficient of target basis vector i in the image of
    source basis vector j.  Block structure is enforced: an entry may be
    nonzero only if parity(target i) = parity(source j) + parity(map).
    """

    __slots__ = ("source", "target", "parity", "rows", "source_factors", "target_factors")

    def __init__(self, source, target, parity, rows, source_factors=None, target_factors=None):
        self.source = source
        self.target = target
        self.parity = parity % 2
        if len(rows) != target.dim or any(len(r) != source.dim for r in rows):
            raise SuperLinAlgError("matrix shape does not match spaces")
        self.rows = [[as_cyc(x) for x in row] for row in rows]
        for i in range(target.dim):
            for j in range(source.dim):
                if self.rows[i][j] and (target.parity(i) != (source.parity(j) + self.parity) % 2):
                    raise SuperLinAlgError(
                        "entry (%d,%d) violates the parity block structure" % (i, j)
                    )
        self.source_factors = tuple(source_factors) if source_factors is not None else (source,)
        self.target_factors = tuple(target_factors) if target_factors is not None else (target,)
        if tensor_space(*self.source_factors) != source:
            raise SuperLinAlgError("declared source factors do not multiply out to the source")
        if tensor_space(*self.target_factors) != target:
            raise SuperLinAlgError("declared target factors do not multiply out to the target")

    # -- construction helpers ------------------------------------------------

    @staticmethod
    def zero(source, target, parity=0, source_factors=None, target_factors=None):
        rows = [[Cyc.zero() for _ in range(source.dim)] for _ in range(target.dim)]
        return SuperMap(source, target, parity, rows, source_factors, target_factors)

    @staticmethod
    def from_scalar(value):
        return SuperMap(UNIT_SPACE, UNIT_SPACE, 0, [[as_cyc(value)]])

    def clone_with(self, source=None, target=None, source_factors=None, target_factors=None):
        return SuperMap(
            source or self.source,
            target or self.target,
            self.parity,
            self.rows,
            source_factors if source_factors is not None else self.source_factors,
            target_factors if target_factors is not None else self.target_factors,
        )

    # -- algebra -------------------------------------------------------------

    def __mul__(self, other):
        if isinstance(other, SuperMap):
            return compose(self, other)
        return self.scale(other)

    def __rmul__(self, scalar):
        return self.scale(scalar)

    def scale(self, scalar):
        scalar = as_cyc(scalar)
        rows = [[scalar * x for x in row] for row in self.rows]
        return SuperMap(self.source, self.target, self.parity, rows,
                        self.source_factors, self.target_factors)

    def __add__(self, other):
        if (self.source.dim, self.target.dim, self.parity) != (
                other.source.dim, other.target.dim, other.parity):
            raise SuperLinAlgError("cannot add maps of different shapes or parities")
        rows = [[x + y for x, y in zip(r1, r2)] for r1, r2 in zip(self.rows, other.rows)]
        return SuperMap(self.source, self.target, self.parity, rows,
                        self.source_factors, self.target_factors)

    def __sub__(self, other):
        return self + other.scale(-1)

    def __neg__(self):
        return self.scale(-1)

    def __matmul__(self, other):
        return tensor(self, other)

    def __pow__(self, k):
        if self.source.dim != self.target.dim:
            raise SuperLinAlgError("powers require an endomorphism")
        result = identity(self.source)
        for _ in range(k):
            result = compose(self, result)
        return result

    def __eq__(self, other):
        if not isinstance(other, SuperMap):
            return NotImplemented
        return (self.source == other.source and self.target == other.target
                and self.parity == other.parity and self.rows == other.rows)

    def is_zero(self):
        return all(not x for row in self.rows for x in row)

    @property
    def scalar(self):
        if self.source.dim != 1 or self.target.dim != 1:
            raise SuperLinAlgError("not a 1x1 map")
        return self.rows[0][0]

    def column(self, j):
        return [self.rows[i][j] for i in range(self.target.dim)]

    def __repr__(self):
        return "SuperMap(%r -> %r, parity %d)" % (self.source, self.target, self.parity)


def identity(space):
    rows = [[Cyc.one() if i == j else Cyc.zero() for j in range(space.dim)]
            for i in range(space.dim)]
    return SuperMap(space, space, 0, rows)


def compose(g, f):
    if f.target.dim != g.source.dim:
        raise SuperLinAlgError("composition shape mismatch: %r after %r" % (g, f))
    n, m, k = g.target.dim, f.source.dim, f.target.dim
    rows = [[Cyc.zero() for _ in range(m)] for _ in range(n)]
    for t in range(k):
        grow = [g.rows[i][t] for i in range(n)]
        frow = f.rows[t]
        for i in range(n):
            gv = grow[i]
            if not gv:
                continue
            out = rows[i]
            for j in range(m):
                fv = frow[j]
                if fv:
                    out[j] = out[j] + gv * fv
    return SuperMap(f.source, g.target, (f.parity + g.parity) % 2, rows,
                    f.source_factors, g.target_factors)


def tensor(*maps):
    """Flat graded tensor product of maps with Koszul signs.

    (f1 x ... x fn)(v1 x ... x vn) = sign * f1(v1) x ... x fn(vn) with
    sign = prod_m (-1)^(|f_m| * (|v_1| + ... + |v_{m-1}|)).

    Every map's matrix is indexed by the graded-tuple basis over its
    declared factor list, and the result is indexed over the concatenation
    of those lists; composites therefore never need associators.
    """
    if not maps:
        return SuperMap.from_scalar(1)
    fine_src = [m.source_factors for m in maps]
    fine_tgt = [m.target_factors for m in maps]
    all_src = [s for group in fine_src for s in group]
    all_tgt = [t for group in fine_tgt for t in group]
    src_tuples = graded_tuples(all_src)
    tgt_tuples = graded_tuples(all_tgt)
    tgt_pos = {t: k for k, t in enumerate(tgt_tuples)}
    source = tensor_space(*all_src)
    target = tensor_space(*all_tgt)
    parity = sum(m.parity for m in maps) % 2
    src_part_pos = [{t: k for k, t in enumerate(graded_tuples(g))} for g in fine_src]
    tgt_part_tuples = [graded_tuples(g) for g in fine_tgt]
    group_parity = []
    for g in fine_src:
        group_parity.append([sum(s.parity(i) for s, i in zip(g, t)) % 2
                             for t in graded_tuples(g)])
    cols = []
    for m in maps:
        cols.append([[(i, m.rows[i][j]) for i in range(m.target.dim) if m.rows[i][j]]
                     for j in range(m.source.dim)])
    rows = [[Cyc.zero() for _ in range(len(src_tuples))] for _ in range(len(tgt_tuples))]
    lengths = [len(g) for g in fine_src]
    for s_index, s in enumerate(src_tuples):
        parts = []
        start = 0
        for n in lengths:
            parts.append(tuple(s[start:start + n]))
            start += n
        part_cols = [src_part_pos[m][parts[m]] for m in range(len(maps))]
        sign = 1
        prefix = 0
        for m_index, m in enumerate(maps):
            if m.parity and (prefix % 2):
                sign = -sign
            prefix += group_parity[m_index][part_cols[m_index]]
        for combo in itertools.product(*[cols[m_index][part_cols[m_index]]
                                         for m_index in range(len(maps))]):
            value = Cyc.rational(sign)
            t = []
            for m_index, (i, v) in enumerate(combo):
                t.extend(tgt_part_tuples[m_index][i])
                value = value * v
            key = tuple(t)
            rows[tgt_pos[key]][s_index] = rows[tgt_pos[key]][s_index] + value
    src_factors = tuple(all_src)
    tgt_factors = tuple(all_tgt)
    return SuperMap(source, target, parity, rows, src_factors, tgt_factors)


def braiding(v, w):
    """b_{V,W}(x o y) = (-1)^{|x||y|} y o x."""
    src_tuples = graded_tuples([v, w])
    tgt_tuples = graded_tuples([w, v])
    tgt_pos = {t: k for k, t in enumerate(tgt_tuples)}
    rows = [[Cyc.zero() for _ in src_tuples] for _ in tgt_tuples]
    for j, (a, b) in enumerate(src_tuples):
        sign = -1 if (v.parity(a) and w.parity(b)) else 1
        rows[tgt_pos[(b, a)]][j] = Cyc.rational(sign)
    return SuperMap(tensor_space(v, w), tensor_space(w, v), 0, rows,
                    (v, w), (w, v))


def quantum_dimension(space):
    """Supertrace of the identity with the Koszul braiding: even - odd."""
    return space.even - space.odd


def supertrace(f):
    if f.source.dim != f.target.dim:
        raise SuperLinAlgError("supertrace requires an endomorphism")
    total = Cyc.zero()
    for i in range(f.source.dim):
        term = f.rows[i][i]
        if f.source.parity(i):
            term = -term
        total = total + term
    return total


# -- exact Gaussian elimination over Q(zeta_r) -------------------------------

def _rref(rows, ncols):
    """In-place reduced row echelon form; returns the pivot column list."""
    pivots = []
    r = 0
    for c in range(ncols):
        pivot = None
        for i in range(r, len(rows)):
            if rows[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = rows[r][c].inverse()
        rows[r] = [inv * x for x in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                factor = rows[i][c]
                rows[i] = [x - factor * y for x, y in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
    return pivots


def kernel_of_matrix(rows, ncols):
    """Basis of the kernel of the matrix (list of coordinate vectors)."""
    work = [list(r) for r in rows]
    pivots = _rref(work, ncols)
    pivot_set = set(pivots)
    free = [c for c in range(ncols) if c not in pivot_set]
    basis = []
    for fc in free:
        vec = [Cyc.zero() for _ in range(ncols)]
        vec[fc] = Cyc.one()
        for r, pc in enumerate(pivots):
            vec[pc] = -work[r][fc]
        basis.append(vec)
    return basis


def solve_exact(a_rows, b_rows, ncols_a):
    """Solve A X = B exactly; raises if inconsistent."""
    ncols_b = len(b_rows[0]) if b_rows else 0
    aug = [list(ra) + list(rb) for ra, rb in zip(a_rows, b_rows)]
    pivots = _rref(aug, ncols_a)
    for row in aug:
        if all(not x for x in row[:ncols_a]) and any(row[ncols_a:]):
            raise SuperLinAlgError("inconsistent linear system")
    x = [[Cyc.zero() for _ in range(ncols_b)] for _ in range(ncols_a)]
    for r, pc in enumerate(pivots):
        for j in range(ncols_b):
            x[pc][j] = aug[r][ncols_a + j]
    return x


def kernel_basis(f):
    """Parity-homogeneous kernel basis, computed blockwise per source parity."""
    basis = []
    for par in (0, 1):
        cols = [j for j in range(f.source.dim) if f.source.parity(j) == par]
        if not cols:
            continue
        sub = [[f.rows[i][j] for j in cols] for i in range(f.target.dim)]
        for vec in kernel_of_matrix(sub, len(cols)):
            full = [Cyc.zero() for _ in range(f.source.dim)]
            for c, value in zip(cols, vec):
                full[c] = value
            basis.append(full)
    return basis


def image_basis(f):
    """Parity-homogeneous image basis (pivot columns of the matrix)."""
    work = [list(r) for r in f.rows]
    pivots = _rref(work, f.source.dim)
    cols = [f.column(j) for j in pivots]

    def col_parity(col):
        for i, x in enumerate(col):
            if x:
                return f.target.parity(i)
        return 0

    cols.sort(key=col_parity)
    return cols


def split_idempotent(p):
    """Split an even idempotent p = incl o proj with proj o incl = id."""
    if p.parity != 0:
        raise SuperLinAlgError("idempotent must be even")
    if compose(p, p) != p:
        raise SuperLinAlgError("map is not idempotent (exact equality check failed)")
    cols = image_basis(p)
    even = sum(1 for col in cols
               if all(not x for i, x in enumerate(col) if p.target.parity(i) == 1))
    image = SuperSpace(even, len(cols) - even)
    if not cols:
        incl = SuperMap.zero(image, p.target)
        proj = SuperMap.zero(p.source, image)
        return incl, proj, image
    incl_rows = [[cols[k][i] for k in range(len(cols))] for i in range(p.target.dim)]
    incl = SuperMap(image, p.target, 0, incl_rows)
    proj_rows = solve_exact(incl_rows, p.rows, len(cols))
    proj = SuperMap(p.source, image, 0, proj_rows)
    if compose(proj, incl) != identity(image) or compose(incl, proj) != p:
        raise SuperLinAlgError("idempotent splitting failed the roundtrip check")
    return incl, proj, image
