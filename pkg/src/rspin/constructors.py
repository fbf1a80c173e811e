"""Delta-separable Frobenius algebras and the graded-centre construction.

A FrobeniusAlgebraData is a finite-dimensional algebra in super vector
spaces with a counit whose induced pairing is nondegenerate; the
comultiplication is derived from the pairing and stored.  graded_center
builds a closed Lambda_r-Frobenius algebra from the images of the twisted
averaging projectors P_a(x) = sum_i ebar_i . x . gamma^(1-a)(e_i), where
Delta(1) = sum_i ebar_i o e_i.
"""

from __future__ import annotations

from dataclasses import dataclass

from .lambda_frobenius import LambdaFrobenius
from .scalars import Cyc, as_cyc, format_scalar, parse_scalar
from .superlinalg import (
    SuperLinAlgError,
    SuperMap,
    SuperSpace,
    UNIT_SPACE,
    braiding,
    compose,
    identity,
    kernel_of_matrix,
    solve_exact,
    split_idempotent,
    tensor,
    tensor_space,
)


class FrobeniusError(ValueError):
    pass


class DegeneratePairingError(FrobeniusError):
    pass


# Zig-zag handedness: with right duals built from left duals through the
# braiding, the N-shaped zig-zag computes the INVERSE Nakayama automorphism
# of an ordinary Frobenius algebra.  Pinned by the Landau-Ginzburg orbifold
# tests against the xi^{-g} determinant weights.
ZIGZAG_COMPUTES_INVERSE = True

# Multiplication order inside the averaging projector:
#   P_a(x) = sum_i ebar_i . x . gamma^(1-a)(e_i)
# The mirrored order (gamma on the left tensor leg) is the documented
# fallback; exactly this convention ships, selected by the test suite.
PROJECTOR_GAMMA_ON_RIGHT = True


@dataclass
class FrobeniusAlgebraData:
    space: SuperSpace
    mult: SuperMap
    unit: SuperMap
    counit: SuperMap
    comult: SuperMap
    pairing: SuperMap
    copairing: SuperMap
    delta_separable: bool

    @staticmethod
    def assemble(space, mult, unit, counit, require_delta_separable=True):
        """Check all axioms and derive the comultiplication from the pairing."""
        one = identity(space)
        if mult.parity or unit.parity or counit.parity:
            raise FrobeniusError("structure maps must be even")
        assoc_l = compose(mult, tensor(mult, one))
        assoc_r = compose(mult, tensor(one, mult))
        if assoc_l != assoc_r:
            raise FrobeniusError("multiplication is not associative")
        if compose(mult, tensor(unit, one)) != one or compose(mult, tensor(one, unit)) != one:
            raise FrobeniusError("unit axiom fails")

        pairing = compose(counit, mult)
        copairing = _copairing_from(pairing, space)
        comult = compose(tensor(mult, one), tensor(one, copairing))
        other = compose(tensor(one, mult), tensor(copairing, one))
        if comult != other:
            raise FrobeniusError("the two Frobenius comultiplications disagree")
        if compose(tensor(counit, one), comult) != one or \
                compose(tensor(one, counit), comult) != one:
            raise FrobeniusError("counit axiom fails")
        frob_l = compose(tensor(mult, one), tensor(one, comult))
        frob_m = compose(comult, mult)
        frob_r = compose(tensor(one, mult), tensor(comult, one))
        if frob_l != frob_m or frob_r != frob_m:
            raise FrobeniusError("Frobenius relation fails")
        separable = compose(mult, comult) == one
        if require_delta_separable and not separable:
            raise FrobeniusError("algebra is not Delta-separable (mu o Delta != id)")
        return FrobeniusAlgebraData(space, mult, unit, counit, comult,
                                    pairing, copairing, separable)

    @property
    def dim(self):
        return self.space.dim

    def handle_element(self):
        """mu o Delta o unit, the window element; equals unit iff Delta-separable."""
        return compose(self.mult, compose(self.comult, self.unit))

    # -- config schema ---------------------------------------------------------

    def to_config(self, scalar_order=None):
        if scalar_order is None:
            scalar_order = 1
            for m in (self.mult, self.unit, self.counit):
                for row in m.rows:
                    for x in row:
                        if not x.is_rational():
                            scalar_order = max(scalar_order, x.order)

        def mat(m):
            return [[format_scalar(x) for x in row] for row in m.rows]

        return {
            "format": "frobenius_algebra",
            "scalar_order": scalar_order,
            "even_dim": self.space.even,
            "odd_dim": self.space.odd,
            "mult": mat(self.mult),
            "unit": mat(self.unit),
            "counit": mat(self.counit),
        }

    @staticmethod
    def from_config(data):
        order = int(data.get("scalar_order", 1))
        space = SuperSpace(int(data["even_dim"]), int(data["odd_dim"]))

        def parse_map(rows, source, target, sf=None, tf=None):
            parsed = [[parse_scalar(x, order) for x in row] for row in rows]
            return SuperMap(source, target, 0, parsed, sf, tf)

        sq = tensor_space(space, space)
        mult = parse_map(data["mult"], sq, space, (space, space), None)
        unit = parse_map(data["unit"], UNIT_SPACE, space, (), None)
        counit = parse_map(data["counit"], space, UNIT_SPACE, None, ())
        return FrobeniusAlgebraData.assemble(space, mult, unit, counit,
                                             require_delta_separable=True)


def _copairing_from(pairing, space):
    """Solve the zorro identity (p o id).(id o c) = id for the copairing c."""
    one = identity(space)
    dim = space.dim
    sq = tensor_space(space, space)
    columns = []
    for k in range(sq.dim):
        if sq.parity(k) == 1:
            # odd elementary tensors cannot appear in the even copairing
            columns.append(None)
            continue
        rows = [[Cyc.one() if i == k else Cyc.zero()] for i in range(sq.dim)]
        elementary = SuperMap(UNIT_SPACE, sq, 0, rows, None, (space, space))
        zig = compose(tensor(pairing, one), tensor(one, elementary))
        columns.append(zig)
    big_rows = []
    for i in range(dim):
        for j in range(dim):
            row = []
            for k in range(sq.dim):
                if columns[k] is None:
                    row.append(Cyc.zero())
                else:
                    row.append(columns[k].rows[i][j])
            big_rows.append(row)
    target = [[Cyc.one() if i == j else Cyc.zero()] for i in range(dim) for j in range(dim)]
    try:
        solution = solve_exact(big_rows, target, sq.dim)
    except SuperLinAlgError as exc:
        raise DegeneratePairingError("pairing is degenerate; no copairing exists") from exc
    cop_rows = [[solution[k][0]] for k in range(sq.dim)]
    copairing = SuperMap(UNIT_SPACE, sq, 0, cop_rows, (), (space, space))
    check = compose(tensor(one, pairing), tensor(copairing, one))
    if check != one:
        raise DegeneratePairingError("copairing fails the mirrored zorro identity")
    return copairing


@dataclass
class AlgebraAutomorphism:
    map: SuperMap
    inverse: SuperMap

    def power(self, k):
        base = self.map if k >= 0 else self.inverse
        result = identity(self.map.source)
        for _ in range(abs(k)):
            result = compose(base, result)
        return result

    def order_divides(self, r):
        return self.power(r) == identity(self.map.source)


def nakayama_gamma(algebra):
    """The Nakayama automorphism gamma_A from the pairing zig-zag.

    The zig-zag with one braided copairing computes gamma_A^{-1} under the
    right-duals-from-braiding convention; gamma_A itself is its matrix
    inverse.  gamma_A = id iff the algebra is symmetric.
    """
    space = algebra.space
    one = identity(space)
    crossed = compose(braiding(space, space), algebra.copairing)
    zig = compose(tensor(algebra.pairing, one), tensor(one, crossed))
    inv_rows = solve_exact(zig.rows, identity(space).rows, space.dim)
    inverse_map = SuperMap(space, space, 0, inv_rows)
    if ZIGZAG_COMPUTES_INVERSE:
        gamma, gamma_inv = inverse_map, zig
    else:
        gamma, gamma_inv = zig, inverse_map
    _check_algebra_automorphism(algebra, gamma)
    return AlgebraAutomorphism(gamma, gamma_inv)


def _check_algebra_automorphism(algebra, phi):
    one = identity(algebra.space)
    if compose(phi, algebra.mult) != compose(algebra.mult, tensor(phi, phi)):
        raise FrobeniusError("map does not respect multiplication")
    if compose(phi, algebra.unit) != algebra.unit:
        raise FrobeniusError("map does not fix the unit")
    if compose(algebra.counit, phi) != algebra.counit:
        raise FrobeniusError("map does not preserve the counit")
    if compose(algebra.comult, phi) != compose(tensor(phi, phi), algebra.comult):
        raise FrobeniusError("map does not respect comultiplication")


class GammaOrderError(FrobeniusError):
    pass


def averaging_projector(algebra, gamma, a):
    """P_a(x) = sum_i ebar_i . x . gamma^(1-a)(e_i), Koszul signs included."""
    space = algebra.space
    one = identity(space)
    gpow = gamma.power(1 - a)
    cop = algebra.copairing  # legs (ebar_i, e_i)
    step1 = tensor(cop, one)                     # x -> (ebar, e, x)
    step2 = tensor(one, braiding(space, space))  # -> (ebar, x, e)
    if PROJECTOR_GAMMA_ON_RIGHT:
        step3 = tensor(one, one, gpow)           # -> (ebar, x, gamma(e))
    else:
        step3 = tensor(gpow, one, one)           # mirrored fallback
    step4 = tensor(algebra.mult, one)
    return compose(algebra.mult, compose(step4, compose(step3, compose(step2, step1))))


@dataclass
class GradedCenter:
    """A graded centre together with its embedding data."""

    algebra: LambdaFrobenius
    source: FrobeniusAlgebraData
    gamma: AlgebraAutomorphism
    inclusions: dict
    projections: dict

    def gamma_restriction(self, a):
        """gamma_A restricted/corestricted to the circle space C_a."""
        a %= self.algebra.r
        return compose(self.projections[a], compose(self.gamma.map, self.inclusions[a]))


def graded_center_data(algebra, r):
    """Build the graded centre with the twisted averaging projectors.

    Requires gamma_A^r = id; the Nakayama automorphisms of the result act as
    gamma_A restricted to each circle space.
    """
    if not algebra.delta_separable:
        raise FrobeniusError(
            "graded_center requires a Delta-separable algebra (mu o Delta = id)")
    gamma = nakayama_gamma(algebra)
    if not gamma.order_divides(r):
        raise GammaOrderError("gamma_A^%d != id; the graded centre needs gamma_A^r = 1" % r)
    splits = {}
    for a in range(r):
        p = averaging_projector(algebra, gamma, a)
        if compose(p, p) != p:
            raise FrobeniusError(
                "averaging projector P_%d is not idempotent; convention bug" % a)
        splits[a] = split_idempotent(p)

    def incl(a):
        return splits[a % r][0]

    def proj(a):
        return splits[a % r][1]

    spaces = {a: splits[a][2] for a in range(r)}
    mu = {}
    delta = {}
    for a in range(r):
        for b in range(r):
            mu[(a, b)] = compose(proj(a + b - 1),
                                 compose(algebra.mult, tensor(incl(a), incl(b))))
            delta[(a, b)] = compose(tensor(proj(a), proj(b)),
                                    compose(algebra.comult, incl(a + b + 1)))
    eta = compose(proj(1), algebra.unit)
    if compose(incl(1), eta) != algebra.unit:
        raise FrobeniusError("unit does not lie in C_1; convention bug")
    eps = compose(algebra.counit, incl(-1))
    result = LambdaFrobenius(r=r, spaces=spaces, mu=mu, delta=delta, eta=eta, eps=eps)
    return GradedCenter(result, algebra, gamma,
                        {a: incl(a) for a in range(r)},
                        {a: proj(a) for a in range(r)})


def graded_center(algebra, r):
    """Closed Lambda_r-Frobenius algebra on the images of the projectors P_a."""
    return graded_center_data(algebra, r).algebra


# -- built-in example algebras -------------------------------------------------

def builtin(name, **params):
    """Named Delta-separable Frobenius algebras in their canonical forms."""
    if name == "trivial":
        return _trivial()
    if name == "group_algebra_Zn":
        return _group_algebra(int(params.get("n", 2)))
    if name.startswith("group_algebra_Z") and name[15:].isdigit():
        return _group_algebra(int(name[15:]))
    if name == "clifford1":
        return _clifford1()
    if name == "matrix_algebra_n":
        return _matrix_algebra(int(params.get("n", 2)))
    if name.startswith("matrix_algebra_") and name[15:].isdigit():
        return _matrix_algebra(int(name[15:]))
    raise FrobeniusError("unknown builtin algebra %r" % name)


BUILTIN_NAMES = ("trivial", "group_algebra_Zn", "clifford1", "matrix_algebra_n")


def _mult_from_table(space, table):
    """table[(i, j)] = list of (k, coeff) for e_i * e_j."""
    sq = tensor_space(space, space)
    pairs = _pair_index(space)
    rows = [[Cyc.zero() for _ in range(sq.dim)] for _ in range(space.dim)]
    for (i, j), terms in table.items():
        col = pairs[(i, j)]
        for k, coeff in terms:
            rows[k][col] = rows[k][col] + as_cyc(coeff)
    return SuperMap(sq, space, 0, rows, (space, space), None)


def _pair_index(space):
    from .superlinalg import graded_tuples

    return {t: k for k, t in enumerate(graded_tuples([space, space]))}


def _vector_map(space, coeffs):
    rows = [[as_cyc(c)] for c in coeffs]
    return SuperMap(UNIT_SPACE, space, 0, rows, (), None)


def _functional_map(space, coeffs):
    return SuperMap(space, UNIT_SPACE, 0, [[as_cyc(c) for c in coeffs]], None, ())


def _trivial():
    space = SuperSpace(1, 0)
    mult = _mult_from_table(space, {(0, 0): [(0, 1)]})
    return FrobeniusAlgebraData.assemble(space, mult, _vector_map(space, [1]),
                                         _functional_map(space, [1]))


def _group_algebra(n):
    if n < 1:
        raise FrobeniusError("group order must be positive")
    space = SuperSpace(n, 0)
    table = {(i, j): [((i + j) % n, 1)] for i in range(n) for j in range(n)}
    mult = _mult_from_table(space, table)
    unit = _vector_map(space, [1] + [0] * (n - 1))
    counit = _functional_map(space, [n] + [0] * (n - 1))
    return FrobeniusAlgebraData.assemble(space, mult, unit, counit)


def _clifford1():
    # k<theta>/(theta^2 = 1) with theta odd; counit reads off 2x the even part
    space = SuperSpace(1, 1)
    table = {
        (0, 0): [(0, 1)],
        (0, 1): [(1, 1)],
        (1, 0): [(1, 1)],
        (1, 1): [(0, 1)],
    }
    mult = _mult_from_table(space, table)
    unit = _vector_map(space, [1, 0])
    counit = _functional_map(space, [2, 0])
    return FrobeniusAlgebraData.assemble(space, mult, unit, counit)


def _matrix_algebra(n):
    if n < 1:
        raise FrobeniusError("matrix size must be positive")
    space = SuperSpace(n * n, 0)

    def idx(i, j):
        return i * n + j

    table = {}
    for i in range(n):
        for j in range(n):
            for k in range(n):
                for l in range(n):
                    if j == k:
                        table[(idx(i, j), idx(k, l))] = [(idx(i, l), 1)]
    mult = _mult_from_table(space, table)
    unit_vec = [0] * (n * n)
    counit_vec = [0] * (n * n)
    for i in range(n):
        unit_vec[idx(i, i)] = 1
        counit_vec[idx(i, i)] = n
    return FrobeniusAlgebraData.assemble(space, mult, _vector_map(space, unit_vec),
                                         _functional_map(space, counit_vec))


def center_basis(algebra):
    """Brute-force centre: solve x e_i = e_i x for all i (oracle helper)."""
    space = algebra.space
    dim = space.dim
    pairs = _pair_index(space)
    rows = []
    # unknown x = sum_j x_j e_j; for each basis e_i and output slot k one equation
    for i in range(dim):
        for k in range(dim):
            row = []
            for j in range(dim):
                left = algebra.mult.rows[k][pairs[(j, i)]]
                right = algebra.mult.rows[k][pairs[(i, j)]]
                row.append(left - right)
            rows.append(row)
    return kernel_of_matrix(rows, dim)
