"""Finite-dimensional commutative algebras given by structure constants.

An algebra carries a symmetric product tensor, a symmetric bilinear form
(the Frobenius form), and a list of marked generator indices.  Entries
are either Fraction (evaluated algebras) or MultiPoly (the symbolic
algebra over Q[lam, mu]); only the eigenspace machinery requires the
rational case.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import linalg
from .fusion import FusionRules, Grading
from .poly import MultiPoly


class ConsistencyError(Exception):
    """An internal cross-check failed; the model is wrong, not the input."""


class StructureAlgebra:
    """Commutative algebra with product tensor, Gram matrix and marked axes."""

    def __init__(self, labels, product, gram, marked=()):
        self.dim = len(labels)
        self.labels = list(labels)
        self.product = product
        self.gram = gram
        self.marked = list(marked)
        if len(product) != self.dim or any(len(row) != self.dim for row in product):
            raise ValueError("product tensor has the wrong shape")
        if len(gram) != self.dim or any(len(row) != self.dim for row in gram):
            raise ValueError("gram matrix has the wrong shape")
        for i in range(self.dim):
            for j in range(i):
                if product[i][j] != product[j][i]:
                    raise ValueError(f"product is not commutative at ({i}, {j})")
                if gram[i][j] != gram[j][i]:
                    raise ValueError(f"gram matrix is not symmetric at ({i}, {j})")

    def basis_vector(self, i: int):
        zero, one = self._zero_one()
        return [one if j == i else zero for j in range(self.dim)]

    def _zero_one(self):
        sample = self.gram[0][0]
        if isinstance(sample, MultiPoly):
            return MultiPoly(), MultiPoly.const(1)
        return Fraction(0), Fraction(1)

    def multiply(self, x, y):
        """Bilinear extension of the structure constants."""
        if len(x) != self.dim or len(y) != self.dim:
            raise ValueError("vector length does not match the algebra dimension")
        zero, _ = self._zero_one()
        out = [zero] * self.dim
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if not yj:
                    continue
                c = xi * yj
                row = self.product[i][j]
                out = [o + c * r for o, r in zip(out, row)]
        return out

    def ad_matrix(self, a):
        """Matrix of left multiplication by a, acting on column vectors."""
        cols = [self.multiply(a, self.basis_vector(j)) for j in range(self.dim)]
        return [[cols[j][i] for j in range(self.dim)] for i in range(self.dim)]

    def form(self, x, y):
        """Value of the bilinear form on two coordinate vectors."""
        zero, _ = self._zero_one()
        total = zero
        for i, xi in enumerate(x):
            if not xi:
                continue
            for j, yj in enumerate(y):
                if yj:
                    total = total + xi * yj * self.gram[i][j]
        return total

    # -- serialization ------------------------------------------------------

    def to_json(self) -> dict:
        def entry(e):
            return e.to_json() if isinstance(e, MultiPoly) else str(e)

        return {
            "dim": self.dim,
            "labels": self.labels,
            "product": [[[entry(c) for c in vec] for vec in row] for row in self.product],
            "gram": [[entry(c) for c in row] for row in self.gram],
            "marked": self.marked,
        }

    @staticmethod
    def from_json(data: dict) -> "StructureAlgebra":
        def entry(e):
            return MultiPoly.from_json(e) if isinstance(e, dict) else Fraction(e)

        product = [[[entry(c) for c in vec] for vec in row] for row in data["product"]]
        gram = [[entry(c) for c in row] for row in data["gram"]]
        return StructureAlgebra(data["labels"], product, gram, data.get("marked", ()))


def three_c() -> StructureAlgebra:
    """The three-axis algebra with xx = x and xy = (x + y - z)/64.

    Its three generators are axes for the Ising fusion rules with the
    quarter eigenvalue unrealised; the form has <x, x> = 1, <x, y> = 1/64.
    """
    one, s = Fraction(1), Fraction(1, 64)
    product = [[None] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            if i == j:
                vec = [one if k == i else Fraction(0) for k in range(3)]
            else:
                vec = [s if k in (i, j) else -s for k in range(3)]
            product[i][j] = vec
    gram = [[one if i == j else s for j in range(3)] for i in range(3)]
    return StructureAlgebra(["a", "b", "c"], product, gram, marked=[0, 1, 2])


# -- polynomials in the adjoint ---------------------------------------------


def apply_ad_poly(algebra: StructureAlgebra, coeffs, a, v):
    """Evaluate f(ad(a)) v by Horner's rule; coeffs are low-to-high."""
    zero, _ = algebra._zero_one()
    out = [zero] * algebra.dim
    for c in reversed(list(coeffs)):
        out = algebra.multiply(a, out)
        out = [o + c * vi for o, vi in zip(out, v)]
    return out


def annihilator_coeffs(roots) -> list[Fraction]:
    """Coefficients (low to high) of prod (t - r) over the given roots."""
    coeffs = [Fraction(1)]
    for r in roots:
        r = Fraction(r)
        coeffs = [Fraction(0)] + coeffs
        coeffs = [c - r * h for c, h in zip(coeffs, coeffs[1:] + [Fraction(0)])]
    return coeffs


# -- eigenspaces and the axis predicates -------------------------------------


def eigen_decompose(algebra: StructureAlgebra, a, candidates):
    """Kernel of ad(a) - theta for each candidate theta.

    Returns (spaces, semisimple): spaces maps each candidate to its
    echelonized eigenspace basis, and semisimple records whether the
    dimensions add up to the whole algebra.
    """
    ad = algebra.ad_matrix(a)
    spaces = {}
    total = 0
    for theta in candidates:
        theta = Fraction(theta)
        shifted = [[ad[i][j] - (theta if i == j else 0) for j in range(algebra.dim)]
                   for i in range(algebra.dim)]
        _, _, kernel = linalg.rref_and_kernel(shifted)
        basis = linalg.echelon_span(kernel)
        spaces[theta] = basis
        total += len(basis)
    return spaces, total == algebra.dim


@dataclass
class AxisReport:
    """Outcome of the axis conditions for one idempotent candidate."""

    idempotent: bool
    norm_ok: bool
    spectrum: dict
    semisimple: bool
    primitive: bool
    fusion_ok: bool
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return (self.idempotent and self.norm_ok and self.semisimple
                and self.primitive and self.fusion_ok)

    def to_json(self) -> dict:
        return {
            "idempotent": self.idempotent,
            "norm_ok": self.norm_ok,
            "spectrum": {str(k): v for k, v in sorted(self.spectrum.items(), reverse=True)},
            "semisimple": self.semisimple,
            "primitive": self.primitive,
            "fusion_ok": self.fusion_ok,
            "violations": [[str(f), str(g)] for f, g in self.violations],
            "passed": self.passed,
        }


def check_axis(algebra: StructureAlgebra, a, rules: FusionRules) -> AxisReport:
    """Test the axis conditions for `a` against the given fusion rules.

    Checks: aa = a; <a, a> = 2 * central charge; the candidate spectrum
    (the field set) exhausts the algebra; a spans its own 1-eigenspace;
    and each eigenspace product lands in the prescribed eigenspace sum,
    tested with annihilator polynomials in ad(a).  Unrealised fields are
    recorded with dimension 0 and skipped in the product scan.
    """
    idempotent = algebra.multiply(a, a) == list(a)
    norm_ok = algebra.form(a, a) == 2 * rules.central_charge
    spaces, semisimple = eigen_decompose(algebra, a, rules.fields)
    spectrum = {theta: len(basis) for theta, basis in spaces.items()}
    one_space = spaces.get(Fraction(1), [])
    primitive = len(one_space) == 1 and linalg.in_span(one_space, a) and not linalg.is_zero_vec(a)

    violations = []
    realized = [theta for theta, basis in spaces.items() if basis]
    for i, f in enumerate(realized):
        for g in realized[i:]:
            roots = rules.product(f, g)
            coeffs = annihilator_coeffs(sorted(roots))
            for u in spaces[f]:
                for v in spaces[g]:
                    w = algebra.multiply(u, v)
                    if not linalg.is_zero_vec(apply_ad_poly(algebra, coeffs, a, w)):
                        violations.append((f, g))
                        break
                else:
                    continue
                break
    return AxisReport(idempotent, norm_ok, spectrum, semisimple,
                      primitive, not violations, violations)


def miyamoto(algebra: StructureAlgebra, a, grading: Grading, rules: FusionRules):
    """Matrix of the involution fixing the even eigenspaces of `a` and
    negating the odd ones.

    Raises ConsistencyError if the eigenspaces do not span, or if the
    result fails to be an involutive automorphism preserving the form.
    """
    spaces, semisimple = eigen_decompose(algebra, a, rules.fields)
    if not semisimple:
        raise ConsistencyError("eigenspaces of the axis do not span the algebra")
    columns = []
    signs = []
    for theta, basis in spaces.items():
        for v in basis:
            columns.append(v)
            signs.append(Fraction(-1) if grading.parity(theta) else Fraction(1))
    p = linalg.transpose(columns)
    d = [[signs[i] if i == j else Fraction(0) for j in range(len(signs))]
         for i in range(len(signs))]
    tau = linalg.matmul(linalg.matmul(p, d), linalg.inverse(p))

    n = algebra.dim
    if not linalg.mat_eq(linalg.matmul(tau, tau), linalg.identity(n)):
        raise ConsistencyError("the involution does not square to the identity")
    gram = algebra.gram
    if linalg.matmul(linalg.matmul(linalg.transpose(tau), gram), tau) != gram:
        raise ConsistencyError("the involution does not preserve the form")
    for i in range(n):
        ti = [tau[r][i] for r in range(n)]
        for j in range(i, n):
            tj = [tau[r][j] for r in range(n)]
            lhs = linalg.matvec(tau, algebra.product[i][j])
            if lhs != algebra.multiply(ti, tj):
                raise ConsistencyError(f"the involution is not an automorphism at ({i}, {j})")
    return tau


@dataclass
class FormReport:
    symmetric: bool
    associative: bool
    assoc_failures: list
    perpendicular: dict

    @property
    def passed(self) -> bool:
        return self.symmetric and self.associative and all(self.perpendicular.values())

    def to_json(self) -> dict:
        return {
            "symmetric": self.symmetric,
            "associative": self.associative,
            "assoc_failures": self.assoc_failures,
            "perpendicular": {str(k): v for k, v in self.perpendicular.items()},
            "passed": self.passed,
        }


def verify_form(algebra: StructureAlgebra, rules: FusionRules | None = None) -> FormReport:
    """Check symmetry, associativity <xy, z> = <x, yz> on all basis triples,
    and perpendicularity of distinct eigenspaces at every marked axis.

    The eigenspace scan needs a candidate spectrum, so it runs only when
    fusion rules are supplied.
    """
    n = algebra.dim
    symmetric = all(algebra.gram[i][j] == algebra.gram[j][i]
                    for i in range(n) for j in range(n))
    failures = []
    gram = algebra.gram
    for i in range(n):
        for j in range(n):
            xy = algebra.product[i][j]
            for k in range(n):
                lhs = sum((xy[r] * gram[r][k] for r in range(n)), start=0 * gram[0][0])
                yz = algebra.product[j][k]
                rhs = sum((gram[i][r] * yz[r] for r in range(n)), start=0 * gram[0][0])
                if lhs != rhs:
                    failures.append((i, j, k))
    perpendicular = {}
    if rules is not None:
        for m in algebra.marked:
            a = algebra.basis_vector(m)
            spaces, _ = eigen_decompose(algebra, a, rules.fields)
            ok = True
            thetas = [t for t, b in spaces.items() if b]
            for x, f in enumerate(thetas):
                for g in thetas[x + 1:]:
                    for u in spaces[f]:
                        for v in spaces[g]:
                            if algebra.form(u, v) != 0:
                                ok = False
            perpendicular[algebra.labels[m]] = ok
    return FormReport(symmetric, not failures, failures, perpendicular)


def seress_assoc_check(algebra: StructureAlgebra, a) -> bool:
    """Does `a` associate with its 0-eigenvectors: a(xz) = (ax)z exactly."""
    ad = algebra.ad_matrix(a)
    _, _, kernel = linalg.rref_and_kernel(ad)
    for i in range(algebra.dim):
        x = algebra.basis_vector(i)
        ax = algebra.multiply(a, x)
        for z in kernel:
            if algebra.multiply(a, algebra.multiply(x, z)) != algebra.multiply(ax, z):
                return False
    return True


def resurrect(algebra: StructureAlgebra, a, b_lm, b_0, lm):
    """Recover x from its corrections b_lm, b_0 into two eigenspaces:
    x = (1/lm) a(b_lm - b_0) - b_lm."""
    lm = Fraction(lm)
    if lm == 0:
        raise ValueError("the eigenvalue must be nonzero")
    diff = [p - q for p, q in zip(b_lm, b_0)]
    image = algebra.multiply(a, diff)
    inv = 1 / lm
    return [inv * w - b for w, b in zip(image, b_lm)]


# -- ideals and quotients -----------------------------------------------------


def ideal_closure(algebra: StructureAlgebra, gens):
    """Smallest subspace containing gens and stable under multiplication."""
    basis = linalg.echelon_span(gens)
    while True:
        extended = list(basis)
        for v in basis:
            for i in range(algebra.dim):
                extended.append(algebra.multiply(algebra.basis_vector(i), v))
        new_basis = linalg.echelon_span(extended)
        if len(new_basis) == len(basis):
            return new_basis
        basis = new_basis


def quotient(algebra: StructureAlgebra, ideal):
    """Quotient by an ideal on which the form vanishes.

    Returns (quotient algebra, projection matrix); the projection maps
    old coordinates to coordinates on the surviving basis vectors.
    Raises ConsistencyError when the subspace is not an ideal or the form
    does not vanish on it, both of which signal a modelling error.
    """
    basis = linalg.echelon_span(ideal)
    for v in basis:
        for i in range(algebra.dim):
            if not linalg.in_span(basis, algebra.multiply(algebra.basis_vector(i), v)):
                raise ConsistencyError("subspace is not closed under multiplication")
            if algebra.form(v, algebra.basis_vector(i)) != 0:
                raise ConsistencyError("the form does not vanish on the ideal")
    pivots = [next(c for c, x in enumerate(row) if x != 0) for row in basis]
    complement = [c for c in range(algebra.dim) if c not in pivots]
    # projection columns: each old basis vector reduced through the ideal
    columns = []
    for j in range(algebra.dim):
        residual = linalg.reduce_vector(basis, algebra.basis_vector(j))
        columns.append([residual[c] for c in complement])
    proj = [[columns[j][r] for j in range(algebra.dim)] for r in range(len(complement))]

    labels = [algebra.labels[c] for c in complement]
    m = len(complement)
    product = [[None] * m for _ in range(m)]
    for r, c1 in enumerate(complement):
        for s, c2 in enumerate(complement):
            vec = algebra.product[c1][c2]
            residual = linalg.reduce_vector(basis, vec)
            product[r][s] = [residual[c] for c in complement]
    gram = [[algebra.gram[c1][c2] for c2 in complement] for c1 in complement]
    quot = StructureAlgebra(labels, product, gram, marked=())
    return quot, proj
