from fractions import Fraction as Q

from axial import linalg
from axial.algebra import StructureAlgebra, seress_assoc_check, three_c, verify_form
from axial.fusion import find_z2_gradings, frobenius_refine, virasoro_rules
from axial.poly import LAM, MU, MultiPoly, rational_roots, resultant, standard_monomial_count
from axial.sakuma import (A0, A1, AM1, AM2, A2, S1, S2E, S2O,
                          POINT_TABLE, associativity_defects,
                          associativity_polynomials, axis_eigenvectors,
                          discrepancy_quotient, evaluate_point,
                          expected_miyamoto_product_order, gram_complete,
                          rederive_products, solve_points)


def e8(i):
    return [Q(1) if k == i else Q(0) for k in range(8)]


def sym_vec(entries):
    out = [MultiPoly() for _ in range(8)]
    for k, v in entries.items():
        out[k] = v if isinstance(v, MultiPoly) else MultiPoly.const(v)
    return out


EXPECTED_P1 = (LAM**4 - Q(71, 2**6) * LAM**3 + Q(5, 2**8) * LAM**2 * MU
               + Q(45, 2**9) * LAM**2 + Q(139, 2**15) * LAM * MU
               + Q(1, 2**14) * MU**2 - Q(75, 2**15) * LAM
               - Q(167, 2**21) * MU + Q(39, 2**21))

EXPECTED_P2 = (LAM**5 - Q(577, 2**9) * LAM**4 + Q(25, 2**9) * LAM**3 * MU
               + Q(1347, 2**14) * LAM**3 - Q(389, 2**17) * LAM**2 * MU
               + Q(23, 2**17) * LAM * MU**2 - Q(105, 2**16) * LAM**2
               + Q(5183, 2**24) * LAM * MU + Q(87, 2**24) * MU**2
               - Q(63, 2**24) * LAM - Q(2901, 2**29) * MU + Q(117, 2**29))


# -- the symbolic build ---------------------------------------------------


def test_window_products(uni):
    prod = uni.algebra.product
    assert prod[A0][A0] == sym_vec({A0: 1})
    assert prod[A0][A1] == sym_vec({S1: 1, A0: Q(1, 32), A1: Q(1, 32)})
    assert prod[AM1][A1] == sym_vec({S2O: 1, AM1: Q(1, 32), A1: Q(1, 32)})
    assert prod[A0][A2] == sym_vec({S2E: 1, A0: Q(1, 32), A2: Q(1, 32)})


def test_table_is_total_and_symmetric(uni):
    prod = uni.algebra.product
    for i in range(8):
        for j in range(8):
            assert prod[i][j] is not None
            assert prod[i][j] == prod[j][i]


def test_a3_expansion(uni):
    c_quad = (Q(2**15, 7) * LAM**2 - Q(2**8 * 9, 7) * LAM + Q(2**7, 7) * MU
              + MultiPoly.const(Q(33, 7)))
    expected = sym_vec({
        AM2: 1,
        AM1: 2**8 * LAM - 6,
        A2: -(2**8) * LAM + 6,
        A0: c_quad,
        A1: MultiPoly() - c_quad,
        S2O: 32,
        S2E: -32,
    })
    assert uni.a3 == expected


def test_eigenvector_identities(uni):
    alg = uni.algebra
    ev = axis_eigenvectors()
    a0 = sym_vec({A0: 1})
    zero = [MultiPoly()] * 8

    def scaled(c, v):
        return [MultiPoly.const(c) * x for x in v]

    assert alg.multiply(a0, ev["alpha1"]) == zero
    assert alg.multiply(a0, ev["beta1"]) == scaled(Q(1, 4), ev["beta1"])
    assert alg.multiply(a0, ev["gamma1"]) == scaled(Q(1, 32), ev["gamma1"])
    assert alg.multiply(a0, ev["alpha2"]) == zero
    assert alg.multiply(a0, ev["beta2"]) == scaled(Q(1, 4), ev["beta2"])


def test_symmetries_are_involutions(uni):
    ident = [[MultiPoly.const(1 if i == j else 0) for j in range(8)] for i in range(8)]
    assert linalg.matmul(uni.tau0, uni.tau0) == ident
    assert linalg.matmul(uni.flip, uni.flip) == ident


def test_tau0_preserves_gram(uni):
    g = uni.algebra.gram
    t = uni.tau0
    assert linalg.matmul(linalg.matmul(linalg.transpose(t), g), t) == g


def test_flip_transports_products(uni):
    # where the images stay inside the window the flip is an automorphism
    prod = uni.algebra.product
    assert linalg.matvec(uni.flip, prod[A0][S1]) == prod[A1][S1]
    assert linalg.matvec(uni.flip, prod[A0][S2O]) == prod[A1][S2E]
    assert linalg.matvec(uni.tau0, prod[A1][S1]) == prod[AM1][S1]


def test_symmetry_images(uni):
    from axial.sakuma import t_matrices

    tau0, flip = t_matrices(uni)
    assert linalg.matvec(tau0, sym_vec({A2: 1})) == sym_vec({AM2: 1})
    assert linalg.matvec(tau0, sym_vec({S2O: 1})) == sym_vec({S2O: 1})
    assert linalg.matvec(flip, sym_vec({S2E: 1})) == sym_vec({S2O: 1})
    assert linalg.matvec(flip, sym_vec({A0: 1})) == sym_vec({A1: 1})
    assert linalg.matvec(flip, sym_vec({AM2: 1})) == uni.a3


def test_sigma_one_squared_formula(uni):
    lam, mu = LAM, MU
    third, seven_third = Q(1, 3), Q(7, 3)
    expected = sym_vec({
        S1: third * (Q(-5, 4) * lam - Q(13, 2**9)),
        S2E: MultiPoly.const(third * Q(-7, 2**9)),
        S2O: MultiPoly.const(third * Q(21, 2**11)),
        A0: seven_third * (Q(1, 2) * lam**2 - Q(1, 2**7) * lam + Q(1, 2**9) * mu
                           - MultiPoly.const(Q(1, 2**15))),
        A1: seven_third * (Q(7, 2**8) * lam - Q(35, 2**16)),
        AM1: seven_third * (Q(7, 2**8) * lam - Q(35, 2**16)),
        A2: MultiPoly.const(seven_third * Q(7, 2**16)),
        AM2: MultiPoly.const(seven_third * Q(7, 2**16)),
    })
    assert uni.algebra.product[S1][S1] == expected


# -- the Gram matrix ------------------------------------------------------


def test_gram_printed_entries(uni):
    g = uni.algebra.gram
    assert g[A0][A0] == MultiPoly.const(1)
    assert g[A0][A1] == LAM
    assert g[A0][A2] == MU
    a_s1 = Q(1, 32) * (31 * LAM - 1)
    for k in range(5):
        assert g[k][S1] == a_s1
    assert g[A0][S2E] == Q(1, 32) * (31 * MU - 1)
    assert g[A0][S2O] == Q(1, 32) * (30 * LAM + MU - 1)
    assert g[S1][S1] == (Q(3, 4) * LAM**2 + Q(65, 2**9) * LAM
                         + Q(7, 2**11) * MU - MultiPoly.const(Q(3, 2**11)))


def test_gram_nu3_nu4(uni):
    g = uni.algebra.gram
    nu3 = Q(-1, 7) * (2**15 * LAM**3 - 2**12 * 9 * LAM**2 + 2**7 * 15 * LAM * MU
                      + 2169 * LAM + 33 * MU - 33)
    nu4 = Q(1, 7) * (2**23 * LAM**4 - 2**15 * 293 * LAM**3 + 2**16 * 7 * LAM**2 * MU
                     + 2**12 * 189 * LAM**2 - 2**7 * 5 * LAM * MU - 2**7 * MU**2
                     - 2**7 * 155 * LAM - 21 * MU + 156)
    assert g[AM2][A1] == nu3
    assert g[AM1][A2] == nu3
    assert g[AM2][A2] == nu4


def test_gram_complete_re_derivation(uni):
    assert gram_complete(uni) == uni.algebra.gram


def test_sigma_gram_entries_by_parity(uni):
    g = uni.algebra.gram
    even2 = Q(1, 32) * (31 * MU - 1)
    odd2 = Q(1, 32) * (30 * LAM + MU - 1)
    for k in range(5):
        if k % 2 == 0:
            assert g[k][S2E] == even2 and g[k][S2O] == odd2
        else:
            assert g[k][S2E] == odd2 and g[k][S2O] == even2


# -- associativity polynomials and the variety ----------------------------


def test_p1_p2_exact(uni):
    p1, p2 = associativity_polynomials(uni)
    assert p1 == EXPECTED_P1
    assert len(p1.terms) == 9
    assert p2 == EXPECTED_P2
    assert len(p2.terms) == 12


def test_diagonal_defect_vanishes(uni):
    defects = dict(associativity_defects(uni))
    assert (A0, A0, A0) not in defects


def test_defects_vanish_at_all_points(uni, points):
    defects = associativity_defects(uni)
    assert defects  # the table is not associative over the polynomial ring
    for pt in points.values():
        for _, d in defects:
            assert d.evaluate(pt.lam, pt.mu) == 0


def test_flip_preserves_gram_at_all_points(uni, points):
    # symbolically the flip moves some form values by ideal elements (the
    # entries involving a_{-2}); at the nine points those vanish
    from axial.sakuma import _eval_matrix

    for pt in points.values():
        g = _eval_matrix(uni.algebra.gram, pt)
        f = _eval_matrix(uni.flip, pt)
        assert linalg.matmul(linalg.matmul(linalg.transpose(f), g), f) == g


def test_lambda_resultant_roots(uni):
    p1, p2 = associativity_polynomials(uni)
    res = resultant(p1, p2, "mu")
    expected = {Q(1), Q(0), Q(1, 8), Q(1, 64), Q(13, 256), Q(1, 32), Q(3, 128), Q(5, 256)}
    assert rational_roots(res) == expected
    assert {pt.lam for pt in solve_points(uni)} == expected


def test_solve_points_table(uni):
    pts = solve_points(uni)
    assert [(pt.name, pt.lam, pt.mu) for pt in pts] == \
        [(name, lam, mu) for name, lam, mu, _, _ in POINT_TABLE]
    p1, p2 = associativity_polynomials(uni)
    for pt in pts:
        assert p1.evaluate(pt.lam, pt.mu) == 0
        assert p2.evaluate(pt.lam, pt.mu) == 0


def test_quotient_ring_dimension(uni):
    p1, p2 = associativity_polynomials(uni)
    assert standard_monomial_count([p1, p2]) == 9


# -- evaluation and quotients ----------------------------------------------


def test_evaluate_point_values(uni, points):
    alg_2b = evaluate_point(uni, points["2B"])
    assert alg_2b.gram[A0][A1] == 0
    alg_3c = evaluate_point(uni, points["3C"])
    assert alg_3c.product[A0][A1][S1] == 1
    alg_6a = evaluate_point(uni, points["6A"])
    assert alg_6a.gram[A0][S1] == Q(-101, 8192)


def test_ideal_and_quotient_dims(uni, points):
    for name, lam, mu, ideal_dim, dim in POINT_TABLE:
        disc = discrepancy_quotient(uni, points[name])
        assert disc.ideal_dim == ideal_dim, name
        assert disc.quotient.dim == dim, name


def test_2b_eigen_dims(uni, points):
    from axial.algebra import eigen_decompose

    rules = frobenius_refine(virasoro_rules(4, 3))
    disc = discrepancy_quotient(uni, points["2B"])
    ax0 = linalg.matvec(disc.projection, e8(A0))
    spaces, semisimple = eigen_decompose(disc.quotient, ax0, rules.fields)
    dims = tuple(len(spaces[f]) for f in rules.fields)
    assert dims == (1, 1, 0, 0) and semisimple


def test_2b_miyamoto_is_identity(uni, points):
    from axial.algebra import miyamoto

    rules = frobenius_refine(virasoro_rules(4, 3))
    grading = next(g for g in find_z2_gradings(rules) if not g.trivial)
    disc = discrepancy_quotient(uni, points["2B"])
    ax0 = linalg.matvec(disc.projection, e8(A0))
    assert miyamoto(disc.quotient, ax0, grading, rules) == linalg.identity(2)


def test_quotient_forms_associate(uni, points):
    for pt in points.values():
        disc = discrepancy_quotient(uni, pt)
        rep = verify_form(disc.quotient)
        assert rep.symmetric and rep.associative, pt.name


def test_axis_norms_in_quotients(uni, points):
    disc = discrepancy_quotient(uni, points["2A"])
    ax0 = linalg.matvec(disc.projection, e8(A0))
    assert disc.quotient.form(ax0, ax0) == 1


def test_seress_in_4a_quotient(uni, points):
    disc = discrepancy_quotient(uni, points["4A"])
    ax0 = linalg.matvec(disc.projection, e8(A0))
    assert seress_assoc_check(disc.quotient, ax0)


def test_3c_quotient_is_the_three_axis_algebra(uni, points):
    target = three_c()
    disc = discrepancy_quotient(uni, points["3C"])
    quot, proj = disc.quotient, disc.projection
    assert quot.dim == 3
    images = [linalg.matvec(proj, e8(A0)),   # -> a
              linalg.matvec(proj, e8(A1)),   # -> b
              linalg.matvec(proj, e8(AM1))]  # -> c
    basis_matrix = linalg.transpose(images)
    iso = linalg.inverse(basis_matrix)  # quotient coords -> 3C coords
    for i in range(3):
        for j in range(3):
            qi = [Q(1) if k == i else Q(0) for k in range(3)]
            qj = [Q(1) if k == j else Q(0) for k in range(3)]
            lhs = linalg.matvec(iso, quot.multiply(qi, qj))
            rhs = target.multiply(linalg.matvec(iso, qi), linalg.matvec(iso, qj))
            assert lhs == rhs
            assert quot.form(qi, qj) == target.form(linalg.matvec(iso, qi),
                                                    linalg.matvec(iso, qj))


# -- the classification race ----------------------------------------------


def test_classification_report(report):
    assert report.passed
    assert report.total_dim == 37
    assert len(report.points) == 9
    assert [p.name for p in report.points] == [r[0] for r in POINT_TABLE]
    assert [p.ideal_dim for p in report.points] == [7, 6, 5, 5, 4, 3, 3, 2, 0]
    assert [p.dim for p in report.points] == [1, 2, 3, 3, 4, 5, 5, 6, 8]


def test_axis_reports_all_pass(report):
    for p in report.points:
        for rep in p.axis_reports:
            assert rep.passed
            assert rep.norm_ok


def test_shift_orders_match_names(report):
    assert [p.shift_order for p in report.points] == [1, 2, 2, 3, 3, 4, 4, 5, 6]


def test_miyamoto_product_orders(report):
    # on the quotient the rotation steps the axis orbit by two
    assert [p.rho_order for p in report.points] == [1, 1, 1, 3, 3, 2, 2, 5, 3]
    for p in report.points:
        assert p.rho_order == expected_miyamoto_product_order(int(p.name[0]))
        assert 2 * p.shift_order <= 12


def test_gram_signatures_distinct(report):
    assert report.signatures_distinct
    sigs = [(p.gram_values["lambda"], p.gram_values["mu"]) for p in report.points]
    assert len(set(sigs)) == 9


def test_report_json_shape(report):
    data = report.to_json()
    assert data["passed"] is True
    assert len(data["points"]) == 9
    assert data["points"][0]["name"] == "1A"
    assert data["points"][8]["dim"] == 8


# -- re-derivations ---------------------------------------------------------


def test_rederive_products(uni):
    rep = rederive_products(uni)
    assert rep.passed, rep.summary()
    names = {d.name for d in rep.derivations}
    assert {"a0*s1", "a0*s2o", "s1*s1", "s1*s2e", "s2e*s2e",
            "norm(beta1)/4", "a0*gamma1"} <= names


def test_rederived_sigma_coefficient(uni):
    # the re-derivation reproduces the 7/32 sigma coefficient
    assert uni.algebra.product[A0][S1][S1] == MultiPoly.const(Q(7, 32))


def test_universal_json_loads_back(uni):
    data = uni.algebra.to_json()
    back = StructureAlgebra.from_json(data)
    assert back.product == uni.algebra.product
    assert back.gram == uni.algebra.gram
