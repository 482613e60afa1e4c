"""Acceptance criteria.

One test per criterion, each running the corresponding verification suite at
the exact parameters the criteria state (all comparisons are exact
equalities; the two probabilistic tail bounds are inequalities against
2|N| ln|N| 2^-d).  Every test prints a single pass/fail line; run with
``pytest -s tests/test_acceptance.py`` to see them all.
"""

from clzeta import verify


def _run(ac_id: str, description: str, suite: str, **kwargs):
    checks = verify.run_suite(suite, **kwargs)
    failed = [c for c in checks if not c.passed]
    status = "PASS" if not failed else "FAIL"
    print(f"{ac_id} ({description}): {status} [{len(checks)} checks]")
    detail = "; ".join(f"{c.name}: {c.lhs} != {c.rhs}" for c in failed[:5])
    assert not failed, f"{ac_id}: {len(failed)} failed checks: {detail}"


def test_ac1_feit_fine():
    _run(
        "AC-1",
        "Feit-Fine series vs commuting-pair oracle, q=2,3, t^0..t^3 plus t^4 at q=2",
        "feit-fine",
        q_values=(2, 3),
        n_max=3,
    )


def test_ac2_fat_line():
    _run(
        "AC-2",
        "fat-line series vs oracle with A^b = 0, q=2,3, b=1..3, t^0..t^3",
        "fat-line",
        q_values=(2, 3),
        b_values=(1, 2, 3),
        n_max=3,
    )


def test_ac3_nonreduced_node():
    _run(
        "AC-3",
        "nonreduced-node series vs oracle with A^b B = 0, q=2,3, b=1..3, t^0..t^3",
        "nonred-node",
        q_values=(2, 3),
        b_values=(1, 2, 3),
        n_max=3,
    )


def test_ac4_rank_series_identity():
    _run(
        "AC-4",
        "rank series: partition sum == hypergeometric sum on t<8, u<8, q<20",
        "rank-series",
        t_order=8,
        u_order=8,
        q_order=20,
    )


def test_ac5_u_collapse():
    _run(
        "AC-5",
        "u=1 collapses: rank series to 1/(tq;q)_inf and normalization to 1, t<10, q<20",
        "u-collapse",
        t_order=10,
        q_order=20,
    )


def test_ac6_euler_identity():
    _run(
        "AC-6",
        "Euler identity sum t^n/(q;q)_n == 1/(t;q)_inf on t<12, q<20",
        "euler",
        t_order=12,
        q_order=20,
    )


def test_ac7_durfee_identities():
    _run(
        "AC-7",
        "three Durfee identities by partition enumeration, k,l<=5, window 20",
        "durfee",
        k_max=5,
        window=20,
    )


def test_ac8_aut_end():
    _run(
        "AC-8",
        "enumerated |End|, |Aut|, |End[pi^b]| vs closed forms, p=2,3, |lam|<=4",
        "aut-end",
        p_values=(2, 3),
        max_size=4,
        torsion_max=3,
    )


def test_ac9_polynomial_ring_dirichlet():
    _run(
        "AC-9",
        "Z[T] Dirichlet prefix: multiplicative, local coefficients, oracle at p, p^2",
        "zt-dirichlet",
        length=64,
        p_values=(2, 3),
    )


def test_ac10_surjectivity():
    _run(
        "AC-10",
        "surjection probability enumerated == closed form, tail bound, p=2,3, d<=4",
        "surjection",
        p_values=(2, 3),
        max_size=4,
        d_max=4,
    )


def test_ac11_framing_limit():
    _run(
        "AC-11",
        "framed commuting pairs on F_2^2: freeness, convergence bound, d=1..8",
        "framing",
        d_max=8,
    )


def test_ac12_conjugacy_classes():
    _run(
        "AC-12",
        "Aut conjugacy classes: abelian closed forms, GL_2(F_2)=3, quadratic in q",
        "conjugacy",
        p_values=(2, 3, 5),
    )


def test_ac13_commuting_permutations():
    _run(
        "AC-13",
        "commuting permutation pairs equal p(n) n! for n<=5",
        "permutations",
        n_max=5,
    )


def test_ac14_strategy_cross_checks():
    _run(
        "AC-14",
        "linear-in-B vs full enumeration, shard-count invariance",
        "strategies",
    )
