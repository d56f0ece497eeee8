import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from cubicprimes import (
    NONRESIDUE_FORM,
    RESIDUE_FORM,
    Branch,
    CubicTag,
    DomainError,
    Polynomial,
    QuadraticForm,
    ResourceError,
    chi,
    cubic_character_exponent,
    cubic_residue_euler,
    factorize,
    gauss_classify,
    is_prime,
    primitive_cube_root,
    rho,
    rho_bruteforce,
    rho_prime,
    roots_mod,
)
from cubicprimes.residues import represent_by_form

CUBIC2 = Polynomial.cubic(2)


def primes_one_mod_three(tables, lo, hi):
    return [int(p) for p in tables.primes if lo <= p <= hi and p % 3 == 1]


class TestEulerCriterion:
    def test_residue(self):
        result = cubic_residue_euler(2, 31)
        assert result.tag is CubicTag.RESIDUE
        assert result.exponent == 0

    def test_nonresidue(self):
        result = cubic_residue_euler(2, 7)
        assert result.tag is CubicTag.NONRESIDUE
        assert result.exponent in (1, 2)

    def test_not_coprime(self):
        result = cubic_residue_euler(7, 7)
        assert result.tag is CubicTag.NOT_COPRIME
        assert result.exponent is None

    def test_everything_is_a_cube_off_the_one_mod_three_branch(self):
        assert cubic_residue_euler(2, 3).tag is CubicTag.RESIDUE
        assert cubic_residue_euler(3, 5).tag is CubicTag.RESIDUE

    def test_composite_rejected(self):
        with pytest.raises(DomainError):
            cubic_residue_euler(2, 10)

    @given(a=st.integers(1, 10**6), p=st.sampled_from((7, 13, 31, 37, 43, 61, 103)))
    @settings(max_examples=200)
    def test_verdict_matches_explicit_cube_search(self, a, p):
        assume(a % p != 0)
        cubes = {pow(x, 3, p) for x in range(1, p)}
        verdict = cubic_residue_euler(a, p)
        assert (verdict.tag is CubicTag.RESIDUE) == (a % p in cubes)


class TestPrimitiveCubeRoot:
    def test_reference_values(self):
        assert primitive_cube_root(7) == 2
        assert primitive_cube_root(13) == 3
        assert primitive_cube_root(31) == 5

    def test_wrong_residue_class(self):
        with pytest.raises(DomainError):
            primitive_cube_root(5)

    @given(p=st.sampled_from((7, 13, 19, 31, 37, 43, 61, 67, 73, 79, 97, 103)))
    def test_order_three_and_canonical(self, p):
        z = primitive_cube_root(p)
        assert pow(z, 3, p) == 1 and z != 1
        assert z == min(z, z * z % p)


class TestCharacterExponent:
    def test_one_is_always_a_cube(self):
        assert cubic_character_exponent(1, 7) == 0

    def test_two_mod_seven(self):
        assert cubic_character_exponent(2, 7) == 2

    def test_two_mod_thirteen(self):
        assert cubic_character_exponent(2, 13) == 1

    def test_preconditions(self):
        with pytest.raises(DomainError):
            cubic_character_exponent(2, 5)
        with pytest.raises(DomainError):
            cubic_character_exponent(7, 7)

    @given(a=st.integers(1, 500), b=st.integers(1, 500),
           p=st.sampled_from((7, 13, 31, 37, 43, 61)))
    @settings(max_examples=200)
    def test_exponent_is_additive(self, a, b, p):
        assume(a % p != 0 and b % p != 0)
        m = cubic_character_exponent(a, p)
        n = cubic_character_exponent(b, p)
        assert cubic_character_exponent(a * b, p) == (m + n) % 3


class TestQuadraticForm:
    def test_canonical_forms(self):
        assert RESIDUE_FORM.discriminant == -108
        assert NONRESIDUE_FORM.discriminant == -108
        assert RESIDUE_FORM(2, 1) == 31
        assert NONRESIDUE_FORM(0, 1) == 7

    def test_rejects_imprimitive(self):
        with pytest.raises(DomainError):
            QuadraticForm(2, 0, 2)

    def test_rejects_indefinite(self):
        with pytest.raises(DomainError):
            QuadraticForm(1, 0, -1)
        with pytest.raises(DomainError):
            QuadraticForm(-1, 0, -1)


class TestRepresentByForm:
    def test_residue_form_31(self):
        assert represent_by_form(RESIDUE_FORM, 31) == (2, 1)

    def test_nonresidue_form_7(self):
        assert represent_by_form(NONRESIDUE_FORM, 7) == (0, 1)

    def test_absent(self):
        assert represent_by_form(RESIDUE_FORM, 7) is None

    def test_canonical_among_sign_choices(self):
        assert represent_by_form(RESIDUE_FORM, 28) == (1, 1)
        assert represent_by_form(QuadraticForm(1, 0, 1), 25) == (5, 0)

    @given(u=st.integers(-40, 40), v=st.integers(-10, 10))
    @settings(max_examples=150)
    def test_found_witness_evaluates_back(self, u, v):
        n = RESIDUE_FORM(u, v)
        assume(n >= 1)
        witness = represent_by_form(RESIDUE_FORM, n)
        assert witness is not None
        assert RESIDUE_FORM(*witness) == n


class TestGaussClassification:
    def test_31_is_residue_form(self):
        cls = gauss_classify(31)
        assert cls.branch is Branch.RESIDUE_FORM
        assert cls.witness == (2, 1)
        assert cls.rho_p == 3
        assert cls.chi == 1.0

    def test_7_is_nonresidue_form(self):
        cls = gauss_classify(7)
        assert cls.branch is Branch.NONRESIDUE_FORM
        assert cls.witness == (0, 1)
        assert cls.rho_p == 0
        assert cls.chi == -0.5

    def test_13_witness(self):
        cls = gauss_classify(13)
        assert cls.branch is Branch.NONRESIDUE_FORM
        assert cls.witness == (1, 1)
        assert cls.rho_p == 0

    def test_three_and_two_mod_three_branches(self):
        cls3 = gauss_classify(3)
        assert cls3.branch is Branch.THREE
        assert cls3.witness is None and cls3.rho_p == 1 and cls3.chi is None
        cls5 = gauss_classify(5)
        assert cls5.branch is Branch.TWO_MOD3
        assert cls5.rho_p == 1

    def test_composite_rejected(self):
        with pytest.raises(DomainError):
            gauss_classify(49)

    def test_split_agrees_with_euler_below_2000(self, tables_small):
        for p in primes_one_mod_three(tables_small, 7, 2000):
            cls = gauss_classify(p)
            euler = cubic_residue_euler(2, p)
            if cls.branch is Branch.RESIDUE_FORM:
                assert euler.tag is CubicTag.RESIDUE
                u, v = cls.witness
                assert u * u + 27 * v * v == p
            else:
                assert euler.tag is CubicTag.NONRESIDUE
                u, v = cls.witness
                assert 4 * u * u + 2 * u * v + 7 * v * v == p


class TestChi:
    def test_reference_values(self):
        assert chi(2, 31) == 1.0
        assert chi(2, 7) == -0.5

    def test_preconditions(self):
        with pytest.raises(DomainError):
            chi(2, 5)
        with pytest.raises(DomainError):
            chi(7, 7)


class TestRho:
    def test_rho_prime_reference(self):
        assert rho_prime(2, 3) == 1
        assert rho_prime(2, 31) == 3
        assert rho_prime(2, 7) == 0
        assert rho_prime(2, 2) == 1

    def test_rho_reference(self):
        assert rho(2, 1) == 1
        assert rho(2, 15) == 1
        assert rho(2, 35) == 0

    def test_rho_rejects_square_factor(self):
        with pytest.raises(DomainError):
            rho(2, 9)

    def test_bruteforce_reference(self):
        assert rho_bruteforce(CUBIC2, 1) == 1
        assert rho_bruteforce(CUBIC2, 9) == 0
        assert rho_bruteforce(CUBIC2, 31) == 3

    def test_roots_mod_31(self):
        assert roots_mod(CUBIC2, 31) == [11, 24, 27]

    def test_root_mod_15_is_seven(self):
        assert roots_mod(CUBIC2, 15) == [7]

    def test_budget(self):
        with pytest.raises(ResourceError):
            roots_mod(CUBIC2, 10**7 + 1)

    @given(q=st.integers(1, 3000))
    @settings(max_examples=250, deadline=None)
    def test_formula_matches_scan_on_squarefree(self, q):
        assume(factorize(q).is_squarefree)
        assert rho(2, q) == rho_bruteforce(CUBIC2, q)

    @given(k=st.integers(-50, 50), q=st.integers(1, 500))
    @settings(max_examples=200, deadline=None)
    def test_formula_matches_scan_other_shifts(self, k, q):
        assume(factorize(q).is_squarefree)
        assert rho(k, q) == rho_bruteforce(Polynomial.cubic(k), q)

    @given(m=st.integers(1, 2000))
    @settings(max_examples=150, deadline=None)
    def test_roots_actually_vanish(self, m):
        for r in roots_mod(CUBIC2, m):
            assert (r**3 + 2) % m == 0
            assert 0 <= r < m
