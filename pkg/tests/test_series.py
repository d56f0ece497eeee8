import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cubicprimes import (
    DomainError,
    Polynomial,
    QuadraticForm,
    ResourceError,
    dirichlet_partial_sum,
    epstein_mu_sum,
    epstein_r,
    epstein_zeta_partial,
    kappa_trajectory,
    representation_counts,
)

CUBIC2 = Polynomial.cubic(2)
SQUARES = QuadraticForm(1, 0, 1)
RESIDUE = QuadraticForm(1, 0, 27)
NONRESIDUE = QuadraticForm(4, 2, 7)


class TestDirichletPartialSum:
    def test_single_term_is_zero(self):
        rec = dirichlet_partial_sum(CUBIC2, 1.0, 1)[0]
        assert rec.value == 0.0
        assert rec.terms_used == 1

    def test_two_terms(self):
        rec = dirichlet_partial_sum(CUBIC2, 1.0, 2)[0]
        assert rec.value == pytest.approx(-math.log(2) / 2, rel=1e-15)

    def test_ten_terms_hand_value(self):
        rec = dirichlet_partial_sum(CUBIC2, 1.0, 10)[0]
        expected = (-math.log(2) / 2 - math.log(3) / 3 - math.log(5) / 5
                    + math.log(6) / 6 + math.log(10) / 10)
        assert rec.value == pytest.approx(expected, rel=1e-14)
        assert rec.value == pytest.approx(-0.5057801814854156, rel=1e-13)

    def test_checkpoint_prefix_property(self):
        full = dirichlet_partial_sum(CUBIC2, 1.0, 10**4, checkpoints=[10, 100, 10**4])
        for rec in full:
            alone = dirichlet_partial_sum(CUBIC2, 1.0, rec.x)[0]
            assert alone.value == rec.value
            assert alone.terms_used == rec.terms_used

    def test_higher_s_shrinks_terms(self):
        v1 = abs(dirichlet_partial_sum(CUBIC2, 1.0, 1000)[0].value)
        v2 = abs(dirichlet_partial_sum(CUBIC2, 2.0, 1000)[0].value)
        assert v2 < v1

    def test_validation(self):
        with pytest.raises(DomainError):
            dirichlet_partial_sum(CUBIC2, 0.5, 100)
        with pytest.raises(DomainError):
            dirichlet_partial_sum(CUBIC2, 1.0, 0)
        with pytest.raises(DomainError):
            dirichlet_partial_sum(CUBIC2, 1.0, 100, checkpoints=[50, 20])
        with pytest.raises(DomainError):
            dirichlet_partial_sum(CUBIC2, 1.0, 100, checkpoints=[200])


class TestKappaTrajectory:
    def test_degenerate_single_checkpoint(self):
        kt = kappa_trajectory(CUBIC2, 10)
        assert len(kt.records) == 1
        assert kt.fitted_kappa == -kt.records[0].value
        assert kt.fit_residual == 0.0

    def test_deterministic_recomputation(self):
        a = kappa_trajectory(CUBIC2, 10**3)
        b = kappa_trajectory(CUBIC2, 10**3)
        assert a == b

    def test_million_scale_fit_is_finite(self):
        kt = kappa_trajectory(CUBIC2, 10**5)
        assert math.isfinite(kt.fitted_kappa)
        assert kt.fitted_kappa > 0
        assert len(kt.records) == 5


class TestEpsteinR:
    def test_four_units_for_square_form(self):
        assert epstein_r(SQUARES, 1) == 4

    def test_residue_form_28(self):
        assert epstein_r(RESIDUE, 28) == 4

    def test_residue_form_gaps(self):
        assert epstein_r(RESIDUE, 5) == 0
        assert epstein_r(RESIDUE, 1) == 2

    def test_nonresidue_form_minimum(self):
        assert epstein_r(NONRESIDUE, 3) == 0
        assert epstein_r(NONRESIDUE, 4) == 2

    def test_domain(self):
        with pytest.raises(DomainError):
            epstein_r(SQUARES, 0)

    @given(n=st.integers(1, 300),
           form=st.sampled_from((SQUARES, RESIDUE, NONRESIDUE)))
    @settings(max_examples=200)
    def test_agrees_with_direct_lattice_count(self, n, form):
        direct = sum(
            1
            for u in range(-n, n + 1)
            for v in range(-n, n + 1)
            if form(u, v) == n
        )
        assert epstein_r(form, n) == direct


class TestEpsteinZetaPartial:
    def test_single_shell(self):
        assert epstein_zeta_partial(SQUARES, 2.0, 1) == pytest.approx(4.0, rel=1e-15)

    def test_frozen_reference_values(self):
        assert epstein_zeta_partial(SQUARES, 2.0, 10**4) == pytest.approx(
            6.0264978905395274, rel=1e-12)
        assert epstein_zeta_partial(SQUARES, 1.5, 10**4) == pytest.approx(
            8.970790856821928, rel=1e-12)
        assert epstein_zeta_partial(RESIDUE, 1.5, 10**4) == pytest.approx(
            2.6357245235045754, rel=1e-12)
        assert epstein_zeta_partial(RESIDUE, 2.0, 10**4) == pytest.approx(
            2.191503255508531, rel=1e-12)
        assert epstein_zeta_partial(NONRESIDUE, 1.5, 10**4) == pytest.approx(
            0.7758068488620665, rel=1e-12)
        assert epstein_zeta_partial(NONRESIDUE, 2.0, 10**4) == pytest.approx(
            0.2428982751869335, rel=1e-12)

    def test_empty_when_nothing_represented(self):
        assert epstein_zeta_partial(NONRESIDUE, 2.0, 3) == 0.0

    def test_validation_and_budget(self):
        with pytest.raises(DomainError):
            epstein_zeta_partial(SQUARES, 1.0, 100)
        with pytest.raises(DomainError):
            epstein_zeta_partial(SQUARES, 2.0, 0)
        with pytest.raises(ResourceError):
            epstein_zeta_partial(SQUARES, 2.0, 10**7 + 1)

    @given(n_max=st.integers(1, 400),
           form=st.sampled_from((SQUARES, RESIDUE, NONRESIDUE)),
           s=st.sampled_from((1.5, 2.0, 3.0)))
    @settings(max_examples=80, deadline=None)
    def test_lattice_sum_matches_per_n_route(self, n_max, form, s):
        per_n = sum(epstein_r(form, n) / n**s for n in range(1, n_max + 1))
        assert epstein_zeta_partial(form, s, n_max) == pytest.approx(
            per_n, rel=1e-12, abs=1e-12)


class TestRepresentationCounts:
    def test_matches_per_n_oracle(self):
        for form in (SQUARES, RESIDUE, NONRESIDUE):
            counts = representation_counts(form, 200)
            assert counts[0] == 0
            for n in range(1, 201):
                assert counts[n] == epstein_r(form, n)


class TestEpsteinMuSum:
    def test_single_term(self):
        assert epstein_mu_sum(RESIDUE, 2.0, 1) == pytest.approx(2.0, rel=1e-15)

    def test_two_terms(self):
        assert epstein_mu_sum(SQUARES, 2.0, 2) == pytest.approx(3.0, rel=1e-15)

    def test_empty(self):
        assert epstein_mu_sum(SQUARES, 2.0, 0) == 0.0

    def test_validation(self):
        with pytest.raises(DomainError):
            epstein_mu_sum(SQUARES, 0.5, 100)
        with pytest.raises(DomainError):
            epstein_mu_sum(SQUARES, 2.0, -1)

    def test_against_direct_sum(self, tables_small):
        n_max = 500
        direct = sum(
            int(tables_small.mu[n]) * epstein_r(RESIDUE, n) / n**1.5
            for n in range(1, n_max + 1)
        )
        assert epstein_mu_sum(RESIDUE, 1.5, n_max) == pytest.approx(direct, rel=1e-12)
