"""Order continuity: structural dichotomy, nets, witnesses, probes."""

from __future__ import annotations

from fractions import Fraction

import pytest

from riesz_lab import (
    ConvergenceCertificate,
    Element,
    ExplicitFamily,
    Functional,
    Measure,
    Polynomial,
    ProductFunctionalPolynomial,
    Space,
    SymTensor,
    TailFamily,
    dichotomy_agrees,
    discontinuity_witness,
    oa_order_continuity,
    power_net_dominator,
    to_polynomial,
    urysohn_witness_net,
    zero_order_continuity_probe,
)
from riesz_lab.errors import BoundViolationError, CertificateError, NoWitnessError, SpaceMismatchError
from riesz_lab.sampling import measure, rng_for

OM = Space.omega_plus_one()


def om(prefix, tail):
    return Element.omega(prefix, tail)


class TestFunctionals:
    def test_coordinate(self):
        f = Functional.coordinate(2)
        assert f.value(om([4, 7, 1], 0)) == 7
        assert f.is_order_continuous()
        with pytest.raises(ValueError):
            Functional.coordinate(0)

    def test_limit_evaluation(self):
        f = Functional.limit()
        assert f.value(om([1, 2], 5)) == 5
        assert not f.is_order_continuous()

    def test_measure_functional(self):
        normal = Functional.of_measure(Measure(OM, {1: -3, 4: 2}))
        assert normal.value(om([2], 1)) == -6 + 2
        assert normal.is_order_continuous()
        singular = Functional.of_measure(Measure(OM, {1: 1}, limit_atom=Fraction(-1, 2)))
        assert not singular.is_order_continuous()
        with pytest.raises(ValueError):
            Functional("measure")

    def test_unknown_kind(self):
        with pytest.raises(ValueError):
            Functional("nope")


class TestProductPolynomial:
    def test_evaluate(self):
        poly = ProductFunctionalPolynomial(3, Functional.coordinate(1), Functional.limit())
        assert poly.evaluate(om([2], 5)) == 20
        assert poly.space == OM

    def test_degree_floor(self):
        with pytest.raises(ValueError):
            ProductFunctionalPolynomial(1, Functional.coordinate(1), Functional.limit())


class TestStructuralDichotomy:
    def test_measure_verdicts(self):
        assert oa_order_continuity(to_polynomial(Measure(OM, {1: 1, 5: -2}), 2))
        assert not oa_order_continuity(to_polynomial(Measure(OM, {}, limit_atom=1), 2))
        # negative limit mass is still mass: the criterion reads the modulus
        assert not oa_order_continuity(to_polynomial(Measure(OM, {2: 3}, limit_atom=Fraction(-1, 2)), 2))

    def test_finite_space_is_always_continuous(self):
        poly = Polynomial.from_tensor(SymTensor.diagonal(Space.finite(3), 2, {1: -4}))
        assert oa_order_continuity(poly)


class TestUrysohnNet:
    def test_members_and_verification(self):
        cert = urysohn_witness_net()
        assert cert.sequence.member(1) == om([], 1)
        assert cert.sequence.member(3) == om([0, 0], 1)
        assert cert.limit == Element.zero(OM)
        assert cert.verify(40).passed

    def test_scaled(self):
        cert = urysohn_witness_net(Fraction(1, 3))
        assert cert.sequence.member(2) == om([0], Fraction(1, 3))
        assert cert.verify(10).passed

    def test_bad_scale(self):
        with pytest.raises(ValueError):
            urysohn_witness_net(0)
        with pytest.raises(ValueError):
            urysohn_witness_net(-2)

    def test_finite_space_rejected(self):
        with pytest.raises(SpaceMismatchError):
            urysohn_witness_net(1, Space.finite(2))


class TestPowerNetDominator:
    def test_degree_one_is_identity(self):
        cert = urysohn_witness_net()
        assert power_net_dominator(cert, 1, 1) is cert

    def test_power_floor(self):
        with pytest.raises(ValueError):
            power_net_dominator(urysohn_witness_net(), 0, 1)

    def test_zero_limit_power_verifies(self):
        powered = power_net_dominator(urysohn_witness_net(), 3, 1)
        assert powered.limit.is_zero()
        assert powered.sequence.member(2) == om([0], 1)
        assert powered.verify(30).passed

    def test_nonzero_limit_uses_larger_factor(self):
        one = Element.constant(OM, 1)
        base = ConvergenceCertificate(TailFamily(one, Element.constant(OM, -1)), one, TailFamily.indicator(1))
        assert base.verify(20).passed
        powered = power_net_dominator(base, 2, 1)
        assert powered.limit == one
        assert powered.verify(20).passed

    def test_sequence_bound_enforced(self):
        with pytest.raises(BoundViolationError):
            power_net_dominator(urysohn_witness_net(), 2, Fraction(1, 2))

    def test_limit_bound_enforced(self):
        zero = Element.zero(OM)
        cert = ConvergenceCertificate(
            ExplicitFamily((zero,)), Element.constant(OM, 2), ExplicitFamily((zero,))
        )
        with pytest.raises(BoundViolationError):
            power_net_dominator(cert, 2, 1)


class TestDiscontinuityWitness:
    @pytest.mark.parametrize("m", [2, 3, 4])
    def test_unit_gap_at_constant_one(self, m):
        poly = ProductFunctionalPolynomial(m, Functional.coordinate(1), Functional.limit())
        witness = discontinuity_witness(poly, probe_depth=30)
        assert witness.gap == 1
        assert witness.base_value == 1
        assert witness.base_point == Element.constant(OM, 1)
        assert set(witness.values) == {0}
        assert witness.net.verify(30).passed

    def test_measure_first_factor(self):
        poly = ProductFunctionalPolynomial(
            2, Functional.of_measure(Measure(OM, {1: 2})), Functional.limit()
        )
        witness = discontinuity_witness(poly, probe_depth=10)
        assert witness.gap == 2

    def test_no_witness_when_psi_not_limit(self):
        poly = ProductFunctionalPolynomial(2, Functional.coordinate(1), Functional.coordinate(2))
        with pytest.raises(NoWitnessError):
            discontinuity_witness(poly)

    def test_no_witness_when_phi_discontinuous(self):
        poly = ProductFunctionalPolynomial(2, Functional.limit(), Functional.limit())
        with pytest.raises(NoWitnessError):
            discontinuity_witness(poly)

    def test_no_witness_when_base_value_vanishes(self):
        poly = ProductFunctionalPolynomial(
            2, Functional.of_measure(Measure(OM, {1: 1, 2: -1})), Functional.limit()
        )
        with pytest.raises(NoWitnessError):
            discontinuity_witness(poly)


class TestZeroProbe:
    def test_normal_measure_passes_with_bounds(self):
        poly = to_polynomial(Measure(OM, {1: 1}), 2)
        verdict = zero_order_continuity_probe(poly, [urysohn_witness_net()], probe_depth=12)
        assert verdict.passed
        (probe,) = verdict.probes
        assert probe.eventual_value == 0
        assert probe.probed_values[0] == 1
        assert set(probe.probed_values[1:]) == {0}
        assert probe.bound_values is not None
        assert all(abs(v) <= b for v, b in zip(probe.probed_values, probe.bound_values))

    def test_limit_mass_fails(self):
        poly = to_polynomial(Measure(OM, {3: 1}, limit_atom=2), 2)
        verdict = zero_order_continuity_probe(poly, [urysohn_witness_net()], probe_depth=8)
        assert not verdict.passed
        (probe,) = verdict.probes
        assert probe.eventual_value == 2

    def test_product_polynomial_probe(self):
        poly = ProductFunctionalPolynomial(2, Functional.coordinate(1), Functional.limit())
        verdict = zero_order_continuity_probe(poly, [urysohn_witness_net()], probe_depth=10)
        assert verdict.passed
        (probe,) = verdict.probes
        assert probe.bound_values is not None

    def test_nonzero_limit_rejected(self):
        poly = to_polynomial(Measure(OM, {1: 1}), 2)
        one = Element.constant(OM, 1)
        cert = ConvergenceCertificate(TailFamily(one, Element.constant(OM, -1)), one, TailFamily.indicator(1))
        with pytest.raises(CertificateError):
            zero_order_continuity_probe(poly, [cert])

    def test_unverifiable_net_rejected(self):
        poly = to_polynomial(Measure(OM, {1: 1}), 2)
        bad = ConvergenceCertificate(
            TailFamily(Element.constant(OM, 1), Element.constant(OM, -1)),
            Element.zero(OM),
            TailFamily.indicator(1),
        )
        with pytest.raises(CertificateError):
            zero_order_continuity_probe(poly, [bad])


class TestDichotomy:
    def test_agreement_random(self):
        for i in range(80):
            rng = rng_for("dichotomy", i)
            poly = to_polynomial(measure(rng, OM), 2 + i % 3)
            assert dichotomy_agrees(poly, scale=1 + i % 2, probe_depth=15)

    def test_both_branches_hit(self):
        normal = to_polynomial(Measure(OM, {1: 1}), 2)
        singular = to_polynomial(Measure(OM, {1: 1}, limit_atom=1), 2)
        assert oa_order_continuity(normal) and not oa_order_continuity(singular)
        assert dichotomy_agrees(normal) and dichotomy_agrees(singular)
