"""Order continuity of polynomials on the sequence backend.

An orthogonally additive polynomial is order continuous exactly when the
modulus of its representing measure puts no mass on the limit point; that
criterion is decided structurally.  For polynomials built from a product of
linear functionals no such dichotomy holds: the probe machinery certifies
order continuity at zero along explicit nets, while a separate constructor
produces a verified witness of discontinuity at the constant-one element.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .convergence import (
    ConvergenceCertificate,
    ElementFamily,
    ExplicitFamily,
    TailFamily,
    family_sup_norm,
    power_family,
    scale_family,
)
from .errors import (
    BoundViolationError,
    CertificateError,
    NoWitnessError,
    RepresentationError,
    SpaceMismatchError,
)
from .lattice import LIMIT, Element, Space, q
from .measures import Measure, is_normal_measure
from .polynomials import MEASURE, Polynomial, to_measure


# -- linear functionals --------------------------------------------------------------

COORDINATE = "coordinate"
LIMIT_FUNCTIONAL = "limit"
MEASURE_FUNCTIONAL = "measure"


@dataclass(frozen=True)
class Functional:
    """A norm-bounded linear functional on the sequence backend."""

    kind: str
    index: int = 0
    measure: Measure | None = None

    def __post_init__(self):
        if self.kind not in (COORDINATE, LIMIT_FUNCTIONAL, MEASURE_FUNCTIONAL):
            raise ValueError(f"unknown functional kind {self.kind!r}")
        if self.kind == COORDINATE and self.index < 1:
            raise ValueError("coordinate index starts at 1")
        if self.kind == MEASURE_FUNCTIONAL and self.measure is None:
            raise ValueError("measure functional needs a measure")

    @staticmethod
    def coordinate(index: int) -> "Functional":
        return Functional(COORDINATE, index=index)

    @staticmethod
    def limit() -> "Functional":
        return Functional(LIMIT_FUNCTIONAL)

    @staticmethod
    def of_measure(mu: Measure) -> "Functional":
        return Functional(MEASURE_FUNCTIONAL, measure=mu)

    def value(self, x: Element) -> Fraction:
        if self.kind == COORDINATE:
            return x.value_at(self.index)
        if self.kind == LIMIT_FUNCTIONAL:
            return x.value_at(LIMIT)
        return self.measure.integrate(x, 1)

    def is_order_continuous(self) -> bool:
        """Pointwise evaluation at an isolated point follows any order
        limit; evaluation at the limit point does not (the tail-indicator
        net decreases to zero with value one throughout)."""
        if self.kind == COORDINATE:
            return True
        if self.kind == LIMIT_FUNCTIONAL:
            return False
        return is_normal_measure(abs(self.measure))


@dataclass(frozen=True)
class ProductFunctionalPolynomial:
    """x -> phi(x)^(m-1) * psi(x), homogeneous of degree m."""

    degree: int
    phi: Functional
    psi: Functional

    def __post_init__(self):
        if self.degree < 2:
            raise ValueError("product polynomials start at degree 2")

    @property
    def space(self) -> Space:
        return Space.omega_plus_one()

    def evaluate(self, x: Element) -> Fraction:
        return self.phi.value(x) ** (self.degree - 1) * self.psi.value(x)


# -- structural order continuity ------------------------------------------------------


def oa_order_continuity(poly: Polynomial) -> bool:
    """Decide order continuity of an orthogonally additive polynomial.

    The verdict is the normality of the modulus of the representing
    measure, which settles continuity at every point at once.
    """
    mu = poly.rep if poly.kind == MEASURE else to_measure(poly)
    return is_normal_measure(abs(mu))


# -- net constructions ----------------------------------------------------------------


def urysohn_witness_net(scale: Fraction | int = 1, space: Space | None = None) -> ConvergenceCertificate:
    """The decreasing net c*indicator({limit} union {isolated >= n}).

    Its lattice infimum is zero even though every member has value c at the
    limit point, which is what defeats evaluation there.
    """
    space = space or Space.omega_plus_one()
    if space.is_finite:
        raise SpaceMismatchError("the witness net lives on the sequence backend")
    c = q(scale)
    if c <= 0:
        raise ValueError("scale must be positive")
    net = TailFamily.indicator(c)
    return ConvergenceCertificate(net, Element.zero(space), net)


def power_net_dominator(cert: ConvergenceCertificate, m: int, bound_b: Fraction | int) -> ConvergenceCertificate:
    """Certificate for x_n^m -> x^m built from one for x_n -> x.

    The pointwise telescoping bound |u^m - v^m| <= m*B^(m-1)*|u - v| for
    |u|,|v| <= B turns the original dominator into one for the powered net;
    when the limit is zero the sharper factor B^(m-1) suffices.
    """
    if m < 1:
        raise ValueError("power must be at least 1")
    if m == 1:
        return cert
    bound = q(bound_b)
    actual = family_sup_norm(cert.sequence)
    if actual > bound:
        raise BoundViolationError(f"sequence sup-norm {actual} exceeds the stated bound {bound}")
    if abs(cert.limit).sup_norm() > bound:
        raise BoundViolationError("limit element exceeds the stated bound")
    factor = bound ** (m - 1) if cert.limit.is_zero() else m * bound ** (m - 1)
    return ConvergenceCertificate(
        power_family(cert.sequence, m),
        cert.limit ** m,
        scale_family(cert.dominator, factor),
    )


# -- witnesses and probes --------------------------------------------------------------


@dataclass(frozen=True)
class DiscontinuityWitness:
    base_point: Element
    net: ConvergenceCertificate
    gap: Fraction
    values: tuple[Fraction, ...]
    base_value: Fraction


def discontinuity_witness(poly: ProductFunctionalPolynomial, probe_depth: int = 50) -> DiscontinuityWitness:
    """Order discontinuity of phi^(m-1)*psi at the constant-one element.

    Along x_n = 1 - indicator(>= n) the second factor evaluates to zero for
    every n while the base value is one, so the gap is exactly one even
    though the net order converges to the base point.
    """
    if not poly.phi.is_order_continuous() or poly.psi.kind != LIMIT_FUNCTIONAL:
        raise NoWitnessError(
            "construction needs an order continuous first factor and the"
            " limit evaluation as second factor; with a normal measure the"
            " polynomial is order continuous everywhere and no witness exists"
        )
    space = Space.omega_plus_one()
    one = Element.constant(space, 1)
    net = TailFamily(one, Element.constant(space, -1))
    cert = ConvergenceCertificate(net, one, TailFamily.indicator(1))
    verdict = cert.verify(probe_depth)
    if not verdict.passed:
        raise CertificateError(f"witness net failed verification: {verdict.reason}")
    values = tuple(poly.evaluate(net.member(n)) for n in range(1, probe_depth + 1))
    base_value = poly.evaluate(one)
    gap = min(abs(v - base_value) for v in values)
    if gap <= 0:
        raise NoWitnessError("probed values do not separate from the base value")
    return DiscontinuityWitness(one, cert, gap, values, base_value)


@dataclass(frozen=True)
class NetProbe:
    eventual_value: Fraction
    probed_values: tuple[Fraction, ...]
    bound_values: tuple[Fraction, ...] | None


@dataclass(frozen=True)
class ProbeVerdict:
    passed: bool
    probes: tuple[NetProbe, ...]


def _stabilisation_index(poly) -> int:
    """Smallest n past which a tail-family member agrees, at every point the
    polynomial reads, with the pointwise limit of the net."""
    if isinstance(poly, Polynomial):
        return max(poly.rep.atoms.keys(), default=0) + 1
    points = [0]
    for f in (poly.phi, poly.psi):
        if f.kind == COORDINATE:
            points.append(f.index)
        elif f.kind == MEASURE_FUNCTIONAL:
            points.append(max(f.measure.atoms.keys(), default=0))
    return max(points) + 1


def _eventual_value(poly, family: ElementFamily) -> Fraction:
    """Exact limit of P(x_n) along the net.

    Explicit families are eventually their last member.  A tail family need
    not converge pointwise to a lattice element, but the polynomial reads
    only finitely many isolated points plus the limit point; past the
    largest of those the value P(x_n) is literally constant in n.
    """
    if isinstance(family, ExplicitFamily):
        return poly.evaluate(family.member(len(family.members)))
    if isinstance(family, TailFamily):
        if isinstance(poly, Polynomial) and poly.kind != MEASURE:
            raise RepresentationError("tail nets pair with measure or product polynomials")
        return poly.evaluate(family.member(_stabilisation_index(poly)))
    raise CertificateError("eventual values need an explicit or tail family")


def _functional_bound(f: Functional) -> Fraction:
    return abs(f.measure).variation_norm() if f.kind == MEASURE_FUNCTIONAL else Fraction(1)


def _certified_bound(poly, x: Element) -> Fraction | None:
    if isinstance(poly, Polynomial):
        if poly.kind == MEASURE:
            return abs(poly.rep).integrate(abs(x), poly.degree)
        return None
    m = poly.degree
    return _functional_bound(poly.phi) ** (m - 1) * _functional_bound(poly.psi) * x.sup_norm() ** m


def zero_order_continuity_probe(
    poly: Polynomial | ProductFunctionalPolynomial,
    nets: Sequence[ConvergenceCertificate],
    probe_depth: int = 50,
) -> ProbeVerdict:
    """Evaluate a polynomial along verified nets decreasing to zero.

    Passes when every net's exact eventual value is zero and, where a
    certified bound exists (the modulus integral for orthogonally additive
    polynomials, the sup-norm power for product polynomials), each probed
    value respects it.
    """
    probes = []
    passed = True
    for cert in nets:
        if not cert.limit.is_zero():
            raise CertificateError("probe nets must converge to zero")
        verdict = cert.verify(probe_depth)
        if not verdict.passed:
            raise CertificateError(f"unverifiable certificate: {verdict.reason}")
        values = tuple(poly.evaluate(cert.sequence.member(n)) for n in range(1, probe_depth + 1))
        bounds = []
        for n, v in enumerate(values, start=1):
            bound = _certified_bound(poly, cert.sequence.member(n))
            if bound is None:
                bounds = None
                break
            if abs(v) > bound:
                raise CertificateError("probed value escapes its certified bound")
            bounds.append(bound)
        eventual = _eventual_value(poly, cert.sequence)
        if eventual != 0:
            passed = False
        probes.append(NetProbe(eventual, values, tuple(bounds) if bounds is not None else None))
    return ProbeVerdict(passed, tuple(probes))


def dichotomy_agrees(poly: Polynomial, scale: Fraction | int = 1, probe_depth: int = 20) -> bool:
    """Probe verdict on the witness net versus the structural criterion."""
    cert = urysohn_witness_net(scale, poly.space)
    probe = zero_order_continuity_probe(poly, [cert], probe_depth)
    return probe.passed == oa_order_continuity(poly)
