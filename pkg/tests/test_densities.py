import numpy as np
import pytest
from scipy.integrate import quad

from waveot.densities import (DiscreteMeasure, bump_density, dilate, discretize,
                              sample_for_dwt, translate, uniform_density)
from waveot.errors import (DomainOverflow, InvalidGrid, InvalidInterval,
                           UnbalancedMarginals)


def test_uniform_basics():
    p = uniform_density(0.0, 1.0)
    assert p(0.5) == 1.0
    assert p(1.5) == 0.0
    assert p(-0.1) == 0.0
    with pytest.raises(InvalidInterval):
        uniform_density(2.0, 1.0)


def test_uniform_dilation_paper_cases():
    p = uniform_density(1.0, 2.0)
    narrow = dilate(p, 0.5, 1.5)
    assert narrow.support == (1.25, 1.75)
    assert abs(narrow(1.5) - 2.0) < 1e-12
    wide = dilate(p, 1.5, 1.5)
    assert wide.support == (0.75, 2.25)
    assert abs(wide(1.5) - 2.0 / 3.0) < 1e-12
    with pytest.raises(InvalidInterval):
        dilate(p, 0.0, 1.5)


def test_identity_dilation():
    p = bump_density(1.0, 0.5)
    q = dilate(p, 1.0, 0.3)
    xs = np.linspace(0.4, 1.6, 101)
    assert np.allclose(p(xs), q(xs), atol=1e-12)


def test_translate():
    p = uniform_density(0.0, 1.0)
    q = translate(p, 2.0)
    assert q.support == (2.0, 3.0)
    assert q(2.5) == 1.0 and q(0.5) == 0.0


def test_bump_profile_and_mass():
    # paper profile check: centered at 1/2 with half-width 1/2 equals the
    # standard bump exp(-1/(1-(2u)^2)) shifted from [-1/2, 1/2]
    p = bump_density(0.5, 0.5)
    assert p(0.0) == 0.0 and p(1.0) == 0.0
    val, _ = quad(lambda x: float(p(x)), 0.0, 1.0, epsabs=1e-10, epsrel=1e-10)
    assert abs(val - 1.0) < 1e-8
    c0 = bump_density(0.0, 0.5)
    xs = np.linspace(-0.49, 0.49, 51)
    assert np.allclose(c0(xs), c0(-xs), atol=1e-14)
    with pytest.raises(InvalidInterval):
        bump_density(0.0, 0.0)


def test_mass_preserved_by_transforms():
    p = bump_density(0.3, 0.3)
    for d in (translate(p, 1.2), dilate(p, 0.6, 0.3), dilate(p, 1.4, 0.0)):
        lo, hi = d.support
        val, _ = quad(lambda x: float(d(x)), lo, hi, epsabs=1e-10, epsrel=1e-10)
        assert abs(val - 1.0) < 1e-8


def test_sample_for_dwt_hand_case():
    p = uniform_density(0.0, 1.0)
    sd = sample_for_dwt(p, -1, 2)
    assert sd.spacing == 0.5
    assert sd.scale_factor_applied
    assert np.allclose(sd.values, 2.0 ** -0.5 * np.array([1.0, 1.0, 0.0, 0.0]),
                       atol=1e-14)


def test_sample_for_dwt_full_paper_size():
    p = bump_density(0.5, 0.5)
    sd = sample_for_dwt(p, -11, 22)
    assert len(sd.values) == 2 ** 22
    nz = np.flatnonzero(sd.values)
    assert len(nz) > 0
    assert nz[-1] * sd.spacing <= 1.0 + sd.spacing


def test_sample_for_dwt_overflow():
    p = uniform_density(0.0, 4.0)
    with pytest.raises(DomainOverflow):
        sample_for_dwt(p, -1, 4)


def test_sample_rules_agree_for_smooth_density():
    # cell average = point value + h^2 p''/24 + ...; the bump's second
    # derivative peaks around 1e2, so 2^-11 spacing gives ~1e-5 agreement
    p = bump_density(0.5, 0.5)
    point = sample_for_dwt(p, -1, 12, rule="point")
    cell = sample_for_dwt(p, -1, 12, rule="cell")
    assert np.max(np.abs(point.values - cell.values)) < 1e-4


def test_cell_rule_preserves_difference_mass():
    # dilation changes the support width, so the point rule miscounts the
    # jump cells while cell averages keep the sampled masses matched
    p = uniform_density(1.0, 2.0)
    q = dilate(p, 0.73, 1.5)
    diff_point = (sample_for_dwt(p, -3, 10, rule="point").values
                  - sample_for_dwt(q, -3, 10, rule="point").values)
    diff_cell = (sample_for_dwt(p, -3, 10, rule="cell").values
                 - sample_for_dwt(q, -3, 10, rule="cell").values)
    assert abs(diff_cell.sum()) < abs(diff_point.sum()) / 16.0


def test_sampling_consistency_across_m():
    # sum of squared samples approximates the L2 norm of the density up to
    # the dyadic scale factor and must be stable as M grows
    p = bump_density(0.5, 0.5)
    totals = []
    for M in (10, 11):
        sd = sample_for_dwt(p, -1, M)
        totals.append(float(np.sum(sd.values ** 2)))
    assert abs(totals[0] - totals[1]) < 0.02 * totals[1]


def test_discretize_shared_domain():
    p = uniform_density(0.0, 1.0)
    m = discretize(p, 1000, domain=(0.0, 3.0))
    nz = np.count_nonzero(m.weights)
    assert 330 <= nz <= 338
    assert abs(m.weights.sum() - 1.0) < 1e-12
    vals = m.weights[m.weights > 0]
    assert np.allclose(vals, vals[0], atol=1e-15)


def test_discretize_symmetry():
    p = bump_density(0.5, 0.5)
    m = discretize(p, 1000)
    assert np.max(np.abs(m.weights - m.weights[::-1])) < 1e-12


def test_discretize_errors():
    p = uniform_density(0.0, 1.0)
    with pytest.raises(InvalidGrid):
        discretize(p, 1)
    with pytest.raises(InvalidGrid):
        discretize(p, 100, domain=(2.0, 3.0))


def test_discrete_measure_validation():
    with pytest.raises(InvalidGrid):
        DiscreteMeasure(np.array([0.0, 0.0]), np.array([0.5, 0.5]))
    with pytest.raises(UnbalancedMarginals):
        DiscreteMeasure(np.array([0.0, 1.0]), np.array([0.5, 0.6]))
    with pytest.raises(UnbalancedMarginals):
        DiscreteMeasure(np.array([0.0, 1.0]), np.array([-0.5, 1.5]))
