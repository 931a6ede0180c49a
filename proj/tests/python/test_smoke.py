import math

import pytest

import rrm


def test_version():
    assert rrm.__version__ == "0.1.0"


def test_cir_fixture():
    p = rrm.DimensionlessParams(kf=5, kb=2, kd=0.25, r0=2)
    assert rrm.cir(1.0, p) == pytest.approx(0.015721048429950649, rel=1e-7)
    assert rrm.invert_cir(1.0, p) == pytest.approx(rrm.cir(1.0, p), rel=1e-7)


def test_roots_and_greens():
    p = rrm.DimensionlessParams(kf=10, kb=1, kd=0.5)
    a, b, c = rrm.solve_roots(p)
    assert a.real == pytest.approx(1.509325178354381)
    assert b == c.conjugate()
    assert rrm.greens_function(1.5, 0.5, p) == pytest.approx(0.007377658132324613, rel=1e-7)


def test_signal_and_asymptote():
    p = rrm.DimensionlessParams(kf=math.inf, na=5000)
    values = rrm.expected_signal([1.0, 1e9], p)
    assert values[-1] == pytest.approx(2500, rel=1e-4)
    assert rrm.cir_asymptote(rrm.DimensionlessParams(kf=10, r0=3)) == pytest.approx(10 / (3 * (10 + 4 * math.pi)))


def test_homogenization():
    layout = rrm.ReceptorLayout.from_mesh(1000, 5120)
    phi = rrm.correction_factor(layout, 10)
    assert phi == pytest.approx(0.2999081907635379, rel=1e-12)
    q = rrm.finite_receptor_params(rrm.DimensionlessParams(kf=10), layout)
    assert q.kf == pytest.approx(rrm.effective_forward_rate(10, phi))


def test_errors():
    with pytest.raises(rrm.DomainError):
        rrm.cir(-1.0, rrm.DimensionlessParams(kf=1))
    with pytest.raises(rrm.StepSizeError):
        rrm.simulate(rrm.DimensionlessParams(kf=math.inf), realizations=1)
    assert issubclass(rrm.ConfigError, rrm.Error)


def test_simulate_small():
    p = rrm.DimensionlessParams(kf=10, kb=1, kd=0, r0=1.5, na=30)
    a = rrm.simulate(p, dt=1e-3, realizations=3, horizon=0.2, level=2, bin_steps=50, seed=4)
    b = rrm.simulate(p, dt=1e-3, realizations=3, horizon=0.2, level=2, bin_steps=50, seed=4, threads=2)
    assert a == b
    assert len(a["t"]) == 4
    assert all(0 <= v <= 30 for v in a["mean"])


def test_units():
    s = rrm.SystemParams(receiver_radius=0.5e-6, release_distance=1e-6, diffusion=5e-9, kf=2.5e-14, kd=1e4)
    d = rrm.to_dimensionless(s)
    assert d.r0 == pytest.approx(2.0)
    assert d.kd == pytest.approx(0.5)
    assert rrm.to_dimensional_time(1.0, s) == pytest.approx(5e-5)
