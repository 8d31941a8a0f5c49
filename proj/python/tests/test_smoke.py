import math

import pytest

import pcc


def test_detection_probability_matches_reference():
    assert pcc.detection_prob(0.02, 1.0) == pytest.approx(0.019801326693244697779, rel=1e-15)
    assert pcc.miss_prob(0.02, 1.0) + pcc.detection_prob(0.02, 1.0) == pytest.approx(1.0)


def test_sandwich_at_default_point():
    probs = pcc.symbol_probs(pcc.ChannelParams.normalized(10.0, 0.02, 0.02, 30))
    t = pcc.beta_triple(probs, 30)
    exact = pcc.mi_binomial_mixture(0.5, probs, 30)
    assert pcc.lower_envelope(0.5, t.beta) <= exact <= pcc.upper_envelope(0.5, t.beta1, t.beta2)
    mu, imax = pcc.mi_max_bruteforce(probs, 30)
    assert 0.0 < mu < 1.0 and imax >= exact


def test_capacity_reference_values():
    c = pcc.capacity_tau(2.0, 0.5, 1.0)
    assert c.duty_cycle == pytest.approx(0.53931080734581276481, abs=1e-9)
    assert c.capacity_nats == pytest.approx(0.16775855025119219644, rel=1e-12)
    assert c.capacity_bits == pytest.approx(c.capacity_nats / math.log(2))
    assert pcc.wyner_poisson_capacity(1.0, 0.1) == pytest.approx(0.25055632696913128208, rel=1e-12)


def test_errors_map_to_python_exceptions():
    with pytest.raises(ValueError):
        pcc.detection_prob(-1.0, 1.0)
    with pytest.raises(ValueError):
        pcc.run_gap(scenario="bogus")
    with pytest.raises(ValueError):
        pcc.run_mi_sweep(colour="red")


def test_sweeps_return_tables():
    t = pcc.run_mi_sweep(mu_grid="0,0.5,1")
    assert t["header"][0] == "mu"
    assert len(t["rows"]) == 3
    assert t["rows"][0][1] == 0.0
    g = pcc.run_gap(scenario="zero-lambda", samples=10, dead_time=0.1, a_grid="lin:30:80:11")
    assert g["rows"][0][6] == pytest.approx(-0.5, rel=0.01)


def test_simulation_is_reproducible():
    params = pcc.ChannelParams.normalized(10.0, 0.02, 0.02, 30)
    a = pcc.simulate_counts(params, 5000, 3)
    b = pcc.simulate_counts(params, 5000, 3)
    assert a == b
    assert sum(a["symbols"]) == 5000


def test_acceptance_criterion_runs():
    passed, measured = pcc.run_criterion(8)
    assert passed
    assert "1/e" in measured
