import math

import pytest

import moshinsky


def test_ground_state_energies_at_zero_coupling():
    assert moshinsky.exact_energy(0.0) == pytest.approx(3.0)
    assert moshinsky.hf_energy(0.0) == pytest.approx(3.0)
    assert moshinsky.correlation_energy(0.0) == 0.0


def test_values_at_unit_coupling():
    assert moshinsky.entropy(1.0) == pytest.approx(0.408538627546, abs=1e-11)
    assert moshinsky.purity(1.0) == pytest.approx(0.894261663597, abs=1e-11)
    assert moshinsky.overlap(1.0) == pytest.approx(0.941571308319, abs=1e-11)
    big_c, small_c, delta = moshinsky.spectral_coefficients(1.0)
    assert big_c**3 * small_c == pytest.approx(0.0176026894168, rel=1e-10)
    assert delta == pytest.approx(0.5 * 3**0.25)


def test_ising_identities():
    assert moshinsky.ising.correlation_energy(1.5) == pytest.approx(0.5, abs=1e-15)
    assert moshinsky.ising.concurrence(1.5) == pytest.approx(0.6, abs=1e-15)


def test_bridge_round_trip():
    for k in (0.1, 0.5, 1.0):
        e = moshinsky.correlation_energy(k)
        assert moshinsky.k_from_ecorr(e) == pytest.approx(k, abs=1e-10)
        assert moshinsky.entropy_from_ecorr(e) == pytest.approx(moshinsky.entropy(k), abs=1e-9)
        c = moshinsky.concurrence_from_ecorr(e)
        assert moshinsky.ecorr_from_concurrence(c) == pytest.approx(e, rel=1e-9)


def test_alpha_min():
    assert moshinsky.alpha_min() == pytest.approx(0.318949, abs=1e-3)


def test_nystrom_top_eigenvalues():
    nu = moshinsky.oracle.nystrom_spectrum(1.0, 100)
    big_c, small_c, _ = moshinsky.spectral_coefficients(1.0)
    for level in range(4):
        assert nu[level] == pytest.approx(big_c * small_c**level, rel=1e-8)


def test_eval_and_figure():
    assert moshinsky.eval("entropy", K=1.0) == pytest.approx(0.408538627546, abs=1e-11)
    assert moshinsky.eval("ising-entropy", lam=2.0) == pytest.approx(0.6008760, abs=1e-6)
    fig1 = moshinsky.figure("fig1", points=11)
    assert list(fig1)[0] == "K"
    assert len(fig1["K"]) == 11
    assert fig1["ecorr"][0] == 0.0
    assert moshinsky.figure_csv("fig2", points=3).splitlines()[0] == "K,overlap"
    with pytest.raises(ValueError):
        moshinsky.eval("no-such-quantity", K=1.0)


def test_negative_coupling_rejected():
    with pytest.raises(ValueError):
        moshinsky.entropy(-0.1)


def test_verify_roundtrip_suite():
    rows = moshinsky.verify("roundtrip")
    assert rows and all(passed for _, _, _, passed in rows)
    assert all(math.isfinite(err) for _, err, _, _ in rows)
