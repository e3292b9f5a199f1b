"""Moshinsky two-oscillator model: Hartree-Fock energies versus ground-state entanglement."""

from ._core import (
    alpha_min,
    concurrence,
    concurrence_from_ecorr,
    correlation_energy,
    density_exact,
    density_hf,
    deviation,
    ecorr_from_concurrence,
    eigenfunction_coefficients,
    entropy,
    entropy_from_ecorr,
    eval,
    exact_energy,
    figure,
    figure_csv,
    hf_energy,
    ising,
    k_from_ecorr,
    oracle,
    overlap,
    purity,
    quantities,
    reduced_spectrum,
    spectral_coefficients,
    verify,
)

__all__ = [name for name in dir() if not name.startswith("_")]
