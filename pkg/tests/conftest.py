"""Shared fixtures: packaged device files and synthetic mode coefficients."""

import cmath
import math
from pathlib import Path

import pytest

from jtwpa import derive_constants, load_device
from jtwpa.mixing import ModeCoefficients

ROOT = Path(__file__).resolve().parent.parent
DEVICE_DIR = ROOT / "devices"
DATA_DIR = ROOT / "data"

TAU = 2.0 * math.pi


def device_path(name: str) -> str:
    return str(DEVICE_DIR / f"{name}.json")


def load(name: str):
    params = load_device(device_path(name))
    return params, derive_constants(params)


@pytest.fixture(scope="session")
def rpm2000():
    return load("rpm2000")


@pytest.fixture(scope="session")
def rpm2000_lossless():
    return load("rpm2000_lossless")


@pytest.fixture(scope="session")
def twpa1016():
    return load("twpa1016")


@pytest.fixture(scope="session")
def twpa1016_fit():
    return load("twpa1016_fit")


def make_coeffs(
    gamma_s: float = 0.0,
    gamma_i: float = 0.0,
    mismatch: float = 0.0,
    pair: complex = 0.0,
    n_bar_s: float = 0.0,
    n_bar_i: float = 0.0,
) -> ModeCoefficients:
    """Mode coefficients with prescribed rates and unit kinematic placeholders.

    Lets tests drive the evolution, bath integral, and moment oracle at
    exactly chosen (gamma_s, gamma_i, mismatch, pair_rate) without solving
    for a device that realizes them.
    """
    balance = complex((gamma_s - gamma_i) / 4.0, mismatch / 2.0)
    pair_rate = complex(pair)
    g = cmath.sqrt(balance * balance + abs(pair_rate) ** 2)
    if g == 0:
        eta = complex("nan")
        rho = complex("nan")
    else:
        eta = balance / g
        rho = -1j * pair_rate / g
    return ModeCoefficients(
        omega_signal=1.0,
        omega_idler=1.0,
        omega_pump=1.0,
        lambda_signal=1.0,
        lambda_idler=1.0,
        lambda_pump=1.0,
        k_pump=1.0,
        theta_signal=0.0,
        theta_idler=0.0,
        theta_pump=0.0,
        chi_prime=0.0,
        d_omega_total=mismatch,
        gamma_signal=gamma_s,
        gamma_idler=gamma_i,
        n_bar_signal=n_bar_s,
        n_bar_idler=n_bar_i,
        pair_rate=pair_rate,
        balance=balance,
        g=g,
        eta=eta,
        rho=rho,
    )
