"""
LadderKit — The Five Solvable Systems

Static description of each system, keyed by its stable command-line name.
Rationals are written as strings ("1/2") and read with Fraction.

  kernel_shift      c in (p + i c/x), the radial kernel of the dimension
  measure_exponent  coordinate power of the inner-product weight
  chain_shift       energy added per link of the factorization chain
  family            oscillator (W = α/x + x) or coulomb (W = α/x + 1/ν)
"""

SYSTEM_TABLE = {
    "sho1d": {
        "title": "1D harmonic oscillator",
        "dimension": 1,
        "family": "oscillator",
        "kernel_shift": "0",
        "measure_exponent": "0",
        "chain_shift": "1",
        "polynomial": "hermite",
        "argument": "x",
        "level_name": None,
        "angular": "none",
    },
    "osc2d": {
        "title": "2D isotropic harmonic oscillator",
        "dimension": 2,
        "family": "oscillator",
        "kernel_shift": "1/2",
        "measure_exponent": "1",
        "chain_shift": "1",
        "polynomial": "laguerre",
        "argument": "x2",
        "level_name": "m",
        "angular": "exp(i m phi)/sqrt(2 pi)",
    },
    "osc3d": {
        "title": "3D isotropic harmonic oscillator",
        "dimension": 3,
        "family": "oscillator",
        "kernel_shift": "1",
        "measure_exponent": "2",
        "chain_shift": "1",
        "polynomial": "laguerre",
        "argument": "x2",
        "level_name": "l",
        "angular": "Y_l^m(theta, phi)",
    },
    "coul2d": {
        "title": "2D Coulomb problem",
        "dimension": 2,
        "family": "coulomb",
        "kernel_shift": "1/2",
        "measure_exponent": "1",
        "chain_shift": "0",
        "polynomial": "laguerre",
        "argument": "2x/(n-1/2)",
        "level_name": "m",
        "angular": "exp(i m phi)/sqrt(2 pi)",
    },
    "coul3d": {
        "title": "3D Coulomb problem (hydrogen)",
        "dimension": 3,
        "family": "coulomb",
        "kernel_shift": "1",
        "measure_exponent": "2",
        "chain_shift": "0",
        "polynomial": "laguerre",
        "argument": "2x/n",
        "level_name": "l",
        "angular": "Y_l^m(theta, phi)",
    },
}

SYSTEM_NAMES = tuple(SYSTEM_TABLE)
