"""
LadderKit — Constants and Tolerances

All quantities are dimensionless:
- ħ = M = 1 everywhere
- ω = 1 for the oscillators
- e² = a0 = 1 for the Coulomb problems (consistent since a0 = ħ²/Me²)
"""

# =============================================================================
# Run defaults (overridable from the command line)
# =============================================================================
DEFAULTS = {
    "format": "text",        # text | json | latex | csv
    "precision": 64,         # bits for mpmath scalar evaluation
    "max_level": 12,         # guard on level / chain depth
    "seed": 0,               # randomized property suites in `verify`
    "jobs": 1,               # joblib workers for the verification grid
}

MIN_PRECISION = 53           # bits; below this a double is more accurate

# =============================================================================
# Numerical quadrature
# Adaptive Gauss–Legendre panels on [0, T] (or [−T, T] in 1D)
# =============================================================================
QUADRATURE = {
    "order": 24,             # Gauss–Legendre nodes per panel
    "initial_panels": 4,
    "max_doublings": 12,     # panel count stops at initial · 2^max_doublings
    "rel_change": 1e-12,     # successive estimates must agree to this
    "tail_bound": 1e-16,     # envelope bound that fixes the cutoff T
    "max_cutoff": 1e4,       # T never grows beyond this
}

ORIGIN_CUTOFF = 1e-12        # pointwise evaluation refuses t below this for negative powers

# Sign-change sampling for node counts
NODE_SAMPLING = {
    "samples": 4000,
    "zero_tolerance": 1e-13,  # relative to max |ψ| on the grid
}

# =============================================================================
# Operator DSL guards
# =============================================================================
DSL_LIMITS = {
    "max_depth": 100,            # nesting of parens, brackets, unary minus and ^
    "max_integer_digits": 1000,
    "max_exponent": 64,          # |exponent| of ^ after lowering
    "max_degree": 64,            # x and p degree of any subexpression, nested powers multiplied out
    "max_work": 250_000,         # term products one normal ordering may spend
    "max_literal_bits": 1 << 16, # size of rational constants once powers are applied
    "max_radicand_bits": 64,     # sqrt() arguments are factored
}

# =============================================================================
# Verification grid (the `verify` command)
# =============================================================================
VERIFY_GRID = {
    "max_level": 8,              # levels 0..8 for the exact identities
    "hermite_max": 10,           # 1D Rodrigues equivalence n ≤ 10
    "osc3d_max": 10,             # l + 2k ≤ 10
    "coul3d_max": 8,             # n ≤ 8, all l < n
    "planar_max": 8,             # 2D systems m + k ≤ 8
    "gram_size": 6,              # first 6 states at fixed l / m
    "gram_tolerance": 1e-8,
    "ground_tolerance": 1e-8,
    "recurrence_alpha_max": 10,  # α ∈ {1/2, …, 21/2} ∪ {1, …, 10}
    "chain_identity_max": 6,
    "confluence_cases": 200,
    "roundtrip_cases": 300,
}

# =============================================================================
# Output
# =============================================================================
SCHEMA = "ladderkit/1"

UNITS_NOTE = (
    "units: dimensionless (hbar = M = 1; omega = 1 for oscillators; "
    "e^2 = a0 = 1 for Coulomb)"
)

FLOAT_FORMAT = "%.12g"

# Exit codes of the command-line front door
EXIT = {
    "ok": 0,
    "failure": 1,
    "bad_input": 2,
}
