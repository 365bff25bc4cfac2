"""
Configuration for the category O calculator

Formula statements attached to every exported row group, status labels,
exit codes, output formats and the environment variables read from .env.
"""

from pathlib import Path

# Project root (the directory holding requirements.txt)
PROJECT_ROOT = Path(__file__).resolve().parent.parent.parent

# Default on-disk location of KL tables
DEFAULT_CACHE_DIR = PROJECT_ROOT / "data" / "cache"

# Environment variable overriding the cache directory
CACHE_DIR_ENV = "KLO_CACHE_DIR"

# JSON envelope version
OUTPUT_SCHEMA_VERSION = 1

OUTPUT_FORMATS = ("table", "json", "csv", "markdown")

# Exit codes
EXIT_OK = 0
EXIT_VERIFICATION_FAILED = 1
EXIT_CONFIG_ERROR = 2

# Status of a tabulated value
STATUS_THEOREM = "theorem"
STATUS_CONJECTURE = "conjecture"

# Types in which t(w) = a(w) and i(w) = 2a(w0 w) are proved
PROVED_TILTING_TYPES = {"A"}

# Formula behind each column / family, carried into every export
FORMULAS = {
    "length": "l(w) = number of positive roots inverted by w",
    "a_value": "a(w) = l(u) - 2 deg P_{e,u} for any involution u in the two-sided cell of w",
    "pd_standard": "pd Delta(w) = l(w)",
    "pd_simple": "pd L(w) = 2 l(w0) - l(w)",
    "pd_costandard": "pd nabla(w) = 2 l(w0) - l(w)",
    "pd_tilting": "pd T(w) = a(w)",
    "pd_injective": "pd I(w) = 2 a(w0 w)",
    "global_dimension": "gl.dim = 2 l(w0)",
    "pd_shuffled": "pd Delta(x,y) = l(x) + l(y)",
    "std-std-linear": "dim Ext^i(Delta(x), Delta(y)<-i>) = 1 iff x >= y and l(x) - l(y) = i",
    "carlin": "dim Ext^{l(x)-l(y)}(Delta(x), Delta(y)) = 1 iff x >= y",
    "ext1-dominant": "dim Ext^1(Delta(x), Delta(e)<j>) = support size of x iff j = l(x) - 2",
    "from-dominant": "dim Ext^i(Delta(e), Delta(z)<j>) on i + j = 1 = support size of z iff j = 2 - l(z)",
    "hom": "dim Hom(Delta(x), Delta(y)<j>) = 1 iff x >= y and l(x) - l(y) = j",
    "duality": "Ext^i(Delta(x), Delta(y)<j>) = Ext^{i+j}(Delta(w0 y^-1 w0), Delta(w0 x^-1 w0)<-j>)",
    "std-simple": "dim Ext^i(Delta(x), L(y)) = coefficient of q^{(l(x)-l(y)-i)/2} in P_{y,x}",
    "simple-simple": "dim Ext^n(L(x), L(y)) = sum_z sum_{i+j=n} dim Ext^i(Delta(z), L(x)) dim Ext^j(Delta(z), L(y))",
    "mobius": "mu(x,y) = (-1)^{l(y)-l(x)} on every Bruhat interval",
    "quiver": "arrows x -> y of the homomorphism quiver: x = t y for a reflection t, x > y",
}

EXT_FAMILIES = (
    "std-std-linear",
    "carlin",
    "ext1-dominant",
    "from-dominant",
    "std-simple",
    "simple-simple",
    "duality",
    "hom",
)

# Rank-1 profile dim Ext^n(L(e), L(e)), n = 0, 1, 2, gating the simple-simple oracle
SIMPLE_SIMPLE_A1_PROFILE = (1, 0, 1)

# Sample size and seed for the randomized oracle comparison on larger groups
ORACLE_SAMPLE_SIZE = 500
ORACLE_SAMPLE_SEED = 20240601
