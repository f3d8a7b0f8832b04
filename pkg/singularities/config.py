# singularities/config.py
from dataclasses import dataclass

from sympy import isprime

# Upper bound on the truncation exponent N of the local Milnor algebra.
# None derives it from the weights (see swh.default_truncation_bound)
TRUNCATION_BOUND = None
# Used when no weights are known
FALLBACK_TRUNCATION_BOUND = 32

# Primes and depth of the arithmetic oracle
DEFAULT_PRIMES = (5, 7, 11, 13)
DEFAULT_M_MAX = 4

# L is specialized to c**N0 for each base c when certifying a pole order;
# at least MIN_CERTIFICATIONS bases must be conclusive and agree
CERTIFICATION_BASES = (2, 3, 5, 7, 11, 13)
MIN_CERTIFICATIONS = 3

# Largest |beta| enumerated by the explorer
EXPLORE_BOUND = 8

# Largest grid (p**(m*nvars)) counted by brute force
BRUTE_FORCE_LIMIT = 10**6
# Singular residue classes kept by the Hensel lifting before falling back
HENSEL_BRANCH_LIMIT = 200_000

REPORT_SCHEMA = 1

OUTPUT_FORMATS = ("text", "json")


@dataclass(frozen=True)
class RunConfig:
    """Settings shared by every CLI subcommand."""

    truncation_bound: int | None = TRUNCATION_BOUND
    primes: tuple = DEFAULT_PRIMES
    m_max: int = DEFAULT_M_MAX
    toric_oracle: bool = True
    output_format: str = "text"
    fixture_path: str | None = None

    def __post_init__(self):
        if self.truncation_bound is not None and self.truncation_bound < 1:
            raise ValueError(f"Unsupported truncation bound: {self.truncation_bound}")
        for p in self.primes:
            if p < 2 or not isprime(p):
                raise ValueError(f"Unsupported prime: {p}")
        if self.m_max < 1:
            raise ValueError(f"Unsupported m_max: {self.m_max}")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"Unsupported output format: {self.output_format}")
