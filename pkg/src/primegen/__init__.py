"""Probable primes from filtered random candidates.

Candidate pre-filtering (last digit, digital root), Fermat / Euler /
Miller-Rabin testing, prime-density estimates, Bayesian confidence
bounds, and a brute-force pseudoprime lab, behind one CLI.
"""

from .arith import TwoAdicDecomposition, decompose_pow2, digital_root, extended_gcd, mod_pow
from .confidence import ConfidenceReport, bayes_confidence, rounds_for_confidence
from .density import (
    Mode,
    base_prime_prob,
    density_estimate,
    DensityEstimate,
    digit_prime_count,
    digit_prime_count_bounds,
    dusart_bounds,
    filtered_prime_prob,
    pnt_estimate,
)
from .errors import RefusalError
from .experiment import (
    ExperimentConfig,
    ExperimentRecord,
    ExperimentSummary,
    GeneratedPrime,
    generate_prime,
    render_report,
    run_experiment,
)
from .primality import (
    ExactOutcome,
    ExactVerdict,
    MRTranscript,
    Outcome,
    TestVerdict,
    euler_round,
    euler_test,
    fermat_round,
    fermat_test,
    miller_rabin,
    miller_rabin_round,
    trial_division,
)
from .pseudolab import (
    LiarCensus,
    carmichael_numbers,
    fermat_pseudoprimes,
    is_absolute_euler_pseudoprime,
    liar_census,
    liar_flags,
    sqrt_of_unity,
)
from .sampling import Candidate, FilterPolicy, make_stream, passes_filter, pool_size, random_candidate
from .scireal import SciReal

__version__ = "0.1.0"

__all__ = [
    "Candidate",
    "ConfidenceReport",
    "DensityEstimate",
    "ExactOutcome",
    "ExactVerdict",
    "ExperimentConfig",
    "ExperimentRecord",
    "ExperimentSummary",
    "FilterPolicy",
    "GeneratedPrime",
    "LiarCensus",
    "MRTranscript",
    "Mode",
    "Outcome",
    "RefusalError",
    "SciReal",
    "TestVerdict",
    "TwoAdicDecomposition",
    "base_prime_prob",
    "bayes_confidence",
    "carmichael_numbers",
    "decompose_pow2",
    "density_estimate",
    "digit_prime_count",
    "digit_prime_count_bounds",
    "digital_root",
    "dusart_bounds",
    "euler_round",
    "euler_test",
    "extended_gcd",
    "fermat_pseudoprimes",
    "fermat_round",
    "fermat_test",
    "filtered_prime_prob",
    "generate_prime",
    "is_absolute_euler_pseudoprime",
    "liar_census",
    "liar_flags",
    "make_stream",
    "miller_rabin",
    "miller_rabin_round",
    "mod_pow",
    "passes_filter",
    "pnt_estimate",
    "pool_size",
    "random_candidate",
    "render_report",
    "rounds_for_confidence",
    "run_experiment",
    "sqrt_of_unity",
    "trial_division",
]
