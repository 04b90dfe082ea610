"""Experiment orchestration: batches of filtered candidates through the
strong test, prime generation to a target confidence, and report
rendering (table, csv, json).

Given the same config and seed the records, summary and rendered bytes
are identical across runs; per-candidate wall time is kept on the
record for profiling but never rendered.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass
from typing import Iterable

from .confidence import ConfidenceReport, bayes_confidence, rounds_for_confidence
from .density import Mode, filtered_prime_prob
from .errors import RefusalError
from .primality import TestVerdict, miller_rabin
from .sampling import Candidate, FilterPolicy, make_stream, random_candidate

OUTPUT_FORMATS = ("table", "csv", "json")

CSV_HEADER = "number,verdict,rounds_used,confidence_lower_bound"


@dataclass(frozen=True)
class ExperimentConfig:
    digits: int
    count: int
    rounds: int
    seed: int
    policy: FilterPolicy = FilterPolicy.both()
    mode: Mode = Mode.CORRECTED
    output_format: str = "table"

    def __post_init__(self) -> None:
        if self.digits < 2:
            raise ValueError("digits must be >= 2")
        if self.count < 1:
            raise ValueError("count must be >= 1")
        if self.rounds < 1:
            raise ValueError("rounds must be >= 1")
        if self.output_format not in OUTPUT_FORMATS:
            raise ValueError(f"unknown output format {self.output_format!r}")


@dataclass(frozen=True)
class ExperimentRecord:
    candidate: Candidate
    verdict: TestVerdict
    rounds_used: int
    confidence_lower_bound: float | None
    elapsed: float

    @property
    def label(self) -> str:
        return "PRIME" if self.verdict.is_probable_prime else "COMPOSITE"


@dataclass(frozen=True)
class ExperimentSummary:
    digits: int
    count: int
    rounds: int
    seed: int
    policy: str
    mode: str
    prime_count: int
    expected_primes: float
    confidence_lower_bound: float


def run_experiment(config: ExperimentConfig) -> tuple[list[ExperimentRecord], ExperimentSummary]:
    """Generate, test and score `count` filtered candidates.

    Candidate i draws from its own stream (seed XOR i), first for the
    digits and then for the test bases, so results do not depend on
    execution order.
    """
    prior = filtered_prime_prob(config.digits, config.policy, config.mode)
    bound = bayes_confidence(prior, config.rounds).lower_bound
    records = []
    for i in range(config.count):
        rng = make_stream(config.seed, i)
        start = time.perf_counter()
        candidate = random_candidate(config.digits, config.policy, rng)
        verdict = miller_rabin(candidate.n, config.rounds, rng)
        elapsed = time.perf_counter() - start
        survived = verdict.is_probable_prime
        records.append(
            ExperimentRecord(
                candidate=candidate,
                verdict=verdict,
                rounds_used=verdict.rounds_survived if survived else verdict.rounds_survived + 1,
                confidence_lower_bound=bound if survived else None,
                elapsed=elapsed,
            )
        )
    summary = ExperimentSummary(
        digits=config.digits,
        count=config.count,
        rounds=config.rounds,
        seed=config.seed,
        policy=config.policy.label,
        mode=config.mode.value,
        prime_count=sum(r.verdict.is_probable_prime for r in records),
        expected_primes=config.count * prior,
        confidence_lower_bound=bound,
    )
    return records, summary


@dataclass(frozen=True)
class GeneratedPrime:
    value: int
    confidence: ConfidenceReport
    attempts: int
    rounds: int


def generate_prime(
    digits: int,
    target_confidence: float,
    seed: int | None = None,
    mode: Mode = Mode.CORRECTED,
    policy: FilterPolicy = FilterPolicy.both(),
    max_attempts: int = 10**6,
) -> GeneratedPrime:
    """Draw filtered candidates until one survives enough strong rounds.

    The round count is the smallest m whose posterior lower bound meets
    the target for this digit size and policy. Expected attempts are
    roughly 1 / filtered_prime_prob(digits, policy).
    """
    if digits < 2:
        raise ValueError("digits must be >= 2")
    if not 0.0 < target_confidence < 1.0:
        raise ValueError("target confidence must be in (0, 1)")
    prior = filtered_prime_prob(digits, policy, mode)
    rounds = rounds_for_confidence(prior, target_confidence)
    for attempt in range(max_attempts):
        rng = make_stream(seed, attempt) if seed is not None else make_stream(None)
        candidate = random_candidate(digits, policy, rng)
        verdict = miller_rabin(candidate.n, rounds, rng)
        if verdict.is_probable_prime:
            return GeneratedPrime(
                value=candidate.n,
                confidence=bayes_confidence(prior, rounds),
                attempts=attempt + 1,
                rounds=rounds,
            )
    raise RefusalError(f"no candidate survived within {max_attempts} attempts")


def render_report(records: Iterable[ExperimentRecord], output_format: str = "table",
                  summary: ExperimentSummary | None = None) -> str:
    """Render records; numbers always in full decimal, never scientific.

    table: one "<number> <PRIME|COMPOSITE>" line per record (plus a
    trailing summary block when given). csv: fixed header, empty
    confidence field for composites. json: records array plus summary.
    """
    if output_format == "table":
        lines = [f"{r.candidate.n} {r.label}" for r in records]
        if summary is not None:
            lines.append("")
            lines.extend(_summary_lines(summary))
        return "\n".join(lines)
    if output_format == "csv":
        rows = [CSV_HEADER]
        for r in records:
            conf = f"{r.confidence_lower_bound:.9f}" if r.confidence_lower_bound is not None else ""
            rows.append(f"{r.candidate.n},{r.label},{r.rounds_used},{conf}")
        return "\n".join(rows)
    if output_format == "json":
        payload = {
            "records": [
                {
                    "number": r.candidate.n,
                    "verdict": r.label,
                    "rounds_used": r.rounds_used,
                    "confidence_lower_bound": r.confidence_lower_bound,
                }
                for r in records
            ],
            "summary": None if summary is None else summary.__dict__,
        }
        return json.dumps(payload, indent=2)
    raise ValueError(f"unknown output format {output_format!r}")


def _summary_lines(summary: ExperimentSummary) -> list[str]:
    return [
        f"candidates: {summary.count}",
        f"digits: {summary.digits}",
        f"rounds: {summary.rounds}",
        f"seed: {summary.seed}",
        f"policy: {summary.policy}",
        f"mode: {summary.mode}",
        f"probable_primes: {summary.prime_count}",
        f"expected_primes: {summary.expected_primes:.9f}",
        f"confidence_lower_bound: {summary.confidence_lower_bound:.9f}",
    ]
