"""Outcome certificates and their stable text serialization.

A certificate records what a search or construction established: the claim
identifier, its parameters, one of four verdicts, a payload of re-checkable
evidence, the size of the space the verdict quantifies over, and elapsed
wall time.  Serialization is deterministic; the elapsed-time line is the
only field allowed to differ between otherwise identical runs.
"""

from __future__ import annotations

import os
import tempfile
from dataclasses import dataclass, field
from typing import Mapping, Union

WITNESS = "witness"
EXHAUSTED = "exhausted"
COUNTEREXAMPLE = "counterexample"
INCONCLUSIVE = "inconclusive"

_VERDICTS = (WITNESS, EXHAUSTED, COUNTEREXAMPLE, INCONCLUSIVE)

Scalar = Union[str, int]


@dataclass(frozen=True)
class Certificate:
    claim: str
    parameters: tuple[tuple[str, str], ...]
    verdict: str
    payload: tuple[tuple[str, str], ...]
    search_space_size: int
    elapsed_ms: int = 0

    def __post_init__(self):
        if self.verdict not in _VERDICTS:
            raise ValueError(f"unknown verdict {self.verdict!r}")

    @classmethod
    def build(
        cls,
        claim: str,
        parameters: Mapping[str, Scalar],
        verdict: str,
        payload: Mapping[str, Scalar],
        search_space_size: int,
        elapsed_ms: int = 0,
    ) -> "Certificate":
        return cls(
            claim=claim,
            parameters=tuple((k, str(v)) for k, v in parameters.items()),
            verdict=verdict,
            payload=tuple((k, str(v)) for k, v in payload.items()),
            search_space_size=search_space_size,
            elapsed_ms=elapsed_ms,
        )

    def parameter(self, key: str) -> str:
        for k, v in self.parameters:
            if k == key:
                return v
        raise KeyError(key)

    def payload_value(self, key: str) -> str:
        for k, v in self.payload:
            if k == key:
                return v
        raise KeyError(key)

    def has_payload(self, key: str) -> bool:
        return any(k == key for k, _ in self.payload)


def format_certificate(cert: Certificate) -> str:
    lines = ["certificate: v1", f"claim: {cert.claim}", "parameters:"]
    for k, v in cert.parameters:
        lines.append(f"  {k}: {v}")
    lines.append(f"verdict: {cert.verdict}")
    lines.append("payload:")
    for k, v in cert.payload:
        lines.append(f"  {k}: {v}")
    lines.append(f"search_space_size: {cert.search_space_size}")
    lines.append(f"elapsed_ms: {cert.elapsed_ms}")
    return "\n".join(lines) + "\n"


def parse_certificate(text: str) -> Certificate:
    lines = text.splitlines()
    if not lines or lines[0] != "certificate: v1":
        raise ValueError("not a v1 certificate")
    claim = ""
    verdict = ""
    space = 0
    elapsed = 0
    params: list[tuple[str, str]] = []
    payload: list[tuple[str, str]] = []
    section = None
    for ln in lines[1:]:
        if ln.startswith("  ") and section is not None:
            k, _, v = ln.strip().partition(": ")
            section.append((k, v))
            continue
        section = None
        key, _, val = ln.partition(": ")
        if key == "claim":
            claim = val
        elif key == "parameters:":
            section = params
        elif key == "parameters":
            section = params
        elif key == "verdict":
            verdict = val
        elif key == "payload:" or key == "payload":
            section = payload
        elif key == "search_space_size":
            space = int(val)
        elif key == "elapsed_ms":
            elapsed = int(val)
    return Certificate(claim, tuple(params), verdict, tuple(payload), space, elapsed)


def strip_timing(text: str) -> str:
    """Certificate text minus the elapsed-time line, for byte comparisons."""
    return "\n".join(
        ln for ln in text.splitlines() if not ln.startswith("elapsed_ms:")
    )


def write_certificate(cert: Certificate, path: str) -> None:
    """Atomic write: the file never exists in a half-written state."""
    directory = os.path.dirname(os.path.abspath(path)) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".cert-", suffix=".tmp")
    try:
        with os.fdopen(fd, "w") as fh:
            fh.write(format_certificate(cert))
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise
