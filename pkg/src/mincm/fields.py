"""Coefficient fields for homology: exact rationals or a prime field GF(p).

All arithmetic stays exact; nothing here ever touches floating point.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import MalformedInput


def _is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldSpec:
    """GF(p) when p is a prime, the rationals when p is None."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None and not _is_prime(self.p):
            raise MalformedInput(f"field order must be prime, got {self.p}")

    @property
    def is_rationals(self) -> bool:
        return self.p is None

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF({self.p})"

    def token(self) -> str:
        """Short CLI/JSON token: 'q' or 'gf<p>'."""
        return "q" if self.p is None else f"gf{self.p}"


QQ = FieldSpec()


def GF(p: int) -> FieldSpec:
    return FieldSpec(p)


def parse_field(text: str) -> FieldSpec:
    """Parse the CLI field syntax: 'q' or 'gf<p>' (e.g. gf2, gf101)."""
    t = text.strip().lower()
    if t in ("q", "qq", "rationals"):
        return QQ
    if t.startswith("gf") and t[2:].isdigit():
        return GF(int(t[2:]))
    raise MalformedInput(f"unknown field {text!r}; expected 'q' or 'gf<p>'")
