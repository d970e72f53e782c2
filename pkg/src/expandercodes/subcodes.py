"""Constraint subcodes: small binary codes imposed at check nodes.

A SubcodeSpec bundles a parity-check matrix with the exact parameters and the
full codeword list of the code it defines.  Builtins cover the single
parity-check, repetition, Hamming [7,4] and extended Hamming [8,4] families;
anything else can be loaded from a parity-check matrix.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from . import gf2
from .errors import UnknownSubcode
from .gf2 import BitMatrix, CodeParams

# from_parity enumerates all 2^k codewords; keep that bounded.
MAX_SUBCODE_DIM = 16


@dataclass(frozen=True)
class SubcodeSpec:
    """A named constraint code with its parity matrix and full codeword list."""

    name: str
    h: BitMatrix
    params: CodeParams
    codewords: np.ndarray = field(repr=False, compare=False)

    def __post_init__(self):
        if self.params.has_idle_components:
            raise ValueError(f"subcode {self.name}: idle components "
                             f"{self.params.idle_components} are not allowed")

    @property
    def length(self) -> int:
        return self.params.n

    @property
    def dmin(self) -> int:
        return self.params.dmin

    @property
    def epsilon(self) -> Fraction:
        return self.params.epsilon

    @property
    def rate(self) -> Fraction:
        return Fraction(self.params.k, self.params.n)

    def nonzero_codewords(self) -> np.ndarray:
        w = self.codewords.sum(axis=1)
        return self.codewords[w > 0]

    def contains(self, word) -> bool:
        v = np.asarray(word, dtype=np.uint8) & 1
        return not self.h.mul_vec(v).any()

    def __eq__(self, other):
        return (isinstance(other, SubcodeSpec)
                and self.name == other.name and self.h == other.h)

    def __hash__(self):
        return hash((self.name, self.h))


def from_parity(h: BitMatrix, name: str | None = None) -> SubcodeSpec:
    """Build a SubcodeSpec from a parity-check matrix.

    The code dimension is capped at MAX_SUBCODE_DIM because the full codeword
    list is materialized.  Codes with idle components are rejected.
    """
    params = gf2.code_params(h, max_dim=MAX_SUBCODE_DIM)
    words = gf2.enumerate_codewords(h, max_dim=MAX_SUBCODE_DIM)
    return SubcodeSpec(name=name or f"custom[{params.n},{params.k}]",
                       h=h, params=params, codewords=words)


def _spc(d: int) -> SubcodeSpec:
    if d < 2:
        raise UnknownSubcode(f"spc{d}: length must be at least 2")
    return from_parity(BitMatrix(np.ones((1, d), dtype=np.uint8)), name=f"spc{d}")


def _repetition(d: int) -> SubcodeSpec:
    if d < 2:
        raise UnknownSubcode(f"rep{d}: length must be at least 2")
    h = np.zeros((d - 1, d), dtype=np.uint8)
    for i in range(d - 1):
        h[i, i] = h[i, i + 1] = 1
    return from_parity(BitMatrix(h), name=f"rep{d}")


def _hamming74() -> SubcodeSpec:
    # columns are the binary expansions of 1..7
    h = np.array([[(j >> b) & 1 for j in range(1, 8)] for b in range(3)],
                 dtype=np.uint8)
    return from_parity(BitMatrix(h), name="hamming74")


def _ext_hamming84() -> SubcodeSpec:
    base = np.array([[(j >> b) & 1 for j in range(1, 8)] for b in range(3)],
                    dtype=np.uint8)
    h = np.zeros((4, 8), dtype=np.uint8)
    h[:3, :7] = base
    h[3, :] = 1  # overall parity
    return from_parity(BitMatrix(h), name="exthamming84")


_NAME_RE = re.compile(r"^(spc|rep)(\d+)$")


def builtin(name: str) -> SubcodeSpec:
    """Look up a builtin subcode by name: spcD, repD, hamming74, exthamming84."""
    key = name.strip().lower().replace("[", "").replace("]", "").replace(",", "")
    if key == "hamming74":
        return _hamming74()
    if key == "exthamming84":
        return _ext_hamming84()
    m = _NAME_RE.match(key)
    if m:
        d = int(m.group(2))
        return _spc(d) if m.group(1) == "spc" else _repetition(d)
    raise UnknownSubcode(f"no builtin subcode named {name!r}")


def catalog() -> list[str]:
    """Names accepted by builtin(); the parametric families list a sample."""
    return ["spc2", "spc3", "spc4", "spc5", "spc6", "spc7", "spc8",
            "rep2", "rep3", "rep4", "rep5", "rep6",
            "hamming74", "exthamming84"]
