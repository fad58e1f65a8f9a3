"""State ingestion from Pauli expectation values.

A record maps labels such as ``"XYZ"`` to ``tr(rho X⊗Y⊗Z)``.  Full
tomography inverts all 64 of them; the permutationally invariant variant
averages each label over its permutation orbit; the minimal variant reads
only the four matrix entries the GHZ-symmetric projection needs.
"""

import itertools
import math
import re
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .config import TOL
from .exceptions import MissingLabels, NotPositive, ValueOutOfRange
from .linalg import PAULI, density_matrix, kron3, min_eigenvalue

LABELS = ["".join(t) for t in itertools.product("IXYZ", repeat=3)]
_OPS = {lab: kron3(*(PAULI[c] for c in lab)) for lab in LABELS}
_LABEL_RE = re.compile(r"^[IXYZ]{3}$")
Z_LABELS = ["".join(t) for t in itertools.product("IZ", repeat=3)]


def orbit(label):
    """Sorted distinct permutations of `label`."""
    return sorted({"".join(p) for p in itertools.permutations(label)})


def pauli_record(values):
    """Validated copy of a label -> expectation mapping.

    Raises ValueError on malformed labels, ValueOutOfRange on values outside
    ``[-1, 1]`` (beyond ``1e-9``) or ``III`` different from 1.
    """
    rec = {}
    for lab, v in dict(values).items():
        if not isinstance(lab, str) or not _LABEL_RE.match(lab):
            raise ValueError(f"bad Pauli label {lab!r}")
        v = float(v)
        if not math.isfinite(v) or abs(v) > 1 + TOL.pauli_range:
            raise ValueOutOfRange(f"{lab} = {v!r} lies outside [-1, 1]")
        rec[lab] = v
    if "III" in rec and abs(rec["III"] - 1) > TOL.pauli_range:
        raise ValueOutOfRange(f"III must be 1, got {rec['III']!r}")
    rec["III"] = 1.0
    return rec


def expectations_of(rho):
    """All 64 Pauli expectations of a trace-one state."""
    rho = np.asarray(rho, dtype=complex)
    rec = {lab: float(np.trace(rho @ op).real) for lab, op in _OPS.items()}
    rec["III"] = 1.0
    return rec


def reconstruct(rec, mode="strict"):
    """Density matrix ``(1/8) sum_l rec[l] sigma_l``.

    Parameters
    ----------
    rec : dict
        Pauli record.
    mode : {"strict", "partial"}
        In strict mode every label must be present.  In partial mode
        missing labels count as zero.

    Returns
    -------
    rho : ndarray
        For ``mode="partial"`` a pair ``(rho, warnings)`` is returned, with
        one warning string per missing label.

    Raises
    ------
    MissingLabels
        Strict mode with absent labels.
    NotPositive
        If the assembled matrix has an eigenvalue below ``-1e-6``.
    """
    if mode not in ("strict", "partial"):
        raise ValueError(f"unknown mode {mode!r}")
    rec = pauli_record(rec)
    missing = [lab for lab in LABELS if lab not in rec]
    if missing and mode == "strict":
        raise MissingLabels(missing)
    rho = sum(rec.get(lab, 0.0) * op for lab, op in _OPS.items()) / 8
    rho = 0.5 * (rho + rho.conj().T)
    lam = min_eigenvalue(rho)
    if lam < -TOL.tomo_negative:
        raise NotPositive(f"record is inconsistent with a state (eigenvalue {lam:.3e})")
    if lam < -TOL.psd_clip:
        w, v = np.linalg.eigh(rho)
        rho = (v * np.clip(w, 0, None)) @ v.conj().T
        rho /= np.trace(rho).real
    rho = density_matrix(rho)
    if mode == "partial":
        return rho, [f"{lab} missing, taken as 0" for lab in missing]
    return rho


def pit_record(rec):
    """Replace each expectation by the mean over its permutation orbit.

    Orbits with some member missing are left out of the result.
    """
    rec = pauli_record(rec)
    out = {}
    for lab in LABELS:
        members = orbit(lab)
        if all(m in rec for m in members):
            out[lab] = sum(rec[m] for m in members) / len(members)
    return out


@dataclass(frozen=True)
class GhzElements:
    p000: float
    p111: float
    c_re: float
    c_im: Optional[float] = None

    def abs_coherence(self):
        if self.c_im is None:
            return abs(self.c_re)
        return math.hypot(self.c_re, self.c_im)


def _orbit_mean(rec, label):
    members = orbit(label)
    return sum(rec[m] for m in members) / len(members)


def ghz_elements_minimal(rec, with_imag=False):
    """Corner populations and the ``000,111`` coherence from few settings.

    Needs the eight Z-strings, ``XXX`` and the ``XYY`` orbit; with
    `with_imag` also ``YYY`` and the ``XXY`` orbit.  The coherence is

    ``c = (1/8) [XXX - 3 <XYY>_PIT + i (YYY - 3 <XXY>_PIT)]``.

    Raises
    ------
    MissingLabels
        Listing every required label that is absent.
    """
    rec = pauli_record(rec)
    need = Z_LABELS + ["XXX"] + orbit("XYY")
    if with_imag:
        need += ["YYY"] + orbit("XXY")
    missing = [lab for lab in need if lab not in rec]
    if missing:
        raise MissingLabels(missing)
    # Walsh-Hadamard inversion restricted to |000> and |111>
    p000 = sum(rec[lab] for lab in Z_LABELS) / 8
    p111 = sum((-1) ** lab.count("Z") * rec[lab] for lab in Z_LABELS) / 8
    c_re = (rec["XXX"] - 3 * _orbit_mean(rec, "XYY")) / 8
    c_im = (rec["YYY"] - 3 * _orbit_mean(rec, "XXY")) / 8 if with_imag else None
    return GhzElements(p000, p111, c_re, c_im)


def bound_from_elements(e):
    """Witness-plane bound using ``|c|`` as the coherence."""
    return max(0.0, 16 / 7 * e.abs_coherence() + 20 / 7 * (e.p000 + e.p111) - 3)


def parse_record(text):
    """Parse ``LABEL value`` lines; ``#`` starts a comment."""
    rec = {}
    for n, line in enumerate(text.splitlines(), 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {n}: expected 'LABEL value', got {line!r}")
        lab, val = parts
        if lab in rec:
            raise ValueError(f"line {n}: duplicate label {lab}")
        try:
            rec[lab] = float(val)
        except ValueError:
            raise ValueError(f"line {n}: bad value {val!r}") from None
    return pauli_record(rec)


def format_record(rec):
    return "".join(f"{lab} {rec[lab]!r}\n" for lab in LABELS if lab in rec)
