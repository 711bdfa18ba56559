"""FFT synthesis of approximate fractional Gaussian noise sample paths.

The pipeline builds the FGN power spectrum on the Fourier frequencies,
multiplies each value by an independent mean-1 exponential variate (the
periodogram of a Gaussian process is asymptotically exponential around the
true spectrum), attaches uniformly random phases, mirrors the half spectrum
into a conjugate-symmetric full spectrum with a zero DC term, and inverse
transforms.  The result is a real, zero-mean path whose periodogram equals
the fuzzed spectrum exactly (up to the fixed 1/n transform convention).

Randomness comes from an explicit ``numpy.random.Generator`` (PCG64 when
created through :func:`make_rng`).  The draw order is fixed: all n/2
exponential variates first, then all n/2 phase uniforms, so a given seed
keeps producing the same path across refactors.  Bit-exactness is promised
only within one build of this package, not across numpy versions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .spectrum import FAST, BMode, HurstParam, SpectrumGrid, build_spectrum_grid

__all__ = [
    "TraceProvenance",
    "Trace",
    "make_rng",
    "fuzz_spectrum",
    "random_phase_complexify",
    "hermitian_expand",
    "synthesize_fgn",
    "rescale_trace",
]


@dataclass(frozen=True)
class TraceProvenance:
    """How a trace was produced, for file headers and reproducibility."""

    h: HurstParam | None = None
    seed: int | None = None
    mode: BMode | None = None


@dataclass(frozen=True)
class Trace:
    """An ordered, finite, real-valued sample path."""

    values: np.ndarray
    provenance: TraceProvenance | None = None

    def __post_init__(self) -> None:
        vals = np.asarray(self.values, dtype=float)
        if vals.ndim != 1 or vals.size == 0:
            raise ValueError("trace must be a nonempty 1-d array")
        if not np.all(np.isfinite(vals)):
            raise ValueError("trace values must all be finite")
        object.__setattr__(self, "values", vals)

    @property
    def n(self) -> int:
        return self.values.size

    def mean(self) -> float:
        return float(self.values.mean())

    def sd(self) -> float:
        """Sample standard deviation (ddof=1)."""
        return float(self.values.std(ddof=1)) if self.n > 1 else 0.0


def make_rng(seed: int | None = None) -> np.random.Generator:
    """Seedable 64-bit generator (PCG64) used throughout the package."""
    return np.random.default_rng(seed)


def fuzz_spectrum(grid: SpectrumGrid, rng: np.random.Generator) -> SpectrumGrid:
    """Multiply each spectral value by an independent Exp(1) variate.

    Variates are drawn by inverse CDF, -log(1 - U) with U uniform on
    [0, 1), so the draw count per call is exactly one uniform per
    frequency.
    """
    expo = -np.log1p(-rng.random(len(grid)))
    return SpectrumGrid(grid.lambdas, grid.values * expo)


def random_phase_complexify(grid: SpectrumGrid, rng: np.random.Generator) -> np.ndarray:
    """Complex half spectrum with |z_j|^2 = value_j and uniform phases.

    The final entry is the Nyquist bin; its phase is forced to zero (after
    drawing the full phase vector) so the expanded spectrum is exactly
    conjugate-symmetric.
    """
    phases = 2.0 * np.pi * rng.random(len(grid))
    z = np.sqrt(grid.values) * np.exp(1j * phases)
    z[-1] = np.abs(z[-1])
    return z


def hermitian_expand(half: np.ndarray) -> np.ndarray:
    """Mirror a half spectrum of length n/2 into a length-n full spectrum.

    Index 0 (the DC term) is exactly zero, indices 1..n/2 copy the input,
    and indices n/2+1..n-1 hold the reversed complex conjugates, so the
    inverse transform of the result is real.
    """
    half = np.asarray(half, dtype=complex)
    if half.ndim != 1 or half.size < 1:
        raise ValueError("half spectrum must be a nonempty 1-d array")
    full = np.empty(2 * half.size, dtype=complex)
    full[0] = 0.0
    full[1 : half.size + 1] = half
    full[half.size + 1 :] = np.conj(half[-2::-1])
    return full


def synthesize_fgn(h: HurstParam, n: int, seed: int, mode: BMode = FAST) -> Trace:
    """Synthesize an approximate FGN path of even length n >= 4.

    Deterministic per seed.  The output is zero-mean by construction (the
    DC coefficient is zeroed) and its absolute scale is a fixed artifact of
    the 1/n inverse-transform convention; use :func:`rescale_trace` to set
    physical units.
    """
    n = int(n)
    if n < 4 or n % 2 != 0:
        raise ValueError(f"n must be even and at least 4, got {n}")
    rng = make_rng(seed)
    grid = build_spectrum_grid(h, n, mode)
    fuzzed = fuzz_spectrum(grid, rng)
    half = random_phase_complexify(fuzzed, rng)
    full = hermitian_expand(half)
    values = np.fft.ifft(full).real
    return Trace(values, TraceProvenance(h=h, seed=int(seed), mode=mode))


def rescale_trace(t: Trace, target_mean: float, target_sd: float) -> Trace:
    """Affine map of a trace to the requested sample mean and sd (ddof=1)."""
    if target_sd <= 0:
        raise ValueError("target standard deviation must be positive")
    sd = t.sd()
    if sd == 0.0:
        raise ValueError("cannot rescale a constant trace")
    values = (t.values - t.mean()) * (target_sd / sd) + target_mean
    return Trace(values, t.provenance)
