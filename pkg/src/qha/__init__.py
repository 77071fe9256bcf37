"""Quantum harmonic analysis on a finite phase-space lattice."""

__version__ = "0.1.0"
