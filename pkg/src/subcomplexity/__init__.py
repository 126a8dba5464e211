"""Subword complexity of languages and infinite words, with exact
bounded-versus-linear decisions for regular languages."""

from .automata import CapExceeded, Dfa, GapCertificate, Nfa, Triple
from .complexity import ComplexityProfile, GapVerdict, classify, profile, special_factors
from .langspec import builtin, enumerate_factors, load_source
from .words import Alphabet, FactorSet

__version__ = "0.1.0"

__all__ = [
    "Alphabet", "CapExceeded", "ComplexityProfile", "Dfa", "FactorSet", "GapCertificate", "GapVerdict", "Nfa",
    "Triple", "builtin", "classify", "enumerate_factors", "load_source", "profile", "special_factors",
]
