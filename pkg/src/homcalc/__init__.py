"""homcalc: exact relative homological algebra over finite-dimensional algebras."""

__version__ = "0.1.0"
