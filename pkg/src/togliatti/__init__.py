"""Minimal monomial Togliatti systems: exact decision procedures and classification."""

__version__ = "0.1.0"
