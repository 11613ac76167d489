"""Ramanujan-Sato series for 1/pi from eta-quotient Hauptmoduls."""

__version__ = "0.1.0"
