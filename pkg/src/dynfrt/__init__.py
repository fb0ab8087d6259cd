"""Exact certifiers for dynamical Yang-Baxter maps and their FRT-type bialgebroids."""

__version__ = "0.1.0"
