"""Exact verification of q-supercongruences and their p-adic specializations."""

__version__ = "0.1.0"
