"""Exact tensor-product decompositions of simple SL3 and Sp4 modules in characteristic p."""

from .rootdata import RootDatum, RootSystemId, get_datum

__all__ = ["RootDatum", "RootSystemId", "get_datum"]
