"""Bigraded complexes, the mixed point model, Soergel bimodules,
Rouquier complexes and triply graded link homology, all over exact
arithmetic."""

from .bigraded import Bigraded
from .complexes import (
    BimoduleComplex,
    WeightFiltration,
    homotopy_equal,
    k_class,
    rouquier,
    weight_complex,
)
from .coxeter import CoxeterSystem
from .hecke import HeckeElement, homfly_of_braid, kl_basis
from .homology import hochschild, homfly_via_homology, triply_graded
from .laurent import LaurentPoly
from .mixed import MixedObject, gr, hom_graded
from .soergel import Bimodule, PolyRing, bott_samelson, decompose

__version__ = "0.1.0"

__all__ = [
    "Bigraded",
    "Bimodule",
    "BimoduleComplex",
    "CoxeterSystem",
    "HeckeElement",
    "LaurentPoly",
    "MixedObject",
    "PolyRing",
    "WeightFiltration",
    "bott_samelson",
    "decompose",
    "gr",
    "hochschild",
    "hom_graded",
    "homfly_of_braid",
    "homfly_via_homology",
    "homotopy_equal",
    "k_class",
    "kl_basis",
    "rouquier",
    "triply_graded",
    "weight_complex",
]
