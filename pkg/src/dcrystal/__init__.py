"""Crystals of Lusztig data in type D, Burge correspondences and the spin
Kirillov-Reshetikhin crystals built from them."""

from dcrystal._kernels import BACKEND

__version__ = "0.1.0"
__all__ = ["BACKEND", "__version__"]
