"""Detect essential tori and non-hyperbolicity of links of mixed singularities
from the coefficients of the defining mixed polynomial."""

__version__ = "0.1.0"
