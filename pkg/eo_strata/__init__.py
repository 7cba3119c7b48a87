__version__ = "1.0"
__author__ = "eo-strata contributors"
