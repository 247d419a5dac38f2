"""Exact spectra of arrangement graphs A(n,k).

The spectrum is assembled from symmetric-group data (partitions, hook
lengths, transposition contents, Pieri extensions) and can be checked
against an explicit construction of the graph.
"""
from .elimination import HAVE_EXTENSION, integer_rank
from .errors import ArrspecError, IntegralityError, InternalError, LimitError, ThresholdError
from .oracle import ArrangementGraph, VerificationReport, build_graph, exact_multiplicity, float_spectrum, verify
from .partitions import Partition, binom2, conjugate, dimension, enumerate_partitions, transposition_content
from .pieri import extensions, is_extension, mu_of_lambda
from .spectrum import (
    SpectralLine,
    Spectrum,
    eigenvalue,
    minus_k_multiplicity,
    negative_lines,
    spectrum,
    threshold,
)

__version__ = "0.1.0"
