"""Signless Laplacian spectra, least-eigenvalue bounds and exhaustive checks on small graphs."""

__version__ = "0.1.0"

from .graphcore import (Graph, DegreeProfile, Graph6Error, complement, count_edges,
                        degree_profile, from_graph6, is_connected, make_complete,
                        make_complete_minus_edge, make_star_k2_complement, to_graph6)
from .spectral import (SymMatrix, Spectrum, eigen_sym, q_extremes, rayleigh_residual,
                       reduced_star_k2_cubic, signless_laplacian, spectrum)
from .enumeration import EnumSpec, canonical_form, enumerate_graphs, enumerate_labeled
from .verify import VerifyRun, ProofAudit, audit_proof, check_graph, extremal_slack, verify_bound
