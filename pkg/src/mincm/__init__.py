"""Exact algebraic analysis of finite simplicial complexes.

Decides depth, Cohen-Macaulayness, minimality, and shellability relations
over GF(p) or the rationals, together with the Alexander-dual ideal side
(graded Betti numbers, linear resolutions and quotients).  Everything is
exact: no floating point enters any verdict.
"""
from .complexes import SimplicialComplex
from .errors import (CertificateInapplicable, DataNotBundled, DegenerateIdeal,
                     FaceNotInComplex, MalformedInput, MincmError, NotAFacet,
                     NotCohenMacaulay, NotPure, ParseError,
                     UnknownCatalogName)
from .fields import GF, QQ, FieldSpec, parse_field
from .homology import (BettiVector, betti_of_facets, boundary_matrices,
                       is_acyclic, reduced_homology, top_cycle)
from .cohen_macaulay import (BallReport, CMReport, FastPathCertificate,
                             MinimalityReport, RemovalCertificate,
                             TopCycleRemoval, certify_removal_non_cm,
                             check_ball_necessary, depth, depth_report,
                             depth_via_skeleta, free_facet, is_cm,
                             is_minimal_cm, is_strongly_cm,
                             is_strongly_nonshellable, satisfies_serre,
                             top_cycle_facet)
from .shelling import (ShellingCertificate, is_shellable, is_shelling_move,
                       reduce_to_minimal, shelled_over)
from .ideals import (BettiTable, SquarefreeIdeal, betti_table,
                     colon_is_degree_one, dual_ideal, has_linear_quotients,
                     has_linear_resolution, sr_complex)
from .serialize import (emit_doc, emit_json, emit_text, load_path, parse_doc,
                        parse_json, parse_text)
from . import catalog

__version__ = "0.1.0"

__all__ = [
    "SimplicialComplex",
    "FieldSpec", "GF", "QQ", "parse_field",
    "BettiVector", "betti_of_facets", "boundary_matrices", "is_acyclic",
    "reduced_homology", "top_cycle",
    "BallReport", "CMReport", "FastPathCertificate", "MinimalityReport",
    "RemovalCertificate", "TopCycleRemoval", "certify_removal_non_cm",
    "check_ball_necessary", "depth", "depth_report", "depth_via_skeleta",
    "free_facet", "is_cm", "is_minimal_cm", "is_strongly_cm",
    "is_strongly_nonshellable", "satisfies_serre", "top_cycle_facet",
    "ShellingCertificate", "is_shellable", "is_shelling_move",
    "reduce_to_minimal", "shelled_over",
    "BettiTable", "SquarefreeIdeal", "betti_table", "colon_is_degree_one",
    "dual_ideal", "has_linear_quotients", "has_linear_resolution",
    "sr_complex",
    "emit_doc", "emit_json", "emit_text", "load_path", "parse_doc",
    "parse_json", "parse_text",
    "catalog",
    "MincmError", "MalformedInput", "ParseError", "FaceNotInComplex",
    "NotAFacet", "NotPure", "NotCohenMacaulay", "DegenerateIdeal",
    "CertificateInapplicable", "UnknownCatalogName", "DataNotBundled",
    "__version__",
]
