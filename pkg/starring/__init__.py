"""
starring builds finite rings with involution, classifies them by their
annihilators and studies their strong zero-divisor graphs: ``a ~ b`` iff
``aRb* = 0``. Theorem checks verify statements about these graphs on single
rings or over a corpus.
"""
from .ring import (Involution, FiniteStarRing, ZmodRing, ProductRing,
                   MatrixRing, make_zmod, make_product, make_matrix_ring,
                   OrderLimitError, NonCommutativeBaseError, InvolutionError,
                   UnknownElementError)
from .ringspec import parse_ring_spec, build, RingSpecSyntaxError
from .validation import validate_star_ring, ValidationReport
from .structure import (right_annihilator, left_annihilator,
                        principal_right_ideal, right_ann_of_principal,
                        projections, central_projections, is_ideal,
                        is_properly_maximal, classify, central_cover,
                        NoCentralCover)
from .lattice import cp_lattice
from .graph import (GraphKind, strong_graph, build_graph, complement,
                    distance, metrics, cut_vertices, pendant_vertices,
                    is_complete_bipartite, is_clique, orthogonal,
                    is_complemented, splits_via)
from .analysis import analyse
from .theorems import check, run_all, find_converse_counterexample
from .corpus import CorpusSpec, run_corpus, TheoremViolation

__version__ = '1.0.0'

__all__ = ['Involution', 'FiniteStarRing', 'ZmodRing', 'ProductRing',
           'MatrixRing', 'make_zmod', 'make_product', 'make_matrix_ring',
           'OrderLimitError', 'NonCommutativeBaseError', 'InvolutionError',
           'UnknownElementError', 'parse_ring_spec', 'build',
           'RingSpecSyntaxError', 'validate_star_ring', 'ValidationReport',
           'right_annihilator', 'left_annihilator', 'principal_right_ideal',
           'right_ann_of_principal', 'projections', 'central_projections',
           'is_ideal', 'is_properly_maximal', 'classify', 'central_cover',
           'NoCentralCover', 'cp_lattice', 'GraphKind', 'strong_graph',
           'build_graph', 'complement', 'distance', 'metrics',
           'cut_vertices', 'pendant_vertices', 'is_complete_bipartite',
           'is_clique', 'orthogonal', 'is_complemented', 'splits_via',
           'analyse', 'check', 'run_all', 'find_converse_counterexample',
           'CorpusSpec', 'run_corpus', 'TheoremViolation']
