"""Everything the theorem checks and the reports need about one ring,
computed on first access and kept for the lifetime of the ring."""
from functools import cached_property
from .graph import (complement, cut_vertices, has_triangle, metrics,
                    pendant_vertices, strong_graph)
from .lattice import cp_lattice
from .ring import ProductRing
from .structure import (annihilator_table, central_covers,
                        central_projections, classify)


class RingAnalysis(object):
    def __init__(self, ring):
        self.ring = ring

    @cached_property
    def table(self):
        return annihilator_table(self.ring)

    @cached_property
    def classification(self):
        return classify(self.ring)

    @property
    def pq_baer(self):
        return self.classification.is_pq_baer

    @cached_property
    def central(self):
        return central_projections(self.ring)

    @property
    def cp_count(self):
        return len(self.central)

    @cached_property
    def lattice(self):
        return cp_lattice(self.ring)

    @cached_property
    def covers(self):
        """The central cover map, ``None`` unless the ring is p.q.-Baer."""
        if not self.pq_baer:
            return None
        return central_covers(self.ring)

    @cached_property
    def classes(self):
        return self.covers.classes() if self.covers is not None else None

    @cached_property
    def graph(self):
        return strong_graph(self.ring)

    @cached_property
    def graph_complement(self):
        return complement(self.graph)

    @property
    def metrics(self):
        return metrics(self.graph)

    @property
    def complement_metrics(self):
        return metrics(self.graph_complement)

    @cached_property
    def cut_vertices(self):
        return cut_vertices(self.graph)

    @cached_property
    def pendants(self):
        return pendant_vertices(self.graph)

    @cached_property
    def triangle_free(self):
        return not has_triangle(self.graph)

    @property
    def vertex_count(self):
        return len(self.graph)

    @cached_property
    def factors(self):
        """The two factors when the ring was built as a product."""
        if isinstance(self.ring, ProductRing):
            return analyse(self.ring.left), analyse(self.ring.right)
        return None

    def label(self, a):
        return self.ring.label(a)

    def labels(self, elements):
        return [self.ring.label(a) for a in elements]


def analyse(R):
    """Gets the (cached) :class:`RingAnalysis` of ``R``."""
    return R.derived('analysis', lambda: RingAnalysis(R))
