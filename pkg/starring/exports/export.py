"""The export module gathers what every output format shares: the graph
writer protocol, the conversion of results to plain dictionaries and the
report of one ring.

A :py:class:`GraphWriter` turns a :py:class:`~starring.graph.Graph` into
bytes and saves them to a path or a binary stream. Vertices are written in
element id order and edges in lexicographic order, so every output is
deterministic.
"""
import sys
from collections import OrderedDict
from functools import singledispatch
from os import path
import numpy as np
from ..analysis import analyse
from ..corpus import CorpusSummary
from ..graph import (Graph, GraphMetrics, cut_vertices, is_complete_bipartite,
                     metrics, pendant_vertices)
from ..innerutils import INFINITY
from ..structure import ClassificationReport
from ..theorems import CheckResult, ConverseWitness
from ..validation import ValidationReport


class GraphWriter(object):
    """Base of the graph writers, one per output format.

    Subclasses give:
    * extension (class attribute)
    * serialize (method)
    """
    extension = None

    def serialize(self, graph):
        raise NotImplementedError()

    def save(self, graph, output=None):
        """Writes ``graph`` to ``output``: a path, a binary stream or the
        standard output when omitted."""
        data = self.serialize(graph)
        if output is None:
            stream = sys.stdout.buffer
            stream.write(data)
            stream.flush()
        elif isinstance(output, str):
            with open(output, 'wb') as stream:
                stream.write(data)
        else:
            output.write(data)
        return data

    @staticmethod
    def edge_labels(graph):
        label = graph.ring.label
        return [(label(u), label(v)) for u, v in graph.edges()]


def extension_of(output):
    """The extension of an output path, lower case and without the dot."""
    if not isinstance(output, str):
        return None
    return path.splitext(output)[1][1:].lower() or None


def json_number(value):
    if value is None:
        return None
    if value == INFINITY:
        return 'infinity'
    return int(value)


def plain(value):
    """``json.dumps`` fallback for numpy scalars and arrays."""
    if isinstance(value, np.generic):
        return value.item()
    if isinstance(value, np.ndarray):
        return value.tolist()
    raise TypeError('{0!r} is not JSON serializable'.format(value))


@singledispatch
def to_dict(obj):
    """Converts a result object to a JSON-ready dictionary."""
    raise TypeError('Cannot convert {0!r} to a dictionary'.format(obj))


@to_dict.register(GraphMetrics)
def _metrics_to_dict(m):
    return OrderedDict([('vertices', m.vertex_count),
                        ('edges', m.edge_count),
                        ('connected', m.connected),
                        ('components', m.component_count),
                        ('diameter', json_number(m.diameter)),
                        ('girth', json_number(m.girth))])


@to_dict.register(ClassificationReport)
def _classification_to_dict(report):
    d = OrderedDict(report.as_dict())
    d['witnesses'] = report.labelled_witnesses()
    return d


@to_dict.register(CheckResult)
def _check_to_dict(result):
    d = OrderedDict([('id', result.id), ('status', result.status.value)])
    if result.witness is not None:
        d['witness'] = result.witness
    if result.hypothesis:
        d['hypothesis'] = result.hypothesis
    if result.holds:
        d['vacuous'] = result.vacuous
        d['instances'] = result.instances
    return d


@to_dict.register(Graph)
def _graph_to_dict(graph):
    label = graph.ring.label
    return OrderedDict([('name', graph.name),
                        ('kind', graph.kind.value),
                        ('complement', graph.complemented),
                        ('ring', graph.ring.descriptor),
                        ('vertices', graph.labels()),
                        ('edges', [list(e)
                                   for e in GraphWriter.edge_labels(graph)]),
                        ('loops', [label(v) for v in graph.loops])])


@to_dict.register(ValidationReport)
def _validation_to_dict(report):
    return OrderedDict([('ok', report.ok),
                        ('exhaustive', report.exhaustive),
                        ('samples', report.samples),
                        ('axioms', OrderedDict((axiom.value, passed)
                                               for axiom, passed in
                                               report.results.items())),
                        ('witnesses', report.labelled_witnesses())])


@to_dict.register(ConverseWitness)
def _converse_to_dict(found):
    return OrderedDict([('converse', found.converse_id),
                        ('ring', found.descriptor),
                        ('witness', found.witness),
                        ('examined', found.examined)])


@to_dict.register(CorpusSummary)
def _summary_to_dict(summary):
    return OrderedDict([
        ('rings', len(summary.rings)),
        ('counts', summary.counts),
        ('violations', [OrderedDict([('ring', descriptor),
                                     ('id', result.id),
                                     ('witness', result.witness)])
                        for descriptor, result in summary.violations]),
        ('invalid', summary.invalid),
        ('implications', summary.implications),
        ('converses', OrderedDict((converse_id, None if found is None
                                   else to_dict(found))
                                  for converse_id, found in
                                  summary.converses.items()))])


def _graph_summary(graph):
    m = metrics(graph)
    sizes = is_complete_bipartite(graph)
    return OrderedDict([('vertices', m.vertex_count),
                        ('edges', m.edge_count),
                        ('diameter', json_number(m.diameter)),
                        ('girth', json_number(m.girth)),
                        ('connected', m.connected),
                        ('cut_vertices', cut_vertices(graph).labels()),
                        ('pendants', pendant_vertices(graph).labels()),
                        ('complete_bipartite',
                         list(sizes) if sizes else None)])


def ring_report(ring, spec=None, checks=None, validation=None):
    """The report of one ring.

    :param spec: the specification text, echoed verbatim
    :param checks: the :class:`CheckResult` list to include
    :param validation: a :class:`ValidationReport` to include
    """
    A = analyse(ring)
    report = OrderedDict()
    report['spec'] = spec if spec is not None else ring.descriptor
    report['order'] = ring.order
    report['involution_proper'] = ring.involution_proper
    report['classification'] = to_dict(A.classification)
    report['cp'] = OrderedDict([('count', A.cp_count),
                                ('atoms', A.labels(A.lattice.atoms))])
    report['graphs'] = OrderedDict([
        ('strong', _graph_summary(A.graph)),
        ('complement', _graph_summary(A.graph_complement))])
    report['checks'] = [to_dict(result) for result in checks or ()]
    if validation is not None:
        report['validation'] = to_dict(validation)
    return report
