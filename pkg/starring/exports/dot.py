"""
The dot module writes graphs in the DOT graph description language.
"""
from .export import GraphWriter


def quote(text):
    return '"{0}"'.format(text.replace('\\', '\\\\').replace('"', '\\"'))


class DotWriter(GraphWriter):
    extension = 'dot'

    def __init__(self, indent=2):
        self.indent = ' ' * indent

    def serialize(self, graph):
        lines = ['graph {0} {{'.format(quote(graph.name))]
        for label in graph.labels():
            lines.append('{0}{1};'.format(self.indent, quote(label)))
        for u, v in self.edge_labels(graph):
            lines.append('{0}{1} -- {2};'.format(self.indent, quote(u),
                                                 quote(v)))
        lines.append('}')
        return ('\n'.join(lines) + '\n').encode('utf-8')
