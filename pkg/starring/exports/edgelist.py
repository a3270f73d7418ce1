"""
The edgelist module writes one ``u v`` line per edge. Labels holding spaces
are quoted.
"""
from .export import GraphWriter


def token(label):
    if any(c.isspace() for c in label):
        return '"{0}"'.format(label)
    return label


class EdgeListWriter(GraphWriter):
    extension = 'edgelist'

    def serialize(self, graph):
        lines = ['{0} {1}\n'.format(token(u), token(v))
                 for u, v in self.edge_labels(graph)]
        return ''.join(lines).encode('utf-8')
