"""
The json module writes graphs, reports and summaries as JSON documents.
"""
import json
from .export import GraphWriter, plain, to_dict


def dumps(document, indent=2):
    """Dumps ``document``, converting result objects with ``to_dict``."""
    if not isinstance(document, dict):
        document = to_dict(document)
    return json.dumps(document, indent=indent, default=plain)


class JsonWriter(GraphWriter):
    extension = 'json'

    def __init__(self, indent=2):
        self.indent = indent

    def serialize(self, graph):
        return (dumps(graph, indent=self.indent) + '\n').encode('utf-8')
