from .export import (GraphWriter, extension_of, json_number, ring_report,
                     to_dict)
from .dot import DotWriter
from .edgelist import EdgeListWriter
from .json import JsonWriter, dumps
from .graphml import GraphMLWriter

# format name -> writer class
writer_factory = {'dot': DotWriter,
                  'edgelist': EdgeListWriter,
                  'json': JsonWriter,
                  'graphml': GraphMLWriter}


def get_writer(format=None, output=None):
    """Gets the writer of ``format``, or of the extension of ``output`` when
    no format is given (DOT by default).

    :raises ValueError: on an unknown format
    """
    extension = extension_of(output)
    if extension not in writer_factory:
        extension = None
    format = format or extension or 'dot'
    try:
        return writer_factory[format.lower()]()
    except KeyError:
        raise ValueError('Unknown graph format {0!r}, expected one of {1}'
                         .format(format, ', '.join(sorted(writer_factory))))


def write_graph(graph, output=None, format=None):
    """Writes ``graph`` to ``output`` (standard output by default)."""
    return get_writer(format, output).save(graph, output)


__all__ = ['GraphWriter', 'DotWriter', 'EdgeListWriter', 'JsonWriter',
           'GraphMLWriter', 'writer_factory', 'get_writer', 'write_graph',
           'to_dict', 'ring_report', 'dumps', 'json_number']
