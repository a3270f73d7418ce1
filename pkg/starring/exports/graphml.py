"""
The graphml module writes graphs as GraphML documents, the vertex labels held
in a ``label`` data key.
"""
from lxml import etree
from .export import GraphWriter

GRAPHML_URL = 'http://graphml.graphdrawing.org/xmlns'


def node_id(v):
    return 'n{0}'.format(v)


class GraphMLWriter(GraphWriter):
    extension = 'graphml'

    def serialize(self, graph):
        root = etree.Element(etree.QName(GRAPHML_URL, 'graphml'),
                             nsmap={None: GRAPHML_URL})
        etree.SubElement(root, etree.QName(GRAPHML_URL, 'key'),
                         {'id': 'label', 'for': 'node',
                          'attr.name': 'label', 'attr.type': 'string'})
        xml_graph = etree.SubElement(root, etree.QName(GRAPHML_URL, 'graph'),
                                     {'id': graph.name,
                                      'edgedefault': 'undirected'})
        for v in graph:
            node = etree.SubElement(xml_graph,
                                    etree.QName(GRAPHML_URL, 'node'),
                                    {'id': node_id(v)})
            data = etree.SubElement(node, etree.QName(GRAPHML_URL, 'data'),
                                    {'key': 'label'})
            data.text = graph.label(v)
        for u, v in graph.edges():
            etree.SubElement(xml_graph, etree.QName(GRAPHML_URL, 'edge'),
                             {'source': node_id(u), 'target': node_id(v)})
        return etree.tostring(root, pretty_print=True, xml_declaration=True,
                              encoding='UTF-8')
