#
# MIT License
#
# (C) Copyright 2026 immersion-wqo contributors
#
# Permission is hereby granted, free of charge, to any person obtaining a
# copy of this software and associated documentation files (the "Software"),
# to deal in the Software without restriction, including without limitation
# the rights to use, copy, modify, merge, publish, distribute, sublicense,
# and/or sell copies of the Software, and to permit persons to whom the
# Software is furnished to do so, subject to the following conditions:
#
# The above copyright notice and this permission notice shall be included
# in all copies or substantial portions of the Software.
#
# THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND, EXPRESS OR
# IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES OF MERCHANTABILITY,
# FITNESS FOR A PARTICULAR PURPOSE AND NONINFRINGEMENT. IN NO EVENT SHALL
# THE AUTHORS OR COPYRIGHT HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR
# OTHER LIABILITY, WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE,
# ARISING FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
# OTHER DEALINGS IN THE SOFTWARE.
#
"""
Unit tests for the immersion_wqo.interchange module.
"""

import json
import unittest
from unittest.mock import mock_open, patch

import yaml

from immersion_wqo.constants import OMEGA, OMEGA_JSON, TAG_MIDDLE_BLOCK, TAG_ROOT
from immersion_wqo.digraph import LabelledDigraph
from immersion_wqo.exceptions import InterchangeError
from immersion_wqo.interchange import (
    DEFAULT_CONFIG,
    DIGRAPH_SCHEMA,
    EMBEDDING_SCHEMA,
    check_document,
    digraph_from_document,
    digraph_to_document,
    dump,
    embedding_from_document,
    load_config,
    parse_json,
    portrait_to_document,
    qo_from_document,
    qo_to_document,
    read_document,
    sequence_from_document
)
from immersion_wqo.quasi_order import QuasiOrder
from immersion_wqo.sptree import build_portrait
from tests.mocks import directed_path, two_triangles

PATH_DOCUMENT = {
    'vertices': [{'id': 'v0'}, {'id': 'v1'}],
    'edges': [{'id': 'e0', 'tail': 'v0', 'head': 'v1'}],
    'loops_allowed': False,
}


class TestDocuments(unittest.TestCase):
    """Tests for parsing and validating documents."""

    def test_schema_violation(self):
        """Test that the JSON path of a schema violation is reported."""
        document = {'vertices': [{'id': 1}], 'edges': []}
        with self.assertRaisesRegex(InterchangeError, 'g.json: at vertices/0/id'):
            check_document(document, DIGRAPH_SCHEMA, 'g.json')
        with self.assertRaisesRegex(InterchangeError, 'at <root>'):
            check_document({'vmap': {}}, EMBEDDING_SCHEMA)

    def test_syntax_error(self):
        """Test that a syntax error carries its line and column."""
        with self.assertRaisesRegex(InterchangeError, 'g.json:2:6'):
            parse_json('{\n"a": }', 'g.json')

    def test_read_document(self):
        """Test reading through a mocked file and an unreadable one."""
        with patch('builtins.open', mock_open(read_data=json.dumps(PATH_DOCUMENT))):
            self.assertEqual(read_document('g.json', DIGRAPH_SCHEMA), PATH_DOCUMENT)
        with patch('builtins.open', side_effect=OSError('denied')):
            with self.assertRaisesRegex(InterchangeError, 'Unable to read g.json'):
                read_document('g.json', DIGRAPH_SCHEMA)


class TestDigraphDocuments(unittest.TestCase):
    """Tests for digraph, sequence and embedding documents."""

    def test_unlabelled(self):
        """Test default edge ids and the one-element order."""
        document = {'vertices': [{'id': 'v0'}, {'id': 'v1'}], 'edges': [{'tail': 'v0', 'head': 'v1'}]}
        labelled = digraph_from_document(document)
        self.assertEqual(labelled.digraph, directed_path(1))
        self.assertEqual(labelled.qo, QuasiOrder.trivial())

    def test_labels(self):
        """Test declared orders, frozen list labels and the equality default."""
        document = dict(PATH_DOCUMENT, vertices=[{'id': 'v0', 'label': 'low'}, {'id': 'v1', 'label': 'high'}],
                        qo={'elements': ['low', 'high'], 'leq': [['low', 'high']]})
        labelled = digraph_from_document(document)
        self.assertTrue(labelled.qo.leq('low', 'high'))
        document = dict(PATH_DOCUMENT, vertices=[{'id': 'v0', 'label': [1, 2]}, {'id': 'v1', 'label': 'x'}])
        labelled = digraph_from_document(document)
        self.assertEqual(labelled.labels['v0'], (1, 2))
        self.assertEqual(labelled.qo, QuasiOrder.antichain([(1, 2), 'x']))

    def test_invalid(self):
        """Test structural and domain problems reported as interchange errors."""
        loop = {'vertices': [{'id': 'v0'}], 'edges': [{'tail': 'v0', 'head': 'v0'}]}
        with self.assertRaisesRegex(InterchangeError, 'loop'):
            digraph_from_document(loop, 'g.json')
        self.assertEqual(digraph_from_document(dict(loop, loops_allowed=True)).digraph.num_edges, 1)
        foreign = dict(PATH_DOCUMENT, vertices=[{'id': 'v0', 'label': 'z'}, {'id': 'v1', 'label': 'z'}],
                       qo={'elements': ['a']})
        with self.assertRaises(InterchangeError):
            digraph_from_document(foreign)

    def test_to_document(self):
        """Test the document of bare and labelled digraphs."""
        self.assertEqual(digraph_to_document(directed_path(1)), PATH_DOCUMENT)
        qo = QuasiOrder.chain(['low', 'high'])
        labelled = LabelledDigraph(directed_path(1), qo, {'v0': 'low', 'v1': 'high'})
        document = digraph_to_document(labelled, {'root': 'v0'})
        self.assertEqual(document['vertices'][1], {'id': 'v1', 'label': 'high'})
        self.assertEqual(document['qo'], {'elements': ['low', 'high'], 'leq': [['low', 'high']]})
        self.assertEqual(document['root'], 'v0')
        restored = digraph_from_document(document)
        self.assertEqual(restored.labels, labelled.labels)
        self.assertEqual(restored.qo, qo)

    def test_qo_documents(self):
        """Test that an order survives its document."""
        qo = QuasiOrder.presence_counts(2)
        self.assertEqual(qo_from_document(qo_to_document(qo)), qo)

    def test_sequence(self):
        """Test the shared order and the position of a bad entry."""
        entry = dict(PATH_DOCUMENT, vertices=[{'id': 'v0', 'label': 'low'}, {'id': 'v1', 'label': 'high'}])
        document = {'qo': {'elements': ['low', 'high'], 'leq': [['low', 'high']]}, 'digraphs': [entry, entry]}
        sequence = sequence_from_document(document, 'seq.json')
        self.assertEqual(len(sequence), 2)
        self.assertTrue(sequence[1].qo.leq('low', 'high'))
        bad = dict(entry, vertices=[{'id': 'v0', 'label': 'mid'}, {'id': 'v1', 'label': 'high'}])
        with self.assertRaisesRegex(InterchangeError, r'seq.json#digraphs/1'):
            sequence_from_document({'qo': document['qo'], 'digraphs': [entry, bad]}, 'seq.json')

    def test_embedding(self):
        """Test the embedding document."""
        embedding = embedding_from_document({'vmap': {'v0': 'a'}, 'emap': {}})
        self.assertEqual(embedding.vertex_map, {'v0': 'a'})
        with self.assertRaises(InterchangeError):
            embedding_from_document({'vmap': {'v0': 1}, 'emap': {}})


class TestConfigAndDump(unittest.TestCase):
    """Tests for load_config and dump."""

    def test_defaults(self):
        """Test that no file gives the defaults."""
        self.assertEqual(load_config(), DEFAULT_CONFIG)
        with patch('builtins.open', mock_open(read_data='')):
            self.assertEqual(load_config('c.yaml'), DEFAULT_CONFIG)

    def test_overrides(self):
        """Test that the file overrides the defaults."""
        with patch('builtins.open', mock_open(read_data='guard_vertices: 5\n')):
            config = load_config('c.yaml')
        self.assertEqual(config['guard_vertices'], 5)
        self.assertEqual(config['guard_edges'], DEFAULT_CONFIG['guard_edges'])

    def test_invalid(self):
        """Test unknown keys, bad YAML and unreadable files."""
        with patch('builtins.open', mock_open(read_data='colour: blue\n')):
            with self.assertRaisesRegex(InterchangeError, 'c.yaml'):
                load_config('c.yaml')
        with patch('builtins.open', mock_open(read_data='guard_vertices: [1\n')):
            with self.assertRaisesRegex(InterchangeError, 'invalid YAML'):
                load_config('c.yaml')
        with patch('builtins.open', side_effect=OSError('denied')):
            with self.assertRaisesRegex(InterchangeError, 'Unable to read'):
                load_config('c.yaml')

    def test_dump(self):
        """Test both formats, tuple labels and the spelling of omega."""
        document = {'label': (1, 2), 'edge_label': OMEGA}
        self.assertEqual(json.loads(dump(document)), {'label': [1, 2], 'edge_label': OMEGA_JSON})
        self.assertEqual(yaml.safe_load(dump(document, 'yaml')), {'label': [1, 2], 'edge_label': OMEGA_JSON})


class TestPortraitDocument(unittest.TestCase):
    """Tests for portrait_to_document."""

    def test_two_triangles(self):
        """Test node ids, parents, edge labels and payloads."""
        document = portrait_to_document(build_portrait(two_triangles(), 'r'))
        self.assertEqual(document['root'], 'r')
        self.assertEqual(list(document['separators']), ['0'])
        nodes = {node['id']: node for node in document['nodes']}
        self.assertEqual(nodes['C:r']['tag'], TAG_ROOT)
        self.assertIsNone(nodes['C:r']['parent'])
        self.assertEqual(nodes['L:0']['tag'], TAG_MIDDLE_BLOCK)
        self.assertEqual(nodes['L:0']['parent'], 'X:0')
        self.assertEqual(nodes['L:0']['edge_label'], 2)
        self.assertEqual(nodes['L:0']['payload']['terminals'], ['r', 'c'])
        self.assertEqual(nodes['L:1']['payload']['root'], 'c')
        self.assertEqual(nodes['C:c']['payload'], {'vertex': 'c', 'label': '*'})
        self.assertEqual(nodes['X:0']['edge_label'], OMEGA_JSON)


if __name__ == '__main__':
    unittest.main()
