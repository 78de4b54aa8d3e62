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
JSON and YAML documents: schemas, loading with positioned errors, and
dumping of digraphs, embeddings, portraits and decomposition results.
"""

import json
import logging

from jsonschema import validate
from jsonschema.exceptions import ValidationError
from yaml import YAMLError, safe_dump, safe_load

from immersion_wqo.constants import (
    DEFAULT_GUARD_EDGES,
    DEFAULT_GUARD_VERTICES,
    OMEGA,
    OMEGA_JSON,
    SAMPLER_INITIAL_DENSITY,
    SAMPLER_MAX_ATTEMPTS,
    TAG_CUT_VERTEX,
    TAG_LEAF_BLOCK,
    TAG_ROOT
)
from immersion_wqo.digraph import LabelledDigraph, MultiDigraph
from immersion_wqo.exceptions import DomainError, InterchangeError, StructuralError
from immersion_wqo.immersion import Embedding
from immersion_wqo.quasi_order import QuasiOrder

LOGGER = logging.getLogger(__name__)

FORMATS = ('json', 'yaml')

QO_SCHEMA = {
    'type': 'object',
    'required': ['elements'],
    'properties': {
        'elements': {'type': 'array'},
        'leq': {
            'type': 'array',
            'items': {'type': 'array', 'minItems': 2, 'maxItems': 2},
        },
    },
}

DIGRAPH_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'type': 'object',
    'required': ['vertices', 'edges'],
    'properties': {
        'vertices': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['id'],
                'properties': {'id': {'type': 'string'}, 'label': {}},
            },
        },
        'edges': {
            'type': 'array',
            'items': {
                'type': 'object',
                'required': ['tail', 'head'],
                'properties': {
                    'id': {'type': 'string'},
                    'tail': {'type': 'string'},
                    'head': {'type': 'string'},
                },
            },
        },
        'qo': QO_SCHEMA,
        'loops_allowed': {'type': 'boolean'},
        'root': {'type': 'string'},
        'terminals': {
            'type': 'array',
            'items': {'type': 'string'},
            'minItems': 2,
            'maxItems': 2,
        },
        'generator': {'type': 'object'},
    },
}

SEQUENCE_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'type': 'object',
    'required': ['digraphs'],
    'properties': {
        'qo': QO_SCHEMA,
        'digraphs': {'type': 'array', 'items': DIGRAPH_SCHEMA},
    },
}

EMBEDDING_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'type': 'object',
    'required': ['vmap', 'emap'],
    'properties': {
        'vmap': {'type': 'object', 'additionalProperties': {'type': 'string'}},
        'emap': {
            'type': 'object',
            'additionalProperties': {'type': 'array', 'items': {'type': 'string'}},
        },
    },
}

CONFIG_SCHEMA = {
    '$schema': 'http://json-schema.org/draft-07/schema#',
    'type': 'object',
    'additionalProperties': False,
    'properties': {
        'guard_vertices': {'type': 'integer', 'minimum': 1},
        'guard_edges': {'type': 'integer', 'minimum': 1},
        'sampler_max_attempts': {'type': 'integer', 'minimum': 1},
        'sampler_initial_density': {'type': 'number', 'exclusiveMinimum': 0, 'maximum': 1},
    },
}

DEFAULT_CONFIG = {
    'guard_vertices': DEFAULT_GUARD_VERTICES,
    'guard_edges': DEFAULT_GUARD_EDGES,
    'sampler_max_attempts': SAMPLER_MAX_ATTEMPTS,
    'sampler_initial_density': SAMPLER_INITIAL_DENSITY,
}


def freeze(value):
    """Turn JSON arrays into tuples, recursively, so labels are hashable."""
    if isinstance(value, list):
        return tuple(freeze(item) for item in value)
    return value


def thaw(value):
    """Turn tuples into lists and OMEGA into its JSON spelling, recursively."""
    if isinstance(value, dict):
        return {key: thaw(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [thaw(item) for item in value]
    if isinstance(value, float) and value == OMEGA:
        return OMEGA_JSON
    return value


def check_document(document, schema, source='<document>'):
    """Validate a document against a schema.

    Raises:
        InterchangeError: naming the JSON path of the first violation.
    """
    try:
        validate(instance=document, schema=schema)
    except ValidationError as err:
        where = '/'.join(str(part) for part in err.absolute_path) or '<root>'
        raise InterchangeError(f'{source}: at {where}: {err.message}')
    return document


def parse_json(text, source='<document>'):
    """Parse JSON text.

    Raises:
        InterchangeError: with source:line:column of a syntax error.
    """
    try:
        return json.loads(text)
    except json.JSONDecodeError as err:
        raise InterchangeError(f'{source}:{err.lineno}:{err.colno}: {err.msg}')


def read_document(path, schema):
    """Read and validate a JSON file.

    Raises:
        InterchangeError: if the file cannot be read, parsed or validated.
    """
    try:
        with open(path, 'r') as f:
            text = f.read()
    except OSError as err:
        raise InterchangeError(f'Unable to read {path}: {err}')
    return check_document(parse_json(text, path), schema, path)


def qo_from_document(document):
    elements = [freeze(element) for element in document['elements']]
    pairs = [(freeze(low), freeze(high)) for low, high in document.get('leq', [])]
    return QuasiOrder(elements, pairs)


def qo_to_document(qo):
    return {'elements': [thaw(e) for e in qo.elements],
            'leq': [[thaw(a), thaw(b)] for a, b in qo.pairs() if a != b]}


def digraph_from_document(document, source='<document>', qo=None):
    """Build a LabelledDigraph from a digraph document.

    Edge ids default to e<position>. Without a qo entry (or a shared qo)
    labelled vertices compare by equality, and an unlabelled document gets
    the one-element order.

    Raises:
        InterchangeError: if the document is invalid.
    """
    check_document(document, DIGRAPH_SCHEMA, source)
    try:
        vertices = [entry['id'] for entry in document['vertices']]
        edges = [(entry.get('id', f'e{position}'), entry['tail'], entry['head'])
                 for position, entry in enumerate(document['edges'])]
        digraph = MultiDigraph(vertices, edges, loops_allowed=document.get('loops_allowed', False))
        labels = {entry['id']: freeze(entry['label']) for entry in document['vertices'] if 'label' in entry}
        if 'qo' in document:
            qo = qo_from_document(document['qo'])
        if not labels and qo is None:
            return LabelledDigraph.unlabelled(digraph)
        if qo is None:
            qo = QuasiOrder.antichain(dict.fromkeys(labels.values()))
        return LabelledDigraph(digraph, qo, labels)
    except (StructuralError, DomainError) as err:
        raise InterchangeError(f'{source}: {err}')


def digraph_to_document(item, extra=None):
    """Return the document of a MultiDigraph or LabelledDigraph."""
    labelled = item if isinstance(item, LabelledDigraph) else None
    digraph = labelled.digraph if labelled else item
    vertices = []
    for vertex in digraph.vertices:
        entry = {'id': vertex}
        if labelled is not None:
            entry['label'] = thaw(labelled.labels[vertex])
        vertices.append(entry)
    document = {
        'vertices': vertices,
        'edges': [{'id': e.id, 'tail': e.tail, 'head': e.head} for e in digraph.edges],
        'loops_allowed': digraph.loops_allowed,
    }
    if labelled is not None and labelled.qo.is_finite:
        document['qo'] = qo_to_document(labelled.qo)
    document.update(extra or {})
    return document


def sequence_from_document(document, source='<document>'):
    """Return the LabelledDigraph values of a sequence document."""
    check_document(document, SEQUENCE_SCHEMA, source)
    try:
        shared = qo_from_document(document['qo']) if 'qo' in document else None
    except DomainError as err:
        raise InterchangeError(f'{source}: {err}')
    return [digraph_from_document(entry, f'{source}#digraphs/{position}', shared)
            for position, entry in enumerate(document['digraphs'])]


def embedding_from_document(document, source='<document>'):
    check_document(document, EMBEDDING_SCHEMA, source)
    return Embedding.from_dict(document)


def load_config(path=None):
    """Return the configuration: defaults overridden by a YAML file.

    Raises:
        InterchangeError: if the file cannot be read or is invalid.
    """
    config = dict(DEFAULT_CONFIG)
    if path is None:
        return config
    try:
        with open(path, 'r') as f:
            loaded = safe_load(f) or {}
    except OSError as err:
        raise InterchangeError(f'Unable to read {path}: {err}')
    except YAMLError as err:
        raise InterchangeError(f'{path}: invalid YAML: {err}')
    config.update(check_document(loaded, CONFIG_SCHEMA, path))
    return config


def dump(document, fmt='json'):
    """Serialize a document as JSON or YAML text."""
    document = thaw(document)
    if fmt == 'yaml':
        return safe_dump(document, sort_keys=False)
    return json.dumps(document, indent=2) + '\n'


def node_id(key):
    return f'{key[0]}:{key[1]}'


def portrait_to_document(portrait):
    """Return the tree document of a portrait with payload descriptors."""
    tree = portrait.tree
    nodes = []
    for key in tree.nodes:
        value = tree.node_labels[key]
        up = tree.parent[key]
        entry = {
            'id': node_id(key),
            'tag': value.tag,
            'parent': node_id(up) if up is not None else None,
            'edge_label': thaw(tree.edge_labels[key]) if up is not None else None,
        }
        if value.tag in (TAG_ROOT, TAG_CUT_VERTEX):
            entry['payload'] = {'vertex': key[1], 'label': thaw(value.payload)}
        else:
            payload_digraph = LabelledDigraph(value.payload.digraph, portrait.qo, value.labels)
            if value.tag == TAG_LEAF_BLOCK:
                extra = {'root': value.payload.root}
            else:
                extra = {'terminals': [value.payload.s, value.payload.t]}
            entry['payload'] = digraph_to_document(payload_digraph, extra)
        nodes.append(entry)
    return {
        'root': portrait.root,
        'separators': {str(index): cut.to_dict() for index, cut in portrait.separators.items()},
        'nodes': nodes,
    }
