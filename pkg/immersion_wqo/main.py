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
Entry point of the immersion-wqo command.
"""

import logging
import sys

from immersion_wqo.altpath import is_path_or_cycle_with_duplicates, max_pivots
from immersion_wqo.classify import classify
from immersion_wqo.constants import (
    A_CLASSES,
    EXIT_INPUT_ERROR,
    EXIT_NEGATIVE,
    EXIT_OK,
    EXIT_RESOURCE_GUARD
)
from immersion_wqo.decomp import (
    gadget_contract,
    max_disjoint_unsheltered_alt_paths,
    min_hitting_set,
    sp2seps,
    strip
)
from immersion_wqo.digraph import RootedDigraph
from immersion_wqo.exceptions import (
    DomainError,
    ImmersionWqoException,
    InterchangeError,
    InternalInvariantError,
    PreconditionError,
    ResourceGuardError
)
from immersion_wqo.generators import generate
from immersion_wqo.harness import wqo_scan
from immersion_wqo.immersion import EmbeddingConstraints, SearchGuard, check_embedding, find_embedding
from immersion_wqo.interchange import (
    DIGRAPH_SCHEMA,
    EMBEDDING_SCHEMA,
    SEQUENCE_SCHEMA,
    digraph_from_document,
    digraph_to_document,
    dump,
    embedding_from_document,
    freeze,
    load_config,
    portrait_to_document,
    qo_from_document,
    read_document,
    sequence_from_document
)
from immersion_wqo.parser import create_parser
from immersion_wqo.quasi_order import QuasiOrder
from immersion_wqo.sp import recognize, separator, sp_decompose
from immersion_wqo.sptree import build_portrait

LOGGER = logging.getLogger(__name__)


def _require_option(args, name):
    value = getattr(args, name)
    if value is None:
        raise DomainError(f'The {args.action} action needs --{name.replace("_", "-")}.')
    return value


def _read_digraph(path, what='--input'):
    """Return (LabelledDigraph, document) read from a digraph file."""
    if path is None:
        raise DomainError(f'Missing {what} digraph document.')
    document = read_document(path, DIGRAPH_SCHEMA)
    return digraph_from_document(document, path), document


def _root(args, document):
    root = args.root or document.get('root')
    if root is None:
        raise DomainError(f'The {args.action} action needs a root: pass --root or set "root".')
    return root


def _triple(args, labelled, document):
    terminals = args.terminals or document.get('terminals')
    if terminals is None:
        raise DomainError(f'The {args.action} action needs terminals: pass --terminals or set "terminals".')
    s, t = terminals
    labelled.digraph.check_vertices([s, t])
    triple = recognize(labelled.digraph, s, t)
    if triple is None:
        raise PreconditionError(f'The input is not a series-parallel triple on {s!r}, {t!r}.')
    return triple


def _vertex_list(digraph, vertices):
    return [v for v in digraph.vertices if v in vertices]


def analyze(args, guard, config):
    """Report pivots and, when asked, the k-alternating test and a class verdict."""
    labelled, document = _read_digraph(args.input)
    digraph = labelled.digraph
    result = {
        'max_pivots': max_pivots(digraph),
        'path_or_cycle_with_duplicates': is_path_or_cycle_with_duplicates(digraph),
    }
    verdict = True
    if args.k is not None:
        result[f'no_{args.k}_alternating_path'] = result['max_pivots'] < args.k
        verdict = result[f'no_{args.k}_alternating_path']
    if args.class_id is not None:
        if args.class_id in A_CLASSES:
            item = _triple(args, labelled, document)
        elif args.class_id == 'F_{t,k}':
            item = RootedDigraph(digraph, _root(args, document))
        else:
            item = digraph
        member = classify(item, args.class_id, t=args.t, k=args.k, a=args.a)
        result['class'] = {'id': args.class_id, 'member': member}
        verdict = verdict and member
    return result, verdict


def _label_order(*documents):
    """Return the order the documents declare, or the antichain on all their labels."""
    for document in documents:
        if 'qo' in document:
            return qo_from_document(document['qo'])
    labels = [freeze(entry['label']) for document in documents
              for entry in document['vertices'] if 'label' in entry]
    return QuasiOrder.antichain(dict.fromkeys(labels)) if labels else None


def embed(args, guard, config):
    """Search for an embedding of --input into --host, or verify --certificate."""
    if args.input is None or args.host is None:
        raise DomainError('The embed action needs --input and --host digraph documents.')
    guest_document = read_document(args.input, DIGRAPH_SCHEMA)
    host_document = read_document(args.host, DIGRAPH_SCHEMA)
    try:
        qo = _label_order(guest_document, host_document)
    except DomainError as err:
        raise InterchangeError(f'{args.input}: {err}')
    guest = digraph_from_document(guest_document, args.input, qo)
    host = digraph_from_document(host_document, args.host, qo)
    constraints = EmbeddingConstraints(qo=guest.qo)
    if args.certificate is not None:
        document = read_document(args.certificate, EMBEDDING_SCHEMA)
        embedding = embedding_from_document(document, args.certificate)
        check = check_embedding(guest, host, embedding, constraints)
        return {'valid': check.ok, 'violation': check.violation, 'detail': check.detail}, check.ok
    found = find_embedding(guest, host, constraints, guard)
    return {'embedding': found.to_dict() if found else None}, found is not None


def decompose(args, guard, config):
    """Report the decomposition tree, canonical form and a separator of a triple."""
    labelled, document = _read_digraph(args.input)
    triple = _triple(args, labelled, document)
    tree = sp_decompose(triple)
    cut = separator(triple, args.closest)
    return {
        's': triple.s,
        't': triple.t,
        'direction': triple.direction,
        'canonical_form': tree.canonical(),
        'tree': tree.to_dict(),
        'separator': cut.to_dict(),
    }, True


def portrait(args, guard, config):
    labelled, document = _read_digraph(args.input)
    return portrait_to_document(build_portrait(labelled, _root(args, document))), True


def separations(args, guard, config):
    labelled, _ = _read_digraph(args.input)
    found = sp2seps(labelled.digraph, args.mode)
    return {'mode': args.mode, 'separations': [sep.to_dict() for sep in found]}, True


def hitting_set(args, guard, config):
    """Report a minimum hitting set and a maximum packing of unsheltered t-alternating paths."""
    labelled, _ = _read_digraph(args.input)
    digraph = labelled.digraph
    t = _require_option(args, 't')
    hitting = min_hitting_set(digraph, t)
    count, threads = max_disjoint_unsheltered_alt_paths(digraph, t)
    return {
        't': t,
        'hitting_set': _vertex_list(digraph, hitting),
        'packing': count,
        'threads': [list(thread.edges) for thread in threads],
    }, True


def contract(args, guard, config):
    labelled, _ = _read_digraph(args.input)
    family = sp2seps(labelled.digraph, 'cross-free')
    contracted, provenance = gadget_contract(labelled.digraph, family)
    return {
        'digraph': digraph_to_document(contracted),
        'gadgets': [record._asdict() for record in provenance],
    }, True


def strip_action(args, guard, config):
    labelled, _ = _read_digraph(args.input)
    return digraph_to_document(strip(labelled, args.strip_kind, args.apex)), True


def generate_action(args, guard, config):
    kind = _require_option(args, 'kind')
    sampler_options = {}
    if kind == 'random-no-k-alt':
        sampler_options = {'max_attempts': config['sampler_max_attempts'],
                           'initial_density': config['sampler_initial_density']}
    generated = generate(kind, i=args.i, n=args.n, k=args.k, seed=args.seed, **sampler_options)
    return digraph_to_document(generated.digraph, {'generator': generated.metadata}), True


def scan(args, guard, config):
    if args.input is None:
        raise DomainError('Missing --input sequence document.')
    document = read_document(args.input, SEQUENCE_SCHEMA)
    sequence = sequence_from_document(document, args.input)
    report = wqo_scan(sequence, _require_option(args, 'k'),
                      skip_violations=not args.abort_on_violation, guard=guard)
    LOGGER.debug('Scan took %.3f seconds', report.seconds)
    return report.to_dict(timing=False), bool(report)


ACTION_HANDLERS = {
    'analyze': analyze,
    'embed': embed,
    'decompose': decompose,
    'portrait': portrait,
    'separations': separations,
    'hitting-set': hitting_set,
    'contract': contract,
    'strip': strip_action,
    'generate': generate_action,
    'scan': scan,
}


def write_result(document, args):
    """Print the result document, or write it to --output.

    Raises:
        InterchangeError: if the output file cannot be written.
    """
    text = dump(document, args.format)
    if args.output is None:
        print(text, end='')
        return
    try:
        with open(args.output, 'w') as f:
            f.write(text)
    except OSError as err:
        raise InterchangeError(f'Unable to write {args.output}: {err}')


def main(argv=None):
    """Run the immersion-wqo command.

    Returns:
        int: 0 when the result was computed (and any verdict holds), 1 when
            the verdict is negative, 2 on input errors and 3 when a search
            guard was exceeded.
    """
    args = create_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format='%(levelname)s: %(message)s')
    try:
        config = load_config(args.config)
        max_vertices = config['guard_vertices'] if args.guard is None else args.guard
        guard = SearchGuard(max_vertices=max_vertices, max_edges=config['guard_edges'])
        document, verdict = ACTION_HANDLERS[args.action](args, guard, config)
        write_result(document, args)
    except ResourceGuardError as err:
        LOGGER.error(str(err))
        return EXIT_RESOURCE_GUARD
    except InternalInvariantError:
        raise
    except ImmersionWqoException as err:
        LOGGER.error(str(err))
        return EXIT_INPUT_ERROR
    return EXIT_OK if verdict else EXIT_NEGATIVE


if __name__ == '__main__':
    sys.exit(main())
