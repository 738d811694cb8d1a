"""Exact certificates that graphs properly containing a triangle are not strongly common."""

import json as _json

from ._strongcommon import (
    Graph,
    canonical_form,
    certify_document,
    deficit,
    delta,
    hom_density_up,
    parse_graph6,
    run_cli,
    verify_document,
)

__all__ = [
    "Graph",
    "canonical_form",
    "certify",
    "deficit",
    "delta",
    "hom_density_up",
    "parse_graph6",
    "run_cli",
    "verify",
]


def certify(graph):
    """Certificate document for ``graph`` as a dict (the CLI's JSON schema)."""
    return _json.loads(certify_document(graph))


def verify(document):
    """Re-check a certificate dict; returns (valid, certified, detail)."""
    return verify_document(_json.dumps(document))
