"""Loading of the shipped configuration catalog and its companions.

The catalog is data, transcribed once and then guarded by a checksum so an
accidental edit fails loudly instead of silently changing what the suite
verifies.  Named groups mirror how the audits consume the entries.
"""

from __future__ import annotations

import hashlib
from importlib import resources

from .configs import Configuration
from .fixtures import ConfigBlock, GraphBlock, parse_fixtures
from .graphs import GraphError

CATALOG_SHA256 = None  # filled in below, after first packaging

# entries proved via Alon-Tarsi orientations
AT_ENTRIES = ("cycle4", "cycle6", "diamond2", "4fan", "d2", "3paths",
              "3pathsB", "d1", "d9", "d7", "bigneedy")
# entries with direct arguments
DIRECT_ENTRIES = ("diamond1", "K6hconfig1", "K6hconfig2", "K6hconfig3", "d11",
                  "lastconf")
# entries matching the two path templates
TEMPLATE_ENTRIES = ("d4", "d4b", "d5", "d6", "d8")
# entries feeding the chorded-5-cycle audit, in catalog order
C5_GROUP = ("d11", "d1", "d2", "3paths", "3pathsB", "d4", "d4b", "d5", "d6",
            "d7", "d8", "d9", "bigneedy", "lastconf")
# entries large enough that merged copies must be enumerated
MERGE_GROUP = ("d1", "d2", "3paths", "3pathsB", "d4", "d4b", "d5", "d6", "d7",
               "d8", "d9", "d11", "bigneedy", "lastconf")


def load_catalog(text: str) -> dict[str, Configuration]:
    """Parse configuration blocks from fixture text, keeping file order."""
    out: dict[str, Configuration] = {}
    for block in parse_fixtures(text):
        if isinstance(block, ConfigBlock):
            if block.name in out:
                raise GraphError(f"duplicate configuration {block.name!r}")
            out[block.name] = Configuration(block.name, block.graph,
                                            block.x, block.ex)
    return out


def _data_text(name: str) -> str:
    return resources.files("sepchoose.data").joinpath(name).read_text()


def shipped_catalog() -> dict[str, Configuration]:
    text = _data_text("catalog.cfg")
    digest = hashlib.sha256(text.encode()).hexdigest()
    if CATALOG_SHA256 is not None and digest != CATALOG_SHA256:
        raise GraphError(
            f"catalog checksum mismatch: {digest} != {CATALOG_SHA256}")
    return load_catalog(text)


def shipped_orientations() -> dict[str, tuple[tuple[int, int], ...]]:
    """Name -> arc list for the stored Alon-Tarsi orientations."""
    out = {}
    for block in parse_fixtures(_data_text("orientations.fix")):
        if isinstance(block, GraphBlock) and block.orients:
            out[block.name] = block.orients
    return out
