"""Text form of family specifications, e.g. ``R:m=2`` or ``chain:R:m=2,J:t=2``.

A chain lists its parts separated by commas.  A token that contains ``:``
or has no ``=`` starts a new part; any other ``key=value`` token adds a
parameter to the current part.  Seed graphs for the ``h`` parameter are named ``Hex<t>``, ``C<n>``,
``K<n>``, ``P<n>`` or given inline as ``g6-<graph6>``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field

from . import constructions as C
from .graph import Graph, PointedGraph, complete_graph, cycle_graph, path_graph
from .io import graph6_decode

# family -> (parameter names, defaults)
FAMILIES: dict[str, tuple[tuple[str, ...], dict[str, str]]] = {
    "corona": (("h",), {"h": "C4"}),
    "A": (("h",), {"h": "Hex4"}),
    "R": (("m",), {"m": "2"}),
    "Q": (("h",), {"h": "Hex4"}),
    "Qn": (("n", "h"), {"n": "1", "h": "Hex4"}),
    "J": (("t",), {"t": "2"}),
    "Hex": (("t",), {"t": "4"}),
    "B": (("k", "t"), {"k": "3", "t": "2"}),
    "thm16": (("k", "m", "t", "h"), {"m": "2", "t": "2", "h": "Hex4"}),
    "C": (("n",), {}),
    "K": (("n",), {}),
    "P": (("n",), {}),
    "g6": (("s",), {}),
}

POINTED = {"A", "R", "Q", "Qn", "J", "thm16"}

_SEED = re.compile(r"^(Hex|C|K|P)(\d+)$")


class FamilySpecError(ValueError):
    pass


@dataclass(frozen=True)
class FamilySpec:
    family: str
    params: tuple[tuple[str, str], ...] = ()
    parts: tuple[FamilySpec, ...] = field(default_factory=tuple)

    def param(self, name: str) -> str:
        for key, value in self.params:
            if key == name:
                return value
        _, defaults = FAMILIES[self.family]
        if name in defaults:
            return defaults[name]
        raise FamilySpecError(f"{self.family}: missing parameter {name!r}")

    def int_param(self, name: str) -> int:
        raw = self.param(name)
        try:
            return int(raw)
        except ValueError:
            raise FamilySpecError(f"{self.family}: parameter {name}={raw!r} is not an integer") from None

    def to_text(self) -> str:
        if self.family == "chain":
            return "chain:" + ",".join(p.to_text() for p in self.parts)
        if not self.params:
            return self.family
        if self.family == "g6":
            return f"g6:{self.param('s')}"
        return f"{self.family}:" + ",".join(f"{k}={v}" for k, v in self.params)

    def __str__(self) -> str:
        return self.to_text()


def _parse_params(family: str, tokens: list[str]) -> tuple[tuple[str, str], ...]:
    if family not in FAMILIES:
        raise FamilySpecError(f"unknown family {family!r}")
    names, _ = FAMILIES[family]
    params = []
    for tok in tokens:
        if "=" not in tok:
            raise FamilySpecError(f"{family}: expected key=value, got {tok!r}")
        key, value = tok.split("=", 1)
        if key not in names:
            raise FamilySpecError(f"{family}: unknown parameter {key!r}")
        if any(k == key for k, _ in params):
            raise FamilySpecError(f"{family}: parameter {key!r} given twice")
        params.append((key, value))
    return tuple(params)


def parse_family_spec(text: str) -> FamilySpec:
    text = text.strip()
    if not text:
        raise FamilySpecError("empty family spec")
    if _SEED.match(text):
        m = _SEED.match(text)
        family = "Hex" if m.group(1) == "Hex" else m.group(1)
        key = "t" if family == "Hex" else "n"
        return FamilySpec(family, ((key, m.group(2)),))
    head, _, rest = text.partition(":")
    if head == "g6":
        if not rest:
            raise FamilySpecError("g6 spec needs a graph6 string")
        return FamilySpec("g6", (("s", rest),))
    if head == "chain":
        parts: list[tuple[str, list[str]]] = []
        for tok in rest.split(","):
            tok = tok.strip()
            if not tok:
                raise FamilySpecError("empty token in chain")
            if ":" in tok or "=" not in tok:
                fam, _, first = tok.partition(":")
                parts.append((fam, [first] if first else []))
            else:
                if not parts:
                    raise FamilySpecError(f"chain parameter {tok!r} precedes any part")
                parts[-1][1].append(tok)
        if not parts:
            raise FamilySpecError("chain needs at least one part")
        specs = []
        for fam, toks in parts:
            if fam not in POINTED:
                raise FamilySpecError(f"chain part {fam!r} is not a pointed family")
            specs.append(FamilySpec(fam, _parse_params(fam, toks)))
        return FamilySpec("chain", (), tuple(specs))
    tokens = [t.strip() for t in rest.split(",")] if rest else []
    return FamilySpec(head, _parse_params(head, tokens))


def seed_graph(name: str) -> Graph:
    """Resolve a seed-graph reference used for the ``h`` parameter."""
    if name.startswith("g6-"):
        return graph6_decode(name[3:])
    m = _SEED.match(name)
    if not m:
        raise FamilySpecError(f"unknown seed graph {name!r}")
    kind, size = m.group(1), int(m.group(2))
    try:
        if kind == "Hex":
            return C.build_H_example(size)
        if kind == "C":
            return cycle_graph(size)
        if kind == "K":
            return complete_graph(size)
        return path_graph(size)
    except ValueError as exc:
        raise FamilySpecError(str(exc)) from None


@dataclass(frozen=True)
class Built:
    spec: FamilySpec
    graph: Graph
    pointed: PointedGraph | None = None


def build_pointed(spec: FamilySpec) -> PointedGraph:
    fam = spec.family
    if fam == "A":
        return C.build_A(seed_graph(spec.param("h")))
    if fam == "R":
        return C.build_R(spec.int_param("m"))
    if fam == "Q":
        return C.build_Q(seed_graph(spec.param("h")))
    if fam == "Qn":
        n = spec.int_param("n")
        if n < 1:
            raise FamilySpecError("Qn needs n >= 1")
        return C.build_chain(C.build_Q_chain(seed_graph(spec.param("h")), n))
    if fam == "J":
        return C.build_J(spec.int_param("t"))
    if fam == "thm16":
        return C.build_theorem16_family(
            spec.int_param("k"), seed_graph(spec.param("h")), spec.int_param("m"), spec.int_param("t")
        )
    if fam == "chain":
        return C.build_chain([build_pointed(p) for p in spec.parts])
    raise FamilySpecError(f"{fam} is not a pointed family")


def build_family(spec: FamilySpec | str) -> Built:
    if isinstance(spec, str):
        spec = parse_family_spec(spec)
    try:
        if spec.family in POINTED or spec.family == "chain":
            p = build_pointed(spec)
            return Built(spec, p.graph, p)
        fam = spec.family
        if fam == "corona":
            g = C.corona(seed_graph(spec.param("h")))
        elif fam == "Hex":
            g = C.build_H_example(spec.int_param("t"))
        elif fam == "B":
            g = C.build_B_chain(spec.int_param("k"), spec.int_param("t"))
        elif fam in ("C", "K", "P"):
            g = seed_graph(f"{fam}{spec.int_param('n')}")
        elif fam == "g6":
            g = graph6_decode(spec.param("s"))
        else:
            raise FamilySpecError(f"unknown family {fam!r}")
    except FamilySpecError:
        raise
    except ValueError as exc:
        raise FamilySpecError(f"{spec}: {exc}") from None
    return Built(spec, g)
