"""Loader for the shipped group and irrep data.

The zoo file lists groups by multiplication table, their irreducible
representations with exact matrices for every element, and for each
conjugacy class an isomorphism from a zoo group onto the centralizer of the
class representative.  Everything is revalidated when a group is first used.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from math import lcm

from .cyclo import scalar_from_json
from .group import FiniteGroup, conjugacy_classes
from .linalg import Matrix
from .rep import GModule, IrrepZoo, zoo_validate


class UnknownGroup(LookupError):
    pass


class MissingCentralizerZoo(LookupError):
    pass


class ZooInvalid(ValueError):
    pass


@dataclass(frozen=True)
class CentralizerRef:
    rep: int
    group: str
    embedding: tuple


def session_conductor(G: FiniteGroup, dims) -> int:
    """lcm(exp G, 4|G|, 4 max d_i): every sqrt(d_i) and sqrt(|G|) lives here."""
    return lcm(G.exponent, 4 * G.order, 4 * max(dims))


class Zoo:
    def __init__(self, data: dict):
        if data.get("schema") != 1:
            raise ZooInvalid("unsupported zoo schema")
        self.raw = data
        self.groups = {}
        self.names = {}
        for entry in data["groups"]:
            name = entry["name"]
            G = FiniteGroup(entry["table"], z=entry.get("z"), name=name)
            self.groups[name] = G
            self.names[name] = entry.get("element_names")
        self._irreps = {}
        self._checked = set()
        self.centralizer_refs = {
            name: [CentralizerRef(int(c["rep"]), c["group"], tuple(c["embedding"])) for c in refs]
            for name, refs in data.get("centralizers", {}).items()
        }

    @classmethod
    def load(cls, path=None) -> Zoo:
        if path is None:
            text = resources.files("redcenter").joinpath("data/zoo.json").read_text()
        else:
            with open(path) as fh:
                text = fh.read()
        return cls(json.loads(text))

    def group(self, name) -> FiniteGroup:
        try:
            return self.groups[name]
        except KeyError:
            raise UnknownGroup(f"no group named {name!r} in the zoo") from None

    def dims(self, name):
        return [int(x["dim"]) for x in self.raw["irreps"][name]]

    def conductor(self, name) -> int:
        return session_conductor(self.group(name), self.dims(name))

    def irreps(self, name, M=None) -> IrrepZoo:
        """The irreps of a zoo group with entries lifted into conductor M."""
        G = self.group(name)
        if name not in self.raw.get("irreps", {}):
            raise MissingCentralizerZoo(f"no irreps recorded for {name}")
        if M is None:
            M = self.conductor(name)
        key = (name, M)
        if key not in self._irreps:
            mods, labels = [], []
            for entry in self.raw["irreps"][name]:
                mats = []
                for g in G.elements:
                    rows = entry["matrices"][str(g)]
                    mats.append(Matrix.from_dense([[scalar_from_json(x, M) for x in r] for r in rows]))
                mods.append(GModule(G, mats, label=entry["label"], check=False))
                labels.append(entry["label"])
            zoo = IrrepZoo(G, mods, labels)
            if name not in self._checked:
                report = zoo_validate(zoo)
                if not report.ok:
                    raise ZooInvalid(f"{name}: {report.failures[0]}")
                self._checked.add(name)
            self._irreps[key] = zoo
        return self._irreps[key]

    def centralizers(self, name, M=None):
        """Per conjugacy class: (rep, centralizer group, embedding, irreps in conductor M)."""
        G = self.group(name)
        if M is None:
            M = self.conductor(name)
        refs = self.centralizer_refs.get(name)
        if refs is None:
            raise MissingCentralizerZoo(f"no centralizer data for {name}")
        classes = conjugacy_classes(G)
        if len(refs) != len(classes):
            raise ZooInvalid(f"{name}: {len(refs)} centralizer entries for {len(classes)} classes")
        out = []
        for cls_, ref in zip(classes, refs):
            if ref.rep not in cls_.members:
                raise ZooInvalid(f"{name}: centralizer rep {ref.rep} not in class of {cls_.representative}")
            if ref.group not in self.groups:
                raise MissingCentralizerZoo(f"{name}: centralizer group {ref.group} missing")
            H = self.groups[ref.group]
            check_embedding(G, H, ref.embedding, set(G.centralizer(ref.rep)))
            out.append((ref.rep, H, ref.embedding, self.irreps(ref.group, M)))
        return out

    def validate_all(self):
        for name in self.groups:
            self.irreps(name)
            if name in self.centralizer_refs:
                self.centralizers(name)


def check_embedding(G, H, embedding, image):
    if len(embedding) != H.order or set(embedding) != image:
        raise ZooInvalid(f"embedding of {H.name} is not onto the centralizer")
    for a in H.elements:
        for b in H.elements:
            if embedding[H.m(a, b)] != G.m(embedding[a], embedding[b]):
                raise ZooInvalid(f"embedding of {H.name} is not a homomorphism at ({a}, {b})")


_DEFAULT = None


def default_zoo() -> Zoo:
    global _DEFAULT
    if _DEFAULT is None:
        _DEFAULT = Zoo.load()
    return _DEFAULT
