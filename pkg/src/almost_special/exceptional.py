"""Family data for Weyl groups of exceptional type.

The records are read from ``data/exceptional_families.json``.  Labels of
elements of M(Gamma) are kept as opaque strings such as ``"(g′₂,ε′)"``; the
E8 dimension lists keep the unknown entry as the literal string ``"?"``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from importlib import resources
from types import MappingProxyType
from typing import Mapping, Optional, Union

from .errors import InvalidInput

UNKNOWN = "?"
SIZES = (1, 2, 3, 4, 5, 11, 17)
DATA_FILE = "exceptional_families.json"


@dataclass(frozen=True)
class GroupTag:
    name: str
    order: int

    def __str__(self) -> str:
        return self.name


@dataclass(frozen=True)
class FamilyRecord:
    family_size: int
    gamma: GroupTag
    keys: tuple[str, ...]
    lists: Mapping[str, tuple[GroupTag, ...]]
    m_labels: Mapping[str, tuple[str, ...]]
    almost_special: tuple[str, ...]
    e8_dims: Optional[Mapping[str, tuple[Union[int, str], ...]]] = None

    def to_json(self) -> dict:
        out = {
            "size": self.family_size,
            "gamma": self.gamma.name,
            "keys": list(self.keys),
            "lists": {k: [g.name for g in v] for k, v in self.lists.items()},
            "m_labels": {k: list(v) for k, v in self.m_labels.items()},
            "almost_special": list(self.almost_special),
        }
        if self.e8_dims is not None:
            out["e8_dims"] = {k: list(v) for k, v in self.e8_dims.items()}
        return out


@lru_cache(maxsize=None)
def raw_data() -> str:
    """The embedded JSON document, verbatim."""
    return resources.files(__package__).joinpath("data", DATA_FILE).read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def group_orders() -> Mapping[str, int]:
    return MappingProxyType(json.loads(raw_data())["group_orders"])


def group(name: str) -> GroupTag:
    try:
        return GroupTag(name, group_orders()[name])
    except KeyError:
        raise InvalidInput(f"unknown group tag {name!r}") from None


def _record(entry: dict) -> FamilyRecord:
    keys = tuple(entry["keys"])
    e8 = entry.get("e8_dims")
    return FamilyRecord(
        family_size=entry["size"],
        gamma=group(entry["gamma"]),
        keys=keys,
        lists=MappingProxyType({k: tuple(group(g) for g in entry["lists"][k]) for k in keys}),
        m_labels=MappingProxyType({k: tuple(entry["m_labels"][k]) for k in keys}),
        almost_special=tuple(entry["almost_special"]),
        e8_dims=None if e8 is None else MappingProxyType({k: tuple(e8[k]) for k in keys}),
    )


@lru_cache(maxsize=None)
def _records() -> dict[int, FamilyRecord]:
    doc = json.loads(raw_data())
    return {entry["size"]: _record(entry) for entry in doc["families"]}


def family(size: int) -> FamilyRecord:
    try:
        return _records()[size]
    except KeyError:
        raise InvalidInput(f"no exceptional family of size {size}; expected one of {SIZES}") from None


def families() -> list[FamilyRecord]:
    return [family(n) for n in SIZES]


def check_unique_max(record: FamilyRecord) -> dict[str, bool]:
    """For each key, whether the largest group order in its list occurs once, in first place."""
    out = {}
    for key in record.keys:
        orders = [g.order for g in record.lists[key]]
        top = max(orders)
        out[key] = orders.count(top) == 1 and orders[0] == top
    return out


def almost_special(record: FamilyRecord) -> list[str]:
    """First label of each L' list, in key order."""
    return [record.m_labels[key][0] for key in record.keys]


def check_record(record: FamilyRecord) -> list[str]:
    """Problems with a record's internal consistency; empty when it is sound."""
    problems = []
    if set(record.lists) != set(record.m_labels) or set(record.lists) != set(record.keys):
        problems.append("lists, m_labels and keys disagree")
    for key in record.keys:
        if len(record.lists[key]) != len(record.m_labels[key]):
            problems.append(f"{key}: L and L' differ in length")
    if almost_special(record) != list(record.almost_special):
        problems.append("stored almost special labels are not the first L' entries")
    for key, ok in check_unique_max(record).items():
        if not ok:
            problems.append(f"{key}: group order maximum is not unique in first place")
    if record.e8_dims is not None:
        for key in record.keys:
            if len(record.e8_dims[key]) != len(record.m_labels[key]):
                problems.append(f"{key}: dimension list differs in length from L'")
    return problems


def e8_lists(record: FamilyRecord) -> dict[str, list[Union[int, str]]]:
    """Dimension lists for the size 17 family, with ``"?"`` where no value is known.

    The first entry of each list is expected to have the smallest b-invariant
    in its list.  No b-invariants are tabulated here, so that is not checked.
    """
    if record.family_size != 17 or record.e8_dims is None:
        raise InvalidInput("dimension lists exist only for the family of size 17")
    return {k: list(v) for k, v in record.e8_dims.items()}
