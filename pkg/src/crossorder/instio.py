"""Instance (de)serialization.

One JSON file holds one instance: the extension descriptor, the cocycle
table, and optionally residue-field data for the cocycle's unit entries.
Serialization is deterministic (sorted keys, fixed list orders), so equal
instances produce identical bytes.
"""

from __future__ import annotations

import json
from fractions import Fraction

from .cocycle import CocycleTable
from .decisions import ResidueData
from .errors import StructureError
from .extension import ExtensionDescriptor, ExtensionFlags
from .groups import FiniteGroup
from .residue import ExactField
from .values import SubgroupEmbedding, ValueGroup


def instance_to_json(ext: ExtensionDescriptor, ct: CocycleTable,
                     residue: ResidueData | None = None) -> dict:
    obj = {
        "group": ext.group.to_json(),
        "ideals": ext.ideal_count,
        "action": [list(row) for row in ext.action],
        "gamma_V": ext.gamma.sub.to_json(),
        "gamma_S": ext.gamma.ambient.to_json(),
        "inertia": [sorted(t) for t in ext.inertia],
        "p_bar": ext.p_bar,
        "f_res": ext.f_res,
        "flags": ext.flags.to_json(),
        "cocycle": [
            [[elem.to_json() for elem in row] for row in block]
            for block in ct.w
        ],
    }
    if residue is not None:
        obj["residue"] = residue.to_json()
    return obj


def instance_from_json(
        obj: dict
) -> tuple[ExtensionDescriptor, CocycleTable, ResidueData | None]:
    try:
        group = FiniteGroup.from_json(obj["group"])
        gamma = SubgroupEmbedding(
            ambient=ValueGroup.from_json(obj["gamma_S"]),
            sub=ValueGroup.from_json(obj["gamma_V"]))
        ext = ExtensionDescriptor(
            group=group,
            ideal_count=obj["ideals"],
            action=tuple(tuple(row) for row in obj["action"]),
            gamma=gamma,
            inertia=tuple(frozenset(t) for t in obj["inertia"]),
            p_bar=obj["p_bar"],
            f_res=obj["f_res"],
            flags=ExtensionFlags.from_json(obj["flags"]))
        gs = gamma.ambient
        w = tuple(
            tuple(tuple(gs.element(*(Fraction(x) for x in elem))
                        for elem in row)
                  for row in block)
            for block in obj["cocycle"])
        ct = CocycleTable(ext, w)
        residue = None
        if obj.get("residue") is not None:
            res = obj["residue"]
            fld = ExactField.from_json(res)
            residue = ResidueData(
                field=fld,
                cocycle=tuple(
                    tuple(fld.coerce(Fraction(x)) for x in row)
                    for row in res["cocycle"]))
        return ext, ct, residue
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise StructureError(f"malformed instance object: {exc}") from exc


def dumps(ext: ExtensionDescriptor, ct: CocycleTable,
          residue: ResidueData | None = None) -> str:
    return json.dumps(instance_to_json(ext, ct, residue),
                      sort_keys=True, indent=2) + "\n"


def loads(text: str) -> tuple[ExtensionDescriptor, CocycleTable,
                              ResidueData | None]:
    return instance_from_json(json.loads(text))


def save(path: str, ext: ExtensionDescriptor, ct: CocycleTable,
         residue: ResidueData | None = None) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(ext, ct, residue))


def load(path: str) -> tuple[ExtensionDescriptor, CocycleTable,
                             ResidueData | None]:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read())
