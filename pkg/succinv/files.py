"""Structure documents, successor files and reports."""
__all__ = [
    "CensusReport",
    "EfReport",
    "LoadedStructure",
    "McReport",
    "ParamsReport",
    "StructureDocument",
    "dump_report",
    "emit_structure",
    "format_successor",
    "parse_structure",
    "parse_successor",
]
import hashlib
import json
import re
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, List, Optional, Sequence, Tuple, Union

from apischema import ValidationError, deserialize, serialize, validator
from apischema.objects import get_alias

from succinv.errors import InputError
from succinv.settings import settings
from succinv.structures import RESERVED_NAMES, Element, Signature, Structure

Label = Union[int, str]


@dataclass
class StructureDocument:
    signature: Dict[str, int]
    universe: Union[int, List[Label]]
    relations: Dict[str, List[List[Label]]] = field(default_factory=dict)
    succ: Optional[List[List[Label]]] = None

    def labels(self) -> List[Label]:
        if isinstance(self.universe, int):
            return list(range(self.universe))
        return list(self.universe)

    @validator
    def check_signature(self):
        for name, arity in self.signature.items():
            if name in RESERVED_NAMES:
                yield (get_alias(self).signature, name), (
                    settings.errors.reserved_name.format(name)
                )
            elif arity < 1:
                yield (get_alias(self).signature, name), f"arity {arity} below 1"

    @validator
    def check_universe(self):
        if isinstance(self.universe, int):
            if self.universe < 0:
                yield get_alias(self).universe, "negative universe size"
        elif len(set(self.universe)) != len(self.universe):
            yield get_alias(self).universe, "duplicate element labels"

    @validator
    def check_tuples(self):
        known = set(self.labels())
        for name, rows in self.relations.items():
            if name not in self.signature:
                yield (get_alias(self).relations, name), f"unknown relation {name!r}"
                continue
            arity = self.signature[name]
            for i, row in enumerate(rows):
                if len(row) != arity:
                    yield (get_alias(self).relations, name, i), (
                        settings.errors.arity_mismatch.format(len(row), arity)
                    )
                for label in row:
                    if label not in known:
                        yield (get_alias(self).relations, name, i), (
                            f"unknown element {label!r}"
                        )
        for i, pair in enumerate(self.succ or ()):
            if len(pair) != 2:
                yield (get_alias(self).succ, i), f"pair of length {len(pair)}"
            for label in pair:
                if label not in known:
                    yield (get_alias(self).succ, i), f"unknown element {label!r}"

    def to_structure(self) -> "LoadedStructure":
        labels = self.labels()
        index = {label: i for i, label in enumerate(labels)}
        relations = {
            name: [[index[label] for label in row] for row in rows]
            for name, rows in self.relations.items()
        }
        succ = None
        if self.succ is not None:
            succ = [[index[label] for label in pair] for pair in self.succ]
        signature = Signature.of(self.signature)
        structure = Structure.build(signature, len(labels), relations, succ)
        return LoadedStructure(structure, labels)


@dataclass(frozen=True)
class LoadedStructure:
    structure: Structure
    labels: List[Label]


def _read(source: Union[str, Path]) -> str:
    if isinstance(source, Path) or not source.lstrip().startswith("{"):
        try:
            return Path(source).read_text()
        except OSError as error:
            raise InputError(f"cannot read {source}: {error.strerror}")
    return source


def parse_structure(source: Union[str, Path]) -> LoadedStructure:
    """Load a structure document given as a path or as JSON text.

    Element labels are renumbered 0..n-1 in universe order.
    """
    text = _read(source)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as error:
        raise InputError(f"line {error.lineno} column {error.colno}: {error.msg}")
    try:
        document = deserialize(StructureDocument, data)
    except ValidationError as error:
        raise InputError.from_validation_error(error)
    return document.to_structure()


def emit_structure(
    structure: Structure, labels: Optional[Sequence[Label]] = None
) -> str:
    if labels is None:
        labels = list(structure.universe)
    universe: Union[int, List[Label]] = list(labels)
    if universe == list(structure.universe):
        universe = structure.size
    succ = None
    if structure.succ is not None:
        succ = [[labels[x], labels[y]] for x, y in sorted(structure.succ)]
    relations = {
        name: [[labels[x] for x in row] for row in sorted(table)]
        for name, table in structure.relations().items()
    }
    document = StructureDocument(
        dict(structure.signature.relations), universe, relations, succ
    )
    data = serialize(StructureDocument, document, exclude_none=True)
    return json.dumps(data, indent=2) + "\n"


_SUCC_LINE = re.compile(r"^\s*(\d+)\s*->\s*(\d+)\s*$")
_HASH_LINE = re.compile(r"^sha256 ([0-9a-f]{64})$")


def _digest(lines: Sequence[str]) -> str:
    return hashlib.sha256("".join(f"{line}\n" for line in lines).encode()).hexdigest()


def format_successor(succ: Sequence[Element]) -> str:
    """One ``i -> succ(i)`` line per element, then the sha256 of those lines."""
    lines = [f"{x} -> {y}" for x, y in enumerate(succ)]
    return "".join(f"{line}\n" for line in (*lines, f"sha256 {_digest(lines)}"))


def parse_successor(
    source: Union[str, Path], size: Optional[int] = None
) -> Tuple[Element, ...]:
    if isinstance(source, Path) or "\n" not in source:
        source = _read(Path(source))
    lines = [line.rstrip() for line in source.splitlines() if line.strip()]
    match = _HASH_LINE.match(lines[-1]) if lines else None
    if match is None:
        raise InputError("successor file lacks its sha256 line")
    body = lines[:-1]
    if match.group(1) != _digest(body):
        raise InputError("successor file does not match its sha256 line")
    succ = []
    for i, line in enumerate(body):
        match = _SUCC_LINE.match(line)
        if match is None:
            raise InputError(f"line {i + 1}: expected 'i -> j'")
        x, y = map(int, match.groups())
        if x != i:
            raise InputError(f"line {i + 1}: element {x} out of order")
        succ.append(y)
    n = len(succ) if size is None else size
    if len(succ) != n:
        raise InputError(f"{len(succ)} successor lines for {n} elements")
    for i, y in enumerate(succ):
        if y >= n:
            raise InputError(
                f"line {i + 1}: " + settings.errors.out_of_range.format(y, n - 1)
            )
    return tuple(succ)


@dataclass(frozen=True)
class CensusReport:
    radius: int
    include_succ: bool
    total: int
    types: Dict[str, int]


@dataclass(frozen=True)
class ParamsReport:
    d: int
    r: int
    t: int
    n_occ: int
    alpha: Optional[int]
    g0: int
    bounds: Dict[str, int]
    binding_bound: str
    a: List[int]


@dataclass(frozen=True)
class EfReport:
    depth: int
    equivalent: bool


@dataclass(frozen=True)
class McReport:
    formula: str
    rank: int
    holds: bool


def dump_report(report: Any) -> str:
    """Indented JSON with sorted keys, stable across runs."""
    data = serialize(type(report), report)
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"
