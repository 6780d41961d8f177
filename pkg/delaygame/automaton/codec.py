"""The canonical JSON instance format for parity automata."""

import json
from pathlib import Path
from typing import Any

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, PositiveInt, ValidationError

from delaygame.errors import InstanceError, InstanceSyntaxError, InstanceValidationError
from delaygame.package_resources import is_package_resource_reference, read_package_resource

from .model import Dpa, check_alphabet


class TransitionEntry(BaseModel):
    """One row of the transition table."""

    model_config = ConfigDict(extra='forbid', populate_by_name=True)

    source: NonNegativeInt = Field(..., alias='from')
    input: str = Field(..., alias='in')
    output: str = Field(..., alias='out')
    target: NonNegativeInt = Field(..., alias='to')


class DpaDocument(BaseModel):
    """Schema of an instance document before the semantic checks."""

    model_config = ConfigDict(extra='forbid')

    sigma_i: list[str] = Field(..., min_length=1)
    sigma_o: list[str] = Field(..., min_length=1)
    states: PositiveInt
    initial: NonNegativeInt
    colors: list[NonNegativeInt]
    transitions: list[TransitionEntry]


def _location(loc: tuple[int | str, ...]) -> str:
    out = ''
    for part in loc:
        out += f'[{part}]' if isinstance(part, int) else (f'.{part}' if out else str(part))
    return out or '$'


def _table_from_document(doc: DpaDocument) -> tuple[int, ...]:
    n_in = len(doc.sigma_i)
    n_out = len(doc.sigma_o)
    in_index = {s: i for i, s in enumerate(doc.sigma_i)}
    out_index = {s: i for i, s in enumerate(doc.sigma_o)}
    table: list[int | None] = [None] * (doc.states * n_in * n_out)

    for i, entry in enumerate(doc.transitions):
        where = f'transitions[{i}]'
        if entry.source >= doc.states:
            msg = f'state {entry.source} out of range'
            raise InstanceValidationError(msg, location=f'{where}.from')
        if entry.target >= doc.states:
            msg = f'state {entry.target} out of range'
            raise InstanceValidationError(msg, location=f'{where}.to')
        if entry.input not in in_index:
            msg = f'unknown input symbol {entry.input!r}'
            raise InstanceValidationError(msg, location=f'{where}.in')
        if entry.output not in out_index:
            msg = f'unknown output symbol {entry.output!r}'
            raise InstanceValidationError(msg, location=f'{where}.out')
        slot = (entry.source * n_in + in_index[entry.input]) * n_out + out_index[entry.output]
        if table[slot] is not None:
            msg = f'duplicate transition from {entry.source} on ({entry.input}, {entry.output})'
            raise InstanceValidationError(msg, location=where)
        table[slot] = entry.target

    for slot, target in enumerate(table):
        if target is None:
            q, rest = divmod(slot, n_in * n_out)
            a, b = divmod(rest, n_out)
            msg = f'missing transition from {q} on ({doc.sigma_i[a]}, {doc.sigma_o[b]})'
            raise InstanceValidationError(msg, location='transitions')
    return tuple(t for t in table if t is not None)


def parse_dpa(text: str) -> Dpa:
    """Parse an instance document.

    Raises:
        InstanceSyntaxError: The text is not well-formed JSON.
        InstanceValidationError: The document violates the schema or the
            automaton invariants (totality, ranges, alphabets).
    """
    try:
        data: Any = json.loads(text)
    except json.JSONDecodeError as e:
        raise InstanceSyntaxError(e.msg, line=e.lineno, column=e.colno) from e

    try:
        doc = DpaDocument.model_validate(data)
    except ValidationError as e:
        first = e.errors()[0]
        raise InstanceValidationError(first['msg'], location=_location(first['loc'])) from e

    if len(doc.colors) != doc.states:
        msg = f'expected {doc.states} colors, got {len(doc.colors)}'
        raise InstanceValidationError(msg, location='colors')
    if doc.initial >= doc.states:
        msg = f'initial state {doc.initial} out of range'
        raise InstanceValidationError(msg, location='initial')
    check_alphabet('sigma_i', doc.sigma_i)
    check_alphabet('sigma_o', doc.sigma_o)

    return Dpa(
        sigma_i=tuple(doc.sigma_i),
        sigma_o=tuple(doc.sigma_o),
        state_count=doc.states,
        initial=doc.initial,
        delta=_table_from_document(doc),
        omega=tuple(doc.colors),
    )


def _inline(value: object) -> str:
    return json.dumps(value, ensure_ascii=False, separators=(', ', ': '))


def serialize_dpa(dpa: Dpa) -> str:
    """Render the canonical document: fixed key order, transitions sorted by (from, in, out)."""
    rows = [
        _inline({'from': q, 'in': a, 'out': b, 'to': dpa.successor(q, ai, bi)})
        for q in range(dpa.state_count)
        for ai, a in enumerate(dpa.sigma_i)
        for bi, b in enumerate(dpa.sigma_o)
    ]
    lines = [
        '{',
        f'  "sigma_i": {_inline(list(dpa.sigma_i))},',
        f'  "sigma_o": {_inline(list(dpa.sigma_o))},',
        f'  "states": {dpa.state_count},',
        f'  "initial": {dpa.initial},',
        f'  "colors": {_inline(list(dpa.omega))},',
        '  "transitions": [',
        ',\n'.join(f'    {row}' for row in rows),
        '  ]',
        '}',
    ]
    return '\n'.join(lines) + '\n'


def load_dpa(reference: str | Path) -> Dpa:
    """Read and parse an instance from a path or an ``@package:resource`` reference.

    Raises:
        InstanceError: The source cannot be read or does not parse.
    """
    ref = str(reference)
    try:
        if is_package_resource_reference(ref):
            text = read_package_resource(ref)
        else:
            text = Path(ref).read_text(encoding='utf-8')
    except (OSError, ImportError, ValueError) as e:
        msg = f'cannot read instance: {e}'
        raise InstanceError(msg, location=ref) from e
    return parse_dpa(text)


def reference_instance(name: str) -> Dpa:
    """Load one of the shipped reference instances (``d_univ``, ``d_empty``, ``d_pred1``, ``d_pred2``)."""
    return load_dpa(f'@delaygame:resources/instances/{name}.json')
