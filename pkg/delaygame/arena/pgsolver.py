"""The line-oriented parity-game interchange format.

::

    parity <max-id>;
    start <id>;
    <id> <color> <owner> <succ>,<succ>,... "<label>";

Owner 0 is Player O (even), owner 1 is Player I (odd); max-parity semantics.
"""

import re

from .game import ParityGame, Player

_HEADER = re.compile(r'^parity\s+(\d+)\s*;$')
_START = re.compile(r'^start\s+(\d+)\s*;$')
_VERTEX = re.compile(r'^(\d+)\s+(\d+)\s+([01])\s+(\d+(?:\s*,\s*\d+)*)(?:\s+"([^"]*)")?\s*;$')


def export_pg(game: ParityGame) -> str:
    """Render ``game``; a ``start`` line is written unless the initial vertex is 0."""
    lines = [f'parity {game.vertex_count - 1};']
    if game.initial != 0:
        lines.append(f'start {game.initial};')
    for v in range(game.vertex_count):
        succ = ','.join(str(w) for w in game.successors[v])
        label = game.labels[v].replace('"', "'")
        lines.append(f'{v} {game.colors[v]} {int(game.owners[v])} {succ} "{label}";')
    return '\n'.join(lines) + '\n'


def import_pg(text: str) -> ParityGame:
    """Read a game in the interchange format.

    The initial vertex is 0 unless a ``start <id>;`` line says otherwise.

    Raises:
        ValueError: A line does not follow the format or ids are inconsistent.
    """
    rows: dict[int, tuple[int, Player, tuple[int, ...], str]] = {}
    initial = 0
    declared: int | None = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if header := _HEADER.match(line):
            declared = int(header.group(1))
            continue
        if start := _START.match(line):
            initial = int(start.group(1))
            continue
        vertex = _VERTEX.match(line)
        if vertex is None:
            msg = f'line {lineno}: cannot parse {line!r}'
            raise ValueError(msg)
        v = int(vertex.group(1))
        if v in rows:
            msg = f'line {lineno}: vertex {v} declared twice'
            raise ValueError(msg)
        succ = tuple(sorted({int(w) for w in vertex.group(4).split(',')}))
        rows[v] = (int(vertex.group(2)), Player(int(vertex.group(3))), succ, vertex.group(5) or '')

    if sorted(rows) != list(range(len(rows))):
        msg = 'vertex ids must be 0..n-1'
        raise ValueError(msg)
    if declared is not None and declared != len(rows) - 1:
        msg = f'header declares max id {declared} but {len(rows)} vertices were given'
        raise ValueError(msg)
    ordered = [rows[v] for v in range(len(rows))]
    return ParityGame(
        owners=tuple(row[1] for row in ordered),
        colors=tuple(row[0] for row in ordered),
        successors=tuple(row[2] for row in ordered),
        labels=tuple(row[3] for row in ordered),
        initial=initial,
    )
