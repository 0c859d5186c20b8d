"""Table and JSON rendering of report records"""
from dataclasses import dataclass, field

from pytablewriter import MarkdownTableWriter


@dataclass
class Table:
    title: str
    headers: list
    rows: list = field(default_factory=list)


def render_table(table):
    writer = MarkdownTableWriter()
    writer.table_name = table.title
    writer.headers = table.headers
    writer.value_matrix = [[str(v) for v in row] for row in table.rows]
    writer.margin = 1
    return writer.dumps().rstrip('\n')


def render_tables(tables):
    return '\n\n'.join(render_table(t) for t in tables)


def render_json(record):
    return record.model_dump_json(indent=2)


def render_checklist(checks):
    """One line per check, status last"""
    width = max((len(c.name) for c in checks), default=0)
    lines = []
    for c in checks:
        status = 'OK' if c.ok else 'FAIL'
        lines.append(f'{c.name.ljust(width)}  {c.detail} {status}')
    return '\n'.join(lines)


def matrix_label(A):
    """Compact one-line form: rows joined by '|'"""
    return '|'.join(' '.join(str(v) for v in row) for row in A.tolist())
