"""Plain-text code files

A matrix block is a "k l p" header line followed by k rows of l entries.
A rank-metric code file is "rankcode k l p" followed by its blocks; an ideal
file prefixes that with "ideal side=<left|right> generator=a,b,c,d".
A subspace code file is "subspacecode n p M" followed by M blocks "dim n p"
each holding the canonical basis rows (dim may be 0). Blank lines and
anything after '#' are ignored.
"""
from dataclasses import dataclass

from grasscodes.algebra import MatrixFp, PrimeField
from grasscodes.errors import CodeFileError, GrassCodesError
from grasscodes.subspace import Subspace


@dataclass(frozen=True)
class RankCodeFile:
    k: int
    l: int
    p: int
    matrices: list
    side: str | None = None
    generator: tuple | None = None


@dataclass(frozen=True)
class SubspaceCodeFile:
    n: int
    p: int
    subspaces: list


class _Lines:
    """Significant lines with their 1-based numbers"""

    def __init__(self, text):
        self._items = []
        for number, line in enumerate(text.splitlines(), start=1):
            line = line.split('#', 1)[0].strip()
            if line:
                self._items.append((number, line.split()))
        self._position = 0

    def next(self, what):
        if self._position >= len(self._items):
            last = self._items[-1][0] if self._items else None
            raise CodeFileError(f'unexpected end of file, expected {what}', last)
        item = self._items[self._position]
        self._position += 1
        return item

    def done(self):
        return self._position >= len(self._items)


def _ints(tokens, line_no, what):
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise CodeFileError(f'{what} must be integers, got {" ".join(tokens)!r}', line_no) from None


def _field(p, line_no):
    try:
        return PrimeField(p)
    except GrassCodesError as e:
        raise CodeFileError(str(e), line_no) from None


def _read_rows(lines, count, width, p):
    rows = []
    for _ in range(count):
        line_no, tokens = lines.next(f'a row of {width} entries')
        row = _ints(tokens, line_no, 'entries')
        if len(row) != width:
            raise CodeFileError(f'expected {width} entries, got {len(row)}', line_no)
        for v in row:
            if not 0 <= v < p:
                raise CodeFileError(f'entry {v} is outside [0, {p})', line_no)
        rows.append(row)
    return rows


# ==================== MATRICES ====================

def format_matrix(A):
    lines = [f'{A.rows} {A.cols} {A.field.p}']
    lines.extend(' '.join(str(v) for v in row) for row in A.tolist())
    return '\n'.join(lines) + '\n'


def _read_matrix(lines, expected=None):
    line_no, tokens = lines.next('a "k l p" matrix header')
    header = _ints(tokens, line_no, 'matrix header')
    if len(header) != 3:
        raise CodeFileError(f'matrix header needs "k l p", got {" ".join(tokens)!r}', line_no)
    k, l, p = header
    if k < 1 or l < 1:
        raise CodeFileError(f'matrix dimensions must be positive, got {k}x{l}', line_no)
    if expected is not None and (k, l, p) != expected:
        raise CodeFileError(f'block {k} {l} {p} does not match the code header {expected}', line_no)
    field = _field(p, line_no)
    return MatrixFp(_read_rows(lines, k, l, p), field)


def parse_matrix(text):
    lines = _Lines(text)
    A = _read_matrix(lines)
    if not lines.done():
        line_no, _ = lines.next('end of file')
        raise CodeFileError('trailing content after the matrix', line_no)
    return A


# ==================== RANK-METRIC CODES ====================

def format_rank_code(matrices, side=None, generator=None):
    matrices = sorted(matrices)
    if not matrices:
        raise CodeFileError('cannot write an empty code')
    first = matrices[0]
    out = []
    if side is not None:
        out.append(f'ideal side={side} generator={",".join(str(v) for v in generator)}\n')
    out.append(f'rankcode {first.rows} {first.cols} {first.field.p}\n')
    out.extend(format_matrix(A) for A in matrices)
    return ''.join(out)


def _parse_ideal_header(tokens, line_no):
    options = {}
    for token in tokens[1:]:
        key, sep, value = token.partition('=')
        if not sep:
            raise CodeFileError(f'expected key=value, got {token!r}', line_no)
        options[key] = value
    side = options.get('side')
    if side not in ('left', 'right'):
        raise CodeFileError(f'side must be left or right, got {side!r}', line_no)
    if 'generator' not in options:
        raise CodeFileError('ideal header needs generator=a,b,c,d', line_no)
    generator = _ints(options['generator'].split(','), line_no, 'generator entries')
    if len(generator) != 4:
        raise CodeFileError(f'generator needs 4 entries, got {len(generator)}', line_no)
    return side, tuple(generator)


def parse_rank_code(text):
    lines = _Lines(text)
    line_no, tokens = lines.next('a rankcode header')

    side = generator = None
    if tokens[0] == 'ideal':
        side, generator = _parse_ideal_header(tokens, line_no)
        line_no, tokens = lines.next('a rankcode header')

    if tokens[0] != 'rankcode' or len(tokens) != 4:
        raise CodeFileError(f'expected "rankcode k l p", got {" ".join(tokens)!r}', line_no)
    k, l, p = _ints(tokens[1:], line_no, 'rankcode header')
    _field(p, line_no)
    if generator is not None and (k, l) != (2, 2):
        raise CodeFileError(f'an ideal file holds 2x2 matrices, got {k}x{l}', line_no)

    matrices = []
    while not lines.done():
        matrices.append(_read_matrix(lines, expected=(k, l, p)))
    if not matrices:
        raise CodeFileError('the code has no matrices', line_no)
    return RankCodeFile(k=k, l=l, p=p, matrices=matrices, side=side, generator=generator)


# ==================== SUBSPACE CODES ====================

def format_subspace_code(codewords):
    codewords = sorted(codewords)
    if not codewords:
        raise CodeFileError('cannot write an empty code')
    first = codewords[0]
    out = [f'subspacecode {first.ambient_n} {first.field.p} {len(codewords)}\n']
    for U in codewords:
        out.append(f'{U.dim} {U.ambient_n} {U.field.p}\n')
        out.extend(' '.join(str(v) for v in row) + '\n' for row in U.rows)
    return ''.join(out)


def parse_subspace_code(text):
    """Blocks may hold any basis; each is brought to canonical form"""
    lines = _Lines(text)
    line_no, tokens = lines.next('a subspacecode header')
    if tokens[0] != 'subspacecode' or len(tokens) != 4:
        raise CodeFileError(f'expected "subspacecode n p M", got {" ".join(tokens)!r}', line_no)
    n, p, M = _ints(tokens[1:], line_no, 'subspacecode header')
    if n < 1 or M < 1:
        raise CodeFileError(f'need n >= 1 and M >= 1, got n={n}, M={M}', line_no)
    field = _field(p, line_no)

    subspaces = []
    for _ in range(M):
        line_no, tokens = lines.next('a "dim n p" block header')
        header = _ints(tokens, line_no, 'block header')
        if len(header) != 3:
            raise CodeFileError(f'block header needs "dim n p", got {" ".join(tokens)!r}', line_no)
        dim, block_n, block_p = header
        if (block_n, block_p) != (n, p):
            raise CodeFileError(f'block in F_{block_p}^{block_n} inside a code over F_{p}^{n}', line_no)
        if not 0 <= dim <= n:
            raise CodeFileError(f'dimension {dim} is outside [0, {n}]', line_no)
        rows = _read_rows(lines, dim, n, p)
        U = Subspace.from_rows(rows, field, ambient_n=n)
        if U.dim != dim:
            raise CodeFileError(f'block rows span a {U.dim}-dimensional subspace, header says {dim}', line_no)
        subspaces.append(U)

    if not lines.done():
        line_no, _ = lines.next('end of file')
        raise CodeFileError(f'more blocks than the {M} announced', line_no)
    return SubspaceCodeFile(n=n, p=p, subspaces=subspaces)


def read_file(path):
    try:
        with open(path, encoding='utf-8') as f:
            return f.read()
    except OSError as e:
        raise CodeFileError(f'cannot read {path}: {e.strerror}') from None


def write_file(path, text):
    try:
        with open(path, 'w', encoding='utf-8') as f:
            f.write(text)
    except OSError as e:
        raise CodeFileError(f'cannot write {path}: {e.strerror}') from None
