"""Pure text transformations applied before ingredient parsing.

The pipeline order is fixed: whitespace -> decorations -> modifiers for
ingredient lines, and whitespace -> numbering for instruction lines.
Decoration detection assumes collapsed whitespace, and modifier boundaries
assume decorations are already gone.

Every operation is a fixpoint on its own output, so running a line through
the pipeline twice changes nothing.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

_WS_RUN = re.compile(r"\s+")

# Decorative characters stripped from line edges. Slash and dot are
# decorative only in leading position: interior slashes may be fraction
# bars ("1/2") and trailing dots may close abbreviations.
DEFAULT_DECORATIONS = "•*-—–·☐☑✓›»"
LEADING_ONLY_DECORATIONS = "/."

# A leading ordinal: digits, optional "." or ")", then whitespace.
_ORDINAL = re.compile(r"\d+[.)]?\s+")


@dataclass(frozen=True, slots=True)
class NormalizationReport:
    """Audit trail for one normalized line.

    ``removed_fragments`` lists (kind, fragment) pairs in the order the
    pipeline removed them; kinds are "whitespace", "symbol", "numbering"
    and "modifier".
    """

    input: str
    output: str
    removed_fragments: tuple[tuple[str, str], ...]


def normalize_whitespace(s: str) -> str:
    """Collapse every run of Unicode whitespace to one ASCII space and trim."""
    return _WS_RUN.sub(" ", s).strip()


def strip_decorations(
    s: str,
    decorations: str = DEFAULT_DECORATIONS,
    leading_only: str = LEADING_ONLY_DECORATIONS,
) -> str:
    """Remove decorative characters from the edges of a line.

    Interior punctuation that carries meaning (decimal separators,
    fraction slashes between digits, commas before modifiers) is never
    touched because only leading and trailing runs are stripped.
    """
    lead = set(decorations) | set(leading_only)
    trail = set(decorations)
    i, j = 0, len(s)
    while i < j and (s[i] in lead or s[i].isspace()):
        i += 1
    while j > i and (s[j - 1] in trail or s[j - 1].isspace()):
        j -= 1
    return s[i:j]


def strip_instruction_numbering(s: str) -> str:
    """Remove leading ordinals ("1. ", "12) ", "3 ") from an instruction line.

    Stripping repeats until the line no longer starts with an ordinal, so
    the function is idempotent. Interior digits are never touched.
    """
    while (m := _ORDINAL.match(s)) is not None:
        s = s[m.end():]
    return s


def _comma_starts_clause(s: str, i: int) -> bool:
    # A comma introduces a modifier clause only when the next non-space
    # character exists and is not a digit; this protects decimal commas
    # ("1,5 кг") and leaves trailing commas to name cleanup.
    for c in s[i + 1:]:
        if c.isspace():
            continue
        return not c.isdigit()
    return False


def _split_tail_clauses(tail: str) -> list[str]:
    # Split a trailing comma clause into sub-clauses on further qualifying
    # commas. Commas inside parentheses stay within their clause, keeping
    # alternatives such as "(телешко или свинско)" opaque.
    clauses: list[str] = []
    depth = 0
    current: list[str] = []
    i, n = 0, len(tail)
    while i < n:
        c = tail[i]
        if c == "(":
            depth += 1
        elif c == ")" and depth:
            depth -= 1
        elif c == "," and depth == 0 and _comma_starts_clause(tail, i):
            clauses.append("".join(current))
            current = []
            i += 1
            continue
        current.append(c)
        i += 1
    clauses.append("".join(current))
    return [normalize_whitespace(c) for c in clauses if normalize_whitespace(c)]


def strip_modifiers(s: str) -> tuple[str, tuple[str, ...]]:
    """Split an ingredient line into core text and modifier fragments.

    All parenthetical groups (outermost group captured whole, nesting
    preserved inside) and any trailing comma-introduced clause are removed
    from the core and collected as modifiers in left-to-right order. An
    unclosed "(" is not an error: it swallows to the end of the string and
    is recorded as a modifier. A stray ")" is dropped from the core.
    """
    core: list[str] = []
    modifiers: list[str] = []
    i, n = 0, len(s)
    while i < n:
        c = s[i]
        if c == "(":
            depth = 1
            j = i + 1
            while j < n and depth:
                if s[j] == "(":
                    depth += 1
                elif s[j] == ")":
                    depth -= 1
                j += 1
            content = s[i + 1 : j - 1] if depth == 0 else s[i + 1 :]
            content = normalize_whitespace(content)
            if content:
                modifiers.append(content)
            i = j
        elif c == ")":
            i += 1
        elif c == "," and _comma_starts_clause(s, i):
            modifiers.extend(_split_tail_clauses(s[i + 1 :]))
            break
        else:
            core.append(c)
            i += 1
    return normalize_whitespace("".join(core)), tuple(modifiers)


def _whitespace_fragments(s: str) -> list[tuple[str, str]]:
    fragments = []
    for m in _WS_RUN.finditer(s):
        run = m.group()
        at_edge = m.start() == 0 or m.end() == len(s)
        if at_edge or run != " ":
            fragments.append(("whitespace", run))
    return fragments


def normalize_ingredient(s: str) -> NormalizationReport:
    """Run the full ingredient-line normalization with an audit trail."""
    fragments: list[tuple[str, str]] = []
    fragments.extend(_whitespace_fragments(s))
    collapsed = normalize_whitespace(s)
    stripped = strip_decorations(collapsed)
    if stripped != collapsed:
        cut = collapsed.find(stripped) if stripped else len(collapsed)
        leading = collapsed[:cut]
        trailing = collapsed[cut + len(stripped):]
        if leading:
            fragments.append(("symbol", leading))
        if trailing:
            fragments.append(("symbol", trailing))
    core, modifiers = strip_modifiers(stripped)
    fragments.extend(("modifier", m) for m in modifiers)
    return NormalizationReport(input=s, output=core, removed_fragments=tuple(fragments))


def normalize_instruction(s: str) -> NormalizationReport:
    """Run the full instruction-line normalization with an audit trail."""
    fragments: list[tuple[str, str]] = []
    fragments.extend(_whitespace_fragments(s))
    collapsed = normalize_whitespace(s)
    out = collapsed
    while (m := _ORDINAL.match(out)) is not None:
        fragments.append(("numbering", m.group()))
        out = out[m.end():]
    return NormalizationReport(input=s, output=out, removed_fragments=tuple(fragments))
