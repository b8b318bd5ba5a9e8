"""Graphviz export: accepting states doubly circled, forks as diamond nodes."""

from typing import List, Optional

from .machines import Afa, Automaton, Dfa, Nfa


def _quote(name: str) -> str:
    return '"' + name.replace('\\', '\\\\').replace('"', '\\"') + '"'


def export_dot(automaton: Automaton, start: Optional[int] = None) -> str:
    """Render any automaton kind as a ``digraph``.

    Args:
        automaton: The machine to draw
        start: Optional state marked by an incoming arrow

    Returns:
        DOT source text ending with a newline
    """
    names = automaton.names
    symbols = automaton.alphabet.symbols
    lines: List[str] = [
        f"digraph {automaton.kind.value} {{",
        "  rankdir=LR;",
    ]
    for q, name in enumerate(names):
        shape = "doublecircle" if automaton.output[q] else "circle"
        lines.append(f"  {_quote(name)} [shape={shape}];")
    if start is not None:
        automaton.check_state(start)
        lines.append('  "__start" [shape=point];')
        lines.append(f'  "__start" -> {_quote(names[start])};')

    for q, row in enumerate(automaton.next):
        for a, target in enumerate(row):
            label = _quote(symbols[a])
            if isinstance(automaton, Dfa):
                lines.append(f"  {_quote(names[q])} -> {_quote(names[target])} [label={label}];")
            elif isinstance(automaton, Nfa):
                for p in target:
                    lines.append(f"  {_quote(names[q])} -> {_quote(names[p])} [label={label}];")
            elif isinstance(automaton, Afa):
                for k, fork in enumerate(target.forks):
                    fork_node = _quote(f"{names[q]}/{symbols[a]}/{k}")
                    lines.append(f'  {fork_node} [shape=diamond, label="", width=0.2, height=0.2];')
                    lines.append(f"  {_quote(names[q])} -> {fork_node} [label={label}];")
                    for p in fork:
                        lines.append(f"  {fork_node} -> {_quote(names[p])};")
    lines.append("}")
    return "\n".join(lines) + "\n"
