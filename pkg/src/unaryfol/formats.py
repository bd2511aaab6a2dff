"""Text formats: the line-oriented ``.aut`` automaton format, Graphviz DOT
export, and pipeline stage dumps.

``.aut`` example::

    sig fo:x1 so:X1
    kind buchi
    states 3
    initial 0
    accepting 2
    trans 0 0 00
    trans 0 1 10
    trans 1 2 eps

``kind`` is optional (``buchi`` by default, or ``finite``).  Labels are
bitstrings over the tracks in signature order, ``eps`` for epsilon and
``_`` for the single symbol of a zero-track alphabet.  ``#`` starts a
comment.
"""
from __future__ import annotations

import json
from pathlib import Path

from .automata import (
    BuchiAutomaton,
    FiniteAutomaton,
    VariableSignature,
    compact,
    format_symbol,
    parse_symbol,
)
from .errors import AutFormatError


def dumps_aut(a) -> str:
    a = compact(a)
    sig = a.signature
    lines = [
        f"sig fo:{','.join(sig.fo)} so:{','.join(sig.so)}",
        f"kind {'finite' if isinstance(a, FiniteAutomaton) else 'buchi'}",
        f"states {a.num_states}",
        "initial " + " ".join(map(str, sorted(a.initial))),
        "accepting " + " ".join(map(str, sorted(a.accepting))),
    ]
    for s in sorted(a.states):
        for lab, d in a.out[s]:
            text = "eps" if lab is None else format_symbol(lab)
            lines.append(f"trans {s} {d} {text}")
    return "\n".join(lines) + "\n"


def _names(field: str, prefix: str, lineno: int) -> tuple:
    if not field.startswith(prefix):
        raise AutFormatError(f"expected '{prefix}<names>'", lineno)
    body = field[len(prefix):]
    return tuple(n for n in body.split(",") if n)


def loads_aut(text: str):
    sig = None
    kind = BuchiAutomaton
    n_states = None
    initial, accepting, transitions = [], [], []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        head, *rest = line.split()
        try:
            if head == "sig":
                if len(rest) != 2:
                    raise AutFormatError("expected 'sig fo:<names> so:<names>'", lineno)
                sig = VariableSignature(_names(rest[0], "fo:", lineno),
                                        _names(rest[1], "so:", lineno))
            elif head == "kind":
                if rest not in (["buchi"], ["finite"]):
                    raise AutFormatError("kind is 'buchi' or 'finite'", lineno)
                kind = BuchiAutomaton if rest[0] == "buchi" else FiniteAutomaton
            elif head == "states":
                (n_states,) = map(int, rest)
            elif head == "initial":
                initial.extend(map(int, rest))
            elif head == "accepting":
                accepting.extend(map(int, rest))
            elif head == "trans":
                if len(rest) != 3:
                    raise AutFormatError("trans <src> <dst> <label>", lineno)
                src, dst = int(rest[0]), int(rest[1])
                lab = None if rest[2] == "eps" else parse_symbol(rest[2])
                transitions.append((src, lab, dst))
            else:
                raise AutFormatError(f"unknown directive {head!r}", lineno)
        except AutFormatError:
            raise
        except ValueError as exc:
            raise AutFormatError(str(exc), lineno) from exc
    if sig is None or n_states is None:
        raise AutFormatError("missing 'sig' or 'states' line")
    try:
        return kind(sig, frozenset(range(n_states)), frozenset(transitions),
                    frozenset(initial), frozenset(accepting))
    except ValueError as exc:
        raise AutFormatError(str(exc)) from exc


def write_aut(a, path) -> None:
    Path(path).write_text(dumps_aut(a))


def read_aut(path):
    return loads_aut(Path(path).read_text())


def _state_name(a, q) -> str:
    v = a.info.get(q)
    if isinstance(v, frozenset):
        return "{" + ",".join(f"q{s}" for s in sorted(v)) + "}"
    if isinstance(v, tuple) and v and v[0] == "repeat":
        return "repeat"
    return str(q)


def _edge_label(sig: VariableSignature, labels) -> str:
    """Compact label: second-order tuples grouped by the set of
    first-order variables the symbol sets."""
    k = len(sig.fo)
    groups: dict = {}
    eps = False
    for lab in labels:
        if lab is None:
            eps = True
            continue
        v = tuple(x for x, b in zip(sig.fo, lab[:k]) if b)
        groups.setdefault(v, []).append("(" + ",".join(map(str, lab[k:])) + ")")
    parts = ["ε"] if eps else []
    for v in sorted(groups):
        text = ", ".join(groups[v])
        if v:
            text += "\\n{" + ", ".join(v) + "}"
        parts.append(text)
    return "\\n".join(parts)


def to_dot(a, name: str = "A") -> str:
    lines = [f"digraph {name} {{", "  rankdir=LR;", '  __start [shape=point, label=""];']
    for q in sorted(a.states):
        shape = "doublecircle" if q in a.accepting else "circle"
        lines.append(f'  s{q} [shape={shape}, label="{_state_name(a, q)}"];')
    for q in sorted(a.initial):
        lines.append(f"  __start -> s{q};")
    grouped: dict = {}
    for s, lab, d in a.transitions:
        grouped.setdefault((s, d), []).append(lab)
    for (s, d) in sorted(grouped):
        lines.append(f'  s{s} -> s{d} [label="{_edge_label(a.signature, grouped[s, d])}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def dump_stages(artifacts, directory, prefix: str = "") -> list:
    """Write every artifact of a universal quantification as ``.aut`` files
    and return manifest entries ``{"file", "stage", ...}``."""
    out = Path(directory)
    out.mkdir(parents=True, exist_ok=True)
    entries = []

    def put(stage, a, **extra):
        fname = f"{prefix}{stage}" + "".join(f"_{k}{v}" for k, v in extra.items()) + ".aut"
        write_aut(a, out / fname)
        entries.append({"file": fname, "stage": stage, "var": artifacts.var,
                        **{k: str(v) for k, v in extra.items()}})

    put("normalized", artifacts.normalized)
    put("subset", artifacts.subset)
    for q, a in sorted(artifacts.cycle_languages.items()):
        put("cycle", a, q=q)
    for (q1, q2), a in sorted(artifacts.path_languages.items()):
        put("paths", a, q=q1, r=q2)
    for q, a in sorted(artifacts.u_languages.items()):
        put("U", a, q=q)
    for qp, a in sorted(artifacts.widget_languages.items()):
        members = sorted(artifacts.subset.info[qp])
        put("Uprime", a, s=qp)
        entries[-1]["members"] = members
    put("final", artifacts.result)
    return entries


def write_manifest(entries, directory) -> None:
    Path(directory, "manifest.json").write_text(json.dumps(entries, indent=2) + "\n")
