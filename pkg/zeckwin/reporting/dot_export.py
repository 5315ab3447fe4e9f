"""
DOT export for avoidance automata, window maps and window orbits.

Node and edge order is fixed by sorting, so equal payloads give equal text.
Accepting windows are drawn as green rounded boxes, rejecting ones as red
double-bordered boxes.
"""
from typing import Dict, List, Optional, Tuple

from graphviz import Digraph

from zeckwin.automata.avoidance import AvoidanceDFA, ForbiddenFamily, avoids, parse_family
from zeckwin.errors import DomainError
from zeckwin.orbit.engine import OrbitSummary
from zeckwin.transducer.theta import ThetaMap

ACCEPT_STYLE = {"shape": "box", "style": "rounded,filled", "fillcolor": "palegreen"}
REJECT_STYLE = {"shape": "box", "style": "rounded,filled", "fillcolor": "lightpink", "peripheries": "2"}


def _window_style(window: str, family: Optional[ForbiddenFamily]) -> Dict[str, str]:
    if family is None:
        return {"shape": "box", "style": "rounded"}
    return ACCEPT_STYLE if avoids(window, family) else REJECT_STYLE


def dfa_to_dot(dfa: AvoidanceDFA) -> str:
    dot = Digraph("avoidance", graph_attr={"rankdir": "LR", "label": f"avoid {dfa.family}"})
    dot.node("init", shape="point")
    for state in dfa.states:
        attrs = {"shape": "circle"}
        if state == dfa.dead:
            attrs = {"shape": "doublecircle", "style": "filled", "fillcolor": "lightpink"}
        dot.node(f"s{state}", label=dfa.labels[state], **attrs)
    dot.edge("init", f"s{dfa.start}")
    for state in dfa.states:
        grouped: Dict[int, List[str]] = {}
        for symbol, target in zip("01#", dfa.transitions[state]):
            grouped.setdefault(target, []).append(symbol)
        for target in sorted(grouped):
            dot.edge(f"s{state}", f"s{target}", label=",".join(grouped[target]))
    return dot.source


def theta_to_dot(theta: ThetaMap, family: Optional[ForbiddenFamily] = None) -> str:
    windows = sorted(set(theta.first_seen) | {w for outs in theta.first_seen.values() for w in outs})
    ids = {w: f"w{i}" for i, w in enumerate(windows)}
    dot = Digraph(
        "theta",
        graph_attr={"rankdir": "LR", "label": f"window map q={theta.q} M={theta.window_len} N<={theta.n_cap}"},
    )
    for w in windows:
        dot.node(ids[w], label=w, **_window_style(w, family))
    for v, w, conflicted in theta.edges():
        if conflicted:
            dot.edge(ids[v], ids[w], color="red", label=str(theta.first_seen[v][w]))
        else:
            dot.edge(ids[v], ids[w])

    conflicts = theta.conflicts
    if not conflicts:
        return dot.source
    header = [f"// {len(conflicts)} conflict witnesses"]
    for c in conflicts:
        header.append(f"// {c.window}: N={c.n1} -> {c.out1}, N={c.n2} -> {c.out2}")
    return "\n".join(header) + "\n" + dot.source


def orbit_to_dot(summary: OrbitSummary) -> str:
    family = parse_family(summary.family)
    dot = Digraph(
        "orbit",
        graph_attr={"rankdir": "LR", "label": f"orbit u={summary.u} q={summary.q} M={summary.M} F={{{summary.family}}}"},
    )
    if summary.n0 is None or summary.p is None:
        shown = len(summary.windows)
        cycle: Tuple[int, int] = (shown, shown)
    else:
        shown = summary.n0 + summary.p
        cycle = (summary.n0, shown)

    for n in range(shown):
        w = summary.windows[n]
        attrs = dict(_window_style(w, family))
        if cycle[0] <= n < cycle[1]:
            attrs["group"] = "cycle"
        dot.node(f"n{n}", label=f"{n}: {w}", **attrs)
    for n in range(1, shown):
        dot.edge(f"n{n - 1}", f"n{n}")
    if cycle[0] < cycle[1]:
        dot.edge(
            f"n{cycle[1] - 1}",
            f"n{cycle[0]}",
            label=f"cycle length {summary.p}",
            constraint="false",
            style="bold",
        )
    return dot.source


def export_dot(kind: str, payload, family: Optional[ForbiddenFamily] = None) -> str:
    if kind == "dfa":
        return dfa_to_dot(payload)
    if kind == "theta":
        return theta_to_dot(payload, family)
    if kind == "orbit":
        return orbit_to_dot(payload)
    raise DomainError(f"unknown DOT export kind {kind!r}; expected theta, orbit or dfa")
