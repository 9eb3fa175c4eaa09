#!/usr/bin/env python3
"""Dispatch stability under hierarchy extension, in both modes.

Builds the four-method addition program, resolves a mixed-type call, then
extends the hierarchy with a new concrete leaf under Real, rebuilds the
table in program order and resolves again.  The plain interpretation changes
its answer; the atomic interpretation does not.
"""

import sys

from tagsub.core import DEFAULT_HIERARCHY, Decl, validate_hierarchy
from tagsub.dispatch import MethodDef, MethodTable, Selected, add_method, resolve
from tagsub.frontend import parse_type
from tagsub.semantics import Mode

PROGRAM = [
    ("plus", "Int*Int", "mII"),
    ("plus", "Flt*Flt", "mFF"),
    ("plus", "(Int|Flt)*(Int|Flt)", "mUU"),
    ("plus", "Real*Real", "mRR"),
]

EXTENDED = validate_hierarchy(
    [
        Decl("Num", True),
        Decl("Real", True, "Num"),
        Decl("Int", False, "Real"),
        Decl("Flt", False, "Real"),
        Decl("Cmplx", False, "Num"),
        Decl("Str", False),
        Decl("Int8", False, "Real"),
    ]
)


def build(h, mode):
    tbl = MethodTable(h, mode)
    for fn, sig, body in PROGRAM:
        tbl = add_method(tbl, MethodDef(fn, parse_type(sig, h), body))
    return tbl


def show(label, tbl, call_src):
    call = parse_type(call_src, tbl.hierarchy)
    out = resolve(tbl, "plus", call)
    picked = out.method.body if isinstance(out, Selected) else out
    methods = ", ".join(m.body for m in tbl.methods)
    print(f"  {label}: table=[{methods}]  plus({call_src}) -> {picked}")
    return picked


def main():
    call = "Flt*Int"
    print("mixed-type call", call)
    unstable = []
    for mode in Mode:
        print(f"{mode.value} interpretation:")
        before = show("original hierarchy", build(DEFAULT_HIERARCHY, mode), call)
        after = show("with Int8 <: Real ", build(EXTENDED, mode), call)
        verdict = "STABLE" if before == after else "CHANGED"
        print(f"  -> {verdict}")
        if before != after:
            unstable.append(mode.value)
    print()
    print(f"modes whose answer changed: {unstable or 'none'}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
