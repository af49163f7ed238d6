#!/usr/bin/env python3
"""Tour of the formula core: parsing, canonical printing, tokenization,
templates, and Boolean monitoring over step traces."""

from clarifystl.stl import (
    Trace,
    check_syntax,
    evaluate,
    extract_template,
    parse,
    render,
    tokenize,
)

print("== parsing and canonical printing ==")
text = "G[0,12]((speed > 45) -> F[1,4](rpm < 2700))"
formula = parse(text)
print("input:    ", text)
print("canonical:", render(formula))
print("re-parses equal:", parse(render(formula)) == formula)

print()
print("== syntax checking ==")
for candidate in ("G[0,5](x > 1)", "G[5,2](x > 0)", "F[3](x > 1)", "G[0,5](x >"):
    diagnostics = check_syntax(candidate)
    verdict = "ok" if not diagnostics else f"error {diagnostics[0]}"
    print(f"  {candidate!r:30} -> {verdict}")

print()
print("== tokens and templates ==")
tokens = tokenize("G[0,5](x > 1)")
print("tokens:  ", [t.text for t in tokens])
print("template:", extract_template(parse("G[0,5](x > 1)")).text)
print("same template for G[0,9](y > 7):",
      extract_template(parse("G[0,9](y > 7)")) == extract_template(parse("G[0,5](x > 1)")))

print()
print("== monitoring a piecewise-constant trace ==")
# x is -1 on [0,1) and 1 on [1,3]
trace = Trace(("x",), (0.0, 1.0, 3.0), ((-1.0, 1.0),))
for spec in ("F[0,2](x > 0)", "G[0,2](x > 0)", "x > 0 U[0,2] x > -2"):
    print(f"  {spec:24} at t=0 -> {evaluate(parse(spec), trace, 0.0)}")

print()
print("nested windows shift truth transitions between trace breakpoints;")
print("the evaluator stays exact where naive breakpoint sampling would not:")
tricky_trace = Trace(("x",), (0.0, 1.0, 1.4, 3.0), ((1.0, 0.0, 1.0),))
tricky = parse("G[0,1](G[0.5,0.7](x > 0))")
print("  G[0,1](G[0.5,0.7](x > 0)) ->", evaluate(tricky, tricky_trace, 0.0))
