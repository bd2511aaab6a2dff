"""Sizes along a family where universal quantification must grow.

``forall x1. exists x2. (x2 = x1 + n & (X1(x1) <-> X1(x2)))`` says that X1
is periodic with period n.  Any automaton for it needs at least 2^n states,
since it has to remember the last n bits.
"""
import time

from unaryfol import decide_sat
from unaryfol.compiler import CompileTrace

print(f"{'n':>2} {'states':>7} {'2^n':>5} {'seconds':>8}")
for n in range(1, 6):
    text = f"forall x1. exists x2. (x2 = x1 + {n} & (X1(x1) <-> X1(x2)))"
    trace = CompileTrace()
    t0 = time.perf_counter()
    res = decide_sat(text, trace=trace)
    elapsed = time.perf_counter() - t0
    print(f"{n:>2} {res.automaton.num_states:>7} {2 ** n:>5} {elapsed:>8.2f}")

# the witness is a periodic set; its period divides n
print("witness for n = 5:", res.witness.so["X1"])

# per-node sizes of the last compilation, leaves first
for what, states, transitions in trace.steps:
    print(f"  {what:<12} {states:>5} states {transitions:>6} transitions")
