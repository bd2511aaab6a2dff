"""Walk through one universal quantification step by step.

We start from the automaton for ``exists x2. (x1 < x2 & X1(x2))`` and
apply ``forall x1`` to it.  The result should accept exactly the sets
X1 that have infinitely many members.
"""
from unaryfol import LassoWord, lasso_membership
from unaryfol.formats import loads_aut
from unaryfol.universal import universal_quantify_with_artifacts

# the automaton for the inner formula; each letter is (x1 bit, X1 bit).
# state 0 waits for x1, state 1 waits for a later member of X1, state 2 accepts
inner = loads_aut("""
sig fo:x1 so:X1
states 3
initial 0
accepting 2
trans 0 0 00
trans 0 0 01
trans 0 1 10
trans 0 1 11
trans 1 1 00
trans 1 1 01
trans 1 2 01
trans 2 2 00
trans 2 2 01
""")

art = universal_quantify_with_artifacts(inner, "x1")

# the subset construction tracks every state that some choice of x1 could be in
print("subset states:")
for q in sorted(art.subset.states):
    print(" ", q, sorted(art.subset.info[q]))

# a state's U language: finite words that reach an accepting loop from it
for q, lang in sorted(art.u_languages.items()):
    print(f"U language of state {q}: {lang.num_states} states")

# widgets only exist for subset states holding an accepting state
for q, lang in sorted(art.widget_languages.items()):
    print(f"widget for subset state {q}: {lang.num_states} states")

result = art.result
print("final automaton:", result.num_states, "states,", result.num_transitions, "transitions")

# a few lassos: X1 = {0, 2, 4, ...}, X1 = {0}, X1 = {} and X1 = {1, 4, 7, ...}
for prefix, period in [("", "10"), ("1", "0"), ("", "0"), ("0", "100")]:
    w = LassoWord.of(prefix, period)
    print(f"{prefix}({period})^w accepted: {lasso_membership(result, w)}")
