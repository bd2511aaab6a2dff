"""Decide a handful of formulas and check each model with the evaluator."""
from unaryfol import decide_sat, parse
from unaryfol.oracle import evaluate

formulas = [
    "forall x. exists y. (x < y & X(y))",
    "(forall x. X(x)) & (exists y. !X(y))",
    "forall x. (X(x) <-> exists y. (y = x + 1 & !X(y)))",
    "exists x. forall y. (x = y | x < y)",
    "forall x. exists y. y < x",
    "forall x. (X(x) <-> !Y(x))",
    "exists x. (X(x) & forall y. (!(x < y) | X(y)))",
]

for text in formulas:
    f = parse(text)
    res = decide_sat(f)
    if not res:
        print(f"UNSAT  {text}")
        continue
    # the decoded model must satisfy the formula
    ok = evaluate(f, res.witness)
    shown = ", ".join(f"{k} = {v}" for k, v in sorted(res.witness.so.items()))
    print(f"SAT    {text}")
    print(f"       {shown or '(closed formula)'}  check: {ok}")
