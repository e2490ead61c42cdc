"""
Running the identity suites
===========================

Every identity is checked exhaustively over a small integer grid.  A run
stops at the first counterexample and reports both sides.
"""

import json

from coloredhomfly.verify import SUITES, run_all, run_suite

print(len(SUITES), "suites:", ", ".join(sorted(SUITES)))

# %%
r = run_suite("eigen-proposition", max_n=12)
print(json.dumps(r.to_json()))

# %%
# The full web at a reduced range.
reports = run_all(max_n=4, max_p=2)
for rep in reports:
    print(rep.line())
print("all passed:", all(rep.passed for rep in reports))
