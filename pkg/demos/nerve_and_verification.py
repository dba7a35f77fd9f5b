"""
Star covers, nerves, and the bundled verification suites
========================================================

Covering the subdivision by closed vertex stars gives a cover whose
nerve is the original complex, simplex for simplex.  The same checks,
plus all the others, are packaged as named suites behind `run_suite`
(and `homcx verify` on the command line).
"""

from homcx import (
    core_fixture,
    nerve_of_cover,
    render_label,
    run_suite,
    star_cover,
    suite_to_text,
    verify_nerve_theorem_hypotheses,
)

X = core_fixture("path2")
cov = star_cover(X)
print("space: path on 1, 2, 3 | cover indexed by", cov.index)
for i in cov.index:
    piece = cov.piece(i)
    labels = ", ".join(render_label(v) for v in piece.vertices)
    print(f"  star of {i}: full simplex on {labels}")
print()

N = nerve_of_cover(cov)
print("nerve facets:", sorted(sorted(f) for f in N.facets))
print("equals the space:", set(N.simplex_set()) == set(X.simplex_set()))

rep = verify_nerve_theorem_hypotheses(cov)
print("nonempty intersections checked:", rep.intersections_checked,
      "| all full simplices:", rep.passed)
print()

# The named suites bundle these checks over the whole fixture list.
for theorem in ("prop-3.1", "thm-1.2"):
    print(suite_to_text(run_suite(theorem)))
    print()
