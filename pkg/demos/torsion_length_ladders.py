"""Walk the torsion-length ladders of the two main families.

For each presentation we repeatedly kill the generators with visible
torsion and count how many steps it takes to reach a torsion-free
presentation.  The binary-tree family needs exactly n steps; the
triangle-like family P_{j,k,l} always needs two.
"""

from torlen import (
    build_chain,
    build_pjkl,
    build_pn,
    torsion_length,
    torsion_quotient_step,
)


def show_ladder(p, label):
    print(f"=== {label} ===")
    print(f"  start: {len(p.generators)} generators, {len(p.relators)} relators")
    step_no = 0
    while True:
        step = torsion_quotient_step(p)
        if not step.killed:
            break
        step_no += 1
        killed = ", ".join(sorted(step.killed))
        print(f"  step {step_no}: killed {{{killed}}} "
              f"-> {len(step.presentation.generators)} generators")
        p = step.presentation
    print(f"  ladder length: {step_no}")
    print()


for n in range(5):
    show_ladder(build_pn(n), f"tree family, n = {n}")

for j, k, l in ((2, 2, 2), (2, 3, 4), (5, 5, 5)):
    show_ladder(build_pjkl(j, k, l), f"P_{{{j},{k},{l}}}")

# Free products stack side by side: the chain of tree presentations has
# the torsion length of its longest factor, and one quotient step of the
# m-chain gives the (m-1)-chain back.
for m in range(1, 5):
    chain = build_chain(m)
    report = torsion_length(chain)
    print(f"chain of P_0 * ... * P_{m}: "
          f"{len(chain.generators)} generators, torsion length {report.value} "
          f"(exact={report.exact})")
