# Recomputing the classification table
#
# build_table solves all six classes at a=2, b=3, c=5 and delta=7, checks each
# answer against a second, independent evaluation, and compares with the
# published dimensions. Disagreements come back as errata with evidence.

from dialgebra.report import build_table, render

report = build_table()
print(f"{len(report.rows)} rows, {len(report.errata)} disagree with the published table")
for row in report.errata:
    ev = row.evidence()
    print(f"  {row.spec.id} {row.family.label:10} published {row.expected_dim} computed {row.computed_dim}"
          f"  (oracle rank {ev['oracle_rank']})")

# The other sign reading of the rho = 0 families shrinks the list.
alt = build_table(reading="def")
print("with the literal sign reading:", len(alt.errata), "errata")

# Full markdown report for one class.
print(render(build_table(["L4"]), "md"))
