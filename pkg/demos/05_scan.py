"""
Scanning a corpus
=================

The scanner classifies each graph, decomposes it, runs the certifiers and
emits CSV or JSON. The same run is available from the shell:

    symgraph scan --family cycle:9 --family circulant:6:2,3 --certify cor13,thm12 --out report.csv
"""

from symgraph.generators import FamilySpec
from symgraph.report import ScanConfig, exit_code, run_scan, to_csv

config = ScanConfig(
    inputs=[FamilySpec.parse(s) for s in ("cycle:9", "complete:5", "circulant:6:2,3")],
    certifiers=("cor13", "thm12", "lemma21"),
    seed=42,
)
report = run_scan(config)
print(to_csv(report))
print(report.summary)
print("exit code:", exit_code(report))
