"""
Running the certificate
=======================

"""

from nilcert import CurveParameters, run_certificate
from nilcert.certificate import reduced_control_matrix, sabotaged_matrix

# the full pipeline for a few values of b0
for b0 in (1, 2, 3):
    report = run_certificate(CurveParameters(b0, "fp:32003"))
    print(report.format_text())
    print()

# the controls must fail
params = CurveParameters(1, "q")
for name, M in (("sabotaged", sabotaged_matrix(params)), ("reduced", reduced_control_matrix(params))):
    report = run_certificate(params, matrix=M)
    failed = [s.id for s in report.steps if not s.passed]
    print(f"{name}: failing steps {failed}")
