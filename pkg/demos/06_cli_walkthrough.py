"""The hspec command line, end to end.

Generates a graph file, computes quantities, runs the bound checker and
the dense-tensor comparison, and shows the exit codes: 0 ok, 1 bad input,
2 no convergence, 3 a checked bound failed.
"""

import subprocess
import sys
import tempfile
from pathlib import Path


def hspec(*args):
    proc = subprocess.run([sys.executable, "-m", "hspec", *args], capture_output=True, text=True)
    print(f"$ hspec {' '.join(args)}   -> exit {proc.returncode}")
    out = (proc.stdout or proc.stderr).rstrip()
    if out:
        print("   " + out.replace("\n", "\n   "))
    return proc.returncode


with tempfile.TemporaryDirectory() as tmp:
    g = str(Path(tmp) / "k4.hg")
    hspec("gen", "complete", "--n", "4", "--r", "2,3", "--out", g)
    print(Path(g).read_text())
    hspec("compute", g, "--what", "rho,q,omega,U")
    hspec("oracle", g)

    r = str(Path(tmp) / "r7.hg")
    hspec("gen", "random", "--n", "8", "--r", "2,3", "--p", "0.3", "--seed", "7", "--out", r)
    hspec("check-bounds", r)

    # a graph where the eigenvector-sum bound fails
    bad = Path(tmp) / "six.hg"
    bad.write_text("n 6\ne 0 1 4\ne 0 1 5\ne 0 2 4\ne 0 4 5\ne 1 2 3\ne 1 3 4\ne 1 3 5\ne 2 3 5\n")
    hspec("check-bounds", str(bad))

    # error paths
    hspec("compute", g, "--what", "rho", "--tol", "-1")
    hspec("gen", "complete", "--n", "2", "--r", "3")
    slow = Path(tmp) / "slow.hg"
    slow.write_text("n 5\ne 0 1\ne 1 2\ne 2 3 4\ne 0 3\n")
    hspec("compute", str(slow), "--what", "rho", "--max-iter", "3", "--format", "json")
