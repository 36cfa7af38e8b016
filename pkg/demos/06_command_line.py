"""
Driving the library from the command line
=========================================

The ``twistcode`` command wraps graph generation, spectra, reports and the
homology check.  This script calls it in a subprocess.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path


def twistcode(*args):
    res = subprocess.run([sys.executable, "-m", "twistcode", *args], capture_output=True, text=True)
    return res.returncode, res.stdout, res.stderr


with tempfile.TemporaryDirectory() as tmp:
    gfile = str(Path(tmp) / "k8.txt")
    twistcode("gen-graph", "complete", "8", "-o", gfile)
    print(Path(gfile).read_text().splitlines()[:3], "...")

    code, out, _ = twistcode("spectrum", gfile)
    print("spectrum:", json.loads(out))

    code, out, _ = twistcode("verify", gfile, "--local-code", "hamming74")
    print("verify exit", code, json.loads(out))

    code, out, _ = twistcode("report", gfile, "--local-code", "hamming74", "--format", "text")
    print(out)

    # malformed input gives exit code 2
    bad = Path(tmp) / "bad.txt"
    bad.write_text("p 3 1\ne 0 7\n")
    code, _, err = twistcode("spectrum", str(bad))
    print("exit", code, err.strip())
