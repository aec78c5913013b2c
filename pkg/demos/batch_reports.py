"""
Driving the batch interface from a script
=========================================

Every capability is reachable without writing Python: the ``gelfand``
command reads a JSON document, prints a JSON report, and signals
certification failure through its exit code.  This script writes a
document, runs two commands on it, and shows a failing input.
"""

import json
import subprocess
import sys
import tempfile
from pathlib import Path

CLI = [sys.executable, "-m", "gelfand.cli"]

# The dual numbers again, this time as a wire document.  Complex entries
# are [re, im] pairs; plain numbers are accepted on input.
doc = {
    "dim": 2,
    "unit": [[1, 0], [0, 0]],
    "structure_constants": [
        [[[1, 0], [0, 0]], [[0, 0], [1, 0]]],
        [[[0, 0], [1, 0]], [[0, 0], [0, 0]]],
    ],
}

with tempfile.TemporaryDirectory() as tmp:
    path = Path(tmp) / "dual.json"
    path.write_text(json.dumps(doc))

    for command in ["validate", "characters"]:
        proc = subprocess.run(CLI + [command, "--input", str(path)],
                              capture_output=True, text=True)
        report = json.loads(proc.stdout)
        keep = {k: report[k] for k in sorted(report) if k != "characters"}
        print(f"$ gelfand {command} --input dual.json  (exit {proc.returncode})")
        print(json.dumps(keep, indent=2))

    # A non-commutative tensor is rejected with a machine-readable error
    # payload and exit code 2, so pipelines can branch on failure.
    bad = dict(doc)
    bad["structure_constants"] = [
        [[[1, 0], [0, 0]], [[0, 0], [1, 0]]],
        [[[0, 0], [0, 0]], [[0, 0], [0, 0]]],
    ]
    path.write_text(json.dumps(bad))
    proc = subprocess.run(CLI + ["validate", "--input", str(path)],
                          capture_output=True, text=True)
    report = json.loads(proc.stdout)
    print(f"$ gelfand validate --input bad.json  (exit {proc.returncode})")
    print("error type:", report["error"]["type"])
