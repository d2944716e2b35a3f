"""
The commvar command line, driven in-process
===========================================

Every library capability is exposed as a subcommand reading JSON module
documents and writing JSON reports.  run_command is the same entry point
the console script uses, so this tour needs no subprocesses.
"""
import json

from commvar.cli import run_command

# generate a reproducible sample document
code, doc = run_command(["sample", "--kind", "split", "--field", "Fp:5",
                         "--n", "2", "--d", "2", "--seed", "7"])
assert code == 0
print(doc)

# feed it back through validate and cycle via a temp file
import tempfile

with tempfile.NamedTemporaryFile("w", suffix=".json", delete=False) as fh:
    fh.write(doc)
    path = fh.name

code, out = run_command(["validate", path])
assert code == 0 and json.loads(out)["valid"] is True
print("validate:", out.strip().splitlines()[1].strip())

code, out = run_command(["cycle", path])
report = json.loads(out)
print("cycle points:", [e["point"] for e in report["cycle"]])
print("stratum:", report["stratum"])

# counts arrive as decimal strings so they never overflow a reader
code, out = run_command(["census", "--n", "2", "--d", "2", "--q", "2"])
report = json.loads(out)
print("census raw_count:", report["raw_count"],
      "groupoid:", report["groupoid_count"])

# errors are structured too: exit code 1 and a stable machine code
code, out = run_command(["census", "--n", "1", "--d", "1", "--q", "4"])
assert code == 1
print("q = 4 rejected:", json.loads(out)["error"])

# --pretty renders the same report for humans
code, out = run_command(["--pretty", "stratum", path])
print(out)
