"""Job documents and the command line.

Every CLI invocation is a JSON job executed by the library; this demo
runs the bundled job files in-process and prints the equivalent shell
commands.

Run:  python3 demos/06_jobs_and_cli.py
"""

import pathlib

from grady.jobs import execute_job, parse_job, render_result, verify_document

JOBS = pathlib.Path(__file__).parent / "jobs"

# ---------------------------------------------------------------------
# A job names a ring, a grading, some ideals or matrices, and one
# command.  `grady run demos/jobs/star_q.json` does exactly this:
for name in ("star_q.json", "torsion_star.json", "gdecomp.json",
             "fitting.json"):
    text = (JOBS / name).read_text(encoding="utf-8")
    job = parse_job(text)
    doc = execute_job(job)
    fmt = job.options.get("format", "json")
    print(f"$ grady run demos/jobs/{name}" +
          ("" if fmt == "json" else f"   # format: {fmt}"))
    print(render_result(doc, fmt))
    print(f"(status {doc.status}, exit code {doc.exit_code})\n")

# ---------------------------------------------------------------------
# `grady verify` runs the theorem battery plus the truncation oracle on
# every ideal in the document and fails the exit code on any mismatch.
text = (JOBS / "verify_headline.json").read_text(encoding="utf-8")
doc = verify_document(parse_job(text))
print("$ grady verify demos/jobs/verify_headline.json")
print(render_result(doc, "text"))

# ---------------------------------------------------------------------
# Errors come back as structured documents with field paths.
bad = '{"ring": {"field": "F6", "vars": ["x"]}, ' \
      '"command": {"op": "star", "args": [], "options": {}}}'
try:
    parse_job(bad)
except Exception as exc:
    print("\nbad job:", exc)
