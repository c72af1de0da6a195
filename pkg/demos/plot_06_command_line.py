"""
Driving the command-line tool from Python
=========================================

Everything the ``flagrep`` command prints can also be produced in-process
through ``run_cli``.
"""

import io
import json

from flagrep.cli import run_cli

###############################################################################
# A table for a tensor product.
run_cli(["decompose-tensor", "--type", "B", "--rank", "2", "--lambda", "1,1", "--mu", "1,0"])

###############################################################################
# JSON output is easy to post-process.
buf = io.StringIO()
run_cli(["verify-kostant", "--type", "G", "--rank", "2", "--format", "json"], stdout=buf)
doc = json.loads(buf.getvalue())
print(doc["result"]["conjecture_holds"], doc["result"]["total_multiplicity"])

###############################################################################
# Exceptional types beyond F4 are refused without --force (exit status 3).
err = io.StringIO()
print(run_cli(["verify-kostant", "--type", "E", "--rank", "6"], stderr=err), err.getvalue().strip())
