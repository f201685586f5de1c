import json
import pathlib
import subprocess
import sys

import jsonschema

tool, schema_path, corpus_dir = sys.argv[1:4]
text = "\n".join(p.read_text() for p in sorted(pathlib.Path(corpus_dir).glob("*.ogs")))
out = subprocess.run([tool, "--lattice-cap", "36", "analyze", "-"], input=text,
                     check=True, capture_output=True, text=True).stdout
jsonschema.validate(json.loads(out), json.load(open(schema_path)))
