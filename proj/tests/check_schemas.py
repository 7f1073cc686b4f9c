# Copyright (C) 2026 The tricover authors.
# This program is Licensed under the Apache License, Version 2.0
# (the "License"); you may not use this file except in compliance
# with the License. You may obtain a copy of the License at
#   http://www.apache.org/licenses/LICENSE-2.0
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License. See accompanying LICENSE file.
"""Run each CLI command and validate its JSON against schemas/tricover.schema.json."""
import json
import subprocess
import sys

import jsonschema

CASES = [
    ("pencil_build", ["pencil", "build", "--alpha", "1"], 0),
    ("pencil_build", ["pencil", "build", "--alpha", "symbolic"], 0),
    ("pencil_flexes", ["pencil", "flexes", "--alpha", "1"], 0),
    ("pencil_flexes", ["pencil", "flexes", "--alpha", "0"], 0),
    ("pencil_section", ["pencil", "section", "--alpha", "1", "--samples", "3"], 0),
    ("pencil_torsion_poly", ["pencil", "torsion-poly", "--n", "4"], 0),
    ("pencil_certify", ["pencil", "certify", "--n", "2", "--bilu"], 0),
    ("pencil_witness", ["pencil", "certify", "--alpha", "1", "--branch", "0"], 0),
    ("pencil_scan", ["pencil", "scan", "--n-max", "4", "--samples", "600"], 0),
    ("ec_torsion", ["ec", "torsion", "--a", "0", "--b", "1", "--x", "2", "--y", "3"], 0),
    ("ec_torsion", ["ec", "torsion", "--a", "0", "--b", "2", "--x", "-1", "--y", "1"], 0),
    ("ec_betti", ["ec", "betti", "--a", "0", "--b", "1", "--x", "0", "--y", "1"], 0),
    ("genus2_quartic_model", ["genus2", "quartic-model", "--alpha", "1", "--u0", "0", "--v0", "1"], 0),
    ("genus2_family_checks", ["genus2", "family-checks"], 0),
    ("cover_build", ["cover", "build", "--alpha", "1"], 0),
    ("cover_degree_bounds", ["cover", "degree-bounds", "--n", "2", "--genus-y", "2"], 0),
    ("trinomial_classify", ["trinomial", "classify", "--n", "2", "--r", "1", "--s", "1", "--m", "3"], 0),
    ("trinomial_classify", ["trinomial", "classify", "--n", "6", "--r", "2", "--s", "2", "--m", "6", "--a", "1", "--b", "2"], 0),
    ("error", ["pencil", "build", "--alpha", "-1"], 2),
    ("error", ["trinomial", "classify", "--n", "2", "--r", "2", "--s", "0", "--m", "2"], 2),
]


def main() -> int:
    cli, schema_path = sys.argv[1], sys.argv[2]
    with open(schema_path, encoding="utf-8") as fh:
        root = json.load(fh)
    validator_cls = jsonschema.validators.validator_for(root)
    validator_cls.check_schema(root)
    failures = 0
    for name, args, want_exit in CASES:
        proc = subprocess.run([cli, *args], capture_output=True, text=True, check=False)
        label = " ".join(args)
        if proc.returncode != want_exit:
            print(f"FAIL {label}: exit {proc.returncode}, expected {want_exit}\n{proc.stderr}")
            failures += 1
            continue
        try:
            doc = json.loads(proc.stdout)
        except json.JSONDecodeError as exc:
            print(f"FAIL {label}: output is not JSON ({exc})")
            failures += 1
            continue
        schema = dict(root)
        schema["$ref"] = f"#/$defs/{name}"
        errors = sorted(validator_cls(schema).iter_errors(doc), key=lambda e: list(e.path))
        if errors:
            failures += 1
            print(f"FAIL {label}: {len(errors)} schema error(s)")
            for err in errors[:5]:
                print(f"  at {list(err.path)}: {err.message[:200]}")
        else:
            print(f"ok   {label} [{name}]")
    print(f"{len(CASES) - failures}/{len(CASES)} outputs valid")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
