# Copyright 2026 The qpsim developers
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""End-to-end checks of the qpsim command line: output schemas, exit codes,
reproducibility and the verification gate."""

import csv
import io
import json
import math
import os
import subprocess
import sys
import tempfile

BINARY = sys.argv[1]
CHECKS = 0


def run(*args, env_extra=None):
    env = dict(os.environ)
    env.pop("QPSIM_FORMAT", None)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [BINARY, *args], capture_output=True, text=True, env=env, timeout=600
    )


def check(cond, what):
    global CHECKS
    CHECKS += 1
    if not cond:
        raise AssertionError(what)


def test_run_json():
    r = run("run", "--protocol", "mh", "--beta", "0.6", "--seed", "7")
    check(r.returncode == 0, f"run exited {r.returncode}: {r.stderr}")
    trace = json.loads(r.stdout)
    check(trace["protocol"] == "mh", "protocol echoed")
    check(trace["bits"]["alice_to_bob"] == 3, "three classical bits")
    check(trace["channel"]["beta"] == 0.6, "channel recorded")
    check(isinstance(trace["events"], list) and trace["events"], "events present")
    for event in trace["events"]:
        check(set(event) == {"party", "action", "outcome"}, "event schema")
    if trace["success"]:
        check(abs(trace["fidelity"] - 1.0) < 1e-10, "success implies fidelity one")


def test_run_hbb_and_css():
    r = run("run", "--protocol", "hbb", "--seed", "1")
    check(r.returncode == 0, "hbb run")
    trace = json.loads(r.stdout)
    check(trace["success"] is True, "hbb always succeeds")
    check(abs(trace["fidelity"] - 1.0) < 1e-10, "hbb fidelity one")
    check(trace["claimant"] == "charlie", "claimant recorded")
    check(trace["single_party_can_reconstruct"] is False, "knowledge flag")
    check(trace["bits"] == {"alice_to_bob": 2, "alice_to_charlie": 2, "bob_to_charlie": 1},
          "hbb bit counts")

    r = run("run", "--protocol", "qact2", "--beta", "0", "--seed", "1")
    check(r.returncode == 0, "degenerate channel still runs")
    check(json.loads(r.stdout)["success"] is False, "beta=0 never succeeds")


def test_alpha_selects_the_channel():
    r = run("run", "--protocol", "mh", "--alpha", "0.8", "--seed", "4")
    check(r.returncode == 0, "alpha-only channel")
    trace = json.loads(r.stdout)
    check(math.isclose(trace["channel"]["beta"], 0.6, abs_tol=1e-12), "beta derived from alpha")

    r = run("run", "--protocol", "css1_qact1", "--beta", "0.6", "--seed", "4")
    check(r.returncode == 0, "css1_qact1 runs")
    check(json.loads(r.stdout)["claimant"] == "charlie", "secret-share trace fields")


def test_sweep_skips_hbb_off_grid():
    r = run("sweep", "--protocols", "hbb", "--betas", "0.3", "--format", "csv")
    check(r.returncode == 0, "skipping is not an error")
    check(len(r.stdout.strip().splitlines()) == 1, "header only")
    check("skipping hbb" in r.stderr, "note goes to stderr")


def test_run_csv_and_env():
    r = run("run", "--protocol", "qact2", "--beta", "0.6", "--seed", "2", "--format", "csv")
    check(r.returncode == 0, "csv run")
    rows = list(csv.reader(io.StringIO(r.stdout)))
    check(rows[0] == ["protocol", "alpha", "beta", "seed", "success", "fidelity", "bits_total"],
          "csv header")
    check(rows[1][0] == "qact2", "csv row")

    r = run("run", "--protocol", "qact2", "--beta", "0.6", "--seed", "2",
            env_extra={"QPSIM_FORMAT": "csv"})
    check(r.stdout.splitlines()[0].startswith("protocol,"), "env var selects csv")


def test_config_errors():
    cases = [
        ("run", "--protocol", "nope", "--seed", "1"),
        ("run", "--protocol", "mh", "--beta", "0.9"),
        ("run", "--protocol", "mh", "--alpha", "0.9", "--beta", "0.6"),
        ("run", "--protocol", "mh", "--a", "1,0"),  # --a without --b
        ("run", "--protocol", "mh", "--format", "xml"),
        ("run", "--protocol", "hbb", "--beta", "0.6"),
        ("sweep", "--betas", "0.8"),
        ("sweep", "--betas", "0"),
        ("sample", "--protocol", "mh"),  # missing required --shots
        ("sample", "--protocol", "mh", "--shots", "0"),
    ]
    for args in cases:
        r = run(*args)
        check(r.returncode == 2, f"expected exit 2 for {args}, got {r.returncode}")


def test_sweep():
    r = run("sweep", "--protocols", "mh,css1_mh,css2,css3", "--betas", "0.3,0.6",
            "--format", "csv")
    check(r.returncode == 0, f"sweep exited {r.returncode}: {r.stderr}")
    lines = r.stdout.strip().splitlines()
    check(lines[0] == "protocol,beta,p_success,expected_bits,fidelity_given_success",
          "sweep csv header fixed")
    table = {}
    for row in csv.DictReader(io.StringIO(r.stdout)):
        table[(row["protocol"], row["beta"])] = row
    check(math.isclose(float(table[("mh", "0.3")]["p_success"]), 0.18, abs_tol=1e-10),
          "mh at 0.3")
    check(math.isclose(float(table[("mh", "0.6")]["p_success"]), 0.72, abs_tol=1e-10),
          "mh at 0.6")
    for beta in ("0.3", "0.6"):
        values = {float(table[(p, beta)]["p_success"])
                  for p in ("css1_mh", "css2", "css3")}
        check(max(values) - min(values) < 1e-10, "conclusive sharing proposals agree")
        check(float(table[("css2", beta)]["fidelity_given_success"]) == 1.0,
              "fidelity given success is one")

    r = run("sweep", "--protocols", "standard,qact2", "--format", "json")
    check(r.returncode == 0, "json sweep")
    rows = json.loads(r.stdout)
    maximal = [x for x in rows if x["protocol"] == "qact2" and abs(x["beta"] - 1 / math.sqrt(2)) < 1e-12]
    check(maximal and abs(maximal[0]["p_success"] - 1.0) < 1e-10, "maximal channel is certain")


def test_sample():
    args = ("sample", "--protocol", "qact1", "--beta", "0.5", "--shots", "20000",
            "--seed", "3")
    r1 = run(*args)
    check(r1.returncode == 0, "sample runs")
    stats = json.loads(r1.stdout)
    check(stats["verdict"] == "PASS", "sampled frequency within the 4-sigma bound")
    check(abs(stats["exact_probability"] - 0.5) < 1e-10, "exact value 2 beta^2")
    check(stats["shots"] == 20000, "shots echoed")

    r2 = run(*args)
    check(r1.stdout == r2.stdout, "identical seeds give byte-identical output")

    r3 = run("sample", "--protocol", "hbb", "--shots", "1", "--seed", "9")
    stats = json.loads(r3.stdout)
    check(stats["successes"] == 1, "single-shot frequency is 0 or 1")


def test_out_file():
    with tempfile.TemporaryDirectory() as tmp:
        path = os.path.join(tmp, "trace.json")
        r = run("run", "--protocol", "css2", "--beta", "0.6", "--seed", "5", "--out", path)
        check(r.returncode == 0 and r.stdout == "", "output redirected")
        with open(path, encoding="utf-8") as f:
            trace = json.load(f)
        check(trace["protocol"] == "css2", "file contents")


def test_verify():
    r = run("verify")
    check(r.returncode == 0, f"verify must pass on a fresh build: {r.stdout} {r.stderr}")
    lines = r.stdout.strip().splitlines()
    passes = [line for line in lines if line.startswith("[PASS]")]
    check(len(passes) == 11, f"one line per criterion, got {len(passes)}")
    check(any("2*beta^2" in line for line in passes), "success-probability line present")
    check(any("POVM completeness" in line for line in passes), "POVM completeness line present")
    check(lines[-1].startswith("11/11"), "summary line")


def main():
    tests = [
        test_run_json,
        test_run_hbb_and_css,
        test_alpha_selects_the_channel,
        test_sweep_skips_hbb_off_grid,
        test_run_csv_and_env,
        test_config_errors,
        test_sweep,
        test_sample,
        test_out_file,
        test_verify,
    ]
    for test in tests:
        test()
        print(f"ok {test.__name__}")
    print(f"all CLI tests passed ({CHECKS} checks)")


if __name__ == "__main__":
    main()
