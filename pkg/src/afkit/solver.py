"""Bridge to an external ASP solver (gringo/clasp style command line).

The solver is configured, never bundled: either construct a SolverConfig
directly or set environment variables —

  AFKIT_SOLVER_CMD     command line; a literal {input} token is replaced by
                       the path of a temp file holding the program, otherwise
                       the program is piped to stdin
  AFKIT_SOLVER_METASP  "1" if the command interprets the optimize(1,1,incl) /
                       #minimize[pred] subset-minimization convention
  AFKIT_SOLVER_CONFIG  path of a JSON file with keys "command" and
                       "metasp_capable" (the variables above win)

Output parsing follows the clasp convention: each model is the line after an
"Answer: N" line, and in/1 atoms name the extension members.  Exit codes 0,
10, 20 and 30 all count as clean solver exits (clasp encodes SAT/UNSAT/
interrupted-with-models in them); anything else is a run failure.
"""
from __future__ import annotations

import json
import os
import re
import shlex
import subprocess
import tempfile
from dataclasses import dataclass

from .core import parse_apx
from .encodings import AspJob
from .semantics import ExtensionSet

_OK_EXIT_CODES = frozenset({0, 10, 20, 30})
_IN_ATOM_RE = re.compile(r"\bin\(([a-z][a-z0-9_]*)\)")

ENV_COMMAND = "AFKIT_SOLVER_CMD"
ENV_METASP = "AFKIT_SOLVER_METASP"
ENV_CONFIG = "AFKIT_SOLVER_CONFIG"


class SolverError(Exception):
    """Base class for everything that can go wrong with the bridge."""


class SolverConfigError(SolverError):
    """No or unusable solver configuration."""


class SolverRunError(SolverError):
    """The solver process failed (bad exit code, missing binary, timeout)."""


class SolverTimeoutError(SolverRunError):
    """The solver process exceeded the requested time limit."""


class SolverOutputError(SolverError):
    """The solver ran but its output was not in the expected shape."""


@dataclass(frozen=True)
class SolverConfig:
    command: str
    metasp_capable: bool = False

    @staticmethod
    def from_env(environ: dict[str, str] | None = None) -> "SolverConfig | None":
        """Build a config from the environment; None when nothing is set."""
        env = os.environ if environ is None else environ
        command = env.get(ENV_COMMAND)
        metasp = env.get(ENV_METASP)
        config_path = env.get(ENV_CONFIG)
        file_command = None
        file_metasp = None
        if config_path:
            try:
                with open(config_path, encoding="utf-8") as handle:
                    data = json.load(handle)
            except (OSError, json.JSONDecodeError) as exc:
                raise SolverConfigError(f"cannot read solver config {config_path}: {exc}")
            if not isinstance(data, dict):
                raise SolverConfigError(f"solver config {config_path} must be a JSON object")
            file_command = data.get("command")
            file_metasp = data.get("metasp_capable")
        command = command or file_command
        if not command:
            return None
        if metasp is not None:
            capable = metasp not in ("", "0", "false", "no")
        elif file_metasp is not None:
            capable = bool(file_metasp)
        else:
            capable = False
        return SolverConfig(command=str(command), metasp_capable=capable)


def parse_answer_sets(output: str) -> list[frozenset[str]]:
    """Extract the in/1 atoms of every answer set from solver stdout.

    Returns one frozenset of argument names per reported model; [] when the
    solver reported UNSATISFIABLE.  Raises SolverOutputError when the text
    carries neither models nor a recognizable status line.
    """
    lines = output.splitlines()
    models: list[frozenset[str]] = []
    saw_status = False
    for i, line in enumerate(lines):
        stripped = line.strip()
        if stripped.startswith("Answer:"):
            if i + 1 >= len(lines):
                raise SolverOutputError("answer marker without a model line")
            model_line = lines[i + 1]
            models.append(frozenset(_IN_ATOM_RE.findall(model_line)))
        elif stripped in ("SATISFIABLE", "UNSATISFIABLE", "OPTIMUM FOUND", "UNKNOWN"):
            saw_status = True
    if models:
        return models
    if saw_status:
        return []
    raise SolverOutputError("no answer sets and no status line in solver output")


def run_program(
    program: str,
    config: SolverConfig,
    timeout: float | None = None,
) -> list[frozenset[str]]:
    """Run one ASP program through the configured command and parse models."""
    try:
        tokens = shlex.split(config.command)
    except ValueError as exc:
        raise SolverConfigError(f"cannot parse solver command: {exc}")
    if not tokens:
        raise SolverConfigError("solver command is empty")

    uses_file = any("{input}" in token for token in tokens)
    tmp_path = None
    try:
        if uses_file:
            fd, tmp_path = tempfile.mkstemp(suffix=".lp", text=True)
            with os.fdopen(fd, "w", encoding="utf-8") as handle:
                handle.write(program)
            argv = [token.replace("{input}", tmp_path) for token in tokens]
            stdin_text = None
        else:
            argv = tokens
            stdin_text = program
        try:
            proc = subprocess.run(
                argv,
                input=stdin_text,
                capture_output=True,
                text=True,
                timeout=timeout,
            )
        except FileNotFoundError as exc:
            raise SolverConfigError(f"solver binary not found: {exc}")
        except subprocess.TimeoutExpired:
            raise SolverTimeoutError(f"solver timed out after {timeout} s")
    finally:
        if tmp_path is not None:
            try:
                os.unlink(tmp_path)
            except OSError:
                pass

    if proc.returncode not in _OK_EXIT_CODES:
        detail = proc.stderr.strip() or proc.stdout.strip()
        raise SolverRunError(
            f"solver exited with code {proc.returncode}: {detail[:500]}"
        )
    return parse_answer_sets(proc.stdout)


def run_job(
    job: AspJob,
    config: SolverConfig | None = None,
    timeout: float | None = None,
) -> ExtensionSet:
    """Solve one emitted job and return its extensions in canonical order."""
    if config is None:
        config = SolverConfig.from_env()
    if config is None:
        raise SolverConfigError(
            f"no solver configured; set {ENV_COMMAND} or {ENV_CONFIG}"
        )
    if job.is_optimization and not config.metasp_capable:
        raise SolverConfigError(
            f"encoding {job.encoding.value} needs a metasp-capable solver "
            f"(set {ENV_METASP}=1 if the configured command understands "
            "optimize(1,1,incl))"
        )
    af = parse_apx(job.instance)
    models = run_program(job.full_text(), config, timeout=timeout)
    seen = set()
    masks = []
    for model in models:
        try:
            mask = af.argset(model).mask
        except ValueError as exc:
            raise SolverOutputError(f"solver answered with {exc}")
        if mask not in seen:
            seen.add(mask)
            masks.append(mask)
    return ExtensionSet(af, masks)
