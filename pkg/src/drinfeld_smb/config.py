"""Job configuration: INI parsing and validation for the CLI.

One job per file.  Layout:

    [field]
    p = 2
    k = 1
    ; modulus = 1, 1, 1      (ascending coefficients; optional, k > 1)

    [module]
    coeffs = t, t, 1          (phi_t at tau^0, tau^1, ...; tau^0 must be t)

    [job]
    place = infinite          (or a monic irreducible, e.g. t^2+t+1)
    u = t
    n = 2
    E = 1                     (optional; psi command)
    budget = 65536            (optional; overrides the environment default)
"""

from __future__ import annotations

import configparser
import os
from dataclasses import dataclass

from . import poly as P
from .engine import DEFAULT_BUDGET
from .fq import FqField
from .ratfunc import Place
from .skew import DrinfeldModule

BUDGET_ENV_VAR = "DRINFELD_SMB_BUDGET"


@dataclass(frozen=True)
class JobConfig:
    field: FqField
    module: DrinfeldModule
    place: Place | None
    u: tuple[int, ...] | None
    n: int
    E: int
    budget: int


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV_VAR)
    if raw is None:
        return DEFAULT_BUDGET
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{BUDGET_ENV_VAR} must be an integer, got {raw!r}")
    if value < 1:
        raise ValueError(f"{BUDGET_ENV_VAR} must be positive")
    return value


def parse_config(text: str) -> JobConfig:
    cp = configparser.ConfigParser()
    try:
        cp.read_string(text)
    except configparser.Error as exc:
        raise ValueError(f"config parse error: {exc}") from None
    for section in ("field", "module"):
        if section not in cp:
            raise ValueError(f"config is missing the [{section}] section")

    fld = cp["field"]
    try:
        p = int(fld.get("p", ""))
    except ValueError:
        raise ValueError("field.p must be an integer") from None
    k = int(fld.get("k", "1"))
    modulus = ()
    if "modulus" in fld:
        modulus = tuple(int(c) for c in fld["modulus"].split(","))
    F = FqField(p, k, modulus)

    mod = cp["module"]
    if "coeffs" not in mod:
        raise ValueError("module.coeffs is required")
    coeffs = [s.strip() for s in mod["coeffs"].split(",")]
    module = DrinfeldModule.make(F, coeffs)
    if "rank" in mod and int(mod["rank"]) != module.rank:
        raise ValueError(
            f"module.rank = {mod['rank']} but coeffs have rank {module.rank}"
        )

    job = cp["job"] if "job" in cp else {}
    place = None
    if "place" in job:
        spec = job["place"].strip()
        if spec == "infinite":
            place = Place.infinite(F)
        else:
            u_w = P.parse_poly(F, spec)
            if not P.is_monic(u_w) or not P.is_irreducible(F, u_w):
                raise ValueError("job.place must be 'infinite' or a monic irreducible")
            place = Place.finite(F, u_w)
    u = None
    if "u" in job:
        u = P.parse_poly(F, job["u"])
        if not P.is_monic(u) or not P.is_irreducible(F, u):
            raise ValueError("job.u must be a monic irreducible")
    n = int(job.get("n", "1"))
    if n < 1:
        raise ValueError("job.n must be >= 1")
    E = int(job.get("E", "1"))
    if E < 1:
        raise ValueError("job.E must be >= 1")
    budget = int(job["budget"]) if "budget" in job else default_budget()
    if budget < 1:
        raise ValueError("job.budget must be positive")
    return JobConfig(F, module, place, u, n, E, budget)


def load_config(path: str) -> JobConfig:
    with open(path, encoding="utf-8") as fh:
        return parse_config(fh.read())
