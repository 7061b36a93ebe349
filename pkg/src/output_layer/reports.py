"""
src/output_layer/reports.py

Tabular reports for attacks and benchmarks (pandas), with csv/json/xlsx export
"""

import logging
import os
from typing import Any, Dict, Iterable, Mapping

import numpy as np
import pandas as pd

logger = logging.getLogger(__name__)

ATTACK_COLUMNS = ["policy", "trials", "non-canonical-accepts", "canonical", "bot", "certified"]
BENCH_COLUMNS = ["n", "prover_seconds", "verifier_seconds", "repeats"]


def attack_table(reports: Iterable[Mapping[str, Any]]) -> pd.DataFrame:
    """One row per HarnessReport.to_dict()."""
    rows = [
        {
            "policy": r["policy"],
            "trials": r["trials"],
            "non-canonical-accepts": r["non_canonical"],
            "canonical": r["canonical"],
            "bot": r["bot"],
            "certified": r["certified"],
        }
        for r in reports
    ]
    return pd.DataFrame(rows, columns=ATTACK_COLUMNS)


def bench_table(rows: Iterable[Mapping[str, Any]]) -> pd.DataFrame:
    df = pd.DataFrame(list(rows), columns=BENCH_COLUMNS)
    return df.sort_values("n").reset_index(drop=True)


def loglog_slopes(df: pd.DataFrame) -> Dict[str, float]:
    """Least-squares slopes of log(time) against log(n) for prover and verifier."""
    usable = df[(df["n"] > 0) & (df["prover_seconds"] > 0) & (df["verifier_seconds"] > 0)]
    if usable["n"].nunique() < 2:
        return {"prover_slope": float("nan"), "verifier_slope": float("nan")}
    log_n = np.log(usable["n"].to_numpy(dtype=float))
    slopes = {}
    for column, name in (("prover_seconds", "prover_slope"), ("verifier_seconds", "verifier_slope")):
        slope, _ = np.polyfit(log_n, np.log(usable[column].to_numpy(dtype=float)), 1)
        slopes[name] = float(slope)
    return slopes


def format_table(df: pd.DataFrame) -> str:
    return df.to_string(index=False)


def export_table(df: pd.DataFrame, filepath: str, sheet_name: str = "report") -> str:
    """Write by extension: .csv, .json (records) or .xlsx (openpyxl)."""
    directory = os.path.dirname(filepath)
    if directory:
        os.makedirs(directory, exist_ok=True)
    extension = os.path.splitext(filepath)[1].lower()
    if extension == ".csv":
        df.to_csv(filepath, index=False)
    elif extension == ".json":
        df.to_json(filepath, orient="records", indent=2)
    elif extension == ".xlsx":
        with pd.ExcelWriter(filepath, engine="openpyxl") as writer:
            df.to_excel(writer, sheet_name=sheet_name, index=False)
    else:
        raise ValueError(f"Unsupported format: {extension or filepath}")
    logger.info("exported %d rows to %s", len(df), filepath)
    return filepath
