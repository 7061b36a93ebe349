"""
src/output_layer/run_history.py

Thread-safe history of protocol runs and harness reports with export
"""

import csv
import json
import os
import threading
import time
from collections import Counter, deque
from dataclasses import asdict, dataclass
from datetime import datetime
from typing import Any, Deque, Dict, List, Optional


@dataclass
class RunRecord:
    """One protocol execution"""
    timestamp: float
    datetime_str: str
    command: str
    problem: str
    verdict: str
    solution: Optional[str] = None
    reason: Optional[str] = None
    certified: bool = False
    prover_seconds: Optional[float] = None
    verifier_seconds: Optional[float] = None
    session_id: Optional[str] = None


@dataclass
class AttackRecord:
    """One harness batch"""
    timestamp: float
    problem: str
    policy: str
    trials: int
    canonical: int
    non_canonical: int
    bot: int
    certified: int
    session_id: Optional[str] = None


class RunHistory:
    """Bounded buffers of run and attack records"""

    def __init__(self, max_records: int = 1000):
        self.max_records = max_records
        self.runs: Deque[RunRecord] = deque(maxlen=max_records)
        self.attacks: Deque[AttackRecord] = deque(maxlen=max_records)
        self.session_start = time.time()
        self.current_session_id = self._generate_session_id()
        self.lock = threading.RLock()

    def _generate_session_id(self) -> str:
        return f"session_{int(time.time())}"

    def add_run(self, command: str, run: Dict[str, Any]) -> RunRecord:
        """Record a run from ProtocolRun.to_dict() or an outcome dict."""
        with self.lock:
            now = time.time()
            record = RunRecord(
                timestamp=now,
                datetime_str=datetime.fromtimestamp(now).strftime("%H:%M:%S.%f")[:-3],
                command=command,
                problem=run["problem"],
                verdict=run["verdict"],
                solution=run.get("solution"),
                reason=run.get("reason"),
                certified=bool(run.get("certified", False)),
                prover_seconds=run.get("prover_seconds"),
                verifier_seconds=run.get("verifier_seconds"),
                session_id=self.current_session_id,
            )
            self.runs.append(record)
            return record

    def add_report(self, report: Dict[str, Any]) -> AttackRecord:
        """Record a HarnessReport.to_dict()."""
        with self.lock:
            record = AttackRecord(
                timestamp=time.time(),
                problem=report["problem"],
                policy=report["policy"],
                trials=report["trials"],
                canonical=report["canonical"],
                non_canonical=report["non_canonical"],
                bot=report["bot"],
                certified=report["certified"],
                session_id=self.current_session_id,
            )
            self.attacks.append(record)
            return record

    def get_runs_by_problem(self, problem: str) -> List[RunRecord]:
        with self.lock:
            return [r for r in self.runs if r.problem == problem]

    def get_session_summary(self) -> Dict[str, Any]:
        with self.lock:
            verdicts = Counter(r.verdict for r in self.runs)
            return {
                'session_id': self.current_session_id,
                'session_time': time.time() - self.session_start,
                'total_runs': len(self.runs),
                'verdicts': dict(verdicts),
                'problems': sorted({r.problem for r in self.runs} | {a.problem for a in self.attacks}),
                'attack_batches': len(self.attacks),
                'non_canonical_accepts': sum(a.non_canonical for a in self.attacks),
            }

    def export_session_data(self, format: str = 'json', filepath: Optional[str] = None) -> str:
        with self.lock:
            if not filepath:
                timestamp = datetime.now().strftime("%Y%m%d_%H%M%S")
                os.makedirs('output/run_history', exist_ok=True)
                filepath = f'output/run_history/session_{timestamp}.{format}'

            if format.lower() == 'json':
                return self._export_json(filepath)
            elif format.lower() == 'csv':
                return self._export_csv(filepath)
            else:
                raise ValueError(f"Unsupported format: {format}")

    def _export_json(self, filepath: str) -> str:
        export_data = {
            'session_summary': self.get_session_summary(),
            'runs': [asdict(r) for r in self.runs],
            'attacks': [asdict(a) for a in self.attacks],
        }
        with open(filepath, 'w', encoding='utf-8') as f:
            json.dump(export_data, f, indent=2, ensure_ascii=False)
        return filepath

    def _export_csv(self, filepath: str) -> str:
        """Runs only; attack batches go to the json export or a report table."""
        with open(filepath, 'w', newline='', encoding='utf-8') as f:
            if not self.runs:
                return filepath
            writer = csv.DictWriter(f, fieldnames=asdict(self.runs[0]).keys())
            writer.writeheader()
            for record in self.runs:
                writer.writerow(asdict(record))
        return filepath

    def clear_session(self):
        with self.lock:
            self.runs.clear()
            self.attacks.clear()
            self.session_start = time.time()
            self.current_session_id = self._generate_session_id()


# Global run history instance
run_history = RunHistory()
