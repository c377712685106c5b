"""Pixel-level confusion counts of predicted masks against ground truth.

Ratios are micro-averaged: confusions are summed over all frames before
dividing. An undefined ratio is None, never 0 or 1.
"""

import logging
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Union

import numpy as np
import pandas as pd

from motion_surveillance.frame_model import MotionMask, check_same_size


# Configure logging
logger = logging.getLogger(__name__)
logger.setLevel(logging.INFO)


@dataclass(frozen=True)
class Confusion:
    tp: int = 0
    fp: int = 0
    tn: int = 0
    fn: int = 0

    def __post_init__(self):
        if min(self.tp, self.fp, self.tn, self.fn) < 0:
            raise ValueError("Confusion counts must be non-negative: {}".format(self))

    @property
    def total(self) -> int:
        return self.tp + self.fp + self.tn + self.fn

    def __add__(self, other: "Confusion") -> "Confusion":
        return Confusion(self.tp + other.tp, self.fp + other.fp, self.tn + other.tn, self.fn + other.fn)

    def to_dict(self) -> Dict[str, int]:
        return {"tp": self.tp, "fp": self.fp, "tn": self.tn, "fn": self.fn}


def confusion(pred: MotionMask, truth: MotionMask) -> Confusion:
    check_same_size(pred, truth, "prediction and ground truth")
    p = pred.data.astype(bool)
    t = truth.data.astype(bool)
    tp = int(np.count_nonzero(p & t))
    fp = int(np.count_nonzero(p & ~t))
    fn = int(np.count_nonzero(~p & t))
    return Confusion(tp, fp, p.size - tp - fp - fn, fn)


def precision(c: Confusion) -> Union[float, None]:
    """tp / (tp + fp), None when nothing was predicted."""
    if c.tp + c.fp == 0:
        return None
    return c.tp / (c.tp + c.fp)


def accuracy(c: Confusion) -> Union[float, None]:
    """(tp + tn) / total, None when no pixel was evaluated."""
    if c.total == 0:
        return None
    return (c.tp + c.tn) / c.total


def recall(c: Confusion) -> Union[float, None]:
    if c.tp + c.fn == 0:
        return None
    return c.tp / (c.tp + c.fn)


@dataclass(frozen=True)
class EvalReport:
    per_frame: List[Confusion] = field(default_factory=list)

    @property
    def aggregate(self) -> Confusion:
        return sum(self.per_frame, Confusion())

    @property
    def frames_evaluated(self) -> int:
        return len(self.per_frame)

    @property
    def precision(self) -> Union[float, None]:
        return precision(self.aggregate)

    @property
    def accuracy(self) -> Union[float, None]:
        return accuracy(self.aggregate)

    @property
    def recall(self) -> Union[float, None]:
        return recall(self.aggregate)

    def to_dict(self) -> Dict[str, Any]:
        return {
            "averaging": "micro",
            "frames_evaluated": self.frames_evaluated,
            "aggregate": self.aggregate.to_dict(),
            "precision": self.precision,
            "accuracy": self.accuracy,
        }

    def to_frame(self) -> pd.DataFrame:
        """Per-frame confusions with per-frame ratios, one row per frame."""
        df = pd.DataFrame([c.to_dict() for c in self.per_frame], columns=["tp", "fp", "tn", "fn"])
        df.index.name = "frame"
        df["precision"] = [precision(c) for c in self.per_frame]
        df["accuracy"] = [accuracy(c) for c in self.per_frame]
        return df


def evaluate_sequence(preds: Iterable[MotionMask], truths: Iterable[MotionMask]) -> EvalReport:
    """Scores predicted masks frame by frame against ground truth.

    Args:
        preds (Iterable[MotionMask]): Detector output, in frame order.
        truths (Iterable[MotionMask]): Ground truth, in the same order.

    Returns:
        EvalReport: Per-frame and aggregate confusions.
    """
    preds = list(preds)
    truths = list(truths)
    if len(preds) != len(truths):
        raise ValueError("Sequence length mismatch: {} predictions vs {} ground-truth masks".format(
            len(preds), len(truths)))
    report = EvalReport([confusion(p, t) for p, t in zip(preds, truths)])
    logger.debug("Evaluated {} frames: {}".format(report.frames_evaluated, report.aggregate))
    return report
